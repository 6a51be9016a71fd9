"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line; all comparisons are exact."""

from itertools import product

from msset.constructions import (
    LoopSpace,
    StandardSpec,
    join_with_cells,
    loop,
    pointed_point,
    sphere,
    standard,
    suspend,
    verify_adjunction,
)
from msset.core import ComplexMap, PointedComplex, Simplex, find_isomorphism, hom_enumerate, validate
from msset.generators import cocycle_nerve, cyclic_group, idempotent_monoid, nerve_of_monoid, symmetric_group
from msset.homotopy import monoid_iso_search, tau, transport_witnesses, verify_loop_theorem
from msset.lifting import AnodyneInstance, LiftingProblem, anodyne, check_complicial, complicial_instances, find_lift, lift_diagnostics
from msset.operators import compose, degeneracy_word, ez_decompose, monotone_maps, surjections, word_operator

from conftest import ACCEPTANCE, sample_complexes
from oracles import expected_simplices, observed_simplices

FOUR = {"Z2": cyclic_group(2), "Z3": cyclic_group(3), "S3": symmetric_group(3), "M2": idempotent_monoid()}


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_1_standard_objects():
    mismatches = []
    compared = 0
    for n in range(5):
        for k in range(n + 1):
            for kind in ("complicial", "horn", "complicial-prime", "complicial-dprime"):
                if kind == "horn" and n == 0:
                    continue
                X = standard(StandardSpec(kind, n=n, k=k))
                for e in range(n + 2):
                    compared += 1
                    if observed_simplices(X, e) != expected_simplices(kind, k, n, e):
                        mismatches.append((kind, k, n, e))
    eq = standard("delta3eq")
    eq_marks = {eq.name(c) for c in eq.marked}
    eq_ok = eq_marks == {"02", "13", "012", "013", "023", "123", "0123"}
    for e in range(5):
        compared += 1
        if observed_simplices(eq, e) != expected_simplices("delta3eq", None, 3, e):
            mismatches.append(("delta3eq", e))
    record(1, not mismatches and eq_ok, f"{compared} marked-simplex sets compared, mismatches {mismatches}")


def test_criterion_2_adjunction():
    Xs = {
        "pt": pointed_point(),
        "S0": sphere(0),
        "S1": sphere(1),
        "D1": PointedComplex(standard("delta:1"), (0, 0)),
    }
    Zs = {
        "N(Z2,3)": nerve_of_monoid(cyclic_group(2), 3),
        "N(M2,3)": nerve_of_monoid(idempotent_monoid(), 3),
        "C(Z2,4)": cocycle_nerve(cyclic_group(2), 4),
    }
    rows, ok = [], True
    for (xn, X), (zn, Z) in product(Xs.items(), Zs.items()):
        r = verify_adjunction(X, Z)
        ok &= r.passed
        rows.append(f"{xn}/{zn}={r.left}:{r.right}{'' if r.passed else '!'}")
    record(2, ok, " ".join(rows))


def test_criterion_3_marking_square():
    ok, rows = True, []
    for n in range(4):
        plain = suspend(PointedComplex(standard(f"delta:{n + 1}"), (0, 0))).complex
        thin = suspend(PointedComplex(standard(f"delta-t:{n + 1}"), (0, 0))).complex
        same = plain.names == thin.names and plain.faces == thin.faces
        diff = plain.marked ^ thin.marked
        good = same and diff == {(n + 2, 0)} and diff <= thin.marked and plain.top_dim == n + 2
        ok &= good
        rows.append(f"n={n}:{'ok' if good else 'bad'}")
    record(3, ok, " ".join(rows))


def test_criterion_4_fibrancy():
    rows, ok = [], True
    for name, M in FOUR.items():
        r = check_complicial(nerve_of_monoid(M, 4), level=1, bound=3)
        ok &= r.passed
        rows.append(f"N({name},4)={r.verdict}")
    r = check_complicial(cocycle_nerve(cyclic_group(2), 5), level=2, bound=4)
    ok &= r.passed
    rows.append(f"C(Z2,5)={r.verdict}")
    h = check_complicial(standard("horn:1:2"), level=None, bound=2)
    witness_ok = (
        not h.passed
        and h.witness[0] == AnodyneInstance.horn(1, 2)
        and all(y == Simplex.of(c) for c, y in h.witness[1].assignment.items())
    )
    ok &= witness_ok
    rows.append(f"horn(1,2)={h.verdict} witness={h.witness[0] if h.witness else None}")
    record(4, ok, " ".join(rows))


def test_criterion_5_loop_closure():
    rows, ok = [], True
    for name, M in FOUR.items():
        r = check_complicial(loop(nerve_of_monoid(M, 4)), level=0, bound=2)
        ok &= r.passed
        rows.append(f"loop N({name})={r.verdict}")
    r = check_complicial(loop(cocycle_nerve(cyclic_group(2), 5)), level=1, bound=3)
    ok &= r.passed
    rows.append(f"loop C(Z2)={r.verdict}")
    record(5, ok, " ".join(rows))


def test_criterion_6_tau_oracle():
    rows, ok = [], True
    for name, M in FOUR.items():
        N = nerve_of_monoid(M, 4)
        cmp = monoid_iso_search(tau(N, 1), M)
        which = "M" if cmp.isomorphic else ("M^op" if cmp.isomorphic_or_opposite else "none")
        trivial = len(tau(N, 2)) == 1
        ok &= cmp.isomorphic_or_opposite and trivial
        rows.append(f"tau1 N({name})~{which} tau2 trivial={trivial}")
    c = monoid_iso_search(tau(cocycle_nerve(cyclic_group(2), 5), 2), cyclic_group(2))
    ok &= c.isomorphic
    rows.append(f"tau2 C(Z2)~Z2={c.isomorphic}")
    record(6, ok, "; ".join(rows))


def test_criterion_7_loop_theorem():
    rows, ok = [], True
    for name, M in FOUR.items():
        r = verify_loop_theorem(nerve_of_monoid(M, 4), 0, exhaustive=True)
        ok &= r.passed and len(r.clauses) == 5
        rows.append(f"N({name}),m=0:{sum(r.clauses.values())}/5")
    r = verify_loop_theorem(cocycle_nerve(cyclic_group(2), 5), 1, exhaustive=True)
    ok &= r.passed
    rows.append(f"C(Z2),m=1:{sum(r.clauses.values())}/5")
    iso = find_isomorphism(loop(cocycle_nerve(cyclic_group(2), 5)), nerve_of_monoid(cyclic_group(2), 4))
    iso_ok = iso is not None and iso.is_valid() and iso.is_isomorphism()
    ok &= iso_ok
    rows.append(f"loop C(Z2,5)~N(Z2,4)={iso_ok}")
    record(7, ok, " ".join(rows))


def test_criterion_8_group_remark():
    rows, ok = [], True
    for name, M in FOUR.items():
        g = tau(nerve_of_monoid(M, 4), 1).is_group
        ok &= g == M.is_group()
        rows.append(f"tau1 N({name}) group={g}")
    g = tau(cocycle_nerve(cyclic_group(2), 5), 2).is_group
    ok &= g
    rows.append(f"tau2 C(Z2) group={g}")
    record(8, ok, " ".join(rows))


def _operator_violations():
    bad = 0
    for n, m in product(range(5), repeat=2):
        for op in monotone_maps(n, m):
            inj, surj = ez_decompose(op)
            bad += compose(inj, surj) != op or not inj.is_injective() or not surj.is_surjective()
    for n in range(6):
        for e in range(n + 1):
            for s in surjections(n, e):
                bad += word_operator(degeneracy_word(s), e) != s
    return bad


def _identity_violations(objects):
    bad = 0
    for X in objects:
        bad += len(validate(X))
        for n in range(1, 4):
            for x in X.simplices(n):
                for j in range(n + 1):
                    for i in range(j):
                        if n >= 2:
                            bad += X.face(X.face(x, j), i) != X.face(X.face(x, i), j - 1)
                for i in range(n + 1):
                    s = X.degenerate(x, i)
                    bad += X.face(s, i) != x or X.face(s, i + 1) != x
    return bad


def _join_violations():
    factors = [standard("empty"), standard("delta:0"), standard("delta:1"), standard("delta-t:1"), sphere(0).complex]
    bad = 0
    for X in factors:
        R = join_with_cells(X, standard("empty"))
        L = join_with_cells(standard("empty"), X)
        for f in (
            ComplexMap(X, R.complex, {c: Simplex.of(R.cells[(c, None)]) for c in X.cells()}),
            ComplexMap(X, L.complex, {c: Simplex.of(L.cells[(None, c)]) for c in X.cells()}),
        ):
            bad += bool(f.diagnostics()) or not f.is_isomorphism()
    for X, Y, Z in product(factors, repeat=3):
        if X.top_dim + Y.top_dim + Z.top_dim + 2 > 3:
            continue
        XY, YZ = join_with_cells(X, Y), join_with_cells(Y, Z)
        left, right = join_with_cells(XY.complex, Z), join_with_cells(X, YZ.complex)
        assignment = {}
        for cx, cy, cz in product([None] + X.cells(), [None] + Y.cells(), [None] + Z.cells()):
            if cx is None and cy is None and cz is None:
                continue
            xy = XY.cells[(cx, cy)] if (cx, cy) != (None, None) else None
            yz = YZ.cells[(cy, cz)] if (cy, cz) != (None, None) else None
            assignment[left.cells[(xy, cz)]] = Simplex.of(right.cells[(cx, yz)])
        f = ComplexMap(left.complex, right.complex, assignment)
        bad += bool(f.diagnostics()) or not f.is_isomorphism()
    return bad


def _lift_violations():
    bad = 0
    for X in (nerve_of_monoid(symmetric_group(3), 3).complex, cocycle_nerve(cyclic_group(2), 3).complex):
        for inst in complicial_instances(1, 3):
            i = anodyne(inst, 1)
            for f in hom_enumerate(i.source, X):
                p = LiftingProblem(i, f)
                for h in find_lift(p, all=True):
                    bad += bool(lift_diagnostics(p, h))
    return bad


def _homotopy_violations():
    bad = 0
    cases = [(nerve_of_monoid(M, 4), 0) for M in FOUR.values()] + [(cocycle_nerve(cyclic_group(2), 5), 1)]
    for X, m in cases:
        T = tau(X, m + 1, exhaustive=True)
        bad += not T.product_well_defined
        bad += not (T.is_associative() and T.has_unit())
        bad += len(transport_witnesses(X, m, T, LoopSpace(X)))
    return bad


def test_criterion_9_property_suites():
    counts = {
        "operators": _operator_violations(),
        "identities": _identity_violations(sample_complexes().values()),
        "join": _join_violations(),
        "lifts": _lift_violations(),
        "fillers+transport": _homotopy_violations(),
    }
    record(9, not any(counts.values()), " ".join(f"{k}={v}" for k, v in counts.items()))

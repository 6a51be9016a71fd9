import pytest

from msset.constructions import loop, standard
from msset.core import CapExceeded, ComplexMap, MarkedComplex, Simplex, find_isomorphism, hom_enumerate
from msset.generators import cyclic_group, idempotent_monoid, nerve_of_monoid, symmetric_group
from msset.lifting import (
    AnodyneInstance,
    LiftingProblem,
    anodyne,
    check_complicial,
    complicial_instances,
    find_lift,
    lift_diagnostics,
)


def point_truncated_at(d):
    P = standard("delta:0")
    return MarkedComplex(P.names, P.faces, P.marked, d)


def test_anodyne_shapes():
    h = anodyne(AnodyneInstance.horn(1, 2))
    assert h.source.counts() == [3, 2] and h.target.counts() == [3, 3, 1]
    assert h.is_valid() and h.is_injective()
    t = anodyne(AnodyneInstance.thinness(1, 2))
    assert t.source.names == t.target.names
    assert {t.target.name(c) for c in t.target.marked - {t.assignment[c].cell for c in t.source.marked}} == {"02"}
    s = anodyne(AnodyneInstance.saturation(-1))
    assert find_isomorphism(s.source, standard("delta3eq")) is not None
    assert find_isomorphism(s.target, standard("delta3sharp")) is not None
    s = anodyne(AnodyneInstance.saturation(0))
    assert s.target.counts() == [5, 10, 10, 5, 1]
    tr = anodyne(AnodyneInstance.triviality(2), level=1)
    assert tr.source.marked == frozenset() and len(tr.target.marked) == 1


def test_anodyne_preconditions():
    for bad in (AnodyneInstance.horn(3, 2), AnodyneInstance.thinness(0, 1), AnodyneInstance.saturation(-2)):
        with pytest.raises(ValueError):
            anodyne(bad)
    with pytest.raises(ValueError):
        anodyne(AnodyneInstance.triviality(1), level=1)


def test_instance_ordering():
    inst = complicial_instances(1, 4)
    assert inst == sorted(inst)
    assert [i.m for i in inst if i.family == "saturation"] == [-1, 0]
    assert AnodyneInstance.saturation(-1).dimension == 3
    assert str(AnodyneInstance.horn(1, 2)) == "horn(k=1, m=2)"


def _nerve_triangle(M, a, b):
    """Horn Lambda^1[2] -> nerve(M) picking the composable pair (a, b)."""
    N = nerve_of_monoid(M, 3).complex
    i = anodyne(AnodyneInstance.horn(1, 2))
    H = i.source
    edge = lambda x: N.simplex(f"({x})") if x != M.unit else N.degenerate(N.simplex("*"), 0)  # noqa: E731
    f = ComplexMap(H, N, {H.cell("0"): N.simplex("*"), H.cell("1"): N.simplex("*"), H.cell("2"): N.simplex("*"),
                          H.cell("01"): edge(a), H.cell("12"): edge(b)})
    return N, LiftingProblem(i, f)


def test_nerve_triangle_has_unique_filler():
    M = symmetric_group(3)
    for a in M.elements:
        for b in M.elements:
            N, p = _nerve_triangle(M, a, b)
            lifts = find_lift(p, all=True)
            assert len(lifts) == 1
            long_edge = N.face(lifts[0].assignment[p.inclusion.target.cell("012")], 1)
            # d_1 of (a, b) is the composite a*b
            expected = M.mul(a, b)
            assert N.describe(long_edge) == ("*.s0" if expected == M.unit else f"({expected})")
            assert lift_diagnostics(p, lifts[0]) == []


def test_identity_attachment_lifts_to_identity():
    i = anodyne(AnodyneInstance.horn(0, 3))
    D = i.target
    f = i  # attach the horn to its own filler
    lifts = find_lift(LiftingProblem(i, f), D, all=True)
    assert [l.assignment for l in lifts] == [{c: Simplex.of(c) for c in D.cells()}]


def test_horn_does_not_fill_itself():
    i = anodyne(AnodyneInstance.horn(1, 2))
    H = i.source
    ident = ComplexMap(H, H, {c: Simplex.of(c) for c in H.cells()})
    assert find_lift(LiftingProblem(i, ident)) == []


@pytest.mark.parametrize("inst", [AnodyneInstance.horn(k, 2) for k in range(3)] + [AnodyneInstance.thinness(1, 2)])
def test_lift_completeness_against_hom(inst):
    X = nerve_of_monoid(idempotent_monoid(), 3).complex
    i = anodyne(inst)
    everything = hom_enumerate(i.target, X)
    for f in hom_enumerate(i.source, X):
        p = LiftingProblem(i, f)
        expected = {h for h in everything if i.then(h) == f}
        got = find_lift(p, all=True)
        assert set(got) == expected and len(got) == len(expected)
        for h in got:
            assert lift_diagnostics(p, h) == []


def test_lift_soundness_on_generated_objects():
    violations = 0
    for X in (nerve_of_monoid(cyclic_group(3), 3).complex, nerve_of_monoid(symmetric_group(3), 3).complex):
        for inst in complicial_instances(1, 3):
            i = anodyne(inst, 1)
            for f in hom_enumerate(i.source, X):
                p = LiftingProblem(i, f)
                for h in find_lift(p, all=True):
                    violations += bool(lift_diagnostics(p, h))
    assert violations == 0


def test_check_point():
    assert check_complicial(point_truncated_at(3), level=0, bound=3).passed


def test_check_rejects_bound_above_truncation():
    with pytest.raises(ValueError):
        check_complicial(standard("delta:0"), level=0, bound=3)


def test_check_horn_fails_with_witness():
    r = check_complicial(standard("horn:1:2"), level=None, bound=2)
    assert not r.passed and r.verdict == "fail"
    inst, f = r.witness
    assert inst == AnodyneInstance.horn(1, 2)
    assert all(f.assignment[c] == Simplex.of(c) for c in f.source.cells())
    assert "witness: horn(k=1, m=2)" in r.format()


def test_check_nerve_passes():
    r = check_complicial(nerve_of_monoid(cyclic_group(2), 4), level=1, bound=3)
    assert r.passed and r.verdict == "pass-up-to-bound"
    assert r.tallies["horn"].enumerated > 0 and r.tallies["horn"].failed == 0


def test_check_idempotent_not_zero_trivial():
    # the non-invertible edge is unmarked, so 1-triviality fails for it
    r = check_complicial(nerve_of_monoid(idempotent_monoid(), 3), level=0, bound=3)
    assert not r.passed and r.witness[0] == AnodyneInstance.triviality(1)


def test_check_unmarked_nerve_fails_saturation_or_thinness():
    r = check_complicial(nerve_of_monoid(cyclic_group(2), 4, mark_all_1=True), level=1, bound=3)
    assert r.passed
    r = check_complicial(nerve_of_monoid(idempotent_monoid(), 4, mark_all_1=True), level=1, bound=3)
    assert not r.passed


def test_closure_under_loops():
    for M in (cyclic_group(2), idempotent_monoid()):
        Z = nerve_of_monoid(M, 4)
        assert check_complicial(Z, level=1, bound=3).passed
        assert check_complicial(loop(Z), level=0, bound=2).passed


def test_workers_are_deterministic():
    X = nerve_of_monoid(symmetric_group(3), 3)
    a = check_complicial(X, level=1, bound=3, workers=1)
    b = check_complicial(X, level=1, bound=3, workers=3)
    assert a.format() == b.format()
    assert [(i, t) for i, t in a.instances] == [(i, t) for i, t in b.instances]
    h = check_complicial(standard("horn:1:2"), bound=2, workers=2)
    assert h.witness[0] == AnodyneInstance.horn(1, 2)


def test_cap_exceeded_names_instance():
    with pytest.raises(CapExceeded, match="horn"):
        check_complicial(nerve_of_monoid(symmetric_group(3), 3), level=1, bound=3, cap=3)

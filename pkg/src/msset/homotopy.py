"""Homotopy monoids of pointed marked complexes and the loop comparison map.

Conventions (fixed here, checked by diagnostics rather than assumed):

* ``alpha ~ beta`` at level m is witnessed by a marked ``h`` in ``X_{m+1}``
  with ``d_i h`` totally degenerate on the base for ``i < m``,
  ``d_m h = alpha`` and ``d_{m+1} h = beta``.  Classes are the equivalence
  closure of this relation.
* ``[alpha][beta] = [d_m theta]`` for ``theta`` in ``X_{m+1}`` with base faces
  below ``m - 1``, ``d_{m-1} theta = alpha`` and ``d_{m+1} theta = beta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .constructions import LoopSpace
from .core import ComplexError, MarkedComplex, PointedComplex, Simplex, totally_degenerate
from .generators import MonoidTable


class NoFiller(RuntimeError):
    def __init__(self, message: str, pair: tuple[Simplex, Simplex]):
        super().__init__(message)
        self.pair = pair


@dataclass
class BasedSimplexSet:
    ambient: PointedComplex
    m: int
    members: list[Simplex]


def based_simplices(X: PointedComplex, m: int) -> BasedSimplexSet:
    """m-simplices all of whose faces are totally degenerate on the base."""
    if m < 0:
        raise ValueError("m must be >= 0")
    C = X.complex
    if m == 0:
        return BasedSimplexSet(X, 0, list(C.simplices(0)))
    key = (totally_degenerate(X.base, m - 1),) * (m + 1)
    return BasedSimplexSet(X, m, list(C.simplices_by_faces(m).get(key, [])))


def homotopic(X: PointedComplex, m: int, alpha: Simplex, beta: Simplex) -> Simplex | None:
    """A marked witness ``h`` for ``alpha ~ beta`` at level m, or None."""
    C = X.complex
    key = (totally_degenerate(X.base, m),) * m + (alpha, beta)
    for h in C.simplices_by_faces(m + 1).get(key, []):
        if C.is_marked(h):
            return h
    return None


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


@dataclass
class HomotopyClasses:
    ambient: PointedComplex
    m: int
    members: list[Simplex]
    classes: list[list[Simplex]]
    class_of: dict[Simplex, int]
    witnesses: dict[tuple[Simplex, Simplex], Simplex]
    witness_relation_already_equivalence: bool
    marked_classes: set[int] = field(default_factory=set)

    def __len__(self) -> int:
        return len(self.classes)

    def cls(self, x: Simplex) -> int:
        return self.class_of[x]


def homotopy_classes(X: PointedComplex, m: int) -> HomotopyClasses:
    members = based_simplices(X, m).members
    pos = {x: i for i, x in enumerate(members)}
    parent = list(range(len(members)))
    witnesses: dict[tuple[Simplex, Simplex], Simplex] = {}
    for a, b in product(members, repeat=2):
        h = homotopic(X, m, a, b)
        if h is not None:
            witnesses[(a, b)] = h
            ra, rb = _find(parent, pos[a]), _find(parent, pos[b])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots: dict[int, int] = {}
    classes: list[list[Simplex]] = []
    class_of: dict[Simplex, int] = {}
    for x in members:
        r = _find(parent, pos[x])
        if r not in roots:
            roots[r] = len(classes)
            classes.append([])
        classes[roots[r]].append(x)
        class_of[x] = roots[r]
    # was the raw witness relation already reflexive, symmetric and transitive?
    already = all((a, b) in witnesses for cl in classes for a in cl for b in cl)
    C = X.complex
    marked = {class_of[x] for x in members if C.is_marked(x)}
    return HomotopyClasses(X, m, members, classes, class_of, witnesses, already, marked)


@dataclass
class HomotopyMonoid(HomotopyClasses):
    table: list[list[int]] = field(default_factory=list)
    unit: int = 0
    product_well_defined: bool | None = None
    fillers: dict[tuple[int, int], Simplex] = field(default_factory=dict)

    @property
    def is_group(self) -> bool:
        n = len(self.classes)
        return all(
            any(self.table[a][b] == self.unit and self.table[b][a] == self.unit for b in range(n)) for a in range(n)
        )

    def is_associative(self) -> bool:
        t, r = self.table, range(len(self.classes))
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)

    def has_unit(self) -> bool:
        u = self.unit
        return all(self.table[u][a] == a and self.table[a][u] == a for a in range(len(self.classes)))

    def is_commutative(self) -> bool:
        r = range(len(self.classes))
        return all(self.table[a][b] == self.table[b][a] for a in r for b in r)

    def format(self, X: MarkedComplex | None = None) -> str:
        X = X or self.ambient.complex
        lines = [f"level: {self.m}", f"classes: {len(self.classes)}"]
        for i, cl in enumerate(self.classes):
            lines.append(f"  [{i}] " + " ".join(X.describe(x) for x in cl))
        lines.append(f"unit: [{self.unit}]")
        lines.append("table:")
        for row in self.table:
            lines.append("  " + " ".join(str(v) for v in row))
        lines.append(f"witness relation already an equivalence: {self.witness_relation_already_equivalence}")
        lines.append(
            "product well defined: "
            + ("not checked" if self.product_well_defined is None else str(self.product_well_defined))
        )
        lines.append(f"associative: {self.is_associative()}")
        lines.append(f"is group: {self.is_group}")
        lines.append(f"marked classes: {sorted(self.marked_classes)}")
        return "\n".join(lines)


def _product_fillers(X: PointedComplex, m: int) -> dict[tuple[Simplex, Simplex], list[Simplex]]:
    """(alpha, beta) -> all theta with the multiplication horn, keyed for m >= 1."""
    C = X.complex
    base = totally_degenerate(X.base, m)
    out: dict[tuple[Simplex, Simplex], list[Simplex]] = {}
    for theta in C.simplices(m + 1):
        faces = C.face_tuple(theta)
        if any(faces[i] != base for i in range(m - 1)):
            continue
        out.setdefault((faces[m - 1], faces[m + 1]), []).append(theta)
    return out


def tau(X: PointedComplex, m: int, exhaustive: bool = False) -> HomotopyMonoid:
    """The homotopy monoid at level ``m >= 1``."""
    if m < 1:
        raise ValueError("tau needs m >= 1; use tau0 for level 0")
    C = X.complex
    if C.dim_bound < m + 1:
        raise ValueError(f"dim_bound {C.dim_bound} too low to multiply at level {m}")
    hc = homotopy_classes(X, m)
    fillers = _product_fillers(X, m)
    n = len(hc.classes)
    table = [[-1] * n for _ in range(n)]
    chosen: dict[tuple[int, int], Simplex] = {}
    well_defined = True
    for i, j in product(range(n), repeat=2):
        a, b = hc.classes[i][0], hc.classes[j][0]
        thetas = fillers.get((a, b))
        if not thetas:
            raise NoFiller(
                f"no filler for ({C.describe(a)}, {C.describe(b)}) at level {m}", (a, b)
            )
        prod_simplex = C.face(thetas[0], m)
        if prod_simplex not in hc.class_of:
            raise ComplexError(f"product face {C.describe(prod_simplex)} is not based")
        table[i][j] = hc.class_of[prod_simplex]
        chosen[(i, j)] = thetas[0]
        if exhaustive:
            for a2, b2 in product(hc.classes[i], hc.classes[j]):
                for theta in fillers.get((a2, b2), []):
                    if hc.class_of.get(C.face(theta, m)) != table[i][j]:
                        well_defined = False
                if not fillers.get((a2, b2)):
                    raise NoFiller(
                        f"no filler for ({C.describe(a2)}, {C.describe(b2)}) at level {m}", (a2, b2)
                    )
    unit = hc.class_of[totally_degenerate(X.base, m)]
    return HomotopyMonoid(
        ambient=hc.ambient,
        m=m,
        members=hc.members,
        classes=hc.classes,
        class_of=hc.class_of,
        witnesses=hc.witnesses,
        witness_relation_already_equivalence=hc.witness_relation_already_equivalence,
        marked_classes=hc.marked_classes,
        table=table,
        unit=unit,
        product_well_defined=well_defined if exhaustive else None,
        fillers=chosen,
    )


def tau0(Y: PointedComplex) -> HomotopyClasses:
    """Classes of 0-simplices; a marked edge h relates ``d_0 h`` to ``d_1 h``."""
    return homotopy_classes(Y, 0)


def psi(X: PointedComplex, m: int, loops: LoopSpace | None = None) -> dict[Simplex, Simplex]:
    """``X^x_{m+1} -> Omega(X)^x_m``, the identity on underlying simplices."""
    if X.complex.dim_bound < m + 1:
        raise ValueError(f"dim_bound {X.complex.dim_bound} too low for psi at level {m}")
    loops = loops or LoopSpace(X)
    return {a: loops.to_shifted(a) for a in based_simplices(X, m + 1).members}


def psi_simplex(X: PointedComplex, m: int, alpha: Simplex, loops: LoopSpace | None = None) -> Simplex:
    C = X.complex
    if C.face_tuple(alpha) != (totally_degenerate(X.base, m),) * (m + 2):
        raise ValueError(f"{C.describe(alpha)} is not a based {m + 1}-simplex")
    loops = loops or LoopSpace(X)
    return loops.to_shifted(alpha)


# ------------------------------------------------------------ loop theorem


@dataclass
class LoopTheoremReport:
    m: int
    upper: HomotopyMonoid  # tau_{m+1}(X)
    lower: HomotopyClasses  # tau_m(Omega X), or the level-0 partition
    lower_table: list[list[int]]
    lower_unit: int
    transported: bool
    class_map: dict[int, int]
    clauses: dict[str, bool]
    transport_violations: list[str]

    @property
    def passed(self) -> bool:
        return all(self.clauses.values()) and not self.transport_violations

    def format(self) -> str:
        lines = [f"level: tau_{self.m + 1}(X) vs tau_{self.m}(Omega X)"]
        for name, ok in self.clauses.items():
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
        if self.transported:
            lines.append("note: level-0 multiplication is transported along Psi")
        lines.append(f"classes: {len(self.upper.classes)} -> {len(self.lower.classes)}")
        lines.append(f"witness transport violations: {len(self.transport_violations)}")
        for v in self.transport_violations[:10]:
            lines.append(f"  {v}")
        lines.append(f"verdict: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


CLAUSES = (
    "psi is a bijection on based simplices",
    "psi descends to classes",
    "Psi is a bijection of classes",
    "Psi preserves the unit",
    "Psi is multiplicative",
)


def verify_loop_theorem(X: PointedComplex, m: int, exhaustive: bool = False) -> LoopTheoremReport:
    """Check ``tau_{m+1}(X) = tau_m(Omega X)`` clause by clause."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if X.complex.dim_bound < m + 2:
        raise ValueError(f"dim_bound {X.complex.dim_bound} too low for level {m}")
    loops = LoopSpace(X)
    Om = loops.pointed
    upper = tau(X, m + 1, exhaustive)
    lower: HomotopyClasses = tau(Om, m, exhaustive) if m >= 1 else tau0(Om)

    images = {a: loops.to_shifted(a) for a in upper.members}
    bijective = len(set(images.values())) == len(images) and set(images.values()) == set(lower.members)

    class_map: dict[int, int] = {}
    descends = True
    for i, cl in enumerate(upper.classes):
        targets = {lower.class_of.get(images[a]) for a in cl}
        if len(targets) != 1 or None in targets:
            descends = False
        class_map[i] = min((t for t in targets if t is not None), default=-1)
    class_bijective = descends and sorted(class_map.values()) == list(range(len(lower.classes)))

    base_loop = totally_degenerate(Om.base, m)
    if m >= 1:
        lower_unit = lower.unit  # type: ignore[attr-defined]
        lower_table = lower.table  # type: ignore[attr-defined]
        transported = False
    else:
        # no intrinsic product at level 0: install the upper one along Psi
        transported = True
        lower_unit = class_map.get(upper.unit, -1)
        inverse = {v: k for k, v in class_map.items()}
        n = len(lower.classes)
        lower_table = [[-1] * n for _ in range(n)]
        if class_bijective:
            for a, b in product(range(n), repeat=2):
                lower_table[a][b] = class_map[upper.table[inverse[a]][inverse[b]]]
    unit_ok = (
        class_map.get(upper.unit) == lower_unit
        and images.get(totally_degenerate(X.base, m + 1)) == base_loop
        and lower.class_of.get(base_loop) == lower_unit
    )
    mult_ok = class_bijective and all(
        class_map[upper.table[i][j]] == lower_table[class_map[i]][class_map[j]]
        for i, j in product(range(len(upper.classes)), repeat=2)
    )
    clauses = dict(zip(CLAUSES, (bijective, descends, class_bijective, unit_ok, mult_ok)))
    violations = transport_witnesses(X, m, upper, loops)
    return LoopTheoremReport(
        m, upper, lower, lower_table, lower_unit, transported, class_map, clauses, violations
    )


def transport_witnesses(X: PointedComplex, m: int, upper: HomotopyClasses, loops: LoopSpace) -> list[str]:
    """Each witness of ``alpha ~ beta`` at level m+1 must witness ``psi alpha ~ psi beta`` in Omega X."""
    Om = loops.pointed
    O = Om.complex  # noqa: E741
    base = totally_degenerate(Om.base, m)
    problems = []
    for (a, b), h in upper.witnesses.items():
        hw = loops.to_shifted(h)
        faces = O.face_tuple(hw) if hw.dim else ()
        want = (base,) * m + (loops.to_shifted(a), loops.to_shifted(b))
        if faces != want or not O.is_marked(hw):
            problems.append(f"witness {X.complex.describe(h)} does not transport")
    return problems


# ------------------------------------------------------------- monoid search


@dataclass
class RawMonoid:
    size: int
    unit: int
    table: list[list[int]]
    labels: list[str]

    def opposite(self) -> RawMonoid:
        n = self.size
        return RawMonoid(n, self.unit, [[self.table[b][a] for b in range(n)] for a in range(n)], self.labels)


def as_raw(M: HomotopyMonoid | MonoidTable | RawMonoid) -> RawMonoid:
    if isinstance(M, RawMonoid):
        return M
    if isinstance(M, MonoidTable):
        idx = {e: i for i, e in enumerate(M.elements)}
        table = [[idx[M.mul(a, b)] for b in M.elements] for a in M.elements]
        return RawMonoid(len(M), idx[M.unit], table, list(M.elements))
    return RawMonoid(len(M.classes), M.unit, M.table, [str(i) for i in range(len(M.classes))])


def _iso(A: RawMonoid, B: RawMonoid) -> dict[int, int] | None:
    if A.size != B.size:
        return None
    n = A.size
    order = [A.unit] + [a for a in range(n) if a != A.unit]
    phi: dict[int, int] = {}
    used: set[int] = set()

    def consistent() -> bool:
        for a, pa in phi.items():
            for b, pb in phi.items():
                c = A.table[a][b]
                if c in phi and phi[c] != B.table[pa][pb]:
                    return False
                if c not in phi and B.table[pa][pb] in used:
                    # the image of c is already taken by another element
                    return False
        return True

    def rec(p: int) -> bool:
        if p == n:
            return True
        a = order[p]
        options = [B.unit] if a == A.unit else [b for b in range(n) if b not in used]
        for b in options:
            phi[a] = b
            used.add(b)
            if consistent() and rec(p + 1):
                return True
            del phi[a]
            used.discard(b)
        return False

    return dict(phi) if rec(0) else None


@dataclass
class MonoidComparison:
    isomorphism: dict[int, int] | None
    opposite_isomorphism: dict[int, int] | None

    @property
    def isomorphic(self) -> bool:
        return self.isomorphism is not None

    @property
    def isomorphic_or_opposite(self) -> bool:
        return self.isomorphism is not None or self.opposite_isomorphism is not None


def monoid_iso_search(A, B, max_size: int = 12) -> MonoidComparison:
    """Unit- and table-preserving bijections ``A -> B`` and ``A -> B^op``."""
    ra, rb = as_raw(A), as_raw(B)
    if max(ra.size, rb.size) > max_size:
        raise ValueError(f"monoids larger than {max_size} are not searched")
    return MonoidComparison(_iso(ra, rb), _iso(ra, rb.opposite()))


def brute_force_iso(A, B) -> dict[int, int] | None:
    """Exhaustive search over all bijections; small sizes only."""
    ra, rb = as_raw(A), as_raw(B)
    if ra.size != rb.size:
        return None
    for perm in permutations(range(rb.size)):
        if perm[ra.unit] != rb.unit:
            continue
        if all(
            perm[ra.table[a][b]] == rb.table[perm[a]][perm[b]] for a in range(ra.size) for b in range(ra.size)
        ):
            return dict(enumerate(perm))
    return None

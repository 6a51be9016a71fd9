"""Standard marked objects, join, pushout, pullback, reduced suspension and loops."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from .core import (
    Cell,
    ComplexBuilder,
    ComplexError,
    ComplexMap,
    MarkedComplex,
    PointedComplex,
    Simplex,
    totally_degenerate,
)
from .operators import (
    SimplicialOperator,
    collapsed_positions,
    cone_operator,
    identity,
    join_operators,
)

# Marking rule for joined simplices whose two components are both nonempty.
# "or": marked when either component is marked (the default, see join()).
# "and": the literal reading, kept for experiments.
JOIN_MARKING = "or"


# ------------------------------------------------------------ standard objects


@dataclass(frozen=True)
class StandardSpec:
    kind: str
    n: int | None = None
    k: int | None = None

    KINDS = (
        "delta",
        "delta-t",
        "complicial",
        "horn",
        "horn-prime",
        "complicial-prime",
        "complicial-dprime",
        "delta3eq",
        "delta3sharp",
        "sphere",
        "empty",
    )

    @classmethod
    def parse(cls, text: str) -> StandardSpec:
        """Parse ``delta:2``, ``complicial:1:2`` (k then n), ``delta3eq`` ..."""
        kind, *args = text.strip().split(":")
        if kind not in cls.KINDS:
            raise ValueError(f"unknown standard object {kind!r}")
        try:
            nums = [int(a) for a in args]
        except ValueError:
            raise ValueError(f"bad parameters in {text!r}") from None
        if kind in ("complicial", "horn", "horn-prime", "complicial-prime", "complicial-dprime"):
            if len(nums) != 2:
                raise ValueError(f"{kind} needs K:N")
            return cls(kind, n=nums[1], k=nums[0])
        if kind in ("delta", "delta-t", "sphere"):
            if len(nums) != 1:
                raise ValueError(f"{kind} needs N")
            return cls(kind, n=nums[0])
        if nums:
            raise ValueError(f"{kind} takes no parameters")
        return cls(kind)

    def __str__(self) -> str:
        if self.k is not None:
            return f"{self.kind}:{self.k}:{self.n}"
        if self.n is not None:
            return f"{self.kind}:{self.n}"
        return self.kind


def Delta(n: int) -> StandardSpec:
    return StandardSpec("delta", n=n)


def DeltaThin(n: int) -> StandardSpec:
    return StandardSpec("delta-t", n=n)


def Complicial(k: int, n: int) -> StandardSpec:
    return StandardSpec("complicial", n=n, k=k)


def Horn(k: int, n: int) -> StandardSpec:
    return StandardSpec("horn", n=n, k=k)


def HornPrime(k: int, n: int) -> StandardSpec:
    return StandardSpec("horn-prime", n=n, k=k)


def ComplicialPrime(k: int, n: int) -> StandardSpec:
    return StandardSpec("complicial-prime", n=n, k=k)


def ComplicialDoublePrime(k: int, n: int) -> StandardSpec:
    return StandardSpec("complicial-dprime", n=n, k=k)


Delta3Eq = StandardSpec("delta3eq")
Delta3Sharp = StandardSpec("delta3sharp")
DeltaEmpty = StandardSpec("empty")


def Sphere(n: int) -> StandardSpec:
    return StandardSpec("sphere", n=n)


def subset_name(subset: tuple[int, ...], n: int) -> str:
    sep = "" if n < 10 else "_"
    return sep.join(str(v) for v in subset)


def simplex_subcomplex(n: int, subsets, marked) -> MarkedComplex:
    """Simplicial subset of Delta[n] spanned by a face-closed family of vertex sets.

    ``marked`` is a predicate on vertex tuples; 0-simplices are never marked.
    """
    keep = set(subsets)
    b = ComplexBuilder()
    cells: dict[tuple[int, ...], Cell] = {}
    for d in range(n + 1):
        for s in combinations(range(n + 1), d + 1):
            if s not in keep:
                continue
            faces = []
            if d > 0:
                for i in range(d + 1):
                    f = s[:i] + s[i + 1 :]
                    if f not in cells:
                        raise ComplexError(f"family is not closed under faces: {s} lacks {f}")
                    faces.append(Simplex.of(cells[f]))
            cells[s] = b.add_cell(subset_name(s, n), d, faces)
            if d > 0 and marked(s):
                b.mark(cells[s])
    return b.build(dim_bound=n)


def _all_subsets(n: int) -> list[tuple[int, ...]]:
    return [s for d in range(n + 1) for s in combinations(range(n + 1), d + 1)]


def _horn_subsets(k: int, n: int) -> list[tuple[int, ...]]:
    full = tuple(range(n + 1))
    missing = full[:k] + full[k + 1 :]
    return [s for s in _all_subsets(n) if s != full and s != missing]


def complicial_predicate(k: int, n: int):
    """Vertex sets marked in the k-complicial n-simplex."""
    required = {k - 1, k, k + 1} & set(range(n + 1))
    return lambda s: required <= set(s)


def standard(spec: StandardSpec | str) -> MarkedComplex | PointedComplex:
    if isinstance(spec, str):
        spec = StandardSpec.parse(spec)
    kind, n, k = spec.kind, spec.n, spec.k
    if n is not None and n < 0:
        raise ValueError(f"dimension must be >= 0 in {spec}")
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n in {spec}")
    if kind == "empty":
        return MarkedComplex([], {}, [], -1)
    if kind == "delta":
        return simplex_subcomplex(n, _all_subsets(n), lambda s: False)
    if kind == "delta-t":
        return simplex_subcomplex(n, _all_subsets(n), lambda s: len(s) == n + 1)
    if kind == "sphere":
        return sphere(n)
    if kind == "delta3eq":
        return simplex_subcomplex(3, _all_subsets(3), lambda s: len(s) >= 3 or s in ((0, 2), (1, 3)))
    if kind == "delta3sharp":
        return simplex_subcomplex(3, _all_subsets(3), lambda s: True)

    thin = complicial_predicate(k, n)
    full = tuple(range(n + 1))
    codim_one = lambda s: len(s) == n  # noqa: E731
    if kind == "complicial":
        return simplex_subcomplex(n, _all_subsets(n), thin)
    if kind == "horn":
        return simplex_subcomplex(n, _horn_subsets(k, n), thin)
    if kind == "horn-prime":
        return simplex_subcomplex(n, _horn_subsets(k, n), lambda s: thin(s) or codim_one(s))
    if kind == "complicial-dprime":
        return simplex_subcomplex(n, _all_subsets(n), lambda s: thin(s) or codim_one(s))
    if kind == "complicial-prime":
        # union of Delta^k[n] with Lambda^k[n]': every codimension-one face but the k-th
        missing = full[:k] + full[k + 1 :]
        return simplex_subcomplex(
            n, _all_subsets(n), lambda s: thin(s) or (codim_one(s) and s != missing)
        )
    raise ValueError(f"unknown standard object {kind!r}")


def point() -> MarkedComplex:
    return standard(Delta(0))


def pointed_point() -> PointedComplex:
    return PointedComplex(point(), (0, 0))


# ------------------------------------------------------------------ subobjects


def subcomplex(X: MarkedComplex, cells) -> tuple[MarkedComplex, ComplexMap]:
    """The regular subcomplex generated by ``cells`` and its inclusion into X."""
    keep: set[Cell] = set()
    stack = list(cells)
    while stack:
        c = stack.pop()
        if c in keep:
            continue
        keep.add(c)
        stack.extend(f.cell for f in X.faces.get(c, ()))
    b = ComplexBuilder()
    new: dict[Cell, Cell] = {}
    for c in X.cells():
        if c not in keep:
            continue
        faces = [Simplex(new[f.cell], f.degeneracy) for f in X.faces.get(c, ())]
        new[c] = b.add_cell(X.name(c), c[0], faces)
        if c in X.marked:
            b.mark(new[c])
    A = b.build(dim_bound=X.dim_bound)
    incl = ComplexMap(A, X, {new[c]: Simplex.of(c) for c in new})
    return A, incl


def terminal_map(X: MarkedComplex) -> ComplexMap:
    P = point()
    return ComplexMap(X, P, {c: Simplex((0, 0), SimplicialOperator((0,) * (c[0] + 1), 0)) for c in X.cells()})


# ------------------------------------------------------------------------ join


@dataclass
class JoinResult:
    complex: MarkedComplex
    cells: dict[tuple[Cell | None, Cell | None], Cell]

    def simplex(self, x: Simplex | None, y: Simplex | None) -> Simplex:
        """Normal form of the joined simplex ``(x, y)``; ``None`` is the empty simplex."""
        key = (x.cell if x else None, y.cell if y else None)
        op = join_operators(x.degeneracy if x else None, y.degeneracy if y else None)
        return Simplex(self.cells[key], op)

    def left_inclusion(self, X: MarkedComplex) -> ComplexMap:
        J = self.complex
        return ComplexMap(X, J, {c: Simplex.of(self.cells[(c, None)]) for c in X.cells()})

    def right_inclusion(self, Y: MarkedComplex) -> ComplexMap:
        J = self.complex
        return ComplexMap(Y, J, {c: Simplex.of(self.cells[(None, c)]) for c in Y.cells()})


def join_with_cells(X: MarkedComplex, Y: MarkedComplex, marking: str | None = None) -> JoinResult:
    marking = marking or JOIN_MARKING
    if marking not in ("or", "and"):
        raise ValueError(f"unknown join marking {marking!r}")
    b = ComplexBuilder()
    cells: dict[tuple[Cell | None, Cell | None], Cell] = {}
    result = JoinResult(None, cells)  # type: ignore[arg-type]
    top = X.top_dim + Y.top_dim + 1
    for n in range(top + 1):
        for k in range(-1, n + 1):
            l = n - 1 - k  # noqa: E741
            xs = [None] if k == -1 else X.cells(k)
            ys = [None] if l == -1 else Y.cells(l)
            for cx in xs:
                for cy in ys:
                    faces = []
                    if n > 0:
                        sx = Simplex.of(cx) if cx else None
                        sy = Simplex.of(cy) if cy else None
                        for i in range(n + 1):
                            if i <= k:
                                fx = X.face(sx, i) if k > 0 else None
                                faces.append(result.simplex(fx, sy))
                            else:
                                fy = Y.face(sy, i - k - 1) if l > 0 else None
                                faces.append(result.simplex(sx, fy))
                    name = "[{}|{}]".format(X.name(cx) if cx else "", Y.name(cy) if cy else "")
                    cell = b.add_cell(name, n, faces)
                    cells[(cx, cy)] = cell
                    if cx is None:
                        is_marked = cy in Y.marked
                    elif cy is None:
                        is_marked = cx in X.marked
                    elif marking == "or":
                        is_marked = cx in X.marked or cy in Y.marked
                    else:
                        is_marked = cx in X.marked and cy in Y.marked
                    if is_marked:
                        b.mark(cell)
    result.complex = b.build(dim_bound=X.dim_bound + Y.dim_bound + 1)
    return result


def join(X: MarkedComplex, Y: MarkedComplex, marking: str | None = None) -> MarkedComplex:
    """The join ``X * Y``.

    A simplex lying in one of the two copies keeps its own marking.  A genuinely
    joined simplex ``(x, y)`` is marked when ``x`` or ``y`` is; with the literal
    "and" reading the cone on a thin simplex would not be thin.
    """
    return join_with_cells(X, Y, marking).complex


def cone(X: MarkedComplex) -> MarkedComplex:
    return join(point(), X)


# --------------------------------------------------------------- union-find


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _fresh(name: str, used: set[str]) -> str:
    while name in used:
        name += "'"
    used.add(name)
    return name


# --------------------------------------------------------------------- pushout


def pushout(f: ComplexMap, g: ComplexMap) -> tuple[MarkedComplex, ComplexMap, ComplexMap]:
    """Pushout of ``B <-f- A -g-> C``; returns ``(P, B -> P, C -> P)``.

    Computed dimensionwise on all simplices, then the nondegenerate classes are
    re-extracted.  A class is marked when one of its cells is.
    """
    if f.source is not g.source and f.source != g.source:
        raise ComplexError("pushout legs must share their source")
    A, B, C = f.source, f.target, g.target
    top = max(B.top_dim, C.top_dim)
    uf = _UnionFind()
    classes: list[dict] = []  # per dimension: root -> members in canonical order
    for n in range(top + 1):
        for s in B.simplices(n):
            uf.add(("B", s))
        for s in C.simplices(n):
            uf.add(("C", s))
        for a in A.simplices(n):
            uf.union(("B", f(a)), ("C", g(a)))
    for n in range(top + 1):
        groups: dict = {}
        for s in B.simplices(n):
            groups.setdefault(uf.find(("B", s)), []).append(("B", s))
        for s in C.simplices(n):
            groups.setdefault(uf.find(("C", s)), []).append(("C", s))
        classes.append(groups)

    side = {"B": B, "C": C}
    normal: dict = {}  # root -> Simplex of P
    b = ComplexBuilder()
    used_names: set[str] = set()
    for n in range(top + 1):
        groups = classes[n]
        if n > 0:
            # classes hit by a degeneracy are degenerate
            for root_below, members in classes[n - 1].items():
                tag, rep = members[0]
                below = normal[root_below]
                for i in range(n):
                    up = uf.find((tag, side[tag].degenerate(rep, i)))
                    if up not in normal:
                        normal[up] = Simplex(
                            below.cell,
                            _compose_degeneracy(below.degeneracy, i),
                        )
        for root, members in groups.items():
            if root in normal:
                continue
            tag, rep = members[0]
            X = side[tag]
            faces = []
            if n > 0:
                faces = [normal[uf.find((tag, X.face(rep, i)))] for i in range(n + 1)]
            cell = b.add_cell(_fresh(X.name(rep.cell), used_names), n, faces)
            normal[root] = Simplex.of(cell)
            if any(side[t].is_marked(s) for t, s in members):
                b.mark(cell)
    P = b.build(dim_bound=max(B.dim_bound, C.dim_bound))
    to_p_b = ComplexMap(B, P, {c: normal[uf.find(("B", Simplex.of(c)))] for c in B.cells()})
    to_p_c = ComplexMap(C, P, {c: normal[uf.find(("C", Simplex.of(c)))] for c in C.cells()})
    return P, to_p_b, to_p_c


def _compose_degeneracy(op: SimplicialOperator, i: int) -> SimplicialOperator:
    from .operators import codegeneracy, compose

    return compose(op, codegeneracy(op.source_dim, i))


def collapse(X: MarkedComplex, cells) -> tuple[MarkedComplex, ComplexMap]:
    """Quotient of X by the subcomplex generated by ``cells``, and the quotient map."""
    A, incl = subcomplex(X, cells)
    P, q, _ = pushout(incl, terminal_map(A))
    return P, q


# -------------------------------------------------------------------- pullback


def _split(surj: SimplicialOperator, positions: set[int]) -> tuple[SimplicialOperator, SimplicialOperator]:
    """Factor ``surj = rest o collapse`` where ``collapse`` merges exactly ``positions``."""
    vals = [0]
    for i in range(1, len(surj.values)):
        vals.append(vals[-1] + (0 if i - 1 in positions else 1))
    collapse_op = SimplicialOperator(tuple(vals), vals[-1])
    rest = [0] * (vals[-1] + 1)
    for i, v in enumerate(vals):
        rest[v] = surj.values[i]
    return SimplicialOperator(tuple(rest), surj.target_dim), collapse_op


def pullback(f: ComplexMap, g: ComplexMap) -> tuple[MarkedComplex, ComplexMap, ComplexMap]:
    """Pullback of ``B -f-> D <-g- C``; returns ``(P, P -> B, P -> C)``.

    A pair ``(b, c)`` is marked iff both components are.
    """
    if f.target is not g.target and f.target != g.target:
        raise ComplexError("pullback legs must share their target")
    B, C = f.source, g.source
    top = B.top_dim + C.top_dim
    b = ComplexBuilder()
    cells: dict[tuple[Simplex, Simplex], Cell] = {}
    used_names: set[str] = set()

    def normal(x: Simplex, y: Simplex) -> Simplex:
        common = set(collapsed_positions(x.degeneracy)) & set(collapsed_positions(y.degeneracy))
        rx, col = _split(x.degeneracy, common)
        ry, _ = _split(y.degeneracy, common)
        return Simplex(cells[(Simplex(x.cell, rx), Simplex(y.cell, ry))], col)

    for n in range(top + 1):
        by_image: dict[Simplex, list[Simplex]] = {}
        for y in C.simplices(n):
            by_image.setdefault(g(y), []).append(y)
        for x in B.simplices(n):
            for y in by_image.get(f(x), []):
                if set(collapsed_positions(x.degeneracy)) & set(collapsed_positions(y.degeneracy)):
                    continue
                faces = [normal(B.face(x, i), C.face(y, i)) for i in range(n + 1)] if n else []
                name = "<{}|{}>".format(B.describe(x), C.describe(y)).replace(".", "~")
                cell = b.add_cell(_fresh(name, used_names), n, faces)
                cells[(x, y)] = cell
                if B.is_marked(x) and C.is_marked(y):
                    b.mark(cell)
    P = b.build(dim_bound=B.dim_bound + C.dim_bound)
    to_b = ComplexMap(P, B, {cell: x for (x, _), cell in cells.items()})
    to_c = ComplexMap(P, C, {cell: y for (_, y), cell in cells.items()})
    return P, to_b, to_c


# ---------------------------------------------------------------- suspension


@dataclass
class Suspension:
    """``Sigma_+ X`` together with the cone it is a quotient of."""

    source: PointedComplex
    cone: JoinResult
    quotient: ComplexMap  # cone -> Sigma_+ X
    pointed: PointedComplex

    def cone_simplex(self, x: Simplex) -> Simplex:
        """The cone simplex ``(pt, x)`` in ``Delta[0] * X``."""
        pt = Simplex.of((0, 0))
        return self.cone.simplex(Simplex(pt.cell, identity(0)), x)

    def suspended(self, x: Simplex) -> Simplex:
        """Image in ``Sigma_+ X`` of the cone simplex on ``x``."""
        return self.quotient(self.cone_simplex(x))


def suspension(X: PointedComplex) -> Suspension:
    join_res = join_with_cells(point(), X.complex)
    cells = join_res.cells
    bottom = (0, 0)
    collapsed = [cells[(None, c)] for c in X.complex.cells()]
    collapsed.append(cells[(bottom, X.base)])  # the edge from the cone point to the base
    P, q = collapse(join_res.complex, collapsed)
    base = q.assignment[cells[(bottom, None)]].cell
    return Suspension(X, join_res, q, PointedComplex(P, base))


def suspend(X: PointedComplex) -> PointedComplex:
    """Reduced (left) suspension: the cone with the copy of X and the edge to its base collapsed."""
    return suspension(X).pointed


def sphere(n: int) -> PointedComplex:
    b = ComplexBuilder()
    b.add_cell("p0", 0)
    b.add_cell("p1", 0)
    S = PointedComplex(b.build(dim_bound=0), (0, 0))
    for _ in range(n):
        S = suspend(S)
    return S


# ------------------------------------------------------------------- décalage


def _decalage_split(z: Simplex) -> tuple[Simplex, SimplicialOperator]:
    """Write ``z = z' . ([0] * rho)`` with ``z'`` not degenerate in any direction but 0."""
    positions = {j for j in collapsed_positions(z.degeneracy) if j >= 1}
    rest, col = _split(z.degeneracy, positions)
    rho = SimplicialOperator(tuple(v - 1 for v in col.values[1:]), col.target_dim - 1)
    return Simplex(z.cell, rest), rho


class _Shifted:
    """Shared machinery for objects whose n-simplices are (n+1)-simplices of Z."""

    def __init__(self, Z: PointedComplex):
        self.ambient = Z
        self._cells: dict[Simplex, Cell] = {}
        self._lifts: dict[Cell, Simplex] = {}

    def to_shifted(self, z: Simplex) -> Simplex:
        key, rho = _decalage_split(z)
        try:
            return Simplex(self._cells[key], rho)
        except KeyError:
            raise ComplexError(f"{self.ambient.complex.describe(z)} is not a simplex here") from None

    def to_ambient(self, w: Simplex) -> Simplex:
        return self.ambient.complex.apply(self._lifts[w.cell], cone_operator(w.degeneracy))

    def _declare(self, b: ComplexBuilder, name: str, dim: int, z: Simplex, marked: bool) -> None:
        Zc = self.ambient.complex
        faces = [self.to_shifted(Zc.face(z, i + 1)) for i in range(dim + 1)] if dim else []
        cell = b.add_cell(name, dim, faces)
        self._cells[z] = cell
        self._lifts[cell] = z
        if marked and dim > 0:
            b.mark(cell)


class LoopSpace(_Shifted):
    """``Omega(Z, a)``: n-simplices are (n+1)-simplices z of Z with ``d_0 z = a^(n)``.

    Faces and degeneracies are those of Z shifted by one; marking is inherited.
    """

    def __init__(self, Z: PointedComplex):
        super().__init__(Z)
        Zc, a = Z.complex, Z.base
        b = ComplexBuilder()
        base_z = totally_degenerate(a, 1)
        self._declare(b, f"s0({Zc.name(a)})", 0, base_z, False)
        for n in range(0, Zc.top_dim):
            target = totally_degenerate(a, n)
            for c in Zc.cells(n + 1):
                z = Simplex.of(c)
                if Zc.face(z, 0) == target:
                    self._declare(b, Zc.name(c), n, z, c in Zc.marked)
        self.pointed = PointedComplex(b.build(dim_bound=max(Zc.dim_bound - 1, 0)), (0, 0))

    @property
    def complex(self) -> MarkedComplex:
        return self.pointed.complex

    def contains(self, z: Simplex) -> bool:
        return self.ambient.complex.face(z, 0) == totally_degenerate(self.ambient.base, z.dim - 1)


def loop_space(Z: PointedComplex) -> LoopSpace:
    return LoopSpace(Z)


def loop(Z: PointedComplex) -> PointedComplex:
    if Z.complex.dim_bound <= 0:
        warnings.warn("loop space of a 0-truncated complex is a point", stacklevel=2)
        return pointed_point()
    return LoopSpace(Z).pointed


class SliceUnder(_Shifted):
    """The slice ``P_a(Z)`` under the base: n-simplices are (n+1)-simplices of Z starting at a.

    An n-simplex (n >= 1) is marked when it and its 0-th face are marked in Z.
    ``projection`` sends z to ``d_0 z``.
    """

    def __init__(self, Z: PointedComplex):
        super().__init__(Z)
        Zc, a = Z.complex, Z.base
        b = ComplexBuilder()
        for n in range(0, Zc.top_dim + 1):
            # s_0 c for n-cells c starting at a
            for c in Zc.cells(n):
                z0 = Simplex.of(c)
                if Zc.vertex(z0, 0).cell != a:
                    continue
                z = Zc.degenerate(z0, 0)
                self._declare(b, f"s0({Zc.name(c)})", n, z, c in Zc.marked)
            for c in Zc.cells(n + 1):
                z = Simplex.of(c)
                if Zc.vertex(z, 0).cell != a:
                    continue
                self._declare(b, Zc.name(c), n, z, c in Zc.marked and Zc.is_marked(Zc.face(z, 0)))
        self.complex = b.build(dim_bound=Zc.dim_bound)
        self.pointed = PointedComplex(self.complex, self._cells[totally_degenerate(a, 1)])

    def projection(self) -> ComplexMap:
        Zc = self.ambient.complex
        return ComplexMap(
            self.complex, Zc, {c: Zc.face(self._lifts[c], 0) for c in self.complex.cells()}
        )


def loop_via_pullback(Z: PointedComplex) -> PointedComplex:
    """Omega computed as the pullback of the slice projection along the base point."""
    S = SliceUnder(Z)
    a = ComplexMap(point(), Z.complex, {(0, 0): Simplex.of(Z.base)})
    P, to_slice, _ = pullback(S.projection(), a)
    base = next(c for c in P.cells(0) if to_slice.assignment[c] == Simplex.of(S.pointed.base))
    return PointedComplex(P, base)


# ---------------------------------------------------------------- adjunction


def transpose_to_loop(S: Suspension, L: LoopSpace, F: ComplexMap) -> ComplexMap:
    """``Sigma_+ X -> Z``  gives  ``X -> Omega Z``: x goes to F of the cone on x."""
    X = S.source.complex
    return ComplexMap(
        X, L.complex, {c: L.to_shifted(F(S.suspended(Simplex.of(c)))) for c in X.cells()}
    )


def transpose_to_suspension(S: Suspension, L: LoopSpace, G: ComplexMap) -> ComplexMap:
    """``X -> Omega Z``  gives  ``Sigma_+ X -> Z``."""
    P = S.pointed
    Z = L.ambient
    assignment = {P.base: Simplex.of(Z.base)}
    for x in S.source.complex.cells():
        image = S.suspended(Simplex.of(x))
        if not image.is_degenerate and image.cell != P.base:
            assignment[image.cell] = L.to_ambient(G.assignment[x])
    return ComplexMap(P.complex, Z.complex, assignment)


@dataclass
class AdjunctionReport:
    left: int  # |Hom_*(Sigma_+ X, Z)|
    right: int  # |Hom_*(X, Omega Z)|
    problems: list[str]

    @property
    def passed(self) -> bool:
        return self.left == self.right and not self.problems


def verify_adjunction(X: PointedComplex, Z: PointedComplex, cap: int | None = 100_000) -> AdjunctionReport:
    """Enumerate both hom-sets and check that transposition is a bijection elementwise."""
    from .core import hom_enumerate

    S = suspension(X)
    L = LoopSpace(Z)
    left = hom_enumerate(S.pointed, Z, cap=cap)
    right = hom_enumerate(X, L.pointed, cap=cap)
    right_set = set(right)
    problems: list[str] = []
    for F in left:
        G = transpose_to_loop(S, L, F)
        if G.diagnostics() or G.assignment[X.base] != Simplex.of(L.pointed.base):
            problems.append(f"transpose of {F.describe()} is not a pointed map")
        elif G not in right_set:
            problems.append(f"transpose of {F.describe()} was not enumerated")
        elif transpose_to_suspension(S, L, G) != F:
            problems.append(f"transposing {F.describe()} twice does not return it")
    left_set = set(left)
    for G in right:
        F = transpose_to_suspension(S, L, G)
        if F.diagnostics():
            problems.append(f"transpose of {G.describe()} is not a valid map")
        elif F not in left_set:
            problems.append(f"transpose of {G.describe()} was not enumerated")
        elif transpose_to_loop(S, L, F) != G:
            problems.append(f"transposing {G.describe()} twice does not return it")
    return AdjunctionReport(len(left), len(right), problems)

"""Finite simplicial sets with marking.

Only nondegenerate cells are stored.  Every simplex is a pair
``(cell, surjection)`` in Eilenberg-Zilber normal form, so two simplices are
equal exactly when their representations are equal.  Degenerate simplices are
marked by rule; the stored marking lives on nondegenerate cells.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .operators import (
    OperatorError,
    SimplicialOperator,
    codegeneracy,
    compose,
    coface,
    ez_decompose,
    identity,
    surjections,
)

Cell = tuple[int, int]  # (dimension, declaration index within that dimension)


class ComplexError(ValueError):
    """A complex or map violates its invariants."""

    def __init__(self, message: str, diagnostics: list[str] | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class CapExceeded(RuntimeError):
    """An enumeration produced more results than its cap allows."""


@dataclass(frozen=True, slots=True)
class Simplex:
    cell: Cell
    degeneracy: SimplicialOperator

    @property
    def dim(self) -> int:
        return self.degeneracy.source_dim

    @property
    def is_degenerate(self) -> bool:
        return self.degeneracy.source_dim != self.degeneracy.target_dim

    @staticmethod
    def of(cell: Cell) -> Simplex:
        return Simplex(cell, identity(cell[0]))


def totally_degenerate(vertex: Cell, n: int) -> Simplex:
    """``v^(n)``: the n-simplex obtained by degenerating the 0-cell ``vertex``."""
    return Simplex(vertex, SimplicialOperator((0,) * (n + 1), 0))


class MarkedComplex:
    """A finite simplicial set with marking, stored in normal form.

    ``names[d]`` lists the nondegenerate d-cells in declaration order,
    ``faces[(d, k)]`` holds ``(d_0 c, ..., d_d c)`` and ``marked`` is the set of
    marked nondegenerate cells.  Instances are treated as immutable; a few
    lookup tables are cached lazily.
    """

    def __init__(
        self,
        names: Iterable[Iterable[str]],
        faces: Mapping[Cell, tuple[Simplex, ...]],
        marked: Iterable[Cell],
        dim_bound: int,
    ):
        self.names: tuple[tuple[str, ...], ...] = tuple(tuple(ns) for ns in names)
        # drop trailing empty dimensions so equal complexes compare equal
        while self.names and not self.names[-1]:
            self.names = self.names[:-1]
        self.faces: dict[Cell, tuple[Simplex, ...]] = dict(faces)
        self.marked: frozenset[Cell] = frozenset(marked)
        self.dim_bound = dim_bound
        self.index: dict[str, Cell] = {}
        for d, ns in enumerate(self.names):
            for k, name in enumerate(ns):
                self.index[name] = (d, k)
        self._apply_cache: dict[tuple[Simplex, SimplicialOperator], Simplex] = {}
        self._simplex_cache: dict[int, list[Simplex]] = {}
        self._face_index: dict[int, dict[tuple[Simplex, ...], list[Simplex]]] = {}
        self._cofaces: dict[Cell, list[Cell]] | None = None

    # ------------------------------------------------------------------ cells

    @property
    def top_dim(self) -> int:
        """Largest dimension carrying a nondegenerate cell (-1 when empty)."""
        return len(self.names) - 1

    def cells(self, d: int | None = None) -> list[Cell]:
        if d is None:
            return [(e, k) for e, ns in enumerate(self.names) for k in range(len(ns))]
        if d < 0 or d >= len(self.names):
            return []
        return [(d, k) for k in range(len(self.names[d]))]

    def cell_count(self, d: int) -> int:
        return len(self.names[d]) if 0 <= d < len(self.names) else 0

    def name(self, cell: Cell) -> str:
        return self.names[cell[0]][cell[1]]

    def cell(self, name: str) -> Cell:
        return self.index[name]

    def simplex(self, name: str) -> Simplex:
        return Simplex.of(self.index[name])

    def has_cell(self, cell: Cell) -> bool:
        d, k = cell
        return 0 <= d < len(self.names) and 0 <= k < len(self.names[d])

    def is_empty(self) -> bool:
        return not self.names

    # ------------------------------------------------------------- simplices

    def apply(self, x: Simplex, op: SimplicialOperator) -> Simplex:
        """Normal form of ``x . op``."""
        key = (x, op)
        hit = self._apply_cache.get(key)
        if hit is not None:
            return hit
        inj, surj = ez_decompose(compose(x.degeneracy, op))
        cell = x.cell
        while not inj.is_identity():
            d = inj.target_dim
            image = set(inj.values)
            i = max(j for j in range(d + 1) if j not in image)
            # inj = coface(d, i) o inj_rest
            inj_rest = SimplicialOperator(tuple(v if v < i else v - 1 for v in inj.values), d - 1)
            try:
                face = self.faces[cell][i]
            except (KeyError, IndexError):
                raise ComplexError(f"cell {self.describe_cell(cell)} has no face {i}") from None
            inj, surj_face = ez_decompose(compose(face.degeneracy, inj_rest))
            surj = compose(surj_face, surj)
            cell = face.cell
        out = Simplex(cell, surj)
        self._apply_cache[key] = out
        return out

    def face(self, x: Simplex, i: int) -> Simplex:
        return self.apply(x, coface(x.dim, i))

    def face_tuple(self, x: Simplex) -> tuple[Simplex, ...]:
        if x.dim == 0:
            return ()
        return tuple(self.face(x, i) for i in range(x.dim + 1))

    def degenerate(self, x: Simplex, i: int) -> Simplex:
        return Simplex(x.cell, compose(x.degeneracy, codegeneracy(x.dim, i)))

    def vertex(self, x: Simplex, j: int) -> Simplex:
        return self.apply(x, SimplicialOperator((j,), x.dim))

    def vertices(self, x: Simplex) -> tuple[Cell, ...]:
        return tuple(self.vertex(x, j).cell for j in range(x.dim + 1))

    def simplices(self, n: int) -> list[Simplex]:
        """All n-simplices, degenerate included, in canonical order."""
        hit = self._simplex_cache.get(n)
        if hit is not None:
            return hit
        out = []
        for e in range(min(n, self.top_dim) + 1):
            surjs = surjections(n, e)
            for cell in self.cells(e):
                out.extend(Simplex(cell, s) for s in surjs)
        self._simplex_cache[n] = out
        return out

    def simplices_by_faces(self, n: int) -> dict[tuple[Simplex, ...], list[Simplex]]:
        """n-simplices grouped by their full face tuple."""
        hit = self._face_index.get(n)
        if hit is not None:
            return hit
        table: dict[tuple[Simplex, ...], list[Simplex]] = defaultdict(list)
        for x in self.simplices(n):
            table[self.face_tuple(x)].append(x)
        table = dict(table)
        self._face_index[n] = table
        return table

    def is_marked(self, x: Simplex) -> bool:
        if x.dim == 0:
            return False
        return x.is_degenerate or x.cell in self.marked

    def cofaces(self, cell: Cell) -> list[Cell]:
        """Higher cells having ``cell`` as the cell of one of their faces."""
        if self._cofaces is None:
            table: dict[Cell, list[Cell]] = defaultdict(list)
            for c in self.cells():
                for f in dict.fromkeys(s.cell for s in self.faces.get(c, ())):
                    table[f].append(c)
            self._cofaces = dict(table)
        return self._cofaces.get(cell, [])

    # --------------------------------------------------------------- display

    def describe_cell(self, cell: Cell) -> str:
        try:
            return self.name(cell)
        except IndexError:
            return f"<missing cell {cell}>"

    def describe(self, x: Simplex) -> str:
        from .operators import degeneracy_word

        word = degeneracy_word(x.degeneracy)
        base = self.describe_cell(x.cell)
        return base + ("." + "".join(f"s{i}" for i in word) if word else "")

    def counts(self) -> list[int]:
        return [len(ns) for ns in self.names]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarkedComplex):
            return NotImplemented
        return (
            self.names == other.names
            and self.faces == other.faces
            and self.marked == other.marked
            and self.dim_bound == other.dim_bound
        )

    def __hash__(self) -> int:
        return hash((self.names, self.marked, self.dim_bound))

    def __repr__(self) -> str:
        return f"MarkedComplex(counts={self.counts()}, marked={len(self.marked)}, dim_bound={self.dim_bound})"


@dataclass(frozen=True)
class PointedComplex:
    complex: MarkedComplex
    base: Cell

    def __post_init__(self) -> None:
        if self.base[0] != 0 or not self.complex.has_cell(self.base):
            raise ComplexError(f"base {self.base} is not a 0-cell")

    def base_simplex(self, n: int) -> Simplex:
        return totally_degenerate(self.base, n)


def apply(x: Simplex, op: SimplicialOperator, X: MarkedComplex) -> Simplex:
    return X.apply(x, op)


def simplices(X: MarkedComplex, n: int) -> list[Simplex]:
    return X.simplices(n)


def is_marked(X: MarkedComplex, x: Simplex) -> bool:
    return X.is_marked(x)


def _underlying(X: MarkedComplex | PointedComplex) -> MarkedComplex:
    return X.complex if isinstance(X, PointedComplex) else X


# ---------------------------------------------------------------- validation


def validate(X: MarkedComplex | PointedComplex) -> list[str]:
    """Return a list of violated invariants; empty means valid."""
    X = _underlying(X)
    problems: list[str] = []
    seen: set[str] = set()
    for d, ns in enumerate(X.names):
        for name in ns:
            if name in seen:
                problems.append(f"duplicate cell name {name}")
            seen.add(name)
    if X.top_dim > X.dim_bound:
        problems.append(f"cells of dimension {X.top_dim} above dim_bound {X.dim_bound}")
    for cell in X.marked:
        if not X.has_cell(cell):
            problems.append(f"marked cell {cell} does not exist")
        elif cell[0] == 0:
            problems.append(f"marked 0-simplex: {X.name(cell)}")
    structural_ok = True
    for cell in X.cells():
        d = cell[0]
        fs = X.faces.get(cell, ())
        name = X.name(cell)
        if d == 0:
            if fs:
                problems.append(f"0-cell {name} has faces")
            continue
        if len(fs) != d + 1:
            problems.append(f"cell {name} has {len(fs)} faces, expected {d + 1}")
            structural_ok = False
            continue
        for i, f in enumerate(fs):
            if f.dim != d - 1 or not X.has_cell(f.cell) or not f.degeneracy.is_surjective():
                problems.append(f"face {i} of {name} is not a valid {d - 1}-simplex")
                structural_ok = False
    if not structural_ok:
        return problems
    for cell in X.cells():
        d = cell[0]
        if d < 2:
            continue
        x = Simplex.of(cell)
        for j in range(d + 1):
            for i in range(j):
                try:
                    lhs = X.face(X.face(x, j), i)
                    rhs = X.face(X.face(x, i), j - 1)
                except (ComplexError, OperatorError) as exc:
                    problems.append(f"cell {X.name(cell)}: {exc}")
                    continue
                if lhs != rhs:
                    problems.append(
                        f"simplicial identity d{i}d{j} = d{j - 1}d{i} fails on {X.name(cell)}: "
                        f"{X.describe(lhs)} != {X.describe(rhs)}"
                    )
    return problems


def check_valid(X: MarkedComplex | PointedComplex) -> None:
    problems = validate(X)
    if problems:
        raise ComplexError(problems[0], problems)


class ComplexBuilder:
    """Incrementally declare cells; ``build`` validates the result."""

    def __init__(self) -> None:
        self._names: list[list[str]] = []
        self._faces: dict[Cell, tuple[Simplex, ...]] = {}
        self._marked: set[Cell] = set()
        self._index: dict[str, Cell] = {}

    def add_cell(self, name: str, dim: int, faces: Iterable[Simplex] = ()) -> Cell:
        if name in self._index:
            raise ComplexError(f"duplicate cell name {name}")
        while len(self._names) <= dim:
            self._names.append([])
        cell = (dim, len(self._names[dim]))
        self._names[dim].append(name)
        self._index[name] = cell
        if dim > 0:
            self._faces[cell] = tuple(faces)
        return cell

    def mark(self, cell: Cell | str) -> None:
        if isinstance(cell, str):
            cell = self._index[cell]
        self._marked.add(cell)

    def cell(self, name: str) -> Cell:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def build(self, dim_bound: int | None = None, check: bool = True) -> MarkedComplex:
        top = len(self._names) - 1
        X = MarkedComplex(self._names, self._faces, self._marked, top if dim_bound is None else dim_bound)
        if check:
            check_valid(X)
        return X


# ---------------------------------------------------------------------- maps


@dataclass(eq=False)
class ComplexMap:
    source: MarkedComplex
    target: MarkedComplex
    assignment: dict[Cell, Simplex] = field(default_factory=dict)

    def __call__(self, x: Simplex) -> Simplex:
        return self.target.apply(self.assignment[x.cell], x.degeneracy)

    def key(self) -> tuple[tuple[Cell, Simplex], ...]:
        return tuple(sorted(self.assignment.items(), key=lambda kv: kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexMap):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.key())

    def then(self, other: ComplexMap) -> ComplexMap:
        """``other o self``."""
        return ComplexMap(self.source, other.target, {c: other(x) for c, x in self.assignment.items()})

    def diagnostics(self) -> list[str]:
        X, Y = self.source, self.target
        problems = []
        for cell in X.cells():
            y = self.assignment.get(cell)
            if y is None:
                problems.append(f"cell {X.name(cell)} unassigned")
                continue
            if y.dim != cell[0] or not Y.has_cell(y.cell):
                problems.append(f"cell {X.name(cell)} sent to a simplex of the wrong dimension")
                continue
            if cell in X.marked and not Y.is_marked(y):
                problems.append(f"marked cell {X.name(cell)} sent to unmarked {Y.describe(y)}")
        if problems:
            return problems
        for cell in X.cells():
            x = Simplex.of(cell)
            for i in range(cell[0] + 1 if cell[0] else 0):
                lhs = self(X.face(x, i))
                rhs = Y.face(self.assignment[cell], i)
                if lhs != rhs:
                    problems.append(
                        f"map does not commute with d{i} on {X.name(cell)}: "
                        f"{Y.describe(lhs)} != {Y.describe(rhs)}"
                    )
        return problems

    def is_valid(self) -> bool:
        return not self.diagnostics()

    def is_injective(self) -> bool:
        images = list(self.assignment.values())
        return all(not y.is_degenerate for y in images) and len(set(images)) == len(images)

    def is_isomorphism(self) -> bool:
        """Bijective on cells, and marking is reflected as well as preserved."""
        X, Y = self.source, self.target
        if not self.is_injective() or len(self.assignment) != len(Y.cells()):
            return False
        return all((c in X.marked) == (y.cell in Y.marked) for c, y in self.assignment.items())

    def describe(self) -> str:
        return ", ".join(
            f"{self.source.name(c)}->{self.target.describe(y)}" for c, y in sorted(self.assignment.items())
        )


def identity_map(X: MarkedComplex) -> ComplexMap:
    return ComplexMap(X, X, {c: Simplex.of(c) for c in X.cells()})


# ------------------------------------------------------------ map enumeration


def extend_maps(
    source: MarkedComplex,
    target: MarkedComplex,
    fixed: Mapping[Cell, Simplex] | None = None,
    *,
    cap: int | None = None,
    first_only: bool = False,
    injective: bool = False,
    reflect_marking: bool = False,
) -> list[ComplexMap]:
    """Enumerate marking-preserving maps ``source -> target`` extending ``fixed``.

    Free cells are assigned in canonical order (increasing dimension) by
    backtracking.  Candidates for a d-cell are looked up by the images of its
    faces, and as soon as every face cell of some (d+1)-cell is assigned the
    search checks that the (d+1)-cell still has a candidate.
    """
    fixed = dict(fixed or {})
    assignment: dict[Cell, Simplex] = dict(fixed)
    results: list[ComplexMap] = []

    def image(x: Simplex) -> Simplex:
        return target.apply(assignment[x.cell], x.degeneracy)

    def candidates(cell: Cell) -> list[Simplex]:
        d = cell[0]
        if d == 0:
            pool = target.simplices(0)
        else:
            key = tuple(image(f) for f in source.faces[cell])
            pool = target.simplices_by_faces(d).get(key, [])
        marked = cell in source.marked
        if marked:
            pool = [y for y in pool if target.is_marked(y)]
        if injective:
            pool = [y for y in pool if not y.is_degenerate]
        if reflect_marking and not marked:
            pool = [y for y in pool if not target.is_marked(y)]
        return pool

    def face_cells(cell: Cell) -> set[Cell]:
        return {f.cell for f in source.faces.get(cell, ())}

    def ready_and_fillable(cell: Cell) -> bool:
        for up in source.cofaces(cell):
            if up in assignment:
                continue
            if all(c in assignment for c in face_cells(up)) and not candidates(up):
                return False
        return True

    # fixed cells must themselves be consistent with the source's faces and marking
    for cell, y in fixed.items():
        if y.dim != cell[0]:
            raise ComplexError(f"fixed image of {source.name(cell)} has wrong dimension")
        if cell in source.marked and not target.is_marked(y):
            return []
        if cell[0] > 0 and all(f.cell in fixed for f in source.faces[cell]):
            if target.face_tuple(y) != tuple(image(f) for f in source.faces[cell]):
                return []
    for cell in fixed:
        if not ready_and_fillable(cell):
            return []

    free = [c for c in source.cells() if c not in fixed]
    used: set[Simplex] = set(fixed.values()) if injective else set()

    def rec(pos: int) -> bool:
        if pos == len(free):
            results.append(ComplexMap(source, target, dict(assignment)))
            if cap is not None and len(results) > cap:
                raise CapExceeded(f"more than {cap} maps {source!r} -> {target!r}")
            return first_only
        cell = free[pos]
        for y in candidates(cell):
            if injective and y in used:
                continue
            assignment[cell] = y
            if injective:
                used.add(y)
            if ready_and_fillable(cell) and rec(pos + 1):
                return True
            if injective:
                used.discard(y)
            del assignment[cell]
        return False

    rec(0)
    return results


def hom_enumerate(
    X: MarkedComplex | PointedComplex,
    Y: MarkedComplex | PointedComplex,
    cap: int | None = 100_000,
) -> list[ComplexMap]:
    """All (pointed, when both inputs are pointed) marking-preserving maps X -> Y."""
    fixed = {}
    if isinstance(X, PointedComplex) and isinstance(Y, PointedComplex):
        fixed[X.base] = Simplex.of(Y.base)
    return extend_maps(_underlying(X), _underlying(Y), fixed, cap=cap)


def find_isomorphism(
    X: MarkedComplex | PointedComplex, Y: MarkedComplex | PointedComplex
) -> ComplexMap | None:
    """An isomorphism of marked complexes (pointed if both are), or None."""
    A, B = _underlying(X), _underlying(Y)
    if A.counts() != B.counts():
        return None
    if [len([c for c in A.marked if c[0] == d]) for d in range(len(A.names))] != [
        len([c for c in B.marked if c[0] == d]) for d in range(len(B.names))
    ]:
        return None
    fixed = {}
    if isinstance(X, PointedComplex) and isinstance(Y, PointedComplex):
        fixed[X.base] = Simplex.of(Y.base)
    found = extend_maps(A, B, fixed, first_only=True, injective=True, reflect_marking=True)
    return found[0] if found else None

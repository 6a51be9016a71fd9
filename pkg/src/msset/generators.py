"""Monoid tables and the fibrant test objects built from them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .core import Cell, ComplexBuilder, PointedComplex, Simplex
from .operators import SimplicialOperator

_NAME = re.compile(r"^[A-Za-z0-9_+\-]+$")


class MonoidError(ValueError):
    pass


@dataclass(frozen=True)
class MonoidTable:
    elements: tuple[str, ...]
    unit: str
    table: dict[tuple[str, str], str] = field(hash=False, compare=True)

    def __post_init__(self) -> None:
        els = set(self.elements)
        if len(els) != len(self.elements):
            raise MonoidError("duplicate monoid elements")
        for e in self.elements:
            if not _NAME.match(e):
                raise MonoidError(f"element name {e!r} must match {_NAME.pattern}")
        if self.unit not in els:
            raise MonoidError(f"unit {self.unit!r} is not an element")
        for a, b in product(self.elements, repeat=2):
            c = self.table.get((a, b))
            if c is None:
                raise MonoidError(f"missing product {a}*{b}")
            if c not in els:
                raise MonoidError(f"product {a}*{b} = {c} is not an element")
        for a in self.elements:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise MonoidError(f"{self.unit} is not a two-sided unit for {a}")
        for a, b, c in product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise MonoidError(f"not associative at ({a}, {b}, {c})")

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def invertible(self) -> frozenset[str]:
        u = self.unit
        return frozenset(
            a for a in self.elements if any(self.mul(a, b) == u and self.mul(b, a) == u for b in self.elements)
        )

    def is_commutative(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a) for a, b in product(self.elements, repeat=2))

    def is_group(self) -> bool:
        return len(self.invertible) == len(self.elements)

    def opposite(self) -> MonoidTable:
        return MonoidTable(self.elements, self.unit, {(a, b): c for (b, a), c in self.table.items()})


def cyclic_group(n: int) -> MonoidTable:
    els = tuple(str(i) for i in range(n))
    return MonoidTable(els, "0", {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)})


def symmetric_group(n: int = 3) -> MonoidTable:
    """Permutations of 1..n in one-line notation; ``p*q`` is ``p`` after ``q``."""
    perms = list(permutations(range(1, n + 1)))
    name = lambda p: "".join(map(str, p))  # noqa: E731
    table = {}
    for p in perms:
        for q in perms:
            table[(name(p), name(q))] = name(tuple(p[q[i] - 1] for i in range(n)))
    return MonoidTable(tuple(name(p) for p in perms), name(tuple(range(1, n + 1))), table)


def idempotent_monoid() -> MonoidTable:
    """``{1, e}`` with ``e*e = e``."""
    t = {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"}
    return MonoidTable(("1", "e"), "1", t)


def trivial_monoid() -> MonoidTable:
    return MonoidTable(("1",), "1", {("1", "1"): "1"})


# ----------------------------------------------------------------------- nerve


def _tuple_name(entries) -> str:
    return "(" + ",".join(entries) + ")"


def tuple_simplex(M: MonoidTable, cells: dict[tuple[str, ...], Cell], t: tuple[str, ...]) -> Simplex:
    """Normal form of the nerve simplex with edge labels ``t``; unit labels are degenerate."""
    keep = tuple(x for x in t if x != M.unit)
    vals = [0]
    for x in t:
        vals.append(vals[-1] + (0 if x == M.unit else 1))
    return Simplex(cells[keep], SimplicialOperator(tuple(vals), len(keep)))


def nerve_faces(M: MonoidTable, t: tuple[str, ...]) -> list[tuple[str, ...]]:
    k = len(t)
    out = [t[1:]]
    for i in range(1, k):
        out.append(t[: i - 1] + (M.mul(t[i - 1], t[i]),) + t[i + 1 :])
    out.append(t[:-1])
    return out


def nerve_of_monoid(M: MonoidTable, d: int, mark_all_1: bool = False) -> PointedComplex:
    """One-vertex nerve truncated at dimension ``d``.

    Every cell of dimension >= 2 is marked; an edge is marked iff its label is
    invertible (or always, with ``mark_all_1``).
    """
    if d < 2:
        raise ValueError("nerve dimension must be >= 2")
    non_unit = [x for x in M.elements if x != M.unit]
    inv = M.invertible
    b = ComplexBuilder()
    cells: dict[tuple[str, ...], Cell] = {(): b.add_cell("*", 0)}
    for k in range(1, d + 1):
        for t in product(non_unit, repeat=k):
            faces = [tuple_simplex(M, cells, f) for f in nerve_faces(M, t)]
            cells[t] = b.add_cell(_tuple_name(t), k, faces)
            if k >= 2 or mark_all_1 or t[0] in inv:
                b.mark(cells[t])
    return PointedComplex(b.build(dim_bound=d), (0, 0))


# ---------------------------------------------------------------- cocycle nerve


def _triangles(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n + 1), 3))


def cocycles(M: MonoidTable, n: int) -> list[dict[tuple[int, int, int], str]]:
    """All labellings c of the triangles of [n] with ``c(jkl) c(ijl) = c(ikl) c(ijk)``."""
    tris = _triangles(n)
    quads = list(combinations(range(n + 1), 4))
    by_last: dict[tuple[int, int, int], list[tuple[int, int, int, int]]] = {t: [] for t in tris}
    position = {t: p for p, t in enumerate(tris)}
    for q in quads:
        i, j, k, l = q  # noqa: E741
        last = max((j, k, l), (i, j, l), (i, k, l), (i, j, k), key=position.__getitem__)
        by_last[last].append(q)
    out = []
    c: dict[tuple[int, int, int], str] = {}

    def ok(q) -> bool:
        i, j, k, l = q  # noqa: E741
        return M.mul(c[(j, k, l)], c[(i, j, l)]) == M.mul(c[(i, k, l)], c[(i, j, k)])

    def rec(p: int) -> None:
        if p == len(tris):
            out.append(dict(c))
            return
        t = tris[p]
        for m in M.elements:
            c[t] = m
            if all(ok(q) for q in by_last[t]):
                rec(p + 1)
        del c[t]

    rec(0)
    return out


def _restrict(c: dict, n: int, keep: tuple[int, ...]) -> tuple[str, ...]:
    """Labels of the sub-simplex on vertices ``keep`` in triangle order."""
    return tuple(c[(keep[a], keep[b], keep[e])] for a, b, e in _triangles(len(keep) - 1))


def cocycle_normal_form(M: MonoidTable, n: int, labels: tuple[str, ...]) -> tuple[tuple[str, ...], SimplicialOperator]:
    """Split an n-simplex into a nondegenerate labelling and a surjection."""
    tris = _triangles(n)
    c = dict(zip(tris, labels))
    collapsible = []
    for i in range(n):
        # c is s_i of something iff triangles through i, i+1 are units and
        # swapping i <-> i+1 does not change the label
        good = True
        for t, m in c.items():
            if i in t and i + 1 in t:
                if m != M.unit:
                    good = False
                    break
            elif i in t:
                other = tuple(sorted(i + 1 if v == i else v for v in t))
                if c[other] != m:
                    good = False
                    break
        if good:
            collapsible.append(i)
    vals = [0]
    for p in range(1, n + 1):
        vals.append(vals[-1] + (0 if p - 1 in collapsible else 1))
    keep = []
    for p in range(n + 1):
        if p == 0 or vals[p] != vals[p - 1]:
            keep.append(p)
    return _restrict(c, n, tuple(keep)), SimplicialOperator(tuple(vals), vals[-1])


def cocycle_nerve(M: MonoidTable, d: int) -> PointedComplex:
    """One-vertex complex of triangle labellings satisfying the tetrahedron cocycle law.

    Faces restrict along vertex deletion; repeated-vertex triangles carry the unit.
    Cells of dimension >= 3 are marked; a 2-cell is marked iff its label is invertible.
    """
    if d < 3:
        raise ValueError("cocycle nerve dimension must be >= 3")
    if not M.is_commutative():
        raise MonoidError("cocycle nerve needs a commutative monoid")
    inv = M.invertible
    b = ComplexBuilder()
    cells: dict[tuple[int, tuple[str, ...]], Cell] = {(0, ()): b.add_cell("*", 0)}

    def simplex_of(n: int, labels: tuple[str, ...]) -> Simplex:
        core, op = cocycle_normal_form(M, n, labels)
        return Simplex(cells[(op.target_dim, core)], op)

    # [1] has no triangles: its unique 1-simplex is the degenerate edge
    for n in range(2, d + 1):
        tris = _triangles(n)
        for c in cocycles(M, n):
            labels = tuple(c[t] for t in tris)
            core, op = cocycle_normal_form(M, n, labels)
            if op.target_dim != n:
                continue
            faces = []
            for i in range(n + 1):
                keep = tuple(v for v in range(n + 1) if v != i)
                faces.append(simplex_of(n - 1, _restrict(c, n, keep)))
            cell = b.add_cell("c[" + ",".join(labels) + "]", n, faces)
            cells[(n, labels)] = cell
            if n >= 3 or labels[0] in inv:
                b.mark(cell)
    return PointedComplex(b.build(dim_bound=d), (0, 0))

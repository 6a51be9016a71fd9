"""Monotone maps between finite ordinals.

A ``SimplicialOperator`` with ``values = (v0, ..., vn)`` and ``target_dim = m``
is the monotone map ``[n] -> [m]`` sending ``i`` to ``vi``.  Simplices are
acted on from the right: ``x . op`` has dimension ``op.source_dim``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations


class OperatorError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class SimplicialOperator:
    values: tuple[int, ...]
    target_dim: int

    def __post_init__(self) -> None:
        vals = self.values
        for a, b in zip(vals, vals[1:]):
            if a > b:
                raise OperatorError(f"operator {vals} is not monotone")
        if vals and (vals[0] < 0 or vals[-1] > self.target_dim):
            raise OperatorError(f"operator {vals} leaves [0, {self.target_dim}]")

    @property
    def source_dim(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and self.values == tuple(range(len(self.values)))

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target_dim + 1

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    def __repr__(self) -> str:
        return f"Op({list(self.values)}->[{self.target_dim}])"


@lru_cache(maxsize=None)
def identity(n: int) -> SimplicialOperator:
    return SimplicialOperator(tuple(range(n + 1)), n)


@lru_cache(maxsize=None)
def coface(n: int, i: int) -> SimplicialOperator:
    """The injection ``[n-1] -> [n]`` missing ``i``."""
    if not 0 <= i <= n or n < 1:
        raise OperatorError(f"no coface {i} into [{n}]")
    return SimplicialOperator(tuple(j if j < i else j + 1 for j in range(n)), n)


@lru_cache(maxsize=None)
def codegeneracy(n: int, i: int) -> SimplicialOperator:
    """The surjection ``[n+1] -> [n]`` hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise OperatorError(f"no codegeneracy {i} onto [{n}]")
    return SimplicialOperator(tuple(j if j <= i else j - 1 for j in range(n + 2)), n)


def compose(g: SimplicialOperator, f: SimplicialOperator) -> SimplicialOperator:
    """Return ``g o f``."""
    if f.target_dim != g.source_dim:
        raise OperatorError(
            f"cannot compose {g!r} after {f!r}: dimension {f.target_dim} != {g.source_dim}"
        )
    gv = g.values
    return SimplicialOperator(tuple(gv[v] for v in f.values), g.target_dim)


def ez_decompose(op: SimplicialOperator) -> tuple[SimplicialOperator, SimplicialOperator]:
    """Factor ``op`` as ``injection o surjection`` (unique)."""
    image = sorted(set(op.values))
    position = {v: k for k, v in enumerate(image)}
    surj = SimplicialOperator(tuple(position[v] for v in op.values), len(image) - 1)
    inj = SimplicialOperator(tuple(image), op.target_dim)
    return inj, surj


def monotone_maps(n: int, m: int) -> list[SimplicialOperator]:
    """All monotone maps ``[n] -> [m]`` in lexicographic order."""
    out: list[SimplicialOperator] = []

    def rec(prefix: list[int], lo: int) -> None:
        if len(prefix) == n + 1:
            out.append(SimplicialOperator(tuple(prefix), m))
            return
        for v in range(lo, m + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    return out


@lru_cache(maxsize=None)
def surjections(n: int, e: int) -> tuple[SimplicialOperator, ...]:
    """All monotone surjections ``[n] -> [e]``, lexicographic by values."""
    if e > n or e < 0:
        return ()
    ops = []
    # a surjection is determined by the positions 1..n where its value steps up
    for steps in combinations(range(1, n + 1), e):
        vals = []
        v = 0
        step_set = set(steps)
        for i in range(n + 1):
            if i in step_set:
                v += 1
            vals.append(v)
        ops.append(SimplicialOperator(tuple(vals), e))
    ops.sort(key=lambda s: s.values)
    return tuple(ops)


@lru_cache(maxsize=None)
def injections(e: int, n: int) -> tuple[SimplicialOperator, ...]:
    return tuple(SimplicialOperator(c, n) for c in combinations(range(n + 1), e + 1))


def collapsed_positions(surj: SimplicialOperator) -> list[int]:
    """Indices ``j`` with ``surj(j) == surj(j+1)``, ascending."""
    v = surj.values
    return [j for j in range(len(v) - 1) if v[j] == v[j + 1]]


def degeneracy_word(surj: SimplicialOperator) -> list[int]:
    """Indices of the ``s_i`` word for a surjection, outermost first.

    ``x . surj == s_{w[0]} s_{w[1]} ... s_{w[-1]} x``; the word is strictly
    decreasing, which makes it canonical.
    """
    if not surj.is_surjective():
        raise OperatorError(f"{surj!r} is not surjective")
    return sorted(collapsed_positions(surj), reverse=True)


def word_operator(word: list[int], base_dim: int) -> SimplicialOperator:
    """Surjection for ``s_{w[0]} ... s_{w[-1]}`` applied to a ``base_dim``-simplex."""
    op = identity(base_dim)
    dim = base_dim
    for i in reversed(word):
        if not 0 <= i <= dim:
            raise OperatorError(f"s{i} is not defined on a {dim}-simplex")
        # (x . op) . sigma^i = x . (op o sigma^i)
        op = compose(op, codegeneracy(dim, i))
        dim += 1
    return op


def join_operators(
    left: SimplicialOperator | None, right: SimplicialOperator | None
) -> SimplicialOperator:
    """Ordinal sum ``left * right``; ``None`` stands for the empty map ``[-1] -> [-1]``."""
    lv = left.values if left is not None else ()
    lt = left.target_dim if left is not None else -1
    rv = right.values if right is not None else ()
    rt = right.target_dim if right is not None else -1
    return SimplicialOperator(tuple(lv) + tuple(lt + 1 + v for v in rv), lt + rt + 1)


def cone_operator(op: SimplicialOperator) -> SimplicialOperator:
    """``[0] * op``: fixes the new vertex 0 and shifts ``op`` up by one."""
    return SimplicialOperator((0,) + tuple(v + 1 for v in op.values), op.target_dim + 1)

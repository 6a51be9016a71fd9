from itertools import product

from hypothesis import given
from hypothesis import strategies as st
import pytest

from msset.operators import (
    OperatorError,
    SimplicialOperator,
    codegeneracy,
    coface,
    compose,
    degeneracy_word,
    ez_decompose,
    identity,
    injections,
    monotone_maps,
    surjections,
    word_operator,
)


def pointwise(g, f):
    # oracle: evaluate g(f(i)) by hand
    return tuple(g.values[f.values[i]] for i in range(len(f.values)))


def test_compose_coface_after_codegeneracy():
    g, f = coface(2, 0), codegeneracy(1, 0)  # delta^0: [1]->[2], sigma^0: [2]->[1]
    assert compose(g, f).values == (1, 1, 2)
    assert compose(g, f).values == pointwise(g, f)


def test_compose_section_is_identity():
    assert compose(codegeneracy(0, 0), coface(1, 1)) == identity(0)


def test_compose_dimension_mismatch():
    with pytest.raises(OperatorError):
        compose(coface(1, 0), coface(2, 0))


def test_operator_must_be_monotone():
    with pytest.raises(OperatorError):
        SimplicialOperator((1, 0), 1)


@pytest.mark.parametrize("n", range(0, 4))
def test_ez_decomposition_examples(n):
    inj, surj = ez_decompose(identity(n))
    assert inj.is_identity() and surj.is_identity()
    inj, surj = ez_decompose(codegeneracy(n, 0))
    assert inj.is_identity() and surj == codegeneracy(n, 0)


def test_ez_roundtrip_all_small_operators():
    for n, m in product(range(6), repeat=2):
        for op in monotone_maps(n, m):
            inj, surj = ez_decompose(op)
            assert inj.is_injective() and surj.is_surjective()
            assert compose(inj, surj) == op


def test_ez_uniqueness_brute_force():
    for n, m in product(range(4), repeat=2):
        for op in monotone_maps(n, m):
            found = [
                (i, s)
                for e in range(min(n, m) + 1)
                for s in surjections(n, e)
                for i in injections(e, m)
                if compose(i, s) == op
            ]
            assert found == [ez_decompose(op)]


def test_counts_match_binomials():
    from math import comb

    for n in range(6):
        for m in range(6):
            assert len(monotone_maps(n, m)) == comb(n + m + 1, n + 1)
        for e in range(n + 1):
            surj = [op for op in monotone_maps(n, e) if op.is_surjective()]
            assert list(surjections(n, e)) == sorted(surj, key=lambda o: o.values)
            assert len(surj) == comb(n, e)


def test_word_roundtrip():
    for n in range(6):
        for e in range(n + 1):
            for s in surjections(n, e):
                assert word_operator(degeneracy_word(s), e) == s


ops = st.integers(0, 5).flatmap(
    lambda n: st.integers(0, 5).flatmap(
        lambda m: st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1).map(
            lambda v: SimplicialOperator(tuple(sorted(v)), m)
        )
    )
)


@given(ops, st.data())
def test_composition_is_associative(f, data):
    g = data.draw(st.lists(st.integers(0, 4), min_size=f.target_dim + 1, max_size=f.target_dim + 1))
    g = SimplicialOperator(tuple(sorted(g)), 4)
    h = data.draw(st.lists(st.integers(0, 3), min_size=5, max_size=5))
    h = SimplicialOperator(tuple(sorted(h)), 3)
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(g, f).values == pointwise(g, f)


@given(ops)
def test_identity_laws(op):
    assert compose(identity(op.target_dim), op) == op
    assert compose(op, identity(op.source_dim)) == op


def test_cosimplicial_identities():
    for n in range(1, 6):
        for i in range(n + 1 if n >= 2 else 0):
            for j in range(i + 1, n + 1):
                # delta^j delta^i = delta^i delta^(j-1)
                assert compose(coface(n, j), coface(n - 1, i)) == compose(coface(n, i), coface(n - 1, j - 1))
        for i in range(n):
            assert compose(codegeneracy(n - 1, i), coface(n, i)) == identity(n - 1)
            assert compose(codegeneracy(n - 1, i), coface(n, i + 1)) == identity(n - 1)

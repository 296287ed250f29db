"""Property tests against naive loop implementations."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from mvkit import (
    boolean_center,
    chain,
    classify_map,
    direct_product,
    find_isomorphism,
    ideals,
    parse_algebra,
    quotient,
    serialize_algebra,
    validate_axioms,
)
from mvkit.catalog import relabel
from mvkit.structure import fix_mv_canonical

factors = st.lists(st.integers(2, 5), min_size=1, max_size=3).filter(lambda ns: np.prod(ns) <= 16)
algebras = factors.map(lambda ns: direct_product(*[chain(n) for n in ns]))


def naive_ops(A):
    n = A.order
    neg = [int(v) for v in A.neg]
    add = [[int(v) for v in row] for row in A.oplus]
    mul = [[neg[add[neg[x]][neg[y]]] for y in range(n)] for x in range(n)]
    return n, neg, add, mul


@settings(max_examples=40, deadline=None)
@given(algebras, st.data())
def test_derivation_flag_matches_loops(A, data):
    n, neg, add, mul = naive_ops(A)
    d = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    expect = all(d[mul[x][y]] == add[mul[d[x]][y]][mul[x][d[y]]] for x in range(n) for y in range(n))
    additive = expect and all(d[add[x][y]] == add[d[x]][d[y]] for x in range(n) for y in range(n))
    c = classify_map(A, d)
    assert c.is_derivation == expect
    assert c.is_additive == additive


@settings(max_examples=30, deadline=None)
@given(algebras)
def test_products_are_mv_algebras(A):
    assert validate_axioms(A).passed


@settings(max_examples=30, deadline=None)
@given(algebras)
def test_round_trip(A):
    text = serialize_algebra(A)
    assert serialize_algebra(parse_algebra(text)) == text
    assert parse_algebra(text) == A


@settings(max_examples=25, deadline=None)
@given(algebras, st.randoms(use_true_random=False))
def test_relabelling_is_found(A, rnd):
    perm = [0] + rnd.sample(range(1, A.order), A.order - 1)
    B = relabel(A, perm)
    assert validate_axioms(B).passed
    m = find_isomorphism(A, B)
    assert m is not None and m.is_isomorphism


@settings(max_examples=25, deadline=None)
@given(algebras, st.data())
def test_quotient_by_any_ideal(A, data):
    I = data.draw(st.sampled_from(ideals(A)))
    q = quotient(A, I)
    assert validate_axioms(q.algebra).passed
    assert q.algebra.order * len(I) == A.order


@settings(max_examples=30, deadline=None)
@given(algebras, st.data())
def test_boolean_split_cardinality(A, data):
    a = data.draw(st.sampled_from(list(boolean_center(A))))
    assert len(fix_mv_canonical(A, a, "d")) * len(fix_mv_canonical(A, a, "d_star")) == A.order
    assert len(fix_mv_canonical(A, a, "g")) * len(fix_mv_canonical(A, a, "g_star")) == A.order

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from binmat.gf2 import (
    Gf2Matrix,
    NotABasis,
    PivotOnNonEdge,
    bits,
    columns_from_graph,
    fundamental_graph,
    in_span,
    pivot,
    rank_of_vectors,
    reduce_columns,
    rref,
    standard_form,
)
from binmat.matroid import BinaryMatroid

from .conftest import binary_matroids


def span_size(vecs):
    """Brute force: the number of distinct sums of subsets."""
    seen = {0}
    for v in vecs:
        seen |= {s ^ v for s in seen}
    return len(seen)


def numpy_rank(m: Gf2Matrix) -> int:
    a = np.array(m.to_lists(), dtype=np.uint8) if m.n_rows else np.zeros((0, m.n_cols), np.uint8)
    r = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=1, max_size=6)
)


@given(matrices)
def test_rank_matches_span_size_and_numpy(data):
    m = Gf2Matrix.from_lists(data)
    r = m.rank()
    assert 1 << r == span_size(m.rows)
    assert r == numpy_rank(m)
    assert r == rank_of_vectors(m.columns())


@given(matrices)
def test_rref_is_reduced_and_row_equivalent(data):
    m = Gf2Matrix.from_lists(data)
    R, pivots = rref(m)
    assert len(pivots) == m.rank()
    for i, p in enumerate(pivots):
        assert R.entry(i, p) == 1
        assert all(R.entry(k, p) == 0 for k in range(R.n_rows) if k != i)
    nonzero = [row for row in R.rows if row]
    assert span_size(nonzero) == span_size(m.rows)


@given(st.lists(st.integers(0, 63), max_size=8), st.integers(0, 63))
def test_in_span_brute_force(vecs, v):
    sums = {0}
    for u in vecs:
        sums |= {s ^ u for s in sums}
    assert in_span(v, vecs) == (v in sums)


@given(st.lists(st.integers(0, 31), min_size=1, max_size=9))
def test_reduce_columns_coordinates_rebuild_columns(cols):
    rank, basis, coords = reduce_columns(cols)
    assert rank == len(basis) == rank_of_vectors(cols)
    for j, c in enumerate(cols):
        s = 0
        for k in bits(coords[j]):
            s ^= cols[basis[k]]
        assert s == c


@given(binary_matroids(min_rank=1, max_rank=4, max_size=7))
def test_standard_form_has_identity_on_basis(M):
    if M.rank == 0:
        return
    S, B, C = standard_form(M.rep(), M.labels)
    for i in range(len(B)):
        assert S.columns()[i] == 1 << i
    assert rank_of_vectors(S.columns()) == M.rank
    # same matroid: a set is independent in both or neither
    order = B + C
    for k in range(1, min(4, M.size) + 1):
        for combo in combinations(range(M.size), k):
            names = [order[i] for i in combo]
            assert rank_of_vectors(S.columns()[i] for i in combo) == M.rank_of(names)


def test_standard_form_rejects_dependent_basis():
    m = Gf2Matrix.from_lists([[1, 1, 0], [0, 0, 1]])
    with pytest.raises(NotABasis):
        standard_form(m, ["a", "b", "c"], basis=["a", "b"])


def test_bits_and_gf2matrix_validation():
    assert bits(0b101001) == [0, 3, 5]
    with pytest.raises(ValueError):
        Gf2Matrix(1, 2, (0b111,))


@given(binary_matroids(min_rank=2, max_rank=4, min_size=3, max_size=7), st.data())
def test_pivot_gives_graph_of_exchanged_basis(M, data):
    if M.rank == 0:
        return
    B = M.basis()
    G = fundamental_graph(M, B)
    edges = G.edges()
    if not edges:
        return
    x, y = data.draw(st.sampled_from(edges))
    B2 = [u for u in B if u != x] + [y]
    assert pivot(M, B, x, y).same_as(fundamental_graph(M, B2))


@given(binary_matroids(min_rank=1, max_rank=4, max_size=7))
def test_columns_from_graph_round_trip(M):
    if M.rank == 0:
        return
    G = fundamental_graph(M, M.basis())
    labels, cols = columns_from_graph(G)
    assert BinaryMatroid.from_columns(labels, cols).same(M)


def test_pivot_on_non_edge_raises():
    M = BinaryMatroid.from_columns(["a", "b", "c"], [1, 2, 1])
    with pytest.raises(PivotOnNonEdge):
        pivot(M, ["a", "b"], "b", "c")

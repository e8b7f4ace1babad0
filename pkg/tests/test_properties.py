"""Randomised property suites, each checked against a direct computation or brute force."""
from __future__ import annotations

import random

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from binmat.catalog import pg32
from binmat.deltawye import delta_y, wye_delta
from binmat.isomin import (
    blocking_conditions,
    canonical_form,
    find_blocking_sequence,
    has_minor,
    induced_minor,
    induces_separation,
    is_isomorphic,
)
from binmat.matroid import BinaryMatroid, is_3connected, is_cocircuit, lam, si_co

from .conftest import binary_matroids, brute_has_minor, brute_isomorphic


def coindependent(M: BinaryMatroid, names) -> bool:
    return M.rank_of(M.full & ~M.mask(names)) == M.rank


@st.composite
def with_triangles(draw, count=1):
    """Random matroid whose first 3*count labels form disjoint coindependent triangles."""
    r = 2 * count + draw(st.integers(0, 2))
    cols, labels = [], []
    for k in range(count):
        a, b = 1 << (2 * k), 1 << (2 * k + 1)
        cols += [a, b, a | b]
        labels += [f"t{k}{j}" for j in range(3)]
    extra = draw(st.lists(st.integers(0, (1 << r) - 1), min_size=1, max_size=5))
    cols += extra
    labels += [f"x{i}" for i in range(len(extra))]
    M = BinaryMatroid.from_columns(labels, cols)
    # parallel copies make every triangle coindependent
    for k in range(count):
        T = labels[3 * k: 3 * k + 3]
        if not coindependent(M, T):
            for u in T:
                M = M.extend(u + "p", M.col(u))
    return M


def tri(k):
    return [f"t{k}{j}" for j in range(3)]


# ---------------------------------------------------------------------------
# connectivity function

@given(binary_matroids(max_size=9), st.data())
def test_lambda_symmetric(M, data):
    m = data.draw(st.integers(0, M.full))
    assert lam(M, m) == lam(M, M.full & ~m)
    assert lam(M, m) == lam(M.dual(), m)


@given(binary_matroids(max_size=9), st.data())
def test_lambda_submodular(M, data):
    x = data.draw(st.integers(0, M.full))
    y = data.draw(st.integers(0, M.full))
    assert lam(M, x) + lam(M, y) >= lam(M, x & y) + lam(M, x | y)


# ---------------------------------------------------------------------------
# Delta-Y

@settings(max_examples=150)
@given(with_triangles())
def test_delta_y_identities(M):
    T = tri(0)
    D = delta_y(M, T)
    assert D.rank == M.rank + 1
    assert is_cocircuit(D, T)
    assert D.delete(T).same(M.delete(T))
    assert D.contract(T).same(M.contract(T))
    for e in T:
        a, b = [u for u in T if u != e]
        want = M.delete([e]).relabel({a: b, b: a})
        got = D.contract([e])
        assert got.same(want.reorder(got.labels))


@settings(max_examples=150)
@given(with_triangles())
def test_wye_delta_inverts_delta_y(M):
    T = tri(0)
    D = delta_y(M, T)
    assert wye_delta(D, T).same(M)
    assert delta_y(wye_delta(D, T), T).same(D)


@settings(max_examples=100)
@given(with_triangles(count=2))
def test_delta_y_commutes_on_disjoint_triangles(M):
    S, T = tri(0), tri(1)
    assume(coindependent(M, S) and coindependent(M, T))
    a = delta_y(delta_y(M, S), T)
    b = delta_y(delta_y(M, T), S)
    assert a.same(b.reorder(a.labels))


# ---------------------------------------------------------------------------
# Bixby's dichotomy on 3-connected restrictions of PG(3,2)

@settings(max_examples=60)
@given(st.sets(st.integers(0, 14), min_size=7, max_size=12))
def test_bixby_dichotomy(points):
    P = pg32()
    M = P.restrict([P.labels[i] for i in sorted(points)])
    assume(M.rank == 4 and is_3connected(M))
    for e in M.labels:
        a, _ = si_co(M.contract([e]), "simplify")
        b, _ = si_co(M.delete([e]), "cosimplify")
        assert is_3connected(a) or is_3connected(b)


# ---------------------------------------------------------------------------
# blocking sequences

def random_instance(rng: random.Random):
    """(M, B, X, Y, k) with (X, Y) an exact k-separation of M[X u Y, B]; at most 11 elements."""
    while True:
        r = rng.randint(2, 5)
        n = rng.randint(r + 2, 11 if r > 3 else 8)
        M = BinaryMatroid.from_columns([f"x{i}" for i in range(n)], [rng.randrange(1, 1 << r) for _ in range(n)])
        if M.rank < 2:
            continue
        labels = list(M.labels)
        rng.shuffle(labels)
        B = M.reorder(labels).basis()
        rng.shuffle(labels)
        s = rng.randint(2, n - 1)
        cut = rng.randint(1, s - 1)
        X, Y = labels[:cut], labels[cut:s]
        N = induced_minor(M, B, X + Y)
        k = lam(N, N.mask(X)) + 1
        if min(len(X), len(Y)) >= k:
            return M, B, X, Y, k


def test_blocking_sequence_equivalence():
    rng = random.Random(6)
    tally = {"blocked": 0, "induced": 0}
    for _ in range(200):
        M, B, X, Y, k = random_instance(rng)
        seq = find_blocking_sequence(M, B, X, Y, k)
        sep = induces_separation(M, X, Y, k)
        assert (seq is None) == (sep is not None)
        if seq is None:
            tally["induced"] += 1
        else:
            assert blocking_conditions(M, B, X, Y, k, seq)
            tally["blocked"] += 1
    assert tally["blocked"] and tally["induced"]


# ---------------------------------------------------------------------------
# canonical forms and minors against brute force

@settings(max_examples=100)
@given(binary_matroids(max_rank=3, max_size=6), binary_matroids(max_rank=3, max_size=6))
def test_canonical_form_matches_brute_force(A, B):
    same = canonical_form(A) == canonical_form(B)
    assert same == brute_isomorphic(A, B)
    m = is_isomorphic(A, B)
    assert (m is not None) == same
    if m is not None:
        assert A.relabel(m).reorder(B.labels).same(B)


@settings(max_examples=150)
@given(binary_matroids(min_rank=2, max_rank=4, min_size=5, max_size=9), binary_matroids(min_rank=1, max_rank=3, min_size=2, max_size=5))
def test_has_minor_matches_brute_force(M, N):
    w = has_minor(M, N)
    assert (w is not None) == brute_has_minor(M, N)
    if w is not None:
        assert w.check(M, N)

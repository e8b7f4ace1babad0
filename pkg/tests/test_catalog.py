from __future__ import annotations

from itertools import combinations

import pytest

from binmat.catalog import (
    CENSUS_IDS,
    SPORADIC_IDS,
    BadRank,
    UnknownId,
    bond_matroid,
    by_name,
    census,
    cubic_ladder,
    delta4_plus,
    fano,
    fano_dual,
    fano_lines,
    graphic_source,
    mobius,
    pg32,
    quartic_ladder,
    sporadic,
    triangle_families,
)
from binmat.isomin import has_minor, is_cographic, is_isomorphic
from binmat.matroid import (
    is_circuit,
    is_cocircuit,
    triads,
    triangles,
)

# (rank, size) of every census entry
EXPECTED = {
    "delta_3": (3, 7), "upsilon_4": (4, 7), "delta_4": (4, 10), "mk5": (4, 10),
    "c11": (4, 11), "m4_11": (4, 11), "c12": (4, 12), "d12": (4, 12),
    "m4_13": (4, 13), "m4_14": (4, 14), "pg32": (4, 15),
    "m5_11": (5, 11), "t12_contract": (5, 11), "m5_12a": (5, 12), "m5_12b": (5, 12),
    "delta_5": (5, 13), "m5_13": (5, 13), "upsilon_6": (6, 11), "t12": (6, 12),
    "m6_13": (6, 13), "delta_6": (6, 16), "m7_15": (7, 15), "delta_7": (7, 19),
    "upsilon_8": (8, 15), "m9_18": (9, 18), "upsilon_10": (10, 19), "m11_21": (11, 21),
}

K33 = graphic_source("mk33")


# ---------------------------------------------------------------------------
# Mobius families

@pytest.mark.parametrize("r", range(3, 9))
def test_triangular_mobius_size_and_labels(r):
    D = mobius("triangular", r)
    assert (D.rank, D.size) == (r, 3 * r - 2)
    want = {f"e{i}" for i in range(1, r + 1)} | {f"a{i}" for i in range(1, r)} | {f"b{i}" for i in range(1, r)}
    assert set(D.labels) == want


@pytest.mark.parametrize("r", [4, 6, 8, 10])
def test_triadic_mobius_size_and_triads(r):
    U = mobius("triadic", r)
    assert (U.rank, U.size) == (r, 2 * r - 1)
    assert triangles(U) == [] or r == 4
    # every c_i sits in a triad
    for i in range(1, r):
        assert any(f"c{i}" in U.names(t) for t in triads(U))


def test_mobius_columns():
    D = mobius("triangular", 5)
    assert D.col("a2") == D.col("e2") ^ D.col("e5")
    assert D.col("b4") == D.col("e1") ^ D.col("e4") ^ D.col("e5")
    U = mobius("triadic", 6)
    assert U.col("c2") == U.col("e2") ^ U.col("e3") ^ U.col("e6")
    assert U.col("c5") == U.col("e1") ^ U.col("e5") ^ U.col("e6")


def test_small_mobius_are_fano_and_dual():
    assert is_isomorphic(mobius("triangular", 3), fano()) is not None
    assert is_isomorphic(mobius("triadic", 4), fano_dual()) is not None


def test_bad_ranks():
    with pytest.raises(BadRank):
        mobius("triangular", 2)
    with pytest.raises(BadRank):
        mobius("triadic", 5)
    with pytest.raises(BadRank):
        quartic_ladder(4)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_delta_minus_e_r_is_cubic_ladder_bond(r):
    D = mobius("triangular", r).delete([f"e{r}"])
    L = bond_matroid(cubic_ladder(2 * r - 2))
    assert is_isomorphic(D, L) is not None


@pytest.mark.parametrize("r", [4, 6, 8])
def test_upsilon_contract_e_r_is_wheel(r):
    U = mobius("triadic", r).contract([f"e{r}"])
    assert is_isomorphic(U, graphic_source("wheel", r - 1)) is not None


@pytest.mark.parametrize("r", [6, 8])
def test_upsilon_minus_e_r_is_quartic_ladder_bond(r):
    U = mobius("triadic", r).delete([f"e{r}"])
    assert is_isomorphic(U, graphic_source("quartic_ladder_bond", r - 1)) is not None


@pytest.mark.parametrize("r", [4, 5, 6])
def test_mobius_matroids_avoid_mk33(r):
    assert has_minor(mobius("triangular", r), K33) is None
    if r % 2 == 0:
        assert has_minor(mobius("triadic", r), K33) is None


@pytest.mark.parametrize("r", [4, 5, 6, 7])
def test_contracting_any_spoke_gives_smaller_delta(r):
    from binmat.matroid import si_co

    D = mobius("triangular", r)
    for i in range(1, r):
        S, _ = si_co(D.contract([f"b{i}"]))
        assert S.size == D.size - 3
        assert is_isomorphic(S, mobius("triangular", r - 1)) is not None


# ---------------------------------------------------------------------------
# Delta_4 plus and projective sources

def test_delta4_plus_has_quad_and_contracts_to_delta4():
    P = delta4_plus()
    Q = ["a1", "a2", "b1", "e5"]
    assert is_circuit(P, Q) and is_cocircuit(P, Q)
    assert P.contract(["e5"]).same(mobius("triangular", 4))
    assert has_minor(P, K33) is None


def test_delta4_plus_is_the_only_quad_coextension():
    D = mobius("triangular", 4)
    Q = ["a1", "a2", "b1", "e5"]
    distinct = []
    for row in range(1 << D.size):
        X = D.coextend_by_row("e5", row)
        if X.rank == 5 and is_circuit(X, Q) and is_cocircuit(X, Q):
            if not any(X.same(Y) for Y in distinct):
                distinct.append(X)
    assert len(distinct) == 1
    assert distinct[0].same(delta4_plus().reorder(distinct[0].labels))


def test_pg32_has_fifteen_points_and_35_lines():
    P = pg32()
    assert (P.rank, P.size) == (4, 15)
    assert len(triangles(P)) == 35


def test_c12_and_d12_from_pg32():
    P = pg32()
    lines = [set(P.names(t)) for t in triangles(P)]
    line = sorted(lines[0])
    assert is_isomorphic(P.delete(line), sporadic("c12")) is not None
    off = next(t for t in combinations(P.labels, 3) if set(t) not in lines)
    assert is_isomorphic(P.delete(list(off)), sporadic("d12")) is not None
    assert is_isomorphic(sporadic("c12"), sporadic("d12")) is None


def test_t12_is_upsilon6_plus_sum_column():
    U = mobius("triadic", 6)
    col = 0
    for i in range(1, 6):
        col ^= U.col(f"e{i}")
    X = U.extend("x", col)
    assert is_isomorphic(X, sporadic("t12")) is not None
    assert triangles(sporadic("t12")) == []


def test_mk33_and_mk5():
    K = graphic_source("mk33")
    assert (K.rank, K.size) == (5, 9) and triangles(K) == []
    M = graphic_source("mk5")
    assert (M.rank, M.size) == (4, 10) and len(triangles(M)) == 10


def test_fano_lines_are_triangles():
    F = fano()
    assert sorted(map(sorted, fano_lines())) == sorted(sorted(F.names(t)) for t in triangles(F))


def test_triangle_families_shapes():
    fam = triangle_families()
    # 4a: three lines through one point; 4b: no three concurrent
    def concurrent(lines):
        return any(len(set.intersection(*map(set, c))) for c in combinations(lines, 3))

    assert concurrent(fam["4a"])
    assert not concurrent(fam["4b"])
    assert [len(fam[k]) for k in ("4a", "4b", "5", "6", "7")] == [4, 4, 5, 6, 7]


# ---------------------------------------------------------------------------
# sporadic matroids and the census

@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_catalog_rank_and_size(name):
    M = by_name(name)
    assert (M.rank, M.size) == EXPECTED[name]


def test_census_has_27_rows_with_18_sporadic():
    ids = [n for n, _ in CENSUS_IDS]
    assert len(ids) == 27 and set(ids) == set(EXPECTED)
    assert len(SPORADIC_IDS) == 18
    kinds = [k for _, k in CENSUS_IDS]
    assert kinds.count("triangular") == 5 and kinds.count("triadic") == 4


def test_census_flags():
    rows = census()
    assert all(r.internally_4connected for r in rows)
    not_v4c = sorted(r.name for r in rows if not r.vertically_4connected)
    # only the triadic family and one sporadic matroid have triads
    assert [n for n in not_v4c if n in SPORADIC_IDS] == ["m5_11"]
    assert {n for n in not_v4c if n not in SPORADIC_IDS} <= {"upsilon_4", "upsilon_6", "upsilon_8", "upsilon_10"}
    row = next(r for r in rows if r.name == "m5_11")
    assert row.triads == 1


@pytest.mark.parametrize("name", ["c11", "m4_11", "m5_11", "t12_contract", "m5_12a", "m5_12b", "m5_13", "m6_13"])
def test_small_sporadics_avoid_mk33_and_are_not_cographic(name):
    M = sporadic(name)
    assert has_minor(M, K33) is None
    assert not is_cographic(M)


def test_sporadics_pairwise_non_isomorphic():
    ms = [sporadic(n) for n in SPORADIC_IDS]
    for a, b in combinations(range(len(ms)), 2):
        A, B = ms[a], ms[b]
        if (A.rank, A.size) == (B.rank, B.size):
            assert is_isomorphic(A, B) is None


def test_c11_and_m4_11_triangle_counts():
    assert len(triangles(sporadic("c11"))) == 12
    assert len(triangles(sporadic("m4_11"))) == 13


def test_unknown_ids():
    with pytest.raises(UnknownId):
        sporadic("nope")
    with pytest.raises(UnknownId):
        by_name("delta")
    with pytest.raises(UnknownId):
        graphic_source("wheel")

from __future__ import annotations

import pytest
from hypothesis import given, settings

from binmat.catalog import delta4_plus, fano, fano_dual, graphic_source, mobius, sporadic
from binmat.gen import (
    GenFilter,
    IsAWheel,
    NotFound,
    candidates,
    generate,
    generate_labelled,
    is_splitter,
    is_wheel,
    reduce_step,
)
from binmat.isomin import has_minor, is_isomorphic
from binmat.matroid import connectivity_report, is_3connected

from .conftest import binary_matroids, brute_isomorphic

K33 = graphic_source("mk33")
FREE = GenFilter(three_connected=True, excluded=(K33,))


def brute_classes(ms):
    reps = []
    for X in ms:
        if not any(brute_isomorphic(X, Y) for Y in reps):
            reps.append(X)
    return reps


# ---------------------------------------------------------------------------
# generation

@settings(max_examples=25)
@given(binary_matroids(min_rank=2, max_rank=3, min_size=3, max_size=5))
def test_generate_matches_brute_force_class_count(M):
    for direction in ("extend", "coextend"):
        allx = candidates(M, direction)
        assert len(generate(M, direction)) == len(brute_classes(allx))
        want = [X for X in allx if is_3connected(X)]
        got = generate(M, direction, GenFilter(three_connected=True))
        assert len(got) == len(brute_classes(want))
        assert all(is_3connected(X) for X in got)


@settings(max_examples=20)
@given(binary_matroids(min_rank=2, max_rank=3, min_size=3, max_size=6))
def test_generate_duality(M):
    f = GenFilter(simple=True)
    a = generate(M, "coextend", GenFilter(cosimple=True))
    b = [X.dual() for X in generate(M.dual(), "extend", f)]
    assert len(a) == len(b)
    for X in a:
        assert any(is_isomorphic(X, Y) is not None for Y in b)


def test_delta4_has_two_free_extensions():
    got = generate(mobius("triangular", 4), "extend", FREE)
    assert len(got) == 2
    names = set()
    for X in got:
        for n in ("c11", "m4_11"):
            if is_isomorphic(X, sporadic(n)) is not None:
                names.add(n)
    assert names == {"c11", "m4_11"}


def test_delta5_has_no_free_extension():
    assert generate(mobius("triangular", 5), "extend", FREE) == []


def test_delta5_free_coextensions():
    D = mobius("triangular", 5)
    labelled = generate_labelled(D, "coextend", FREE)
    classes = generate(D, "coextend", FREE)
    assert len(labelled) == 24
    assert len(classes) == len(brute_classes_fast(labelled))


def brute_classes_fast(ms):
    reps = []
    for X in ms:
        if not any(is_isomorphic(X, Y) is not None for Y in reps):
            reps.append(X)
    return reps


def test_delta4_free_coextensions_labelled():
    # quad-free coextension count used by the Delta_4 plus argument
    D = mobius("triangular", 4)
    xs = generate_labelled(D, "coextend", FREE)
    assert all(has_minor(X, K33) is None and is_3connected(X) for X in xs)
    assert any(is_isomorphic(X, delta4_plus()) is not None for X in xs)


def test_generate_marks_new_element():
    F = fano()
    plain = generate(F, "extend")
    marked = generate(F, "extend", mark_new=True)
    assert len(marked) >= len(plain)


def test_generate_required_minor_filter():
    f = GenFilter(three_connected=True, required=(fano(),))
    xs = generate(mobius("triangular", 4), "extend", f)
    assert xs and all(has_minor(X, fano()) is not None for X in xs)


def test_bad_direction():
    with pytest.raises(ValueError):
        candidates(fano(), "sideways")


# ---------------------------------------------------------------------------
# splitters

def test_t12_is_splitter_for_mk33_and_delta4():
    assert is_splitter(sporadic("t12"), [K33, mobius("triangular", 4)])


def test_mk5_is_splitter_for_fano_family():
    assert is_splitter(graphic_source("mk5"), [fano(), fano_dual(), K33])


def test_delta4_is_not_splitter_for_mk33():
    assert not is_splitter(mobius("triangular", 4), [K33])


def test_wheel_is_refused():
    W = graphic_source("wheel", 4)
    assert is_wheel(W)
    with pytest.raises(IsAWheel):
        is_splitter(W, [K33])


# ---------------------------------------------------------------------------
# reduction steps

def test_reduce_delta7_to_delta6():
    M, N = mobius("triangular", 7), mobius("triangular", 6)
    res = reduce_step(M, N)
    assert M.size - res.result.size <= 4
    assert connectivity_report(res.result).is_internally_4connected
    assert has_minor(res.result, N) is not None


def test_reduce_m9_18_to_m7_15_drops_three():
    M, N = sporadic("m9_18"), sporadic("m7_15")
    res = reduce_step(M, N)
    assert res.shape == "iii"
    assert M.size - res.result.size == 3
    assert is_isomorphic(res.result, N) is not None


def test_reduce_same_matroid_not_found():
    with pytest.raises(NotFound):
        reduce_step(mobius("triangular", 5), mobius("triangular", 5))

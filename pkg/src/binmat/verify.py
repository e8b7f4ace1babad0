"""Registry of executable checks on the catalog, and a classifier for matroids with no M(K3,3)-minor.

Each check recomputes a count or verdict from scratch and compares it with
the expected value. Checks run in forked processes under a time budget.
"""
from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .catalog import (
    CENSUS_IDS,
    SPORADIC_IDS,
    by_name,
    census,
    delta4_plus,
    fano,
    fano_lines,
    graphic_source,
    mobius,
    sporadic,
)
from .deltawye import (
    allowable_triangles,
    delta_multi,
    delta_y,
    four_cocircuits_in,
    legitimate_sets,
)
from .gen import GenFilter, candidates, generate, generate_labelled, is_splitter
from .isomin import canonical_form, has_minor, is_cographic, is_isomorphic
from .matroid import (
    BinaryMatroid,
    closure,
    connectivity_report,
    is_3connected,
    is_cocircuit,
    is_quad,
    triads,
    triangles,
)

__all__ = [
    "Check",
    "CheckReport",
    "REGISTRY",
    "UnknownCheckId",
    "Verdict",
    "check_ids",
    "classify",
    "run_checks",
]


class UnknownCheckId(KeyError):
    """A requested check id is not in the registry."""


@dataclass(frozen=True)
class CheckReport:
    id: str
    anchor: str
    expected: object
    computed: object
    passed: bool
    seconds: float
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.id} {status} {self.seconds:7.1f}s  {self.anchor}"

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "note": self.note,
        }


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    budget: float
    fn: Callable[[], Tuple[object, object, str]]


REGISTRY: Dict[str, Check] = {}


def _check(cid: str, anchor: str, budget: float = 60.0):
    def wrap(fn):
        REGISTRY[cid] = Check(cid, anchor, budget, fn)
        return fn

    return wrap


def check_ids() -> List[str]:
    return sorted(REGISTRY)


# ---------------------------------------------------------------------------
# shared helpers

def _k33() -> BinaryMatroid:
    return graphic_source("mk33")


def _has_k33(X: BinaryMatroid) -> bool:
    return has_minor(X, _k33()) is not None


def _free() -> GenFilter:
    """3-connected with no M(K3,3)-minor."""
    return GenFilter(three_connected=True, excluded=(_k33(),))


_NAMES: Dict[bytes, str] = {}


def _name_of(X: BinaryMatroid) -> Optional[str]:
    """Census id of a matroid isomorphic to X, if any."""
    if not _NAMES:
        for name, _ in CENSUS_IDS:
            _NAMES[canonical_form(by_name(name))] = name
        _NAMES[canonical_form(delta4_plus())] = "delta4_plus"
    return _NAMES.get(canonical_form(X))


def _label(X: BinaryMatroid) -> str:
    name = _name_of(X)
    return name if name is not None else f"unlisted_r{X.rank}_n{X.size}"


def _outcome(X: BinaryMatroid, names: Sequence[str] = ()) -> str:
    """"k33" when X has an M(K3,3)-minor, else a matching name from names, else "other"."""
    if _has_k33(X):
        return "k33"
    name = _name_of(X)
    if name in names:
        return name
    return "other"


def _triad_coext(M: BinaryMatroid, label: str, pair: Sequence[str]) -> BinaryMatroid:
    """Coextension by label making {label} together with pair a triad."""
    return M.coextend_by_row(label, M.mask(list(pair)))


def _sum_ext(M: BinaryMatroid, label: str, others: Sequence[str]) -> BinaryMatroid:
    """Extension by label whose column is the sum of the columns of others."""
    v = 0
    for u in others:
        v ^= M.col(u)
    return M.extend(label, v)


def _tname(M: BinaryMatroid, t) -> str:
    names = M.names(t) if isinstance(t, int) else list(t)
    return ",".join(sorted(names))


def _tris_with(M: BinaryMatroid, labels: Sequence[str]) -> List[int]:
    m = M.mask(list(labels))
    return [t for t in triangles(M) if t & m == m]


def _contains_cocircuit(M: BinaryMatroid, m: int) -> bool:
    idx = [i for i in range(M.size) if m >> i & 1]
    for k in range(1, len(idx) + 1):
        for combo in combinations(idx, k):
            if is_cocircuit(M, sum(1 << i for i in combo)):
                return True
    return False


def _is_v4c(X: BinaryMatroid) -> bool:
    return connectivity_report(X).is_vertically_4connected


def _is_i4c(X: BinaryMatroid) -> bool:
    return connectivity_report(X).is_internally_4connected


_SWEEP_EXCLUDED = ("m7_15", "m9_18", "m11_21")
_SMALL_SPORADICS = tuple(n for n in SPORADIC_IDS if n not in _SWEEP_EXCLUDED)
_INTERSECTING = (
    "mk5", "c11", "m4_11", "c12", "d12", "m4_13", "m4_14", "pg32",
    "m5_11", "t12_contract", "m5_12a", "m5_12b", "m5_13",
)


def _sweep(source: BinaryMatroid, plan: Sequence[str]) -> Tuple[List[int], set]:
    """Iterate generate() along plan under _free(); collect ids of internally 4-connected results."""
    f = _free()
    level = [source]
    sizes = []
    found = set()
    for direction in plan:
        nxt: Dict[bytes, BinaryMatroid] = {}
        for M in level:
            for X in generate(M, direction, f, "x"):
                nxt.setdefault(canonical_form(X), X)
        level = list(nxt.values())
        sizes.append(len(level))
        for X in level:
            if _is_i4c(X):
                found.add(_label(X))
    return sizes, found


# ---------------------------------------------------------------------------
# census and single-matroid facts

_TABLE = {
    "delta_3": (3, 7), "upsilon_4": (4, 7), "delta_4": (4, 10), "mk5": (4, 10),
    "c11": (4, 11), "m4_11": (4, 11), "c12": (4, 12), "d12": (4, 12),
    "m4_13": (4, 13), "m4_14": (4, 14), "pg32": (4, 15),
    "m5_11": (5, 11), "t12_contract": (5, 11), "m5_12a": (5, 12), "m5_12b": (5, 12),
    "delta_5": (5, 13), "m5_13": (5, 13), "upsilon_6": (6, 11), "t12": (6, 12),
    "m6_13": (6, 13), "delta_6": (6, 16), "m7_15": (7, 15), "delta_7": (7, 19),
    "upsilon_8": (8, 15), "m9_18": (9, 18), "upsilon_10": (10, 19), "m11_21": (11, 21),
}


@_check("V01", "census of 27 internally 4-connected matroids; M5,11 is the only sporadic one not vertically 4-connected", 60)
def _v01():
    rows = census(with_flags=True)
    computed = {
        "entries": len(rows),
        "sporadic": sum(1 for r in rows if r.kind == "sporadic"),
        "rank_size": {r.name: [r.rank, r.size] for r in rows},
        "internally_4connected": sum(1 for r in rows if r.internally_4connected),
        "sporadic_not_v4c_triads": {
            r.name: r.triads for r in rows if r.kind == "sporadic" and not r.vertically_4connected
        },
    }
    expected = {
        "entries": 27,
        "sporadic": 18,
        "rank_size": {k: list(v) for k, v in _TABLE.items()},
        "internally_4connected": 27,
        "sporadic_not_v4c_triads": {"m5_11": 1},
    }
    return expected, computed, ""


@_check("V02", "no sporadic matroid has an M(K3,3)-minor", 120)
def _v02():
    computed = {n: _has_k33(sporadic(n)) for n in SPORADIC_IDS}
    return {n: False for n in SPORADIC_IDS}, computed, ""


@_check("V03", "T12 is the only 3-connected one-element growth of T12\\e or T12/e avoiding M(K3,3) and Delta_4", 60)
def _v03():
    T = sporadic("t12")
    x = T.labels[0]
    f = GenFilter(three_connected=True, excluded=(_k33(), mobius("triangular", 4)))
    computed = {}
    for key, base in (("deletion", T.delete([x])), ("contraction", T.contract([x]))):
        out = set()
        for d in ("extend", "coextend"):
            out.update(_label(X) for X in generate(base, d, f))
        computed[key] = sorted(out)
    return {"deletion": ["t12"], "contraction": ["t12"]}, computed, ""


@_check("V04", "splitters: T12 for ex(M(K3,3), Delta_4) and M(K5) for ex(F7, F7*, M(K3,3))", 120)
def _v04():
    computed = {
        "t12": is_splitter(sporadic("t12"), [_k33(), mobius("triangular", 4)]),
        "mk5": is_splitter(graphic_source("mk5"), [fano(), fano().dual(), _k33()]),
    }
    return {"t12": True, "mk5": True}, computed, ""


@_check("V05", "Delta-Y on the triangle {a1,e1,e4} of Delta_4 creates an M(K3,3)-minor", 60)
def _v05():
    D = mobius("triangular", 4)
    return True, _has_k33(delta_y(D, ["a1", "e1", "e4"])), ""


@_check("V06", "two Delta-Y exchanges on Delta_4 with b1 doubled create an M(K3,3)-minor", 60)
def _v06():
    D = mobius("triangular", 4)
    N = D.extend("b1'", D.col("b1"))
    X = delta_y(delta_y(N, ["a1", "a2", "b1'"]), ["b1", "e1", "e2"])
    return True, _has_k33(X), ""


@_check("V07", "Delta-Y on three non-concurrent Fano lines gives Delta_4* with an M(K3,3)-minor", 60)
def _v07():
    F = fano()
    lines = fano_lines()
    triple = next(c for c in combinations(lines, 3) if not set(c[0]) & set(c[1]) & set(c[2]))
    X = delta_multi(F, list(triple))
    computed = {
        "dual_of_delta_4": is_isomorphic(X, mobius("triangular", 4).dual()) is not None,
        "has_k33": _has_k33(X),
    }
    return {"dual_of_delta_4": True, "has_k33": True}, computed, f"lines {triple}"


@_check("V08", "Delta-Y on each allowable triangle of M4,11 gives M5,11; larger legitimate sets create M(K3,3)", 120)
def _v08():
    M = sporadic("m4_11")
    allow = allowable_triangles(M)
    single = [_label(delta_y(M, t)) for t in allow]
    multi = [_has_k33(delta_multi(M, S)) for S in legitimate_sets(M, allow) if len(S) >= 2]
    computed = {"single": single, "multi_sets": len(multi), "multi_all_k33": all(multi)}
    expected = {"single": ["m5_11"] * 3, "multi_sets": len(multi), "multi_all_k33": True}
    return expected, computed, f"{len(multi)} legitimate sets of two or more triangles"


# ---------------------------------------------------------------------------
# Delta_4 plus

_QUAD = ("a1", "a2", "b1", "e5")


@_check("V09", "Delta_4 plus: M(K3,3)-free, and the only coextension of Delta_4 with the quad {a1,a2,b1,e5}", 60)
def _v09():
    P = delta4_plus()
    D = mobius("triangular", 4)
    with_quad = [X for X in candidates(D, "coextend", "e5") if is_quad(X, list(_QUAD))]
    computed = {
        "k33_free": not _has_k33(P),
        "quad": is_quad(P, list(_QUAD)),
        "quad_coextensions": len(with_quad),
        "equals_catalog": len(with_quad) == 1 and with_quad[0].same(P),
    }
    expected = {"k33_free": True, "quad": True, "quad_coextensions": 1, "equals_catalog": True}
    return expected, computed, ""


@_check("V10", "every 3-connected growth of Delta_4 plus that breaks the quad has an M(K3,3)-minor", 300)
def _v10():
    P = delta4_plus()
    f = GenFilter(three_connected=True)
    seen: Dict[bytes, bool] = {}
    counts = {}
    free = 0
    for d in ("extend", "coextend"):
        xs = [X for X in generate_labelled(P, d, f, "x") if not is_quad(X, list(_QUAD))]
        counts[d] = len(xs)
        for X in xs:
            key = canonical_form(X)
            if key not in seen:
                seen[key] = _has_k33(X)
            if not seen[key]:
                free += 1
    note = f"{counts['extend']} extensions, {counts['coextend']} coextensions break the quad"
    return 0, free, note


# ---------------------------------------------------------------------------
# triadic Mobius extensions

@_check("V11", "triadic Mobius extensions by the all-ones and all-but-last columns at ranks 4, 6, 8", 120)
def _v11():
    out = {}
    for r in (4, 6, 8):
        U = mobius("triadic", r)
        es = [f"e{i}" for i in range(1, r + 1)]
        full = _sum_ext(U, "e", es)
        part = _sum_ext(U, "e", es[:-1])
        if r == 4:
            out["r4_v4c"] = [_is_v4c(full), _is_v4c(part)]
        elif r == 6:
            out["r6_all_ones"] = _outcome(full, ["t12"])
            out["r6_all_but_last"] = _outcome(part, ["t12"])
        else:
            out["r8"] = [_outcome(full), _outcome(part)]
    expected = {"r4_v4c": [False, False], "r6_all_ones": "k33", "r6_all_but_last": "t12", "r8": ["k33", "k33"]}
    return expected, out, ""


# ---------------------------------------------------------------------------
# growths of triangular Mobius matroids

@_check("V12", "3-connected M(K3,3)-free extensions: Delta_4 has two classes (C11, M4,11), Delta_5 none", 60)
def _v12():
    computed = {}
    for r in (4, 5):
        computed[f"delta_{r}"] = sorted(_label(X) for X in generate(mobius("triangular", r), "extend", _free()))
    return {"delta_4": ["c11", "m4_11"], "delta_5": []}, computed, ""


def _coext_shapes(r: int) -> Dict[str, List[frozenset]]:
    """The six families of cocircuit shapes C* - e for coextensions of Delta_r."""
    a = lambda i: f"a{i}"
    b = lambda i: f"b{i}"
    S: Dict[str, List[frozenset]] = {"i": []}
    for i in range(1, r - 1):
        for k in (2, 3):
            S["i"] += [frozenset(c) for c in combinations([a(i), a(i + 1), b(i)], k)]
    S["ii"] = [frozenset([a(i + 1), a(i + 2), b(i), b(i + 2)]) for i in range(1, r - 2)]
    S["ii"].append(frozenset([a(1), a(2), b(2), b(r - 1)]))
    S["iii"] = [frozenset([a(i + 1), a(i + 2), b(i), b(i + 1), b(i + 2)]) for i in range(1, r - 2)]
    S["iii"].append(frozenset([a(1), a(2), b(1), b(2), b(r - 1)]))
    S["iv"] = [frozenset([a(1), b(r - 1)]), frozenset([a(r - 1), b(r - 1)])]
    S["v"] = [frozenset([a(1), a(r - 1), b(1)]), frozenset([a(1), a(r - 1), b(r - 2)])]
    S["vi"] = [frozenset([a(1), a(r - 1), b(1), b(r - 1)]), frozenset([a(1), a(r - 1), b(r - 2), b(r - 1)])]
    return S


def _rim_cocircuit(X: BinaryMatroid, r: int) -> frozenset:
    """The cocircuit through e avoiding e1..er, minus e."""
    B = [f"e{i}" for i in range(1, r + 1)]
    return frozenset(X.names(X.full & ~closure(X, B))) - {"e"}


@_check("V13", "Delta_5 has 24 labelled M(K3,3)-free 3-connected coextensions, each of one of six cocircuit shapes", 120)
def _v13():
    r = 5
    xs = generate_labelled(mobius("triangular", r), "coextend", _free(), "e")
    shapes = _coext_shapes(r)
    hist: Dict[str, int] = {}
    unmatched = 0
    for X in xs:
        c = _rim_cocircuit(X, r)
        hit = [k for k, v in shapes.items() if c in v]
        if not hit:
            unmatched += 1
        for k in hit:
            hist[k] = hist.get(k, 0) + 1
    note = "shape counts " + ", ".join(f"{k}:{v}" for k, v in sorted(hist.items()))
    return {"count": 24, "unmatched": 0}, {"count": len(xs), "unmatched": unmatched}, note


@_check("V14", "four rank-6 coextensions of Delta_6 with a prescribed rim cocircuit all have M(K3,3)-minors", 120)
def _v14():
    D = mobius("triangular", 6)
    base = ["a2", "a3", "b1", "b3", "b4", "b5"]
    out = []
    for k in range(3):
        for extra in combinations(["a5", "b2"], k):
            out.append(_has_k33(_triad_coext(D, "e", base + list(extra))))
    return [True] * 4, out, ""


@_check("V15", "Delta_4 has 21 labelled M(K3,3)-free 3-connected coextensions, each M5,11 or tied to an allowable triangle", 60)
def _v15():
    D = mobius("triangular", 4)
    allow = [D.names(t) for t in allowable_triangles(D)]
    xs = generate_labelled(D, "coextend", _free(), "e")
    failing = 0
    m511 = 0
    for X in xs:
        if _name_of(X) == "m5_11":
            m511 += 1
            continue
        ok = False
        for T in allow:
            if is_quad(X, T + ["e"]):
                ok = True
            elif any(is_cocircuit(X, X.mask(list(p) + ["e"])) for p in combinations(T, 2)):
                ok = True
        if not ok:
            failing += 1
    classes = len({canonical_form(X) for X in xs})
    note = f"{classes} isomorphism classes; {m511} isomorphic to M5,11"
    return {"count": 21, "failing": 0}, {"count": len(xs), "failing": failing}, note


# ---------------------------------------------------------------------------
# coextend by e, then extend by f on a line through e

def _coext_then_line(r: int, pair: Sequence[str], names: Sequence[str] = ()) -> Dict[str, str]:
    D = mobius("triangular", r)
    M1 = _triad_coext(D, "e", pair)
    return {x: _outcome(_sum_ext(M1, "f", ["e", x]), names) for x in D.labels}


@_check("V16", "rank 4: coextend e on a triad of {a1,a2} or {a1,b1}, then add f on a line through e", 60)
def _v16():
    D = mobius("triangular", 4)
    names = ("m5_12a", "m5_12b")
    t1 = _coext_then_line(4, ["a1", "a2"], names)
    t2 = _coext_then_line(4, ["a1", "b1"], names)
    computed = {
        "a1a2": {x: t1[x] for x in ("b2", "b3", "e1", "e2", "e4", "a3", "e3")},
        "a1b1": {x: t2[x] for x in ("b2", "e2", "e3", "e4")},
        "a1b1_allowable_partner": [
            _tname(D, t) for t in allowable_triangles(D)
            if four_cocircuits_in(D, t | D.mask(["a1", "b1"])) and not t & D.mask(["a1", "a2", "b1"])
        ],
    }
    expected = {
        "a1a2": {"b2": "k33", "b3": "k33", "e1": "k33", "e2": "k33", "e4": "m5_12a", "a3": "m5_12b", "e3": "m5_12b"},
        "a1b1": {"b2": "k33", "e2": "k33", "e3": "k33", "e4": "m5_12a"},
        "a1b1_allowable_partner": ["a3,b3,e1"],
    }
    return expected, computed, ""


@_check("V17", "rank 5: the same construction gives M(K3,3) for every partner outside the base triangle", 60)
def _v17():
    D = mobius("triangular", 5)
    T0 = {"a1", "a2", "b1"}
    t1 = _coext_then_line(5, ["a1", "a2"])
    t2 = _coext_then_line(5, ["a1", "b1"])
    partner = [
        _tname(D, t) for t in allowable_triangles(D)
        if four_cocircuits_in(D, t | D.mask(["a1", "b1"])) and not t & D.mask(sorted(T0))
    ]
    skip = T0 | set(partner[0].split(",")) if len(partner) == 1 else T0
    computed = {
        "a1a2_non_k33": sorted(x for x, v in t1.items() if x not in T0 and v != "k33"),
        "a1b1_non_k33": sorted(x for x, v in t2.items() if x not in skip and v != "k33"),
        "a1b1_allowable_partner": partner,
    }
    expected = {"a1a2_non_k33": [], "a1b1_non_k33": [], "a1b1_allowable_partner": ["a4,b4,e1"]}
    return expected, computed, ""


def _two_lines(r: int, xf_pool, xg_pool, names) -> Dict[str, str]:
    D = mobius("triangular", r)
    M1 = _triad_coext(D, "e", ["a1", "b1"])
    out = {}
    for xf in xf_pool:
        for xg in xg_pool:
            M2 = _sum_ext(_sum_ext(M1, "f", ["e", xf]), "g", ["e", xg])
            out[f"{xf}/{xg}"] = _outcome(M2, names)
    return out


@_check("V18", "rank 4: e on a triad with {a1,b1}, lines through e to the base triangle and to {a3,b3,e1}", 60)
def _v18():
    computed = _two_lines(4, ["a1", "a2", "b1"], ["a3", "b3", "e1"], ("delta_5", "m5_13"))
    expected = {k: "k33" for k in computed}
    expected["a1/e1"] = "delta_5"
    expected["b1/b3"] = "m5_13"
    return expected, computed, ""


@_check("V19", "rank 5: the same two-line construction towards {a4,b4,e1}", 60)
def _v19():
    computed = _two_lines(5, ["a1", "a2", "b1"], ["a4", "b4", "e1"], ("delta_6",))
    expected = {k: "k33" for k in computed}
    expected["a1/e1"] = "delta_6"
    return expected, computed, ""


# ---------------------------------------------------------------------------
# two triad coextensions followed by the sum extension

def _pairs(T: Sequence[str]) -> List[Tuple[str, str]]:
    return list(combinations(T, 2))


def _double_triad(D: BinaryMatroid, pe, pf) -> BinaryMatroid:
    M1 = _triad_coext(D, "e", pe)
    M2 = _triad_coext(M1, "f", pf)
    return _sum_ext(M2, "g", ["e", "f"])


def _pkey(pe, pf) -> str:
    return "".join(pe) + "/" + "".join(pf)


@_check("V20", "rank 4: triads on pairs of {b1,e1,e2} and {a2,a3,b2}, joined by g = e + f", 60)
def _v20():
    D = mobius("triangular", 4)
    computed = {}
    for pe in _pairs(["b1", "e1", "e2"]):
        for pf in _pairs(["a2", "a3", "b2"]):
            X = _double_triad(D, pe, pf)
            if _name_of(X) == "m6_13":
                computed[_pkey(pe, pf)] = "m6_13"
            else:
                computed[_pkey(pe, pf)] = "not_v4c" if not _is_v4c(X) else "other"
    expected = {k: "not_v4c" for k in computed}
    expected["e1e2/a2a3"] = "m6_13"
    return expected, computed, ""


@_check("V21", "rank 5: four of the same triad configurations have M(K3,3)-minors", 60)
def _v21():
    D = mobius("triangular", 5)
    computed = {}
    for pe in (("b1", "e1"), ("e1", "e2")):
        for pf in (("a2", "a3"), ("a3", "b2")):
            computed[_pkey(pe, pf)] = _outcome(_double_triad(D, pe, pf))
    return {k: "k33" for k in computed}, computed, ""


@_check("V22", "rank 5: eighteen triad configurations on {b1,e1,e2} and a second triangle; exactly two avoid M(K3,3)", 120)
def _v22():
    D5 = mobius("triangular", 5)
    free = []
    total = 0
    for T2 in (["a3", "a4", "b3"], ["b3", "e3", "e4"]):
        for pe in _pairs(["b1", "e1", "e2"]):
            for pf in _pairs(T2):
                total += 1
                if not _has_k33(_double_triad(D5, pe, pf)):
                    free.append(",".join(T2) + ":" + _pkey(pe, pf))
    D6 = mobius("triangular", 6)
    r6 = [
        _has_k33(_double_triad(D6, ("b1", "e2"), ("b4", "e4"))),
        _has_k33(_double_triad(D6, ("b1", "e1"), ("a4", "b3"))),
    ]
    computed = {"cases": total, "without_k33": sorted(free), "rank6_k33": r6}
    expected = {
        "cases": 18,
        "without_k33": sorted(["b3,e3,e4:b1e2/b3e3", "a3,a4,b3:b1e1/a4b3"]),
        "rank6_k33": [True, True],
    }
    return expected, computed, ""


@_check("V23", "rank 4: triads {e,b1,e1} and {f,b2,e3} joined by g = e + f give M(K3,3)", 60)
def _v23():
    D = mobius("triangular", 4)
    return True, _has_k33(_double_triad(D, ("b1", "e1"), ("b2", "e3"))), ""


@_check("V24", "rank 4: triads {e,e1,e2} or {e,b1,e2} with {f,b2,e3}, joined by g = e + f, give M(K3,3)", 60)
def _v24():
    D = mobius("triangular", 4)
    computed = [_has_k33(_double_triad(D, pe, ("b2", "e3"))) for pe in (("e1", "e2"), ("b1", "e2"))]
    return [True, True], computed, ""


def _triple_build(M: BinaryMatroid, T1: int, T2: int, T3: int, C12: int, C23: int, C13: int) -> BinaryMatroid:
    """Coextend e, f, g on T1 & C12, T2 & C23, T3 & C13, then add x = e + f + g."""
    X = M.coextend_by_row("e", T1 & C12)
    X = X.coextend_by_row("f", X.mask(M.names(T2 & C23)))
    X = X.coextend_by_row("g", X.mask(M.names(T3 & C13)))
    return _sum_ext(X, "x", ["e", "f", "g"])


@_check("V25", "rank 4: three triangles with pairwise four-cocircuits; the triple coextension with a four-circuit has M(K3,3)", 60)
def _v25():
    D = mobius("triangular", 4)
    T1, T2, T3 = (D.mask(t) for t in (["b1", "e1", "e2"], ["a2", "a3", "b2"], ["a1", "b3", "e3"]))
    out = []
    for C12 in four_cocircuits_in(D, T1 | T2):
        for C23 in four_cocircuits_in(D, T2 | T3):
            for C13 in four_cocircuits_in(D, T1 | T3):
                out.append(_has_k33(_triple_build(D, T1, T2, T3, C12, C23, C13)))
    return {"all_k33": True, "nonempty": True}, {"all_k33": all(out), "nonempty": bool(out)}, f"{len(out)} cocircuit choices"


# ---------------------------------------------------------------------------
# sweeps over the sporadic matroids

@_check("V26", "every internally 4-connected M(K3,3)-free 3-connected extension of a sporadic matroid is sporadic", 300)
def _v26():
    spor = set(SPORADIC_IDS)
    f = _free()
    bad = []
    weak = []
    for n in SPORADIC_IDS:
        for X in generate(sporadic(n), "extend", f):
            lab = _label(X)
            if lab in spor:
                continue
            if _is_i4c(X):
                bad.append(f"{n}:{lab}")
            else:
                weak.append(f"{n}:{lab}")
    note = f"not internally 4-connected and unlisted: {sorted(weak)}" if weak else ""
    return [], sorted(bad), note


@_check("V27", "coextension sweep: only T12/e and T12 are vertically 4-connected; M7,15 has 12 labelled coextensions", 300)
def _v27():
    f = _free()
    v4c = set()
    other = set()
    for n in SPORADIC_IDS:
        if n in ("m9_18", "m11_21"):
            continue
        for X in generate(sporadic(n), "coextend", f):
            lab = _label(X)
            (v4c if _is_v4c(X) else other).add(lab)
    M = sporadic("m7_15")
    xs = generate_labelled(M, "coextend", f, "e")
    tris = [M.names(t) for t in triangles(M)]
    good = 0
    for X in xs:
        j = X.mask(["e"])
        hit = False
        for T in tris:
            for k in range(1, 4):
                for sub in combinations(T, k):
                    if is_cocircuit(X, X.mask(list(sub)) | j):
                        hit = True
        good += hit
    computed = {"v4c": sorted(v4c), "m7_15_coextensions": len(xs), "m7_15_with_cocircuit_in_triangle": good}
    expected = {"v4c": ["t12", "t12_contract"], "m7_15_coextensions": 12, "m7_15_with_cocircuit_in_triangle": 12}
    classes = len({canonical_form(X) for X in xs})
    return expected, computed, f"M7,15 coextension classes: {classes}; other outputs: {sorted(other)}"


@_check("V28", "M5,11 has no 3-connected M(K3,3)-free coextension", 60)
def _v28():
    return 0, len(generate(sporadic("m5_11"), "coextend", _free())), ""


def _sweep_many(sources: Sequence[str], plan: Sequence[str]) -> Tuple[Dict[str, set], str]:
    per: Dict[str, set] = {}
    notes = []
    for n in sources:
        sizes, found = _sweep(sporadic(n), plan)
        per[n] = found
        notes.append(f"{n}{sizes}")
    return per, " ".join(notes)


def _union(per: Dict[str, set], names: Sequence[str]) -> List[str]:
    out = set()
    for n in names:
        out |= per[n]
    return sorted(out)


@_check("V29", "coextend then extend once or twice from the small sporadics: internally 4-connected outputs", 900)
def _v29():
    per, note = _sweep_many(_SMALL_SPORADICS, ("coextend", "extend", "extend"))
    expected = sorted(["m5_11", "t12_contract", "m5_12b", "m5_13", "t12", "m7_15"])
    return expected, _union(per, _SMALL_SPORADICS), note


def _m512a_triad_coexts():
    M = sporadic("m5_12a")
    allow = allowable_triangles(M)
    for t in allow:
        for pair in combinations(M.names(t), 2):
            yield M, allow, t, pair, _triad_coext(M, "x", pair)


def _line_ext(X: BinaryMatroid, label: str, w: str) -> Optional[BinaryMatroid]:
    """Extension by label on the line through x and w, unless it is parallel to something."""
    v = X.col("x") ^ X.col(w)
    if v in X.cols:
        return None
    return X.extend(label, v)


@_check("V30", "M5,12a: growths through a triad on an allowable triangle obey the two line conditions", 300)
def _v30():
    k18 = 0
    fail18 = []
    k19 = 0
    fail19 = []
    for M, allow, t, pair, X in _m512a_triad_coexts():
        tn = set(M.names(t))
        for w in M.labels:
            Y = _line_ext(X, "y", w)
            if Y is None or not is_3connected(Y) or _has_k33(Y):
                continue
            k18 += 1
            txy = {"x", "y", w}
            ok = w in tn
            if not ok:
                for u in allow:
                    if u == t:
                        continue
                    un = set(M.names(u))
                    if len(txy & un) == 1 and _contains_cocircuit(Y, Y.mask(sorted(txy | un))):
                        ok = True
            if not ok:
                fail18.append(f"{_tname(M, t)}:{''.join(pair)}:{w}")
        for w in M.labels:
            if w in tn:
                continue
            Y = _line_ext(X, "y", w)
            if Y is None:
                continue
            for u in sorted(tn):
                v = Y.col("x") ^ Y.col(u)
                if v in Y.cols:
                    continue
                Z = Y.extend("z", v)
                if not (is_3connected(Z) and is_3connected(Y) and is_3connected(X)):
                    continue
                k19 += 1
                if not _has_k33(Z):
                    fail19.append(f"{_tname(M, t)}:{''.join(pair)}:{w}:{u}")
    computed = {"single_line_failures": fail18, "two_line_failures": fail19}
    note = f"{k18} single-line and {k19} two-line configurations examined"
    return {"single_line_failures": [], "two_line_failures": []}, computed, note


@_check("V31", "coextend then extend once or twice from sporadics with intersecting triangles: outputs", 900)
def _v31():
    per, note = _sweep_many(_INTERSECTING, ("coextend", "extend", "extend"))
    expected = sorted(["m5_11", "t12_contract", "m5_12b", "m5_13", "t12"])
    return expected, _union(per, _INTERSECTING), note


@_check("V32", "coextend twice then extend: internally 4-connected outputs from the small sporadics", 900)
def _v32():
    per, note = _sweep_many(_SMALL_SPORADICS, ("coextend", "coextend", "extend"))
    expected_set = sorted(["m5_11", "t12_contract", "t12", "m7_15"])
    computed = {"small": _union(per, _SMALL_SPORADICS), "intersecting": _union(per, _INTERSECTING)}
    return {"small": expected_set, "intersecting": expected_set}, computed, note


def _good_triples(M: BinaryMatroid, allow: Sequence[int]):
    for trio in combinations(allow, 3):
        if all(four_cocircuits_in(M, a | b) for a, b in combinations(trio, 2)):
            yield trio


@_check("V33", "good triples of allowable triangles yield M(K3,3)-minors or small cocircuits", 600)
def _v33():
    computed = {}
    notes = []
    for n in ("m5_12a", "m6_13", "m7_15"):
        M = sporadic(n)
        allow = allowable_triangles(M)
        tally = {"k33": 0, "small_cocircuit": 0, "neither": 0}
        triples = 0
        for trio in _good_triples(M, allow):
            triples += 1
            for T1, T2, T3 in permutations(trio):
                for C12 in four_cocircuits_in(M, T1 | T2):
                    for C23 in four_cocircuits_in(M, T2 | T3):
                        for C13 in four_cocircuits_in(M, T1 | T3):
                            X = _triple_build(M, T1, T2, T3, C12, C23, C13)
                            if not X.is_cosimple() or triads(X):
                                tally["small_cocircuit"] += 1
                            elif _has_k33(X):
                                tally["k33"] += 1
                            else:
                                tally["neither"] += 1
        computed[n] = tally["neither"]
        notes.append(f"{n}: {triples} good triples, {tally}")
    return {n: 0 for n in computed}, computed, "; ".join(notes)


# ---------------------------------------------------------------------------
# the Delta_4 growth pipeline

def _pipeline() -> Tuple[Dict[str, int], Dict[str, Dict[str, int]]]:
    D4 = mobius("triangular", 4)
    K = _k33()
    P = delta4_plus()
    f = GenFilter(three_connected=True, excluded=(K, P))
    EX = generate_labelled(D4, "extend", f, "e")
    CO = generate_labelled(D4, "coextend", f, "e")

    def quad(M, T):
        return M.coextend_by_row("x", T)

    def third(M):
        return M.extend("g", M.col("e") ^ M.col("f"))

    def via_line(srcs, want_line):
        out = []
        for N in srcs:
            for X in generate_labelled(N, "extend", f, "f"):
                ts = _tris_with(X, ["e", "f"])
                if want_line and ts:
                    out += [quad(X, t) for t in ts]
                elif not want_line and not ts:
                    Y = third(X)
                    out.append(quad(Y, Y.mask(["e", "f", "g"])))
        return out

    def via_coext(srcs):
        out = []
        for N in srcs:
            for X in generate_labelled(N, "coextend", f, "f"):
                Y = third(X)
                out.append(quad(Y, Y.mask(["e", "f", "g"])))
        return out

    batches = {
        "ex_quad": [quad(N, t) for N in EX for t in _tris_with(N, ["e"])],
        "co_line": via_line(CO, True),
        "ex_line": via_line(EX, True),
        "co_coext": via_coext(CO),
        "ex_coext": via_coext(EX),
        "co_free": via_line(CO, False),
        "ex_free": via_line(EX, False),
    }
    counts = {"EX": len(EX), "CO": len(CO)}
    minors: Dict[str, Dict[str, int]] = {}
    cache: Dict[bytes, Tuple[bool, bool]] = {}
    for k, xs in batches.items():
        counts[k] = len(xs)
        tally = {"k33": 0, "delta4_plus": 0, "either": 0}
        for X in xs:
            key = canonical_form(X)
            if key not in cache:
                cache[key] = (has_minor(X, K) is not None, has_minor(X, P) is not None)
            a, b = cache[key]
            tally["k33"] += a
            tally["delta4_plus"] += b
            tally["either"] += a or b
        minors[k] = tally
    return counts, minors


@_check("V34", "Delta_4 growth pipeline: candidate counts and their M(K3,3) or Delta_4-plus minors", 900)
def _v34():
    counts, minors = _pipeline()
    expected_counts = {"EX": 5, "CO": 15, "ex_quad": 18, "co_line": 78, "ex_line": 14,
                       "co_coext": 84, "ex_coext": 27, "co_free": 21, "ex_free": 6}
    computed = {
        "counts": counts,
        "ex_quad_either": minors["ex_quad"]["either"],
        "co_line_delta4_plus": minors["co_line"]["delta4_plus"],
        "ex_line_k33": minors["ex_line"]["k33"],
        "ex_free_either": minors["ex_free"]["either"],
    }
    expected = {
        "counts": expected_counts,
        "ex_quad_either": 18,
        "co_line_delta4_plus": 78,
        "ex_line_k33": 14,
        "ex_free_either": 6,
    }
    note = "; ".join(f"{k}: {v}" for k, v in minors.items())
    return expected, computed, note


# ---------------------------------------------------------------------------
# inventories

_TRIANGLE_COUNTS = {
    "m4_11": (13, 3), "m5_12a": (8, 4), "m6_13": (4, 4), "m7_15": (5, 5),
    "m9_18": (6, 6), "m11_21": (7, 7), "c11": (12, 0), "d12": (17, 0),
    "m5_11": (4, 0), "t12_contract": (5, 0), "t12": (0, 0),
}


def _deletion_classes(name: str) -> Dict[str, int]:
    M = sporadic(name)
    out: Dict[str, int] = {}
    for u in M.labels:
        lab = _label(M.delete([u]))
        out[lab] = out.get(lab, 0) + 1
    return out


@_check("V35", "triangle and allowable-triangle inventories, four-cocircuit pairs, intersecting triangles, deletions", 300)
def _v35():
    counts = {}
    pairwise = {}
    for n in _TRIANGLE_COUNTS:
        M = sporadic(n)
        allow = allowable_triangles(M)
        counts[n] = [len(triangles(M)), len(allow)]
        if n in ("m5_12a", "m6_13", "m7_15", "m9_18", "m11_21"):
            pairwise[n] = all(four_cocircuits_in(M, a | b) for a, b in combinations(allow, 2))
    m512b = sporadic("m5_12b")
    counts["m5_12b_allowable"] = len(allowable_triangles(m512b))
    intersecting = []
    for n in SPORADIC_IDS:
        ts = triangles(sporadic(n))
        if any(a & b for a, b in combinations(ts, 2)):
            intersecting.append(n)
    dels = {
        "c12": _deletion_classes("c12").get("c11", 0),
        "m4_13": _deletion_classes("m4_13").get("d12", 0),
        "m4_14": _deletion_classes("m4_14").get("m4_13", 0),
        "pg32": _deletion_classes("pg32").get("m4_14", 0),
        "m5_13": _deletion_classes("m5_13").get("m5_12b", 0),
        "m5_12b_to_t12_contract": _deletion_classes("m5_12b").get("t12_contract", 0) > 0,
    }
    computed = {"triangles_allowable": counts, "pairwise_four_cocircuit": pairwise,
                "intersecting": sorted(intersecting), "deletions": dels}
    exp_counts = {k: list(v) for k, v in _TRIANGLE_COUNTS.items()}
    exp_counts["m5_12b_allowable"] = 0
    expected = {
        "triangles_allowable": exp_counts,
        "pairwise_four_cocircuit": {n: True for n in pairwise},
        "intersecting": sorted(_INTERSECTING),
        "deletions": {"c12": 12, "m4_13": 12, "m4_14": 14, "pg32": 15, "m5_13": 4,
                      "m5_12b_to_t12_contract": True},
    }
    return expected, computed, ""


# ---------------------------------------------------------------------------
# Mobius matroid properties

_MOBIUS_CAP = {"triangular": 7, "triadic": 10}


def _mobius_suite(cap_t: int, cap_y: int) -> Tuple[dict, dict]:
    exp: dict = {}
    got: dict = {}

    def put(key, want, have):
        exp[key] = want
        got[key] = have

    for r in range(3, cap_t + 1):
        D = mobius("triangular", r)
        put(f"delta_{r}:i4c", True, _is_i4c(D))
        put(f"delta_{r}:no_k33", True, not _has_k33(D))
        cub = graphic_source("cubic_ladder_bond", 2 * r - 2)
        put(f"delta_{r}:minus_er_ladder_bond", True, is_isomorphic(D.delete(["e" + str(r)]), cub) is not None)
        ops = [D.delete([f"e{r}"]), D.contract([f"e{r}"])]
        ops += [D.contract([f"{c}{i}"]) for c in "ea" for i in range(1, r)]
        ops += [D.delete([f"b{i}"]) for i in range(1, r)]
        put(f"delta_{r}:cographic_minors", len(ops), sum(1 for X in ops if is_cographic(X)))
        if r >= 4:
            smaller = mobius("triangular", r - 1)
            combos = []
            for i in range(1, r - 1):
                for x in (f"e{i}", f"e{i + 1}"):
                    for y in (f"a{i}", f"a{i + 1}"):
                        combos.append(([f"b{i}"], [x, y]))
            for x in ("a1", f"e{r - 1}"):
                for y in (f"a{r - 1}", "e1"):
                    combos.append(([f"b{r - 1}"], [x, y]))
            ok = sum(1 for C, Dl in combos if is_isomorphic(D.minor(C, Dl), smaller) is not None)
            put(f"delta_{r}:to_delta_{r - 1}", len(combos), ok)
    for r in range(4, cap_y + 1, 2):
        U = mobius("triadic", r)
        put(f"upsilon_{r}:i4c", True, _is_i4c(U))
        put(f"upsilon_{r}:no_k33", True, not _has_k33(U))
        if r >= 6:
            quart = graphic_source("quartic_ladder_bond", r - 1)
            put(f"upsilon_{r}:minus_er_ladder_bond", True, is_isomorphic(U.delete([f"e{r}"]), quart) is not None)
        put(f"upsilon_{r}:contract_er_wheel", True,
            is_isomorphic(U.contract([f"e{r}"]), graphic_source("wheel", r - 1)) is not None)
        ops = [U.delete([f"e{r}"]), U.contract([f"e{r}"])]
        ops += [U.contract([f"e{i}"]) for i in range(1, r)]
        ops += [U.delete([f"c{i}"]) for i in range(1, r)]
        put(f"upsilon_{r}:cographic_minors", len(ops), sum(1 for X in ops if is_cographic(X)))
        if r >= 6:
            smaller = mobius("triadic", r - 2)
            c = lambda i: f"c{i}"
            e = lambda i: f"e{i}"
            first = []
            for i in range(1, r - 2):
                first += [([c(i), c(i + 1)], [e(i + 1), e(i)]), ([c(i), c(i + 1)], [e(i + 1), e(i + 2)])]
            first += [([c(1), c(r - 1)], [e(1), e(2)]), ([c(1), c(r - 1)], [e(1), e(r - 1)])]
            first += [([c(r - 2), c(r - 1)], [e(r - 1), e(1)]), ([c(r - 2), c(r - 1)], [e(r - 1), e(r - 2)])]
            second = [([c(i), c(i + 2)], [e(i + 1), e(i + 2)]) for i in range(1, r - 2)]
            second += [([c(1), c(r - 2)], [e(1), e(r - 1)]), ([c(2), c(r - 1)], [e(1), e(2)])]
            for key, combos in (("adjacent", first), ("spaced", second)):
                ok = sum(1 for C, Dl in combos if is_isomorphic(U.minor(C, Dl), smaller) is not None)
                put(f"upsilon_{r}:to_upsilon_{r - 2}_{key}", len(combos), ok)
    return exp, got


@_check("V36", "Mobius matroids: connectivity, M(K3,3)-freeness, cographic minors and smaller Mobius minors", 600)
def _v36():
    exp, got = _mobius_suite(_MOBIUS_CAP["triangular"], _MOBIUS_CAP["triadic"])
    cap = f"triangular up to rank {_MOBIUS_CAP['triangular']}, triadic up to rank {_MOBIUS_CAP['triadic']}"
    return exp, got, cap


# ---------------------------------------------------------------------------
# runner

def _run_inline(cid: str) -> CheckReport:
    c = REGISTRY[cid]
    t = time.perf_counter()
    try:
        expected, computed, note = c.fn()
        passed = expected == computed
    except Exception as exc:  # a crash is a failed check, reported with its reason
        expected, computed, note = None, None, f"error: {type(exc).__name__}: {exc}"
        passed = False
    return CheckReport(cid, c.anchor, expected, computed, passed, time.perf_counter() - t, note)


def _child(cid: str, conn) -> None:
    conn.send(_run_inline(cid))
    conn.close()


def run_checks(
    ids: Optional[Sequence[str]] = None,
    budget: Optional[float] = None,
    jobs: int = 1,
    isolate: bool = True,
) -> List[CheckReport]:
    """Run the named checks (all when ids is None), ordered by id.

    budget overrides each check's own time budget. With isolate, each check
    runs in a forked process and an overrun is reported as a failure; up to
    jobs checks run at once.
    """
    ids = check_ids() if ids is None else list(ids)
    for cid in ids:
        if cid not in REGISTRY:
            raise UnknownCheckId(cid)
    if not isolate:
        return [_run_inline(cid) for cid in sorted(ids)]
    ctx = mp.get_context("fork")
    pending = sorted(ids)
    running: Dict[str, tuple] = {}
    done: Dict[str, CheckReport] = {}
    while pending or running:
        while pending and len(running) < max(1, jobs):
            cid = pending.pop(0)
            recv, send = ctx.Pipe(duplex=False)
            p = ctx.Process(target=_child, args=(cid, send), daemon=True)
            p.start()
            send.close()
            limit = budget if budget is not None else REGISTRY[cid].budget
            running[cid] = (p, recv, time.perf_counter(), limit)
        for cid, (p, recv, t0, limit) in list(running.items()):
            elapsed = time.perf_counter() - t0
            if recv.poll():
                try:
                    done[cid] = recv.recv()
                except EOFError:
                    done[cid] = _failed(cid, elapsed, "process exited without a report")
                p.join()
            elif not p.is_alive():
                done[cid] = _failed(cid, elapsed, f"process exited with code {p.exitcode}")
            elif elapsed > limit:
                p.terminate()
                p.join()
                done[cid] = _failed(cid, elapsed, f"time budget of {limit:g}s exceeded")
            else:
                continue
            recv.close()
            del running[cid]
        if running:
            time.sleep(0.02)
    return [done[cid] for cid in sorted(ids)]


def _failed(cid: str, seconds: float, note: str) -> CheckReport:
    return CheckReport(cid, REGISTRY[cid].anchor, None, None, False, seconds, note)


# ---------------------------------------------------------------------------
# classifier

@dataclass(frozen=True)
class Verdict:
    """kind is one of cographic, mobius_triangular, mobius_triadic, sporadic,
    has_mk33_minor, not_internally_4connected; param is r or a sporadic id.

    tag records how the verdict was reached: "search" when backed by a
    computation, "by-theorem" when the minor search was skipped, and
    "search-failed" when a search expected to succeed did not.
    """

    kind: str
    param: object = None
    evidence: object = None
    tag: str = "search"
    notes: Dict[str, object] = field(default_factory=dict)

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"


_SEARCH_LIMIT = 21


def _mobius_candidates(M: BinaryMatroid) -> List[Tuple[str, int]]:
    r, n = M.rank, M.size
    out = []
    if r >= 3 and n == 3 * r - 2:
        out.append(("triangular", r))
    if r >= 4 and r % 2 == 0 and n == 2 * r - 1:
        out.append(("triadic", r))
    return out


def classify(M: BinaryMatroid, search_limit: int = _SEARCH_LIMIT) -> Verdict:
    """Place M in the classification of internally 4-connected binary matroids with no M(K3,3)-minor."""
    rep = connectivity_report(M)
    if not rep.is_internally_4connected:
        return Verdict("not_internally_4connected", evidence=rep.witness)
    if is_cographic(M):
        return Verdict("cographic", evidence="no F7, F7*, M(K5) or M(K3,3) minor")
    for kind, r in _mobius_candidates(M):
        iso = is_isomorphic(M, mobius(kind, r))
        if iso is not None:
            return Verdict(f"mobius_{kind}", r, iso)
    for name in SPORADIC_IDS:
        S = sporadic(name)
        if S.rank != M.rank or S.size != M.size:
            continue
        iso = is_isomorphic(M, S)
        if iso is not None:
            return Verdict("sporadic", name, iso)
    if M.size > search_limit:
        return Verdict("has_mk33_minor", tag="by-theorem")
    w = has_minor(M, _k33())
    if w is None:
        return Verdict("has_mk33_minor", tag="search-failed")
    return Verdict("has_mk33_minor", evidence=w)

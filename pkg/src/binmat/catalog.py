"""Named binary matroids: Mobius families, projective and graphic sources, sporadic matroids."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .matroid import BinaryMatroid, triangles

__all__ = [
    "BadRank",
    "UnknownId",
    "GraphDesc",
    "CensusRow",
    "mobius",
    "fano",
    "fano_dual",
    "pg32",
    "delta4_plus",
    "cycle_matroid",
    "bond_matroid",
    "complete_graph",
    "k33",
    "cubic_ladder",
    "quartic_ladder",
    "wheel_graph",
    "graphic_source",
    "sporadic",
    "by_name",
    "SPORADIC_IDS",
    "census",
    "fano_lines",
    "triangle_families",
]


class BadRank(ValueError):
    """Rank outside the range where the family is defined."""


class UnknownId(KeyError):
    """No catalog entry with this name."""


def _vec(*idx: int) -> int:
    v = 0
    for i in idx:
        v ^= 1 << (i - 1)
    return v


def mobius(kind: str, r: int) -> BinaryMatroid:
    """Triangular (Delta_r) or triadic (Upsilon_r) Mobius matroid with its standard labels."""
    if kind in ("triangular", "delta"):
        if r < 3:
            raise BadRank("triangular Mobius matroids need r >= 3")
        return _delta(r)
    if kind in ("triadic", "upsilon"):
        if r < 4 or r % 2:
            raise BadRank("triadic Mobius matroids need even r >= 4")
        return _upsilon(r)
    raise ValueError(f"unknown kind {kind}")


@lru_cache(maxsize=None)
def _delta(r: int) -> BinaryMatroid:
    labels = [f"e{i}" for i in range(1, r + 1)]
    cols = [_vec(i) for i in range(1, r + 1)]
    for i in range(1, r):
        labels.append(f"a{i}")
        cols.append(_vec(i, r))
    for i in range(1, r - 1):
        labels.append(f"b{i}")
        cols.append(_vec(i, i + 1))
    labels.append(f"b{r - 1}")
    cols.append(_vec(1, r - 1, r))
    return BinaryMatroid.from_columns(labels, cols)


@lru_cache(maxsize=None)
def _upsilon(r: int) -> BinaryMatroid:
    labels = [f"e{i}" for i in range(1, r + 1)]
    cols = [_vec(i) for i in range(1, r + 1)]
    for i in range(1, r - 1):
        labels.append(f"c{i}")
        cols.append(_vec(i, i + 1, r))
    labels.append(f"c{r - 1}")
    cols.append(_vec(1, r - 1, r))
    return BinaryMatroid.from_columns(labels, cols)


def fano() -> BinaryMatroid:
    """F7 as the seven nonzero vectors of GF(2)^3, labelled by their integer value."""
    return BinaryMatroid.from_columns([str(v) for v in range(1, 8)], list(range(1, 8)))


def fano_dual() -> BinaryMatroid:
    return fano().dual()


def fano_lines() -> List[Tuple[str, str, str]]:
    """The seven lines of fano(), as label triples."""
    out = []
    for a in range(1, 8):
        for b in range(a + 1, 8):
            c = a ^ b
            if c > b:
                out.append((str(a), str(b), str(c)))
    return out


def pg32() -> BinaryMatroid:
    """PG(3,2): the fifteen nonzero vectors of GF(2)^4, labelled p1..p15 by integer value."""
    return BinaryMatroid.from_columns([f"p{v}" for v in range(1, 16)], list(range(1, 16)))


def delta4_plus() -> BinaryMatroid:
    """The coextension of Delta_4 by e5 making {a1, a2, b1, e5} a circuit-cocircuit."""
    D = _delta(4)
    return D.coextend("e5", D.mask(["a1", "a2", "b1"]))


# ---------------------------------------------------------------------------
# graphs

@dataclass(frozen=True)
class GraphDesc:
    n_vertices: int
    edges: Tuple[Tuple[str, int, int], ...]

    def cyclomatic(self, subset: Optional[Sequence[str]] = None) -> int:
        """|E'| - r(E') in the cycle matroid."""
        M = cycle_matroid(self)
        names = list(subset) if subset is not None else list(M.labels)
        return len(names) - M.rank_of(names)

    def vertices_of(self, subset: Sequence[str]) -> set:
        keep = set(subset)
        out = set()
        for lab, u, v in self.edges:
            if lab in keep:
                out.update((u, v))
        return out


def cycle_matroid(G: GraphDesc) -> BinaryMatroid:
    labels, cols = [], []
    for lab, u, v in G.edges:
        labels.append(lab)
        cols.append((1 << u) ^ (1 << v))
    return BinaryMatroid.from_columns(labels, cols)


def bond_matroid(G: GraphDesc) -> BinaryMatroid:
    return cycle_matroid(G).dual()


def complete_graph(n: int) -> GraphDesc:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((f"{u}{v}", u, v))
    return GraphDesc(n, tuple(edges))


def k33() -> GraphDesc:
    edges = []
    for u in range(3):
        for v in range(3, 6):
            edges.append((f"{u}{v}", u, v))
    return GraphDesc(6, tuple(edges))


def cubic_ladder(m: int) -> GraphDesc:
    """Cubic Mobius ladder on m = 2n vertices.

    e_i joins v_{i-1} and v_i, a_i joins v_{i+n-1} and v_{i+n}, and b_i
    joins v_i and v_{i+n}, for 1 <= i <= n, indices mod 2n.
    """
    if m < 2 or m % 2:
        raise BadRank("cubic ladders need an even vertex count")
    n = m // 2
    edges = []
    for i in range(1, n + 1):
        edges.append((f"e{i}", (i - 1) % m, i % m))
    for i in range(1, n + 1):
        edges.append((f"a{i}", (i + n - 1) % m, (i + n) % m))
    for i in range(1, n + 1):
        edges.append((f"b{i}", i % m, (i + n) % m))
    return GraphDesc(m, tuple(edges))


def quartic_ladder(m: int) -> GraphDesc:
    """Quartic Mobius ladder on m = 2n + 1 vertices.

    e_i joins v_{ni} and v_{ni+1}; c_i joins v_{n(i-1)} and v_{ni}, indices mod m.
    """
    if m < 5 or m % 2 == 0:
        raise BadRank("quartic ladders need an odd vertex count of at least 5")
    n = (m - 1) // 2
    edges = []
    for i in range(1, m + 1):
        edges.append((f"e{i}", (n * i) % m, (n * i + 1) % m))
    for i in range(1, m + 1):
        edges.append((f"c{i}", (n * (i - 1)) % m, (n * i) % m))
    return GraphDesc(m, tuple(edges))


def wheel_graph(r: int) -> GraphDesc:
    """Wheel with r spokes s1..sr and rim edges t1..tr; vertex 0 is the hub."""
    if r < 2:
        raise BadRank("wheels need at least two spokes")
    edges = [(f"s{i}", 0, i) for i in range(1, r + 1)]
    edges += [(f"t{i}", i, i % r + 1) for i in range(1, r + 1)]
    return GraphDesc(r + 1, tuple(edges))


GRAPH_IDS = ("mk5", "mk33", "mstar_k5", "mstar_k33", "cubic_ladder_bond", "quartic_ladder_bond", "wheel")


def graphic_source(name: str, n: Optional[int] = None) -> BinaryMatroid:
    """Cycle or bond matroid of a named graph.

    cubic_ladder_bond(n) and quartic_ladder_bond(n) take the vertex count,
    wheel(n) the number of spokes (its rank).
    """
    if name == "mk5":
        return _mk5()
    if name == "mk33":
        return _mk33()
    if name == "mstar_k5":
        return _mk5().dual()
    if name == "mstar_k33":
        return _mk33().dual()
    if n is None:
        raise UnknownId(f"{name} needs a size parameter")
    if name == "cubic_ladder_bond":
        return bond_matroid(cubic_ladder(n))
    if name == "quartic_ladder_bond":
        return bond_matroid(quartic_ladder(n))
    if name == "wheel":
        return cycle_matroid(wheel_graph(n))
    raise UnknownId(name)


@lru_cache(maxsize=None)
def _mk5() -> BinaryMatroid:
    return cycle_matroid(complete_graph(5))


@lru_cache(maxsize=None)
def _mk33() -> BinaryMatroid:
    return cycle_matroid(k33())


# ---------------------------------------------------------------------------
# sporadic matroids

SPORADIC_IDS = (
    "mk5",
    "c11",
    "m4_11",
    "c12",
    "d12",
    "m4_13",
    "m4_14",
    "pg32",
    "m5_11",
    "t12_contract",
    "m5_12a",
    "m5_12b",
    "m5_13",
    "t12",
    "m6_13",
    "m7_15",
    "m9_18",
    "m11_21",
)


def triangle_families() -> Dict[str, List[Tuple[str, str, str]]]:
    """Line sets of the Fano plane used to build the nabla family.

    4a: three concurrent lines plus one more; 4b: four lines, no three
    concurrent; then five, six and all seven lines.
    """
    L = fano_lines()
    through1 = [t for t in L if "1" in t]
    other = [t for t in L if "1" not in t]
    four_b = other  # the four lines avoiding point 1
    return {
        "4a": through1 + other[:1],
        "4b": four_b,
        "5": L[:5],
        "6": L[:6],
        "7": L,
    }


def _nabla_fano(key: str) -> BinaryMatroid:
    from .deltawye import delta_multi

    return delta_multi(fano(), triangle_families()[key]).dual()


@lru_cache(maxsize=None)
def _delta4_extensions() -> Tuple[BinaryMatroid, BinaryMatroid]:
    """(C11, M4,11): the 3-connected extensions of Delta_4 with no M(K3,3)-minor.

    They are told apart by their triangle counts, 12 and 13.
    """
    from .isomin import has_minor
    from .matroid import is_3connected

    D = _delta(4)
    present = set(D.cols)
    found: Dict[int, BinaryMatroid] = {}
    for v in range(1, 16):
        if v in present:
            continue
        X = D.extend("x", v)
        if not is_3connected(X) or has_minor(X, _mk33()) is not None:
            continue
        found.setdefault(len(triangles(X)), X)
    return found[12], found[13]


@lru_cache(maxsize=None)
def _m5_11() -> BinaryMatroid:
    from .deltawye import allowable_triangles, delta_y

    M = _delta4_extensions()[1]
    T = allowable_triangles(M)[0]
    return delta_y(M, T)


@lru_cache(maxsize=None)
def _t12() -> BinaryMatroid:
    U = _upsilon(6)
    return U.extend("x", _vec(1, 2, 3, 4, 5))


@lru_cache(maxsize=None)
def _m5_12b() -> BinaryMatroid:
    D = _delta(4)
    C = D.coextend("e", D.mask(["a1", "a2"]))
    return C.extend("f", C.col("e") ^ C.col("a3"))


@lru_cache(maxsize=None)
def _m5_13() -> BinaryMatroid:
    D = _delta(4)
    C = D.coextend("e", D.mask(["a1", "b1"]))
    C = C.extend("f", C.col("e") ^ C.col("b1"))
    return C.extend("g", C.col("e") ^ C.col("b3"))


def _pg_minus(points: Sequence[int]) -> BinaryMatroid:
    P = pg32()
    return P.delete([f"p{v}" for v in points])


_BUILDERS = {
    "mk5": _mk5,
    "c11": lambda: _delta4_extensions()[0],
    "m4_11": lambda: _delta4_extensions()[1],
    "c12": lambda: _pg_minus([1, 2, 3]),
    "d12": lambda: _pg_minus([1, 2, 4]),
    "m4_13": lambda: _pg_minus([1, 2]),
    "m4_14": lambda: _pg_minus([1]),
    "pg32": pg32,
    "m5_11": _m5_11,
    "t12_contract": lambda: _t12().contract(["e1"]),
    "m5_12a": lambda: _nabla_fano("4a"),
    "m5_12b": _m5_12b,
    "m5_13": _m5_13,
    "t12": _t12,
    "m6_13": lambda: _nabla_fano("4b"),
    "m7_15": lambda: _nabla_fano("5"),
    "m9_18": lambda: _nabla_fano("6"),
    "m11_21": lambda: _nabla_fano("7"),
}

_CACHE: Dict[str, BinaryMatroid] = {}


def sporadic(name: str) -> BinaryMatroid:
    if name not in _BUILDERS:
        raise UnknownId(name)
    got = _CACHE.get(name)
    if got is None:
        got = _BUILDERS[name]()
        _CACHE[name] = got
    return got


def by_name(name: str) -> BinaryMatroid:
    """Any catalog entry; parametrised families use a suffix, e.g. delta_5, upsilon_6, wheel_4."""
    simple = {
        "fano": fano,
        "fano_dual": fano_dual,
        "delta4_plus": delta4_plus,
        "mk33": _mk33,
        "mstar_k5": lambda: _mk5().dual(),
        "mstar_k33": lambda: _mk33().dual(),
    }
    if name in simple:
        return simple[name]()
    if name in _BUILDERS:
        return sporadic(name)
    head, _, tail = name.rpartition("_")
    if tail.isdigit():
        k = int(tail)
        if head in ("delta", "delta_r"):
            return mobius("triangular", k)
        if head in ("upsilon", "upsilon_r"):
            return mobius("triadic", k)
        if head in ("cubic_ladder_bond", "quartic_ladder_bond", "wheel"):
            return graphic_source(head, k)
    raise UnknownId(name)


# ---------------------------------------------------------------------------
# census

@dataclass(frozen=True)
class CensusRow:
    name: str
    rank: int
    size: int
    kind: str  # triangular, triadic or sporadic
    internally_4connected: bool
    vertically_4connected: bool
    triads: int


CENSUS_IDS: Tuple[Tuple[str, str], ...] = (
    ("delta_3", "triangular"),
    ("upsilon_4", "triadic"),
    ("delta_4", "triangular"),
    ("mk5", "sporadic"),
    ("c11", "sporadic"),
    ("m4_11", "sporadic"),
    ("c12", "sporadic"),
    ("d12", "sporadic"),
    ("m4_13", "sporadic"),
    ("m4_14", "sporadic"),
    ("pg32", "sporadic"),
    ("m5_11", "sporadic"),
    ("t12_contract", "sporadic"),
    ("m5_12a", "sporadic"),
    ("m5_12b", "sporadic"),
    ("delta_5", "triangular"),
    ("m5_13", "sporadic"),
    ("upsilon_6", "triadic"),
    ("t12", "sporadic"),
    ("m6_13", "sporadic"),
    ("delta_6", "triangular"),
    ("m7_15", "sporadic"),
    ("delta_7", "triangular"),
    ("upsilon_8", "triadic"),
    ("m9_18", "sporadic"),
    ("upsilon_10", "triadic"),
    ("m11_21", "sporadic"),
)


def census(with_flags: bool = True) -> List[CensusRow]:
    """Internally 4-connected non-cographic matroids with no M(K3,3)-minor, rank at most 11."""
    from .matroid import connectivity_report, triads

    rows = []
    for name, kind in CENSUS_IDS:
        M = by_name(name)
        if with_flags:
            rep = connectivity_report(M)
            i4c, v4c = rep.is_internally_4connected, rep.is_vertically_4connected
            nt = len(triads(M))
        else:
            i4c = v4c = False
            nt = -1
        rows.append(CensusRow(name, M.rank, M.size, kind, i4c, v4c, nt))
    return rows

"""Binary matroids as labelled column families, with minors, duals and connectivity."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .gf2 import Gf2Matrix, bits, popcount, rank_of_vectors, reduce_columns

__all__ = [
    "BinaryMatroid",
    "SeparationReport",
    "ConnectivityReport",
    "NotThreeConnected",
    "BadBasepoint",
    "rank_table",
    "rank_profile",
    "lam",
    "closure",
    "coclosure",
    "minor",
    "dual",
    "si_co",
    "simplify",
    "cosimplify",
    "circuits_up_to",
    "triangles",
    "triads",
    "is_connected",
    "is_3connected",
    "connectivity_report",
    "separations",
    "fans",
    "good_elements",
    "classify_small_separator",
    "fans_and_small_separators",
    "guts",
    "coguts",
    "interior",
    "two_sum",
    "is_circuit",
    "is_cocircuit",
    "is_quad",
]

Labels = Union[int, Iterable[str]]


class NotThreeConnected(ValueError):
    """Operation needs a 3-connected matroid."""


class BadBasepoint(ValueError):
    """Basepoint of a 2-sum is missing, shared wrongly, a loop or a coloop."""


@dataclass(frozen=True, eq=False)
class BinaryMatroid:
    """Labelled binary matroid.

    cols[j] is the coordinate vector of labels[j] with respect to the greedy
    basis taken in label order, so the basis columns are unit vectors and
    the representation is a standard form [I|A] up to column order.
    """

    labels: Tuple[str, ...]
    cols: Tuple[int, ...]
    rank: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_columns(cls, labels: Sequence[str], cols: Sequence[int]) -> "BinaryMatroid":
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        if len(labels) != len(cols):
            raise ValueError("label count mismatch")
        rank, _, coords = reduce_columns(list(cols))
        return cls(labels, tuple(coords), rank)

    @classmethod
    def from_matrix(cls, m: Gf2Matrix, labels: Sequence[str]) -> "BinaryMatroid":
        return cls.from_columns(labels, m.columns())

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[int]]) -> "BinaryMatroid":
        return cls.from_matrix(Gf2Matrix.from_lists(rows), labels)

    # basic accessors
    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def corank(self) -> int:
        return len(self.labels) - self.rank

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.labels == other.labels and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.labels, self.cols))

    def __repr__(self) -> str:
        return f"BinaryMatroid(rank={self.rank}, size={self.size}, labels={' '.join(self.labels)})"

    def index(self, x: str) -> int:
        pos = self._cache.get("pos")
        if pos is None:
            pos = {y: i for i, y in enumerate(self.labels)}
            self._cache["pos"] = pos
        return pos[x]

    def mask(self, xs: Labels) -> int:
        """Bit mask of a label collection; ints pass through unchanged."""
        if isinstance(xs, int):
            return xs
        if isinstance(xs, str):
            xs = [xs]
        m = 0
        for x in xs:
            m |= 1 << self.index(x)
        return m

    def names(self, mask: int) -> List[str]:
        return [self.labels[i] for i in bits(mask)]

    def col(self, x: str) -> int:
        return self.cols[self.index(x)]

    def rank_of(self, xs: Labels) -> int:
        m = self.mask(xs)
        return rank_of_vectors(self.cols[i] for i in bits(m))

    def corank_of(self, xs: Labels) -> int:
        """Rank of the set in the dual."""
        m = self.mask(xs)
        return popcount(m) - self.rank + self.rank_of(self.full & ~m)

    def rep(self) -> Gf2Matrix:
        return Gf2Matrix.from_columns(self.cols, self.rank)

    def basis(self) -> List[str]:
        """Greedy basis in label order."""
        _, bpos, _ = reduce_columns(self.cols)
        return [self.labels[i] for i in bpos]

    def same(self, other: "BinaryMatroid") -> bool:
        """Equality as labelled matroids, ignoring label order."""
        if set(self.labels) != set(other.labels) or self.rank != other.rank:
            return False
        return self == other.reorder(self.labels)

    # constructions
    def reorder(self, order: Sequence[str]) -> "BinaryMatroid":
        order = list(order)
        if sorted(order) != sorted(self.labels):
            raise ValueError("reorder needs a permutation of the labels")
        return BinaryMatroid.from_columns(order, [self.col(x) for x in order])

    def relabel(self, mapping: Mapping[str, str]) -> "BinaryMatroid":
        return BinaryMatroid.from_columns([mapping.get(x, x) for x in self.labels], self.cols)

    def dual(self) -> "BinaryMatroid":
        d = self._cache.get("dual")
        if d is not None:
            return d
        _, bpos, coords = reduce_columns(self.cols)
        bset = set(bpos)
        rest = [j for j in range(self.size) if j not in bset]
        dcols = [0] * self.size
        for t, j in enumerate(rest):
            dcols[j] = 1 << t
            for k in bits(coords[j]):
                dcols[bpos[k]] |= 1 << t
        d = BinaryMatroid.from_columns(self.labels, dcols)
        d._cache["dual"] = self
        self._cache["dual"] = d
        return d

    def delete(self, xs: Labels) -> "BinaryMatroid":
        m = self.mask(xs)
        keep = [j for j in range(self.size) if not (m >> j) & 1]
        return BinaryMatroid.from_columns([self.labels[j] for j in keep], [self.cols[j] for j in keep])

    def restrict(self, xs: Labels) -> "BinaryMatroid":
        return self.delete(self.full & ~self.mask(xs))

    def contract(self, xs: Labels) -> "BinaryMatroid":
        m = self.mask(xs)
        piv: Dict[int, int] = {}
        for j in bits(m):
            v = self.cols[j]
            while v:
                lb = v.bit_length() - 1
                p = piv.get(lb)
                if p is None:
                    piv[lb] = v
                    break
                v ^= p
        # fully reduce the span of the contracted set, then drop its pivot coordinates
        leads = sorted(piv, reverse=True)
        keep = [j for j in range(self.size) if not (m >> j) & 1]
        new_cols = []
        for j in keep:
            v = self.cols[j]
            for lb in leads:
                if (v >> lb) & 1:
                    v ^= piv[lb]
            new_cols.append(v)
        # squeeze out the pivot bit positions
        lead_set = set(leads)
        free = [b for b in range(self.rank) if b not in lead_set]
        squeezed = []
        for v in new_cols:
            w = 0
            for k, b in enumerate(free):
                if (v >> b) & 1:
                    w |= 1 << k
            squeezed.append(w)
        return BinaryMatroid.from_columns([self.labels[j] for j in keep], squeezed)

    def minor(self, contract: Labels = 0, delete: Labels = 0) -> "BinaryMatroid":
        c = self.mask(contract)
        d = self.mask(delete)
        if c & d:
            raise ValueError("contract and delete sets overlap")
        out = self.contract(c) if c else self
        if d:
            out = out.delete(self.names(d))
        return out

    def extend(self, label: str, col: int) -> "BinaryMatroid":
        """Add a column given in this matroid's coordinates."""
        if label in self.labels:
            raise ValueError(f"label {label} already present")
        if col >> self.rank:
            raise ValueError("column outside the span")
        return BinaryMatroid(self.labels + (label,), self.cols + (col,), self.rank)

    def coextend(self, label: str, row: int) -> "BinaryMatroid":
        """Add a basis element whose fundamental cocircuit is label plus the support of row.

        row is a mask over the current elements, interpreted in the dual:
        the new element is coextended so that its dual column is the sum of
        the dual columns of row's elements.
        """
        d = self.dual()
        v = 0
        for j in bits(row):
            v ^= d.cols[j]
        return d.extend(label, v).dual()

    def coextend_by_row(self, label: str, row: int) -> "BinaryMatroid":
        """Coextension adding a new row with entries at the positions of row.

        The representation gains a new coordinate; every element in row gets
        a 1 there and the new element is the unit vector of that coordinate.
        """
        r = self.rank
        cols = [c | (((row >> j) & 1) << r) for j, c in enumerate(self.cols)]
        return BinaryMatroid.from_columns(self.labels + (label,), cols + [1 << r])

    # loops, coloops, classes
    def loops(self) -> int:
        return sum(1 << j for j, c in enumerate(self.cols) if c == 0)

    def coloops(self) -> int:
        return self.dual().loops()

    def parallel_classes(self) -> List[int]:
        groups: Dict[int, int] = {}
        for j, c in enumerate(self.cols):
            if c:
                groups[c] = groups.get(c, 0) | (1 << j)
        return list(groups.values())

    def is_simple(self) -> bool:
        nz = [c for c in self.cols if c]
        return len(nz) == self.size and len(set(nz)) == len(nz)

    def is_cosimple(self) -> bool:
        return self.dual().is_simple()


def dual(M: BinaryMatroid) -> BinaryMatroid:
    return M.dual()


def minor(M: BinaryMatroid, C: Labels = 0, D: Labels = 0) -> BinaryMatroid:
    return M.minor(C, D)


# ---------------------------------------------------------------------------
# rank oracles

_TABLE_LIMIT = 24


def _popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int8)
    for i in range(n):
        pc[1 << i : 2 << i] = pc[: 1 << i] + 1
    return pc


def rank_table(M: BinaryMatroid) -> np.ndarray:
    """Rank of every subset, indexed by mask.

    The number of zero-sum subsets of X is 2^nullity(X); it is obtained by a
    subset-sum transform of the indicator of the cycle space.
    """
    t = M._cache.get("rank_table")
    if t is not None:
        return t
    n = M.size
    if n > _TABLE_LIMIT:
        raise ValueError(f"rank table limited to {_TABLE_LIMIT} elements")
    N = 1 << n
    s = np.zeros(N, dtype=np.uint64)
    for i in range(n):
        s[1 << i : 2 << i] = s[: 1 << i] ^ np.uint64(M.cols[i])
    z = (s == 0).astype(np.int32)
    del s
    for i in range(n):
        v = z.reshape(-1, 2, 1 << i)
        v[:, 1, :] += v[:, 0, :]
    _, e = np.frexp(z.astype(np.float64))
    null = (e - 1).astype(np.int8)
    pc = _pcache(n)
    t = (pc - null).astype(np.int8)
    M._cache["rank_table"] = t
    return t


_PC: Dict[int, np.ndarray] = {}


def _pcache(n: int) -> np.ndarray:
    pc = _PC.get(n)
    if pc is None:
        pc = _popcounts(n)
        _PC[n] = pc
    return pc


def _lambda_table(M: BinaryMatroid) -> np.ndarray:
    t = M._cache.get("lambda_table")
    if t is None:
        r = rank_table(M)
        t = (r + r[::-1] - M.rank).astype(np.int8)
        M._cache["lambda_table"] = t
    return t


def closure(M: BinaryMatroid, xs: Labels) -> int:
    m = M.mask(xs)
    base = [M.cols[i] for i in bits(m)]
    r = rank_of_vectors(base)
    out = m
    for j in range(M.size):
        if not (m >> j) & 1 and rank_of_vectors(base + [M.cols[j]]) == r:
            out |= 1 << j
    return out


def coclosure(M: BinaryMatroid, xs: Labels) -> int:
    return closure(M.dual(), M.mask(xs))


def lam(M: BinaryMatroid, xs: Labels) -> int:
    m = M.mask(xs)
    return M.rank_of(m) + M.rank_of(M.full & ~m) - M.rank


def rank_profile(M: BinaryMatroid, xs: Labels) -> dict:
    """Rank, corank, closures and connectivity of a subset.

    lambda is computed both as r(X)+r(E-X)-r(M) and r(X)+r*(X)-|X|.
    """
    m = M.mask(xs)
    r = M.rank_of(m)
    rs = M.corank_of(m)
    l1 = r + M.rank_of(M.full & ~m) - M.rank
    l2 = r + rs - popcount(m)
    if l1 != l2:
        raise AssertionError("connectivity formulas disagree")
    return {
        "rank": r,
        "corank": rs,
        "closure": closure(M, m),
        "coclosure": coclosure(M, m),
        "lambda": l1,
    }


# ---------------------------------------------------------------------------
# circuits

def _cycles_of_size(cols: Sequence[int], k: int) -> Iterable[Tuple[int, ...]]:
    n = len(cols)
    if k == 1:
        for i in range(n):
            if cols[i] == 0:
                yield (i,)
        return
    # meet in the middle on the last element
    where: Dict[int, List[int]] = {}
    for j, c in enumerate(cols):
        where.setdefault(c, []).append(j)
    for combo in combinations(range(n), k - 1):
        s = 0
        for i in combo:
            s ^= cols[i]
        for j in where.get(s, ()):
            if j > combo[-1]:
                yield combo + (j,)


def circuits_up_to(M: BinaryMatroid, size_cap: int, mode: str = "circuit") -> List[int]:
    """All circuits (or cocircuits) with at most size_cap elements, as masks."""
    if mode == "cocircuit":
        return circuits_up_to(M.dual(), size_cap, "circuit")
    if mode != "circuit":
        raise ValueError("mode is circuit or cocircuit")
    key = ("circuits", size_cap)
    got = M._cache.get(key)
    if got is not None:
        return list(got)
    found: List[int] = []
    for k in range(1, size_cap + 1):
        for combo in _cycles_of_size(M.cols, k):
            m = 0
            for i in combo:
                m |= 1 << i
            if any((c & m) == c for c in found):
                continue
            found.append(m)
    found.sort(key=lambda m: (popcount(m), bits(m)))
    M._cache[key] = tuple(found)
    return found


def triangles(M: BinaryMatroid) -> List[int]:
    return [c for c in circuits_up_to(M, 3) if popcount(c) == 3]


def triads(M: BinaryMatroid) -> List[int]:
    return triangles(M.dual())


def is_circuit(M: BinaryMatroid, xs: Labels) -> bool:
    m = M.mask(xs)
    if not m:
        return False
    s = 0
    for i in bits(m):
        s ^= M.cols[i]
    if s:
        return False
    k = popcount(m)
    return M.rank_of(m) == k - 1


def is_cocircuit(M: BinaryMatroid, xs: Labels) -> bool:
    return is_circuit(M.dual(), M.mask(xs))


def is_quad(M: BinaryMatroid, xs: Labels) -> bool:
    """Four-element circuit-cocircuit."""
    m = M.mask(xs)
    return popcount(m) == 4 and is_circuit(M, m) and is_cocircuit(M, m)


# ---------------------------------------------------------------------------
# simplification

def si_co(M: BinaryMatroid, mode: str = "simplify") -> Tuple[BinaryMatroid, Dict[str, str]]:
    """Simplification or cosimplification.

    Loops (coloops) are removed and each parallel (series) class keeps its
    smallest label. The map sends every removed non-loop element to the
    retained member of its class; retained elements map to themselves.
    """
    if mode == "cosimplify":
        S, mp = si_co(M.dual(), "simplify")
        return S.dual(), mp
    if mode != "simplify":
        raise ValueError("mode is simplify or cosimplify")
    drop = M.loops()
    mp: Dict[str, str] = {}
    for cls in M.parallel_classes():
        names = M.names(cls)
        keep = min(names)
        for x in names:
            mp[x] = keep
            if x != keep:
                drop |= M.mask(x)
    return M.delete(drop), mp


def simplify(M: BinaryMatroid) -> BinaryMatroid:
    return si_co(M, "simplify")[0]


def cosimplify(M: BinaryMatroid) -> BinaryMatroid:
    return si_co(M, "cosimplify")[0]


# ---------------------------------------------------------------------------
# connectivity

@dataclass(frozen=True)
class SeparationReport:
    k: int
    side_x: int
    vertical: bool
    small_side_size: int


@dataclass(frozen=True)
class ConnectivityReport:
    is_connected: bool
    is_3connected: bool
    is_internally_4connected: bool
    is_vertically_4connected: bool
    is_45_connected: bool
    is_almost_v4c: bool
    witness: Optional[SeparationReport]


def _first(mask: np.ndarray) -> Optional[int]:
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def separations(M: BinaryMatroid, k: int, vertical: bool = False, exact: bool = False) -> List[int]:
    """Masks X (containing element 0) with (X, E-X) a k-separation."""
    n = M.size
    if n == 0:
        return []
    lt = _lambda_table(M)
    pc = _pcache(n)
    cond = (pc >= k) & (pc <= n - k)
    cond &= (lt == k - 1) if exact else (lt < k)
    if vertical:
        r = rank_table(M)
        cond &= (r >= k) & (r[::-1] >= k)
    idx = np.flatnonzero(cond)
    return [int(x) for x in idx if x & 1]


def _has_sep(M: BinaryMatroid, k: int, lo: int, vertical: bool = False) -> Optional[int]:
    n = M.size
    lt = _lambda_table(M)
    pc = _pcache(n)
    cond = (pc >= lo) & (pc <= n - lo) & (lt < k)
    if vertical:
        r = rank_table(M)
        cond &= (r >= k) & (r[::-1] >= k)
    return _first(cond)


def is_connected(M: BinaryMatroid) -> bool:
    if M.size <= 1:
        return True
    return _has_sep(M, 1, 1) is None


def is_3connected(M: BinaryMatroid) -> bool:
    """No 1- or 2-separations."""
    got = M._cache.get("3c")
    if got is not None:
        return got
    n = M.size
    if n <= 3:
        out = _has_sep(M, 1, 1) is None and _has_sep(M, 2, 2) is None if n else True
    elif not M.is_simple() or not M.is_cosimple():
        out = False
    else:
        out = _has_sep(M, 1, 1) is None and _has_sep(M, 2, 2) is None
    M._cache["3c"] = out
    return out


def connectivity_report(M: BinaryMatroid) -> ConnectivityReport:
    got = M._cache.get("report")
    if got is not None:
        return got
    n = M.size
    witness = None

    def rep(k, x, vertical):
        small = min(popcount(x), n - popcount(x))
        return SeparationReport(k, x, vertical, small)

    x1 = _has_sep(M, 1, 1) if n else None
    conn = x1 is None
    x2 = _has_sep(M, 2, 2) if n else None
    three = conn and x2 is None
    if not conn:
        witness = rep(1, x1, False)
    elif not three:
        witness = rep(2, x2, False)
    x3 = _has_sep(M, 3, 4) if n else None
    i4c = three and x3 is None
    if three and x3 is not None:
        witness = rep(3, x3, False)
    x45 = _has_sep(M, 3, 5) if n else None
    c45 = three and x45 is None
    vx = None
    for k in (1, 2, 3):
        vx = _has_sep(M, k, k, vertical=True) if n else None
        if vx is not None:
            vk = k
            break
    v4c = vx is None
    if vx is not None and witness is None:
        witness = rep(vk, vx, True)
    v3c = all((_has_sep(M, k, k, vertical=True) if n else None) is None for k in (1, 2))
    almost = v3c and _almost_v4c_rest(M)
    out = ConnectivityReport(conn, three, i4c, v4c, c45, almost, witness)
    M._cache["report"] = out
    return out


def _almost_v4c_rest(M: BinaryMatroid) -> bool:
    """Every vertical 3-separation has a side spanned by a triad inside it."""
    n = M.size
    if n == 0:
        return True
    lt = _lambda_table(M)
    pc = _pcache(n)
    r = rank_table(M)
    cond = (pc >= 3) & (pc <= n - 3) & (lt < 3) & (r >= 3) & (r[::-1] >= 3)
    idx = np.flatnonzero(cond)
    if idx.size == 0:
        return True
    full = M.full
    ok = np.zeros(idx.size, dtype=bool)
    comp = full ^ idx
    for t in triads(M):
        rt = int(r[t])
        in_x = ((idx & t) == t) & (r[idx] == rt)
        in_y = ((comp & t) == t) & (r[comp] == rt)
        ok |= in_x | in_y
    return bool(ok.all())


# ---------------------------------------------------------------------------
# fans and small separators

def _is_triangle(M: BinaryMatroid, m: int) -> bool:
    return popcount(m) == 3 and is_circuit(M, m)


def _is_triad(M: BinaryMatroid, m: int) -> bool:
    return popcount(m) == 3 and is_cocircuit(M, m)


def _fan_kind(M: BinaryMatroid, seq: Sequence[int]) -> Optional[str]:
    """'fan', 'cofan' or None for an ordered index sequence of length >= 3."""
    tri = set(triangles(M))
    tra = set(triads(M))
    for kind, odd, even in (("fan", tri, tra), ("cofan", tra, tri)):
        good = True
        for i in range(len(seq) - 2):
            m = (1 << seq[i]) | (1 << seq[i + 1]) | (1 << seq[i + 2])
            # positions count from 1, so index 0 is an odd position
            if m not in (odd if i % 2 == 0 else even):
                good = False
                break
        if good:
            return kind
    return None


def fans(M: BinaryMatroid, max_len: Optional[int] = None) -> List[Tuple[str, Tuple[str, ...]]]:
    """Maximal ordered fans and cofans, one ordering per (kind, set).

    Each entry is (kind, ordered labels). Triangles and triads alone are
    fans of length three.
    """
    tri = triangles(M)
    tra = triads(M)
    if not tri and not tra:
        return []
    tri_s, tra_s = set(tri), set(tra)
    cap = max_len or M.size
    seqs: List[Tuple[str, Tuple[int, ...]]] = []

    def grow(kind, seq):
        extended = False
        if len(seq) < cap:
            i = len(seq) - 2  # index of the new 3-window start
            want = (tri_s if (i % 2 == 0) == (kind == "fan") else tra_s)
            last = (1 << seq[-2]) | (1 << seq[-1])
            for x in range(M.size):
                if x in seq:
                    continue
                if (last | (1 << x)) in want:
                    extended = True
                    grow(kind, seq + (x,))
        if not extended:
            seqs.append((kind, seq))

    for kind, starts in (("fan", tri), ("cofan", tra)):
        for t in starts:
            idx = bits(t)
            for a in idx:
                for b in idx:
                    if a == b:
                        continue
                    c = [x for x in idx if x not in (a, b)][0]
                    grow(kind, (a, b, c))
    # keep maximal sets, one ordering per kind and set
    best: Dict[Tuple[str, int], Tuple[int, ...]] = {}
    for kind, seq in seqs:
        m = sum(1 << x for x in seq)
        key = (kind, m)
        if key not in best or tuple(seq) < best[key]:
            best[key] = tuple(seq)
    masks = {m for (_, m) in best}
    out = []
    for (kind, m), seq in sorted(best.items(), key=lambda kv: (-popcount(kv[0][1]), kv[0][0], kv[1])):
        if any(o != m and (o & m) == m for o in masks):
            continue
        out.append((kind, tuple(M.labels[i] for i in seq)))
    return out


def good_elements(kind: str, seq: Sequence[str]) -> List[str]:
    """Good elements of a fan or cofan of length four or five.

    A cofan of length four is a reversed fan; its first element is good.
    A fan of length five has good elements e2 and e4; a cofan of length
    five has e1 and e5.
    """
    t = len(seq)
    if t == 4:
        if kind == "cofan":
            return [seq[0]]
        return [seq[-1]]
    if t == 5:
        if kind == "fan":
            return [seq[1], seq[3]]
        return [seq[0], seq[4]]
    return []


def guts(M: BinaryMatroid, xs: Labels) -> int:
    """X intersected with the closure of its complement."""
    m = M.mask(xs)
    return m & closure(M, M.full & ~m)


def coguts(M: BinaryMatroid, xs: Labels) -> int:
    m = M.mask(xs)
    return m & coclosure(M, M.full & ~m)


def interior(M: BinaryMatroid, xs: Labels) -> int:
    m = M.mask(xs)
    return m & ~guts(M, m)


def _ordered_fan(M: BinaryMatroid, m: int) -> Optional[Tuple[str, Tuple[int, ...]]]:
    from itertools import permutations

    for perm in permutations(bits(m)):
        kind = _fan_kind(M, perm)
        if kind:
            return kind, perm
    return None


def classify_small_separator(M: BinaryMatroid, xs: Labels) -> str:
    """Classify a 3-separator with at most five elements.

    Returns 'triad', 'fan', 'quad-closure', 'low-rank' (rank below three)
    or 'other' (never expected for binary 3-connected input).
    """
    m = M.mask(xs)
    if popcount(m) > 5:
        raise ValueError("separator has more than five elements")
    if M.rank_of(m) < 3:
        return "low-rank"
    if popcount(m) == 3 and _is_triad(M, m):
        return "triad"
    if popcount(m) in (4, 5) and _ordered_fan(M, m):
        return "fan"
    for q in combinations(bits(m), 4):
        qm = sum(1 << i for i in q)
        if is_quad(M, qm):
            if (m & ~closure(M, qm)) == 0 or (m & ~coclosure(M, qm)) == 0:
                return "quad-closure"
    return "other"


def fans_and_small_separators(M: BinaryMatroid) -> dict:
    """Fans with their good elements and the classification of small 3-separators."""
    if not is_3connected(M):
        raise NotThreeConnected("classification needs a 3-connected matroid")
    fl = fans(M)
    out_fans = [
        {"kind": kind, "order": seq, "good": good_elements(kind, seq)} for kind, seq in fl
    ]
    n = M.size
    lt = _lambda_table(M)
    pc = _pcache(n)
    cond = (pc >= 3) & (pc <= 5) & (pc <= n - 3) & (lt < 3)
    seps = {}
    for x in np.flatnonzero(cond):
        x = int(x)
        seps[tuple(M.names(x))] = classify_small_separator(M, x)
    return {"fans": out_fans, "small_separators": seps}


# ---------------------------------------------------------------------------
# 2-sums

def two_sum(M1: BinaryMatroid, M2: BinaryMatroid, p: str) -> BinaryMatroid:
    """2-sum along the shared basepoint p."""
    common = set(M1.labels) & set(M2.labels)
    if common != {p}:
        raise BadBasepoint("the parts must share exactly the basepoint")
    for M in (M1, M2):
        if M.col(p) == 0 or (M.coloops() >> M.index(p)) & 1:
            raise BadBasepoint("basepoint is a loop or coloop")
    # put p first so that it is the first unit vector in both parts; the
    # p coordinate is shared and the remaining coordinates are stacked
    A = M1.reorder([p] + [x for x in M1.labels if x != p])
    Bp = M2.reorder([p] + [x for x in M2.labels if x != p])
    r1, r2 = A.rank, Bp.rank
    labels = []
    cols = []
    for j, x in enumerate(A.labels[1:], start=1):
        c = A.cols[j]
        labels.append(x)
        cols.append((c >> 1) | ((c & 1) << (r1 - 1 + r2 - 1)))
    for j, x in enumerate(Bp.labels[1:], start=1):
        c = Bp.cols[j]
        labels.append(x)
        cols.append(((c >> 1) << (r1 - 1)) | ((c & 1) << (r1 - 1 + r2 - 1)))
    return BinaryMatroid.from_columns(labels, cols)

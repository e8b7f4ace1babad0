"""GF(2) linear algebra on int bit rows, standard forms and fundamental graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "Gf2Matrix",
    "FundamentalGraph",
    "NotABasis",
    "PivotOnNonEdge",
    "rref",
    "rank_of_vectors",
    "reduce_columns",
    "in_span",
    "standard_form",
    "fundamental_graph",
    "pivot_graph",
    "pivot",
    "columns_from_graph",
    "popcount",
    "bits",
]


class NotABasis(ValueError):
    """Requested basis is dependent or has the wrong size."""


class PivotOnNonEdge(ValueError):
    """Pivot requested on a pair that is not an edge of the fundamental graph."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> List[int]:
    """Positions of the set bits of x, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense GF(2) matrix; bit j of rows[i] is entry (i, j)."""

    n_rows: int
    n_cols: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n_rows:
            raise ValueError("row count mismatch")
        limit = 1 << self.n_cols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row wider than n_cols")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n_cols = len(data[0]) if data else 0
        rows = []
        for row in data:
            v = 0
            for j, x in enumerate(row):
                if x & 1:
                    v |= 1 << j
            rows.append(v)
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def from_columns(cls, cols: Sequence[int], n_rows: int) -> "Gf2Matrix":
        rows = [0] * n_rows
        for j, c in enumerate(cols):
            for i in bits(c):
                rows[i] |= 1 << j
        return cls(n_rows, len(cols), tuple(rows))

    def columns(self) -> List[int]:
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in bits(r):
                cols[j] |= 1 << i
        return cols

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    def rank(self) -> int:
        return rank_of_vectors(self.rows)


def rref(m: Gf2Matrix) -> Tuple[Gf2Matrix, List[int]]:
    """Reduced row echelon form and pivot columns (zero rows kept at the bottom)."""
    rows = list(m.rows)
    pivots: List[int] = []
    top = 0
    for j in range(m.n_cols):
        bit = 1 << j
        sel = None
        for i in range(top, len(rows)):
            if rows[i] & bit:
                sel = i
                break
        if sel is None:
            continue
        rows[top], rows[sel] = rows[sel], rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= rows[top]
        pivots.append(j)
        top += 1
        if top == len(rows):
            break
    return Gf2Matrix(m.n_rows, m.n_cols, tuple(rows)), pivots


def rank_of_vectors(vecs: Iterable[int]) -> int:
    """Rank of a family of vectors packed as ints."""
    piv: Dict[int, int] = {}
    for v in vecs:
        while v:
            lb = v.bit_length() - 1
            p = piv.get(lb)
            if p is None:
                piv[lb] = v
                break
            v ^= p
    return len(piv)


def in_span(v: int, vecs: Iterable[int]) -> bool:
    piv: Dict[int, int] = {}
    for w in vecs:
        while w:
            lb = w.bit_length() - 1
            p = piv.get(lb)
            if p is None:
                piv[lb] = w
                break
            w ^= p
    while v:
        lb = v.bit_length() - 1
        p = piv.get(lb)
        if p is None:
            return False
        v ^= p
    return True


def reduce_columns(cols: Sequence[int]) -> Tuple[int, List[int], List[int]]:
    """Greedy basis by position and coordinates of every column in it.

    Returns (rank, basis positions, coords) where coords[j] has bit k set
    when the k-th basis column occurs in the expansion of column j.
    """
    piv: Dict[int, Tuple[int, int]] = {}
    basis: List[int] = []
    coords: List[int] = []
    for j, c in enumerate(cols):
        comb = 0
        v = c
        while v:
            lb = v.bit_length() - 1
            p = piv.get(lb)
            if p is None:
                break
            v ^= p[0]
            comb ^= p[1]
        if v:
            k = len(basis)
            basis.append(j)
            piv[v.bit_length() - 1] = (v, comb ^ (1 << k))
            coords.append(1 << k)
        else:
            coords.append(comb)
    return len(basis), basis, coords


def standard_form(m: Gf2Matrix, labels: Sequence[str], basis: Optional[Iterable[str]] = None):
    """Standard form [I|A] of m.

    Returns (matrix, basis labels, cobasis labels); the matrix columns are
    ordered as basis labels followed by cobasis labels.
    """
    labels = list(labels)
    if len(labels) != m.n_cols:
        raise ValueError("label count mismatch")
    cols = m.columns()
    rank, bpos, _ = reduce_columns(cols)
    if basis is None:
        order = bpos
    else:
        want = list(basis)
        pos = {x: i for i, x in enumerate(labels)}
        try:
            order = [pos[x] for x in want]
        except KeyError as exc:
            raise NotABasis(f"unknown label {exc}") from None
        if len(order) != rank or rank_of_vectors(cols[i] for i in order) != rank:
            raise NotABasis("requested set is not a basis")
    rest = [j for j in range(len(labels)) if j not in set(order)]
    perm = list(order) + rest
    _, _, coords = reduce_columns([cols[j] for j in perm])
    out = Gf2Matrix.from_columns(coords, rank)
    return out, [labels[j] for j in order], [labels[j] for j in rest]


@dataclass(frozen=True)
class FundamentalGraph:
    """Bipartite graph G_B(M); bit j of adjacency[i] links basis_side[i] to cobasis_side[j]."""

    basis_side: Tuple[str, ...]
    cobasis_side: Tuple[str, ...]
    adjacency: Tuple[int, ...]

    def neighbours(self, x: str) -> List[str]:
        if x in self.basis_side:
            row = self.adjacency[self.basis_side.index(x)]
            return [self.cobasis_side[j] for j in bits(row)]
        j = self.cobasis_side.index(x)
        return [b for i, b in enumerate(self.basis_side) if (self.adjacency[i] >> j) & 1]

    def adjacent(self, x: str, y: str) -> bool:
        if x in self.cobasis_side:
            x, y = y, x
        i = self.basis_side.index(x)
        j = self.cobasis_side.index(y)
        return bool((self.adjacency[i] >> j) & 1)

    def edges(self) -> List[Tuple[str, str]]:
        return [
            (b, self.cobasis_side[j])
            for i, b in enumerate(self.basis_side)
            for j in bits(self.adjacency[i])
        ]

    def induced(self, keep: Iterable[str]) -> "FundamentalGraph":
        keep = set(keep)
        bi = [i for i, b in enumerate(self.basis_side) if b in keep]
        cj = [j for j, c in enumerate(self.cobasis_side) if c in keep]
        adj = []
        for i in bi:
            row = 0
            for k, j in enumerate(cj):
                if (self.adjacency[i] >> j) & 1:
                    row |= 1 << k
            adj.append(row)
        return FundamentalGraph(
            tuple(self.basis_side[i] for i in bi),
            tuple(self.cobasis_side[j] for j in cj),
            tuple(adj),
        )

    def same_as(self, other: "FundamentalGraph") -> bool:
        """Equality up to the order of the two vertex lists."""
        if set(self.basis_side) != set(other.basis_side):
            return False
        if set(self.cobasis_side) != set(other.cobasis_side):
            return False
        return set(self.edges()) == set(other.edges())


def fundamental_graph(M, B: Iterable[str]) -> FundamentalGraph:
    """G_B(M) for a matroid exposing labels and cols."""
    B = list(B)
    labels = list(M.labels)
    pos = {x: i for i, x in enumerate(labels)}
    try:
        bidx = [pos[x] for x in B]
    except KeyError as exc:
        raise NotABasis(f"unknown label {exc}") from None
    cols = list(M.cols)
    if len(bidx) != M.rank or rank_of_vectors(cols[i] for i in bidx) != M.rank:
        raise NotABasis("not a basis")
    bset = set(bidx)
    rest = [j for j in range(len(labels)) if j not in bset]
    _, _, coords = reduce_columns([cols[i] for i in bidx] + [cols[j] for j in rest])
    nb = len(bidx)
    adj = [0] * nb
    for k, j in enumerate(rest):
        for i in bits(coords[nb + k]):
            adj[i] |= 1 << k
    return FundamentalGraph(tuple(B), tuple(labels[j] for j in rest), tuple(adj))


def pivot_graph(G: FundamentalGraph, x: str, y: str) -> FundamentalGraph:
    """Pivot on the edge xy: toggle edges between N(x) and N(y), then swap x and y."""
    if x not in G.basis_side:
        x, y = y, x
    ix = G.basis_side.index(x)
    jy = G.cobasis_side.index(y)
    row_x = G.adjacency[ix]
    if not (row_x >> jy) & 1:
        raise PivotOnNonEdge(f"{x}{y} is not an edge")
    adj = list(G.adjacency)
    for i, row in enumerate(adj):
        if i != ix and (row >> jy) & 1:
            adj[i] = (row ^ row_x) | (1 << jy)
    basis = list(G.basis_side)
    cob = list(G.cobasis_side)
    basis[ix] = y
    cob[jy] = x
    return FundamentalGraph(tuple(basis), tuple(cob), tuple(adj))


def columns_from_graph(G: FundamentalGraph) -> Tuple[List[str], List[int]]:
    """Labels and column vectors of the matroid [I|A] encoded by G."""
    labels = list(G.basis_side) + list(G.cobasis_side)
    cols = [1 << i for i in range(len(G.basis_side))]
    for j in range(len(G.cobasis_side)):
        c = 0
        for i, row in enumerate(G.adjacency):
            if (row >> j) & 1:
                c |= 1 << i
        cols.append(c)
    return labels, cols


def pivot(M, B: Iterable[str], x: str, y: str) -> FundamentalGraph:
    """Fundamental graph of M for the basis (B - x) + y, obtained by the pivot rule."""
    return pivot_graph(fundamental_graph(M, B), x, y)

"""Delta-Y and Y-Delta exchanges, triangle multisets, legitimate sets and triad reduction."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .gf2 import bits, columns_from_graph, fundamental_graph
from .matroid import (
    BinaryMatroid,
    connectivity_report,
    is_circuit,
    is_cocircuit,
    si_co,
    triads,
    triangles,
)

__all__ = [
    "NotCoindependentTriangle",
    "NotIndependentTriad",
    "PreconditionViolated",
    "TriangleMultiset",
    "ReductionTrace",
    "delta_y",
    "wye_delta",
    "delta_y_by_graph",
    "delta_multi",
    "nabla_multi",
    "is_allowable",
    "allowable_triangles",
    "four_cocircuits_in",
    "legitimate_sets",
    "reduce_to_v4c",
    "mobius_circ",
]


class NotCoindependentTriangle(ValueError):
    """The set is not a triangle, or its complement does not span."""


class NotIndependentTriad(ValueError):
    """The set is not a triad, or it is dependent."""


class PreconditionViolated(ValueError):
    """Input fails a stated hypothesis; the message names the flag."""


def _triple(M: BinaryMatroid, T) -> List[str]:
    if isinstance(T, int):
        T = M.names(T)
    T = list(T)
    if len(set(T)) != 3:
        raise NotCoindependentTriangle("need three distinct elements")
    return sorted(T, key=M.index)


def _check_triangle(M: BinaryMatroid, T: List[str]) -> int:
    m = M.mask(T)
    if not is_circuit(M, m):
        raise NotCoindependentTriangle(f"{T} is not a triangle")
    if M.rank_of(M.full & ~m) != M.rank:
        raise NotCoindependentTriangle(f"{T} is not coindependent")
    return m


def delta_y(M: BinaryMatroid, T) -> BinaryMatroid:
    """Replace the coindependent triangle T by a triad, keeping the ground set.

    With x, y, z the members of T in label order and B a basis avoiding T,
    the rank goes up by one: x becomes the new unit vector, y and z gain a 1
    in the new coordinate, and then y and z swap labels. With this
    convention, contracting e in T from the result gives M \\ e with the
    two labels of T - e swapped.
    """
    T = _triple(M, T)
    _check_triangle(M, T)
    x, y, z = T
    rest = [u for u in M.labels if u not in T]
    N = M.reorder(rest + T)
    r = N.rank
    new = {}
    for u, c in zip(N.labels, N.cols):
        if u == x:
            new[u] = 1 << r
        elif u in (y, z):
            new[u] = c | (1 << r)
        else:
            new[u] = c
    new[y], new[z] = new[z], new[y]
    return BinaryMatroid.from_columns(M.labels, [new[u] for u in M.labels])


def wye_delta(M: BinaryMatroid, T) -> BinaryMatroid:
    """Replace the independent triad T by a triangle (dual of delta_y)."""
    try:
        return delta_y(M.dual(), T).dual()
    except NotCoindependentTriangle as exc:
        raise NotIndependentTriad(str(exc).replace("triangle", "triad")) from None


def delta_y_by_graph(M: BinaryMatroid, T, B: Optional[Sequence[str]] = None, e: Optional[str] = None) -> BinaryMatroid:
    """delta_y through the fundamental-graph rewrite, before any label swap.

    B is a basis not containing T and e a member of T outside B. The
    result agrees with delta_y up to swapping the labels of T - e.
    """
    T = _triple(M, T)
    _check_triangle(M, T)
    if B is None:
        B = M.reorder([u for u in M.labels if u not in T] + T).basis()
    B = list(B)
    if e is None:
        e = next(u for u in T if u not in B)
    if e in B or e not in T:
        raise ValueError("e must be a member of T outside B")
    G = fundamental_graph(M, B)
    f, g = [u for u in T if u != e]
    cob = list(G.cobasis_side)
    je = cob.index(e)

    def nbrs_of_basis(u):
        return G.adjacency[G.basis_side.index(u)]

    def drop_col(row):
        low = row & ((1 << je) - 1)
        high = row >> (je + 1)
        return low | (high << je)

    adj = [drop_col(row) for row in G.adjacency]
    cob.pop(je)
    pos = {u: j for j, u in enumerate(cob)}

    def as_row(names):
        v = 0
        for u in names:
            v |= 1 << pos[u]
        return v

    in_b = [u for u in (f, g) if u in B]
    if len(in_b) == 2:
        nf = set(G.neighbours(f)) - {e}
        ng = set(G.neighbours(g)) - {e}
        row = as_row(nf ^ ng)
    elif len(in_b) == 1:
        fb = in_b[0]
        gc = g if fb == f else f
        nb = set(G.neighbours(fb)) - {e}
        if G.adjacent(fb, gc):
            row = as_row(nb - {gc})
        else:
            row = as_row(nb | {gc})
    else:
        row = as_row([f, g])
    from .gf2 import FundamentalGraph

    H = FundamentalGraph(G.basis_side + (e,), tuple(cob), tuple(adj) + (row,))
    labels, cols = columns_from_graph(H)
    return BinaryMatroid.from_columns(labels, cols).reorder(M.labels)


# ---------------------------------------------------------------------------
# triangle multisets

@dataclass(frozen=True)
class TriangleMultiset:
    """Multiset of three-element label sets over a host matroid."""

    members: Tuple[Tuple[str, str, str], ...]

    @classmethod
    def of(cls, M: BinaryMatroid, items: Iterable) -> "TriangleMultiset":
        out = []
        for T in items:
            out.append(tuple(_triple(M, T)))
        return cls(tuple(sorted(out, key=lambda t: [M.index(u) for u in t])))

    def multiplicity(self, e: str) -> int:
        return sum(1 for T in self.members if e in T)

    def __len__(self) -> int:
        return len(self.members)


def _lift(M: BinaryMatroid, tris: Sequence[Sequence[str]]):
    """Parallel augmentation and a family of disjoint lifted triangles."""
    count: Dict[str, int] = {}
    lifted = []
    cur = M
    for T in tris:
        L = []
        for u in T:
            k = count.get(u, 0) + 1
            count[u] = k
            if k == 1:
                L.append(u)
            else:
                name = f"{u}#{k}"
                cur = cur.extend(name, cur.col(u))
                L.append(name)
        lifted.append(L)
    return cur, lifted


def delta_multi(M: BinaryMatroid, tris) -> BinaryMatroid:
    """Delta(M; T): add t_e - 1 parallel copies of e, then Delta-Y on disjoint lifts.

    Copies of e are labelled e#2, e#3, ... in the order triangles are listed.
    """
    if isinstance(tris, TriangleMultiset):
        tris = tris.members
    tris = [_triple(M, T) for T in tris]
    for T in tris:
        _check_triangle(M, T)
    cur, lifted = _lift(M, tris)
    for L in lifted:
        cur = delta_y(cur, L)
    return cur


def nabla_multi(M: BinaryMatroid, tris) -> BinaryMatroid:
    """Nabla(M; T) on a multiset of triads: the dual of delta_multi on the dual."""
    if isinstance(tris, TriangleMultiset):
        tris = tris.members
    return delta_multi(M.dual(), tris).dual()


# ---------------------------------------------------------------------------
# allowable triangles and legitimate sets

def _mk33():
    from .catalog import graphic_source

    return graphic_source("mk33")


def is_allowable(M: BinaryMatroid, T, forbidden: Optional[BinaryMatroid] = None) -> bool:
    """Delta_T(M) has no M(K3,3)-minor."""
    from .isomin import has_minor

    return has_minor(delta_y(M, T), forbidden or _mk33()) is None


def _coindependent(M: BinaryMatroid, m: int) -> bool:
    return M.rank_of(M.full & ~m) == M.rank


def allowable_triangles(M: BinaryMatroid) -> List[int]:
    return [t for t in triangles(M) if _coindependent(M, t) and is_allowable(M, t)]


def four_cocircuits_in(M: BinaryMatroid, m: int) -> List[int]:
    out = []
    for combo in combinations(bits(m), 4):
        c = sum(1 << i for i in combo)
        if is_cocircuit(M, c):
            out.append(c)
    return out


def _legit(M: BinaryMatroid, chosen: Sequence[int]) -> bool:
    for T, U in combinations(chosen, 2):
        for C in four_cocircuits_in(M, T | U):
            a, b = T & C, U & C
            if not any((W & a) and (W & b) for W in chosen):
                return False
    return True


def legitimate_sets(M: BinaryMatroid, allowable: Optional[Sequence[int]] = None) -> List[TriangleMultiset]:
    """Every set of allowable triangles meeting the four-cocircuit condition.

    The empty set is included.
    """
    if allowable is None:
        allowable = allowable_triangles(M)
    allowable = list(allowable)
    out = []
    for k in range(len(allowable) + 1):
        for chosen in combinations(allowable, k):
            if _legit(M, chosen):
                out.append(TriangleMultiset.of(M, chosen))
    return out


# ---------------------------------------------------------------------------
# reduction to vertical 4-connectivity

@dataclass(frozen=True)
class ReductionTrace:
    initial: BinaryMatroid
    triads_used: Tuple[Tuple[str, str, str], ...]
    final: BinaryMatroid
    simple_final: BinaryMatroid
    triangle_set: TriangleMultiset
    steps: Tuple[BinaryMatroid, ...] = field(default=())

    def rebuild(self) -> BinaryMatroid:
        """Delta(si(M0); T), which should be isomorphic to the initial matroid."""
        return delta_multi(self.simple_final, self.triangle_set)


def reduce_to_v4c(M: BinaryMatroid, check: bool = True) -> ReductionTrace:
    """Apply Y-Delta to triads until none remain.

    The triad chosen at each step is the least one in canonical order.
    """
    from .isomin import canonical_order, has_minor, is_cographic

    if check:
        if not connectivity_report(M).is_internally_4connected:
            raise PreconditionViolated("is_internally_4connected")
        if is_cographic(M):
            raise PreconditionViolated("non_cographic")
        if has_minor(M, _mk33()) is not None:
            raise PreconditionViolated("no_mk33_minor")
    cur = M
    used: List[Tuple[str, str, str]] = []
    steps = [M]
    while True:
        ts = triads(cur)
        if not ts:
            break
        rank_of = {u: i for i, u in enumerate(canonical_order(cur))}
        T = min(ts, key=lambda t: sorted(rank_of[u] for u in cur.names(t)))
        names = tuple(cur.names(T))
        if cur.rank_of(T) != 3:
            raise PreconditionViolated(f"triad {names} is dependent")
        cur = wye_delta(cur, names)
        used.append(names)
        steps.append(cur)
    for a, b in combinations(used, 2):
        if set(a) & set(b):
            raise PreconditionViolated("triads used are not disjoint")
    S, mp = si_co(cur, "simplify")
    tris = [tuple(mp[u] for u in T) for T in used]
    for t in tris:
        if len(set(t)) != 3 or not is_circuit(S, t):
            raise PreconditionViolated(f"{t} does not map to a triangle of si(M0)")
    return ReductionTrace(M, tuple(used), cur, S, TriangleMultiset.of(S, tris), tuple(steps))


def mobius_circ(r: int) -> BinaryMatroid:
    """Triangular Mobius matroid with a parallel copy x' added to every rim element."""
    from .catalog import mobius

    D = mobius("triangular", r)
    for x in [f"a{i}" for i in range(1, r)] + [f"e{i}" for i in range(1, r)]:
        D = D.extend(x + "'", D.col(x))
    return D

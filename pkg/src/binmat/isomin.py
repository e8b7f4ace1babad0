"""Canonical forms, isomorphism, minor search, induced minors and blocking sequences."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .gf2 import NotABasis, bits, popcount
from .matroid import BinaryMatroid, lam

__all__ = [
    "CanonicalKey",
    "MinorWitness",
    "NotExactSeparation",
    "canonical_form",
    "canonical_order",
    "is_isomorphic",
    "automorphisms_found",
    "embed_restriction",
    "has_minor",
    "induced_minor",
    "find_blocking_sequence",
    "blocking_conditions",
    "induces_separation",
    "is_cographic",
    "is_graphic",
    "is_regular",
]

CanonicalKey = bytes


class NotExactSeparation(ValueError):
    """(X, Y) is not an exact k-separation of the induced minor."""


# ---------------------------------------------------------------------------
# invariants

_SPACE_CAP = 14


def _code_words(gens: Sequence[int]) -> Optional[np.ndarray]:
    k = len(gens)
    if k > _SPACE_CAP:
        return None
    w = np.zeros(1 << k, dtype=np.uint64)
    for i, g in enumerate(gens):
        w[1 << i : 2 << i] = w[: 1 << i] ^ np.uint64(g)
    return w


def _row_masks(M: BinaryMatroid) -> List[int]:
    rows = [0] * M.rank
    for j, c in enumerate(M.cols):
        for i in bits(c):
            rows[i] |= 1 << j
    return rows


def _spaces(M: BinaryMatroid):
    got = M._cache.get("spaces")
    if got is None:
        cocycles = _code_words(_row_masks(M))
        cycles = _code_words(_row_masks(M.dual()))
        got = (cycles, cocycles)
        M._cache["spaces"] = got
    return got


def _spectra(M: BinaryMatroid) -> List[tuple]:
    """Per element: counts of cycles and of cocycles through it, by size."""
    n = M.size
    out = [[] for _ in range(n)]
    for words in _spaces(M):
        if words is None:
            for e in range(n):
                out[e].append(())
            continue
        wt = np.bitwise_count(words).astype(np.int64)
        for e in range(n):
            sel = ((words >> np.uint64(e)) & np.uint64(1)).astype(bool)
            out[e].append(tuple(np.bincount(wt[sel], minlength=n + 1).tolist()))
    return [tuple(x) for x in out]


def _short_words(M: BinaryMatroid, cap: int = 4) -> List[Tuple[int, int]]:
    """(space, mask) for cycles and cocycles of size at most cap."""
    got = M._cache.get(("short", cap))
    if got is not None:
        return got
    out = []
    for s, words in enumerate(_spaces(M)):
        if words is None:
            continue
        wt = np.bitwise_count(words)
        for w in words[(wt > 0) & (wt <= cap)]:
            out.append((s, int(w)))
    M._cache[("short", cap)] = out
    return out


def _rank_colors(sigs: List) -> List[int]:
    uniq = sorted(set(sigs))
    where = {s: i for i, s in enumerate(uniq)}
    return [where[s] for s in sigs]


def _incidence(M: BinaryMatroid):
    """Short cycles and cocycles used for refinement.

    The size cap is the least value in 3..6 giving at least |E| words, so it
    depends only on the isomorphism class.
    """
    got = M._cache.get("incidence")
    if got is not None:
        return got
    n = M.size
    words: List[Tuple[int, int]] = []
    for cap in range(3, 7):
        words = _short_words(M, cap)
        if len(words) >= n:
            break
    got = [(s, bits(w)) for s, w in words]
    M._cache["incidence"] = got
    return got


def _refine(col: List[int], inc) -> List[int]:
    """Coarsest equitable refinement of col with respect to the short words."""
    n = len(col)
    while True:
        per: List[List] = [[] for _ in range(n)]
        for s, mem in inc:
            cs = sorted(col[e] for e in mem)
            for e in mem:
                per[e].append((s, len(mem), col[e], tuple(cs)))
        new = _rank_colors([(col[e], tuple(sorted(per[e]))) for e in range(n)])
        if len(set(new)) == len(set(col)):
            return new
        col = new


def _refined_colors(M: BinaryMatroid, colors: Optional[Sequence] = None) -> List[int]:
    n = M.size
    base = list(colors) if colors is not None else [0] * n
    spec = _spectra(M)
    col = _rank_colors([(repr(base[e]), spec[e]) for e in range(n)])
    return _refine(col, _incidence(M))


# ---------------------------------------------------------------------------
# canonical labelling

_INDEP = 1 << 64


def _codes(cols: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    """Per element in order: its combination of earlier independent elements, or a marker."""
    piv: Dict[int, Tuple[int, int]] = {}
    nb = 0
    out = []
    for e in order:
        v = cols[e]
        comb = 0
        while v:
            lb = v.bit_length() - 1
            p = piv.get(lb)
            if p is None:
                break
            v ^= p[0]
            comb ^= p[1]
        if v:
            piv[v.bit_length() - 1] = (v, comb ^ (1 << nb))
            nb += 1
            out.append(_INDEP)
        else:
            out.append(comb)
    return tuple(out)


def _search(M: BinaryMatroid, colors: Optional[Sequence]):
    """Individualise and refine; the least leaf certificate wins."""
    n = M.size
    inc = _incidence(M)
    cols = M.cols
    best: List = [None, None]
    autos: List[Tuple[int, ...]] = []

    def dfs(col: List[int], path: List[int]):
        k = len(set(col))
        if k == n:
            order = sorted(range(n), key=col.__getitem__)
            cert = _codes(cols, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            elif cert == best[0]:
                sigma = [0] * n
                for a, b in zip(best[1], order):
                    sigma[a] = b
                autos.append(tuple(sigma))
            return
        sizes: Dict[int, int] = {}
        for c in col:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, m in sizes.items() if m > 1)
        cell = [e for e in range(n) if col[e] == target]
        done: List[int] = []
        for e in cell:
            if done and _same_orbit(e, done, path, autos, n):
                continue
            done.append(e)
            ind = [(c, 0 if (c != target or x == e) else 1) for x, c in enumerate(col)]
            dfs(_refine(_rank_colors(ind), inc), path + [e])

    dfs(_refined_colors(M, colors), [])
    return list(best[0]), best[1], autos


def _same_orbit(e: int, explored: List[int], prefix: List[int], autos, n: int) -> bool:
    gens = [g for g in autos if all(g[p] == p for p in prefix)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[a] = b
    r = find(e)
    return any(find(x) == r for x in explored)


def _canon(M: BinaryMatroid, colors: Optional[Sequence] = None):
    key = ("canon", None if colors is None else tuple(repr(c) for c in colors))
    got = M._cache.get(key)
    if got is not None:
        return got
    codes, order, autos = _search(M, colors)
    if colors is None:
        tag = ()
    else:
        tag = tuple(repr(colors[e]) for e in order)
    raw = repr((M.size, M.rank, tag, tuple(codes))).encode()
    got = (raw, tuple(order), autos)
    M._cache[key] = got
    return got


def canonical_form(M: BinaryMatroid, colors: Optional[Sequence] = None) -> CanonicalKey:
    """Bytes determined by the isomorphism class.

    colors optionally marks elements (one value per label position); then
    the key is for isomorphisms preserving the marks.
    """
    return _canon(M, colors)[0]


def canonical_order(M: BinaryMatroid, colors: Optional[Sequence] = None) -> List[str]:
    return [M.labels[i] for i in _canon(M, colors)[1]]


def automorphisms_found(M: BinaryMatroid) -> List[Dict[str, str]]:
    """Automorphisms met during canonical search (a generating subset, not the group)."""
    _, _, autos = _canon(M)
    return [{M.labels[i]: M.labels[g[i]] for i in range(M.size)} for g in autos]


def is_isomorphic(M: BinaryMatroid, N: BinaryMatroid) -> Optional[Dict[str, str]]:
    """Bijection from M's labels to N's realising an isomorphism, or None."""
    if M.size != N.size or M.rank != N.rank:
        return None
    km, om, _ = _canon(M)
    kn, on, _ = _canon(N)
    if km != kn:
        return None
    return {M.labels[a]: N.labels[b] for a, b in zip(om, on)}


# ---------------------------------------------------------------------------
# restriction embedding

def _basis_plan(N: BinaryMatroid):
    """An order of a basis of N and, per step, the non-basis elements it completes."""
    got = N._cache.get("plan")
    if got is not None:
        return got
    from .gf2 import reduce_columns

    _, bpos, coords = reduce_columns(N.cols)
    r = len(bpos)
    others = [j for j in range(N.size) if j not in set(bpos) and coords[j]]
    supports = {j: coords[j] for j in others}
    order: List[int] = []
    chosen = 0
    left = set(range(r))
    while left:
        best_k, best_score = None, None
        for k in sorted(left):
            c = chosen | (1 << k)
            score = sum(1 for j in others if supports[j] and (supports[j] & ~c) == 0)
            if best_score is None or score > best_score:
                best_k, best_score = k, score
        order.append(best_k)
        chosen |= 1 << best_k
        left.discard(best_k)
    steps = []
    done = set()
    chosen = 0
    for k in order:
        chosen |= 1 << k
        now = [j for j in others if j not in done and (supports[j] & ~chosen) == 0]
        done.update(now)
        steps.append(now)
    plan = ([bpos[k] for k in order], order, steps, supports)
    N._cache["plan"] = plan
    return plan


def embed_restriction(N: BinaryMatroid, S: BinaryMatroid) -> Optional[Dict[str, str]]:
    """Injective map of N's labels into S's labels making N a restriction of S.

    N and S must have equal rank.
    """
    if N.rank != S.rank or N.size > S.size:
        return None
    if N.rank == 0:
        if S.size >= N.size:
            return {x: y for x, y in zip(N.labels, S.labels)}
        return None
    bpos, order, steps, supports = _basis_plan(N)
    by_col: Dict[int, List[int]] = {}
    for j, c in enumerate(S.cols):
        by_col.setdefault(c, []).append(j)
    # loops of N first
    n_loops = [j for j in range(N.size) if N.cols[j] == 0 and j not in bpos]
    if len(n_loops) > len(by_col.get(0, [])):
        return None
    distinct = [c for c in by_col if c]
    r = N.rank
    assign: Dict[int, int] = {}
    img = [0] * r  # image column of basis coordinate k

    def take(c, used_cnt):
        lst = by_col.get(c)
        if not lst:
            return None
        k = used_cnt.get(c, 0)
        if k >= len(lst):
            return None
        return lst[k]

    def rec(step, span_piv, used_cnt):
        if step == r:
            return True
        k = order[step]
        for c in distinct:
            if used_cnt.get(c, 0) >= len(by_col[c]):
                continue
            # independence from images chosen so far
            v = c
            while v:
                lb = v.bit_length() - 1
                p = span_piv.get(lb)
                if p is None:
                    break
                v ^= p
            if not v:
                continue
            img[k] = c
            cnt = dict(used_cnt)
            cnt[c] = cnt.get(c, 0) + 1
            saved = {}
            ok = True
            for j in steps[step]:
                s = 0
                for t in bits(supports[j]):
                    s ^= img[t]
                got = take(s, cnt)
                if got is None:
                    ok = False
                    break
                cnt[s] = cnt.get(s, 0) + 1
                saved[j] = got
            if not ok:
                continue
            npiv = dict(span_piv)
            npiv[v.bit_length() - 1] = v
            if rec(step + 1, npiv, cnt):
                assign[bpos[step]] = by_col[c][used_cnt.get(c, 0)]
                assign.update(saved)
                return True
        return False

    if not rec(0, {}, {0: len(n_loops)}):
        return None
    for i, j in enumerate(n_loops):
        assign[j] = by_col[0][i]
    return {N.labels[a]: S.labels[b] for a, b in assign.items()}


# ---------------------------------------------------------------------------
# minors

@dataclass(frozen=True)
class MinorWitness:
    """M / contract_set \\ delete_set is isomorphic to N through iso_map (N label -> M label)."""

    contract_set: frozenset
    delete_set: frozenset
    iso_map: Dict[str, str]

    def check(self, M: BinaryMatroid, N: BinaryMatroid) -> bool:
        m = M.minor(list(self.contract_set), list(self.delete_set))
        inv = {v: k for k, v in self.iso_map.items()}
        if set(inv) != set(m.labels):
            return False
        if m.rank != N.rank or m.size != N.size:
            return False
        moved = m.relabel(inv)
        return moved.same(N)


def _normalize(S: BinaryMatroid, simple: bool, cosimple: bool, C: frozenset, D: frozenset):
    """Remove loops and parallel extras (deleted) and coloops and series extras (contracted)."""
    while True:
        changed = False
        if simple:
            drop = S.loops()
            for cls in S.parallel_classes():
                drop |= cls & ~(cls & -cls)
            if drop:
                D = D | frozenset(S.names(drop))
                S = S.delete(drop)
                changed = True
        if cosimple:
            d = S.dual()
            drop = d.loops()
            for cls in d.parallel_classes():
                drop |= cls & ~(cls & -cls)
            if drop:
                C = C | frozenset(S.names(drop))
                S = S.contract(drop)
                changed = True
        if not changed:
            return S, C, D


def _invariant_ok(S: BinaryMatroid, N: BinaryMatroid) -> bool:
    return S.rank >= N.rank and S.corank >= N.corank


def has_minor(M: BinaryMatroid, N: BinaryMatroid) -> Optional[MinorWitness]:
    """A witness that N is a minor of M, or None.

    Contractions are searched depth first with isomorphism deduplication;
    when the rank matches N the remaining step is a restriction test. When N
    is simple (cosimple) every state is simplified (cosimplified) first.
    """
    if N.size > M.size or N.rank > M.rank or N.corank > M.corank:
        return None
    kc = M.rank - N.rank
    kd = M.corank - N.corank
    if kc > kd:
        w = has_minor(M.dual(), N.dual())
        if w is None:
            return None
        return MinorWitness(w.delete_set, w.contract_set, w.iso_map)
    simple = N.is_simple()
    cosimple = N.is_cosimple()
    seen = set()

    def leaf(S, C, D):
        emb = embed_restriction(N, S)
        if emb is None:
            return None
        used = set(emb.values())
        rest = frozenset(x for x in S.labels if x not in used)
        return MinorWitness(C, D | rest, emb)

    def rec(S, C, D):
        S, C, D = _normalize(S, simple, cosimple, C, D)
        if not _invariant_ok(S, N):
            return None
        if S.size < N.size:
            return None
        key, _, autos = _canon(S)
        if key in seen:
            return None
        seen.add(key)
        if S.rank == N.rank:
            return leaf(S, C, D)
        done: List[int] = []
        for j in range(S.size):
            if S.cols[j] == 0:
                continue
            if done and _same_orbit(j, done, [], autos, S.size):
                continue
            done.append(j)
            x = S.labels[j]
            got = rec(S.contract(1 << j), C | {x}, D)
            if got is not None:
                return got
        return None

    return rec(M, frozenset(), frozenset())


# ---------------------------------------------------------------------------
# induced minors and blocking sequences

def induced_minor(M: BinaryMatroid, B: Iterable[str], X: Iterable[str]) -> BinaryMatroid:
    """M[X, B] = M / (B - X) \\ (E - (B u X))."""
    B = set(B)
    X = set(X)
    bm = M.mask(B)
    if popcount(bm) != M.rank or M.rank_of(bm) != M.rank:
        raise NotABasis("B is not a basis")
    contract = [x for x in B if x not in X]
    delete = [x for x in M.labels if x not in B and x not in X]
    return M.minor(contract, delete)


def _is_ksep(N: BinaryMatroid, X: Iterable[str], k: int) -> bool:
    X = set(X)
    m = N.mask(X)
    if popcount(m) < k or N.size - popcount(m) < k:
        return False
    return lam(N, m) < k


def blocking_conditions(M, B, X, Y, k, seq: Sequence[str]) -> bool:
    """Conditions (i)-(iii) for seq as a blocking sequence of (X, Y)."""
    X, Y = set(X), set(Y)
    if not seq:
        return False
    e1 = seq[0]
    if _is_ksep(induced_minor(M, B, X | Y | {e1}), X, k):
        return False
    for a, b in zip(seq, seq[1:]):
        if _is_ksep(induced_minor(M, B, X | Y | {a, b}), X | {a}, k):
            return False
    et = seq[-1]
    if _is_ksep(induced_minor(M, B, X | Y | {et}), X | {et}, k):
        return False
    return True


def find_blocking_sequence(M, B, X, Y, k) -> Optional[List[str]]:
    """Shortest blocking sequence of the exact k-separation (X, Y) of M[X u Y, B]."""
    X, Y, B = set(X), set(Y), set(B)
    base = induced_minor(M, B, X | Y)
    xm = base.mask(X)
    if min(len(X), len(Y)) < k or lam(base, xm) != k - 1:
        raise NotExactSeparation("(X, Y) is not an exact separation")
    pool = [x for x in M.labels if x not in X and x not in Y]
    for t in range(1, len(pool) + 1):
        for seq in _sequences(M, B, X, Y, k, pool, t):
            if _minimal(M, B, X, Y, k, seq):
                return list(seq)
    return None


def _sequences(M, B, X, Y, k, pool, t):
    """Sequences of length t satisfying (i) and (ii); (iii) checked at the end."""

    def ok_first(e):
        return not _is_ksep(induced_minor(M, B, X | Y | {e}), X, k)

    def ok_pair(a, b):
        return not _is_ksep(induced_minor(M, B, X | Y | {a, b}), X | {a}, k)

    def ok_last(e):
        return not _is_ksep(induced_minor(M, B, X | Y | {e}), X | {e}, k)

    def grow(seq):
        if len(seq) == t:
            if ok_last(seq[-1]):
                yield tuple(seq)
            return
        for e in pool:
            if e in seq:
                continue
            if ok_pair(seq[-1], e):
                yield from grow(seq + [e])

    for e in pool:
        if ok_first(e):
            yield from grow([e])


def _minimal(M, B, X, Y, k, seq) -> bool:
    t = len(seq)
    for r in range(1, t):
        for idx in combinations(range(t), r):
            if blocking_conditions(M, B, X, Y, k, [seq[i] for i in idx]):
                return False
    return True


def induces_separation(M, X, Y, k) -> Optional[int]:
    """A k-separation (X', Y') of M with X in X' and Y in Y', as a mask of X', or None."""
    X, Y = set(X), set(Y)
    rest = [x for x in M.labels if x not in X and x not in Y]
    xm = M.mask(X)
    for choice in product((0, 1), repeat=len(rest)):
        m = xm
        for bit, x in zip(choice, rest):
            if bit:
                m |= M.mask(x)
        if _is_ksep(M, M.names(m), k):
            return m
    return None


# ---------------------------------------------------------------------------
# graphic and cographic recognition

def _excluded():
    from . import catalog

    return [catalog.fano(), catalog.fano_dual(), catalog.graphic_source("mk33"), catalog.graphic_source("mk5")]


def is_cographic(M: BinaryMatroid) -> bool:
    """Binary and free of F7, F7*, M(K33) and M(K5) minors."""
    return all(has_minor(M, X) is None for X in _excluded())


def is_graphic(M: BinaryMatroid) -> bool:
    return is_cographic(M.dual())


def is_regular(M: BinaryMatroid) -> bool:
    from . import catalog

    return has_minor(M, catalog.fano()) is None and has_minor(M, catalog.fano_dual()) is None

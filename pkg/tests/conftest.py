from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from binmat.matroid import BinaryMatroid

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

# criterion number -> (passed, seconds, title); filled by test_acceptance
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, secs, title, budget = ACCEPTANCE[k]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d} {status} {secs:7.1f}s (budget {budget:g}s)  {title}")


@st.composite
def binary_matroids(draw, min_rank=1, max_rank=4, min_size=1, max_size=8):
    """Random binary matroid given by random columns; labels x0, x1, ..."""
    r = draw(st.integers(min_rank, max_rank))
    n = draw(st.integers(max(min_size, r), max(max_size, r)))
    cols = draw(st.lists(st.integers(0, (1 << r) - 1), min_size=n, max_size=n))
    return BinaryMatroid.from_columns([f"x{i}" for i in range(n)], cols)


def brute_isomorphic(A: BinaryMatroid, B: BinaryMatroid) -> bool:
    """Try every bijection; compare the sets of dependent circuits' supports."""
    if A.size != B.size or A.rank != B.rank:
        return False
    n = A.size

    def circuits(M, order):
        out = set()
        for k in range(1, n + 1):
            for combo in combinations(range(n), k):
                s = 0
                for i in combo:
                    s ^= M.cols[order[i]]
                if s == 0:
                    out.add(frozenset(combo))
        return out

    target = circuits(B, list(range(n)))
    for perm in permutations(range(n)):
        if circuits(A, list(perm)) == target:
            return True
    return False


def brute_has_minor(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Every independent contraction set of the right size, every deletion of the rest."""
    kc = M.rank - N.rank
    if kc < 0 or M.size < N.size:
        return False
    idx = range(M.size)
    for C in combinations(idx, kc):
        cm = sum(1 << i for i in C)
        if M.rank_of(cm) != kc:
            continue
        rest = [i for i in idx if i not in C]
        kd = len(rest) - N.size
        if kd < 0:
            continue
        for D in combinations(rest, kd):
            m = M.minor(cm, sum(1 << i for i in D))
            if m.rank == N.rank and brute_isomorphic(m, N):
                return True
    return False

"""Single-element extensions and coextensions up to isomorphism, splitters and reduction steps."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .isomin import canonical_form, canonical_order, has_minor, is_isomorphic
from .matroid import BinaryMatroid, connectivity_report, is_3connected, si_co

__all__ = [
    "GenFilter",
    "IsAWheel",
    "NotFound",
    "ReduceResult",
    "candidates",
    "fresh_label",
    "generate",
    "generate_labelled",
    "is_wheel",
    "is_splitter",
    "reduce_step",
]


class IsAWheel(ValueError):
    """Splitter test asked for a wheel."""


class NotFound(LookupError):
    """No reduction shape applies; a hypothesis of the search fails."""


@dataclass(frozen=True)
class GenFilter:
    """Conditions every generated matroid must satisfy.

    excluded: no minor isomorphic to any of these. required: a minor
    isomorphic to each of these. predicates: callables on the result.
    """

    three_connected: bool = False
    internally_4c: bool = False
    vertically_4c: bool = False
    simple: bool = False
    cosimple: bool = False
    excluded: Tuple[BinaryMatroid, ...] = ()
    required: Tuple[BinaryMatroid, ...] = ()
    predicates: Tuple[Callable[[BinaryMatroid], bool], ...] = ()

    def dual(self) -> "GenFilter":
        """Filter for the dual problem; predicates are applied to the dual."""
        if self.vertically_4c:
            raise ValueError("vertical 4-connectivity is not self-dual")
        preds = tuple((lambda p: (lambda X: p(X.dual())))(p) for p in self.predicates)
        return GenFilter(
            self.three_connected,
            self.internally_4c,
            False,
            self.cosimple,
            self.simple,
            tuple(X.dual() for X in self.excluded),
            tuple(X.dual() for X in self.required),
            preds,
        )

    def structural(self, X: BinaryMatroid) -> bool:
        if self.simple and not X.is_simple():
            return False
        if self.cosimple and not X.is_cosimple():
            return False
        if self.three_connected and not is_3connected(X):
            return False
        if self.internally_4c or self.vertically_4c:
            rep = connectivity_report(X)
            if self.internally_4c and not rep.is_internally_4connected:
                return False
            if self.vertically_4c and not rep.is_vertically_4connected:
                return False
        return True

    def minor_conditions(self, X: BinaryMatroid) -> bool:
        """Excluded and required minors; isomorphism invariant."""
        for N in self.excluded:
            if has_minor(X, N) is not None:
                return False
        for N in self.required:
            if has_minor(X, N) is None:
                return False
        return True

    def minors_ok(self, X: BinaryMatroid) -> bool:
        return self.minor_conditions(X) and all(p(X) for p in self.predicates)

    def accepts(self, X: BinaryMatroid) -> bool:
        return self.structural(X) and self.minors_ok(X)


def fresh_label(M: BinaryMatroid, label: str) -> str:
    """label, or label with a numeric suffix when it is taken."""
    k = 1
    out = label
    while out in M.labels:
        k += 1
        out = f"{label}{k}"
    return out


def candidates(M: BinaryMatroid, direction: str, label: str = "x") -> List[BinaryMatroid]:
    """All single-element extensions (or coextensions) by a nonzero vector."""
    label = fresh_label(M, label)
    if direction == "coextend":
        return [X.dual() for X in candidates(M.dual(), "extend", label)]
    if direction != "extend":
        raise ValueError("direction is extend or coextend")
    return [M.extend(label, v) for v in range(1, 1 << M.rank)]


def _quick_3c(M: BinaryMatroid, direction: str) -> Optional[Callable[[BinaryMatroid], bool]]:
    """For 3-connected M, an extension is 3-connected iff the new element is not parallel."""
    if M.size < 4 or not is_3connected(M):
        return None
    if direction == "extend":
        present = set(M.cols)
        return lambda X: X.cols[-1] not in present
    dpresent = set(M.dual().cols)
    return lambda X: X.dual().cols[-1] not in dpresent


def _plan(M: BinaryMatroid, direction: str, f: GenFilter):
    quick = _quick_3c(M, direction) if f.three_connected else None
    rest = GenFilter(
        False if quick is not None else f.three_connected,
        f.internally_4c,
        f.vertically_4c,
        f.simple,
        f.cosimple,
        f.excluded,
        f.required,
        f.predicates,
    )
    return quick, rest


def _survivors(M: BinaryMatroid, direction: str, f: GenFilter, label: str):
    quick, rest = _plan(M, direction, f)
    for X in candidates(M, direction, label):
        if quick is not None and not quick(X):
            continue
        if rest.structural(X):
            yield X, rest


def generate_labelled(M: BinaryMatroid, direction: str, f: GenFilter = GenFilter(), label: str = "x") -> List[BinaryMatroid]:
    """Every candidate satisfying f, without isomorphism reduction."""
    verdict: Dict[bytes, bool] = {}
    out = []
    for X, rest in _survivors(M, direction, f, label):
        key = canonical_form(X)
        if key not in verdict:
            verdict[key] = rest.minor_conditions(X)
        if verdict[key] and all(p(X) for p in rest.predicates):
            out.append(X)
    return out


def generate(
    M: BinaryMatroid,
    direction: str,
    f: GenFilter = GenFilter(),
    label: str = "x",
    mark_new: bool = False,
    marked: Sequence[str] = (),
) -> List[BinaryMatroid]:
    """Single-element extensions or coextensions satisfying f, one per isomorphism class.

    With mark_new or marked labels, classes are taken under isomorphisms
    that fix the new element and each marked label.
    """
    marks = sorted(set(marked))
    label = fresh_label(M, label)
    seen = set()
    out = []
    for X, rest in _survivors(M, direction, f, label):
        if mark_new or marks:
            colors = []
            for u in X.labels:
                if mark_new and u == label:
                    colors.append(1)
                elif u in marks:
                    colors.append(2 + marks.index(u))
                else:
                    colors.append(0)
            key = canonical_form(X, colors)
        else:
            key = canonical_form(X)
        if key in seen:
            continue
        seen.add(key)
        if rest.minors_ok(X):
            out.append(X)
    return out


# ---------------------------------------------------------------------------
# splitters

def is_wheel(M: BinaryMatroid) -> bool:
    from .catalog import graphic_source

    if M.size % 2 or M.size < 4:
        return False
    r = M.size // 2
    if M.rank != r:
        return False
    return is_isomorphic(M, graphic_source("wheel", r)) is not None


def is_splitter(M: BinaryMatroid, forbidden: Sequence[BinaryMatroid]) -> bool:
    """No 3-connected single-element extension or coextension avoids every forbidden minor."""
    if is_wheel(M):
        raise IsAWheel("splitter test needs a non-wheel")
    f = GenFilter(three_connected=True, excluded=tuple(forbidden))
    return not generate(M, "extend", f) and not generate(M, "coextend", f)


# ---------------------------------------------------------------------------
# reduction steps

@dataclass(frozen=True)
class ReduceResult:
    shape: str  # "i" M\\x, "ii" si(M/x), "iii" si(M/x/y), "iv" si(M/x/y/z)
    removed: Tuple[str, ...]
    result: BinaryMatroid
    flags: Dict[str, bool] = field(default_factory=dict)


def reduce_step(M: BinaryMatroid, N: BinaryMatroid) -> ReduceResult:
    """Find a proper internally 4-connected minor with an N-minor, at most four elements smaller.

    Shapes are tried in the order M\\x, si(M/x), si(M/x/y), si(M/x/y/z);
    elements are scanned in canonical order.
    """
    if M.size <= N.size or has_minor(M, N) is None:
        raise NotFound("N is not a proper minor of M")
    order = canonical_order(M)
    tried = set()

    def ok(R: BinaryMatroid):
        if R.size < N.size or M.size - R.size > 4:
            return None
        key = canonical_form(R)
        if key in tried:
            return None
        tried.add(key)
        rep = connectivity_report(R)
        if not rep.is_internally_4connected:
            return None
        if has_minor(R, N) is None:
            return None
        return {"internally_4connected": True, "vertically_4connected": rep.is_vertically_4connected}

    for x in order:
        R = M.delete([x])
        flags = ok(R)
        if flags is not None:
            return ReduceResult("i", (x,), R, flags)
    for k, shape in ((1, "ii"), (2, "iii"), (3, "iv")):
        for combo in combinations(order, k):
            if M.rank_of(list(combo)) < k:
                continue
            C = M.contract(list(combo))
            R, _ = si_co(C, "simplify")
            flags = ok(R)
            if flags is not None:
                flags = dict(flags)
                flags["contraction_vertically_4connected"] = connectivity_report(C).is_vertically_4connected
                return ReduceResult(shape, tuple(combo), R, flags)
    raise NotFound("no reduction shape applies")

"""BMX text format for binary matroids.

    BMX 1
    elements: a b c ...
    rows: r
    r lines of 0/1, one character per element
"""
from __future__ import annotations

from typing import List, TextIO

from .matroid import BinaryMatroid

__all__ = ["BmxError", "dumps", "loads", "read", "write"]


class BmxError(ValueError):
    """Malformed BMX input."""


def dumps(M: BinaryMatroid) -> str:
    """Standard form with respect to the lexicographically least basis in element order."""
    lines = ["BMX 1", "elements: " + " ".join(M.labels), f"rows: {M.rank}"]
    for i in range(M.rank):
        lines.append("".join("1" if c >> i & 1 else "0" for c in M.cols))
    return "\n".join(lines) + "\n"


def loads(text: str) -> BinaryMatroid:
    lines: List[str] = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    if len(lines) < 3 or lines[0] != "BMX 1":
        raise BmxError("expected a 'BMX 1' header followed by elements and rows lines")
    if not lines[1].startswith("elements:"):
        raise BmxError("line 2 must start with 'elements:'")
    labels = lines[1][len("elements:"):].split()
    if not labels:
        raise BmxError("no elements")
    if len(set(labels)) != len(labels):
        raise BmxError("duplicate element labels")
    if not lines[2].startswith("rows:"):
        raise BmxError("line 3 must start with 'rows:'")
    try:
        r = int(lines[2][len("rows:"):])
    except ValueError:
        raise BmxError("row count is not an integer") from None
    body = lines[3:]
    if r < 0 or len(body) != r:
        raise BmxError(f"expected {r} matrix rows, found {len(body)}")
    cols = [0] * len(labels)
    for i, row in enumerate(body):
        if len(row) != len(labels) or set(row) - {"0", "1"}:
            raise BmxError(f"row {i + 1} must be {len(labels)} characters of 0 and 1")
        for j, ch in enumerate(row):
            if ch == "1":
                cols[j] |= 1 << i
    return BinaryMatroid.from_columns(labels, cols)


def read(fh: TextIO) -> BinaryMatroid:
    return loads(fh.read())


def write(M: BinaryMatroid, fh: TextIO) -> None:
    fh.write(dumps(M))

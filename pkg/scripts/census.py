"""Print the census table: rank, size, family and connectivity flags of each entry."""
from __future__ import annotations

import time

from binmat.catalog import census


def main() -> None:
    t0 = time.perf_counter()
    rows = census()
    print(f"{'name':<14}{'rank':>5}{'size':>6}  {'kind':<11}{'i4c':>5}{'v4c':>5}{'triads':>8}")
    for r in rows:
        print(
            f"{r.name:<14}{r.rank:>5}{r.size:>6}  {r.kind:<11}"
            f"{'yes' if r.internally_4connected else 'no':>5}{'yes' if r.vertically_4connected else 'no':>5}{r.triads:>8}"
        )
    print(f"{len(rows)} entries in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

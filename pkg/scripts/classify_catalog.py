"""Classify every census entry and a few graphic families, printing each verdict."""
from __future__ import annotations

from binmat.catalog import CENSUS_IDS, by_name, graphic_source
from binmat.verify import classify


def main() -> None:
    items = [(name, by_name(name)) for name, _ in CENSUS_IDS]
    items += [(f"cubic_ladder_bond_{m}", graphic_source("cubic_ladder_bond", m)) for m in (6, 8, 10, 12)]
    items += [(f"quartic_ladder_bond_{m}", graphic_source("quartic_ladder_bond", m)) for m in (5, 7, 9)]
    items += [(f"wheel_{r}", graphic_source("wheel", r)) for r in (3, 4, 5)]
    for name, M in items:
        v = classify(M)
        print(f"{name:<24}{str(v):<28}{v.tag}")


if __name__ == "__main__":
    main()

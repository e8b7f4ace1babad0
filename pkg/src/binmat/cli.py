"""Command line interface: checks, classification, catalog output and single operations.

Exit status: 0 success, 1 a check failed or the answer is negative, 2 bad input.
"""
from __future__ import annotations

import json
import sys

import click

from . import bmx
from .catalog import UnknownId, by_name
from .deltawye import NotCoindependentTriangle, NotIndependentTriad, delta_y, wye_delta
from .gen import GenFilter, generate, generate_labelled
from .isomin import has_minor, is_isomorphic
from .matroid import triads, triangles

__all__ = ["main"]

_FILTER_KEYS = ("3c", "i4c", "v4c", "simple", "cosimple", "exmk33", "exdelta4", "exdelta4plus")


def _load(path: str):
    try:
        with click.open_file(path) as fh:
            return bmx.read(fh)
    except (OSError, bmx.BmxError, ValueError) as exc:
        raise click.exceptions.Exit(_bad(f"{path}: {exc}"))


def _bad(msg: str) -> int:
    click.echo(f"error: {msg}", err=True)
    return 2


def _parse_filter(spec: str) -> GenFilter:
    keys = [k.strip() for k in spec.split(",") if k.strip()]
    unknown = [k for k in keys if k not in _FILTER_KEYS]
    if unknown:
        raise click.exceptions.Exit(_bad(f"unknown filter keys {unknown}; choose from {', '.join(_FILTER_KEYS)}"))
    excluded = []
    names = {"exmk33": "mk33", "exdelta4": "delta_4", "exdelta4plus": "delta4_plus"}
    for k, name in names.items():
        if k in keys:
            excluded.append(by_name(name))
    return GenFilter(
        three_connected="3c" in keys,
        internally_4c="i4c" in keys,
        vertically_4c="v4c" in keys,
        simple="simple" in keys,
        cosimple="cosimple" in keys,
        excluded=tuple(excluded),
    )


@click.group()
def main() -> None:
    """Binary matroid computations and the check registry."""


@main.command()
@click.option("--all", "run_all", is_flag=True, help="Run every registered check.")
@click.option("--id", "ids", default="", help="Comma-separated check ids, e.g. V01,V12.")
@click.option("--json", "as_json", is_flag=True, help="Print reports as JSON.")
@click.option("--time-budget", type=float, default=None, help="Seconds allowed per check, overriding the defaults.")
@click.option("--jobs", type=int, default=1, show_default=True, help="Checks to run at once.")
def check(run_all: bool, ids: str, as_json: bool, time_budget, jobs: int) -> None:
    """Run registered checks and report pass or fail for each."""
    from .verify import UnknownCheckId, check_ids, run_checks

    wanted = [x.strip() for x in ids.split(",") if x.strip()]
    if run_all or not wanted:
        wanted = check_ids()
    try:
        reports = run_checks(wanted, budget=time_budget, jobs=jobs)
    except UnknownCheckId as exc:
        raise click.exceptions.Exit(_bad(f"unknown check id {exc.args[0]}"))
    if as_json:
        click.echo(json.dumps([r.as_dict() for r in reports], indent=2, default=str))
    else:
        for r in reports:
            click.echo(r.line())
            if not r.passed:
                click.echo(f"    expected: {json.dumps(r.expected, default=str)}")
                click.echo(f"    computed: {json.dumps(r.computed, default=str)}")
            if r.note:
                click.echo(f"    note: {r.note}")
    sys.exit(0 if all(r.passed for r in reports) else 1)


@main.command()
@click.argument("path")
def classify(path: str) -> None:
    """Classify the matroid in a BMX file."""
    from .verify import classify as run

    M = _load(path)
    v = run(M)
    click.echo(str(v))
    click.echo(f"  tag: {v.tag}")
    if v.evidence is not None:
        click.echo(f"  evidence: {v.evidence}")


@main.command()
@click.argument("name")
@click.option("--emit", is_flag=True, help="Print the BMX matrix.")
def catalog(name: str, emit: bool) -> None:
    """Look up a catalog entry by id (e.g. m5_11, delta_5, upsilon_6)."""
    try:
        M = by_name(name)
    except UnknownId as exc:
        raise click.exceptions.Exit(_bad(f"unknown catalog id {exc}"))
    if emit:
        click.echo(bmx.dumps(M), nl=False)
        return
    click.echo(f"{name}: rank {M.rank}, {M.size} elements, {len(triangles(M))} triangles, {len(triads(M))} triads")


@main.command()
@click.argument("path_m")
@click.argument("path_n")
def minor(path_m: str, path_n: str) -> None:
    """Decide whether the second matroid is a minor of the first."""
    M, N = _load(path_m), _load(path_n)
    w = has_minor(M, N)
    if w is None:
        click.echo("no")
        sys.exit(1)
    click.echo("yes")
    click.echo(f"  contract: {' '.join(sorted(w.contract_set))}")
    click.echo(f"  delete: {' '.join(sorted(w.delete_set))}")
    click.echo("  map: " + " ".join(f"{k}->{v}" for k, v in sorted(w.iso_map.items())))


@main.command()
@click.argument("path_a")
@click.argument("path_b")
def iso(path_a: str, path_b: str) -> None:
    """Decide whether two matroids are isomorphic."""
    A, B = _load(path_a), _load(path_b)
    m = is_isomorphic(A, B)
    if m is None:
        click.echo("no")
        sys.exit(1)
    click.echo("yes")
    click.echo("  map: " + " ".join(f"{k}->{v}" for k, v in sorted(m.items())))


def _grow(direction: str, path: str, filt: str, label: str, labelled: bool) -> None:
    M = _load(path)
    f = _parse_filter(filt)
    xs = generate_labelled(M, direction, f, label) if labelled else generate(M, direction, f, label)
    for i, X in enumerate(xs):
        if i:
            click.echo("")
        click.echo(bmx.dumps(X), nl=False)
    click.echo(f"{len(xs)} matroids", err=True)


_filter_opt = click.option("--filter", "filt", default="", help=f"Comma-separated: {', '.join(_FILTER_KEYS)}.")
_label_opt = click.option("--label", default="x", show_default=True, help="Label of the new element.")
_labelled_opt = click.option("--labelled", is_flag=True, help="Keep every labelled result, without isomorphism reduction.")


@main.command()
@click.argument("path")
@_filter_opt
@_label_opt
@_labelled_opt
def extend(path: str, filt: str, label: str, labelled: bool) -> None:
    """Single-element extensions, one per isomorphism class."""
    _grow("extend", path, filt, label, labelled)


@main.command()
@click.argument("path")
@_filter_opt
@_label_opt
@_labelled_opt
def coextend(path: str, filt: str, label: str, labelled: bool) -> None:
    """Single-element coextensions, one per isomorphism class."""
    _grow("coextend", path, filt, label, labelled)


def _triple(spec: str):
    parts = [p.strip() for p in spec.split(",") if p.strip()]
    if len(parts) != 3:
        raise click.exceptions.Exit(_bad("--triangle needs three comma-separated labels"))
    return parts


@main.command()
@click.argument("path")
@click.option("--triangle", required=True, help="Three labels L1,L2,L3.")
def deltay(path: str, triangle: str) -> None:
    """Replace a coindependent triangle by a triad."""
    M = _load(path)
    T = _triple(triangle)
    try:
        click.echo(bmx.dumps(delta_y(M, T)), nl=False)
    except (NotCoindependentTriangle, KeyError) as exc:
        raise click.exceptions.Exit(_bad(str(exc)))


@main.command()
@click.argument("path")
@click.option("--triangle", required=True, help="Three labels L1,L2,L3 forming an independent triad.")
def wyedelta(path: str, triangle: str) -> None:
    """Replace an independent triad by a triangle."""
    M = _load(path)
    T = _triple(triangle)
    try:
        click.echo(bmx.dumps(wye_delta(M, T)), nl=False)
    except (NotIndependentTriad, KeyError) as exc:
        raise click.exceptions.Exit(_bad(str(exc)))


if __name__ == "__main__":
    main()

"""Command-line interface: ``pi3mod compute``, ``pi3mod verify`` and ``pi3mod dim4``."""

from __future__ import annotations

import json
import sys

import click

from ._signs import MUTATIONS
from .dim4 import Dim4Input
from .pi3 import special_x, validate_input
from .report import build_dim4_report, build_report, render_dim4_text, render_text
from .ring import parse_element
from .sweep import cell_dict, verify_grid

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


def _invalid(msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(EXIT_INVALID)


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact pi_3 of pseudo-projective spaces as pi_1-modules."""


@main.command()
@click.option("--f", "f", type=int, required=True, help="Order of the fundamental group (f >= 2).")
@click.option("--x", "x_text", type=str, default=None, help="Coefficients c0,c1,...,c{f-1} of x.")
@click.option("--xtilde", type=int, default=None, help="Shorthand for x = xtilde([1] - [0]).")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def compute(f, x_text, xtilde, fmt):
    """Compute pi_2, H_3, Gamma(pi_2), A, B, pi_3 and the extension verdict."""
    if (x_text is None) == (xtilde is None):
        _invalid("give exactly one of --x and --xtilde")
    if f < 2:
        _invalid(f"f must be at least 2, got {f}")
    try:
        if xtilde is not None:
            if xtilde == 0:
                raise ValueError("xtilde must be nonzero")
            x = special_x(f, xtilde)
        else:
            x = parse_element(x_text, f)
        validate_input(f, x, allow_zero=False)
    except ValueError as exc:
        _invalid(str(exc))
    rep = build_report(f, x)
    click.echo(json.dumps(rep, indent=2) if fmt == "json" else render_text(rep))
    sys.exit(EXIT_MISMATCH if rep["axioms"] else EXIT_OK)


@main.command()
@click.option("--f-max", type=int, default=8, show_default=True)
@click.option("--xtilde-max", type=int, default=6, show_default=True)
@click.option("--mutate", type=click.Choice(MUTATIONS), default=None,
              help="Flip the sign of one cross-effect term (negative control).")
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def verify(f_max, xtilde_max, mutate, jobs, fmt):
    """Check every cell of the (f, xtilde) grid against the closed forms and three split deciders."""
    if f_max < 2 or xtilde_max < 1:
        _invalid("need --f-max >= 2 and --xtilde-max >= 1")
    cells = verify_grid(f_max, xtilde_max, mutate, max(1, jobs))
    bad = [c for c in cells if not c.ok]
    if fmt == "json":
        click.echo(json.dumps({"mutate": mutate, "cells": [cell_dict(c) for c in cells],
                               "mismatches": len(bad)}, indent=2))
    else:
        click.echo(f"{'f':>3} {'xt':>3}  closed  axioms  tau    order  system  oracle         expect  ok")
        for c in cells:
            click.echo(
                f"{c.f:>3} {c.xtilde:>3}  {_b(c.closed_form):6}  {_b(c.axioms):6}  {_b(c.tau_split):5}  "
                f"{str(c.class_order):5}  {_b(c.congruence_split):6}  {_b(c.oracle_split):5} {c.oracle_method:9}"
                f"{_b(c.expected_split):6}  {'yes' if c.ok else 'NO'}")
        for c in bad:
            click.echo(f"mismatch at f={c.f}, xtilde={c.xtilde}: {c.error or '; '.join(c.details) or 'verdicts differ'}",
                       err=True)
        click.echo(f"{len(cells) - len(bad)}/{len(cells)} cells agree")
    sys.exit(EXIT_MISMATCH if bad else EXIT_OK)


def _b(v) -> str:
    return "-" if v is None else ("yes" if v else "no")


@main.command()
@click.option("--xtilde", type=int, required=True)
@click.option("--ytilde", type=int, required=True)
@click.option("--alpha", type=str, default="0", show_default=True,
              help="Gamma(K) coordinates of alpha (one integer for f = 2).")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json")
def dim4(xtilde, ytilde, alpha, fmt):
    """Homology, boundary b and pi_3 of P_{2,x,y,alpha}."""
    try:
        coords = [int(t) for t in alpha.split(",") if t.strip()]
        inp = Dim4Input.special(xtilde, ytilde, coords)
    except ValueError as exc:
        _invalid(str(exc))
    rep = build_dim4_report(inp)
    click.echo(json.dumps(rep, indent=2) if fmt == "json" else render_dim4_text(rep))
    ok = rep["b"]["agree"] and rep["ext"]["lift_check"]
    sys.exit(EXIT_OK if ok else EXIT_MISMATCH)


if __name__ == "__main__":  # pragma: no cover
    main()

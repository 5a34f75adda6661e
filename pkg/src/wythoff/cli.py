"""Command-line front end.

Subcommands cover sequence generation, the identity suite, state
classification, winning-move queries, closed-form error scans, and the
prime analogue.  Machine formats (csv, json) are bit-stable: fixed
field order, integers only, no timings; summaries and diagnostics go to
stderr so the data stream stays parseable.

Exit codes: 0 success, 1 a verification failed or the queried position
is losing, 2 argument errors, 3 capacity limits.
"""

from __future__ import annotations

import csv
import functools
import json
import sys
from collections import Counter

import click

from .errors import CapacityError, WythoffError
from .game import GameState, Move, MoveKind, best_move, is_losing, solve_retrograde
from .primes import build_prime_gap, check_prime_claim, sieve_limit_for
from .sequences import beatty_p, beatty_q, build_recursive
from .verify import REGISTRY, report_text, verify_all, verify_identity

_FORMATS = click.Choice(["table", "csv", "json"])


def _engine_errors(f):
    """Map engine exceptions to the exit-code contract (2 usage, 3 capacity)."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except CapacityError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except WythoffError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _token(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _write_table(stream, headers, rows) -> None:
    cells = [[_token(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    stream.write("  ".join(h.rjust(w) for h, w in zip(headers, widths)) + "\n")
    for row in cells:
        stream.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")


def _write_csv(stream, headers, rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_token(v) for v in row])


def _write_json(stream, command, arguments, row_dicts) -> None:
    payload = {"meta": {"command": command, "arguments": arguments}, "rows": row_dicts}
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def _emit(out, fmt, command, arguments, headers, rows) -> None:
    """Write rows to stdout or --out in the chosen format."""

    def render(stream):
        if fmt == "table":
            _write_table(stream, headers, rows)
        elif fmt == "csv":
            _write_csv(stream, headers, rows)
        else:
            _write_json(
                stream, command, arguments, [dict(zip(headers, row)) for row in rows]
            )

    if out is None:
        render(sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            render(handle)


def _summary(out, fmt, line: str) -> None:
    """Human summary: stdout for tables, stderr for machine formats."""
    if fmt == "table" and out is None:
        click.echo(line)
    elif fmt == "table":
        with open(out, "a", encoding="utf-8") as handle:
            handle.write(line + "\n")
    else:
        click.echo(line, err=True)


def _describe_move(move: Move, x: int, y: int) -> str:
    """Render a move against the user's original pile order."""
    if move.kind is MoveKind.TAKE_BOTH:
        return f"take {move.amount} from both"
    smaller_is_first = x <= y
    from_first = (move.kind is MoveKind.TAKE_A) == smaller_is_first
    pile = "first" if from_first else "second"
    return f"take {move.amount} from the {pile} pile"


@click.group()
def main():
    """Complementary golden-ratio sequences, the take-away game they
    solve, and a prime analogue, with a machine-checked identity suite."""


@main.command()
@click.option("--n-max", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option(
    "--method",
    type=click.Choice(["recursive", "beatty", "both"]),
    default="recursive",
    show_default=True,
)
@click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@_engine_errors
def gen(n_max, method, fmt, out):
    """Emit the first N sequence pairs (recursion, closed form, or both)."""
    arguments = {"n_max": n_max, "method": method, "format": fmt}
    if method == "recursive":
        table = build_recursive(n_max)
        headers = ["n", "p", "q"]
        rows = [[n, table.p[n], table.q[n]] for n in range(1, n_max + 1)]
    elif method == "beatty":
        headers = ["n", "p", "q"]
        rows = [[n, beatty_p(n), beatty_q(n)] for n in range(1, n_max + 1)]
    else:
        table = build_recursive(n_max)
        headers = ["n", "p_rec", "q_rec", "p_beatty", "q_beatty", "e"]
        rows = []
        for n in range(1, n_max + 1):
            pb = beatty_p(n)
            rows.append([n, table.p[n], table.q[n], pb, pb + n, table.p[n] - pb])
    _emit(out, fmt, "gen", arguments, headers, rows)


@main.command()
@click.option("--identity", "identity_id", default=None, metavar="ID")
@click.option("--all", "run_all", is_flag=True, help="Run the whole registry.")
@click.option("--n-max", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--game-cap", type=click.IntRange(min=1), default=300, show_default=True)
@click.option(
    "--prime-n-max", type=click.IntRange(min=1), default=100, show_default=True
)
@click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@_engine_errors
def verify(identity_id, run_all, n_max, game_cap, prime_n_max, fmt, out):
    """Check registered identities; exit 1 if any report fails."""
    if run_all == (identity_id is not None):
        raise click.UsageError("pass exactly one of --identity ID or --all")
    if run_all:
        reports = verify_all(n_max, game_cap, prime_n_max)
    else:
        ident = REGISTRY.get(identity_id)
        if ident is None:
            raise click.UsageError(
                f"unknown identity {identity_id!r}; known: {', '.join(REGISTRY)}"
            )
        bound = {"table": n_max, "game": game_cap, "prime": prime_n_max}[ident.kind]
        reports = [verify_identity(identity_id, bound)]

    arguments = {
        "identity": identity_id if identity_id else "all",
        "n_max": n_max,
        "game_cap": game_cap,
        "prime_n_max": prime_n_max,
        "format": fmt,
    }
    if fmt == "table":
        lines = [report_text(r) for r in reports]

        def render(stream):
            for line in lines:
                stream.write(line + "\n")

        if out is None:
            render(sys.stdout)
        else:
            with open(out, "w", encoding="utf-8") as handle:
                render(handle)
    elif fmt == "csv":
        headers = ["identity", "lo", "hi", "passed", "counterexamples"]
        rows = [
            [r.identity_id, r.lo, r.hi, r.passed, len(r.counterexamples)]
            for r in reports
        ]
        _emit(out, fmt, "verify", arguments, headers, rows)
    else:
        payload_rows = [r.to_dict() for r in reports]

        def render(stream):
            _write_json(stream, "verify", arguments, payload_rows)

        if out is None:
            render(sys.stdout)
        else:
            with open(out, "w", encoding="utf-8", newline="") as handle:
                render(handle)

    failed = [r.identity_id for r in reports if not r.passed]
    _summary(
        out,
        fmt,
        f"{len(reports) - len(failed)} of {len(reports)} identities passed"
        + (f"; FAILED: {', '.join(failed)}" if failed else ""),
    )
    if failed:
        sys.exit(1)


@main.command()
@click.argument("a", type=click.IntRange(min=0))
@click.argument("b", type=click.IntRange(min=0))
@click.option(
    "--oracle",
    type=click.Choice(["closed", "brute"]),
    default="closed",
    show_default=True,
)
@click.option("--game-cap", type=click.IntRange(min=1), default=300, show_default=True)
@_engine_errors
def classify(a, b, oracle, game_cap):
    """Report whether the position A B is winning or losing for the mover."""
    state = GameState.of(a, b)
    if oracle == "closed":
        click.echo("LOSING" if is_losing(state) else "WINNING")
        return
    if state.b > game_cap:
        raise CapacityError(
            f"larger pile {state.b} exceeds the brute-force cap {game_cap};"
            " raise --game-cap"
        )
    result = solve_retrograde(game_cap).classify(state)
    if result.witness is None:
        click.echo("LOSING")
    else:
        click.echo(f"WINNING ({_describe_move(result.witness, a, b)})")


@main.command(name="best-move")
@click.argument("a", type=click.IntRange(min=0))
@click.argument("b", type=click.IntRange(min=0))
@_engine_errors
def best_move_cmd(a, b):
    """Print one winning move from A B, or exit 1 if the position is losing."""
    state = GameState.of(a, b)
    if is_losing(state):
        click.echo("position is losing")
        sys.exit(1)
    click.echo(_describe_move(best_move(state), a, b))


@main.command(name="error-term")
@click.option("--n-max", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@_engine_errors
def error_term(n_max, fmt, out):
    """Scan the gap between the recursion and the closed form."""
    table = build_recursive(n_max)
    headers = ["n", "p", "p_beatty", "e"]
    rows = []
    for n in range(1, n_max + 1):
        pb = beatty_p(n)
        rows.append([n, table.p[n], pb, table.p[n] - pb])
    _emit(out, fmt, "error-term", {"n_max": n_max, "format": fmt}, headers, rows)
    counts = Counter(row[3] for row in rows)
    rendered = ", ".join(f"{e}: {counts[e]}" for e in sorted(counts))
    _summary(out, fmt, f"histogram {{{rendered}}}")


@main.command()
@click.option("--n-max", type=click.IntRange(min=3), default=100, show_default=True)
@click.option("--sieve-limit", type=click.IntRange(min=4), default=None)
@click.option("--format", "fmt", type=_FORMATS, default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@_engine_errors
def primes(n_max, sieve_limit, fmt, out):
    """Check the composite-index identity for prime indices 3..N."""
    limit = sieve_limit if sieve_limit is not None else sieve_limit_for(n_max)
    table = build_prime_gap(limit)
    headers = ["n", "p_n", "index", "q_at_index", "holds"]
    rows = []
    for n in range(3, n_max + 1):
        ev = check_prime_claim(table, n)
        rows.append([ev.n, ev.p_n, ev.index, ev.q_at_index, ev.holds])
    arguments = {"n_max": n_max, "sieve_limit": limit, "format": fmt}
    _emit(out, fmt, "primes", arguments, headers, rows)
    holding = sum(1 for row in rows if row[4])
    _summary(out, fmt, f"claim holds for {holding} of {len(rows)} indices")
    if holding != len(rows):
        sys.exit(1)

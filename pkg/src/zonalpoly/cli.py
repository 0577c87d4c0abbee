"""Command-line surface: table generation, verification, and estimation.

Output conventions: exact rationals serialize as strings like ``3/8``
(plain integers omit the denominator), floats with 17 significant
digits, partitions as comma-joined parts with the empty partition as an
empty string.  Exit codes: 0 success, 1 verification failure, 2 usage
error.  All commands are deterministic given the same options and seed.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import factorial

import click

from .moments import (
    DiagonalSpec,
    MomentReport,
    hyper0f0,
    mc_exponential_trace,
    mc_linear_trace_power,
    mc_splitting,
    mc_trace_power,
)
from .partitions import Partition, dominated_by, partitions_of
from .reference import GOLDEN_CHARACTER_DEGREES, GOLDEN_POWERSUM_ROWS
from .symfunc import MONOMIAL, POWERSUM, SymPoly
from .zonal import (
    character_degree,
    check_leading_coefficients,
    check_trace_identity,
    zonal_in_powersums,
    zonal_row,
)

#: Table generation beyond this degree is refused; the recursion stays
#: exact but the partition count makes it slow.
DEGREE_CEILING = 12

ESTIMATE_KINDS = ("trace-power", "zonal-split", "trace-AH", "exp-series")


def format_partition(p) -> str:
    return ",".join(str(x) for x in p)


def parse_partition(text: str) -> Partition:
    if not text.strip():
        return Partition()
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise click.UsageError(f"bad partition {text!r}: {exc}") from exc


def parse_spectrum(text: str, option: str) -> DiagonalSpec:
    try:
        return DiagonalSpec.of(Fraction(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad eigenvalue list for {option}: {text!r}") from exc


def format_float(x: float) -> str:
    return f"{x:.17g}"


def powersum_label(p) -> str:
    factors = []
    for k in sorted(set(p)):
        mult = p.count(k)
        factors.append(f"s{k}^{mult}" if mult > 1 else f"s{k}")
    return "*".join(factors)


def powersum_latex(p) -> str:
    factors = []
    for k in sorted(set(p)):
        mult = p.count(k)
        factors.append(f"s_{{{k}}}^{{{mult}}}" if mult > 1 else f"s_{{{k}}}")
    return " ".join(factors)


@click.group()
def main() -> None:
    """Exact zonal polynomial tables, identities, and Monte Carlo checks."""


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _table_payload(degree: int, basis: str) -> dict:
    columns = partitions_of(degree)
    rows = []
    for kappa in partitions_of(degree):
        poly = zonal_row(kappa) if basis == MONOMIAL else zonal_in_powersums(kappa)
        rows.append(
            {
                "partition": format_partition(kappa),
                "coefficients": [str(poly.coefficient(lam)) for lam in columns],
                "character_degree": character_degree(kappa),
            }
        )
    return {
        "degree": degree,
        "basis": basis,
        "columns": [format_partition(lam) for lam in columns],
        "rows": rows,
    }


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit_csv(payload: dict, label) -> str:
    columns = [parse_partition(c) for c in payload["columns"]]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kappa", *(label(c) for c in columns), "chi"])
    for row in payload["rows"]:
        writer.writerow([row["partition"], *row["coefficients"], row["character_degree"]])
    return buf.getvalue()


def _emit_text(payload: dict, label) -> str:
    columns = [parse_partition(c) for c in payload["columns"]]
    header = ["kappa", *(label(c) for c in columns), "chi"]
    body = [
        [row["partition"], *row["coefficients"], str(row["character_degree"])]
        for row in payload["rows"]
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
    lines = [
        "  ".join(cell.rjust(w) for cell, w in zip(line, widths))
        for line in [header, *body]
    ]
    return "\n".join(lines) + "\n"


def _emit_latex(payload: dict) -> str:
    columns = [parse_partition(c) for c in payload["columns"]]
    if payload["basis"] == POWERSUM:
        heads = [f"${powersum_latex(c)}$" for c in columns]
    else:
        heads = [f"$m_{{({format_partition(c)})}}$" for c in columns]
    lines = [
        r"\begin{tabular}{|c|" + "c" * len(columns) + "|c|}",
        r"\hline",
        " & ".join([r"$\kappa$", *heads, r"$\chi$"]) + r" \\",
        r"\hline",
    ]
    for row in payload["rows"]:
        cells = [f"({row['partition']})", *row["coefficients"], str(row["character_degree"])]
        lines.append(" & ".join(cells) + r" \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


@main.command()
@click.option("--f", "degree", type=int, required=True, help="Degree of the table.")
@click.option(
    "--basis",
    type=click.Choice([MONOMIAL, POWERSUM]),
    default=POWERSUM,
    show_default=True,
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "csv", "latex", "text"]),
    default="text",
    show_default=True,
)
def table(degree: int, basis: str, fmt: str) -> None:
    """Print the full coefficient table for one degree."""
    if not 1 <= degree <= DEGREE_CEILING:
        raise click.UsageError(f"--f must be between 1 and {DEGREE_CEILING}")
    payload = _table_payload(degree, basis)
    if fmt == "json":
        click.echo(_emit_json(payload), nl=False)
    elif fmt == "csv":
        label = powersum_label if basis == POWERSUM else lambda c: f"m[{format_partition(c)}]"
        click.echo(_emit_csv(payload, label), nl=False)
    elif fmt == "latex":
        click.echo(_emit_latex(payload), nl=False)
    else:
        label = powersum_label if basis == POWERSUM else lambda c: f"m[{format_partition(c)}]"
        click.echo(_emit_text(payload, label), nl=False)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def parse_degree_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            degrees = list(range(int(lo), int(hi) + 1))
        else:
            degrees = [int(text)]
    except ValueError as exc:
        raise click.UsageError(f"bad degree range {text!r}; use N or A..B") from exc
    if not degrees or degrees[0] < 1:
        raise click.UsageError(f"degree range {text!r} must start at 1 or above")
    return degrees


def _verify_degree(f: int) -> list[str]:
    """One line per check; failing lines start with FAIL."""
    lines = []

    bad_norm = [
        kappa
        for kappa in partitions_of(f)
        if zonal_row(kappa).coefficient((1,) * f) != factorial(f)
    ]
    lines.append(
        f"f={f} normalization: ok"
        if not bad_norm
        else f"FAIL f={f} normalization: rows {[format_partition(k) for k in bad_norm]}"
    )

    bad_tri = [
        (kappa, lam)
        for kappa in partitions_of(f)
        for lam in zonal_row(kappa).coeffs
        if not dominated_by(lam, kappa)
    ]
    lines.append(
        f"f={f} triangularity: ok"
        if not bad_tri
        else f"FAIL f={f} triangularity: stray coefficients {bad_tri}"
    )

    lines.append(
        f"f={f} leading coefficients: ok"
        if check_leading_coefficients(f)
        else f"FAIL f={f} leading coefficients: expected (2f-1)!! and f!"
    )

    ok, diff = check_trace_identity(f)
    lines.append(
        f"f={f} trace identity: ok"
        if ok
        else f"FAIL f={f} trace identity: discrepancy "
        + str({format_partition(k): str(v) for k, v in diff.items()})
    )

    golden = GOLDEN_POWERSUM_ROWS.get(f)
    if golden is not None:
        mismatched = []
        for kappa, expected in golden.items():
            want = SymPoly(f, POWERSUM, {k: Fraction(v) for k, v in expected.items()})
            if zonal_in_powersums(kappa) != want:
                mismatched.append(format_partition(kappa))
        skipped = len(partitions_of(f)) - len(golden)
        note = f" ({skipped} rows without reference skipped)" if skipped else ""
        lines.append(
            f"f={f} golden rows: ok ({len(golden)} rows{note})"
            if not mismatched
            else f"FAIL f={f} golden rows: mismatch at {mismatched}"
        )

        bad_chi = [
            format_partition(kappa)
            for kappa in partitions_of(f)
            if kappa in GOLDEN_CHARACTER_DEGREES
            and character_degree(kappa) != GOLDEN_CHARACTER_DEGREES[kappa]
        ]
        lines.append(
            f"f={f} character degrees: ok"
            if not bad_chi
            else f"FAIL f={f} character degrees: mismatch at {bad_chi}"
        )
    return lines


@main.command()
@click.option("--f", "frange", default="1..6", show_default=True, help="Degree or range A..B.")
@click.pass_context
def verify(ctx: click.Context, frange: str) -> None:
    """Check tables against golden rows and structural identities."""
    failed = False
    for f in parse_degree_range(frange):
        for line in _verify_degree(f):
            click.echo(line)
            failed = failed or line.startswith("FAIL")
    ctx.exit(1 if failed else 0)


# ---------------------------------------------------------------------------
# estimate
# ---------------------------------------------------------------------------


def _report_payload(kind: str, params: dict, report: MomentReport) -> dict:
    exact = report.exact_value
    return {
        "kind": kind,
        "parameters": params,
        "exact": str(exact) if isinstance(exact, Fraction) else format_float(exact),
        "estimate": format_float(report.mc_estimate),
        "std_err": format_float(report.mc_std_err),
        "z_score": format_float(report.z_score),
        "samples": report.samples,
        "resampled": report.resampled,
    }


@main.command()
@click.argument("kind", type=click.Choice(ESTIMATE_KINDS))
@click.option("--f", "degree", type=int, default=None, help="Trace power.")
@click.option("--n", "dim", type=int, default=None, help="Expected dimension (validated).")
@click.option("--A", "a_spec", "--a", default=None, help="Eigenvalues, e.g. 1,2 or 1/2,3.")
@click.option("--B", "b_spec", "--b", default=None, help="Eigenvalues of the second matrix.")
@click.option("--kappa", default=None, help="Partition, e.g. 2,1.")
@click.option("--samples", type=int, default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="64-bit RNG seed.")
@click.option("--threads", type=int, default=1, show_default=True, help="Worker cap for MC shards.")
@click.option("--max-degree", type=int, default=12, show_default=True, help="Series truncation.")
def estimate(
    kind: str,
    degree: int | None,
    dim: int | None,
    a_spec: str | None,
    b_spec: str | None,
    kappa: str | None,
    samples: int,
    seed: int,
    threads: int,
    max_degree: int,
) -> None:
    """Run one Monte Carlo experiment and print a JSON report."""
    if samples < 2:
        raise click.UsageError("--samples must be at least 2")
    if threads < 1:
        raise click.UsageError("--threads must be at least 1")
    if a_spec is None:
        raise click.UsageError("--A is required")
    a = parse_spectrum(a_spec, "--A")
    if dim is not None and len(a) != dim:
        raise click.UsageError(f"--A has {len(a)} eigenvalues but --n is {dim}")

    if kind == "trace-power":
        if degree is None or b_spec is None:
            raise click.UsageError("trace-power needs --f and --B")
        b = parse_spectrum(b_spec, "--B")
        if len(a) != len(b):
            raise click.UsageError("--A and --B must have the same length")
        report = mc_trace_power(a, b, degree, samples, seed, threads)
        params = {"f": degree, "A": a_spec, "B": b_spec, "seed": seed, "threads": threads}
    elif kind == "zonal-split":
        if kappa is None or b_spec is None:
            raise click.UsageError("zonal-split needs --kappa and --B")
        b = parse_spectrum(b_spec, "--B")
        if len(a) != len(b):
            raise click.UsageError("--A and --B must have the same length")
        part = parse_partition(kappa)
        if len(part) > len(a):
            raise click.UsageError("--kappa has more parts than there are eigenvalues")
        report = mc_splitting(part, a, b, samples, seed, threads)
        params = {"kappa": kappa, "A": a_spec, "B": b_spec, "seed": seed, "threads": threads}
    elif kind == "trace-AH":
        if degree is None:
            raise click.UsageError("trace-AH needs --f")
        matrix = [
            [a.eigenvalues[i] if i == j else Fraction(0) for j in range(len(a))]
            for i in range(len(a))
        ]
        report = mc_linear_trace_power(matrix, degree, samples, seed, threads)
        params = {"f": degree, "A": a_spec, "seed": seed, "threads": threads}
    else:  # exp-series
        if b_spec is None:
            raise click.UsageError("exp-series needs --B")
        b = parse_spectrum(b_spec, "--B")
        if len(a) != len(b):
            raise click.UsageError("--A and --B must have the same length")
        if max_degree < 0:
            raise click.UsageError("--max-degree must be nonnegative")
        series = hyper0f0(a, b, max_degree)
        report = mc_exponential_trace(a, b, series.value, samples, seed, threads)
        payload = _report_payload(
            "exp-series",
            {
                "A": a_spec,
                "B": b_spec,
                "max_degree": max_degree,
                "seed": seed,
                "threads": threads,
            },
            report,
        )
        payload["series_value"] = str(sum(series.terms))
        if series.tail_bound is not None:
            payload["tail_bound"] = format_float(series.tail_bound)
        click.echo(json.dumps(payload, indent=2))
        return

    click.echo(json.dumps(_report_payload(kind, params, report), indent=2))


if __name__ == "__main__":
    main()

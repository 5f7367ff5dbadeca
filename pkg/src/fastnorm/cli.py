"""Command-line entry point.

Subcommands: ``normalize``, ``validate-params``, ``verify-bounds``,
``bench``, ``rotate``.  All numeric input is accepted as decimal or
hexadecimal-float literals; bit-exact output is printed as hexadecimal
floats alongside the decimal form.  Exit codes: 0 success / no violations,
1 domain error or bound violation, 2 usage error.
"""

from __future__ import annotations

import json
import sys

import click

from fastnorm import baselines, bench, hexfloat, normalize, oracle, rotation
from fastnorm import _backend
from fastnorm.params import FpParams, derive_tau, preset, validate_conditions

_ALGOS = ("scaling", "quotient", "quotient-fast", "naive")


def _parse(value: str) -> float:
    try:
        return hexfloat.parse_literal(value)
    except ValueError:
        raise click.UsageError(f"cannot parse number {value!r}") from None


def _normalize_fn(algo: str, dim: int, precision: str):
    p = preset(precision)
    if algo == "scaling":
        fn = {2: normalize.normalize2, 3: normalize.normalize3, 4: normalize.normalize4}[dim]
        return lambda *xs: fn(p, *xs)
    if algo == "quotient":
        fn = {2: baselines.quotient2, 3: baselines.quotient3_robust, 4: baselines.quotient4}[dim]
    elif algo == "quotient-fast":
        if dim != 3:
            raise click.UsageError("--algo quotient-fast exists for --dim 3 only")
        fn = baselines.quotient3_fast
    elif algo == "naive":
        fn = {2: baselines.naive_normalize2, 3: baselines.naive_normalize3, 4: baselines.naive_normalize4}[dim]
    else:
        raise click.UsageError(f"unknown algorithm {algo!r}")
    return lambda *xs: fn(*xs, precision=precision)


@click.group()
@click.version_option(package_name="fastnorm")
def main():
    """Robust normalization of vectors and quaternions."""


@main.command("normalize")
@click.option("--dim", type=click.Choice(["2", "3", "4"]), required=True)
@click.option("--prec", type=click.Choice(["single", "double"]), default="double", show_default=True)
@click.option("--algo", type=click.Choice(_ALGOS), default="scaling", show_default=True)
@click.argument("components", nargs=-1, required=True)
def normalize_cmd(dim, prec, algo, components):
    """Normalize a vector/quaternion and print length and unit components."""
    n = int(dim)
    if len(components) != n:
        raise click.UsageError(f"--dim {n} needs exactly {n} components, got {len(components)}")
    xs = [_parse(c) for c in components]
    fn = _normalize_fn(algo, n, prec)
    try:
        outcome = fn(*xs)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from None
    click.echo(f"algorithm: {algo}")
    click.echo(f"precision: {prec}")
    click.echo(f"length: {hexfloat.format_value(outcome.length, prec)}")
    for i, u in enumerate(outcome.unit, start=1):
        click.echo(f"unit[{i}]: {hexfloat.format_value(u, prec)}")


@main.command("validate-params")
@click.option("--format", "fmt", type=click.Choice(["single", "double"]), default=None,
              help="Validate a built-in preset.")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file with the eight fields, each '2^k' or a decimal literal.")
@click.option("--show-derived", is_flag=True,
              help="Also print the thresholds the derivation formula yields.")
def validate_params_cmd(fmt, path, show_derived):
    """Check a parameter set; exit 0 iff every condition is satisfied."""
    if (fmt is None) == (path is None):
        raise click.UsageError("give exactly one of --format or --file")
    if fmt is not None:
        p = preset(fmt)
        click.echo(f"format: {fmt}")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        fields = ("u", "alpha", "nu", "omega", "tau_min", "tau_max", "sigma_min", "sigma_max")
        missing = [f for f in fields if f not in raw]
        if missing:
            raise click.UsageError(f"missing fields in {path}: {', '.join(missing)}")
        try:
            p = FpParams(**{f: hexfloat.parse_number(str(raw[f])) for f in fields})
        except ValueError as exc:
            raise click.ClickException(str(exc)) from None
        click.echo(f"file: {path}")
    violations = validate_conditions(p)
    if show_derived and fmt is not None:
        lo, hi = derive_tau(fmt)
        click.echo(f"derived tau_min candidate: {hexfloat.format_value(lo)}")
        click.echo(f"derived tau_max candidate: {hexfloat.format_value(hi)}")
    if not violations:
        click.echo("all conditions satisfied")
        return
    for v in violations:
        click.echo(f"violation: {v.check}: {v.detail}")
    sys.exit(1)


@main.command("verify-bounds")
@click.option("--dim", type=click.Choice(["2", "3", "4"]), required=True)
@click.option("--prec", type=click.Choice(["single", "double"]), default="double", show_default=True)
@click.option("--algo", type=click.Choice(_ALGOS), default="scaling", show_default=True)
@click.option("--samples", type=int, default=10_000, show_default=True)
@click.option("--regime", type=click.Choice(("all",) + bench.REGIMES), default="mixed", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_format", type=click.Choice(["json", "csv"]), default="json", show_default=True)
def verify_bounds_cmd(dim, prec, algo, samples, regime, seed, out_format):
    """Measure error bounds over random inputs; nonzero exit on scaling violations."""
    n = int(dim)
    if samples <= 0:
        raise click.UsageError("--samples must be positive")
    p = preset(prec)
    fn = _normalize_fn(algo, n, prec)
    regimes = bench.REGIMES if regime == "all" else (regime,)
    total = oracle.SweepSummary(0, 0, {}, {}, {}, [])
    for i, reg in enumerate(regimes):
        inputs = bench.generate_inputs(reg, n, prec, samples, (seed, i))
        s = oracle.sweep_bounds(p, fn, inputs.tolist())
        total.samples += s.samples
        total.violation_count += s.violation_count
        for k, v in s.violation_ids.items():
            total.violation_ids[k] = total.violation_ids.get(k, 0) + v
        for k, v in s.max_metrics.items():
            if v > total.max_metrics.get(k, 0.0):
                total.max_metrics[k] = v
                if k in s.worst_inputs:
                    total.worst_inputs[k] = s.worst_inputs[k]
        total.first_violations.extend(s.first_violations[: 10 - len(total.first_violations)])

    u = p.u
    payload = {
        "algorithm": algo,
        "dimension": n,
        "precision": prec,
        "regime": regime,
        "samples": total.samples,
        "seed": seed,
        "violations": total.violation_count,
        "violation_ids": dict(sorted(total.violation_ids.items())),
        "max_metrics": {
            k: {"value": v, "in_units_of_u": v / u,
                "worst_input_hex": [hexfloat.format_hex(c, prec) for c in total.worst_inputs.get(k, ())]}
            for k, v in sorted(total.max_metrics.items())
        },
        "violating_inputs_hex": [
            {"input": [hexfloat.format_hex(c, prec) for c in xs], "bounds": list(ids)}
            for xs, ids in total.first_violations
        ],
    }
    if out_format == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo("metric,value,in_units_of_u,worst_input")
        for k, v in sorted(total.max_metrics.items()):
            worst = " ".join(hexfloat.format_hex(c, prec) for c in total.worst_inputs.get(k, ()))
            click.echo(f"{k},{v!r},{v / u!r},{worst}")
        click.echo(f"violations,{total.violation_count},,")
    if total.violation_count and algo == "scaling":
        sys.exit(1)


@main.command("bench")
@click.option("--experiments", type=int, default=50, show_default=True)
@click.option("--iterations", type=int, default=100_000, show_default=True)
@click.option("--dim", "dims", type=click.Choice(["2", "3", "4"]), multiple=True, default=("2", "3", "4"), show_default=True)
@click.option("--prec", "precs", type=click.Choice(["single", "double"]), multiple=True, default=("double",), show_default=True)
@click.option("--algo", "algos", type=click.Choice(_backend.ALGORITHMS), multiple=True,
              default=_backend.ALGORITHMS, show_default=True)
@click.option("--regime", type=click.Choice(bench.REGIMES), default="normal", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--full-scale", is_flag=True,
              help="Full protocol: 500 experiments of 10^6 iterations (hours, not minutes).")
@click.option("--backend", type=click.Choice(["auto", "compiled", "python", "both"]), default="auto", show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the report as CSV.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None,
              help="Also write the report as JSON.")
def bench_cmd(experiments, iterations, dims, precs, algos, regime, seed, full_scale,
              backend, csv_path, json_path):
    """Time the algorithms and print the ratio tables."""
    if full_scale:
        experiments, iterations = 500, 1_000_000
    config = bench.BenchConfig(
        experiments=experiments,
        iterations_per_experiment=iterations,
        dimensions=tuple(int(d) for d in dims),
        precisions=tuple(precs),
        algorithms=tuple(algos),
        seed=seed,
        regime=regime,
        backend=None if backend == "auto" else backend,
    )
    try:
        report = bench.run_bench(config)
    except bench.BenchConfigError as exc:
        raise click.ClickException(str(exc)) from None

    click.echo(f"# clock: {report.environment['clock']} "
               f"(resolution {report.environment['clock_resolution_ns']:.0f} ns)")
    for bk, info in report.environment["backends"].items():
        click.echo(f"# backend {bk}: {info['build_flags']} [{info['build_flags_sha256']}]")
    click.echo(f"{'task':<14}{'prec':<8}{'backend':<10}{'algorithm':<16}"
               f"{'ns/call':>12}{'std':>10}{'clamped':>9}")
    for r in report.rows:
        click.echo(f"{r.task:<14}{r.precision:<8}{r.backend:<10}{r.algorithm:<16}"
                   f"{r.mean_ns_per_call:>12.2f}{r.std_ns_per_call:>10.2f}{r.clamped_experiments:>9}")
    if report.ratios:
        click.echo(f"{'label':<7}{'task':<14}{'prec':<8}{'backend':<10}"
                   f"{'ratio':<28}{'mean':>8}{'std':>8}")
        for r in report.ratios:
            click.echo(f"{r.label:<7}{r.task:<14}{r.precision:<8}{r.backend:<10}"
                       f"{r.numerator + '/' + r.denominator:<28}{r.mean:>8.2f}{r.std:>8.2f}")
    click.echo(f"# checksum: {sum(r.checksum for r in report.rows)!r}")
    if csv_path:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())


@main.command("rotate")
@click.option("--method", type=click.Choice(["general", "unit"]), default="general", show_default=True)
@click.option("--apply", "vec", nargs=3, type=str, default=None,
              help="Also apply the matrix to this 3-vector.")
@click.option("--hex", "hex_out", is_flag=True, help="Print entries as hexadecimal floats.")
@click.argument("components", nargs=4, required=True)
def rotate_cmd(method, vec, hex_out, components):
    """Print the rotation matrix of a quaternion (q4 is the scalar part)."""
    q = [_parse(c) for c in components]
    try:
        matrix = rotation.rotation_general(q) if method == "general" else rotation.rotation_unit(q)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from None
    fmt = (lambda v: hexfloat.format_hex(v)) if hex_out else (lambda v: repr(v))
    for row in matrix.rows:
        click.echo("  ".join(fmt(v) for v in row))
    if vec:
        v = tuple(_parse(c) for c in vec)
        out = matrix.apply(v)
        click.echo("applied: " + "  ".join(fmt(c) for c in out))


if __name__ == "__main__":
    main()

"""Microbenchmark harness: timed loops, empty-loop subtraction, ratio tables.

Protocol per (dimension, precision, algorithm): every experiment generates a
fresh input batch by regime, times a loop of ``iterations_per_experiment``
calls whose outputs feed a live checksum (so the calls cannot be elided),
times an identical loop without the call, and subtracts.  Per-call times are
averaged across experiments with their standard deviation.  Two ratio
families are derived: quotient time over scaling time ("T3") and scaling
time over naive time ("T4"), computed per experiment on shared inputs.

The timed loops are resolved through the same kernel table the public API
uses, so the benchmark measures exactly the exported kernels.  Timing uses
the process CPU clock.  Results are machine- and build-dependent by design;
the report carries environment metadata so numbers are compared honestly.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import platform
import statistics
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from fastnorm import _backend
from fastnorm.params import FpParams, preset
from fastnorm.scale import kernel_args

__all__ = [
    "REGIMES",
    "BenchConfig",
    "BenchConfigError",
    "BenchRow",
    "RatioRow",
    "BenchReport",
    "generate_inputs",
    "run_bench",
]

REGIMES = ("normal", "subnormal", "huge", "mixed", "unit-ish")

# exponent layout per format: (min subnormal, min normal, max) binade exponents
_FORMAT_EXPONENTS = {"double": (-1074, -1022, 1023), "single": (-149, -126, 127)}
_DTYPES = {"double": np.float64, "single": np.float32}
_PRECISION_IDS = {"double": 0, "single": 1}

_CLOCK = "process_time_ns"
# require the timed region to span at least this many clock resolutions
_MIN_CLOCK_TICKS = 100


class BenchConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    """Benchmark workload description.  Defaults are the desk-scale run;
    the full-scale protocol (500 experiments of 10^6 calls) is
    ``BenchConfig(experiments=500, iterations_per_experiment=10**6)``.
    """

    experiments: int = 50
    iterations_per_experiment: int = 100_000
    dimensions: tuple[int, ...] = (2, 3, 4)
    precisions: tuple[str, ...] = ("double",)
    algorithms: tuple[str, ...] = ("naive", "quotient", "quotient_fast", "scaling")
    seed: int = 0
    regime: str = "normal"
    batch_size: int = 1024
    backend: str | None = None  # None = active backend; "both" compares them


@dataclass
class BenchRow:
    task: str
    precision: str
    algorithm: str
    backend: str
    mean_ns_per_call: float
    std_ns_per_call: float
    clamped_experiments: int
    checksum: float


@dataclass
class RatioRow:
    label: str  # "T3" quotient/scaling, "T4" scaling/naive, "PY/C" python/compiled
    task: str
    precision: str
    backend: str
    numerator: str
    denominator: str
    mean: float
    std: float
    experiments: int


@dataclass
class BenchReport:
    config: BenchConfig
    rows: list[BenchRow]
    ratios: list[RatioRow]
    environment: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "config": asdict(self.config),
                "rows": [asdict(r) for r in self.rows],
                "ratios": [asdict(r) for r in self.ratios],
                "environment": self.environment,
            },
            sort_keys=True,
            indent=2,
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out)
        w.writerow(
            ["kind", "label", "task", "precision", "backend", "algorithm_or_pair",
             "mean", "std", "clamped_experiments", "checksum"]
        )
        for r in self.rows:
            w.writerow(
                ["time", "", r.task, r.precision, r.backend, r.algorithm,
                 f"{r.mean_ns_per_call:.6g}", f"{r.std_ns_per_call:.6g}",
                 r.clamped_experiments, repr(r.checksum)]
            )
        for r in self.ratios:
            w.writerow(
                ["ratio", r.label, r.task, r.precision, r.backend,
                 f"{r.numerator}/{r.denominator}",
                 f"{r.mean:.6g}", f"{r.std:.6g}", "", ""]
            )
        return out.getvalue()


def generate_inputs(regime: str, dimension: int, precision: str, count: int, seed) -> np.ndarray:
    """Deterministic (count, dimension) batch of nonzero finite vectors.

    Regimes:

    * ``normal``: every component magnitude in [tau_min, tau_max];
    * ``subnormal``: every component magnitude in [alpha, nu);
    * ``huge``: every component magnitude above tau_max (sums stay finite);
    * ``mixed``: component exponents uniform over the full representable
      range, subnormals included (magnitude ratios up to the format width);
    * ``unit-ish``: norms within 2^-10 of one.

    ``seed`` may be an int or a tuple of ints (fed to SeedSequence).
    """
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}; choices: {REGIMES}")
    if dimension not in (2, 3, 4):
        raise ValueError(f"dimension must be 2, 3 or 4, got {dimension}")
    if precision not in _DTYPES:
        raise ValueError(f"unknown precision {precision!r}")
    if count <= 0:
        raise ValueError("count must be positive")

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    p = preset(precision)
    sub_min, norm_min, emax = _FORMAT_EXPONENTS[precision]
    tau_min_exp = int(math.log2(p.tau_min))
    tau_max_exp = int(math.log2(p.tau_max))
    shape = (count, dimension)
    sign = rng.integers(0, 2, size=shape).astype(np.float64) * 2.0 - 1.0
    mant = 1.0 + rng.random(shape)

    if regime == "normal":
        e = rng.integers(tau_min_exp, tau_max_exp, size=shape)
        mag = np.ldexp(mant, e)
    elif regime == "subnormal":
        e = rng.integers(sub_min, norm_min, size=shape)
        mag = np.ldexp(mant, e)
        # round-to-nearest may bump the top of the range onto nu; regime says < nu
        mag = np.minimum(mag, p.nu - p.alpha)
    elif regime == "huge":
        e = rng.integers(tau_max_exp + 1, emax - 1, size=shape)
        mag = np.ldexp(mant, e)
    elif regime == "mixed":
        e = rng.integers(sub_min, emax, size=shape)
        mag = np.ldexp(mant, e)
    else:  # unit-ish
        g = rng.standard_normal(shape)
        norms = np.sqrt(np.sum(g * g, axis=1, keepdims=True))
        g[:, 0] = np.where(norms[:, 0] == 0.0, 1.0, g[:, 0])
        norms = np.maximum(norms, np.finfo(np.float64).tiny)
        stretch = 1.0 + (rng.random((count, 1)) * 2.0 - 1.0) * 2.0**-10
        vals = (g / norms) * stretch
        return np.ascontiguousarray(vals.astype(_DTYPES[precision]))

    vals = mag * sign
    if precision == "single" and regime == "subnormal":
        out = vals.astype(np.float32)
        cap = np.float32(p.nu - p.alpha)
        np.clip(out, -cap, cap, out=out)
        return np.ascontiguousarray(out)
    return np.ascontiguousarray(vals.astype(_DTYPES[precision]))


def _clock_resolution_ns() -> float:
    return time.get_clock_info("process_time").resolution * 1e9


def _prepare_buffer(batch: np.ndarray, backend: str):
    flat = np.ascontiguousarray(batch.reshape(-1))
    if backend == "python":
        return flat.tolist()
    return flat


def _time_loop(loop, *args) -> tuple[int, float]:
    t0 = time.process_time_ns()
    checksum = loop(*args)
    t1 = time.process_time_ns()
    return t1 - t0, checksum


def _validate(config: BenchConfig) -> None:
    if config.experiments <= 0 or config.iterations_per_experiment <= 0:
        raise BenchConfigError("experiments and iterations_per_experiment must be positive")
    if not config.dimensions or not config.precisions or not config.algorithms:
        raise BenchConfigError("at least one dimension, precision and algorithm is required")
    for d in config.dimensions:
        if d not in (2, 3, 4):
            raise BenchConfigError(f"unsupported dimension {d}")
    for pr in config.precisions:
        if pr not in _DTYPES:
            raise BenchConfigError(f"unsupported precision {pr!r}")
    for a in config.algorithms:
        if a not in _backend.ALGORITHMS:
            raise BenchConfigError(f"unsupported algorithm {a!r}")
    if config.regime not in REGIMES:
        raise BenchConfigError(f"unsupported regime {config.regime!r}")
    b = config.batch_size
    if b <= 0 or b & (b - 1):
        raise BenchConfigError("batch_size must be a positive power of two")


def _check_clock(config: BenchConfig, mod_name: str, probe_loop, buf, mask, kargs6) -> None:
    """Refuse configurations the clock cannot resolve, suggesting a minimum."""
    resolution = _clock_resolution_ns()
    probe_iters = min(config.iterations_per_experiment, 10_000)
    dt, _ = _time_loop(probe_loop, buf, probe_iters, mask, *kargs6)
    per_iter = max(dt / probe_iters, 0.05)  # ns; floor guards dt == 0
    expected = per_iter * config.iterations_per_experiment
    if expected < _MIN_CLOCK_TICKS * resolution:
        suggested = int(math.ceil(_MIN_CLOCK_TICKS * resolution / per_iter))
        raise BenchConfigError(
            f"clock resolution {resolution:.0f} ns is too coarse for "
            f"{config.iterations_per_experiment} iterations on the {mod_name} backend; "
            f"use at least {suggested} iterations per experiment"
        )


def run_bench(config: BenchConfig) -> BenchReport:
    """Execute the timing protocol and build the report with T3/T4 ratios."""
    _validate(config)
    if config.backend == "both":
        backends = list(_backend.available_backends())
        if "compiled" not in backends:
            raise BenchConfigError("backend 'both' requires the compiled extension")
        backends = ["compiled", "python"]
    else:
        backends = [config.backend or _backend.backend_name()]
        _backend.get_module(backends[0])  # validate

    iters = config.iterations_per_experiment
    mask = config.batch_size - 1
    rows: list[BenchRow] = []
    ratios: list[RatioRow] = []
    # (backend, task, precision, algorithm) -> per-experiment ns/call
    series: dict[tuple[str, str, str, str], list[float]] = {}

    for bk in backends:
        mod = _backend.get_module(bk)
        for precision in config.precisions:
            kargs6 = kernel_args(preset(precision))
            for dim in config.dimensions:
                task = f"normalize{dim}d"
                algos = [a for a in config.algorithms if dim in _backend.algorithm_dims(a)]
                if not algos:
                    continue
                empty = _backend.loop_kernel(f"loop_empty{dim}", precision, bk)
                loops = {a: _backend.loop_kernel(_backend.loop_base(a, dim), precision, bk) for a in algos}

                warm = generate_inputs(config.regime, dim, precision, config.batch_size,
                                       (config.seed, dim, 0xFFFF))
                warm_buf = _prepare_buffer(warm, bk)
                _check_clock(config, bk, loops[algos[0]], warm_buf, mask, kargs6)
                for loop in loops.values():
                    loop(warm_buf, min(iters, 1000), mask, *kargs6)
                empty(warm_buf, min(iters, 1000), mask)

                per_algo: dict[str, list[float]] = {a: [] for a in algos}
                clamped = {a: 0 for a in algos}
                checksums = {a: 0.0 for a in algos}
                for exp in range(config.experiments):
                    batch = generate_inputs(
                        config.regime, dim, precision, config.batch_size,
                        (config.seed, _PRECISION_IDS[precision], dim, exp),
                    )
                    buf = _prepare_buffer(batch, bk)
                    t_empty, _ = _time_loop(empty, buf, iters, mask)
                    for a in algos:
                        t_full, checksum = _time_loop(loops[a], buf, iters, mask, *kargs6)
                        checksums[a] += checksum
                        per_call = (t_full - t_empty) / iters
                        if per_call <= 0.0:
                            per_call = 0.0
                            clamped[a] += 1
                        per_algo[a].append(per_call)

                for a in algos:
                    vals = per_algo[a]
                    rows.append(
                        BenchRow(
                            task=task,
                            precision=precision,
                            algorithm=a,
                            backend=bk,
                            mean_ns_per_call=statistics.fmean(vals),
                            std_ns_per_call=statistics.stdev(vals) if len(vals) > 1 else 0.0,
                            clamped_experiments=clamped[a],
                            checksum=checksums[a],
                        )
                    )
                    series[(bk, task, precision, a)] = vals

    if not rows:
        raise BenchConfigError(
            "no runnable (algorithm, dimension) combination in the configuration"
        )

    def ratio_row(label, bk, task, precision, num_key, den_key, num_name, den_name):
        num = series.get(num_key)
        den = series.get(den_key)
        if not num or not den:
            return
        pairs = [(x, y) for x, y in zip(num, den) if y > 0.0]
        if not pairs:
            return
        vals = [x / y for x, y in pairs]
        ratios.append(
            RatioRow(
                label=label, task=task, precision=precision, backend=bk,
                numerator=num_name, denominator=den_name,
                mean=statistics.fmean(vals),
                std=statistics.stdev(vals) if len(vals) > 1 else 0.0,
                experiments=len(vals),
            )
        )

    for bk in backends:
        for precision in config.precisions:
            for dim in config.dimensions:
                task = f"normalize{dim}d"
                for quot in ("quotient", "quotient_fast"):
                    ratio_row("T3", bk, task, precision,
                              (bk, task, precision, quot), (bk, task, precision, "scaling"),
                              quot, "scaling")
                ratio_row("T4", bk, task, precision,
                          (bk, task, precision, "scaling"), (bk, task, precision, "naive"),
                          "scaling", "naive")
    if len(backends) == 2:
        for precision in config.precisions:
            for dim in config.dimensions:
                task = f"normalize{dim}d"
                for a in config.algorithms:
                    if dim not in _backend.algorithm_dims(a):
                        continue
                    ratio_row("PY/C", "both", task, precision,
                              ("python", task, precision, a), ("compiled", task, precision, a),
                              f"python:{a}", f"compiled:{a}")

    flags = {bk: getattr(_backend.get_module(bk), "BUILD_FLAGS") for bk in backends}
    env = {
        "clock": _CLOCK,
        "clock_resolution_ns": _clock_resolution_ns(),
        "backends": {bk: {"build_flags": fl,
                          "build_flags_sha256": hashlib.sha256(fl.encode()).hexdigest()[:12]}
                     for bk, fl in flags.items()},
        "python": platform.python_version(),
        "platform": platform.platform(),
        "machine": platform.machine(),
        "numpy": np.__version__,
    }
    return BenchReport(config=config, rows=rows, ratios=ratios, environment=env)

"""High-precision reference for norms, directions, and error-bound checks.

Everything here runs at ORACLE_PRECISION bits (far beyond both working
formats), with inputs converted exactly: every finite float is an integer
scaled by a power of two, so ``mpq`` conversion loses nothing.  Sums of
squares and the quaternion product bound are evaluated in exact rational
arithmetic; square roots and quotients are correctly rounded at oracle
precision.  Comparisons between oracle values and rational tolerances are
exact, so a bound check can only be wrong if the true error sits within
2^-250 of the bound, far below anything a working-precision kernel can
produce.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import gmpy2

from fastnorm.normalize import NormalizeOutcome
from fastnorm.params import FpParams

__all__ = [
    "ORACLE_PRECISION",
    "ErrorReport",
    "SweepSummary",
    "ref_normalize",
    "measure",
    "sweep_bounds",
    "ulp_distance",
]

ORACLE_PRECISION = 256

# Structural margin: the oracle must dominate every working format by a wide
# gap, and carry at least 128 fractional bits outright.
assert ORACLE_PRECISION >= 128
assert ORACLE_PRECISION >= 53 + 100

# Tolerance constants, exact decimal-scaled rationals (never rounded through
# a binary float).
C_SIN = Fraction(1001, 1000)          # |sin phi| <= 1.001 u
C_DIR = Fraction(3001, 1000)          # ||unit - x/r|| <= (3.001 + n/2) u
C_PROD_ABS = Fraction(1001, 1000)     # quaternion products: (1.001 + 8.001 |qi qj|) u
C_PROD_REL = Fraction(8001, 1000)


def _context():
    return gmpy2.context(precision=ORACLE_PRECISION)


@dataclass(frozen=True)
class ErrorReport:
    """Oracle-measured error metrics for one normalization outcome.

    Values are gmpy2 mpfr scalars at oracle precision (nonnegative; may be
    inf when the kernel under test produced inf).  ``sin_phi`` is None for
    quaternions, where no angle bound applies.
    """

    rel_length_err: object
    abs_length_err: object
    dir_err: object
    sin_phi: Optional[object]
    bound_violations: tuple[str, ...]


@dataclass
class SweepSummary:
    """Aggregate of ``measure`` over a batch of inputs."""

    samples: int
    violation_count: int
    violation_ids: dict[str, int]
    max_metrics: dict[str, float]
    worst_inputs: dict[str, tuple[float, ...]]
    first_violations: list[tuple[tuple[float, ...], tuple[str, ...]]]


def _exact_sum_of_squares(xs):
    s = gmpy2.mpq()
    for x in xs:
        q = gmpy2.mpq(x)
        s += q * q
    return s


def ref_normalize(components: Sequence[float]):
    """Reference length and unit vector at oracle precision.

    The squares and their sum are exact (rational); the square root and the
    component quotients are correctly rounded mpfr values.  Raises
    ValueError on zero or non-finite input.
    """
    xs = [float(x) for x in components]
    if not all(math.isfinite(x) for x in xs):
        raise ValueError(f"components must be finite, got {xs}")
    if all(x == 0.0 for x in xs):
        raise ValueError("zero vector has no direction")
    with _context():
        s = _exact_sum_of_squares(xs)
        r = gmpy2.sqrt(gmpy2.mpfr(s))
        unit = tuple(gmpy2.mpq(x) / r for x in xs)
    return r, unit


@lru_cache(maxsize=None)
def _bounds(p: FpParams, n: int):
    """Exact rational tolerances for dimension n under parameter set p."""
    u = Fraction(p.u)
    alpha = Fraction(p.alpha)
    nu = Fraction(p.nu)
    omega = Fraction(p.omega)
    length_coef = Fraction(3) if n == 4 else Fraction(1) + Fraction(n, 2)
    fin_coef = Fraction(3) if n == 4 else Fraction(1) + Fraction(n, 2)
    return {
        "sin": gmpy2.mpq(C_SIN * u),
        "dir": gmpy2.mpq((C_DIR + Fraction(n, 2)) * u),
        "length_rel": gmpy2.mpq(length_coef * u),
        "alpha_half": gmpy2.mpq(alpha / 2),
        "r_low": gmpy2.mpq(3 * nu / 2),  # b2a applies at or above this true length
        "premise_cap": gmpy2.mpq(omega / (1 + fin_coef * u)),
        "u": gmpy2.mpq(u),
        "prod_abs": gmpy2.mpq(C_PROD_ABS * u),
        "prod_rel": gmpy2.mpq(C_PROD_REL),
    }


def measure(p: FpParams, components: Sequence[float], outcome: NormalizeOutcome) -> ErrorReport:
    """Error metrics of ``outcome`` against the oracle, plus bound violations.

    Applies exactly the inequalities that are guaranteed for the scaling
    algorithms at dimension n: the angle and direction bounds always (finite
    nonzero input), the length bounds only when the finiteness premise
    ``(1 + c u) r <= omega`` holds, choosing the in-range or near-underflow
    form by comparing the true length against 3 nu / 2.  For quaternions the
    ten pairwise product bounds are evaluated in exact rational arithmetic.

    Non-scaling algorithms can be measured too; their violations are
    informational (nothing is guaranteed for them outside the safe band).
    """
    with _context():
        return _measure(p, tuple(float(x) for x in components), outcome)


def _measure(p: FpParams, xs: tuple[float, ...], outcome: NormalizeOutcome) -> ErrorReport:
    n = len(xs)
    if n not in (2, 3, 4):
        raise ValueError(f"dimension must be 2, 3 or 4, got {n}")
    if not all(math.isfinite(x) for x in xs):
        raise ValueError(f"input must be finite, got {xs}")
    if all(x == 0.0 for x in xs):
        raise ValueError("input must be nonzero")
    if len(outcome.unit) != n:
        raise ValueError(f"outcome has {len(outcome.unit)} unit components, input has {n}")

    r_hat = float(outcome.length)
    unit = tuple(float(v) for v in outcome.unit)
    b = _bounds(p, n)
    violations: list[str] = []

    if math.isnan(r_hat) or any(math.isnan(v) for v in unit):
        inf = gmpy2.mpfr("inf")
        return ErrorReport(inf, inf, inf, None if n == 4 else inf, ("nan-output",))

    mpq = gmpy2.mpq
    qx = [mpq(x) for x in xs]
    s = qx[0] * qx[0]
    for q in qx[1:]:
        s += q * q                         # exact r^2
    r = gmpy2.sqrt(gmpy2.mpfr(s))
    xbar = tuple(q / r for q in qx)

    if r_hat == 0.0:
        violations.append("nonzero-length")
    unit_finite = all(math.isfinite(v) for v in unit)
    if not unit_finite:
        violations.append("finite-unit")
    qu = [mpq(v) for v in unit] if unit_finite else None

    # direction metrics (always applicable for finite nonzero input)
    if unit_finite:
        diffs = [q - xb for q, xb in zip(qu, xbar)]
        dir_err = gmpy2.sqrt(gmpy2.mpfr(sum(d * d for d in diffs)))
        us = qu[0] * qu[0]
        for q in qu[1:]:
            us += q * q
        unit_norm = gmpy2.sqrt(gmpy2.mpfr(us))
        if n == 2:
            cross_norm = gmpy2.mpfr(abs(qx[0] * qu[1] - qx[1] * qu[0]))
        elif n == 3:
            c1 = qx[1] * qu[2] - qx[2] * qu[1]
            c2 = qx[2] * qu[0] - qx[0] * qu[2]
            c3 = qx[0] * qu[1] - qx[1] * qu[0]
            cross_norm = gmpy2.sqrt(gmpy2.mpfr(c1 * c1 + c2 * c2 + c3 * c3))
        else:
            cross_norm = None
        if cross_norm is None:
            sin_phi = None
        elif unit_norm == 0:
            sin_phi = gmpy2.mpfr("inf")
            violations.append("sin-phi")
        else:
            sin_phi = cross_norm / (r * unit_norm)
            if sin_phi > b["sin"]:
                violations.append("sin-phi")
        if dir_err > b["dir"]:
            violations.append("direction")
    else:
        dir_err = gmpy2.mpfr("inf")
        sin_phi = None if n == 4 else gmpy2.mpfr("inf")

    # length metrics; bounds only under the finiteness premise
    if math.isinf(r_hat):
        abs_err = gmpy2.mpfr("inf")
        rel_err = gmpy2.mpfr("inf")
        if r <= b["premise_cap"]:
            violations.append("finite-length")
    else:
        abs_err = abs(gmpy2.mpfr(r_hat) - r)
        rel_err = abs_err / r
        if r <= b["premise_cap"]:
            if r >= b["r_low"]:
                if abs_err > b["length_rel"] * r:
                    violations.append("length-in-range")
            else:
                if abs_err > b["length_rel"] * r + b["alpha_half"]:
                    violations.append("length-near-underflow")

    # quaternion product bounds, all ten unordered pairs, exact rationals.
    # Both sides are multiplied by s = r^2 > 0 to avoid rational division:
    #   |qhat_i qhat_j - x_i x_j / s|  vs  (c1 + c2 |x_i x_j| / s) u
    # becomes |qhat_i qhat_j s - x_i x_j|  vs  c1 u s + c2 u |x_i x_j|.
    if n == 4 and unit_finite:
        u_exact = b["u"]
        c1u_s = b["prod_abs"] * s
        c2u = b["prod_rel"] * u_exact
        for i in range(4):
            for j in range(i, 4):
                xij = qx[i] * qx[j]
                lhs = abs(qu[i] * qu[j] * s - xij)
                if lhs > c1u_s + c2u * abs(xij):
                    violations.append(f"quaternion-product-{i + 1}{j + 1}")

    return ErrorReport(rel_err, abs_err, dir_err, sin_phi, tuple(violations))


def sweep_bounds(p: FpParams, normalize_fn, inputs, max_exemplars: int = 10) -> SweepSummary:
    """Run ``normalize_fn`` over rows of ``inputs`` and measure every outcome.

    ``normalize_fn`` takes the components and returns a NormalizeOutcome;
    ``inputs`` is any iterable of rows (a (count, n) array works).  Tracks
    per-metric maxima with the inputs that attained them, and keeps the
    first few violating inputs for diagnosis.
    """
    metrics = ("rel_length_err", "abs_length_err", "dir_err", "sin_phi")
    max_metrics = {m: 0.0 for m in metrics}
    worst_inputs: dict[str, tuple[float, ...]] = {}
    violation_ids: dict[str, int] = {}
    first: list[tuple[tuple[float, ...], tuple[str, ...]]] = []
    count = 0
    violated = 0
    with _context():
        for row in inputs:
            xs = tuple(float(v) for v in row)
            outcome = normalize_fn(*xs)
            report = _measure(p, xs, outcome)
            count += 1
            if report.bound_violations:
                violated += 1
                for vid in report.bound_violations:
                    violation_ids[vid] = violation_ids.get(vid, 0) + 1
                if len(first) < max_exemplars:
                    first.append((xs, report.bound_violations))
            for m in metrics:
                v = getattr(report, m)
                if v is None:
                    continue
                v = float(v)
                if math.isnan(v):
                    continue
                if v > max_metrics[m]:
                    max_metrics[m] = v
                    worst_inputs[m] = xs
    return SweepSummary(count, violated, violation_ids, max_metrics, worst_inputs, first)


_PACK64 = struct.Struct("<d")
_PACK32 = struct.Struct("<f")


def _ordinal64(x: float) -> int:
    # monotone map onto the integers; -0.0 and +0.0 both land on 0
    (bits,) = struct.unpack("<Q", _PACK64.pack(x))
    return bits if bits < 1 << 63 else (1 << 63) - bits


def _ordinal32(x: float) -> int:
    try:
        packed = _PACK32.pack(x)
    except OverflowError:
        raise ValueError(f"{x!r} is not a binary32 value") from None
    (bits,) = struct.unpack("<I", packed)
    return bits if bits < 1 << 31 else (1 << 31) - bits


def ulp_distance(a: float, b: float, fmt: str = "double") -> int:
    """Representable values strictly between a and b, plus one if they differ.

    Symmetric; 0 for equal values (+0.0 and -0.0 count as equal), 1 for
    adjacent ones.  Both arguments must be finite values of the format.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("ulp_distance requires finite values")
    if fmt == "double":
        return abs(_ordinal64(a) - _ordinal64(b))
    if fmt == "single":
        oa, ob = _ordinal32(a), _ordinal32(b)
        fa = _PACK32.unpack(_PACK32.pack(a))[0]
        fb = _PACK32.unpack(_PACK32.pack(b))[0]
        if fa != a or fb != b:
            raise ValueError("arguments are not binary32 values")
        return abs(oa - ob)
    raise ValueError(f"unknown format {fmt!r}")

"""Floating-point format parameters and scaling constants.

An :class:`FpParams` bundles the hardware description of a binary IEEE
format (unit roundoff ``u``, smallest positive value ``alpha``, smallest
normal ``nu``, largest finite ``omega``) with the four scaling constants
(``tau_min``, ``tau_max``, ``sigma_min``, ``sigma_max``) that the
normalization kernels rely on.  The built-in presets carry the published
constants for binary32 and binary64; user-defined parameter sets are
allowed but must pass :func:`validate_conditions` before the kernels will
accept them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "FpParams",
    "FpParamsError",
    "Violation",
    "preset",
    "validate_conditions",
    "derive_tau",
    "CHECK_IDS",
]

FORMATS = ("single", "double")

# Identifiers for each validated condition, grouped by what the condition
# protects.  validate_conditions returns the violated subset.
CHECK_IDS = (
    "nu-squared-rounds-to-zero",
    "u-squared-covers-alpha",
    "u-small-enough",
    "sigma-min-power-of-two",
    "sigma-max-power-of-two",
    "tau-min-squares-above-alpha",
    "tau-max-squares-below-omega",
    "omega-tau-min-reciprocal",
    "nu-tau-max-reciprocal",
    "upscale-lands-in-band",
    "downscale-lands-in-band",
)


class Violation(NamedTuple):
    check: str
    detail: str


class FpParamsError(ValueError):
    """Raised when a parameter set fails validation at a kernel boundary."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        ids = ", ".join(v.check for v in self.violations)
        super().__init__(f"invalid floating-point parameters: {ids}")


@dataclass(frozen=True)
class FpParams:
    """Format description plus scaling constants.  Immutable; thread-safe."""

    u: float
    alpha: float
    nu: float
    omega: float
    tau_min: float
    tau_max: float
    sigma_min: float
    sigma_max: float

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, float) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"{f.name} must be a strictly positive finite float, got {v!r}")

    @property
    def precision(self) -> str:
        """Working format implied by the unit roundoff (``single`` or ``double``)."""
        if self.u == math.ldexp(1.0, -24):
            return "single"
        if self.u == math.ldexp(1.0, -53):
            return "double"
        raise ValueError(f"u={self.u!r} does not correspond to a supported working format")

    def with_field(self, name: str, value: float) -> "FpParams":
        """Copy with one field replaced (handy for validation experiments)."""
        return replace(self, **{name: value})


@lru_cache(maxsize=None)
def preset(fmt: str) -> FpParams:
    """Built-in parameter set for ``"single"`` (binary32) or ``"double"`` (binary64)."""
    key = fmt.lower()
    if key == "single":
        return FpParams(
            u=math.ldexp(1.0, -24),
            alpha=math.ldexp(1.0, -149),
            nu=math.ldexp(1.0, -126),
            omega=math.ldexp(2.0 - math.ldexp(1.0, -23), 127),
            tau_min=math.ldexp(1.0, -49),
            tau_max=math.ldexp(1.0, 62),
            sigma_min=math.ldexp(1.0, 100),
            sigma_max=math.ldexp(1.0, -66),
        )
    if key == "double":
        return FpParams(
            u=math.ldexp(1.0, -53),
            alpha=math.ldexp(1.0, -1074),
            nu=math.ldexp(1.0, -1022),
            omega=math.ldexp(2.0 - math.ldexp(1.0, -52), 1023),
            tau_min=math.ldexp(1.0, -482),
            tau_max=math.ldexp(1.0, 510),
            sigma_min=math.ldexp(1.0, 592),
            sigma_max=math.ldexp(1.0, -514),
        )
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _is_power_of_two(x: Fraction) -> bool:
    if x <= 0:
        return False
    return (x.numerator == 1 and x.denominator.bit_count() == 1) or (
        x.denominator == 1 and x.numerator.bit_count() == 1
    )


def validate_conditions(p: FpParams) -> tuple[Violation, ...]:
    """Check every correctness condition; return the violated ones (empty = valid).

    All comparisons are exact (rational arithmetic on the stored values), so
    conditions like "nu^2 rounds to zero" are decided symbolically rather
    than by performing arithmetic that would itself underflow.  The two
    range-mapping conditions are checked at interval endpoints only, which
    suffices because power-of-two scaling is exact and monotone.
    """
    u = Fraction(p.u)
    alpha = Fraction(p.alpha)
    nu = Fraction(p.nu)
    omega = Fraction(p.omega)
    tau_min = Fraction(p.tau_min)
    tau_max = Fraction(p.tau_max)
    sigma_min = Fraction(p.sigma_min)
    sigma_max = Fraction(p.sigma_max)

    out: list[Violation] = []

    def fail(check: str, detail: str) -> None:
        out.append(Violation(check, detail))

    # Round-to-nearest sends nu^2 to zero exactly when nu^2 <= alpha/2
    # (the tie goes to even, i.e. to zero).
    if not (nu * nu <= alpha / 2):
        fail("nu-squared-rounds-to-zero", f"nu^2 > alpha/2, so it does not round to 0 (nu={p.nu!r})")
    if not (u * u >= 16 * alpha):
        fail("u-squared-covers-alpha", f"u^2 < 16*alpha (u={p.u!r}, alpha={p.alpha!r})")
    if not (u <= Fraction(1, 10**6)):
        fail("u-small-enough", f"u = {p.u!r} exceeds 1e-6")

    if not _is_power_of_two(sigma_min):
        fail("sigma-min-power-of-two", f"sigma_min = {p.sigma_min!r} is not a power of 2")
    if not _is_power_of_two(sigma_max):
        fail("sigma-max-power-of-two", f"sigma_max = {p.sigma_max!r} is not a power of 2")

    if not (u * u * tau_min * tau_min >= alpha):
        fail("tau-min-squares-above-alpha", f"u^2*tau_min^2 < alpha (tau_min={p.tau_min!r})")
    if not (8 * tau_max * tau_max <= omega):
        fail("tau-max-squares-below-omega", f"8*tau_max^2 > omega (tau_max={p.tau_max!r})")

    if not (omega * tau_min >= 1):
        fail("omega-tau-min-reciprocal", f"omega*tau_min < 1 (tau_min={p.tau_min!r})")
    if not (3 * nu * tau_max <= 1):
        fail("nu-tau-max-reciprocal", f"3*nu*tau_max > 1 (tau_max={p.tau_max!r})")

    def band(v: Fraction) -> bool:
        return tau_min <= v <= tau_max

    if not (band(sigma_min * alpha) and band(sigma_min * tau_min)):
        fail(
            "upscale-lands-in-band",
            f"sigma_min*x leaves [tau_min, tau_max] at an endpoint of (0, tau_min] "
            f"(sigma_min*alpha={float(sigma_min * alpha):.6g}, sigma_min*tau_min={float(sigma_min * tau_min):.6g})",
        )
    if not (band(sigma_max * tau_max) and band(sigma_max * omega)):
        fail(
            "downscale-lands-in-band",
            f"sigma_max*x leaves [tau_min, tau_max] at an endpoint of [tau_max, omega] "
            f"(sigma_max*tau_max={float(sigma_max * tau_max):.6g}, sigma_max*omega={float(sigma_max * omega):.6g})",
        )

    return tuple(out)


@lru_cache(maxsize=None)
def _cached_violations(p: FpParams) -> tuple[Violation, ...]:
    return validate_conditions(p)


def require_valid(p: FpParams) -> FpParams:
    """Raise :class:`FpParamsError` unless ``p`` passes all conditions."""
    violations = _cached_violations(p)
    if violations:
        raise FpParamsError(violations)
    return p


def _exact_pow2_exponent(x: float) -> int:
    f = Fraction(x)
    if not _is_power_of_two(f):
        raise ValueError(f"{x!r} is not a power of two")
    if f.denominator == 1:
        return f.numerator.bit_length() - 1
    return -(f.denominator.bit_length() - 1)


def derive_tau(fmt: str) -> tuple[float, float]:
    """Thresholds produced by the derivation formula, for cross-checking.

    Returns ``(tau_min_candidate, tau_max_candidate)`` where
    ``tau_min = 2^ceil(log2(alpha/u^2)/2)`` and
    ``tau_max = 2^floor((log2(omega)-3)/2)``, evaluated in exact integer
    exponent arithmetic.  Diagnostic only: the published constants disagree
    with the formula's tau_min by a couple of binades (2^-484 vs 2^-482 for
    binary64, 2^-50 vs 2^-49 for binary32), and the published values are
    canonical because they are what the validated conditions hold for.
    """
    p = preset(fmt)
    a = _exact_pow2_exponent(p.alpha)
    b = _exact_pow2_exponent(p.u)
    # ceil((a - 2b)/2) without floating point
    tau_min_exp = -((2 * b - a) // 2)
    # floor(log2(omega)) is frexp's exponent minus one for any positive float
    ilog2_omega = math.frexp(p.omega)[1] - 1
    tau_max_exp = (ilog2_omega - 3) // 2
    return math.ldexp(1.0, tau_min_exp), math.ldexp(1.0, tau_max_exp)

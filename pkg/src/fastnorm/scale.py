"""Scaling preprocessors: map a vector's largest magnitude into the safe band.

Each operation returns the inverse scale factor (0 signals an all-zero
input) together with the scaled components, so callers can undo the scaling
on derived quantities.  Scale factors are exact powers of two: scaling a
normal value is rounding-free, and scaling a subnormal one rounds at most
once (the normalization error budget covers it).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from fastnorm import _backend
from fastnorm.params import FpParams, require_valid

__all__ = ["ScaleOutcome", "scale2", "scale3", "scale4"]


class ScaleOutcome(NamedTuple):
    inv_sigma: float
    scaled: tuple[float, ...]


@lru_cache(maxsize=None)
def kernel_args(p: FpParams) -> tuple[float, float, float, float, float, float]:
    """Flat argument tuple the kernels take; inverses are exact (powers of two)."""
    require_valid(p)
    return (p.tau_min, p.tau_max, p.sigma_min, p.sigma_max, 1.0 / p.sigma_min, 1.0 / p.sigma_max)


def scale2(p: FpParams, x1: float, x2: float) -> ScaleOutcome:
    """Scale a 2-vector so max(|x1|,|x2|) lands in [tau_min, tau_max]."""
    k = _backend.scalar_kernel("scale2", p.precision)
    inv, s1, s2 = k(*kernel_args(p), float(x1), float(x2))
    return ScaleOutcome(inv, (s1, s2))


def scale3(p: FpParams, x1: float, x2: float, x3: float) -> ScaleOutcome:
    """Scale a 3-vector so its largest magnitude lands in [tau_min, tau_max]."""
    k = _backend.scalar_kernel("scale3", p.precision)
    inv, s1, s2, s3 = k(*kernel_args(p), float(x1), float(x2), float(x3))
    return ScaleOutcome(inv, (s1, s2, s3))


def scale4(p: FpParams, x1: float, x2: float, x3: float, x4: float) -> ScaleOutcome:
    """Scale a quaternion so its largest magnitude lands in [tau_min, tau_max]."""
    k = _backend.scalar_kernel("scale4", p.precision)
    inv, s1, s2, s3, s4 = k(*kernel_args(p), float(x1), float(x2), float(x3), float(x4))
    return ScaleOutcome(inv, (s1, s2, s3, s4))

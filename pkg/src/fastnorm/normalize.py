"""Scaling normalization: length and unit direction without overflow/underflow.

The algorithms scale into the safe band, take the root of the sum of squares
in the working precision, multiply by one reciprocal, and undo the scaling
on the length.  Compared to quotient algorithms they trade per-component
divisions for (at most) one multiplication per component plus one division.

Guarantees for finite nonzero NaN-free input x with true length r (verified
empirically by the test suite at both precisions):

* the unit output is finite and its angle phi to x satisfies
  ``|sin phi| <= 1.001 u``;
* ``||unit - x/r|| <= (3.001 + n/2) u``;
* if ``(1 + (1 + n/2) u) r <= omega`` the length is finite, with relative
  error at most ``(1 + n/2) u`` for ``2r >= 3 nu`` and an extra absolute
  ``alpha/2`` below that threshold.

Inputs whose true length exceeds the format's range produce an infinite
length (the overflow is warranted); NaN components propagate to the output.

If the process runs with DAZ/FTZ enabled (subnormals flushed to zero), the
guarantees degrade: with DAZ the bounds apply to the flushed input, and with
FTZ the absolute ``alpha/2`` term in the near-underflow length bound grows
to ``nu``.  This library assumes full IEEE-754 subnormal arithmetic.
"""

from __future__ import annotations

from typing import NamedTuple

from fastnorm import _backend
from fastnorm.params import FpParams
from fastnorm.scale import kernel_args

__all__ = [
    "NormalizeOutcome",
    "normalize2",
    "normalize3",
    "normalize4",
    "norm2",
    "norm3",
    "norm4",
]


class NormalizeOutcome(NamedTuple):
    length: float
    unit: tuple[float, ...]


def normalize2(p: FpParams, x1: float, x2: float) -> NormalizeOutcome:
    """Length and unit direction of a 2-vector; zero input gives (0, (0, 0))."""
    k = _backend.scalar_kernel("normalize2", p.precision)
    r, u1, u2 = k(*kernel_args(p), float(x1), float(x2))
    return NormalizeOutcome(r, (u1, u2))


def normalize3(p: FpParams, x1: float, x2: float, x3: float) -> NormalizeOutcome:
    """Length and unit direction of a 3-vector; zero input gives (0, (0, 0, 0))."""
    k = _backend.scalar_kernel("normalize3", p.precision)
    r, u1, u2, u3 = k(*kernel_args(p), float(x1), float(x2), float(x3))
    return NormalizeOutcome(r, (u1, u2, u3))


def normalize4(p: FpParams, x1: float, x2: float, x3: float, x4: float) -> NormalizeOutcome:
    """Length and unit quaternion.

    The zero quaternion has no direction; it maps to length 0 with the
    identity-rotation unit quaternion (0, 0, 0, 1), the last component being
    the scalar part.
    """
    k = _backend.scalar_kernel("normalize4", p.precision)
    r, u1, u2, u3, u4 = k(*kernel_args(p), float(x1), float(x2), float(x3), float(x4))
    return NormalizeOutcome(r, (u1, u2, u3, u4))


def norm2(p: FpParams, x1: float, x2: float) -> float:
    """Length only; identical to ``normalize2(...).length`` bit for bit."""
    return _backend.scalar_kernel("norm2", p.precision)(*kernel_args(p), float(x1), float(x2))


def norm3(p: FpParams, x1: float, x2: float, x3: float) -> float:
    """Length only; identical to ``normalize3(...).length`` bit for bit."""
    return _backend.scalar_kernel("norm3", p.precision)(*kernel_args(p), float(x1), float(x2), float(x3))


def norm4(p: FpParams, x1: float, x2: float, x3: float, x4: float) -> float:
    """Length only; identical to ``normalize4(...).length`` bit for bit."""
    return _backend.scalar_kernel("norm4", p.precision)(*kernel_args(p), float(x1), float(x2), float(x3), float(x4))

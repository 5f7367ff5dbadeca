"""Comparison algorithms: naive normalization and the quotient family.

The naive functions evaluate sqrt(sum of squares) and divide, with no
protection whatsoever; they silently overflow (huge inputs give an infinite
length and zero unit components) and underflow (tiny inputs give length zero
and inf/NaN components).  That failure mode is the point: they are the
baseline the robust algorithms are measured against.

The quotient functions divide by the largest magnitude first, so they only
overflow when the input warrants it.  They cost two divisions per component,
which is what makes the scaling algorithms interesting.
"""

from __future__ import annotations

from fastnorm import _backend
from fastnorm.normalize import NormalizeOutcome

__all__ = [
    "naive_normalize2",
    "naive_normalize3",
    "naive_normalize4",
    "quotient2",
    "quotient3_robust",
    "quotient3_fast",
    "quotient4",
]


def naive_normalize2(x1: float, x2: float, precision: str = "double") -> NormalizeOutcome:
    r, u1, u2 = _backend.scalar_kernel("naive2", precision)(float(x1), float(x2))
    return NormalizeOutcome(r, (u1, u2))


def naive_normalize3(x1: float, x2: float, x3: float, precision: str = "double") -> NormalizeOutcome:
    r, u1, u2, u3 = _backend.scalar_kernel("naive3", precision)(float(x1), float(x2), float(x3))
    return NormalizeOutcome(r, (u1, u2, u3))


def naive_normalize4(
    x1: float, x2: float, x3: float, x4: float, precision: str = "double"
) -> NormalizeOutcome:
    r, u1, u2, u3, u4 = _backend.scalar_kernel("naive4", precision)(float(x1), float(x2), float(x3), float(x4))
    return NormalizeOutcome(r, (u1, u2, u3, u4))


def quotient2(x1: float, x2: float, precision: str = "double") -> NormalizeOutcome:
    """Max-division quotient normalization of a 2-vector; zero input gives zeros."""
    r, u1, u2 = _backend.scalar_kernel("quotient2", precision)(float(x1), float(x2))
    return NormalizeOutcome(r, (u1, u2))


def quotient3_robust(x1: float, x2: float, x3: float, precision: str = "double") -> NormalizeOutcome:
    """Divide by the max magnitude, take the norm, divide again.

    Robust against overflow/underflow for any finite input whose true length
    is representable; division-heavy by construction.
    """
    r, u1, u2, u3 = _backend.scalar_kernel("quotient3", precision)(float(x1), float(x2), float(x3))
    return NormalizeOutcome(r, (u1, u2, u3))


def quotient3_fast(x1: float, x2: float, x3: float, precision: str = "double") -> NormalizeOutcome:
    """Pivoting variant: selects the dominant component by comparisons and
    saves one division against the robust form.  NaN inputs give NaN outputs.
    """
    r, u1, u2, u3 = _backend.scalar_kernel("quotient3_fast", precision)(float(x1), float(x2), float(x3))
    return NormalizeOutcome(r, (u1, u2, u3))


def quotient4(
    x1: float, x2: float, x3: float, x4: float, precision: str = "double"
) -> NormalizeOutcome:
    """Max-division quotient normalization of a quaternion."""
    r, u1, u2, u3, u4 = _backend.scalar_kernel("quotient4", precision)(float(x1), float(x2), float(x3), float(x4))
    return NormalizeOutcome(r, (u1, u2, u3, u4))

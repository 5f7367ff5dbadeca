import math
from fractions import Fraction

import pytest

from fastnorm import _backend
from fastnorm.params import preset


@pytest.fixture(params=_backend.available_backends())
def backend(request):
    """Run the test once per available backend (compiled when built)."""
    with _backend.override(request.param):
        yield request.param


@pytest.fixture
def dbl():
    return preset("double")


@pytest.fixture
def sgl():
    return preset("single")


def frac_sqrt(x: Fraction, bits: int = 220) -> Fraction:
    """Independent square root oracle: floor(2^bits * sqrt(x)) / 2^bits.

    Pure integer arithmetic (no mpfr, no float), relative error < 2^(1-bits).
    """
    if x < 0:
        raise ValueError("negative")
    p, q = x.numerator, x.denominator
    return Fraction(math.isqrt((p * q) << (2 * bits)), q << bits)


def ulps(a: float, b: float, u: float) -> float:
    """|a - b| expressed in units of u (for tolerance statements)."""
    return abs(a - b) / u

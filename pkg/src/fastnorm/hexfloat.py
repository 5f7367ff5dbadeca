"""Bit-exact float I/O: hexadecimal-float literals and ``2^k`` power notation.

Hexadecimal floats are the canonical interchange format on the command line;
decimal output is a convenience and may not round-trip.
"""

from __future__ import annotations

import math
import re
import struct

_HEX_RE = re.compile(r"^[+-]?0[xX]")
_POW2_RE = re.compile(r"^([+-]?)2\^([+-]?\d+)$")

_PACK32 = struct.Struct("<f")


def round_to_single(x: float) -> float:
    """Nearest binary32 value of ``x``, as a Python float (widening is exact)."""
    try:
        return _PACK32.unpack(_PACK32.pack(x))[0]
    except OverflowError:
        return math.copysign(math.inf, x)


def parse_literal(text: str) -> float:
    """Parse a decimal or hexadecimal floating-point literal.

    ``0x1.8p+1`` style strings go through ``float.fromhex``; everything else
    through ``float`` (which accepts ``inf`` and ``nan``).
    """
    text = text.strip()
    if _HEX_RE.match(text):
        return float.fromhex(text)
    return float(text)


def parse_number(text: str) -> float:
    """Parse ``2^k`` power-of-two notation, or fall back to :func:`parse_literal`."""
    text = text.strip()
    m = _POW2_RE.match(text)
    if m:
        value = math.ldexp(1.0, int(m.group(2)))
        return -value if m.group(1) == "-" else value
    return parse_literal(text)


def format_hex(x: float, precision: str = "double") -> str:
    """Hexadecimal-float form of ``x``, bit-exact for the given format.

    For ``double`` this is ``float.hex()``.  For ``single`` the value must be
    a binary32 value (as produced by the single-precision kernels); it is
    printed with the 6-digit binary32 significand, e.g. ``0x1.99999ap-3``.
    """
    if precision == "double":
        return float(x).hex()
    if precision != "single":
        raise ValueError(f"unknown precision: {precision!r}")
    if round_to_single(x) != x and not math.isnan(x):
        raise ValueError(f"{x!r} is not a binary32 value")
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "-inf" if x < 0 else "inf"
    bits = _PACK32.pack(x)
    (n,) = struct.unpack("<I", bits)
    sign = "-" if n >> 31 else ""
    exp = (n >> 23) & 0xFF
    frac = n & 0x7FFFFF
    if exp == 0:
        if frac == 0:
            return sign + "0x0.0p+0"
        # subnormal: significand 0.frac, exponent -126
        return f"{sign}0x0.{frac << 1:06x}p-126"
    return f"{sign}0x1.{frac << 1:06x}p{exp - 127:+d}"


def format_value(x: float, precision: str = "double") -> str:
    """``<decimal> (<hex>)`` display form used by the CLI."""
    return f"{x!r} ({format_hex(x, precision)})"

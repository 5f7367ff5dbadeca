"""Quaternion to 3x3 rotation matrix, in general and unit-quaternion forms.

Convention: q = (q1, q2, q3, q4) with q4 the scalar part, so (0, 0, 0, 1) is
the identity rotation.  The general form divides by the squared norm and
accepts any finite nonzero quaternion; the unit form assumes the input came
out of ``normalize4`` and skips the division.

The unit form's diagonal is 1 - 2(qj^2 + qk^2), which is what the general
form reduces to at unit norm; the two forms agree entrywise to a few units
in the last place on unit input (cross-validated by the test suite).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from fastnorm import _backend
from fastnorm.params import preset
from fastnorm.scale import kernel_args

__all__ = ["RotationMatrix", "rotation_general", "rotation_unit"]

Row = tuple[float, float, float]


@dataclass(frozen=True)
class RotationMatrix:
    """3x3 rotation matrix, row-major."""

    rows: tuple[Row, Row, Row]

    def __getitem__(self, i: int) -> Row:
        return self.rows[i]

    def flat(self) -> tuple[float, ...]:
        return self.rows[0] + self.rows[1] + self.rows[2]

    def apply(self, v: tuple[float, float, float]) -> Row:
        """Matrix-vector product R @ v."""
        return tuple(r[0] * v[0] + r[1] * v[1] + r[2] * v[2] for r in self.rows)


def _check_finite(q) -> tuple[float, float, float, float]:
    q = tuple(float(c) for c in q)
    if len(q) != 4:
        raise ValueError(f"quaternion needs 4 components, got {len(q)}")
    if not all(math.isfinite(c) for c in q):
        raise ValueError(f"quaternion components must be finite, got {q}")
    return q


def rotation_general(q) -> RotationMatrix:
    """Rotation matrix of an arbitrary nonzero quaternion.

    The squared norm is computed on scaled components, so quaternions of any
    finite magnitude work: the power-of-two scale factors cancel between the
    entry numerators and the squared norm.
    """
    q1, q2, q3, q4 = _check_finite(q)
    k = _backend.scalar_kernel("scale4", "double")
    inv, q1, q2, q3, q4 = k(*kernel_args(preset("double")), q1, q2, q3, q4)
    if inv == 0.0:
        raise ValueError("zero quaternion has no rotation matrix")
    ss = q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4
    return RotationMatrix(
        (
            (
                (q1 * q1 + q4 * q4 - q2 * q2 - q3 * q3) / ss,
                2.0 * (q1 * q2 - q3 * q4) / ss,
                2.0 * (q1 * q3 + q2 * q4) / ss,
            ),
            (
                2.0 * (q1 * q2 + q3 * q4) / ss,
                (q2 * q2 + q4 * q4 - q1 * q1 - q3 * q3) / ss,
                2.0 * (q2 * q3 - q1 * q4) / ss,
            ),
            (
                2.0 * (q1 * q3 - q2 * q4) / ss,
                2.0 * (q2 * q3 + q1 * q4) / ss,
                (q3 * q3 + q4 * q4 - q1 * q1 - q2 * q2) / ss,
            ),
        )
    )


def rotation_unit(q) -> RotationMatrix:
    """Rotation matrix of a quaternion assumed to have norm 1.

    No norm is computed; feed this the unit output of ``normalize4``.
    """
    q1, q2, q3, q4 = _check_finite(q)
    return RotationMatrix(
        (
            (
                1.0 - 2.0 * (q2 * q2 + q3 * q3),
                2.0 * (q1 * q2 - q3 * q4),
                2.0 * (q1 * q3 + q2 * q4),
            ),
            (
                2.0 * (q1 * q2 + q3 * q4),
                1.0 - 2.0 * (q1 * q1 + q3 * q3),
                2.0 * (q2 * q3 - q1 * q4),
            ),
            (
                2.0 * (q1 * q3 - q2 * q4),
                2.0 * (q2 * q3 + q1 * q4),
                1.0 - 2.0 * (q1 * q1 + q2 * q2),
            ),
        )
    )

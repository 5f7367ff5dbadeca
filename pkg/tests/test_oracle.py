import math
from fractions import Fraction

import gmpy2
import pytest

from conftest import frac_sqrt
from fastnorm import normalize
from fastnorm.baselines import naive_normalize2, naive_normalize3
from fastnorm.normalize import NormalizeOutcome
from fastnorm.oracle import (
    ORACLE_PRECISION,
    measure,
    ref_normalize,
    sweep_bounds,
    ulp_distance,
)
from fastnorm.params import preset


def test_precision_margin():
    # the oracle must carry at least 128 fractional bits and dominate the
    # widest working format by 100 bits
    assert ORACLE_PRECISION >= 128
    assert ORACLE_PRECISION - 53 >= 100


class TestRefNormalize:
    def test_three_four(self):
        r, unit = ref_normalize([3.0, 4.0])
        assert r == 5  # sqrt of an exact square is exact
        assert abs(Fraction(gmpy2.mpq(unit[0])) - Fraction(3, 5)) < Fraction(1, 2**200)
        assert abs(Fraction(gmpy2.mpq(unit[1])) - Fraction(4, 5)) < Fraction(1, 2**200)

    def test_sqrt3(self):
        r, _ = ref_normalize([1.0, 1.0, 1.0])
        ref = frac_sqrt(Fraction(3))
        assert abs(Fraction(gmpy2.mpq(r)) - ref) < Fraction(1, 2**190)

    def test_subnormal_pair(self):
        a = math.ldexp(1, -1074)
        r, unit = ref_normalize([a, a])
        ref = Fraction(a) * frac_sqrt(Fraction(2))
        assert abs(Fraction(gmpy2.mpq(r)) - ref) < ref / 2**190
        assert abs(Fraction(gmpy2.mpq(unit[0])) - frac_sqrt(Fraction(1, 2))) < Fraction(1, 2**190)

    def test_unit_norm_self_consistency(self):
        # oracle's own unit vector has norm 1 to well within 2^-100 relative
        _, unit = ref_normalize([0.3, -0.4, 1.7, 0.2])
        s = sum(Fraction(gmpy2.mpq(u)) ** 2 for u in unit)
        assert abs(s - 1) < Fraction(1, 2**100)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            ref_normalize([0.0, 0.0])
        with pytest.raises(ValueError):
            ref_normalize([1.0, math.inf])
        with pytest.raises(ValueError):
            ref_normalize([math.nan, 1.0])


class TestMeasure:
    def test_well_conditioned_passes(self, dbl):
        out = normalize.normalize2(dbl, 3.0, 4.0)
        rep = measure(dbl, (3.0, 4.0), out)
        assert rep.bound_violations == ()
        assert float(rep.rel_length_err) == 0.0  # length 5 is exact here
        assert float(rep.dir_err) <= 4.001 * dbl.u
        assert float(rep.sin_phi) <= 1.001 * dbl.u

    def test_naive_overflow_flagged(self, dbl):
        out = naive_normalize3(2.0**600, 0.0, 0.0)
        rep = measure(dbl, (2.0**600, 0.0, 0.0), out)
        assert "finite-length" in rep.bound_violations
        assert "direction" in rep.bound_violations

    def test_naive_underflow_flagged(self, dbl):
        out = naive_normalize2(2.0**-600, 0.0)
        rep = measure(dbl, (2.0**-600, 0.0), out)
        assert rep.bound_violations == ("nan-output",)

    def test_sin_phi_below_dir_err(self, dbl):
        # geometric fact: the angle's sine never exceeds the chord by more
        # than the unit vector's deviation from norm one
        import random

        rng = random.Random(7)
        for _ in range(50):
            xs = tuple(rng.uniform(-2, 2) for _ in range(3))
            if all(x == 0 for x in xs):
                continue
            rep = measure(dbl, xs, normalize.normalize3(dbl, *xs))
            assert float(rep.sin_phi) <= float(rep.dir_err) * (1 + 1e-9) + 1e-60

    def test_quaternion_has_no_angle_metric(self, dbl):
        out = normalize.normalize4(dbl, 1.0, 1.0, 1.0, 1.0)
        rep = measure(dbl, (1.0, 1.0, 1.0, 1.0), out)
        assert rep.sin_phi is None
        assert rep.bound_violations == ()

    def test_fabricated_bad_length_flagged(self, dbl):
        bad = NormalizeOutcome(5.0 * (1 + 1e-10), (0.6, 0.8))
        rep = measure(dbl, (3.0, 4.0), bad)
        assert "length-in-range" in rep.bound_violations

    def test_fabricated_bad_direction_flagged(self, dbl):
        bad = NormalizeOutcome(5.0, (0.8, 0.6))
        rep = measure(dbl, (3.0, 4.0), bad)
        assert "sin-phi" in rep.bound_violations
        assert "direction" in rep.bound_violations

    def test_fabricated_bad_product_flagged(self, dbl):
        good = normalize.normalize4(dbl, 1.0, 2.0, 3.0, 4.0)
        bad = NormalizeOutcome(good.length, (good.unit[0] * (1 + 2**-40),) + good.unit[1:])
        rep = measure(dbl, (1.0, 2.0, 3.0, 4.0), bad)
        assert any(v.startswith("quaternion-product") for v in rep.bound_violations)

    def test_input_validation(self, dbl):
        out = NormalizeOutcome(0.0, (0.0, 0.0))
        with pytest.raises(ValueError):
            measure(dbl, (0.0, 0.0), out)
        with pytest.raises(ValueError):
            measure(dbl, (math.inf, 1.0), out)
        with pytest.raises(ValueError):
            measure(dbl, (1.0,), out)

    def test_single_precision_bounds(self, sgl):
        out = normalize.normalize2(sgl, 3.0, 4.0)
        rep = measure(sgl, (3.0, 4.0), out)
        assert rep.bound_violations == ()


def test_sweep_bounds_counts(dbl):
    inputs = [(3.0, 4.0), (1.0, 1.0), (2.0**-600, 1.0)]
    fn = lambda *xs: normalize.normalize2(dbl, *xs)
    s = sweep_bounds(dbl, fn, inputs)
    assert s.samples == 3
    assert s.violation_count == 0
    assert set(s.max_metrics) == {"rel_length_err", "abs_length_err", "dir_err", "sin_phi"}
    assert all(v >= 0 for v in s.max_metrics.values())


def test_sweep_bounds_catches_naive(dbl):
    inputs = [(3.0, 4.0), (2.0**-600, 0.0)]
    s = sweep_bounds(dbl, lambda *xs: naive_normalize2(*xs), inputs)
    assert s.violation_count == 1
    assert s.first_violations[0][0] == (2.0**-600, 0.0)


class TestUlpDistance:
    def test_equal(self):
        assert ulp_distance(1.0, 1.0) == 0
        assert ulp_distance(0.0, -0.0) == 0

    def test_adjacent(self):
        assert ulp_distance(1.0, math.nextafter(1.0, 2.0)) == 1
        assert ulp_distance(0.0, 5e-324) == 1
        assert ulp_distance(-5e-324, 5e-324) == 2

    def test_spec_gap_case(self):
        # independent count: walk nextafter upward from 1.0
        target = 1.0 + 2.0**-50
        steps, x = 0, 1.0
        while x < target:
            x = math.nextafter(x, 2.0)
            steps += 1
        assert steps == 4  # spacing above 1.0 is 2^-52 and 2^-50 = 4 ulps
        assert ulp_distance(1.0, target) == 4

    def test_symmetry_and_sign_crossing(self):
        assert ulp_distance(-1.0, 1.0) == ulp_distance(1.0, -1.0)
        assert ulp_distance(-1.0, 1.0) == 2 * ulp_distance(0.0, 1.0)

    def test_single_format(self):
        one_plus = float(math.ldexp(1, 0) + math.ldexp(1, -23))
        assert ulp_distance(1.0, one_plus, "single") == 1
        with pytest.raises(ValueError):
            ulp_distance(1.0, 1.0 + 2.0**-40, "single")  # not a binary32 value

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            ulp_distance(math.inf, 1.0)

import math
import struct
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fastnorm.params import preset
from fastnorm.scale import scale2, scale3, scale4

L = math.ldexp

# nonzero finite floats, log-uniform over the full bit range (subnormals in)
def _f64_from_bits(bits):
    return struct.unpack("<d", struct.pack("<Q", bits))[0]


def _f32_from_bits(bits):
    return float(struct.unpack("<f", struct.pack("<I", bits))[0])


st_f64 = st.integers(1, 0x7FEFFFFFFFFFFFFF).map(_f64_from_bits).flatmap(
    lambda v: st.sampled_from([v, -v])
)
st_f32 = st.integers(1, 0x7F7FFFFF).map(_f32_from_bits).flatmap(
    lambda v: st.sampled_from([v, -v])
)


class TestExamples:
    def test_scale2_zero(self, backend, dbl):
        assert scale2(dbl, 0.0, 0.0) == (0.0, (0.0, 0.0))

    def test_scale2_in_band(self, backend, dbl):
        assert scale2(dbl, 1.0, -0.5) == (1.0, (1.0, -0.5))

    def test_scale2_tiny(self, backend, dbl):
        out = scale2(dbl, L(1, -500), 0.0)
        assert out == (L(1, -592), (L(1, 92), 0.0))

    def test_scale2_huge(self, backend, dbl):
        out = scale2(dbl, L(1, 520), L(1, 519))
        assert out == (L(1, 514), (L(1, 6), L(1, 5)))

    def test_scale3_zero(self, backend, dbl):
        assert scale3(dbl, 0.0, 0.0, 0.0) == (0.0, (0.0, 0.0, 0.0))

    def test_scale3_in_band(self, backend, dbl):
        assert scale3(dbl, 3.0, 4.0, 12.0) == (1.0, (3.0, 4.0, 12.0))

    def test_scale3_alpha(self, backend, dbl):
        out = scale3(dbl, 0.0, L(1, -1074), 0.0)
        assert out == (L(1, -592), (0.0, L(1, -482), 0.0))  # alpha*sigma_min == tau_min

    def test_scale4_zero(self, backend, dbl):
        assert scale4(dbl, 0.0, 0.0, 0.0, 0.0) == (0.0, (0.0, 0.0, 0.0, 0.0))

    def test_scale4_ones(self, backend, dbl):
        assert scale4(dbl, 1.0, 1.0, 1.0, 1.0) == (1.0, (1.0, 1.0, 1.0, 1.0))

    def test_scale4_huge(self, backend, dbl):
        out = scale4(dbl, L(1, 600), 0.0, 0.0, L(1, 599))
        assert out == (L(1, 514), (L(1, 86), 0.0, 0.0, L(1, 85)))

    def test_scale4_dominant_first_component(self, backend, dbl):
        # the max-finding cascade must keep the largest magnitude even when
        # later components are smaller
        out = scale4(dbl, 1.0, 0.0, 0.0, L(1, -500))
        assert out.inv_sigma == 1.0
        assert out.scaled == (1.0, 0.0, 0.0, L(1, -500))

    def test_scale2_single(self, backend, sgl):
        assert scale2(sgl, L(1, 70), 0.0) == (L(1, 66), (L(1, 4), 0.0))
        assert scale2(sgl, L(1, -60), 0.0) == (L(1, -100), (L(1, 40), 0.0))


def _apply(p, xs):
    return {2: scale2, 3: scale3, 4: scale4}[len(xs)](p, *xs)


class TestProperties:
    @given(xs=st.lists(st_f64, min_size=2, max_size=4))
    @settings(max_examples=400, deadline=None)
    def test_range_property_double(self, xs):
        p = preset("double")
        out = _apply(p, xs)
        top = max(abs(v) for v in out.scaled)
        assert p.tau_min <= top <= p.tau_max
        assert out.inv_sigma in (1.0, 1.0 / p.sigma_min, 1.0 / p.sigma_max)

    @given(xs=st.lists(st_f32, min_size=2, max_size=4))
    @settings(max_examples=400, deadline=None)
    def test_range_property_single(self, xs):
        p = preset("single")
        out = _apply(p, xs)
        top = max(abs(v) for v in out.scaled)
        assert p.tau_min <= top <= p.tau_max
        assert out.inv_sigma in (1.0, 1.0 / p.sigma_min, 1.0 / p.sigma_max)

    @given(xs=st.lists(st_f64, min_size=2, max_size=4))
    @settings(max_examples=300, deadline=None)
    def test_idempotence(self, xs):
        p = preset("double")
        first = _apply(p, xs)
        again = _apply(p, first.scaled)
        assert again.inv_sigma == 1.0
        assert again.scaled == first.scaled  # bit-identical

    @given(xs=st.lists(st_f64, min_size=2, max_size=4))
    @settings(max_examples=300, deadline=None)
    def test_exactness_for_normal_results(self, xs):
        # power-of-two scaling is exact whenever the exact product lands in
        # the normal range [nu, omega]; below nu it may round (and a scaled
        # component can even flush to zero, see the regression test below)
        p = preset("double")
        out = _apply(p, xs)
        sigma = Fraction(1) / Fraction(out.inv_sigma)
        for x, s in zip(xs, out.scaled):
            exact = sigma * abs(Fraction(x))
            if Fraction(p.nu) <= exact <= Fraction(p.omega):
                assert Fraction(s) == sigma * Fraction(x)

    def test_downscaled_component_can_flush_to_zero(self, backend, dbl):
        # a min-normal component next to a just-over-tau_max one is scaled by
        # sigma_max down to 2^-1536, far below the subnormal range
        big = math.nextafter(dbl.tau_max, math.inf)
        out = scale2(dbl, dbl.nu, big)
        assert out.inv_sigma == 1.0 / dbl.sigma_max
        assert out.scaled[0] == 0.0
        assert out.scaled[1] == dbl.sigma_max * big

    @given(xs=st.lists(st_f64, min_size=2, max_size=4))
    @settings(max_examples=200, deadline=None)
    def test_inverse_is_power_of_two(self, xs):
        out = _apply(preset("double"), xs)
        f = Fraction(out.inv_sigma)
        assert f.numerator.bit_count() == 1 and f.denominator.bit_count() == 1


_NAN_COMPANIONS = [0.0, -0.0, 1.0, -2.5, L(1, -1074), L(1, -482), L(1, 600)]


class TestNaN:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nan_propagates_every_position(self, backend, dbl, n):
        for i in range(n):
            for fill in _NAN_COMPANIONS:
                xs = [fill] * n
                xs[i] = math.nan
                out = _apply(dbl, xs)
                assert any(math.isnan(v) for v in out.scaled), (i, fill)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_no_spurious_nan(self, backend, dbl, n):
        for fill in _NAN_COMPANIONS:
            out = _apply(dbl, [fill] * n)
            assert not any(math.isnan(v) for v in out.scaled)

    def test_zero_with_nan_does_not_take_zero_branch(self, backend, dbl):
        # (0, NaN, 0) reaches the zero test through IEEE comparisons; it must
        # still propagate the NaN rather than return the zero outcome
        out = scale3(dbl, 0.0, math.nan, 0.0)
        assert out.inv_sigma != 0.0
        assert math.isnan(out.scaled[1])
        out4 = scale4(dbl, 0.0, math.nan, 0.0, 0.0)
        assert out4.inv_sigma != 0.0 and math.isnan(out4.scaled[1])
        out4b = scale4(dbl, 0.0, 0.0, math.nan, 0.0)
        assert out4b.inv_sigma != 0.0 and math.isnan(out4b.scaled[2])


class TestEdges:
    def test_infinite_input_passes_through(self, backend, dbl):
        out = scale2(dbl, math.inf, 1.0)
        assert out.inv_sigma == 1.0 / dbl.sigma_max
        assert out.scaled[0] == math.inf  # sigma_max * inf

    def test_negative_zero_all(self, backend, dbl):
        out = scale2(dbl, -0.0, -0.0)
        assert out.inv_sigma == 0.0
        assert out.scaled == (0.0, 0.0)

    def test_inv_sigma_zero_iff_all_zero(self, backend, dbl):
        assert scale3(dbl, 0.0, 0.0, 0.0).inv_sigma == 0.0
        assert scale3(dbl, 0.0, L(1, -1074), 0.0).inv_sigma != 0.0
        assert scale4(dbl, 0.0, 0.0, 0.0, -0.0).inv_sigma == 0.0

# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled normalization kernels (hot path).

Twin of ``fastnorm._pykernels``: every exported name exists in both modules
and produces bit-identical results.  Built with strict IEEE arithmetic
(-O3, no -ffast-math, -ffp-contract=off) so each written operation incurs
exactly one rounding; the error bounds the test suite verifies depend on
that.  cdivision is required so float division by zero follows IEEE instead
of raising.
"""

from libc.math cimport fabs, fabsf, sqrt, sqrtf, copysign, copysignf, isnan

BACKEND_NAME = "compiled"
BUILD_FLAGS = "-O3 -ffp-contract=off"

ctypedef fused real:
    float
    double


cdef inline real _abs(real x) noexcept nogil:
    if real is float:
        return fabsf(x)
    else:
        return fabs(x)


cdef inline real _sqrt(real x) noexcept nogil:
    if real is float:
        return sqrtf(x)
    else:
        return sqrt(x)


cdef inline real _sign1(real x) noexcept nogil:
    if real is float:
        return copysignf(<float>1.0, x)
    else:
        return copysign(1.0, x)


# ---------------------------------------------------------------------------
# scaling preprocessors
# ---------------------------------------------------------------------------

cdef inline void _scale2(real tau_min, real tau_max, real sigma_min, real sigma_max,
                         real inv_min, real inv_max, real x1, real x2,
                         real* inv, real* s1, real* s2) noexcept nogil:
    cdef real m = _abs(x1)
    if m >= _abs(x2):
        if m == <real>0.0:
            inv[0] = <real>0.0
            s1[0] = <real>0.0
            s2[0] = <real>0.0
            return
    else:
        m = _abs(x2)
    if m >= tau_min:
        if m <= tau_max:
            inv[0] = <real>1.0
            s1[0] = x1
            s2[0] = x2
            return
        inv[0] = inv_max
        s1[0] = sigma_max * x1
        s2[0] = sigma_max * x2
        return
    inv[0] = inv_min
    s1[0] = sigma_min * x1
    s2[0] = sigma_min * x2


cdef inline void _scale3(real tau_min, real tau_max, real sigma_min, real sigma_max,
                         real inv_min, real inv_max, real x1, real x2, real x3,
                         real* inv, real* s1, real* s2, real* s3) noexcept nogil:
    cdef real m = _abs(x1)
    if m < _abs(x2):
        m = _abs(x2)
        if m < _abs(x3):
            m = _abs(x3)
    else:
        if m >= _abs(x3):
            # reached only with x3 a real zero; a NaN x2 must fall through
            if m == <real>0.0 and not isnan(x2):
                inv[0] = <real>0.0
                s1[0] = <real>0.0
                s2[0] = <real>0.0
                s3[0] = <real>0.0
                return
        else:
            m = _abs(x3)
    if m >= tau_min:
        if m <= tau_max:
            inv[0] = <real>1.0
            s1[0] = x1
            s2[0] = x2
            s3[0] = x3
            return
        inv[0] = inv_max
        s1[0] = sigma_max * x1
        s2[0] = sigma_max * x2
        s3[0] = sigma_max * x3
        return
    inv[0] = inv_min
    s1[0] = sigma_min * x1
    s2[0] = sigma_min * x2
    s3[0] = sigma_min * x3


cdef inline void _scale4(real tau_min, real tau_max, real sigma_min, real sigma_max,
                         real inv_min, real inv_max,
                         real x1, real x2, real x3, real x4,
                         real* inv, real* s1, real* s2, real* s3, real* s4) noexcept nogil:
    cdef real m = _abs(x1)
    if m < _abs(x2):
        m = _abs(x2)
        if m < _abs(x3):
            m = _abs(x3)
        if m < _abs(x4):
            m = _abs(x4)
    else:
        if m < _abs(x3):
            m = _abs(x3)
            if m < _abs(x4):
                m = _abs(x4)
        else:
            if m >= _abs(x4):
                if m == <real>0.0 and not (isnan(x2) or isnan(x3)):
                    inv[0] = <real>0.0
                    s1[0] = <real>0.0
                    s2[0] = <real>0.0
                    s3[0] = <real>0.0
                    s4[0] = <real>0.0
                    return
            else:
                m = _abs(x4)
    if m >= tau_min:
        if m <= tau_max:
            inv[0] = <real>1.0
            s1[0] = x1
            s2[0] = x2
            s3[0] = x3
            s4[0] = x4
            return
        inv[0] = inv_max
        s1[0] = sigma_max * x1
        s2[0] = sigma_max * x2
        s3[0] = sigma_max * x3
        s4[0] = sigma_max * x4
        return
    inv[0] = inv_min
    s1[0] = sigma_min * x1
    s2[0] = sigma_min * x2
    s3[0] = sigma_min * x3
    s4[0] = sigma_min * x4


# ---------------------------------------------------------------------------
# scaling normalization
# ---------------------------------------------------------------------------

cdef inline void _normalize2(real tau_min, real tau_max, real sigma_min, real sigma_max,
                             real inv_min, real inv_max, real x1, real x2,
                             real* r, real* u1, real* u2) noexcept nogil:
    cdef real inv, s1, s2, rt, h
    _scale2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, &inv, &s1, &s2)
    if inv == <real>0.0:
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        return
    rt = _sqrt(s1 * s1 + s2 * s2)
    h = (<real>1.0) / rt
    r[0] = inv * rt
    u1[0] = h * s1
    u2[0] = h * s2


cdef inline void _normalize3(real tau_min, real tau_max, real sigma_min, real sigma_max,
                             real inv_min, real inv_max, real x1, real x2, real x3,
                             real* r, real* u1, real* u2, real* u3) noexcept nogil:
    cdef real inv, s1, s2, s3, rt, h
    _scale3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3,
            &inv, &s1, &s2, &s3)
    if inv == <real>0.0:
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        u3[0] = <real>0.0
        return
    rt = _sqrt(s1 * s1 + s2 * s2 + s3 * s3)
    h = (<real>1.0) / rt
    r[0] = inv * rt
    u1[0] = h * s1
    u2[0] = h * s2
    u3[0] = h * s3


cdef inline void _normalize4(real tau_min, real tau_max, real sigma_min, real sigma_max,
                             real inv_min, real inv_max,
                             real x1, real x2, real x3, real x4,
                             real* r, real* u1, real* u2, real* u3, real* u4) noexcept nogil:
    cdef real inv, s1, s2, s3, s4, rt, h
    _scale4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3, x4,
            &inv, &s1, &s2, &s3, &s4)
    if inv == <real>0.0:
        # zero quaternion: zero length plus the identity rotation
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        u3[0] = <real>0.0
        u4[0] = <real>1.0
        return
    rt = _sqrt(s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4)
    h = (<real>1.0) / rt
    r[0] = inv * rt
    u1[0] = h * s1
    u2[0] = h * s2
    u3[0] = h * s3
    u4[0] = h * s4


cdef inline real _norm2(real tau_min, real tau_max, real sigma_min, real sigma_max,
                        real inv_min, real inv_max, real x1, real x2) noexcept nogil:
    cdef real inv, s1, s2
    _scale2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, &inv, &s1, &s2)
    if inv == <real>0.0:
        return <real>0.0
    return inv * _sqrt(s1 * s1 + s2 * s2)


cdef inline real _norm3(real tau_min, real tau_max, real sigma_min, real sigma_max,
                        real inv_min, real inv_max, real x1, real x2, real x3) noexcept nogil:
    cdef real inv, s1, s2, s3
    _scale3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3,
            &inv, &s1, &s2, &s3)
    if inv == <real>0.0:
        return <real>0.0
    return inv * _sqrt(s1 * s1 + s2 * s2 + s3 * s3)


cdef inline real _norm4(real tau_min, real tau_max, real sigma_min, real sigma_max,
                        real inv_min, real inv_max,
                        real x1, real x2, real x3, real x4) noexcept nogil:
    cdef real inv, s1, s2, s3, s4
    _scale4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3, x4,
            &inv, &s1, &s2, &s3, &s4)
    if inv == <real>0.0:
        return <real>0.0
    return inv * _sqrt(s1 * s1 + s2 * s2 + s3 * s3 + s4 * s4)


# ---------------------------------------------------------------------------
# baselines
# ---------------------------------------------------------------------------

cdef inline void _naive2(real x1, real x2, real* r, real* u1, real* u2) noexcept nogil:
    cdef real rr = _sqrt(x1 * x1 + x2 * x2)
    r[0] = rr
    u1[0] = x1 / rr
    u2[0] = x2 / rr


cdef inline void _naive3(real x1, real x2, real x3,
                         real* r, real* u1, real* u2, real* u3) noexcept nogil:
    cdef real rr = _sqrt(x1 * x1 + x2 * x2 + x3 * x3)
    r[0] = rr
    u1[0] = x1 / rr
    u2[0] = x2 / rr
    u3[0] = x3 / rr


cdef inline void _naive4(real x1, real x2, real x3, real x4,
                         real* r, real* u1, real* u2, real* u3, real* u4) noexcept nogil:
    cdef real rr = _sqrt(x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4)
    r[0] = rr
    u1[0] = x1 / rr
    u2[0] = x2 / rr
    u3[0] = x3 / rr
    u4[0] = x4 / rr


cdef inline void _quotient2(real x1, real x2, real* r, real* u1, real* u2) noexcept nogil:
    cdef real m = _abs(x1)
    cdef real a = _abs(x2)
    cdef real q1, q2, h
    if a > m:
        m = a
    if m == <real>0.0 and not (isnan(x1) or isnan(x2)):
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        return
    q1 = x1 / m
    q2 = x2 / m
    h = _sqrt(q1 * q1 + q2 * q2)
    r[0] = m * h
    u1[0] = q1 / h
    u2[0] = q2 / h


cdef inline void _quotient3(real x1, real x2, real x3,
                            real* r, real* u1, real* u2, real* u3) noexcept nogil:
    cdef real m = _abs(x1)
    cdef real a = _abs(x2)
    cdef real q1, q2, q3, h
    if a > m:
        m = a
    a = _abs(x3)
    if a > m:
        m = a
    if m == <real>0.0 and not (isnan(x1) or isnan(x2) or isnan(x3)):
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        u3[0] = <real>0.0
        return
    q1 = x1 / m
    q2 = x2 / m
    q3 = x3 / m
    h = _sqrt(q1 * q1 + q2 * q2 + q3 * q3)
    r[0] = m * h
    u1[0] = q1 / h
    u2[0] = q2 / h
    u3[0] = q3 / h


cdef inline void _quotient4(real x1, real x2, real x3, real x4,
                            real* r, real* u1, real* u2, real* u3, real* u4) noexcept nogil:
    cdef real m = _abs(x1)
    cdef real a = _abs(x2)
    cdef real q1, q2, q3, q4, h
    if a > m:
        m = a
    a = _abs(x3)
    if a > m:
        m = a
    a = _abs(x4)
    if a > m:
        m = a
    if m == <real>0.0 and not (isnan(x1) or isnan(x2) or isnan(x3) or isnan(x4)):
        r[0] = <real>0.0
        u1[0] = <real>0.0
        u2[0] = <real>0.0
        u3[0] = <real>0.0
        u4[0] = <real>0.0
        return
    q1 = x1 / m
    q2 = x2 / m
    q3 = x3 / m
    q4 = x4 / m
    h = _sqrt(q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4)
    r[0] = m * h
    u1[0] = q1 / h
    u2[0] = q2 / h
    u3[0] = q3 / h
    u4[0] = q4 / h


cdef inline void _quotient3_fast(real x1, real x2, real x3,
                                 real* r, real* u1, real* u2, real* u3) noexcept nogil:
    cdef real qa, qb, h, t
    if _abs(x1) > _abs(x2):
        if _abs(x3) > _abs(x1):
            qa = x1 / x3
            qb = x2 / x3
            h = _sqrt((<real>1.0) + qa * qa + qb * qb)
            t = _sign1(x3) / h
            r[0] = _abs(x3) * h
            u1[0] = qa * t
            u2[0] = qb * t
            u3[0] = t
        else:
            qa = x3 / x1
            qb = x2 / x1
            h = _sqrt((<real>1.0) + qa * qa + qb * qb)
            t = _sign1(x1) / h
            r[0] = _abs(x1) * h
            u1[0] = t
            u2[0] = qb * t
            u3[0] = qa * t
    else:
        if _abs(x3) >= _abs(x2):
            # reached with x2, x3 real zeros; a NaN x1 must fall through
            if x3 == <real>0.0 and not isnan(x1):
                r[0] = <real>0.0
                u1[0] = <real>0.0
                u2[0] = <real>0.0
                u3[0] = <real>0.0
                return
            qa = x1 / x3
            qb = x2 / x3
            h = _sqrt((<real>1.0) + qa * qa + qb * qb)
            t = _sign1(x3) / h
            r[0] = _abs(x3) * h
            u1[0] = qa * t
            u2[0] = qb * t
            u3[0] = t
        else:
            qa = x1 / x2
            qb = x3 / x2
            h = _sqrt((<real>1.0) + qa * qa + qb * qb)
            t = _sign1(x2) / h
            r[0] = _abs(x2) * h
            u1[0] = qa * t
            u2[0] = t
            u3[0] = qb * t


# ---------------------------------------------------------------------------
# exported scalar kernels
# ---------------------------------------------------------------------------

def scale2_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2):
    cdef double inv, s1, s2
    _scale2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, &inv, &s1, &s2)
    return inv, s1, s2


def scale3_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2, double x3):
    cdef double inv, s1, s2, s3
    _scale3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3,
            &inv, &s1, &s2, &s3)
    return inv, s1, s2, s3


def scale4_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2, double x3, double x4):
    cdef double inv, s1, s2, s3, s4
    _scale4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3, x4,
            &inv, &s1, &s2, &s3, &s4)
    return inv, s1, s2, s3, s4


def normalize2_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max, double x1, double x2):
    cdef double r, u1, u2
    _normalize2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, &r, &u1, &u2)
    return r, u1, u2


def normalize3_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max, double x1, double x2, double x3):
    cdef double r, u1, u2, u3
    _normalize3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3,
                &r, &u1, &u2, &u3)
    return r, u1, u2, u3


def normalize4_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max,
                   double x1, double x2, double x3, double x4):
    cdef double r, u1, u2, u3, u4
    _normalize4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3, x4,
                &r, &u1, &u2, &u3, &u4)
    return r, u1, u2, u3, u4


def norm2_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2):
    return _norm2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2)


def norm3_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2, double x3):
    return _norm3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3)


def norm4_f64(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2, double x3, double x4):
    return _norm4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max, x1, x2, x3, x4)


def naive2_f64(double x1, double x2):
    cdef double r, u1, u2
    _naive2(x1, x2, &r, &u1, &u2)
    return r, u1, u2


def naive3_f64(double x1, double x2, double x3):
    cdef double r, u1, u2, u3
    _naive3(x1, x2, x3, &r, &u1, &u2, &u3)
    return r, u1, u2, u3


def naive4_f64(double x1, double x2, double x3, double x4):
    cdef double r, u1, u2, u3, u4
    _naive4(x1, x2, x3, x4, &r, &u1, &u2, &u3, &u4)
    return r, u1, u2, u3, u4


def quotient2_f64(double x1, double x2):
    cdef double r, u1, u2
    _quotient2(x1, x2, &r, &u1, &u2)
    return r, u1, u2


def quotient3_f64(double x1, double x2, double x3):
    cdef double r, u1, u2, u3
    _quotient3(x1, x2, x3, &r, &u1, &u2, &u3)
    return r, u1, u2, u3


def quotient4_f64(double x1, double x2, double x3, double x4):
    cdef double r, u1, u2, u3, u4
    _quotient4(x1, x2, x3, x4, &r, &u1, &u2, &u3, &u4)
    return r, u1, u2, u3, u4


def quotient3_fast_f64(double x1, double x2, double x3):
    cdef double r, u1, u2, u3
    _quotient3_fast(x1, x2, x3, &r, &u1, &u2, &u3)
    return r, u1, u2, u3


def scale2_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2):
    cdef float inv, s1, s2
    _scale2(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
            <float>inv_min, <float>inv_max, <float>x1, <float>x2, &inv, &s1, &s2)
    return <double>inv, <double>s1, <double>s2


def scale3_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2, double x3):
    cdef float inv, s1, s2, s3
    _scale3(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
            <float>inv_min, <float>inv_max, <float>x1, <float>x2, <float>x3,
            &inv, &s1, &s2, &s3)
    return <double>inv, <double>s1, <double>s2, <double>s3


def scale4_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
               double inv_min, double inv_max, double x1, double x2, double x3, double x4):
    cdef float inv, s1, s2, s3, s4
    _scale4(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
            <float>inv_min, <float>inv_max, <float>x1, <float>x2, <float>x3, <float>x4,
            &inv, &s1, &s2, &s3, &s4)
    return <double>inv, <double>s1, <double>s2, <double>s3, <double>s4


def normalize2_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max, double x1, double x2):
    cdef float r, u1, u2
    _normalize2(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                <float>inv_min, <float>inv_max, <float>x1, <float>x2, &r, &u1, &u2)
    return <double>r, <double>u1, <double>u2


def normalize3_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max, double x1, double x2, double x3):
    cdef float r, u1, u2, u3
    _normalize3(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                <float>inv_min, <float>inv_max, <float>x1, <float>x2, <float>x3,
                &r, &u1, &u2, &u3)
    return <double>r, <double>u1, <double>u2, <double>u3


def normalize4_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
                   double inv_min, double inv_max,
                   double x1, double x2, double x3, double x4):
    cdef float r, u1, u2, u3, u4
    _normalize4(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                <float>inv_min, <float>inv_max, <float>x1, <float>x2, <float>x3, <float>x4,
                &r, &u1, &u2, &u3, &u4)
    return <double>r, <double>u1, <double>u2, <double>u3, <double>u4


def norm2_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2):
    return <double>_norm2(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                          <float>inv_min, <float>inv_max, <float>x1, <float>x2)


def norm3_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2, double x3):
    return <double>_norm3(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                          <float>inv_min, <float>inv_max, <float>x1, <float>x2, <float>x3)


def norm4_f32(double tau_min, double tau_max, double sigma_min, double sigma_max,
              double inv_min, double inv_max, double x1, double x2, double x3, double x4):
    return <double>_norm4(<float>tau_min, <float>tau_max, <float>sigma_min, <float>sigma_max,
                          <float>inv_min, <float>inv_max,
                          <float>x1, <float>x2, <float>x3, <float>x4)


def naive2_f32(double x1, double x2):
    cdef float r, u1, u2
    _naive2(<float>x1, <float>x2, &r, &u1, &u2)
    return <double>r, <double>u1, <double>u2


def naive3_f32(double x1, double x2, double x3):
    cdef float r, u1, u2, u3
    _naive3(<float>x1, <float>x2, <float>x3, &r, &u1, &u2, &u3)
    return <double>r, <double>u1, <double>u2, <double>u3


def naive4_f32(double x1, double x2, double x3, double x4):
    cdef float r, u1, u2, u3, u4
    _naive4(<float>x1, <float>x2, <float>x3, <float>x4, &r, &u1, &u2, &u3, &u4)
    return <double>r, <double>u1, <double>u2, <double>u3, <double>u4


def quotient2_f32(double x1, double x2):
    cdef float r, u1, u2
    _quotient2(<float>x1, <float>x2, &r, &u1, &u2)
    return <double>r, <double>u1, <double>u2


def quotient3_f32(double x1, double x2, double x3):
    cdef float r, u1, u2, u3
    _quotient3(<float>x1, <float>x2, <float>x3, &r, &u1, &u2, &u3)
    return <double>r, <double>u1, <double>u2, <double>u3


def quotient4_f32(double x1, double x2, double x3, double x4):
    cdef float r, u1, u2, u3, u4
    _quotient4(<float>x1, <float>x2, <float>x3, <float>x4, &r, &u1, &u2, &u3, &u4)
    return <double>r, <double>u1, <double>u2, <double>u3, <double>u4


def quotient3_fast_f32(double x1, double x2, double x3):
    cdef float r, u1, u2, u3
    _quotient3_fast(<float>x1, <float>x2, <float>x3, &r, &u1, &u2, &u3)
    return <double>r, <double>u1, <double>u2, <double>u3


# ---------------------------------------------------------------------------
# timing loops (benchmark protocol bodies)
#
# Each loop executes `iters` calls cycling through a flat, component-
# contiguous buffer of mask+1 vectors (mask+1 a power of two) and feeds every
# output into a live accumulator so the optimizer cannot elide the calls.
# The empty loops traverse and accumulate identically, without the call.
# ---------------------------------------------------------------------------

cdef double _loop_scaling2(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                           real tau_min, real tau_max, real sigma_min, real sigma_max,
                           real inv_min, real inv_max) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 2
        _normalize2(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max,
                    buf[j], buf[j + 1], &r, &u1, &u2)
        acc += <double>r + <double>u1 + <double>u2
    return acc


cdef double _loop_scaling3(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                           real tau_min, real tau_max, real sigma_min, real sigma_max,
                           real inv_min, real inv_max) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 3
        _normalize3(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max,
                    buf[j], buf[j + 1], buf[j + 2], &r, &u1, &u2, &u3)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3
    return acc


cdef double _loop_scaling4(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                           real tau_min, real tau_max, real sigma_min, real sigma_max,
                           real inv_min, real inv_max) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3, u4
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 4
        _normalize4(tau_min, tau_max, sigma_min, sigma_max, inv_min, inv_max,
                    buf[j], buf[j + 1], buf[j + 2], buf[j + 3], &r, &u1, &u2, &u3, &u4)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3 + <double>u4
    return acc


cdef double _loop_quotient2(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 2
        _quotient2(buf[j], buf[j + 1], &r, &u1, &u2)
        acc += <double>r + <double>u1 + <double>u2
    return acc


cdef double _loop_quotient3(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 3
        _quotient3(buf[j], buf[j + 1], buf[j + 2], &r, &u1, &u2, &u3)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3
    return acc


cdef double _loop_quotient4(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3, u4
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 4
        _quotient4(buf[j], buf[j + 1], buf[j + 2], buf[j + 3], &r, &u1, &u2, &u3, &u4)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3 + <double>u4
    return acc


cdef double _loop_quotient_fast3(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 3
        _quotient3_fast(buf[j], buf[j + 1], buf[j + 2], &r, &u1, &u2, &u3)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3
    return acc


cdef double _loop_naive2(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 2
        _naive2(buf[j], buf[j + 1], &r, &u1, &u2)
        acc += <double>r + <double>u1 + <double>u2
    return acc


cdef double _loop_naive3(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 3
        _naive3(buf[j], buf[j + 1], buf[j + 2], &r, &u1, &u2, &u3)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3
    return acc


cdef double _loop_naive4(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef real r, u1, u2, u3, u4
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 4
        _naive4(buf[j], buf[j + 1], buf[j + 2], buf[j + 3], &r, &u1, &u2, &u3, &u4)
        acc += <double>r + <double>u1 + <double>u2 + <double>u3 + <double>u4
    return acc


cdef double _loop_empty2(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 2
        acc += <double>buf[j] + <double>buf[j + 1]
    return acc


cdef double _loop_empty3(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 3
        acc += <double>buf[j] + <double>buf[j + 1] + <double>buf[j + 2]
    return acc


cdef double _loop_empty4(const real[::1] buf, Py_ssize_t iters, Py_ssize_t mask) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(iters):
        j = (i & mask) * 4
        acc += <double>buf[j] + <double>buf[j + 1] + <double>buf[j + 2] + <double>buf[j + 3]
    return acc


def loop_scaling2_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling2(buf, iters, mask, p0, p1, p2, p3, p4, p5)
    return acc


def loop_scaling3_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling3(buf, iters, mask, p0, p1, p2, p3, p4, p5)
    return acc


def loop_scaling4_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling4(buf, iters, mask, p0, p1, p2, p3, p4, p5)
    return acc


def loop_scaling2_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling2(buf, iters, mask, <float>p0, <float>p1, <float>p2,
                             <float>p3, <float>p4, <float>p5)
    return acc


def loop_scaling3_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling3(buf, iters, mask, <float>p0, <float>p1, <float>p2,
                             <float>p3, <float>p4, <float>p5)
    return acc


def loop_scaling4_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                      double p0, double p1, double p2, double p3, double p4, double p5):
    cdef double acc
    with nogil:
        acc = _loop_scaling4(buf, iters, mask, <float>p0, <float>p1, <float>p2,
                             <float>p3, <float>p4, <float>p5)
    return acc


def loop_quotient2_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient2(buf, iters, mask)
    return acc


def loop_quotient3_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient3(buf, iters, mask)
    return acc


def loop_quotient4_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient4(buf, iters, mask)
    return acc


def loop_quotient2_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient2(buf, iters, mask)
    return acc


def loop_quotient3_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient3(buf, iters, mask)
    return acc


def loop_quotient4_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                       double p0=0.0, double p1=0.0, double p2=0.0,
                       double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient4(buf, iters, mask)
    return acc


def loop_quotient_fast3_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                            double p0=0.0, double p1=0.0, double p2=0.0,
                            double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient_fast3(buf, iters, mask)
    return acc


def loop_quotient_fast3_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                            double p0=0.0, double p1=0.0, double p2=0.0,
                            double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_quotient_fast3(buf, iters, mask)
    return acc


def loop_naive2_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive2(buf, iters, mask)
    return acc


def loop_naive3_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive3(buf, iters, mask)
    return acc


def loop_naive4_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive4(buf, iters, mask)
    return acc


def loop_naive2_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive2(buf, iters, mask)
    return acc


def loop_naive3_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive3(buf, iters, mask)
    return acc


def loop_naive4_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask,
                    double p0=0.0, double p1=0.0, double p2=0.0,
                    double p3=0.0, double p4=0.0, double p5=0.0):
    cdef double acc
    with nogil:
        acc = _loop_naive4(buf, iters, mask)
    return acc


def loop_empty2_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty2(buf, iters, mask)
    return acc


def loop_empty3_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty3(buf, iters, mask)
    return acc


def loop_empty4_f64(const double[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty4(buf, iters, mask)
    return acc


def loop_empty2_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty2(buf, iters, mask)
    return acc


def loop_empty3_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty3(buf, iters, mask)
    return acc


def loop_empty4_f32(const float[::1] buf, Py_ssize_t iters, Py_ssize_t mask):
    cdef double acc
    with nogil:
        acc = _loop_empty4(buf, iters, mask)
    return acc

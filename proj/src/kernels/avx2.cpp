// AVX2/FMA variants. The sin/cos pair uses Cody-Waite range reduction with a
// three-part pi/2 and fdlibm minimax kernels on [-pi/4, pi/4]; accurate to a
// few ulp for |x| up to ~1e6 (the dispatcher guards the range).
#if defined(GREENCUT_HAVE_AVX2)

#include <immintrin.h>

#include "greencut/kernels.hpp"

namespace greencut::kernels {

namespace {

// fdlibm kernel coefficients
constexpr double S1 = -1.66666666666666324348e-01;
constexpr double S2 = 8.33333333332248946124e-03;
constexpr double S3 = -1.98412698298579493134e-04;
constexpr double S4 = 2.75573137070700676789e-06;
constexpr double S5 = -2.50507602534068634195e-08;
constexpr double S6 = 1.58969099521155010221e-10;
constexpr double C1 = 4.16666666666666019037e-02;
constexpr double C2 = -1.38888888888741095749e-03;
constexpr double C3 = 2.48015872894767294178e-05;
constexpr double C4 = -2.75573143513906633035e-07;
constexpr double C5 = 2.08757232129817482790e-09;
constexpr double C6 = -1.13596475577881948265e-11;

constexpr double TWO_OVER_PI = 6.36619772367581382433e-01;
constexpr double PIO2_1 = 1.57079632673412561417e+00;  // first 33 bits of pi/2
constexpr double PIO2_2 = 6.07710050630396597660e-11;  // next 33 bits
constexpr double PIO2_3 = 2.02226624871116645580e-21;  // next 33 bits

inline void sincos4(__m256d x, __m256d& s_out, __m256d& c_out) {
    const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(TWO_OVER_PI)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(PIO2_1), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(PIO2_2), r);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(PIO2_3), r);

    const __m256d r2 = _mm256_mul_pd(r, r);
    // sin kernel: r + r^3 (S1 + r^2 (...))
    __m256d ps = _mm256_set1_pd(S6);
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(S5));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(S4));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(S3));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(S2));
    ps = _mm256_fmadd_pd(ps, r2, _mm256_set1_pd(S1));
    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, r2), r, r);
    // cos kernel: 1 - r^2/2 + r^4 (C1 + r^2 (...))
    __m256d pc = _mm256_set1_pd(C6);
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(C5));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(C4));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(C3));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(C2));
    pc = _mm256_fmadd_pd(pc, r2, _mm256_set1_pd(C1));
    __m256d cos_r = _mm256_fmadd_pd(pc, _mm256_mul_pd(r2, r2),
                                    _mm256_fnmadd_pd(r2, _mm256_set1_pd(0.5),
                                                     _mm256_set1_pd(1.0)));

    // quadrant select: q = k mod 4
    const __m128i ki = _mm256_cvtpd_epi32(k);
    const __m128i q128 = _mm_and_si128(ki, _mm_set1_epi32(3));
    const __m256i q = _mm256_cvtepi32_epi64(q128);
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q, _mm256_set1_epi64x(1)),
                           _mm256_set1_epi64x(1)));
    const __m256d flip2 = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q, _mm256_set1_epi64x(2)),
                           _mm256_set1_epi64x(2)));
    // q odd: sin<->cos swap; q in {2,3}: sign flip of sin; cos flips for q in {1,2}
    __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
    __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
    const __m256d neg = _mm256_set1_pd(-0.0);
    s = _mm256_xor_pd(s, _mm256_and_pd(flip2, neg));
    const __m256d cflip = _mm256_xor_pd(swap, flip2);  // q in {1,2}
    c = _mm256_xor_pd(c, _mm256_and_pd(cflip, neg));
    s_out = s;
    c_out = c;
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

SecularSums secular_sums_avx2(std::span<const double> c, std::span<const double> w,
                              double x) {
    const size_t n = c.size();
    __m256d acc1 = _mm256_setzero_pd(), acc2 = _mm256_setzero_pd();
    const __m256d xv = _mm256_set1_pd(x);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d wv = _mm256_loadu_pd(w.data() + i);
        const __m256d cv = _mm256_loadu_pd(c.data() + i);
        const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), _mm256_sub_pd(xv, wv));
        const __m256d t = _mm256_mul_pd(cv, inv);
        acc1 = _mm256_add_pd(acc1, t);
        acc2 = _mm256_fmadd_pd(t, inv, acc2);
    }
    double s1 = hsum(acc1), s2 = hsum(acc2);
    for (; i < n; ++i) {
        const double inv = 1.0 / (x - w[i]);
        const double t = c[i] * inv;
        s1 += t;
        s2 += t * inv;
    }
    return {s1, s2};
}

std::complex<double> phasor_sum_avx2(std::span<const double> a,
                                     std::span<const double> e, double t) {
    const size_t n = a.size();
    __m256d acc_re = _mm256_setzero_pd(), acc_im = _mm256_setzero_pd();
    const __m256d tv = _mm256_set1_pd(t);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ev = _mm256_loadu_pd(e.data() + i);
        const __m256d av = _mm256_loadu_pd(a.data() + i);
        __m256d s, c;
        sincos4(_mm256_mul_pd(ev, tv), s, c);
        acc_re = _mm256_fmadd_pd(av, c, acc_re);
        acc_im = _mm256_fnmadd_pd(av, s, acc_im);
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ph = e[i] * t;
        re += a[i] * std::cos(ph);
        im -= a[i] * std::sin(ph);
    }
    return {re, im};
}

}  // namespace greencut::kernels

#endif  // GREENCUT_HAVE_AVX2

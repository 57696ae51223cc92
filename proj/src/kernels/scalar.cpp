#include <cmath>

#include "greencut/kernels.hpp"

namespace greencut::kernels {

SecularSums secular_sums_scalar(std::span<const double> c, std::span<const double> w,
                                double x) {
    double s1 = 0.0, s2 = 0.0;
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
        const double inv = 1.0 / (x - w[i]);
        const double t = c[i] * inv;
        s1 += t;
        s2 += t * inv;
    }
    return {s1, s2};
}

std::complex<double> phasor_sum_scalar(std::span<const double> a,
                                       std::span<const double> e, double t) {
    double re = 0.0, im = 0.0;
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        const double ph = e[i] * t;
        re += a[i] * std::cos(ph);
        im -= a[i] * std::sin(ph);
    }
    return {re, im};
}

}  // namespace greencut::kernels

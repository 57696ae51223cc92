// kernels.hpp — data-parallel inner loops with scalar reference versions and
// SIMD variants selected at runtime. The scalar path is the definition; the
// SIMD paths must match it within a few ulp (equivalence-tested).
#pragma once

#include <complex>
#include <span>

namespace greencut::kernels {

struct SecularSums {
    double s1;  // sum c_k / (x - w_k)
    double s2;  // sum c_k / (x - w_k)^2
};

// Secular-equation sums for the arrowhead eigensolver.
SecularSums secular_sums(std::span<const double> c, std::span<const double> w, double x);

// sum_k a_k e^{-i e_k t}. Arguments |e_k * t| above ~1e6 fall back to the
// scalar path (range reduction limit of the vector sin/cos).
std::complex<double> phasor_sum(std::span<const double> a, std::span<const double> e,
                                double t);

// "avx2" or "scalar"; decided once per process from cpuid and the
// GREENCUT_SIMD environment variable (set to "scalar" to disable SIMD).
const char* active_backend();

// Test hook: force a specific backend ("scalar", "avx2"). Returns false if
// the backend is unavailable on this machine.
bool force_backend(const char* name);

// Scalar reference implementations (always available; used by the
// equivalence tests as the ground truth).
SecularSums secular_sums_scalar(std::span<const double> c, std::span<const double> w,
                                double x);
std::complex<double> phasor_sum_scalar(std::span<const double> a,
                                       std::span<const double> e, double t);

#if defined(GREENCUT_HAVE_AVX2)
SecularSums secular_sums_avx2(std::span<const double> c, std::span<const double> w,
                              double x);
std::complex<double> phasor_sum_avx2(std::span<const double> a,
                                     std::span<const double> e, double t);
#endif

}  // namespace greencut::kernels

// quadrature.hpp — small numeric toolkit: Gauss-Legendre rules, adaptive
// integration, tanh-sinh (double-exponential) endpoint handling, Legendre
// expansion helpers and spherical Bessel moments for Filon panels.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace greencut::quad {

struct Rule {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;
};

// Cached Gauss-Legendre rule of order n (nodes by Newton on P_n).
const Rule& gauss_legendre(int n);

// P_0..P_nmax at x, filled into vals (size nmax+1).
void legendre_values(double x, int nmax, std::span<double> vals);

// Spherical Bessel j_0..j_nmax at x >= 0 via downward recurrence; stable for
// the panel phases used here (x up to ~1e3).
void sph_bessel_array(double x, int nmax, std::span<double> out);

template <typename F>
auto gl_integrate(F&& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    using R = decltype(f(m));
    R s{};
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(m + h * r.x[i]);
    return s * h;
}

struct AdaptiveResult {
    std::complex<double> value;
    double error = 0.0;
    bool converged = true;
    int evaluations = 0;
};

// Recursive bisection with a GL15/GL25 error estimate. Never throws; the
// caller decides what a failed tolerance means.
AdaptiveResult adaptive_integrate(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double abs_tol,
                                  int max_intervals = 2000);

// Tanh-sinh quadrature on [a,b]; absorbs integrable endpoint singularities
// (powers, logs). Level-doubling trapezoid in the transformed variable.
AdaptiveResult tanh_sinh(const std::function<std::complex<double>(double)>& f,
                         double a, double b, double abs_tol, int max_level = 10);

// One Filon panel: int_a^b f(E) e^{-iEt} dE with f interpolated by a degree
// n-1 Legendre expansion fitted at GL nodes. err_out receives a coefficient
// tail estimate.
std::complex<double> filon_panel(const std::function<double(double)>& f, double a,
                                 double b, double t, int n, double* err_out = nullptr);

// Same panel for complex-valued smooth factors.
std::complex<double> filon_panel_c(const std::function<std::complex<double>(double)>& f,
                                   double a, double b, double t, int n,
                                   double* err_out = nullptr);

}  // namespace greencut::quad

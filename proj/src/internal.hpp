// internal.hpp — shared machinery private to the library: the tabulated-data
// spline, the principal-value transform and its cached interpolant, and the
// adaptive Cauchy integral for quadrature-defined models.
#pragma once

#include <vector>

#include "greencut/band_model.hpp"

namespace greencut::detail {

// Steffen (1990) shape-preserving cubic: local, C1, no overshoot.
class SteffenSpline {
public:
    explicit SteffenSpline(const std::vector<std::pair<double, double>>& pts);
    double eval(double x) const;
    double integral() const;  // over the full sample range

private:
    std::vector<double> x_, y_, c1_, c2_, c3_;  // per-segment cubic coefficients
};

// Piecewise-Chebyshev interpolant of the PV transform Sigma'(E) on the open
// band, with panels refined geometrically toward the edges. Built once per
// PowerEdge/Tabulated model; closed-form models never need it.
class SigmaPrimeTable {
public:
    static std::shared_ptr<const SigmaPrimeTable> build(const BandModel& model);
    double eval(double E) const;

private:
    std::vector<double> breaks_;             // panel boundaries, ascending
    std::vector<std::vector<double>> coef_;  // Chebyshev coefficients per panel
};

// Direct PV integral over the band,
//   Sigma'(E) = int (Delta(E') - Delta(E))/(E - E') dE'
//             + Delta(E) log((E - E_b)/(E_t - E)),
// with tanh-sinh panels absorbing the (E'-E_b)^beta edge behavior.
double pv_sigma_prime(const BandModel& model, double E);

// Sigma'(E) through the fastest valid path (closed form or cached table).
double sigma_prime_fast(const BandModel& model, double E);

// Adaptive Cauchy integral int Delta(E)/(w-E) dE for w off the cut (or real
// outside the band); used by quadrature-defined models.
Complex sigma_cauchy(const BandModel& model, Complex w, double abs_tol = 1e-12);

// d/dw of the Cauchy integral: -int Delta(E)/(w-E)^2 dE.
Complex sigma_cauchy_derivative(const BandModel& model, Complex w, double abs_tol = 1e-12);

// Closed-form Sigma on sheet 0/1 without the branch-point guard; the
// deformed-contour integrals run arbitrarily close to the band edges where
// the closed forms stay finite and integrable. Semicircle/FlatBand only.
Complex sigma_closed_unguarded(const BandModel& model, Complex w, int sheet);

}  // namespace greencut::detail

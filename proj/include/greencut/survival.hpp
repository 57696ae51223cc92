// survival.hpp — g(t), p(t) = |g|^2, spectral density, FGR approximation,
// the deformed-contour (resonance) expansion, and long-time tail fits.
#pragma once

#include <vector>

#include "greencut/pole_finder.hpp"

namespace greencut {

enum class Method { CutIntegral, ResonanceExpansion, Oracle, FGR };

const char* method_name(Method m);

struct SurvivalSeries {
    std::vector<double> times;   // increasing, t >= 0
    std::vector<Complex> g;      // amplitude
    std::vector<double> p;       // |g|^2
    Method method = Method::CutIntegral;
    bool horizon_warning = false;  // Oracle series beyond the recurrence horizon
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 4000;
    int oscillation_splitting = 6;  // panels per period of e^{-iEt}, >= 4

    void validate() const;
};

// Branch-cut integral
//   I_cut(t) = int_band Delta(E) e^{-iEt} dE / ([E-eps-Sigma'(E)]^2 + pi^2 Delta^2)
// evaluated with Filon panels sized to the oscillation and tanh-sinh edge
// panels. Throws AccuracyError (carrying the estimate) when the tolerance
// cannot be met.
Complex cut_integral(const BandModel& model, double eps, double t,
                     const QuadratureConfig& cfg = {});

// g(t) = I_cut(t) + sum of bound-state residues w_j e^{-iE_j t}.
SurvivalSeries survival_amplitude(const BandModel& model, double eps,
                                  const std::vector<double>& times,
                                  const QuadratureConfig& cfg = {});

// Fermi golden rule: p = e^{-t/tau}, 1/tau = 2*pi*Delta(eps).
SurvivalSeries fgr_series(const BandModel& model, double eps,
                          const std::vector<double>& times);
double fgr_tau(const BandModel& model, double eps);

// Deformed-contour evaluation: bound-state and lower-half-strip resonance
// residues plus two vertical-line integrals descending from the band edges.
// Requires a model with closed-form continuation (Semicircle, FlatBand).
SurvivalSeries resonance_expansion(const BandModel& model, double eps,
                                   const std::vector<double>& times,
                                   const QuadratureConfig& cfg = {});

// Continuous part of the spectral density,
//   A(w) = Delta(w) / ([w-eps-Sigma'(w)]^2 + pi^2 Delta^2(w)),
// zero outside the band. Bound states enter as discrete (energy, weight)
// pairs from spectral_deltas.
double spectral_density(const BandModel& model, double eps, double w);
std::vector<std::pair<double, double>> spectral_deltas(const BandModel& model, double eps);

// Least-squares slope of log(envelope of |g|) vs log t over [t_lo, t_hi].
// The envelope interpolates local maxima of |g|; returns alpha > 0 with
// envelope ~ t^{-alpha}. The series must contain the cut contribution only
// (subtract poles first). Throws InsufficientDataError below 5 maxima.
double tail_exponent(const SurvivalSeries& series, double t_lo, double t_hi);

// Dominant oscillation frequency of p(t) over [t_lo, t_hi]: Hann-windowed
// discrete spectrum on a fine grid, quadratic peak interpolation.
double dominant_frequency(const SurvivalSeries& series, double t_lo, double t_hi);

// Last grid time with |p - e^{-t/tau}|/e^{-t/tau} <= rel_threshold. The FGR
// regime is reported absent when this falls below tau.
double fgr_valid_window(const SurvivalSeries& series, double tau,
                        double rel_threshold = 0.25);

// Uniform grid helper: n points over [0, t_max] (t=0 included).
std::vector<double> uniform_times(double t_max, int n);

}  // namespace greencut

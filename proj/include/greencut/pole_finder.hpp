// pole_finder.hpp — poles of g(w) = 1/(w - eps - Sigma(w)) across sheets:
// bound states, resonances, closed-form roots for the semicircle model,
// residue weights, and the bound-state onset measurement.
#pragma once

#include <optional>
#include <vector>

#include "greencut/self_energy.hpp"

namespace greencut {

struct Pole {
    Complex energy;
    int sheet = 0;
    int order = 1;
    std::optional<Complex> weight;  // 1/(1 - dSigma/dw); unset for order 2
};

// All real solutions of w = eps + Sigma_standard(w) outside the band, found
// by bisection on each side (the defining function is strictly monotone
// there). Weights are filled in. Empty result is valid.
std::vector<Pole> real_poles_standard_sheet(const BandModel& model, double eps);

// Roots of the quadratic satisfied by the semicircle-model poles. Sheet
// membership is NOT asserted here; classify_quadratic_roots does that by
// substitution. delta0 == 1/2 degenerates to a linear equation whose single
// root is reported through the flag.
struct QuadraticRoots {
    Complex w1, w2;
    bool degenerate = false;           // delta0 == 1/2
    bool double_root = false;          // zero discriminant
    std::optional<double> linear_root; // set when degenerate
};
QuadraticRoots semicircle_pole_closed_form(double delta0, double eps);

// Substitutes each closed-form root into w - eps - Sigma_sheet(w) on sheets
// 0 and 1 (tolerance 1e-9) and returns the roots that land on a sheet.
std::vector<Pole> classify_quadratic_roots(double delta0, double eps);

// Newton search on the requested sheet, seeded at the FGR estimate
// eps + Sigma'(eps) - i*pi*Delta(eps) and at a coarse grid over the lower
// half strip. Results deduplicated to 1e-9 and sorted by (sheet, Re, Im).
std::vector<Pole> resonance_poles(const BandModel& model, double eps, int sheet);

// Residue weight 1/(1 - dSigma/dw) at the pole. Order-2 poles are rejected.
Complex pole_weight(const BandModel& model, const Pole& pole);

// Smallest strength for which a standard-sheet pole exists beyond the given
// band edge (+1 = above band_top, -1 = below band_bottom). Used by the
// threshold audit; bisects on the pole-existence predicate.
double bound_state_onset(BandKind kind, double eps, int side);

}  // namespace greencut

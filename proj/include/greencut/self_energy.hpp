// self_energy.hpp — Sigma(w) on the standard sheet, on adjacent sheets, and
// on both sides of the branch cut, plus its w-derivative.
//
// Branch conventions (fixed once, everything else is relative to them):
//  * Semicircle: sqrt(w^2-1) has phase pi/2 just above the cut (-1,1) and
//    behaves like +w at infinity. Sheet 1 flips the sign of the root.
//  * FlatBand: log((w+1)/(w-1)) has phase -pi just above the cut. Sheet s
//    subtracts 2*pi*i*s*Delta0, so sheet +1 is the continuation reached by
//    crossing the cut downward from the standard sheet.
#pragma once

#include "greencut/band_model.hpp"

namespace greencut {

enum class CutSide { Above, Below, None };

struct SheetPoint {
    Complex w;
    int sheet = 0;  // 0 = standard determination (decays like M1/w at infinity)
};

struct SelfEnergySample {
    Complex value;
    Complex derivative;
    SheetPoint point;
};

struct CutValues {
    double sigma_prime;        // Sigma', continuous across the cut
    double sigma_dprime_above; // Sigma''(E+i0) = -pi*Delta(E)
    double sigma_dprime_below; // Sigma''(E-i0) = +pi*Delta(E)
};

// Guard radius around the band edges; inside it operations raise
// BranchPointError instead of returning garbage.
inline constexpr double kBranchGuard = 1e-9;

// sqrt(w^2-1) on the standard sheet (cut on [-1,1] only, ~w at infinity).
Complex sqrt_band(Complex w);
// sqrt(1-w^2) with cuts (-inf,-1] and [1,inf), positive on (-1,1).
Complex sqrt_one_minus_sq(Complex w);

// Sigma on the standard sheet. For real w strictly inside the band a side
// hint selects the boundary value Sigma(E +- i0).
Complex sigma_standard(const BandModel& model, Complex w, CutSide side = CutSide::None);

// Boundary data on the cut at real E inside the band.
CutValues sigma_cut_values(const BandModel& model, double E);

// Sigma on the requested sheet. Semicircle: sheet in {0,1}. FlatBand: any
// integer. PowerEdge: {-1,0,1} via the jump identity
// Sigma_s = Sigma_0 - 2*pi*i*s*Delta~(w). Tabulated: sheet 0 only.
Complex sigma_on_sheet(const BandModel& model, const SheetPoint& p);

// dSigma/dw on the given sheet; closed forms where available, otherwise
// differentiated quadrature.
Complex sigma_derivative(const BandModel& model, const SheetPoint& p);

SelfEnergySample sample_self_energy(const BandModel& model, const SheetPoint& p);

}  // namespace greencut

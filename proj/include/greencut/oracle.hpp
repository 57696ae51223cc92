// oracle.hpp — brute-force ground truth: finite discretizations of the
// level-plus-band Hamiltonian diagonalized exactly, independent of all the
// complex-analysis machinery.
#pragma once

#include <utility>
#include <vector>

#include "greencut/survival.hpp"

namespace greencut {

enum class DiscreteScheme { ChainOfSites, UniformLevels };

struct DiscreteModel {
    double level_energy = 0.0;          // eps
    std::vector<double> band_levels;    // omega_k
    std::vector<double> couplings;      // V_k
    DiscreteScheme source = DiscreteScheme::UniformLevels;
    double band_bottom = -1.0, band_top = 1.0;

    int size() const { return static_cast<int>(band_levels.size()); }
    // Conservative revival estimate for the finite system.
    double recurrence_horizon() const {
        return size() * (band_top - band_bottom) / 4.0;
    }
};

// ChainOfSites realizes the site-plus-semi-infinite-lattice Hamiltonian in
// its k-basis: omega_k = -cos(k pi/(N+1)), V_k = -sqrt(2/(N+1)) V sin(...),
// Delta0 = 2 V^2 (Semicircle only). UniformLevels places omega_k at midpoints
// with V_k^2 = Delta(omega_k) h.
DiscreteModel build_discrete_model(const BandModel& model, double eps, int N,
                                   DiscreteScheme scheme);

// Eigen-decomposition of the arrowhead matrix diag(omega) bordered by the
// couplings and hub energy eps. Only the hub overlaps |<d|m>|^2 are kept.
struct ArrowheadEigen {
    std::vector<double> values;
    std::vector<double> hub_overlaps;
};
ArrowheadEigen arrowhead_eigen(double eps, const std::vector<double>& levels,
                               const std::vector<double>& couplings);

// g(t) = sum_m |<d|m>|^2 e^{-iE_m t} from one exact diagonalization. Series
// beyond the recurrence horizon carry a warning rather than an error.
SurvivalSeries evolve_survival(const DiscreteModel& dm, const std::vector<double>& times);

// Eigenvalues outside [E_b - delta, E_t + delta] (delta = 3 mean spacings),
// paired with the squared overlap onto the discrete level.
std::vector<std::pair<double, double>> discrete_bound_states(const DiscreteModel& dm);

// Discrete self-energy Sigma_N(w) = sum_k V_k^2/(w - omega_k).
Complex discrete_sigma(const DiscreteModel& dm, Complex w);

// Max |eigenvalue difference| between the k-basis arrowhead and the real-space
// tridiagonal chain construction (ChainOfSites only); the two are unitarily
// equivalent, so this measures solver agreement.
double chain_spectral_mismatch(const DiscreteModel& dm);

}  // namespace greencut

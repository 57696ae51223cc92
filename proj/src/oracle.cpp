#include "greencut/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "greencut/kernels.hpp"
#include "greencut/parallel.hpp"

namespace greencut {

DiscreteModel build_discrete_model(const BandModel& model, double eps, int N,
                                   DiscreteScheme scheme) {
    if (N < 16) throw DomainError("discretization needs N >= 16");
    DiscreteModel dm;
    dm.level_energy = eps;
    dm.source = scheme;
    dm.band_bottom = model.band_bottom;
    dm.band_top = model.band_top;
    dm.band_levels.reserve(N);
    dm.couplings.reserve(N);
    if (scheme == DiscreteScheme::ChainOfSites) {
        if (model.kind != BandKind::Semicircle)
            throw DomainError("chain discretization realizes the semicircle density only");
        const double V = std::sqrt(model.strength / 2.0);  // Delta0 = 2 V^2
        const double norm = std::sqrt(2.0 / (N + 1.0));
        for (int k = 1; k <= N; ++k) {
            const double th = k * M_PI / (N + 1.0);
            dm.band_levels.push_back(-std::cos(th));
            dm.couplings.push_back(-norm * V * std::sin(th));
        }
    } else {
        const double h = model.width() / N;
        for (int k = 1; k <= N; ++k) {
            const double w = model.band_bottom + (k - 0.5) * h;
            const double d = evaluate_delta(model, w);
            dm.band_levels.push_back(w);
            dm.couplings.push_back(std::sqrt(d * h));
        }
    }
    return dm;
}

ArrowheadEigen arrowhead_eigen(double eps, const std::vector<double>& levels,
                               const std::vector<double>& couplings) {
    // Keep only coupled levels; decoupled ones are orthogonal to the hub.
    std::vector<std::pair<double, double>> lv;  // (omega, c = V^2)
    lv.reserve(levels.size());
    for (size_t i = 0; i < levels.size(); ++i)
        if (couplings[i] != 0.0) lv.emplace_back(levels[i], couplings[i] * couplings[i]);
    std::sort(lv.begin(), lv.end());
    const int n = static_cast<int>(lv.size());
    std::vector<double> om(n), c(n);
    for (int i = 0; i < n; ++i) {
        om[i] = lv[i].first;
        c[i] = lv[i].second;
    }

    double csum = 0.0;
    for (double v : c) csum += v;

    auto secular = [&](double x) {
        return kernels::secular_sums(c, om, x);
    };
    // f(x) = x - eps - sum c/(x-om); strictly increasing between the poles.
    auto fval = [&](double x) { return x - eps - secular(x).s1; };

    // Bisection inside (a,b) where f runs from -inf to +inf.
    auto root_in = [&](double a, double b) {
        double lo = a, hi = b;
        // move strictly inside
        for (int it = 0; it < 220; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (fval(mid) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    ArrowheadEigen out;
    out.values.reserve(n + 1);
    // below the lowest level
    {
        double lo = om.front() - 1.0 - csum - std::abs(eps);
        while (fval(lo) >= 0.0) lo -= 1.0 + std::abs(lo);
        out.values.push_back(root_in(lo, om.front()));
    }
    for (int i = 0; i + 1 < n; ++i) out.values.push_back(root_in(om[i], om[i + 1]));
    {
        double hi = om.back() + 1.0 + csum + std::abs(eps);
        while (fval(hi) <= 0.0) hi += 1.0 + std::abs(hi);
        out.values.push_back(root_in(om.back(), hi));
    }
    out.hub_overlaps.resize(out.values.size());
    for (size_t i = 0; i < out.values.size(); ++i)
        out.hub_overlaps[i] = 1.0 / (1.0 + secular(out.values[i]).s2);
    return out;
}

SurvivalSeries evolve_survival(const DiscreteModel& dm, const std::vector<double>& times) {
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw DomainError("times must be nonnegative");
        if (i > 0 && times[i] < times[i - 1]) throw DomainError("times must be sorted");
    }
    const ArrowheadEigen eig =
        arrowhead_eigen(dm.level_energy, dm.band_levels, dm.couplings);
    SurvivalSeries s;
    s.method = Method::Oracle;
    s.times = times;
    s.g.resize(times.size());
    s.p.resize(times.size());
    const double horizon = dm.recurrence_horizon();
    s.horizon_warning = !times.empty() && times.back() > horizon;
    parallel_for(times.size(), [&](size_t i) {
        const Complex g = kernels::phasor_sum(eig.hub_overlaps, eig.values, times[i]);
        s.g[i] = g;
        s.p[i] = std::norm(g);
    });
    return s;
}

std::vector<std::pair<double, double>> discrete_bound_states(const DiscreteModel& dm) {
    const ArrowheadEigen eig =
        arrowhead_eigen(dm.level_energy, dm.band_levels, dm.couplings);
    const double spacing = (dm.band_top - dm.band_bottom) / dm.size();
    const double margin = 3.0 * spacing;
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i < eig.values.size(); ++i) {
        const double e = eig.values[i];
        if (e < dm.band_bottom - margin || e > dm.band_top + margin)
            out.emplace_back(e, eig.hub_overlaps[i]);
    }
    return out;
}

Complex discrete_sigma(const DiscreteModel& dm, Complex w) {
    Complex acc{};
    for (size_t i = 0; i < dm.band_levels.size(); ++i) {
        const double c = dm.couplings[i] * dm.couplings[i];
        acc += c / (w - dm.band_levels[i]);
    }
    return acc;
}

double chain_spectral_mismatch(const DiscreteModel& dm) {
    if (dm.source != DiscreteScheme::ChainOfSites)
        throw DomainError("spectral cross-check applies to the chain construction");
    const int N = dm.size();
    double v2 = 0.0;
    for (double v : dm.couplings) v2 += v * v;  // sum V_k^2 = V^2 exactly
    const double V = std::sqrt(v2);

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(N + 1);
    diag[0] = dm.level_energy;
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(N, -0.5);
    sub[0] = -V;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    const ArrowheadEigen eig =
        arrowhead_eigen(dm.level_energy, dm.band_levels, dm.couplings);
    double worst = 0.0;
    for (int i = 0; i <= N; ++i)
        worst = std::max(worst, std::abs(es.eigenvalues()[i] - eig.values[i]));
    return worst;
}

}  // namespace greencut

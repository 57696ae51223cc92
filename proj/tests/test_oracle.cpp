#include <doctest.h>

#include <cmath>
#include <numeric>

#include "greencut/oracle.hpp"

using namespace greencut;

TEST_CASE("chain construction realizes the semicircle coupling") {
    const BandModel semi = BandModel::semicircle(0.02);
    const DiscreteModel dm = build_discrete_model(semi, 0.0, 64, DiscreteScheme::ChainOfSites);
    // Delta0 = 2 V^2 -> V = 0.1; sum V_k^2 = V^2
    double v2 = 0.0;
    for (double v : dm.couplings) v2 += v * v;
    CHECK(std::sqrt(v2) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(dm.band_levels.front() ==
          doctest::Approx(-std::cos(M_PI / 65.0)).epsilon(1e-14));
    CHECK_THROWS_AS(
        build_discrete_model(BandModel::flat_band(0.2), 0.0, 64, DiscreteScheme::ChainOfSites),
        DomainError);
    CHECK_THROWS_AS(build_discrete_model(semi, 0.0, 8, DiscreteScheme::UniformLevels),
                    DomainError);
}

TEST_CASE("uniform discretization matches the density times the spacing") {
    const BandModel flat = BandModel::flat_band(0.2);
    const DiscreteModel dm =
        build_discrete_model(flat, 0.0, 1000, DiscreteScheme::UniformLevels);
    REQUIRE(dm.size() == 1000);
    for (int k = 0; k < 1000; k += 97)
        CHECK(dm.couplings[k] * dm.couplings[k] == doctest::Approx(4e-4).epsilon(1e-12));
}

TEST_CASE("discrete self-energy converges to the continuum transform") {
    const Complex w{1.0, 1.0};
    const BandModel flat = BandModel::flat_band(0.2);
    const Complex exact = 0.2 * std::log((w + 1.0) / (w - 1.0));
    const Complex e500 =
        discrete_sigma(build_discrete_model(flat, 0.0, 500, DiscreteScheme::UniformLevels), w) -
        exact;
    const Complex e1000 =
        discrete_sigma(build_discrete_model(flat, 0.0, 1000, DiscreteScheme::UniformLevels), w) -
        exact;
    CHECK(std::abs(e500) / std::abs(e1000) >= 2.0);  // midpoint rule: ~4x

    // the chain hits the closed form essentially exactly away from the axis
    const BandModel semi = BandModel::semicircle(0.02);
    const Complex chain =
        discrete_sigma(build_discrete_model(semi, 0.0, 500, DiscreteScheme::ChainOfSites), w);
    const Complex closed = 0.02 * (w - std::sqrt(w - 1.0) * std::sqrt(w + 1.0));
    CHECK(std::abs(chain - closed) < 1e-12);
}

TEST_CASE("arrowhead solver: unitarity and agreement with the tridiagonal route") {
    const BandModel semi = BandModel::semicircle(0.3);
    const DiscreteModel dm = build_discrete_model(semi, -0.4, 400, DiscreteScheme::ChainOfSites);
    const ArrowheadEigen eig = arrowhead_eigen(dm.level_energy, dm.band_levels, dm.couplings);
    REQUIRE(eig.values.size() == 401);
    const double total =
        std::accumulate(eig.hub_overlaps.begin(), eig.hub_overlaps.end(), 0.0);
    CHECK(std::abs(total - 1.0) < 1e-10);
    for (size_t i = 1; i < eig.values.size(); ++i) CHECK(eig.values[i] > eig.values[i - 1]);
    CHECK(chain_spectral_mismatch(dm) < 1e-10);
}

TEST_CASE("evolution starts at g=1 and conserves probability") {
    const BandModel flat = BandModel::flat_band(0.2);
    const DiscreteModel dm =
        build_discrete_model(flat, -0.4, 300, DiscreteScheme::UniformLevels);
    auto s = evolve_survival(dm, {0.0, 1.0, 5.0, 20.0});
    CHECK(std::abs(s.g[0] - 1.0) < 1e-12);
    for (double p : s.p) CHECK(p <= 1.0 + 1e-9);
    CHECK(!s.horizon_warning);
    auto s2 = evolve_survival(dm, {0.0, 400.0});  // beyond N*(Et-Eb)/4 = 150
    CHECK(s2.horizon_warning);
}

TEST_CASE("discrete bound states match the pole anchors") {
    // semicircle Delta0=1.2: outliers at +-1.0142 with overlap ~ 1/7
    {
        const BandModel m = BandModel::semicircle(1.2);
        const DiscreteModel dm = build_discrete_model(m, 0.0, 2000, DiscreteScheme::ChainOfSites);
        auto bs = discrete_bound_states(dm);
        REQUIRE(bs.size() == 2);
        CHECK(std::abs(bs[1].first - 1.01418510567422) < 5e-4);
        CHECK(std::abs(bs[1].second - 1.0 / 7.0) < 2e-3);
    }
    // flat Delta0=0.2: outliers at +-1.0127 with overlap ~ 0.060
    {
        const BandModel m = BandModel::flat_band(0.2);
        const DiscreteModel dm =
            build_discrete_model(m, 0.0, 2000, DiscreteScheme::UniformLevels);
        auto bs = discrete_bound_states(dm);
        REQUIRE(bs.size() == 2);
        CHECK(std::abs(bs[1].first - 1.01272561672732) < 5e-4);
        CHECK(std::abs(bs[1].second - 0.0601794688080834) < 2e-3);
    }
    // semicircle Delta0=0.6: no outliers (the real roots are not bound states)
    {
        const BandModel m = BandModel::semicircle(0.6);
        const DiscreteModel dm = build_discrete_model(m, 0.0, 2000, DiscreteScheme::ChainOfSites);
        CHECK(discrete_bound_states(dm).empty());
    }
}

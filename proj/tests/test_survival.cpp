#include <doctest.h>

#include <cmath>

#include "greencut/oracle.hpp"
#include "greencut/quadrature.hpp"
#include "greencut/survival.hpp"

using namespace greencut;

namespace {

// Brute-force cut integral: adaptive panels of F(E) e^{-iEt} with tanh-sinh
// edges. Independent of the Filon path under test.
Complex brute_cut(const BandModel& m, double eps, double t) {
    auto f = [&](double E) -> Complex {
        const double d = evaluate_delta(m, E);
        if (d <= 0.0) return {};
        const double x = E - eps - sigma_cut_values(m, E).sigma_prime;
        return d / (x * x + M_PI * M_PI * d * d) * std::exp(Complex(0.0, -E * t));
    };
    const double eb = m.band_bottom, et = m.band_top, w = et - eb;
    Complex acc = quad::tanh_sinh(f, eb, eb + w / 8, 1e-13).value +
                  quad::tanh_sinh(f, et - w / 8, et, 1e-13).value;
    acc += quad::adaptive_integrate(f, eb + w / 8, et - w / 8, 1e-13, 4000).value;
    return acc;
}

}  // namespace

TEST_CASE("filon cut integral matches a brute-force adaptive evaluation") {
    const QuadratureConfig cfg;
    for (const BandModel& m :
         {BandModel::semicircle(0.1), BandModel::flat_band(0.2),
          BandModel::power_edge(0.25, 2.0, 2.0)}) {
        for (double t : {0.0, 0.8, 4.0, 17.3, 31.0}) {
            const Complex a = cut_integral(m, -0.4, t, cfg);
            const Complex b = brute_cut(m, -0.4, t);
            CHECK(std::abs(a - b) < 3e-9);
        }
    }
}

TEST_CASE("sum rule: cut integral plus bound weights reproduces g(0)=1") {
    // no standard-sheet poles: completeness forces I_cut(0) = 1
    CHECK(std::abs(cut_integral(BandModel::semicircle(0.1), 0.0, 0.0) - 1.0) < 1e-6);
    // two bound states: I_cut(0) = 1 - w1 - w2
    const BandModel flat = BandModel::flat_band(0.2);
    const Complex i0 = cut_integral(flat, 0.0, 0.0);
    CHECK(i0.real() == doctest::Approx(0.879641062385661).epsilon(1e-8));
    auto poles = real_poles_standard_sheet(flat, 0.0);
    double wsum = 0.0;
    for (const auto& p : poles) wsum += p.weight->real();
    CHECK(std::abs(i0.real() + wsum - 1.0) < 1e-9);
}

TEST_CASE("survival series: structural invariants and errors") {
    const BandModel m = BandModel::flat_band(0.1);
    auto ts = uniform_times(8.0, 41);
    auto s = survival_amplitude(m, -0.4, ts, {});
    CHECK(s.method == Method::CutIntegral);
    CHECK(std::abs(s.g[0] - 1.0) < 1e-6);
    for (size_t i = 0; i < s.times.size(); ++i) {
        CHECK(s.p[i] == doctest::Approx(std::norm(s.g[i])).epsilon(1e-14));
        CHECK(s.p[i] >= 0.0);
        CHECK(s.p[i] <= 1.0 + 1e-6);
    }
    CHECK_THROWS_AS(survival_amplitude(m, -0.4, {1.0, 0.5}, {}), DomainError);
    CHECK_THROWS_AS(survival_amplitude(m, -0.4, {-1.0}, {}), DomainError);
    QuadratureConfig bad;
    bad.oscillation_splitting = 2;
    CHECK_THROWS_AS(cut_integral(m, 0.0, 1.0, bad), DomainError);
}

TEST_CASE("fgr reference values") {
    const BandModel flat = BandModel::flat_band(0.02);
    const double tau = fgr_tau(flat, -0.4);
    CHECK(tau == doctest::Approx(7.957747154594767).epsilon(1e-14));
    auto s = fgr_series(flat, -0.4, {0.0, tau});
    CHECK(s.p[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(std::abs(s.g[1]) == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));

    // semicircle decay rate 1/tau = 2 D0 sqrt(1-eps^2)
    const BandModel semi = BandModel::semicircle(0.3);
    CHECK(1.0 / fgr_tau(semi, -0.4) ==
          doctest::Approx(0.3 * 1.8330302779823362).epsilon(1e-12));

    CHECK_THROWS_AS(fgr_tau(flat, 1.5), DomainError);
    CHECK_THROWS_AS(fgr_tau(BandModel::semicircle(0.1), 1.0 - 1e-12), DomainError);
}

TEST_CASE("resonance expansion equals the cut route on every regime") {
    const QuadratureConfig cfg;
    struct Case {
        BandModel m;
        double eps;
        std::vector<double> ts;
    };
    const std::vector<Case> cases = {
        {BandModel::semicircle(0.05), 0.0, {0.0, 1.0, 5.0, 20.0, 60.0}},
        {BandModel::flat_band(0.1), -0.4, {0.5, 2.0, 9.0, 25.0}},
        {BandModel::semicircle(0.6), 0.0, {1.0, 6.0}},   // no poles at all
        {BandModel::semicircle(1.2), 0.0, {1.0, 6.0}}};  // bound states only
    for (const auto& c : cases) {
        auto res = resonance_expansion(c.m, c.eps, c.ts, cfg);
        auto cut = survival_amplitude(c.m, c.eps, c.ts, cfg);
        for (size_t i = 0; i < c.ts.size(); ++i)
            CHECK(std::abs(res.g[i] - cut.g[i]) <
                  std::max(10.0 * cfg.abs_tol, 1e-6));
    }
    CHECK_THROWS_AS(
        resonance_expansion(BandModel::power_edge(0.2, 2.0, 2.0), 0.0, {1.0}, {}),
        ContinuationUnavailableError);
}

TEST_CASE("halving the tolerance never moves p by more than the prior tolerance") {
    const BandModel m = BandModel::flat_band(0.2);
    QuadratureConfig c1;
    c1.abs_tol = 4e-9;
    QuadratureConfig c2 = c1;
    c2.abs_tol = 2e-9;
    for (double t : {0.0, 3.0, 11.0, 29.0}) {
        const Complex a = cut_integral(m, -0.4, t, c1);
        const Complex b = cut_integral(m, -0.4, t, c2);
        CHECK(std::abs(std::norm(a) - std::norm(b)) <= c1.abs_tol);
    }
}

TEST_CASE("spectral density: positivity, lorentzian peak, completeness") {
    const BandModel flat = BandModel::flat_band(0.02);
    const double eps = -0.4;
    for (int i = 0; i <= 200; ++i) {
        const double w = -1.2 + 2.4 * i / 200.0;
        CHECK(spectral_density(flat, eps, w) >= 0.0);
    }
    // perturbative peak height 1/(pi^2 D0) at w = eps + Sigma'(eps)
    const double wpk = eps + sigma_cut_values(flat, eps).sigma_prime;
    CHECK(spectral_density(flat, eps, wpk) ==
          doctest::Approx(5.066059182116889).epsilon(1e-10));

    // integral of A plus the delta weights is 1 (checked through the cut
    // integral at t=0, which is the same integral by construction, and
    // against an independent adaptive evaluation)
    auto deltas = spectral_deltas(flat, eps);
    double wsum = 0.0;
    for (auto& [e, w] : deltas) wsum += w;
    auto f = [&](double w) -> Complex { return spectral_density(flat, eps, w); };
    const double Ia =
        (quad::tanh_sinh(f, -1.0, -0.75, 1e-11).value +
         quad::adaptive_integrate(f, -0.75, 0.75, 1e-11, 4000).value +
         quad::tanh_sinh(f, 0.75, 1.0, 1e-11).value)
            .real();
    CHECK(std::abs(Ia + wsum - 1.0) < 1e-6);
}

TEST_CASE("tail exponent fit recovers synthetic power laws") {
    // synthetic |g| = t^-1.5 (2 + cos(2t)): envelope slope exactly -1.5
    SurvivalSeries s;
    s.method = Method::CutIntegral;
    for (int i = 0; i <= 4000; ++i) {
        const double t = 20.0 + i * 0.1;
        const double v = std::pow(t, -1.5) * (2.0 + std::cos(2.0 * t));
        s.times.push_back(t);
        s.g.emplace_back(v, 0.0);
        s.p.push_back(v * v);
    }
    CHECK(tail_exponent(s, 30.0, 400.0) == doctest::Approx(1.5).epsilon(5e-3));
    CHECK_THROWS_AS(tail_exponent(s, 30.0, 31.0), InsufficientDataError);
    CHECK_THROWS_AS(tail_exponent(s, 1.0, 400.0), DomainError);
}

TEST_CASE("dominant frequency picks the beat of a two-pole signal") {
    SurvivalSeries s;
    s.method = Method::Oracle;
    const double f0 = 2.0737874372899308;  // flat D0=0.2 bound-state splitting
    for (int i = 0; i <= 1200; ++i) {
        const double t = 8.0 + i * 0.0066;
        s.times.push_back(t);
        const double p = 0.074 + 0.0048 * std::cos(f0 * t) + 0.01 / t;
        s.g.emplace_back(std::sqrt(p), 0.0);
        s.p.push_back(p);
    }
    const double got = dominant_frequency(s, 8.0, 15.9);
    CHECK(std::abs(got - f0) / f0 < 0.01);
}

TEST_CASE("oracle equivalence and discretization convergence order") {
    const BandModel flat = BandModel::flat_band(0.2);
    const double eps = -0.4;
    auto ts = uniform_times(40.0, 81);
    auto cont = survival_amplitude(flat, eps, ts, {});
    double dev250 = 0.0, dev500 = 0.0;
    {
        auto o = evolve_survival(
            build_discrete_model(flat, eps, 250, DiscreteScheme::UniformLevels), ts);
        for (size_t i = 0; i < ts.size(); ++i)
            dev250 = std::max(dev250, std::abs(o.p[i] - cont.p[i]));
    }
    {
        auto o = evolve_survival(
            build_discrete_model(flat, eps, 500, DiscreteScheme::UniformLevels), ts);
        for (size_t i = 0; i < ts.size(); ++i)
            dev500 = std::max(dev500, std::abs(o.p[i] - cont.p[i]));
    }
    CHECK(dev250 < 5e-3);
    CHECK(dev500 < dev250 / 1.9);  // midpoint discretization: near 4x per doubling
}

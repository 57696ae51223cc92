#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "greencut/band_model.hpp"
#include "greencut/quadrature.hpp"

using namespace greencut;

TEST_CASE("delta values for the closed-form families") {
    const BandModel flat = BandModel::flat_band(0.2);
    CHECK(evaluate_delta(flat, 0.5) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(evaluate_delta(flat, 1.5) == 0.0);
    CHECK(evaluate_delta(flat, -2.0) == 0.0);

    const BandModel semi = BandModel::semicircle(1.0);
    CHECK(evaluate_delta(semi, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    CHECK(evaluate_delta(semi, 1.5) == 0.0);
}

TEST_CASE("flat band jumps at the edges, semicircle vanishes there") {
    const BandModel flat = BandModel::flat_band(0.3);
    CHECK(evaluate_delta(flat, 1.0 - 1e-12) == doctest::Approx(0.3));
    CHECK(evaluate_delta(flat, 1.0 + 1e-12) == 0.0);
    const BandModel semi = BandModel::semicircle(1.0);
    CHECK(evaluate_delta(semi, 1.0 - 1e-12) < 1e-5);
    const BandModel pe = BandModel::power_edge(1.0, 2.0, 2.0);
    CHECK(evaluate_delta(pe, -1.0 + 1e-10) < 1e-15);
}

TEST_CASE("power edge normalization peaks at the strength") {
    const BandModel pe = BandModel::power_edge(0.7, 1.0, 3.0);
    double peak = 0.0;
    for (int i = 0; i <= 4000; ++i)
        peak = std::max(peak, evaluate_delta(pe, -1.0 + 2.0 * i / 4000.0));
    CHECK(peak == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("first moments") {
    CHECK(first_moment(BandModel::flat_band(0.2)) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(first_moment(BandModel::semicircle(1.0)) == doctest::Approx(0.5).epsilon(1e-14));
    // Delta = (1-E^2) on [-1,1]: integral 4/3
    const BandModel pe = BandModel::power_edge(1.0, 1.0, 1.0);
    CHECK(first_moment(pe) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    // cross-check against plain quadrature
    auto num = quad::gl_integrate([&](double E) { return evaluate_delta(pe, E); },
                                  -1.0, 1.0, 40);
    CHECK(first_moment(pe) == doctest::Approx(num).epsilon(1e-12));
}

TEST_CASE("continuation agrees with the real-axis values and reflects") {
    const BandModel semi = BandModel::semicircle(M_PI);
    CHECK(continue_delta(semi, {0.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    // spec anchor: sqrt(1.25) at w = -0.5i
    const Complex v = continue_delta(semi, {0.0, -0.5});
    CHECK(v.real() == doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
    CHECK(std::abs(v.imag()) < 1e-14);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (const BandModel& m :
         {BandModel::semicircle(0.7), BandModel::power_edge(0.5, 0.5, 0.5)}) {
        for (int k = 0; k < 120; ++k) {
            Complex w{ur(rng), ur(rng)};
            if (std::abs(w.imag()) < 1e-3) w += Complex(0.0, 0.1);
            const Complex a = continue_delta(m, std::conj(w));
            const Complex b = std::conj(continue_delta(m, w));
            CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b)));
        }
        for (int k = 0; k < 50; ++k) {
            const double E = -0.999 + 1.998 * k / 49.0;
            CHECK(std::abs(continue_delta(m, {E, 0.0}).real() - evaluate_delta(m, E)) <
                  1e-12);
        }
    }
    CHECK(std::abs(continue_delta(BandModel::flat_band(0.4), {3.0, -2.0}) - 0.4) == 0.0);
}

TEST_CASE("tabulated models: csv loading, interpolation, rejection rules") {
    // table sampled from the semicircle density
    const BandModel semi = BandModel::semicircle(1.0);
    const char* path = "gc_test_table.csv";
    {
        std::ofstream out(path);
        out << "E,delta\n";
        for (int i = 0; i <= 200; ++i) {
            const double E = -1.0 + 2.0 * i / 200.0;
            out << E << "," << evaluate_delta(semi, E) << "\n";
        }
    }
    const BandModel tab = BandModel::tabulated_from_csv(path);
    std::remove(path);
    CHECK(tab.band_bottom == doctest::Approx(-1.0));
    CHECK(tab.band_top == doctest::Approx(1.0));
    for (double E : {-0.73, -0.2, 0.11, 0.64})
        CHECK(evaluate_delta(tab, E) ==
              doctest::Approx(evaluate_delta(semi, E)).epsilon(2e-4));
    CHECK_THROWS_AS((void)continue_delta(tab, {0.5, 0.5}), ContinuationUnavailableError);

    CHECK_THROWS_AS(BandModel::tabulated({{0.0, 1.0}, {0.5, 1.0}, {1.0, 1.0}}),
                    InvalidModelError);
    CHECK_THROWS_AS(BandModel::tabulated({{0.0, 1.0}, {0.5, 1.0}, {0.5, 1.0}, {1.0, 1.0}}),
                    InvalidModelError);
    CHECK_THROWS_AS(BandModel::tabulated({{0.0, 1.0}, {0.5, -1.0}, {0.7, 1.0}, {1.0, 1.0}}),
                    InvalidModelError);
}

#include <doctest.h>

#include <cmath>

#include "greencut/pole_finder.hpp"

using namespace greencut;

TEST_CASE("flat band always produces the symmetric bound-state pair") {
    for (double d0 : {0.05, 0.2, 0.6, 1.2}) {
        const BandModel m = BandModel::flat_band(d0);
        auto poles = real_poles_standard_sheet(m, 0.0);
        REQUIRE(poles.size() == 2);
        CHECK(poles[0].energy.real() == doctest::Approx(-poles[1].energy.real()));
        CHECK(poles[1].energy.real() > 1.0);
    }
    // frozen bisection values for Delta0 = 0.2
    const BandModel m = BandModel::flat_band(0.2);
    auto poles = real_poles_standard_sheet(m, 0.0);
    REQUIRE(poles.size() == 2);
    CHECK(poles[1].energy.real() == doctest::Approx(1.01272561672732).epsilon(1e-10));
    CHECK(poles[1].weight->real() == doctest::Approx(0.0601794688080834).epsilon(1e-9));
    // weight closed form 1/(1 + 2 D0/(w^2-1))
    const double w = poles[1].energy.real();
    CHECK(poles[1].weight->real() ==
          doctest::Approx(1.0 / (1.0 + 0.4 / (w * w - 1.0))).epsilon(1e-12));
}

TEST_CASE("semicircle bound states appear only beyond the band-edge threshold") {
    // Delta0 = 0.6 at eps = 0: the quadratic has real roots but they live on
    // sheet 1, so no bound states
    CHECK(real_poles_standard_sheet(BandModel::semicircle(0.6), 0.0).empty());
    // Delta0 = 1.2: the pair has crossed onto the standard sheet
    auto poles = real_poles_standard_sheet(BandModel::semicircle(1.2), 0.0);
    REQUIRE(poles.size() == 2);
    CHECK(poles[1].energy.real() == doctest::Approx(1.01418510567422).epsilon(1e-10));
    CHECK(poles[1].weight->real() == doctest::Approx(1.0 / 7.0).epsilon(1e-10));
}

TEST_CASE("sheet-0 weights are real, inside (0,1], and sum below one") {
    for (double d0 : {0.2, 0.7, 1.5}) {
        for (double eps : {0.0, -0.4}) {
            const BandModel m = BandModel::flat_band(d0);
            double sum = 0.0;
            for (const Pole& p : real_poles_standard_sheet(m, eps)) {
                CHECK(std::abs(p.weight->imag()) < 1e-12);
                CHECK(p.weight->real() > 0.0);
                CHECK(p.weight->real() <= 1.0);
                sum += p.weight->real();
            }
            CHECK(sum <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("closed-form quadratic roots at anchor parameters") {
    // eps=0, Delta0=2 -> +-2 sqrt(3)/3
    auto qr = semicircle_pole_closed_form(2.0, 0.0);
    CHECK(std::abs(std::abs(qr.w1.real()) - 2.0 * std::sqrt(3.0) / 3.0) < 1e-14);
    CHECK(std::abs(qr.w1 + qr.w2) < 1e-14);

    // zero discriminant: Delta0 = (1 - eps^2)/2 gives the order-2 root at
    // (1 + eps^2)/(2 eps)
    qr = semicircle_pole_closed_form(0.32, 0.6);
    CHECK(qr.double_root);
    CHECK(qr.w1.real() == doctest::Approx((1.0 + 0.36) / 1.2).epsilon(1e-12));

    // small coupling: conjugate pair, lower root near the FGR pole -i Delta0
    qr = semicircle_pole_closed_form(0.01, 0.0);
    const double expect = 0.01 / std::sqrt(0.98);
    CHECK(std::abs(qr.w2 - Complex(0.0, -expect)) < 1e-15);

    // degenerate quadratic at Delta0 = 1/2
    qr = semicircle_pole_closed_form(0.5, 0.6);
    CHECK(qr.degenerate);
    REQUIRE(qr.linear_root.has_value());
    CHECK(*qr.linear_root == doctest::Approx((0.36 + 0.25) / 0.6).epsilon(1e-14));
    CHECK_FALSE(semicircle_pole_closed_form(0.5, 0.0).linear_root.has_value());
}

TEST_CASE("classification puts strong-coupling real roots on the right sheet") {
    auto at06 = classify_quadratic_roots(0.6, 0.0);
    REQUIRE(at06.size() == 2);
    for (const Pole& p : at06) {
        CHECK(p.sheet == 1);
        CHECK(std::abs(p.energy.imag()) < 1e-12);
        CHECK(std::abs(std::abs(p.energy.real()) - std::sqrt(1.8)) < 1e-9);
    }
    auto at12 = classify_quadratic_roots(1.2, 0.0);
    REQUIRE(at12.size() == 2);
    for (const Pole& p : at12) CHECK(p.sheet == 0);
    // order-2 root carries no weight
    auto dbl = classify_quadratic_roots(0.32, 0.6);
    REQUIRE(!dbl.empty());
    CHECK(dbl[0].order == 2);
    CHECK(!dbl[0].weight.has_value());
    CHECK_THROWS_AS((void)pole_weight(BandModel::semicircle(0.32), dbl[0]),
                    SecondOrderResidueError);
}

TEST_CASE("newton refinement does not move classified quadratic roots") {
    for (double d0 : {0.6, 1.2}) {
        const BandModel m = BandModel::semicircle(d0);
        for (const Pole& p : classify_quadratic_roots(d0, 0.0)) {
            Complex z = p.energy;
            for (int it = 0; it < 40; ++it) {
                const Complex f = z - 0.0 - sigma_on_sheet(m, {z, p.sheet});
                const Complex df = 1.0 - sigma_derivative(m, {z, p.sheet});
                z -= f / df;
            }
            CHECK(std::abs(z - p.energy) < 1e-10);
        }
    }
}

TEST_CASE("resonance poles: FGR seeds land on the expected second-sheet roots") {
    // semicircle, eps=0: closed form -i D0/sqrt(1-2 D0)
    auto rp = resonance_poles(BandModel::semicircle(0.01), 0.0, 1);
    REQUIRE(!rp.empty());
    Complex lower = rp.front().energy;
    for (const Pole& p : rp)
        if (p.energy.imag() < lower.imag()) lower = p.energy;
    CHECK(std::abs(lower - Complex(0.0, -0.01 / std::sqrt(0.98))) < 1e-12);
    CHECK(std::abs(lower - Complex(0.0, -0.01)) < 2e-4);  // O(D0^2) from FGR

    // flat band: width approaches pi*Delta0
    auto fp = resonance_poles(BandModel::flat_band(0.02), -0.4, 1);
    REQUIRE(!fp.empty());
    const Complex z = fp.front().energy;
    CHECK(z.real() == doctest::Approx(-0.417689539567819).epsilon(1e-9));
    CHECK(z.imag() == doctest::Approx(-0.0660204546199323).epsilon(1e-9));
    CHECK(z.imag() == doctest::Approx(-M_PI * 0.02).epsilon(0.06));

    CHECK_THROWS_AS(
        resonance_poles(BandModel::tabulated(
                            {{-1.0, 0.1}, {-0.5, 0.1}, {0.5, 0.1}, {1.0, 0.1}}),
                        0.0, 1),
        ContinuationUnavailableError);
}

TEST_CASE("FGR distance shrinks quadratically as the coupling halves") {
    double prev = 0.0;
    for (double d0 : {0.04, 0.02, 0.01}) {
        auto rp = resonance_poles(BandModel::semicircle(d0), 0.0, 1);
        REQUIRE(!rp.empty());
        Complex lower = rp.front().energy;
        for (const Pole& p : rp)
            if (p.energy.imag() < lower.imag()) lower = p.energy;
        const double dist = std::abs(lower - Complex(0.0, -d0));
        if (prev > 0.0) CHECK(prev / dist > 3.5);
        prev = dist;
    }
}

TEST_CASE("schwarz pairing across mirror sheets") {
    // semicircle: the mirror of a sheet-1 resonance is again on sheet 1
    const BandModel semi = BandModel::semicircle(0.05);
    auto rp = resonance_poles(semi, 0.0, 1);
    REQUIRE(!rp.empty());
    for (const Pole& p : rp) {
        const Complex zc = std::conj(p.energy);
        CHECK(std::abs(zc - 0.0 - sigma_on_sheet(semi, {zc, 1})) < 1e-9);
    }
    // flat band: the mirror lives on the oppositely wound sheet
    const BandModel flat = BandModel::flat_band(0.05);
    auto fp = resonance_poles(flat, -0.4, 1);
    REQUIRE(!fp.empty());
    for (const Pole& p : fp) {
        const Complex zc = std::conj(p.energy);
        CHECK(std::abs(zc - (-0.4) - sigma_on_sheet(flat, {zc, -1})) < 1e-9);
    }
    // and the upper-sheet search finds exactly those mirrors
    auto fm = resonance_poles(flat, -0.4, -1);
    REQUIRE(!fm.empty());
    CHECK(std::abs(fm.front().energy - std::conj(fp.front().energy)) < 1e-9);
}

TEST_CASE("measured bound-state onset sits at the band edge, not the paper formula") {
    for (double eps : {0.0, -0.4, 0.6}) {
        const double up = bound_state_onset(BandKind::Semicircle, eps, +1);
        CHECK(std::abs(up - (1.0 - eps)) < 2e-3);
        const double lo = bound_state_onset(BandKind::Semicircle, eps, -1);
        CHECK(std::abs(lo - (1.0 + eps)) < 2e-3);
    }
    // the published threshold (eps^2+1)/2 disagrees at eps=0 by a factor 2
    CHECK(std::abs(bound_state_onset(BandKind::Semicircle, 0.0, +1) - 0.5) > 0.4);
}

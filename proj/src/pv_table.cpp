#include <algorithm>
#include <cmath>

#include "greencut/quadrature.hpp"
#include "internal.hpp"

namespace greencut::detail {

double pv_sigma_prime(const BandModel& model, double E) {
    const double eb = model.band_bottom, et = model.band_top;
    const double dE = evaluate_delta(model, E);
    auto smooth = [&](double Ep) -> Complex {
        return (evaluate_delta(model, Ep) - dE) / (E - Ep);
    };
    const double tol = 1e-13 * (1.0 + 4.0 * model.strength);
    double acc = 0.0;
    // split at E so the removable point sits on a panel edge
    if (E - eb > 0) acc += quad::tanh_sinh(smooth, eb, E, tol).value.real();
    if (et - E > 0) acc += quad::tanh_sinh(smooth, E, et, tol).value.real();
    acc += dE * std::log((E - eb) / (et - E));
    return acc;
}

std::shared_ptr<const SigmaPrimeTable> SigmaPrimeTable::build(const BandModel& model) {
    auto table = std::make_shared<SigmaPrimeTable>();
    const double eb = model.band_bottom, et = model.band_top;
    const double w = et - eb;

    // Geometric refinement toward both edges down to ~1e-13 of the width,
    // uniform panels across the middle.
    std::vector<double> breaks;
    for (int j = 44; j >= 3; --j) breaks.push_back(eb + w * std::ldexp(1.0, -j));
    const double lo_mid = eb + w / 8.0, hi_mid = et - w / 8.0;
    const int mid_panels = 12;
    for (int i = 1; i < mid_panels; ++i)
        breaks.push_back(lo_mid + (hi_mid - lo_mid) * i / mid_panels);
    for (int j = 3; j <= 44; ++j) breaks.push_back(et - w * std::ldexp(1.0, -j));
    breaks.insert(breaks.begin(), eb + w * std::ldexp(1.0, -44));
    breaks.push_back(et - w * std::ldexp(1.0, -44));
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    constexpr int kDeg = 20;  // Chebyshev-Lobatto points per panel
    table->breaks_ = breaks;
    table->coef_.resize(breaks.size() - 1);
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p], b = breaks[p + 1];
        const double m = 0.5 * (a + b), h = 0.5 * (b - a);
        std::vector<double> v(kDeg + 1);
        for (int i = 0; i <= kDeg; ++i) {
            const double x = std::cos(M_PI * i / kDeg);
            v[i] = pv_sigma_prime(model, m + h * x);
        }
        std::vector<double> c(kDeg + 1, 0.0);
        for (int k = 0; k <= kDeg; ++k) {
            double s = 0.0;
            for (int i = 0; i <= kDeg; ++i) {
                const double term = v[i] * std::cos(M_PI * k * i / kDeg);
                s += (i == 0 || i == kDeg) ? 0.5 * term : term;
            }
            c[k] = 2.0 * s / kDeg;
        }
        c[0] *= 0.5;
        c[kDeg] *= 0.5;
        table->coef_[p] = std::move(c);
    }
    return table;
}

double SigmaPrimeTable::eval(double E) const {
    const double lo = breaks_.front(), hi = breaks_.back();
    const double x = std::clamp(E, lo, hi);
    size_t p = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
    p = (p == 0) ? 0 : std::min(p - 1, coef_.size() - 1);
    const double a = breaks_[p], b = breaks_[p + 1];
    const double u = (2.0 * x - a - b) / (b - a);
    // Clenshaw
    const auto& c = coef_[p];
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = c.size(); k-- > 1;) {
        const double b0 = 2.0 * u * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return u * b1 - b2 + c[0];
}

double sigma_prime_fast(const BandModel& model, double E) {
    switch (model.kind) {
        case BandKind::Semicircle:
            return model.strength * E;
        case BandKind::FlatBand:
            return model.strength * std::log((E - model.band_bottom) /
                                             (model.band_top - E));
        default:
            return model.pv_table->eval(E);
    }
}

Complex sigma_cauchy(const BandModel& model, Complex w, double abs_tol) {
    const double eb = model.band_bottom, et = model.band_top;
    const double width = et - eb;
    const bool near = std::abs(w.imag()) < 0.5 * width && w.real() > eb - 0.5 * width &&
                      w.real() < et + 0.5 * width;
    if (!near) {
        auto f = [&](double E) -> Complex {
            return evaluate_delta(model, E) / (w - E);
        };
        auto r = quad::tanh_sinh(f, eb, et, abs_tol);
        return r.value;
    }
    // subtraction: remove the Cauchy kernel at the nearest in-band energy
    const double margin = 1e-12 * width;
    const double x = std::clamp(w.real(), eb + margin, et - margin);
    const double dx = evaluate_delta(model, x);
    auto f = [&](double E) -> Complex {
        return (evaluate_delta(model, E) - dx) / (w - E);
    };
    Complex acc = quad::tanh_sinh(f, eb, x, abs_tol * 0.5).value +
                  quad::tanh_sinh(f, x, et, abs_tol * 0.5).value;
    acc += dx * std::log((w - eb) / (w - et));
    return acc;
}

Complex sigma_cauchy_derivative(const BandModel& model, Complex w, double abs_tol) {
    const double eb = model.band_bottom, et = model.band_top;
    const double width = et - eb;
    const bool near = std::abs(w.imag()) < 0.5 * width && w.real() > eb - 0.5 * width &&
                      w.real() < et + 0.5 * width;
    if (!near) {
        auto f = [&](double E) -> Complex {
            const Complex d = w - E;
            return -evaluate_delta(model, E) / (d * d);
        };
        return quad::tanh_sinh(f, eb, et, abs_tol).value;
    }
    const double margin = 1e-12 * width;
    const double x = std::clamp(w.real(), eb + margin, et - margin);
    const double dx = evaluate_delta(model, x);
    auto f = [&](double E) -> Complex {
        const Complex d = w - E;
        return -(evaluate_delta(model, E) - dx) / (d * d);
    };
    Complex acc = quad::tanh_sinh(f, eb, x, abs_tol * 0.5).value +
                  quad::tanh_sinh(f, x, et, abs_tol * 0.5).value;
    // -int dE/(w-E)^2 = 1/(w-E_b) - 1/(w-E_t)
    acc += dx * (1.0 / (w - eb) - 1.0 / (w - et));
    return acc;
}

}  // namespace greencut::detail

#include "greencut/survival.hpp"

#include <algorithm>
#include <cmath>

#include "greencut/parallel.hpp"
#include "greencut/quadrature.hpp"
#include "internal.hpp"

namespace greencut {

namespace {

constexpr Complex kI{0.0, 1.0};

// Smooth factor of the cut integrand (and the in-band spectral density):
//   F(E) = Delta(E) / ([E - eps - Sigma'(E)]^2 + pi^2 Delta^2(E))
double cut_factor(const BandModel& m, double eps, double E) {
    const double d = evaluate_delta(m, E);
    if (d <= 0.0) return 0.0;
    const double x = E - eps - detail::sigma_prime_fast(m, E);
    return d / (x * x + M_PI * M_PI * d * d);
}

void check_times(const std::vector<double>& times) {
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw DomainError("times must be nonnegative");
        if (i > 0 && times[i] < times[i - 1]) throw DomainError("times must be sorted");
    }
}

Complex bound_pole_sum(const std::vector<Pole>& poles, double t) {
    Complex acc{};
    for (const Pole& p : poles) {
        if (p.order != 1)
            throw SecondOrderResidueError(
                "second-order pole in the time-domain sum is unsupported");
        acc += *p.weight * std::exp(-kI * p.energy * t);
    }
    return acc;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::CutIntegral: return "cut";
        case Method::ResonanceExpansion: return "resonance";
        case Method::Oracle: return "oracle";
        case Method::FGR: return "fgr";
    }
    return "?";
}

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0) || !(rel_tol > 0))
        throw DomainError("quadrature tolerances must be positive");
    if (oscillation_splitting < 4)
        throw DomainError("oscillation splitting needs at least 4 panels per period");
    if (max_subdivisions < 16) throw DomainError("max_subdivisions too small");
}

Complex cut_integral(const BandModel& model, double eps, double t,
                     const QuadratureConfig& cfg) {
    cfg.validate();
    if (t < 0.0) throw DomainError("t must be nonnegative");
    const double eb = model.band_bottom, et = model.band_top;
    const double w = et - eb;

    auto F = [&](double E) { return cut_factor(model, eps, E); };
    auto Fosc = [&](double E) -> Complex {
        return F(E) * std::exp(Complex(0.0, -E * t));
    };

    // Panel cap from the oscillation; width/8 keeps the smooth factor easy
    // even at t = 0.
    const double cap = (t > 0.0)
                           ? std::min(w / 8.0, 2.0 * M_PI / (cfg.oscillation_splitting * t))
                           : w / 8.0;
    const double edge_w = cap;

    const double edge_tol = 0.2 * cfg.abs_tol;
    double achieved = 0.0;
    Complex total{};
    {
        auto lo = quad::tanh_sinh(Fosc, eb, eb + edge_w, edge_tol);
        auto hi = quad::tanh_sinh(Fosc, et - edge_w, et, edge_tol);
        total = lo.value + hi.value;
        achieved = lo.error + hi.error;
    }

    const double a = eb + edge_w, b = et - edge_w;
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / cap)));
    int degree = 14;
    for (int attempt = 0;; ++attempt) {
        Complex interior{};
        double err = 0.0;
        const double h = (b - a) / panels;
        for (int i = 0; i < panels; ++i) {
            double pe = 0.0;
            interior += quad::filon_panel(F, a + i * h, a + (i + 1) * h, t, degree, &pe);
            err += pe;
        }
        if (err <= 0.6 * cfg.abs_tol) {
            total += interior;
            achieved += err;
            break;
        }
        if (attempt >= 3 || panels >= cfg.max_subdivisions)
            throw AccuracyError("cut integral tolerance not met", total + interior,
                                achieved + err);
        if (degree < 20)
            degree = 20;
        else
            panels = std::min(panels * 2, cfg.max_subdivisions);
    }
    return total;
}

SurvivalSeries survival_amplitude(const BandModel& model, double eps,
                                  const std::vector<double>& times,
                                  const QuadratureConfig& cfg) {
    check_times(times);
    const std::vector<Pole> poles = real_poles_standard_sheet(model, eps);
    SurvivalSeries s;
    s.method = Method::CutIntegral;
    s.times = times;
    s.g.resize(times.size());
    s.p.resize(times.size());
    parallel_for(times.size(), [&](size_t i) {
        const Complex g = cut_integral(model, eps, times[i], cfg) +
                          bound_pole_sum(poles, times[i]);
        s.g[i] = g;
        s.p[i] = std::norm(g);
    });
    return s;
}

double fgr_tau(const BandModel& model, double eps) {
    const double d = evaluate_delta(model, eps);
    if (d <= 0.0) throw DomainError("FGR needs eps strictly inside the band");
    return 1.0 / (2.0 * M_PI * d);
}

SurvivalSeries fgr_series(const BandModel& model, double eps,
                          const std::vector<double>& times) {
    check_times(times);
    const double tau = fgr_tau(model, eps);
    const double shift = eps + detail::sigma_prime_fast(model, eps);
    SurvivalSeries s;
    s.method = Method::FGR;
    s.times = times;
    s.g.resize(times.size());
    s.p.resize(times.size());
    for (size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        s.g[i] = std::exp(Complex(-t / (2.0 * tau), -shift * t));
        s.p[i] = std::exp(-t / tau);
    }
    return s;
}

namespace {

// Vertical-line integral of the sheet jump descending from a band edge:
//   K(t) = int_0^ymax Delta~ g_I g_II (edge - iy) e^{-yt} dy,
// computed in u with y = u^2 so sqrt-type edge factors stay smooth.
Complex vertical_integral(const BandModel& m, double eps, double edge, double t,
                          double ymax, double tol) {
    auto J = [&](double u) -> Complex {
        const double y = u * u;
        const Complex w(edge, -y);
        const Complex gI = 1.0 / (w - eps - detail::sigma_closed_unguarded(m, w, 0));
        const Complex gII = 1.0 / (w - eps - detail::sigma_closed_unguarded(m, w, 1));
        return continue_delta(m, w) * gI * gII * std::exp(-y * t) * 2.0 * u;
    };
    auto r = quad::tanh_sinh(J, 0.0, std::sqrt(ymax), tol);
    if (!r.converged)
        throw AccuracyError("vertical-line integral tolerance not met", r.value, r.error);
    return r.value;
}

}  // namespace

SurvivalSeries resonance_expansion(const BandModel& model, double eps,
                                   const std::vector<double>& times,
                                   const QuadratureConfig& cfg) {
    cfg.validate();
    check_times(times);
    if (!model.has_closed_forms())
        throw ContinuationUnavailableError(
            "resonance expansion needs a model with closed-form continuation");

    const std::vector<Pole> bound = real_poles_standard_sheet(model, eps);
    std::vector<Pole> strip;
    double gmax = 0.0;
    for (const Pole& p : resonance_poles(model, eps, 1)) {
        if (p.energy.imag() < -1e-14 && p.energy.real() > model.band_bottom &&
            p.energy.real() < model.band_top) {
            strip.push_back(p);
            gmax = std::max(gmax, -p.energy.imag());
        }
    }

    SurvivalSeries s;
    s.method = Method::ResonanceExpansion;
    s.times = times;
    s.g.resize(times.size());
    s.p.resize(times.size());
    parallel_for(times.size(), [&](size_t i) {
        const double t = times[i];
        Complex g;
        if (t == 0.0) {
            g = 1.0;  // completeness fixes the initial value exactly
        } else {
            g = bound_pole_sum(bound, t) + bound_pole_sum(strip, t);
            const double ymax = std::max(40.0 / t, 40.0 * gmax);
            const double tol = 0.25 * cfg.abs_tol;
            const Complex kt =
                vertical_integral(model, eps, model.band_top, t, ymax, tol);
            const Complex kb =
                vertical_integral(model, eps, model.band_bottom, t, ymax, tol);
            g += kI * kt * std::exp(-kI * model.band_top * t);
            g -= kI * kb * std::exp(-kI * model.band_bottom * t);
        }
        s.g[i] = g;
        s.p[i] = std::norm(g);
    });
    return s;
}

double spectral_density(const BandModel& model, double eps, double w) {
    if (w <= model.band_bottom || w >= model.band_top) return 0.0;
    if (w - model.band_bottom < kBranchGuard || model.band_top - w < kBranchGuard)
        return 0.0;  // limit at the edges for every in-scope model
    return cut_factor(model, eps, w);
}

std::vector<std::pair<double, double>> spectral_deltas(const BandModel& model, double eps) {
    std::vector<std::pair<double, double>> out;
    for (const Pole& p : real_poles_standard_sheet(model, eps))
        out.emplace_back(p.energy.real(), p.weight->real());
    return out;
}

double tail_exponent(const SurvivalSeries& series, double t_lo, double t_hi) {
    if (series.times.size() < 8) throw InsufficientDataError("series too short");
    if (t_lo >= t_hi || t_lo < series.times.front() || t_hi > series.times.back())
        throw DomainError("fit window must lie inside the series");
    std::vector<double> pt, pv;
    const auto& ts = series.times;
    for (size_t i = 1; i + 1 < ts.size(); ++i) {
        if (ts[i] < t_lo || ts[i] > t_hi) continue;
        const double vm = std::abs(series.g[i - 1]);
        const double v0 = std::abs(series.g[i]);
        const double vp = std::abs(series.g[i + 1]);
        if (v0 >= vm && v0 >= vp && v0 > 0.0) {
            // parabola through log|g| sharpens the envelope sample
            const double lm = std::log(vm), l0 = std::log(v0), lp = std::log(vp);
            const double den = lm - 2.0 * l0 + lp;
            double tt = ts[i], vv = l0;
            if (den < 0.0) {
                const double sh = 0.5 * (lm - lp) / den;
                if (std::abs(sh) < 1.0) {
                    tt = ts[i] + sh * (ts[i + 1] - ts[i]);
                    vv = l0 - 0.25 * (lm - lp) * sh;
                }
            }
            pt.push_back(std::log(tt));
            pv.push_back(vv);
        }
    }
    if (pt.size() < 5)
        throw InsufficientDataError("fewer than 5 envelope maxima in the window");
    // least squares slope
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pt.size());
    for (size_t i = 0; i < pt.size(); ++i) {
        sx += pt[i];
        sy += pv[i];
        sxx += pt[i] * pt[i];
        sxy += pt[i] * pv[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

double dominant_frequency(const SurvivalSeries& series, double t_lo, double t_hi) {
    std::vector<double> ts, xs;
    for (size_t i = 0; i < series.times.size(); ++i)
        if (series.times[i] >= t_lo && series.times[i] <= t_hi) {
            ts.push_back(series.times[i]);
            xs.push_back(series.p[i]);
        }
    if (ts.size() < 16) throw InsufficientDataError("too few samples in the window");
    const double T = ts.back() - ts.front();
    const double dt = T / (ts.size() - 1);
    double mean = 0.0;
    for (double v : xs) mean += v;
    mean /= xs.size();
    for (size_t i = 0; i < xs.size(); ++i) {
        const double u = (ts[i] - ts.front()) / T;  // Hann window
        xs[i] = (xs[i] - mean) * 0.5 * (1.0 - std::cos(2.0 * M_PI * u));
    }
    const double w_lo = 2.0 * 2.0 * M_PI / T;  // skip the DC/leakage foot
    const double w_hi = 0.9 * M_PI / dt;
    const double dw = 2.0 * M_PI / T / 200.0;
    double best_w = w_lo, best_a = -1.0, prev_a = 0.0, here_a = 0.0;
    std::vector<double> amp;
    const int nw = static_cast<int>((w_hi - w_lo) / dw);
    amp.reserve(nw + 1);
    for (int k = 0; k <= nw; ++k) {
        const double wk = w_lo + k * dw;
        Complex z{};
        for (size_t i = 0; i < xs.size(); ++i)
            z += xs[i] * std::exp(Complex(0.0, -wk * ts[i]));
        amp.push_back(std::abs(z));
    }
    int ib = 0;
    for (int k = 0; k <= nw; ++k)
        if (amp[k] > best_a) {
            best_a = amp[k];
            ib = k;
        }
    best_w = w_lo + ib * dw;
    if (ib > 0 && ib < nw) {
        prev_a = amp[ib - 1];
        here_a = amp[ib + 1];
        const double den = prev_a - 2.0 * amp[ib] + here_a;
        if (den < 0.0) best_w += 0.5 * dw * (prev_a - here_a) / den;
    }
    return best_w;
}

double fgr_valid_window(const SurvivalSeries& series, double tau, double rel_threshold) {
    double last = 0.0;
    for (size_t i = 0; i < series.times.size(); ++i) {
        const double t = series.times[i];
        const double ref = std::exp(-t / tau);
        if (ref <= 0.0) break;
        if (std::abs(series.p[i] - ref) / ref <= rel_threshold) last = t;
    }
    return last;
}

std::vector<double> uniform_times(double t_max, int n) {
    if (n < 2 || !(t_max > 0)) throw DomainError("need n >= 2 and t_max > 0");
    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i) ts[i] = t_max * i / (n - 1);
    return ts;
}

}  // namespace greencut

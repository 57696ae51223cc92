#include "greencut/band_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "greencut/quadrature.hpp"
#include "internal.hpp"

namespace greencut {

const char* band_kind_name(BandKind k) {
    switch (k) {
        case BandKind::Semicircle: return "semicircle";
        case BandKind::FlatBand: return "flat";
        case BandKind::PowerEdge: return "poweredge";
        case BandKind::Tabulated: return "table";
    }
    return "?";
}

namespace detail {

SteffenSpline::SteffenSpline(const std::vector<std::pair<double, double>>& pts) {
    const size_t n = pts.size();
    x_.resize(n);
    y_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        x_[i] = pts[i].first;
        y_[i] = pts[i].second;
    }
    std::vector<double> h(n - 1), s(n - 1), d(n);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        s[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    d[0] = s[0];
    d[n - 1] = s[n - 2];
    for (size_t i = 1; i + 1 < n; ++i) {
        if (s[i - 1] * s[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
            const double cap = 2.0 * std::min(std::abs(s[i - 1]), std::abs(s[i]));
            d[i] = (std::abs(p) > cap) ? std::copysign(cap, s[i]) : p;
        }
    }
    c1_.resize(n - 1);
    c2_.resize(n - 1);
    c3_.resize(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        c1_[i] = d[i];
        c2_[i] = (3.0 * s[i] - 2.0 * d[i] - d[i + 1]) / h[i];
        c3_[i] = (d[i] + d[i + 1] - 2.0 * s[i]) / (h[i] * h[i]);
    }
}

double SteffenSpline::eval(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const size_t i =
        std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1;
    const double t = x - x_[i];
    return y_[i] + t * (c1_[i] + t * (c2_[i] + t * c3_[i]));
}

double SteffenSpline::integral() const {
    double acc = 0.0;
    for (size_t i = 0; i + 1 < x_.size(); ++i) {
        const double h = x_[i + 1] - x_[i];
        acc += h * (y_[i] + h * (c1_[i] / 2 + h * (c2_[i] / 3 + h * c3_[i] / 4)));
    }
    return acc;
}

}  // namespace detail

namespace {

void check_band(double eb, double et) {
    if (!(eb < et)) throw InvalidModelError("band_bottom must be below band_top");
}

double power_edge_norm(double a, double b, double width) {
    // max over the band of (E-E_b)^a (E_t-E)^b
    if (a <= 0.0 && b <= 0.0) return 1.0;
    double peak;
    if (a <= 0.0) {
        peak = std::pow(width, b);
    } else if (b <= 0.0) {
        peak = std::pow(width, a);
    } else {
        const double u = width * a / (a + b);
        const double v = width * b / (a + b);
        peak = std::pow(u, a) * std::pow(v, b);
    }
    return 1.0 / peak;
}

}  // namespace

BandModel BandModel::semicircle(double delta0) {
    if (!(delta0 > 0)) throw InvalidModelError("strength must be positive");
    BandModel m;
    m.kind = BandKind::Semicircle;
    m.strength = delta0;
    m.edge_exp_bottom = m.edge_exp_top = 0.5;
    return m;
}

BandModel BandModel::flat_band(double delta0) {
    if (!(delta0 > 0)) throw InvalidModelError("strength must be positive");
    BandModel m;
    m.kind = BandKind::FlatBand;
    m.strength = delta0;
    return m;
}

BandModel BandModel::power_edge(double delta0, double beta_bottom, double beta_top,
                                double band_bottom, double band_top) {
    if (!(delta0 > 0)) throw InvalidModelError("strength must be positive");
    if (beta_bottom < 0 || beta_top < 0)
        throw InvalidModelError("edge exponents must be nonnegative");
    check_band(band_bottom, band_top);
    BandModel m;
    m.kind = BandKind::PowerEdge;
    m.strength = delta0;
    m.band_bottom = band_bottom;
    m.band_top = band_top;
    m.edge_exp_bottom = beta_bottom;
    m.edge_exp_top = beta_top;
    m.power_norm = power_edge_norm(beta_bottom, beta_top, band_top - band_bottom);
    m.pv_table = detail::SigmaPrimeTable::build(m);
    return m;
}

BandModel BandModel::tabulated(std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 4)
        throw InvalidModelError("tabulated model needs at least 4 samples");
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].first < pts[i + 1].first))
            throw InvalidModelError("tabulated energies must be strictly increasing");
    for (const auto& [e, d] : pts)
        if (d < 0.0) throw InvalidModelError("tabulated density must be nonnegative");
    BandModel m;
    m.kind = BandKind::Tabulated;
    m.band_bottom = pts.front().first;
    m.band_top = pts.back().first;
    check_band(m.band_bottom, m.band_top);
    double peak = 0.0;
    for (const auto& [e, d] : pts) peak = std::max(peak, d);
    m.strength = peak > 0 ? peak : 1.0;
    m.samples = std::move(pts);
    m.spline = std::make_shared<detail::SteffenSpline>(m.samples);
    m.pv_table = detail::SigmaPrimeTable::build(m);
    return m;
}

BandModel BandModel::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidModelError("cannot open table: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidModelError("empty table: " + path);
    // header must be E,delta
    {
        std::string h = line;
        h.erase(std::remove_if(h.begin(), h.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                h.end());
        if (h != "E,delta")
            throw InvalidModelError("table header must be 'E,delta', got: " + line);
    }
    std::vector<std::pair<double, double>> pts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double e, d;
        if (!(ss >> e >> d)) throw InvalidModelError("bad table row: " + line);
        pts.emplace_back(e, d);
    }
    return tabulated(std::move(pts));
}

double evaluate_delta(const BandModel& model, double E) {
    if (E < model.band_bottom || E > model.band_top) return 0.0;
    switch (model.kind) {
        case BandKind::Semicircle: {
            const double s = 1.0 - E * E;
            return s <= 0.0 ? 0.0 : model.strength / M_PI * std::sqrt(s);
        }
        case BandKind::FlatBand:
            return model.strength;
        case BandKind::PowerEdge: {
            const double u = E - model.band_bottom;
            const double v = model.band_top - E;
            double f = 1.0;
            if (model.edge_exp_bottom > 0) f *= std::pow(u, model.edge_exp_bottom);
            if (model.edge_exp_top > 0) f *= std::pow(v, model.edge_exp_top);
            return model.strength * model.power_norm * f;
        }
        case BandKind::Tabulated: {
            if (model.samples.size() < 4)
                throw InvalidModelError("tabulated model needs at least 4 samples");
            const double d = model.spline->eval(E);
            return d > 0.0 ? d : 0.0;
        }
    }
    return 0.0;
}

Complex continue_delta(const BandModel& model, Complex w) {
    switch (model.kind) {
        case BandKind::FlatBand:
            return Complex(model.strength, 0.0);
        case BandKind::Semicircle:
            // branch positive on (-1,1)
            return model.strength / M_PI * std::sqrt(1.0 - w) * std::sqrt(1.0 + w);
        case BandKind::PowerEdge: {
            // principal powers: cuts on (-inf,E_b] and [E_t,inf) only
            Complex f = 1.0;
            if (model.edge_exp_bottom > 0)
                f *= std::pow(w - model.band_bottom, model.edge_exp_bottom);
            if (model.edge_exp_top > 0)
                f *= std::pow(model.band_top - w, model.edge_exp_top);
            return model.strength * model.power_norm * f;
        }
        case BandKind::Tabulated:
            throw ContinuationUnavailableError(
                "tabulated density has no trustworthy analytic continuation");
    }
    return {};
}

double first_moment(const BandModel& model) {
    switch (model.kind) {
        case BandKind::Semicircle:
            return 0.5 * model.strength;
        case BandKind::FlatBand:
            return model.strength * model.width();
        case BandKind::PowerEdge: {
            // D0 * c * W^{a+b+1} B(a+1, b+1)
            const double a = model.edge_exp_bottom, b = model.edge_exp_top;
            const double lnB = std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2);
            return model.strength * model.power_norm *
                   std::pow(model.width(), a + b + 1) * std::exp(lnB);
        }
        case BandKind::Tabulated:
            return model.spline->integral();
    }
    return 0.0;
}

}  // namespace greencut

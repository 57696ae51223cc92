#include "greencut/pole_finder.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace greencut {

namespace {

// Sigma on the standard sheet at real w outside the closed band.
double sigma_real_outside(const BandModel& m, double w) {
    switch (m.kind) {
        case BandKind::Semicircle: {
            const double r = std::sqrt(w * w - 1.0);
            return m.strength * (w - std::copysign(r, w));
        }
        case BandKind::FlatBand:
            return m.strength * std::log((w + 1.0) / (w - 1.0));
        default:
            return detail::sigma_cauchy(m, Complex(w, 0.0)).real();
    }
}

double defect(const BandModel& m, double eps, double w) {
    return w - eps - sigma_real_outside(m, w);
}

// One bound-state search on the chosen side of the band; the defining
// function is strictly increasing there.
std::optional<double> bisect_side(const BandModel& m, double eps, int side) {
    const double guard = 1.0000001e-9;
    const double reach = 10.0 * (std::abs(eps) + m.strength + 1.0);
    double lo, hi;
    if (side > 0) {
        lo = m.band_top + guard;
        hi = m.band_top + reach;
    } else {
        lo = m.band_bottom - reach;
        hi = m.band_bottom - guard;
    }
    double flo = defect(m, eps, lo), fhi = defect(m, eps, hi);
    if (!(flo < 0.0 && fhi > 0.0)) return std::nullopt;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = defect(m, eps, mid);
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Pole> real_poles_standard_sheet(const BandModel& model, double eps) {
    std::vector<Pole> out;
    for (int side : {-1, +1}) {
        auto root = bisect_side(model, eps, side);
        if (!root) continue;
        Pole p;
        p.energy = Complex(*root, 0.0);
        p.sheet = 0;
        p.order = 1;
        p.weight = pole_weight(model, p);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end(),
              [](const Pole& a, const Pole& b) { return a.energy.real() < b.energy.real(); });
    return out;
}

QuadraticRoots semicircle_pole_closed_form(double delta0, double eps) {
    if (!(delta0 > 0)) throw InvalidModelError("strength must be positive");
    QuadraticRoots qr;
    if (std::abs(delta0 - 0.5) < 1e-14) {
        // (1-2 D0) w^2 - 2 eps (1-D0) w + eps^2 + D0^2 = 0 degenerates to
        // -eps w + eps^2 + 1/4 = 0
        qr.degenerate = true;
        if (eps != 0.0) qr.linear_root = (eps * eps + 0.25) / eps;
        return qr;
    }
    const double disc = eps * eps - 1.0 + 2.0 * delta0;
    const Complex root = std::sqrt(Complex(disc, 0.0));
    const double denom = 1.0 - 2.0 * delta0;
    qr.w1 = (eps * (1.0 - delta0) + delta0 * root) / denom;
    qr.w2 = (eps * (1.0 - delta0) - delta0 * root) / denom;
    qr.double_root = std::abs(disc) < 1e-12;
    return qr;
}

std::vector<Pole> classify_quadratic_roots(double delta0, double eps) {
    const BandModel m = BandModel::semicircle(delta0);
    const QuadraticRoots qr = semicircle_pole_closed_form(delta0, eps);
    std::vector<Complex> roots;
    if (qr.degenerate) {
        if (qr.linear_root) roots.emplace_back(*qr.linear_root, 0.0);
    } else if (qr.double_root) {
        roots.push_back(qr.w1);
    } else {
        roots.push_back(qr.w1);
        roots.push_back(qr.w2);
    }
    std::vector<Pole> out;
    for (const Complex& r : roots) {
        for (int sheet : {0, 1}) {
            Complex sig;
            try {
                sig = sigma_on_sheet(m, {r, sheet});
            } catch (const Error&) {
                continue;  // on the cut or at a branch point: unclassifiable
            }
            if (std::abs(r - eps - sig) <= 1e-9 * std::max(1.0, std::abs(r))) {
                Pole p;
                p.energy = r;
                p.sheet = sheet;
                p.order = qr.double_root ? 2 : 1;
                if (p.order == 1) p.weight = pole_weight(m, p);
                out.push_back(p);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) {
        if (a.sheet != b.sheet) return a.sheet < b.sheet;
        if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
        return a.energy.imag() < b.energy.imag();
    });
    return out;
}

std::vector<Pole> resonance_poles(const BandModel& model, double eps, int sheet) {
    if (sheet == 0)
        throw DomainError("resonance search needs a non-standard sheet");
    // Validates the sheet for this model family (throws for tabulated).
    (void)sigma_on_sheet(model, {Complex(model.band_top + 1.0, -1.0), sheet});

    const double eb = model.band_bottom, et = model.band_top;
    const double w = et - eb;
    const double side = sheet >= 1 ? -1.0 : 1.0;  // lower half for downward sheets

    std::vector<Complex> seeds;
    const double de = evaluate_delta(model, eps);
    if (de > 0.0) {
        const double sp = detail::sigma_prime_fast(model, eps);
        seeds.emplace_back(eps + sp, side * M_PI * de);
    }
    for (int i = 0; i < 9; ++i) {
        const double re = eb + w * (0.08 + 0.84 * i / 8.0);
        for (double im : {0.02, 0.08, 0.25, 0.6})
            seeds.emplace_back(re, side * im * w);
    }

    std::vector<Pole> found;
    for (const Complex& s0 : seeds) {
        Complex z = s0;
        bool ok = false;
        try {
            for (int it = 0; it < 100; ++it) {
                const Complex f = z - eps - sigma_on_sheet(model, {z, sheet});
                const Complex df = 1.0 - sigma_derivative(model, {z, sheet});
                const Complex step = f / df;
                z -= step;
                if (std::abs(z) > 50.0) break;
                if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) {
                    ok = true;
                    break;
                }
            }
            if (ok) {
                const Complex res = z - eps - sigma_on_sheet(model, {z, sheet});
                ok = std::abs(res) <= 1e-10 * std::max(1.0, std::abs(eps));
            }
        } catch (const Error&) {
            ok = false;  // wandered onto the cut or a branch point
        }
        if (!ok) continue;
        bool dup = false;
        for (const Pole& q : found)
            if (std::abs(q.energy - z) < 1e-9) dup = true;
        if (dup) continue;
        Pole p;
        p.energy = z;
        p.sheet = sheet;
        p.order = 1;
        p.weight = pole_weight(model, p);
        found.push_back(p);
    }
    std::sort(found.begin(), found.end(), [](const Pole& a, const Pole& b) {
        if (a.sheet != b.sheet) return a.sheet < b.sheet;
        if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
        return a.energy.imag() < b.energy.imag();
    });
    return found;
}

Complex pole_weight(const BandModel& model, const Pole& pole) {
    if (pole.order != 1)
        throw SecondOrderResidueError("second-order poles carry no simple residue");
    const Complex ds = sigma_derivative(model, {pole.energy, pole.sheet});
    return 1.0 / (1.0 - ds);
}

double bound_state_onset(BandKind kind, double eps, int side) {
    if (kind != BandKind::Semicircle)
        throw DomainError("onset measurement is defined for the semicircle model");
    auto exists = [&](double d0) {
        const BandModel m = BandModel::semicircle(d0);
        return bisect_side(m, eps, side).has_value();
    };
    double lo = 1e-3, hi = 6.0;
    if (exists(lo)) return lo;
    if (!exists(hi)) throw DomainError("no bound state up to strength 6");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (exists(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace greencut

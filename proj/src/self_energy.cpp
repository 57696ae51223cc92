#include "greencut/self_energy.hpp"

#include <cmath>

#include "internal.hpp"

namespace greencut {

namespace {

constexpr Complex kI{0.0, 1.0};

void guard_branch_points(const BandModel& m, Complex w) {
    if (std::abs(w - m.band_bottom) < kBranchGuard ||
        std::abs(w - m.band_top) < kBranchGuard)
        throw BranchPointError("evaluation inside the branch-point guard radius");
}

bool strictly_inside_band(const BandModel& m, Complex w) {
    return w.imag() == 0.0 && w.real() > m.band_bottom && w.real() < m.band_top;
}

void check_sheet(const BandModel& m, int sheet) {
    switch (m.kind) {
        case BandKind::Semicircle:
            if (sheet != 0 && sheet != 1)
                throw ContinuationUnavailableError("semicircle model has sheets {0,1}");
            return;
        case BandKind::FlatBand:
            return;  // any integer
        case BandKind::PowerEdge:
            if (sheet < -1 || sheet > 1)
                throw ContinuationUnavailableError(
                    "power-edge model supports only the adjacent sheets {-1,0,1}");
            return;
        case BandKind::Tabulated:
            if (sheet != 0)
                throw ContinuationUnavailableError(
                    "tabulated model has no continuation off the standard sheet");
            return;
    }
}

}  // namespace

Complex sqrt_band(Complex w) { return std::sqrt(w - 1.0) * std::sqrt(w + 1.0); }

Complex sqrt_one_minus_sq(Complex w) { return std::sqrt(1.0 - w) * std::sqrt(1.0 + w); }

Complex sigma_standard(const BandModel& model, Complex w, CutSide side) {
    guard_branch_points(model, w);
    if (strictly_inside_band(model, w)) {
        if (side == CutSide::None)
            throw DomainError("boundary value on the cut needs a side hint");
        const CutValues cv = sigma_cut_values(model, w.real());
        return {cv.sigma_prime,
                side == CutSide::Above ? cv.sigma_dprime_above : cv.sigma_dprime_below};
    }
    switch (model.kind) {
        case BandKind::Semicircle:
            return model.strength * (w - sqrt_band(w));
        case BandKind::FlatBand:
            return model.strength * std::log((w + 1.0) / (w - 1.0));
        default:
            return detail::sigma_cauchy(model, w);
    }
}

CutValues sigma_cut_values(const BandModel& model, double E) {
    if (E <= model.band_bottom || E >= model.band_top)
        throw DomainError("energy not inside the band");
    guard_branch_points(model, E);
    const double d = evaluate_delta(model, E);
    const double sp = detail::sigma_prime_fast(model, E);
    return {sp, -M_PI * d, M_PI * d};
}

Complex sigma_on_sheet(const BandModel& model, const SheetPoint& p) {
    check_sheet(model, p.sheet);
    guard_branch_points(model, p.w);
    if (p.sheet == 0) return sigma_standard(model, p.w);
    if (strictly_inside_band(model, p.w))
        throw DomainError("sheet values on the cut are side-dependent; offset w off the axis");
    switch (model.kind) {
        case BandKind::Semicircle:
            return model.strength * (p.w + sqrt_band(p.w));
        case BandKind::FlatBand:
            // sheet s is reached by winding s times downward through the cut
            return sigma_standard(model, p.w) -
                   2.0 * M_PI * kI * static_cast<double>(p.sheet) * model.strength;
        case BandKind::PowerEdge:
            return sigma_standard(model, p.w) -
                   2.0 * M_PI * kI * static_cast<double>(p.sheet) *
                       continue_delta(model, p.w);
        case BandKind::Tabulated:
            break;  // unreachable: check_sheet rejects
    }
    throw ContinuationUnavailableError("unsupported sheet");
}

Complex sigma_derivative(const BandModel& model, const SheetPoint& p) {
    check_sheet(model, p.sheet);
    guard_branch_points(model, p.w);
    if (strictly_inside_band(model, p.w))
        throw DomainError("derivative on the cut is side-dependent; offset w off the axis");
    switch (model.kind) {
        case BandKind::Semicircle: {
            const double sign = (p.sheet == 0) ? -1.0 : 1.0;
            return model.strength * (1.0 + sign * p.w / sqrt_band(p.w));
        }
        case BandKind::FlatBand:
            return -2.0 * model.strength / (p.w * p.w - 1.0);
        case BandKind::PowerEdge: {
            Complex d = detail::sigma_cauchy_derivative(model, p.w);
            if (p.sheet != 0) {
                // d/dw of -2*pi*i*s*Delta~(w) with Delta~ = D0 c (w-Eb)^a (Et-w)^b
                const Complex dt = continue_delta(model, p.w);
                Complex logd{0.0, 0.0};
                if (model.edge_exp_bottom > 0)
                    logd += model.edge_exp_bottom / (p.w - model.band_bottom);
                if (model.edge_exp_top > 0)
                    logd -= model.edge_exp_top / (model.band_top - p.w);
                d -= 2.0 * M_PI * kI * static_cast<double>(p.sheet) * dt * logd;
            }
            return d;
        }
        case BandKind::Tabulated:
            return detail::sigma_cauchy_derivative(model, p.w);
    }
    throw ContinuationUnavailableError("unsupported sheet");
}

SelfEnergySample sample_self_energy(const BandModel& model, const SheetPoint& p) {
    return {sigma_on_sheet(model, p), sigma_derivative(model, p), p};
}

namespace detail {

Complex sigma_closed_unguarded(const BandModel& model, Complex w, int sheet) {
    if (model.kind == BandKind::Semicircle) {
        const double sign = (sheet == 0) ? -1.0 : 1.0;
        return model.strength * (w + sign * sqrt_band(w));
    }
    return model.strength *
           (std::log((w + 1.0) / (w - 1.0)) -
            2.0 * M_PI * Complex(0.0, 1.0) * static_cast<double>(sheet));
}

}  // namespace detail

}  // namespace greencut

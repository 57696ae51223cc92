// band_model.hpp — coupling spectral density Delta(E): band support, edge
// exponents, and analytic continuation off the real axis.
#pragma once

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "greencut/errors.hpp"

namespace greencut {

using Complex = std::complex<double>;

enum class BandKind { Semicircle, FlatBand, PowerEdge, Tabulated };

const char* band_kind_name(BandKind k);

namespace detail {
class SteffenSpline;       // shape-preserving cubic for tabulated data
class SigmaPrimeTable;     // cached PV transform for quadrature-defined models
}  // namespace detail

// Immutable description of the coupling density. Construct through the
// factories below; they validate invariants and precompute what the
// quadrature paths need. Copies share the cached tables.
struct BandModel {
    BandKind kind = BandKind::FlatBand;
    double strength = 0.0;        // Delta0, overall scale
    double band_bottom = -1.0;
    double band_top = 1.0;
    double edge_exp_bottom = 0.0;  // beta_b: Delta ~ (E-E_b)^beta_b
    double edge_exp_top = 0.0;
    std::vector<std::pair<double, double>> samples;  // Tabulated only

    // PowerEdge normalization so that max Delta over the band equals strength.
    double power_norm = 1.0;

    std::shared_ptr<const detail::SteffenSpline> spline;
    std::shared_ptr<const detail::SigmaPrimeTable> pv_table;

    static BandModel semicircle(double delta0);
    static BandModel flat_band(double delta0);
    static BandModel power_edge(double delta0, double beta_bottom, double beta_top,
                                double band_bottom = -1.0, double band_top = 1.0);
    static BandModel tabulated(std::vector<std::pair<double, double>> pts);
    static BandModel tabulated_from_csv(const std::string& path);

    double width() const { return band_top - band_bottom; }
    bool in_band(double E) const { return E >= band_bottom && E <= band_top; }
    bool has_closed_forms() const {
        return kind == BandKind::Semicircle || kind == BandKind::FlatBand;
    }
};

// Delta(E); exactly zero outside [band_bottom, band_top].
double evaluate_delta(const BandModel& model, double E);

// Unique analytic continuation of Delta agreeing with evaluate_delta on the
// open band. Rejects Tabulated models.
Complex continue_delta(const BandModel& model, Complex w);

// Integral of Delta over the band.
double first_moment(const BandModel& model);

}  // namespace greencut

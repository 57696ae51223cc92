// run_config.hpp — reproducible run description shared by the CLI and the
// acceptance tooling. Parses from a flat key=value file; command-line flags
// override file values. serialize() -> parse() is a fixed point.
#pragma once

#include <string>
#include <vector>

#include "greencut/survival.hpp"

namespace greencut {

struct RunConfig {
    std::string model = "flat";     // flat | semicircle | poweredge | table
    double delta0 = 0.02;
    double eps = -0.4;
    double beta_bottom = 1.0;       // poweredge exponents
    double beta_top = 1.0;
    std::string table;              // CSV path for tabulated models

    std::string method = "cut";     // cut | resonance | fgr | oracle
    std::string methods = "cut,oracle";  // compare subcommand
    double tmax_tau = 20.0;         // time grid in FGR units ...
    double tmax_abs = -1.0;         // ... unless an absolute horizon is given
    int points = 600;

    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int panels = 6;
    int max_subdiv = 4000;

    int oracle_n = 2000;
    std::string scheme = "auto";    // chain | uniform | auto

    int sheet = 1;                  // poles subcommand
    std::string delta0_grid;        // sweep list "0.1,0.2,..."
    bool audit = false;

    double window_lo = -1.0;        // tail fit window
    double window_hi = -1.0;

    std::string output;
    std::string format = "csv";     // csv | json

    // All keys in serialization order.
    std::string serialize() const;
    static RunConfig from_string(const std::string& text);
    static RunConfig from_file(const std::string& path);

    BandModel build_model() const;
    std::vector<double> build_times(double tau) const;
    QuadratureConfig quadrature() const;
};

}  // namespace greencut

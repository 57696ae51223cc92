// series_io.hpp — CSV/JSON emission for survival series and pole reports.
// CSV: header t,re_g,im_g,p, 17 significant digits, LF line endings.
#pragma once

#include <string>
#include <vector>

#include "greencut/oracle.hpp"
#include "greencut/survival.hpp"

namespace greencut {

std::string format_g17(double v);

std::string series_to_csv(const SurvivalSeries& s);
std::string series_to_json(const BandModel& model, double eps, const SurvivalSeries& s);

std::string model_to_json(const BandModel& model);

struct PoleReport {
    BandModel model;
    double eps = 0.0;
    std::vector<Pole> poles;
    bool has_closed_form = false;
    QuadraticRoots closed_form;
    // Threshold audit (semicircle): the published onset formula vs the
    // numerically measured one, optionally confirmed by oracle counts.
    bool has_audit = false;
    double paper_onset = 0.0;      // (eps^2+1)/2
    double measured_onset_upper = 0.0;
    double measured_onset_lower = 0.0;
    int oracle_bound_count_below = -1;  // counts just below/above measured onset
    int oracle_bound_count_above = -1;
};

std::string pole_report_to_json(const PoleReport& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace greencut

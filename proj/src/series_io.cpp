#include "greencut/series_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace greencut {

using nlohmann::json;

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string series_to_csv(const SurvivalSeries& s) {
    std::string out = "t,re_g,im_g,p\n";
    for (size_t i = 0; i < s.times.size(); ++i) {
        out += format_g17(s.times[i]);
        out += ',';
        out += format_g17(s.g[i].real());
        out += ',';
        out += format_g17(s.g[i].imag());
        out += ',';
        out += format_g17(s.p[i]);
        out += '\n';
    }
    return out;
}

static json model_json_obj(const BandModel& m) {
    json j;
    j["kind"] = band_kind_name(m.kind);
    j["delta0"] = m.strength;
    j["band"] = {m.band_bottom, m.band_top};
    j["beta_bottom"] = m.edge_exp_bottom;
    j["beta_top"] = m.edge_exp_top;
    if (m.kind == BandKind::Tabulated) j["samples"] = m.samples.size();
    return j;
}

std::string model_to_json(const BandModel& model) {
    return model_json_obj(model).dump(2) + "\n";
}

std::string series_to_json(const BandModel& model, double eps, const SurvivalSeries& s) {
    json j;
    j["model"] = model_json_obj(model);
    j["eps"] = eps;
    j["method"] = method_name(s.method);
    j["horizon_warning"] = s.horizon_warning;
    j["times"] = s.times;
    std::vector<double> re(s.g.size()), im(s.g.size());
    for (size_t i = 0; i < s.g.size(); ++i) {
        re[i] = s.g[i].real();
        im[i] = s.g[i].imag();
    }
    j["re_g"] = re;
    j["im_g"] = im;
    j["p"] = s.p;
    return j.dump(2) + "\n";
}

static const char* pole_kind(const Pole& p) {
    if (p.order == 2) return "double";
    if (p.sheet == 0) return "bound";
    if (p.energy.imag() < -1e-14) return "resonance";
    if (p.energy.imag() > 1e-14) return "antiresonance";
    return "real-second-sheet";
}

std::string pole_report_to_json(const PoleReport& r) {
    json j;
    j["model"] = model_json_obj(r.model);
    j["eps"] = r.eps;
    json jp = json::array();
    for (const Pole& p : r.poles) {
        json e;
        e["re"] = p.energy.real();
        e["im"] = p.energy.imag();
        e["sheet"] = p.sheet;
        e["order"] = p.order;
        e["kind"] = pole_kind(p);
        if (p.weight) {
            e["weight_re"] = p.weight->real();
            e["weight_im"] = p.weight->imag();
        }
        jp.push_back(e);
    }
    j["poles"] = jp;
    if (r.has_closed_form) {
        json c;
        c["w1"] = {r.closed_form.w1.real(), r.closed_form.w1.imag()};
        c["w2"] = {r.closed_form.w2.real(), r.closed_form.w2.imag()};
        c["degenerate"] = r.closed_form.degenerate;
        c["double_root"] = r.closed_form.double_root;
        if (r.closed_form.linear_root) c["linear_root"] = *r.closed_form.linear_root;
        if (r.closed_form.degenerate)
            c["note"] = "quadratic degenerates at delta0 = 1/2; the surviving root "
                        "escapes to infinity";
        j["closed_form"] = c;
    }
    if (r.has_audit) {
        json a;
        a["paper_onset"] = r.paper_onset;  // (eps^2+1)/2 as published
        a["measured_onset_upper"] = r.measured_onset_upper;
        a["measured_onset_lower"] = r.measured_onset_lower;
        a["band_edge_onset_upper"] = r.model.band_top - r.eps;
        a["band_edge_onset_lower"] = r.eps - r.model.band_bottom;
        if (r.oracle_bound_count_below >= 0)
            a["oracle_count_below_onset"] = r.oracle_bound_count_below;
        if (r.oracle_bound_count_above >= 0)
            a["oracle_count_above_onset"] = r.oracle_bound_count_above;
        j["threshold_audit"] = a;
    }
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace greencut

#include "greencut/run_config.hpp"

#include <fstream>
#include <sstream>

#include "greencut/series_io.hpp"

namespace greencut {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string RunConfig::serialize() const {
    std::ostringstream out;
    auto kv = [&](const char* k, const std::string& v) { out << k << "=" << v << "\n"; };
    auto kd = [&](const char* k, double v) { kv(k, format_g17(v)); };
    auto ki = [&](const char* k, int v) { kv(k, std::to_string(v)); };
    kv("model", model);
    kd("delta0", delta0);
    kd("eps", eps);
    kd("beta_bottom", beta_bottom);
    kd("beta_top", beta_top);
    kv("table", table);
    kv("method", method);
    kv("methods", methods);
    kd("tmax_tau", tmax_tau);
    kd("tmax_abs", tmax_abs);
    ki("points", points);
    kd("abs_tol", abs_tol);
    kd("rel_tol", rel_tol);
    ki("panels", panels);
    ki("max_subdiv", max_subdiv);
    ki("oracle_n", oracle_n);
    kv("scheme", scheme);
    ki("sheet", sheet);
    kv("delta0_grid", delta0_grid);
    kv("audit", audit ? "1" : "0");
    kd("window_lo", window_lo);
    kd("window_hi", window_hi);
    kv("output", output);
    kv("format", format);
    return out.str();
}

RunConfig RunConfig::from_string(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) +
                              " is not key=value: " + line);
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key == "model") c.model = val;
        else if (key == "delta0") c.delta0 = std::stod(val);
        else if (key == "eps") c.eps = std::stod(val);
        else if (key == "beta_bottom") c.beta_bottom = std::stod(val);
        else if (key == "beta_top") c.beta_top = std::stod(val);
        else if (key == "table") c.table = val;
        else if (key == "method") c.method = val;
        else if (key == "methods") c.methods = val;
        else if (key == "tmax_tau") c.tmax_tau = std::stod(val);
        else if (key == "tmax_abs") c.tmax_abs = std::stod(val);
        else if (key == "points") c.points = std::stoi(val);
        else if (key == "abs_tol") c.abs_tol = std::stod(val);
        else if (key == "rel_tol") c.rel_tol = std::stod(val);
        else if (key == "panels") c.panels = std::stoi(val);
        else if (key == "max_subdiv") c.max_subdiv = std::stoi(val);
        else if (key == "oracle_n") c.oracle_n = std::stoi(val);
        else if (key == "scheme") c.scheme = val;
        else if (key == "sheet") c.sheet = std::stoi(val);
        else if (key == "delta0_grid") c.delta0_grid = val;
        else if (key == "audit") c.audit = (val == "1" || val == "true");
        else if (key == "window_lo") c.window_lo = std::stod(val);
        else if (key == "window_hi") c.window_hi = std::stod(val);
        else if (key == "output") c.output = val;
        else if (key == "format") c.format = val;
        else throw DomainError("unknown config key: " + key);
    }
    return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

BandModel RunConfig::build_model() const {
    if (model == "flat") return BandModel::flat_band(delta0);
    if (model == "semicircle" || model == "semi") return BandModel::semicircle(delta0);
    if (model == "poweredge" || model == "power")
        return BandModel::power_edge(delta0, beta_bottom, beta_top);
    if (model == "table") {
        if (table.empty()) throw DomainError("table model needs table=<csv path>");
        return BandModel::tabulated_from_csv(table);
    }
    throw DomainError("unknown model: " + model);
}

std::vector<double> RunConfig::build_times(double tau) const {
    const double t_max = tmax_abs > 0 ? tmax_abs : tmax_tau * tau;
    return uniform_times(t_max, points);
}

QuadratureConfig RunConfig::quadrature() const {
    QuadratureConfig q;
    q.abs_tol = abs_tol;
    q.rel_tol = rel_tol;
    q.oscillation_splitting = panels;
    q.max_subdivisions = max_subdiv;
    return q;
}

}  // namespace greencut

#include "omitread/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "omitread/errors.hpp"
#include "omitread/sweep.hpp"

namespace omitread {

namespace {

const std::set<std::string> required_keys = {
    "kappa_hz", "gamma_mech_hz", "omega_m_hz", "g0_hz", "n_th",
    "g_sm_hz", "delta_sm_hz", "a_pr_in_normalized", "c_om", "eta",
    "n_spins", "beta"};

const std::set<std::string> optional_keys = {
    "gamma_rel_hz",
    // defect level-structure overrides
    "lambda_so_hz", "gamma_l_hz_per_t", "gamma_s_hz_per_t", "d_sus_hz",
    "f_sus_hz", "e_egx_hz", "e_egy_hz", "omega_s_hz",
    // run controls, also written to .meta sidecars
    "points", "tolerance"};

struct RawEntry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_number(const std::string& name, const std::string& key, const RawEntry& e) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw config_error(name + ":" + std::to_string(e.line) + ": non-numeric value '" +
                           e.value + "' for key '" + key + "'");
    }
}

} // namespace

Config parse_config_text(const std::string& text, const std::string& name,
                         const std::vector<std::string>& overrides) {
    std::map<std::string, RawEntry> raw;
    std::vector<std::string> warnings;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(name + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!required_keys.count(key) && !optional_keys.count(key))
            throw config_error(name + ":" + std::to_string(lineno) + ": unknown key '" +
                               key + "'");
        if (raw.count(key))
            warnings.push_back("duplicate key '" + key + "', line " +
                               std::to_string(lineno) + " wins");
        raw[key] = {value, lineno};
    }

    int oline = 0;
    for (const auto& ov : overrides) {
        ++oline;
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw config_error("--set '" + ov + "': expected KEY=VALUE");
        const std::string key = trim(ov.substr(0, eq));
        const std::string value = trim(ov.substr(eq + 1));
        if (!required_keys.count(key) && !optional_keys.count(key))
            throw config_error("--set: unknown key '" + key + "'");
        raw[key] = {value, -oline};
    }

    for (const auto& k : required_keys)
        if (!raw.count(k))
            throw config_error(name + ": missing required key '" + k + "'");

    auto num = [&](const std::string& key, double fallback, bool present_required = false) {
        const auto it = raw.find(key);
        if (it == raw.end()) {
            if (present_required) throw config_error(name + ": missing key '" + key + "'");
            return fallback;
        }
        return to_number(name, key, it->second);
    };

    Config c;
    c.warnings = std::move(warnings);
    c.sys.kappa = rad_from_hz(num("kappa_hz", 0, true));
    c.sys.gamma_mech = rad_from_hz(num("gamma_mech_hz", 0, true));
    c.sys.omega_m = rad_from_hz(num("omega_m_hz", 0, true));
    c.sys.g0 = rad_from_hz(num("g0_hz", 0, true));
    c.sys.n_th = num("n_th", 0, true);

    const std::string c_om_raw = raw.at("c_om").value;
    if (c_om_raw == "auto") {
        c.drive.c_om_auto = true;
        c.drive.c_om = 0.0;
    } else {
        c.drive.c_om = to_number(name, "c_om", raw.at("c_om"));
    }
    c.drive.a_pr_in = num("a_pr_in_normalized", 0, true) * std::sqrt(c.sys.gamma_mech);
    c.drive.eta = num("eta", 1, true);

    c.spin.g_sm = rad_from_hz(num("g_sm_hz", 0, true));
    c.spin.delta_sm = rad_from_hz(num("delta_sm_hz", 0, true));
    c.spin.n_spins = static_cast<int>(num("n_spins", 1, true));
    c.spin.beta = static_cast<int>(num("beta", 1, true));
    c.spin.gamma_rel = rad_from_hz(num("gamma_rel_hz", 0.0));

    c.siv.lambda_so = rad_from_hz(num("lambda_so_hz", 46.0e9));
    c.siv.gamma_l = rad_from_hz(num("gamma_l_hz_per_t", 1.4e9));
    c.siv.gamma_s = rad_from_hz(num("gamma_s_hz_per_t", 14.0e9));
    c.siv.d_sus = rad_from_hz(num("d_sus_hz", 1.3e15));
    c.siv.f_sus = rad_from_hz(num("f_sus_hz", -1.7e15));
    c.e_egx = rad_from_hz(num("e_egx_hz", -7.92e6));
    c.e_egy = rad_from_hz(num("e_egy_hz", 0.0));
    c.omega_s = rad_from_hz(num("omega_s_hz", 7.64e9));

    c.points = static_cast<int>(num("points", 0.0));
    c.tolerance = num("tolerance", 1.0);

    c.sys.check();
    c.drive.check();
    c.spin.check();
    c.siv.check();
    return c;
}

Config parse_config_file(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw config_error(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path, overrides);
}

std::string config_dump(const Config& c) {
    std::ostringstream out;
    auto put = [&](const char* key, double v) {
        out << key << " = " << format_value(v) << "\n";
    };
    put("kappa_hz", hz_from_rad(c.sys.kappa));
    put("gamma_mech_hz", hz_from_rad(c.sys.gamma_mech));
    put("omega_m_hz", hz_from_rad(c.sys.omega_m));
    put("g0_hz", hz_from_rad(c.sys.g0));
    put("n_th", c.sys.n_th);
    put("g_sm_hz", hz_from_rad(c.spin.g_sm));
    put("delta_sm_hz", hz_from_rad(c.spin.delta_sm));
    put("a_pr_in_normalized", c.drive.a_pr_in / std::sqrt(c.sys.gamma_mech));
    if (c.drive.c_om_auto)
        out << "c_om = auto\n";
    else
        put("c_om", c.drive.c_om);
    put("eta", c.drive.eta);
    put("n_spins", c.spin.n_spins);
    put("beta", c.spin.beta);
    put("gamma_rel_hz", hz_from_rad(c.spin.gamma_rel));
    put("lambda_so_hz", hz_from_rad(c.siv.lambda_so));
    put("gamma_l_hz_per_t", hz_from_rad(c.siv.gamma_l));
    put("gamma_s_hz_per_t", hz_from_rad(c.siv.gamma_s));
    put("d_sus_hz", hz_from_rad(c.siv.d_sus));
    put("f_sus_hz", hz_from_rad(c.siv.f_sus));
    put("e_egx_hz", hz_from_rad(c.e_egx));
    put("e_egy_hz", hz_from_rad(c.e_egy));
    put("omega_s_hz", hz_from_rad(c.omega_s));
    if (c.points > 0) put("points", c.points);
    put("tolerance", c.tolerance);
    return out.str();
}

Config siv_default_config() {
    return parse_config_text(
        "kappa_hz = 2e9\n"
        "gamma_mech_hz = 200e3\n"
        "omega_m_hz = 6e9\n"
        "g0_hz = 200e3\n"
        "n_th = 0\n"
        "g_sm_hz = 2e6\n"
        "delta_sm_hz = 150e6\n"
        "a_pr_in_normalized = 20\n"
        "c_om = auto\n"
        "eta = 1\n"
        "n_spins = 1\n"
        "beta = 1\n",
        "<builtin>");
}

} // namespace omitread

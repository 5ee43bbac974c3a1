#include "muskat/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "muskat/errors.hpp"

namespace muskat {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("config: unknown key '" + where + it.key() + "'");
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("config: missing key '" + where + key + "'");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError("config: '" + where + "' must be a number");
    return v.get<double>();
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ConfigError("config: '" + where + "' must be an integer");
    return v.get<int>();
}

std::vector<Mode> parse_modes(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty())
        throw ConfigError("config: '" + where + "' must be a non-empty array");
    std::vector<Mode> modes;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& row = arr[i];
        const std::string slot = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != 3)
            throw ConfigError("config: '" + slot + "' must be [k, amplitude, phase]");
        const int k = integer(row[0], slot + "[0]");
        if (k == 0) throw ConfigError("config: '" + slot + "' has k = 0; eta0 must be mean-free");
        if (k < 0) throw ConfigError("config: '" + slot + "' has k < 0; use a phase instead");
        const double amp = number(row[1], slot + "[1]");
        const double phase = number(row[2], slot + "[2]");
        if (!std::isfinite(amp) || !std::isfinite(phase))
            throw ConfigError("config: '" + slot + "' has a non-finite entry");
        modes.push_back(Mode{{k, 0}, amp, phase});
    }
    return modes;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: not valid JSON: ") + err.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");

    reject_unknown(j,
                   {"problem", "d", "N", "L", "M", "Z", "T", "K", "dt", "params", "eta0",
                    "tolerances", "seed", "output_dir"},
                   "");

    RunConfig c;

    const std::string problem = require(j, "problem", "").get<std::string>();
    if (problem == "one_phase")
        c.problem = ProblemKind::OnePhase;
    else if (problem == "two_phase")
        c.problem = ProblemKind::TwoPhase;
    else
        throw ConfigError("config: 'problem' must be one_phase or two_phase");

    if (j.count("d")) c.d = integer(j["d"], "d");
    if (c.d != 1) throw ConfigError("config: only d = 1 runs are wired to the front door");

    c.N = integer(require(j, "N", ""), "N");
    if (c.N < 16 || c.N % 2 != 0) throw ConfigError("config: 'N' must be even and at least 16");
    c.L = number(require(j, "L", ""), "L");
    if (!(c.L > 0.0)) throw ConfigError("config: 'L' must be positive");
    if (j.count("M")) c.M = integer(j["M"], "M");
    if (c.M < 16) throw ConfigError("config: 'M' must be at least 16");
    if (j.count("Z")) c.Z = number(j["Z"], "Z");
    if (!(c.Z > 0.0)) throw ConfigError("config: 'Z' must be positive");
    c.T = number(require(j, "T", ""), "T");
    if (!(c.T > 0.0)) throw ConfigError("config: 'T' must be positive");

    const bool has_k = j.count("K") > 0;
    const bool has_dt = j.count("dt") > 0;
    if (has_k == has_dt) throw ConfigError("config: give exactly one of 'K' and 'dt'");
    if (has_k) {
        c.K = integer(j["K"], "K");
        if (c.K < 1) throw ConfigError("config: 'K' must be at least 1");
        c.dt = c.T / c.K;
    } else {
        c.dt = number(j["dt"], "dt");
        c.dt_given = true;
        if (!(c.dt > 0.0)) throw ConfigError("config: 'dt' must be positive");
        const double steps = c.T / c.dt;
        c.K = static_cast<int>(std::lround(steps));
        if (c.K < 1 || std::abs(steps - c.K) > 1e-9 * steps)
            throw ConfigError("config: 'dt' must divide 'T' into whole steps");
    }

    const json& p = require(j, "params", "");
    if (!p.is_object()) throw ConfigError("config: 'params' must be an object");
    reject_unknown(p, {"mu_minus", "mu_plus", "rho_minus", "rho_plus"}, "params.");
    c.params.kind = c.problem;
    c.params.mu_minus = number(require(p, "mu_minus", "params."), "params.mu_minus");
    c.params.rho_minus = number(require(p, "rho_minus", "params."), "params.rho_minus");
    if (p.count("mu_plus")) c.params.mu_plus = number(p["mu_plus"], "params.mu_plus");
    if (p.count("rho_plus")) c.params.rho_plus = number(p["rho_plus"], "params.rho_plus");
    c.params.validate();

    const json& e = require(j, "eta0", "");
    if (!e.is_object()) throw ConfigError("config: 'eta0' must be an object");
    reject_unknown(e, {"modes", "file"}, "eta0.");
    const bool has_modes = e.count("modes") > 0;
    const bool has_file = e.count("file") > 0;
    if (has_modes == has_file)
        throw ConfigError("config: 'eta0' needs exactly one of 'modes' and 'file'");
    if (has_modes) {
        c.eta0_modes = parse_modes(e["modes"], "eta0.modes");
    } else {
        c.eta0_file = e["file"].get<std::string>();
        std::ifstream in(c.eta0_file);
        if (!in) throw ConfigError("config: cannot open eta0 file '" + c.eta0_file + "'");
        json fj;
        try {
            fj = json::parse(in);
        } catch (const json::parse_error& err) {
            throw ConfigError("config: eta0 file is not valid JSON: " + std::string(err.what()));
        }
        if (!fj.is_object() || !fj.count("modes"))
            throw ConfigError("config: eta0 file must be an object with a 'modes' array");
        reject_unknown(fj, {"modes"}, c.eta0_file + ":");
        c.eta0_modes = parse_modes(fj["modes"], c.eta0_file + ":modes");
    }

    if (j.count("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object()) throw ConfigError("config: 'tolerances' must be an object");
        reject_unknown(t, {"picard_tol", "dn_tol", "c_star", "delta"}, "tolerances.");
        if (t.count("picard_tol"))
            c.tolerances.picard_tol = number(t["picard_tol"], "tolerances.picard_tol");
        if (t.count("dn_tol")) c.tolerances.dn_tol = number(t["dn_tol"], "tolerances.dn_tol");
        if (t.count("c_star")) c.tolerances.c_star = number(t["c_star"], "tolerances.c_star");
        if (t.count("delta")) c.tolerances.delta = number(t["delta"], "tolerances.delta");
    }
    if (!(c.tolerances.picard_tol > 0.0) || !(c.tolerances.dn_tol > 0.0) ||
        !(c.tolerances.c_star > 0.0) || !(c.tolerances.delta > 0.0))
        throw ConfigError("config: all tolerances must be positive");
    if (!(c.tolerances.c_star < 1.0)) throw ConfigError("config: 'c_star' must be below 1");

    if (j.count("seed")) {
        const json& s = j["seed"];
        if (!s.is_number_integer() || s.get<long long>() < 0)
            throw ConfigError("config: 'seed' must be a non-negative integer");
        c.seed = s.get<std::uint64_t>();
    }
    if (j.count("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
    if (c.output_dir.empty()) throw ConfigError("config: 'output_dir' must not be empty");

    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

std::string config_json(const RunConfig& config) {
    ordered j;
    j["problem"] = config.problem == ProblemKind::OnePhase ? "one_phase" : "two_phase";
    j["d"] = config.d;
    j["N"] = config.N;
    j["L"] = config.L;
    j["M"] = config.M;
    j["Z"] = config.Z;
    j["T"] = config.T;
    j["K"] = config.K;
    j["dt"] = config.dt;
    j["params"] = {{"mu_minus", config.params.mu_minus},
                   {"mu_plus", config.params.mu_plus},
                   {"rho_minus", config.params.rho_minus},
                   {"rho_plus", config.params.rho_plus}};
    ordered modes = ordered::array();
    for (const Mode& m : config.eta0_modes)
        modes.push_back({m.k[0], m.amplitude, m.phase});
    j["eta0"] = ordered::object();
    if (!config.eta0_file.empty()) j["eta0"]["file"] = config.eta0_file;
    j["eta0"]["modes"] = modes;
    j["tolerances"] = {{"picard_tol", config.tolerances.picard_tol},
                       {"dn_tol", config.tolerances.dn_tol},
                       {"c_star", config.tolerances.c_star},
                       {"delta", config.tolerances.delta}};
    j["seed"] = config.seed;
    j["output_dir"] = config.output_dir;
    return j.dump(2) + "\n";
}

TorusGrid config_grid(const RunConfig& config) { return TorusGrid(1, config.N, config.L); }

StripGrid config_strip(const RunConfig& config) {
    return StripGrid(config_grid(config), config.Z, config.M);
}

SpectralField build_eta0(const RunConfig& config) {
    return SpectralField::from_modes(config_grid(config), config.eta0_modes);
}

}  // namespace muskat

#include "bers/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bers/errors.hpp"

namespace bers {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string join_path(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void require_object(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path + ": expected an object");
}

// Strict key check. "sources" gets a dedicated message wherever it shows up:
// the solvers here are source-free and silently ignoring rho or j would make
// the run lie about what it verified.
void check_keys(const json& node, const std::string& path,
                const std::set<std::string>& allowed) {
    for (auto it = node.begin(); it != node.end(); ++it) {
        const std::string& key = it.key();
        if (key == "sources") {
            fail(join_path(path, key) +
                 ": source terms (rho, j) are not supported; remove the key");
        }
        if (!allowed.count(key)) {
            fail("unknown key \"" + join_path(path, key) + "\"");
        }
    }
}

double get_number(const json& node, const std::string& path, const char* key,
                  double fallback) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    if (!v.is_number()) fail(join_path(path, key) + ": expected a number");
    return v.get<double>();
}

std::int64_t get_integer(const json& node, const std::string& path,
                         const char* key, std::int64_t fallback) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    if (!v.is_number_integer()) fail(join_path(path, key) + ": expected an integer");
    return v.get<std::int64_t>();
}

std::string get_string(const json& node, const std::string& path,
                       const char* key, const std::string& fallback) {
    if (!node.contains(key)) return fallback;
    const json& v = node.at(key);
    if (!v.is_string()) fail(join_path(path, key) + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> get_number_array(const json& node, const std::string& path,
                                     const char* key) {
    if (!node.contains(key)) return {};
    const json& v = node.at(key);
    if (!v.is_array()) fail(join_path(path, key) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& item : v) {
        if (!item.is_number()) {
            fail(join_path(path, key) + ": expected an array of numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

// Two-component numeric array [a, b]; used for hyperbolic and complex
// coefficients.
std::pair<double, double> get_pair(const json& node, const std::string& path,
                                   const char* key,
                                   std::pair<double, double> fallback) {
    if (!node.contains(key)) return fallback;
    std::vector<double> v = get_number_array(node, path, key);
    if (v.size() != 2) fail(join_path(path, key) + ": expected [a, b]");
    return {v[0], v[1]};
}

void parse_medium(const json& node, MediumConfig& m) {
    const std::string path = "medium";
    require_object(node, path);
    check_keys(node, path,
               {"kind", "amplitude", "rate", "shift", "power", "x", "eps",
                "mu", "x_min", "x_max", "samples"});
    m.kind = get_string(node, path, "kind", m.kind);
    if (m.kind != "exp" && m.kind != "poly" && m.kind != "table") {
        fail("medium.kind: expected \"exp\", \"poly\" or \"table\"");
    }
    m.amplitude = get_number(node, path, "amplitude", m.amplitude);
    m.rate = get_number(node, path, "rate", m.rate);
    m.shift = get_number(node, path, "shift", m.shift);
    m.power = get_number(node, path, "power", m.power);
    m.xs = node.contains("x") ? get_number_array(node, path, "x") : m.xs;
    m.eps_values = node.contains("eps") ? get_number_array(node, path, "eps")
                                        : m.eps_values;
    m.mu = get_number(node, path, "mu", m.mu);
    m.x_min = get_number(node, path, "x_min", m.x_min);
    m.x_max = get_number(node, path, "x_max", m.x_max);
    std::int64_t samples =
        get_integer(node, path, "samples", static_cast<std::int64_t>(m.samples));
    if (samples < 5) fail("medium.samples: need at least 5 sample points");
    m.samples = static_cast<std::size_t>(samples);

    if (!(m.mu > 0.0) || !std::isfinite(m.mu)) {
        fail("medium.mu: permeability must be positive and finite");
    }
    if (!(m.x_min < m.x_max)) fail("medium.x_min: x_min must be below x_max");
    if (m.kind == "exp" || m.kind == "poly") {
        if (!(m.amplitude > 0.0)) fail("medium.amplitude: must be positive");
    }
    if (m.kind == "poly" && !(m.shift + m.x_min > 0.0)) {
        fail("medium.shift: x + shift must stay positive on [x_min, x_max]");
    }
    if (m.kind == "table") {
        if (m.xs.size() != m.eps_values.size()) {
            fail("medium.eps: must have the same length as medium.x");
        }
        if (m.xs.size() < 4) fail("medium.x: need at least 4 table nodes");
        for (std::size_t i = 0; i + 1 < m.xs.size(); ++i) {
            if (!(m.xs[i] < m.xs[i + 1])) {
                fail("medium.x: abscissae must be strictly increasing");
            }
        }
        for (double e : m.eps_values) {
            if (!(e > 0.0) || !std::isfinite(e)) {
                fail("medium.eps: permittivity values must be positive and finite");
            }
        }
        if (!(m.xs.front() <= m.x_min) || !(m.xs.back() >= m.x_max)) {
            fail("medium.x: table must cover [x_min, x_max]");
        }
    }
}

void parse_grid(const json& node, GridConfig& g) {
    const std::string path = "grid";
    require_object(node, path);
    check_keys(node, path, {"xi_max", "nodes", "refinements"});
    g.xi_max = get_number(node, path, "xi_max", g.xi_max);
    if (!(g.xi_max > 0.0)) fail("grid.xi_max: must be positive");
    std::int64_t nodes =
        get_integer(node, path, "nodes", static_cast<std::int64_t>(g.nodes));
    if (nodes < 5) fail("grid.nodes: need at least 5 nodes");
    g.nodes = static_cast<std::size_t>(nodes);
    std::int64_t refinements = get_integer(node, path, "refinements", g.refinements);
    // observed orders need at least three levels
    if (refinements < 3 || refinements > 8) {
        fail("grid.refinements: expected a value in [3, 8]");
    }
    g.refinements = static_cast<int>(refinements);
}

void parse_formal_powers(const json& node, FormalPowersConfig& f) {
    const std::string path = "formal_powers";
    require_object(node, path);
    check_keys(node, path, {"n_max", "a"});
    std::int64_t n_max = get_integer(node, path, "n_max", f.n_max);
    if (n_max < 0 || n_max > 12) fail("formal_powers.n_max: expected a value in [0, 12]");
    f.n_max = static_cast<int>(n_max);
    auto [u, v] = get_pair(node, path, "a", {f.a.u, f.a.v});
    f.a = Hyperbolic{u, v};
    if (hyp_norm(f.a) == 0.0) fail("formal_powers.a: coefficient must be nonzero");
}

void parse_forcefree(const json& node, ForcefreeConfig& f) {
    const std::string path = "forcefree";
    require_object(node, path);
    check_keys(node, path, {"alpha", "axis", "nodes", "box"});
    auto [re, im] = get_pair(node, path, "alpha", {f.alpha.real(), f.alpha.imag()});
    f.alpha = cplx(re, im);
    std::int64_t axis = get_integer(node, path, "axis", f.axis);
    if (axis < 1 || axis > 3) fail("forcefree.axis: expected 1, 2 or 3");
    f.axis = static_cast<int>(axis);
    std::int64_t nodes =
        get_integer(node, path, "nodes", static_cast<std::int64_t>(f.nodes));
    if (nodes < 5) fail("forcefree.nodes: need at least 5 nodes per axis");
    f.nodes = static_cast<std::size_t>(nodes);
    f.box = get_number(node, path, "box", f.box);
    if (!(f.box > 0.0)) fail("forcefree.box: must be positive");
}

void parse_dirac(const json& node, DiracConfig& d) {
    const std::string path = "dirac";
    require_object(node, path);
    check_keys(node, path, {"m", "omega", "phi", "nodes", "x_max"});
    d.m = get_number(node, path, "m", d.m);
    d.omega = get_number(node, path, "omega", d.omega);
    d.phi = get_number(node, path, "phi", d.phi);
    std::int64_t nodes =
        get_integer(node, path, "nodes", static_cast<std::int64_t>(d.nodes));
    if (nodes < 5) fail("dirac.nodes: need at least 5 nodes per axis");
    d.nodes = static_cast<std::size_t>(nodes);
    d.x_max = get_number(node, path, "x_max", d.x_max);
    if (!(d.x_max > 0.0)) fail("dirac.x_max: must be positive");
}

void parse_tolerances(const json& node, ToleranceConfig& t) {
    const std::string path = "tolerances";
    require_object(node, path);
    check_keys(node, path, {"slope_min", "exact_zero"});
    t.slope_min = get_number(node, path, "slope_min", t.slope_min);
    if (!(t.slope_min > 0.0)) fail("tolerances.slope_min: must be positive");
    t.exact_zero = get_number(node, path, "exact_zero", t.exact_zero);
    if (!(t.exact_zero > 0.0)) fail("tolerances.exact_zero: must be positive");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        fail(std::string("invalid JSON: ") + err.what());
    }
    require_object(root, "");
    check_keys(root, "",
               {"seed", "out_dir", "medium", "grid", "formal_powers",
                "forcefree", "dirac", "tolerances"});

    RunConfig cfg;
    if (root.contains("seed")) {
        const json& v = root.at("seed");
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
            fail("seed: expected a non-negative integer");
        }
        cfg.seed = v.get<std::uint64_t>();
    }
    cfg.out_dir = get_string(root, "", "out_dir", cfg.out_dir);
    if (cfg.out_dir.empty()) fail("out_dir: must not be empty");
    if (root.contains("medium")) parse_medium(root.at("medium"), cfg.medium);
    if (root.contains("grid")) parse_grid(root.at("grid"), cfg.grid);
    if (root.contains("formal_powers")) {
        parse_formal_powers(root.at("formal_powers"), cfg.formal_powers);
    }
    if (root.contains("forcefree")) parse_forcefree(root.at("forcefree"), cfg.forcefree);
    if (root.contains("dirac")) parse_dirac(root.at("dirac"), cfg.dirac);
    if (root.contains("tolerances")) parse_tolerances(root.at("tolerances"), cfg.tolerances);
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

MediumProfile medium_profile(const MediumConfig& cfg) {
    if (cfg.kind == "exp") {
        return MediumProfile::exponential(cfg.amplitude, cfg.rate, cfg.mu,
                                          cfg.x_min, cfg.x_max, cfg.samples);
    }
    if (cfg.kind == "poly") {
        return MediumProfile::polynomial(cfg.amplitude, cfg.shift, cfg.power,
                                         cfg.mu, cfg.x_min, cfg.x_max,
                                         cfg.samples);
    }
    MediumProfile p = MediumProfile::table(cfg.xs, cfg.eps_values, cfg.mu,
                                           cfg.samples);
    p.x_min = cfg.x_min;
    p.x_max = cfg.x_max;
    return p;
}

}  // namespace bers

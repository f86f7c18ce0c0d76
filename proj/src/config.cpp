#include "mimetic/config.hpp"

#include <initializer_list>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace mimetic {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::invalid_argument("invalid value at \"" + path + "\": " + why);
}

std::string joined(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (ok.find(it.key()) == ok.end())
            throw std::invalid_argument("unknown key \"" + joined(prefix, it.key()) +
                                        "\"");
}

double get_number(const json& obj, const std::string& prefix, const char* key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(joined(prefix, key), "must be a number");
    return v.get<double>();
}

long get_integer(const json& obj, const std::string& prefix, const char* key,
                 long fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(joined(prefix, key), "must be an integer");
    return v.get<long>();
}

std::uint64_t get_seed(const json& obj, const std::string& prefix, const char* key,
                       std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(joined(prefix, key), "must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& prefix, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(joined(prefix, key), "must be a string");
    return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& prefix, const char* key,
              bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(joined(prefix, key), "must be a boolean");
    return v.get<bool>();
}

GridConfig parse_grid(const json& obj) {
    GridConfig g;
    if (!obj.contains("grid")) return g;
    const json& v = obj.at("grid");
    if (!v.is_object()) fail("grid", "must be an object");
    check_keys(v, "grid", {"nx", "ny", "nz", "dx", "dy", "dz"});
    g.nx = get_integer(v, "grid", "nx", g.nx);
    g.ny = get_integer(v, "grid", "ny", g.ny);
    g.nz = get_integer(v, "grid", "nz", g.nz);
    g.dx = get_number(v, "grid", "dx", g.dx);
    g.dy = get_number(v, "grid", "dy", g.dy);
    g.dz = get_number(v, "grid", "dz", g.dz);
    if (g.nx < 2 || g.ny < 2 || g.nz < 2) fail("grid", "counts must be >= 2");
    if (!(g.dx > 0.0) || !(g.dy > 0.0) || !(g.dz > 0.0))
        fail("grid", "spacings must be positive");
    return g;
}

CoefficientConfig parse_coefficient(const json& obj, const char* key,
                                    bool strictly_positive) {
    CoefficientConfig c;
    if (!obj.contains(key)) return c;
    const json& v = obj.at(key);
    if (!v.is_object()) fail(key, "must be an object");
    check_keys(v, key, {"type", "value", "seed", "lo", "hi"});
    c.type = get_string(v, key, "type", c.type);
    c.value = get_number(v, key, "value", c.value);
    c.seed = get_seed(v, key, "seed", c.seed);
    c.lo = get_number(v, key, "lo", c.lo);
    c.hi = get_number(v, key, "hi", c.hi);
    if (c.type != "constant" && c.type != "random")
        fail(joined(key, "type"), "must be \"constant\" or \"random\"");
    const bool value_ok = strictly_positive ? c.value > 0.0 : c.value >= 0.0;
    const bool lo_ok = strictly_positive ? c.lo > 0.0 : c.lo >= 0.0;
    if (!value_ok) fail(joined(key, "value"), strictly_positive ? "must be > 0" : "must be >= 0");
    if (!lo_ok || !(c.hi >= c.lo)) fail(joined(key, "lo"), "need 0 <= lo <= hi");
    return c;
}

InitialConfig parse_initial(const json& obj, const std::set<std::string>& types,
                            const std::string& fallback_type) {
    InitialConfig ic;
    ic.type = fallback_type;
    if (!obj.contains("initial")) return ic;
    const json& v = obj.at("initial");
    if (!v.is_object()) fail("initial", "must be an object");
    check_keys(v, "initial", {"type", "amplitude", "width", "seed", "mode"});
    ic.type = get_string(v, "initial", "type", ic.type);
    ic.amplitude = get_number(v, "initial", "amplitude", ic.amplitude);
    ic.width = get_number(v, "initial", "width", ic.width);
    ic.seed = get_seed(v, "initial", "seed", ic.seed);
    ic.mode = get_integer(v, "initial", "mode", ic.mode);
    if (types.find(ic.type) == types.end())
        fail("initial.type", "unsupported initial condition \"" + ic.type + "\"");
    if (ic.width < 0.0) fail("initial.width", "must be >= 0");
    if (ic.mode < 1) fail("initial.mode", "must be >= 1");
    return ic;
}

VelocityConfig parse_velocity(const json& obj) {
    VelocityConfig vc;
    if (!obj.contains("velocity")) return vc;
    const json& v = obj.at("velocity");
    if (!v.is_object()) fail("velocity", "must be an object");
    check_keys(v, "velocity", {"type", "value", "max"});
    vc.type = get_string(v, "velocity", "type", vc.type);
    vc.value = get_number(v, "velocity", "value", vc.value);
    vc.max = get_number(v, "velocity", "max", vc.max);
    if (vc.type != "uniform" && vc.type != "collapse")
        fail("velocity.type", "must be \"uniform\" or \"collapse\"");
    if (vc.type == "collapse" && !(vc.max > 0.0)) fail("velocity.max", "must be > 0");
    return vc;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (!doc.contains("scenario") || !doc.at("scenario").is_string())
        throw std::invalid_argument("config needs a string \"scenario\"");

    RunConfig rc;
    rc.scenario = doc.at("scenario").get<std::string>();

    const std::set<std::string> known = {"oscillator",   "odesys",    "wave1d",
                                         "scalarwave3d", "maxwell3d", "transport1d",
                                         "diffusion1d"};
    if (known.find(rc.scenario) == known.end())
        throw std::invalid_argument("unknown scenario \"" + rc.scenario + "\"");

    if (rc.scenario == "oscillator") {
        check_keys(doc, "", {"scenario", "steps", "dt", "cfl_factor", "omega", "u0", "du0"});
        rc.omega = get_number(doc, "", "omega", rc.omega);
        rc.u0 = get_number(doc, "", "u0", rc.u0);
        rc.du0 = get_number(doc, "", "du0", rc.du0);
        if (!(rc.omega > 0.0)) fail("omega", "must be > 0");
    } else if (rc.scenario == "odesys") {
        check_keys(doc, "", {"scenario", "steps", "dt", "cfl_factor", "rows", "cols", "seed"});
        rc.rows = get_integer(doc, "", "rows", rc.rows);
        rc.cols = get_integer(doc, "", "cols", rc.cols);
        rc.seed = get_seed(doc, "", "seed", rc.seed);
        if (rc.rows < 1) fail("rows", "must be >= 1");
        if (rc.cols < 1) fail("cols", "must be >= 1");
    } else if (rc.scenario == "wave1d") {
        check_keys(doc, "",
                   {"scenario", "steps", "dt", "cfl_factor", "n", "c", "dx", "initial",
                    "snapshot_every"});
        rc.n = get_integer(doc, "", "n", 256);
        rc.c = get_number(doc, "", "c", rc.c);
        rc.dx = get_number(doc, "", "dx", rc.dx);
        rc.initial = parse_initial(doc, {"sine", "gaussian"}, "sine");
        rc.snapshot_every = get_integer(doc, "", "snapshot_every", 0);
    } else if (rc.scenario == "scalarwave3d") {
        check_keys(doc, "",
                   {"scenario", "steps", "dt", "cfl_factor", "grid", "material",
                    "starred", "initial", "snapshot_every"});
        rc.grid = parse_grid(doc);
        rc.material = parse_coefficient(doc, "material", true);
        rc.starred = get_bool(doc, "", "starred", false);
        rc.initial = parse_initial(doc, {"gaussian", "random"}, "gaussian");
        rc.snapshot_every = get_integer(doc, "", "snapshot_every", 0);
    } else if (rc.scenario == "maxwell3d") {
        check_keys(doc, "",
                   {"scenario", "steps", "dt", "cfl_factor", "grid", "material",
                    "initial", "snapshot_every"});
        rc.grid = parse_grid(doc);
        rc.material = parse_coefficient(doc, "material", true);
        rc.initial = parse_initial(doc, {"solenoidal", "random"}, "solenoidal");
        rc.snapshot_every = get_integer(doc, "", "snapshot_every", 0);
    } else if (rc.scenario == "transport1d") {
        check_keys(doc, "",
                   {"scenario", "steps", "dt", "cfl_factor", "n", "dx", "velocity",
                    "initial"});
        rc.n = get_integer(doc, "", "n", 128);
        rc.dx = get_number(doc, "", "dx", rc.dx);
        rc.velocity = parse_velocity(doc);
        rc.initial = parse_initial(doc, {"square", "gaussian"}, "square");
    } else {
        check_keys(doc, "",
                   {"scenario", "steps", "dt", "cfl_factor", "n", "dx", "coefficient",
                    "initial"});
        rc.n = get_integer(doc, "", "n", 128);
        rc.dx = get_number(doc, "", "dx", rc.dx);
        rc.coefficient = parse_coefficient(doc, "coefficient", false);
        rc.initial = parse_initial(doc, {"spike", "gaussian"}, "spike");
    }

    rc.steps = get_integer(doc, "", "steps", -1);
    if (rc.steps < 0) fail("steps", "must be a nonnegative integer");
    if (rc.n < 2) fail("n", "must be >= 2");
    if (!(rc.dx > 0.0)) fail("dx", "must be > 0");
    if (!(rc.c > 0.0)) fail("c", "must be > 0");
    if (rc.snapshot_every < 0) fail("snapshot_every", "must be >= 0");

    const bool has_dt = doc.contains("dt");
    const bool has_cfl = doc.contains("cfl_factor");
    if (has_dt && has_cfl)
        throw std::invalid_argument("give either \"dt\" or \"cfl_factor\", not both");
    if (has_dt) {
        rc.has_dt = true;
        rc.dt = get_number(doc, "", "dt", 0.0);
        if (!(rc.dt > 0.0)) fail("dt", "must be > 0");
    } else if (has_cfl) {
        rc.cfl_factor = get_number(doc, "", "cfl_factor", rc.cfl_factor);
        if (!(rc.cfl_factor > 0.0)) fail("cfl_factor", "must be > 0");
        if (rc.cfl_factor > 1.0)
            rc.warnings.push_back("cfl_factor " + std::to_string(rc.cfl_factor) +
                                  " exceeds 1; expect instability");
    }
    return rc;
}

}  // namespace mimetic

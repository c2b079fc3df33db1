#include "abcage/run_config.hpp"

#include <json.hpp>

#include <algorithm>

namespace abcage {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

double need_number(const json& j, const std::string& field) {
    if (!j.is_number()) fail("field '" + field + "' must be a number");
    return j.get<double>();
}

int need_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) fail("field '" + field + "' must be an integer");
    return j.get<int>();
}

std::string need_string(const json& j, const std::string& field) {
    if (!j.is_string()) fail("field '" + field + "' must be a string");
    return j.get<std::string>();
}

Boundary parse_boundary(const std::string& s) {
    if (s == "open") return Boundary::Open;
    if (s == "periodic") return Boundary::Periodic;
    fail("field 'boundary' must be \"open\" or \"periodic\", got \"" + s + "\"");
}

Sublattice parse_sublattice(const std::string& s) {
    if (s == "A" || s == "a") return Sublattice::A;
    if (s == "B" || s == "b") return Sublattice::B;
    fail("field 'sub' must be \"A\" or \"B\", got \"" + s + "\"");
}

void apply_params_json(const json& p, LatticeParams& out,
                       std::vector<std::string>* keys) {
    if (!p.is_object()) fail("field 'params' must be an object");
    for (const auto& [key, value] : p.items()) {
        if (key == "J") out.J = need_number(value, "params.J");
        else if (key == "Gamma") out.Gamma = need_number(value, "params.Gamma");
        else if (key == "Phi1") out.Phi1 = need_number(value, "params.Phi1");
        else if (key == "Phi2") out.Phi2 = need_number(value, "params.Phi2");
        else if (key == "N") out.N = need_int(value, "params.N");
        else if (key == "boundary")
            out.boundary = parse_boundary(need_string(value, "params.boundary"));
        else
            fail("unknown field 'params." + key + "'");
        if (keys) keys->push_back(key);
    }
}

StateVector parse_state_vector(const json& arr) {
    if (!arr.is_array()) fail("field 'vector' must be an array");
    StateVector v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        const json& e = arr[i];
        if (e.is_number())
            v[i] = Complex(e.get<double>(), 0.0);
        else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
            v[i] = Complex(e[0].get<double>(), e[1].get<double>());
        else
            fail("vector entries must be numbers or [re, im] pairs");
    }
    return v;
}

SweepBlock parse_sweep(const json& b) {
    SweepBlock block;
    if (!b.is_object()) fail("'sweep' block must be an object");
    for (const auto& [key, value] : b.items()) {
        if (key == "axis") {
            const std::string axis = need_string(value, "sweep.axis");
            if (axis == "Phi1") block.axis = PhaseAxis::Phi1;
            else if (axis == "Phi2") block.axis = PhaseAxis::Phi2;
            else fail("sweep.axis must be \"Phi1\" or \"Phi2\"");
        } else if (key == "resolution") {
            block.resolution = need_int(value, "sweep.resolution");
        } else {
            fail("unknown field 'sweep." + key + "'");
        }
    }
    if (block.resolution < 2) fail("sweep.resolution must be >= 2");
    return block;
}

EvolveBlock parse_evolve(const json& b) {
    EvolveBlock block;
    if (!b.is_object()) fail("'evolve' block must be an object");
    for (const auto& [key, value] : b.items()) {
        if (key == "initial") {
            if (!value.is_object()) fail("evolve.initial must be an object");
            if (value.contains("preset"))
                block.preset = need_string(value["preset"], "evolve.initial.preset");
            if (value.contains("vector"))
                block.vector = parse_state_vector(value["vector"]);
            if (block.preset.has_value() == block.vector.has_value())
                fail("evolve.initial needs exactly one of 'preset' or 'vector'");
        } else if (key == "times") {
            if (!value.is_object()) fail("evolve.times must be an object");
            for (const auto& [tk, tv] : value.items()) {
                if (tk == "t_max") block.t_max = need_number(tv, "evolve.times.t_max");
                else if (tk == "samples") block.samples = need_int(tv, "evolve.times.samples");
                else if (tk == "values") {
                    if (!tv.is_array()) fail("evolve.times.values must be an array");
                    std::vector<double> ts;
                    for (const json& e : tv) ts.push_back(need_number(e, "evolve.times.values[]"));
                    block.times = std::move(ts);
                } else fail("unknown field 'evolve.times." + tk + "'");
            }
        } else {
            fail("unknown field 'evolve." + key + "'");
        }
    }
    if (!block.preset && !block.vector)
        fail("evolve.initial is required (preset or vector)");
    if (block.samples < 2) fail("evolve.times.samples must be >= 2");
    if (block.t_max && !(*block.t_max > 0.0)) fail("evolve.times.t_max must be > 0");
    return block;
}

ClsBlock parse_cls(const json& b) {
    ClsBlock block;
    if (!b.is_object()) fail("'cls' block must be an object");
    for (const auto& [key, value] : b.items()) {
        if (key == "cell") {
            block.cell = need_int(value, "cls.cell");
        } else if (key == "branch") {
            block.branch = need_string(value, "cls.branch");
            if (block.branch != "plus" && block.branch != "minus" &&
                block.branch != "both")
                fail("cls.branch must be \"plus\", \"minus\" or \"both\"");
        } else if (key == "decompose") {
            if (!value.is_object() || !value.contains("cell") || !value.contains("sub"))
                fail("cls.decompose needs fields 'cell' and 'sub'");
            block.decompose = SiteIndex(
                need_int(value["cell"], "cls.decompose.cell"),
                parse_sublattice(need_string(value["sub"], "cls.decompose.sub")));
        } else {
            fail("unknown field 'cls." + key + "'");
        }
    }
    return block;
}

ResonatorBlock parse_resonator(const json& b) {
    ResonatorBlock block;
    if (!b.is_object()) fail("'resonator' block must be an object");
    for (const auto& [key, value] : b.items()) {
        if (key == "kappa") {
            block.kappa = need_number(value, "resonator.kappa");
        } else if (key == "gamma") {
            if (value.is_array()) {
                for (const json& e : value)
                    block.gammas.push_back(need_number(e, "resonator.gamma[]"));
            } else {
                block.gammas.push_back(need_number(value, "resonator.gamma"));
            }
        } else if (key == "gain") {
            if (value.is_string()) {
                if (value.get<std::string>() != "balanced")
                    fail("resonator.gain must be a number or \"balanced\"");
            } else {
                block.gain = need_number(value, "resonator.gain");
            }
        } else if (key == "horizon") {
            if (value.is_string()) {
                if (value.get<std::string>() != "auto")
                    fail("resonator.horizon must be a number or \"auto\"");
            } else {
                block.horizon = need_number(value, "resonator.horizon");
            }
        } else if (key == "samples") {
            block.samples = need_int(value, "resonator.samples");
        } else {
            fail("unknown field 'resonator." + key + "'");
        }
    }
    if (block.gammas.empty()) fail("resonator.gamma is required");
    if (block.samples < 1) fail("resonator.samples must be >= 1");
    return block;
}

} // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) fail("config root must be a JSON object");

    RunConfig cfg;
    int blocks = 0;
    for (const auto& [key, value] : doc.items()) {
        if (key == "model") {
            const std::string m = need_string(value, "model");
            if (m == "creutz") cfg.model = Model::Creutz;
            else if (m == "cross_stitch") cfg.model = Model::CrossStitch;
            else fail("model must be \"creutz\" or \"cross_stitch\"");
        } else if (key == "params") {
            apply_params_json(value, cfg.params, &cfg.params_keys);
        } else if (key == "spectrum") {
            if (!value.is_object()) fail("'spectrum' block must be an object");
            cfg.command = CommandKind::Spectrum;
            ++blocks;
        } else if (key == "sweep") {
            cfg.command = CommandKind::Sweep;
            cfg.sweep = parse_sweep(value);
            ++blocks;
        } else if (key == "evolve") {
            cfg.command = CommandKind::Evolve;
            cfg.evolve = parse_evolve(value);
            ++blocks;
        } else if (key == "cls") {
            cfg.command = CommandKind::Cls;
            cfg.cls = parse_cls(value);
            ++blocks;
        } else if (key == "resonator") {
            cfg.command = CommandKind::Resonator;
            cfg.resonator = parse_resonator(value);
            ++blocks;
        } else {
            fail("unknown top-level field '" + key + "'");
        }
    }
    if (blocks != 1)
        fail("config must contain exactly one command block "
             "(spectrum, sweep, evolve, cls or resonator), found " +
             std::to_string(blocks));
    cfg.params.validate();
    if (cfg.model == Model::CrossStitch && cfg.params.Gamma != 0.0)
        fail("model \"cross_stitch\" requires params.Gamma = 0");
    return cfg;
}

LatticeParams apply_explicit_params(const RunConfig& cfg, LatticeParams base) {
    auto has = [&cfg](const char* key) {
        return std::find(cfg.params_keys.begin(), cfg.params_keys.end(), key) !=
               cfg.params_keys.end();
    };
    if (has("J")) base.J = cfg.params.J;
    if (has("Gamma")) base.Gamma = cfg.params.Gamma;
    if (has("Phi1")) base.Phi1 = cfg.params.Phi1;
    if (has("Phi2")) base.Phi2 = cfg.params.Phi2;
    if (has("N")) base.N = cfg.params.N;
    if (has("boundary")) base.boundary = cfg.params.boundary;
    return base;
}

} // namespace abcage

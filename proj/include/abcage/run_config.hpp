#pragma once

#include "abcage/lattice.hpp"
#include "abcage/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abcage {

enum class Model { CrossStitch, Creutz };
enum class CommandKind { Spectrum, Sweep, Evolve, Cls, Resonator };

struct SweepBlock {
    PhaseAxis axis = PhaseAxis::Phi1;
    int resolution = 100;
};

struct EvolveBlock {
    std::optional<std::string> preset;
    std::optional<StateVector> vector;
    std::optional<std::vector<double>> times;  // explicit grid wins
    std::optional<double> t_max;               // else t_max/samples
    int samples = 400;
};

struct ClsBlock {
    int cell = 1;
    std::string branch = "both";               // plus | minus | both
    std::optional<SiteIndex> decompose;
};

struct ResonatorBlock {
    double kappa = 0.1;
    std::vector<double> gammas;
    std::optional<double> gain;                // nullopt = balanced (kappa^2/gamma)
    std::optional<double> horizon;             // nullopt = 1/Gamma_eff
    int samples = 200;
};

// One JSON run configuration: a model, its parameters and exactly one
// command block. `params_keys` remembers which parameter fields the file set
// explicitly so figure presets can fill in the rest.
struct RunConfig {
    Model model = Model::Creutz;
    LatticeParams params;
    std::vector<std::string> params_keys;
    CommandKind command = CommandKind::Spectrum;
    SweepBlock sweep;
    EvolveBlock evolve;
    ClsBlock cls;
    ResonatorBlock resonator;
};

// Parses a config document (JSON text). Throws ConfigError with field
// diagnostics on malformed input.
RunConfig parse_run_config(const std::string& json_text);

// Applies the explicitly-set parameter fields of `cfg` on top of `base`
// (used when a preset supplies the figure's own parameters).
LatticeParams apply_explicit_params(const RunConfig& cfg, LatticeParams base);

} // namespace abcage

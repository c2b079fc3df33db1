#include "abcage/commands.hpp"
#include "abcage/run_config.hpp"
#include "abcage/types.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    bool svg = false;
    // parameter overrides (flags win over config fields)
    std::optional<std::string> model;
    std::optional<double> J, Gamma, Phi1, Phi2;
    std::optional<int> N;
    std::optional<std::string> boundary;
};

std::string read_config_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw abcage::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_overrides(const Options& opt, abcage::RunConfig& cfg) {
    using abcage::Boundary;
    using abcage::Model;
    if (opt.model) {
        if (*opt.model == "creutz") cfg.model = Model::Creutz;
        else if (*opt.model == "cross_stitch") cfg.model = Model::CrossStitch;
        else throw abcage::ConfigError("--model must be creutz or cross_stitch");
    }
    auto set = [&cfg](const char* key, auto value, auto field) {
        cfg.params.*field = value;
        cfg.params_keys.push_back(key);
    };
    if (opt.J) set("J", *opt.J, &abcage::LatticeParams::J);
    if (opt.Gamma) set("Gamma", *opt.Gamma, &abcage::LatticeParams::Gamma);
    if (opt.Phi1) set("Phi1", *opt.Phi1, &abcage::LatticeParams::Phi1);
    if (opt.Phi2) set("Phi2", *opt.Phi2, &abcage::LatticeParams::Phi2);
    if (opt.N) set("N", *opt.N, &abcage::LatticeParams::N);
    if (opt.boundary) {
        if (*opt.boundary == "open") cfg.params.boundary = Boundary::Open;
        else if (*opt.boundary == "periodic") cfg.params.boundary = Boundary::Periodic;
        else throw abcage::ConfigError("--boundary must be open or periodic");
        cfg.params_keys.push_back("boundary");
    }
    cfg.params.validate();
    if (cfg.model == Model::CrossStitch && cfg.params.Gamma != 0.0)
        throw abcage::ConfigError("model cross_stitch requires Gamma = 0");
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path,
                    "JSON run configuration (path or - for stdin)")
        ->required();
    cmd->add_option("--out", opt.out_dir, "output directory (default .)");
    cmd->add_flag("--svg", opt.svg, "also emit decorative SVG plots");
    cmd->add_option("--model", opt.model, "override model (creutz|cross_stitch)");
    cmd->add_option("--J", opt.J, "override coupling J");
    cmd->add_option("--Gamma", opt.Gamma, "override imaginary coupling Gamma");
    cmd->add_option("--Phi1", opt.Phi1, "override intercell phase Phi1");
    cmd->add_option("--Phi2", opt.Phi2, "override intracell phase Phi2");
    cmd->add_option("--N", opt.N, "override unit-cell count N");
    cmd->add_option("--boundary", opt.boundary, "override boundary (open|periodic)");
}

const char* command_name(abcage::CommandKind kind) {
    switch (kind) {
        case abcage::CommandKind::Spectrum: return "spectrum";
        case abcage::CommandKind::Sweep: return "sweep";
        case abcage::CommandKind::Evolve: return "evolve";
        case abcage::CommandKind::Cls: return "cls";
        case abcage::CommandKind::Resonator: return "resonator";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abcage: spectra, compact localized states and dynamics of "
                 "non-Hermitian Aharonov-Bohm cages"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::pair<std::string, abcage::CommandKind>> kinds = {
        {"spectrum", abcage::CommandKind::Spectrum},
        {"sweep", abcage::CommandKind::Sweep},
        {"evolve", abcage::CommandKind::Evolve},
        {"cls", abcage::CommandKind::Cls},
        {"resonator", abcage::CommandKind::Resonator}};
    for (auto& [name, kind] : kinds)
        add_common(app.add_subcommand(name), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // CLI11 prints its own diagnostics / help
    }

    try {
        abcage::RunConfig cfg =
            abcage::parse_run_config(read_config_text(opt.config_path));
        apply_overrides(opt, cfg);

        const std::string requested = app.get_subcommands().front()->get_name();
        if (requested != command_name(cfg.command))
            throw abcage::ConfigError("config contains a '" +
                                      std::string(command_name(cfg.command)) +
                                      "' block but the '" + requested +
                                      "' command was requested");

        const auto files = abcage::run_command(cfg, opt.out_dir, opt.svg);
        for (const std::string& f : files) std::cout << f << "\n";
        return 0;
    } catch (const abcage::ConfigError& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::InvalidParameter& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::IndexError& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::UnsupportedRegime& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::DegenerateBasis& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::NoRealPeriod& e) {
        std::cerr << "abcage: error: config: " << e.what() << "\n";
        return 2;
    } catch (const abcage::Error& e) {
        std::cerr << "abcage: error: numerical: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "abcage: error: internal: " << e.what() << "\n";
        return 3;
    }
}

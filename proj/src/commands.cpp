#include "abcage/commands.hpp"

#include "abcage/cls.hpp"
#include "abcage/csv.hpp"
#include "abcage/dynamics.hpp"
#include "abcage/presets.hpp"
#include "abcage/resonator.hpp"
#include "abcage/spectral.hpp"
#include "abcage/svg.hpp"

#include <cmath>
#include <filesystem>

namespace abcage {

namespace {

std::string join(const std::string& dir, const std::string& file) {
    return (std::filesystem::path(dir) / file).string();
}

ComplexMatrix build_model(Model model, const LatticeParams& params) {
    return model == Model::CrossStitch ? build_cross_stitch(params)
                                       : build_creutz(params);
}

std::vector<std::string> cmd_spectrum(const RunConfig& cfg,
                                      const std::string& out_dir, bool svg) {
    const Spectrum s = eig(build_model(cfg.model, cfg.params));
    std::vector<CsvRow> rows;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i)
        rows.push_back({std::to_string(i),
                        format_double(s.eigenvalues[i].real()),
                        format_double(s.eigenvalues[i].imag())});
    const std::string csv = join(out_dir, "spectrum.csv");
    write_csv(csv, {"index", "re_energy", "im_energy"}, rows);
    std::vector<std::string> files{csv};
    if (svg) {
        ScatterSeries re{"black", {}}, im{"red", {}};
        for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
            re.points.emplace_back(double(i), s.eigenvalues[i].real());
            im.points.emplace_back(double(i), s.eigenvalues[i].imag());
        }
        const std::string path = join(out_dir, "spectrum.svg");
        svg_scatter(path, "spectrum (black Re, red Im)", {re, im});
        files.push_back(path);
    }
    return files;
}

std::vector<std::string> cmd_sweep(const RunConfig& cfg,
                                   const std::string& out_dir, bool svg) {
    if (cfg.model == Model::CrossStitch && cfg.params.Gamma != 0.0)
        throw ConfigError("sweep: cross_stitch model requires Gamma = 0");
    const SweepResult sr =
        sweep_phase(cfg.params, cfg.sweep.axis, cfg.sweep.resolution);
    std::vector<CsvRow> rows;
    for (size_t i = 0; i < sr.phases.size(); ++i)
        for (size_t lvl = 0; lvl < sr.spectra[i].size(); ++lvl)
            rows.push_back({format_double(sr.phases[i]), std::to_string(lvl),
                            format_double(sr.spectra[i][lvl].real()),
                            format_double(sr.spectra[i][lvl].imag()),
                            format_double(sr.flatness[i]),
                            format_double(sr.coalescence[i])});
    const std::string csv = join(out_dir, "sweep.csv");
    write_csv(csv,
              {"phase", "level", "re_energy", "im_energy", "flatness",
               "coalescence"},
              rows);
    std::vector<std::string> files{csv};
    if (svg) {
        ScatterSeries re{"black", {}}, im{"red", {}};
        for (size_t i = 0; i < sr.phases.size(); ++i) {
            for (const Complex& e : sr.spectra[i]) {
                re.points.emplace_back(sr.phases[i], e.real());
                im.points.emplace_back(sr.phases[i], e.imag());
            }
        }
        const std::string path = join(out_dir, "sweep.svg");
        svg_scatter(path,
                    std::string("sweep over ") +
                        (sr.axis == PhaseAxis::Phi1 ? "Phi1" : "Phi2") +
                        " (black Re, red Im)",
                    {re, im});
        files.push_back(path);
    }
    return files;
}

std::vector<double> default_time_grid(const LatticeParams& p, int samples,
                                      std::optional<double> t_max) {
    double tmax;
    if (t_max) {
        tmax = *t_max;
    } else if (p.at_pi_half_phases() && p.Gamma < p.J) {
        tmax = 4.0 * period(p);
    } else if (p.Gamma > p.J) {
        tmax = std::min(5.0 / (p.Gamma - p.J), 20.0 / p.J);
    } else {
        tmax = 20.0 / p.J;
    }
    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i)
        times[i] = tmax * i / (samples - 1);
    return times;
}

std::vector<std::string> cmd_evolve(const RunConfig& cfg,
                                    const std::string& out_dir, bool svg) {
    LatticeParams params = cfg.params;
    StateVector psi0;
    if (cfg.evolve.preset) {
        const Preset preset = resolve_preset(*cfg.evolve.preset, cfg.params);
        params = apply_explicit_params(cfg, preset.params);
        psi0 = preset.psi0;
        if (psi0.size() != params.sites())
            throw ConfigError("evolve: preset '" + preset.name +
                              "' is incompatible with N = " +
                              std::to_string(params.N));
    } else {
        psi0 = *cfg.evolve.vector;
        if (psi0.size() != params.sites())
            throw ConfigError("evolve: initial vector has " +
                              std::to_string(psi0.size()) +
                              " entries, expected 2N = " +
                              std::to_string(params.sites()));
    }
    const ComplexMatrix H = build_model(cfg.model, params);
    const std::vector<double> times =
        cfg.evolve.times ? *cfg.evolve.times
                         : default_time_grid(params, cfg.evolve.samples,
                                             cfg.evolve.t_max);
    const Trajectory traj = evolve(H, psi0, times);

    std::vector<CsvRow> rows;
    for (size_t ti = 0; ti < traj.times.size(); ++ti) {
        const double total = traj.total_intensity[ti];
        for (Eigen::Index sIdx = 0; sIdx < traj.states[ti].size(); ++sIdx) {
            const Complex amp = traj.states[ti][sIdx];
            const double inten = traj.site_intensity[ti][sIdx];
            rows.push_back({format_double(traj.times[ti]),
                            std::to_string(sIdx + 1), // captions' 1-based site
                            format_double(amp.real()), format_double(amp.imag()),
                            format_double(inten),
                            format_double(total > 0.0 ? inten / total : 0.0)});
        }
    }
    const std::string csv = join(out_dir, "evolve.csv");
    write_csv(csv,
              {"t", "site", "re_psi", "im_psi", "intensity",
               "normalized_intensity"},
              rows);

    std::vector<CsvRow> totals;
    for (size_t ti = 0; ti < traj.times.size(); ++ti)
        totals.push_back({format_double(traj.times[ti]),
                          format_double(traj.total_intensity[ti])});
    const std::string total_csv = join(out_dir, "evolve_total.csv");
    write_csv(total_csv, {"t", "total_intensity"}, totals);

    std::vector<std::string> files{csv, total_csv};
    if (svg) {
        std::vector<std::vector<double>> heat;
        for (size_t ti = 0; ti < traj.times.size(); ++ti) {
            const double total = traj.total_intensity[ti];
            std::vector<double> col(traj.site_intensity[ti].size());
            for (Eigen::Index sIdx = 0; sIdx < traj.site_intensity[ti].size(); ++sIdx)
                col[sIdx] = total > 0.0 ? traj.site_intensity[ti][sIdx] / total : 0.0;
            heat.push_back(std::move(col));
        }
        const std::string path = join(out_dir, "evolve.svg");
        svg_heatmap(path, "normalized site intensity (site down, time right)", heat);
        files.push_back(path);
    }
    return files;
}

std::vector<std::string> cmd_cls(const RunConfig& cfg,
                                 const std::string& out_dir, bool /*svg*/) {
    const ComplexMatrix H = build_model(cfg.model, cfg.params);
    std::vector<Branch> branches;
    if (cfg.cls.branch == "plus") branches = {Branch::Plus};
    else if (cfg.cls.branch == "minus") branches = {Branch::Minus};
    else branches = {Branch::Plus, Branch::Minus};

    std::vector<CsvRow> rows;
    for (Branch b : branches) {
        const CompactState state = build_cls(cfg.params, cfg.cls.cell, b);
        const double residual = verify_cls(H, state);
        for (int i = 0; i < 4; ++i) {
            rows.push_back({b == Branch::Plus ? "plus" : "minus",
                            std::to_string(cfg.cls.cell),
                            std::to_string(state.window_start.flat() + 1 + i),
                            format_double(state.amplitudes[i].real()),
                            format_double(state.amplitudes[i].imag()),
                            format_double(state.energy.real()),
                            format_double(state.energy.imag()),
                            format_double(residual)});
        }
    }
    const std::string csv = join(out_dir, "cls.csv");
    write_csv(csv,
              {"branch", "cell", "site", "re_amplitude", "im_amplitude",
               "re_energy", "im_energy", "residual"},
              rows);
    std::vector<std::string> files{csv};

    if (cfg.cls.decompose) {
        const CLSDecomposition d =
            decompose_single_site(cfg.params, *cfg.cls.decompose);
        std::vector<CsvRow> drows;
        for (int i = 0; i < 4; ++i) {
            const Complex sign = -d.basis[i].amplitudes[0]; // the s of [-s,s,1,1]
            drows.push_back({std::to_string(i),
                             format_double(d.coefficients[i].real()),
                             format_double(d.coefficients[i].imag()),
                             std::to_string(d.basis[i].window_start.cell),
                             format_double(sign.real()),
                             format_double(sign.imag()),
                             format_double(d.basis[i].energy.real()),
                             format_double(d.basis[i].energy.imag())});
        }
        const std::string dcsv = join(out_dir, "cls_decomposition.csv");
        write_csv(dcsv,
                  {"term", "re_coefficient", "im_coefficient", "plaquette_cell",
                   "re_sign", "im_sign", "re_energy", "im_energy"},
                  drows);
        files.push_back(dcsv);
    }
    return files;
}

std::vector<std::string> cmd_resonator(const RunConfig& cfg,
                                       const std::string& out_dir,
                                       bool /*svg*/) {
    std::vector<CsvRow> rows;
    for (double gamma : cfg.resonator.gammas) {
        ResonatorParams p;
        p.kappa = cfg.resonator.kappa;
        p.gamma = gamma;
        p.gain = cfg.resonator.gain ? *cfg.resonator.gain : p.gamma_eff();
        const double g_eff = p.gamma_eff();
        const double horizon = cfg.resonator.horizon
                                   ? *cfg.resonator.horizon
                                   : (g_eff > 0.0 ? 1.0 / g_eff : 1.0);
        const ReductionResult r =
            reduction_error(p, horizon, cfg.resonator.samples);
        rows.push_back({format_double(p.kappa > 0.0 ? gamma / p.kappa : 0.0),
                        format_double(g_eff), format_double(r.max_error)});
    }
    const std::string csv = join(out_dir, "resonator.csv");
    write_csv(csv, {"gamma_over_kappa", "gamma_eff", "reduction_error"}, rows);
    return {csv};
}

} // namespace

std::vector<std::string> run_command(const RunConfig& cfg,
                                     const std::string& out_dir, bool svg) {
    std::filesystem::create_directories(out_dir);
    switch (cfg.command) {
        case CommandKind::Spectrum: return cmd_spectrum(cfg, out_dir, svg);
        case CommandKind::Sweep: return cmd_sweep(cfg, out_dir, svg);
        case CommandKind::Evolve: return cmd_evolve(cfg, out_dir, svg);
        case CommandKind::Cls: return cmd_cls(cfg, out_dir, svg);
        case CommandKind::Resonator: return cmd_resonator(cfg, out_dir, svg);
    }
    throw Error("run_command: unreachable");
}

} // namespace abcage

#include "abcage/presets.hpp"

#include <cmath>
#include <vector>

namespace abcage {

namespace {

LatticeParams figure_params(double gamma) {
    LatticeParams p;
    p.J = 1.0;
    p.Gamma = gamma;
    p.Phi1 = half_pi;
    p.Phi2 = half_pi;
    p.N = 7;
    p.boundary = Boundary::Open;
    return p;
}

StateVector from_sites(const std::vector<std::pair<int, double>>& entries) {
    StateVector v = StateVector::Zero(14);
    const double r = 1.0 / std::sqrt(2.0);
    for (const auto& [site, sign] : entries) v[site - 1] = sign * r; // 1-based sites
    return v;
}

StateVector unit_site(int flat, int n) {
    StateVector v = StateVector::Zero(n);
    v[flat] = 1.0;
    return v;
}

// "siteA(3)" / "siteB(5)" -> cell number, or -1 when the name doesn't match.
int parse_site_preset(const std::string& name, Sublattice& sub) {
    if (name.size() < 8 || name.compare(0, 4, "site") != 0 || name.back() != ')')
        return -1;
    if (name[4] == 'A') sub = Sublattice::A;
    else if (name[4] == 'B') sub = Sublattice::B;
    else return -1;
    if (name[5] != '(') return -1;
    try {
        size_t used = 0;
        const int cell = std::stoi(name.substr(6, name.size() - 7), &used);
        if (used != name.size() - 7) return -1;
        return cell;
    } catch (const std::exception&) {
        return -1;
    }
}

} // namespace

Preset resolve_preset(const std::string& name, const LatticeParams& fallback) {
    Preset preset;
    preset.name = name;

    if (name == "fig4a" || name == "fig4b") {
        preset.params = figure_params(name == "fig4a" ? 0.2 : 0.9);
        preset.psi0 = unit_site(4, 14); // site 5, the A leg of cell 3
        return preset;
    }
    if (name == "fig5a") {
        preset.params = figure_params(0.5);
        preset.psi0 = from_sites({{5, 1.0}, {8, -1.0}});
        return preset;
    }
    if (name == "fig5b") {
        preset.params = figure_params(0.5);
        preset.psi0 = from_sites({{6, 1.0}, {8, 1.0}});
        return preset;
    }
    if (name == "fig5c") {
        preset.params = figure_params(0.5);
        preset.psi0 = from_sites({{6, 1.0}, {7, 1.0}});
        return preset;
    }
    if (name == "fig6a") {
        preset.params = figure_params(1.5);
        preset.psi0 = from_sites({{5, 1.0}, {8, 1.0}});
        return preset;
    }
    if (name == "fig6b") {
        preset.params = figure_params(1.5);
        preset.psi0 = from_sites({{6, 1.0}, {7, -1.0}});
        return preset;
    }
    if (name == "fig6c") {
        preset.params = figure_params(1.5);
        preset.psi0 = from_sites({{5, 1.0}, {6, -1.0}});
        return preset;
    }
    if (name == "edgeL" || name == "edgeR") {
        preset.params = figure_params(0.5);
        preset.psi0 = name == "edgeL" ? from_sites({{1, 1.0}, {2, 1.0}})
                                      : from_sites({{13, 1.0}, {14, -1.0}});
        return preset;
    }

    Sublattice sub = Sublattice::A;
    const int cell = parse_site_preset(name, sub);
    if (cell > 0) {
        fallback.validate();
        SiteIndex site(cell, sub);
        site.check_range(fallback.N);
        preset.params = fallback;
        preset.psi0 = unit_site(site.flat(), fallback.sites());
        return preset;
    }

    throw ConfigError("unknown preset '" + name + "'");
}

} // namespace abcage

#pragma once

#include "abcage/lattice.hpp"
#include "abcage/types.hpp"

#include <string>

namespace abcage {

// A named initial state with the model parameters it belongs to. The fig*
// and edge* presets hard-code the 14-site vectors and parameters of the
// corresponding figure captions (J = 1, N = 7, open boundaries,
// Phi = pi/2); siteA(j) / siteB(j) excite one site and keep the caller's
// parameters.
struct Preset {
    std::string name;
    LatticeParams params;
    StateVector psi0;
};

// Resolves one of: fig4a, fig4b, fig5a, fig5b, fig5c, fig6a, fig6b, fig6c,
// edgeL, edgeR, siteA(j), siteB(j). Throws ConfigError for unknown names or
// out-of-range site presets.
Preset resolve_preset(const std::string& name, const LatticeParams& fallback);

} // namespace abcage

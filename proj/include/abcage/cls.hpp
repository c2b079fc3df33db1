#pragma once

#include "abcage/lattice.hpp"
#include "abcage/types.hpp"

#include <array>

namespace abcage {

// Compact localized state on one square plaquette: four sites
// [A_j, B_j, A_{j+1}, B_{j+1}] carrying amplitudes [-s, s, 1, 1], every other
// site exactly zero. The sign s is one of
//   alpha = (Gamma - sqrt(Gamma^2 - J^2)) / J,
//   beta  = (Gamma + sqrt(Gamma^2 - J^2)) / J        (principal square root),
// and the eigenvalue is E = i(Gamma - J s), i.e. +-sqrt(J^2 - Gamma^2).
// Which of alpha/beta belongs to which energy branch flips across the
// exceptional point, so build_cls fixes s from the requested energy via
// s = (Gamma + i E)/J rather than trusting a fixed label.
// Amplitudes are stored in the unnormalized [-s, s, 1, 1] gauge.
struct CompactState {
    SiteIndex window_start;               // A_j, flat index 2*(cell-1)
    std::array<Complex, 4> amplitudes;    // on [A_j, B_j, A_{j+1}, B_{j+1}]
    Complex energy;
    Complex alpha;
    Complex beta;

    // Zero-padded 2N-site vector with the window placed at window_start.
    StateVector embedded(int N) const;
    // Unit-2-norm copy of the amplitudes.
    std::array<Complex, 4> normalized_amplitudes() const;
};

// Expansion of a single-site excitation into the four CLSs living on its two
// flanking plaquettes.
struct CLSDecomposition {
    std::array<Complex, 4> coefficients;
    std::array<CompactState, 4> basis;    // [left alpha, left beta, right alpha, right beta]
};

// CLS on the plaquette spanning cells (cell, cell+1); requires
// Phi1 = Phi2 = pi/2 and 1 <= cell <= N-1.
CompactState build_cls(const LatticeParams& params, int cell, Branch branch);

// ||H psi - E psi||_2 with the state embedded in zeros; < 1e-12 for a valid
// CLS in the bulk under either boundary condition.
double verify_cls(const ComplexMatrix& H, const CompactState& state);

// Decompose the single-site excitation at `site` (interior: cell in 2..N-1)
// into four CLSs. Throws DegenerateBasis at the exceptional point J = Gamma,
// where alpha = beta and the CLS basis is incomplete.
CLSDecomposition decompose_single_site(const LatticeParams& params, SiteIndex site);

} // namespace abcage

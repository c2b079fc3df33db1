#pragma once

#include "abcage/types.hpp"

namespace abcage {

// Model parameters of the generalized cross-stitch lattice / non-Hermitian
// Creutz ladder. The intercell hops carry the nonreciprocal phase Phi1
// (e^{-i Phi1} J/2 on the A row, e^{+i Phi1} J/2 on the B row, plus Hermitian
// conjugates); the intracell rung carries e^{i Phi2} Gamma on BOTH directions,
// which is what makes the ladder non-Hermitian. Phi1 = Phi2 = pi/2 gives the
// couplings -iJ/2, +iJ/2 and iGamma.
struct LatticeParams {
    double J = 1.0;          // intercell coupling strength, J > 0
    double Gamma = 0.0;      // intracell (imaginary-coupling) strength, >= 0
    double Phi1 = half_pi;   // intercell Peierls phase (radians)
    double Phi2 = half_pi;   // intracell phase (radians)
    int N = 7;               // number of unit cells, >= 2
    Boundary boundary = Boundary::Open;

    void validate() const;
    int sites() const { return 2 * N; }
    // True when both phases equal pi/2 to within `tol`.
    bool at_pi_half_phases(double tol = 1e-9) const;
};

// Site bookkeeping. Cells are 1-based (as in the figures), the flat index is
// 0-based: flat = 2*(cell-1) + (0 for A, 1 for B). The 1-based "site s" used
// in the figure captions equals flat + 1.
struct SiteIndex {
    int cell = 1;
    Sublattice sub = Sublattice::A;

    SiteIndex() = default;
    SiteIndex(int cell_, Sublattice sub_) : cell(cell_), sub(sub_) {}

    int flat() const { return 2 * (cell - 1) + (sub == Sublattice::A ? 0 : 1); }
    static SiteIndex from_flat(int flat_index);
    // Validates 1 <= cell <= N.
    void check_range(int N) const;
};

// Hamiltonian of the generalized cross-stitch lattice (Gamma must be 0):
// intercell hops only, Hermitian for every Phi1. 2N x 2N.
ComplexMatrix build_cross_stitch(const LatticeParams& params);

// Hamiltonian of the non-Hermitian Creutz ladder: the cross-stitch hops plus
// the reciprocal intracell block e^{i Phi2} Gamma sigma_x in each cell.
// Reduces exactly to build_cross_stitch when Gamma = 0.
ComplexMatrix build_creutz(const LatticeParams& params);

// 2x2 Bloch Hamiltonian at momentum k (interpreted 2pi-periodically). At
// Phi1 = Phi2 = pi/2 this is
//   [[ J sin k,           i Gamma - i J cos k ],
//    [ i Gamma + i J cos k,        -J sin k  ]].
ComplexMatrix bloch(const LatticeParams& params, double k);

// Change of basis to the decoupled-dimer picture: conjugates H by the
// per-cell unitary that maps (A_j, B_j) onto the symmetric/antisymmetric
// pair ((A_j+B_j)/sqrt2, (A_j-B_j)/sqrt2). In the new basis the ladder
// splits into dimers that straddle adjacent cells, pairing component 2 of
// cell j with component 1 of cell j+1 (coupling of magnitude J), and the
// intracell block i*Gamma*sigma_x becomes gain/loss +-i*Gamma on the dimer
// diagonal. H must be 2N x 2N in the standard site ordering.
ComplexMatrix dimer_transform(const ComplexMatrix& H, int N);

} // namespace abcage

#pragma once

#include "abcage/lattice.hpp"
#include "abcage/types.hpp"

#include <utility>
#include <vector>

namespace abcage {

// Result of a dense (generally non-Hermitian) diagonalization. Eigenpairs
// are sorted by (Re, Im) of the eigenvalue; eigenvector columns have unit
// 2-norm with the largest-magnitude entry rotated to be real positive.
struct Spectrum {
    StateVector eigenvalues;
    ComplexMatrix right_eigenvectors;
    // max over clusters of nearly-equal eigenvalues of
    // 1 - min pairwise sin(angle) between their eigenvectors;
    // ~1 for a defective (exceptional) pair, 0 when no cluster exists.
    double defectiveness = 0.0;
    // max_i ||H v_i - lambda_i v_i||_2
    double residual = 0.0;
};

struct SweepResult {
    PhaseAxis axis = PhaseAxis::Phi1;
    std::vector<double> phases;                     // strictly increasing, in [0, 2pi)
    std::vector<std::vector<Complex>> spectra;      // per-phase sorted eigenvalues
    std::vector<double> flatness;                   // per-phase Bloch-band flatness
    std::vector<double> coalescence;                // per-phase defectiveness
};

// Dense eigendecomposition (Hessenberg reduction + shifted QR via Eigen's
// ComplexEigenSolver). Throws EigensolverError on non-convergence.
Spectrum eig(const ComplexMatrix& H);

// Max deviation of the matched Bloch bands from their value at k = 0 over a
// gridsize-point grid on [-pi, pi]. Bands are matched by continuation from
// the grid start so complex eigenvalue ordering cannot fake dispersion.
// Exactly 0 (to roundoff) for a perfect AB cage.
double flatness(const LatticeParams& params, int gridsize);

// Closed-form flat-band energies +-sqrt(J^2 + e^{2 i Phi2} Gamma^2), valid
// only at Phi1 = pi/2 (throws UnsupportedRegime otherwise). At Phi2 = pi/2
// this is +-sqrt(J^2 - Gamma^2).
std::pair<Complex, Complex> band_energy_analytic(const LatticeParams& params);

// Exceptional-point coalescence metric: eigenvalues are clustered at
// |d lambda| < 1e-6; within each cluster the minimal pairwise eigenvector
// angle sine is computed and 1 - min sin(angle) is returned (maximized over
// clusters). > 0.999 flags a defective pair; 0 when all eigenvalues are
// separated.
double ep_defectiveness(const ComplexMatrix& H);

// Sweep Phi1 or Phi2 over [0, 2pi) with `count` samples (the other phase is
// held at its params value), recording the full real-space spectrum plus
// flatness and coalescence per sample.
SweepResult sweep_phase(const LatticeParams& params, PhaseAxis which, int count);

} // namespace abcage

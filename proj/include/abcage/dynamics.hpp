#pragma once

#include "abcage/lattice.hpp"
#include "abcage/types.hpp"

#include <vector>

namespace abcage {

// Time-sampled evolution. states[i] = exp(-i H times[i]) psi0; each time is
// computed from t = 0 (no step-wise error accumulation). Times are in units
// of 1/J.
struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    std::vector<Eigen::VectorXd> site_intensity;  // |psi_s|^2 per time
    std::vector<double> total_intensity;
    bool normalized = false;

    static Trajectory from_states(std::vector<double> times,
                                  std::vector<StateVector> states,
                                  bool normalized = false);
    // Copy with each state rescaled to unit total intensity (Fig.-6 style
    // presentation for the growing regime).
    Trajectory normalized_copy() const;
};

// Smallest contiguous flat-site interval outside which every site intensity
// stays below `threshold` at all sampled times. `empty` when nothing reaches
// the threshold. Flat indices are 0-based; the captions' 1-based site s is
// lo+1 .. hi+1.
struct SiteInterval {
    int lo = 0;
    int hi = -1;
    bool empty = true;
    int size() const { return empty ? 0 : hi - lo + 1; }
};

// Open-boundary edge eigenstate; `residual` is the verified ||H psi - E psi||.
struct EdgeState {
    StateVector state;
    Complex energy;
    double residual = 0.0;
};

// Exact propagation of psi0 through every t in `times` (strictly increasing).
// Uses the spectral decomposition when the eigenvector matrix is well
// conditioned (cond < 1e6) and falls back to the Pade matrix exponential
// otherwise (the ladder is defective at J = Gamma).
Trajectory evolve(const ComplexMatrix& H, const StateVector& psi0,
                  const std::vector<double>& times);

// Closed-form evolution of a single-site excitation, on its 6-site window
// [A_{j-1}, B_{j-1}, A_j, B_j, A_{j+1}, B_{j+1}] (Upper = A_j excited,
// Lower = B_j). With w = sqrt(J^2 - Gamma^2) and S = sin(wt)/w:
//   Upper: [-J S/2,  J S/2, cos wt, Gamma S,  J S/2,  J S/2]
//   Lower: [-J S/2,  J S/2, Gamma S, cos wt, -J S/2, -J S/2]
// For Gamma > J, w is imaginary and cos/sin continue analytically into
// cosh/sinh growth; at the exceptional point S -> t and cos wt -> 1.
// Requires Phi1 = Phi2 = pi/2.
StateVector analytic_single_site(const LatticeParams& params, Leg leg, double t);

// Embeds a 6-site window centered on the excited cell into a 2N-site vector.
// The excited cell must be interior (2..N-1).
StateVector embed_window(const StateVector& window, int cell, int N);

// Oscillation period T = pi / sqrt(J^2 - Gamma^2); only defined for
// Gamma < J (throws NoRealPeriod otherwise). Requires Phi = pi/2.
double period(const LatticeParams& params);

SiteInterval confinement_region(const Trajectory& traj, double threshold = 1e-10);

// Boundary dimer eigenstates of the open ladder at Phi = pi/2:
// Left = [1,1,0,...,0]/sqrt2 (energy +i Gamma),
// Right = [0,...,0,1,-1]/sqrt2 (energy -i Gamma).
EdgeState edge_state(const LatticeParams& params, Side side);

// Closed-form intensity of the evolved edge state: e^{+2 Gamma t} (Left),
// e^{-2 Gamma t} (Right).
double edge_intensity(const LatticeParams& params, Side side, double t);

} // namespace abcage

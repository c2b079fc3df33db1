#include "abcage/dynamics.hpp"

#include "abcage/expm.hpp"
#include "abcage/spectral.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace abcage {

namespace {

void require_pi_half(const LatticeParams& p, const char* who) {
    if (!p.at_pi_half_phases())
        throw UnsupportedRegime(std::string(who) +
                                ": requires Phi1 = Phi2 = pi/2");
}

// sin(wt)/w, stable through w -> 0 (exceptional point).
Complex sinc_w(Complex w, double t) {
    const Complex x = w * t;
    if (std::abs(x) < 1e-4) {
        const Complex x2 = x * x;
        return t * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0));
    }
    return std::sin(x) / w;
}

} // namespace

Trajectory Trajectory::from_states(std::vector<double> times,
                                   std::vector<StateVector> states,
                                   bool normalized) {
    if (times.size() != states.size())
        throw ShapeError("Trajectory: times and states length mismatch");
    Trajectory traj;
    traj.times = std::move(times);
    traj.states = std::move(states);
    traj.normalized = normalized;
    traj.site_intensity.reserve(traj.states.size());
    traj.total_intensity.reserve(traj.states.size());
    for (const StateVector& psi : traj.states) {
        Eigen::VectorXd in = psi.cwiseAbs2();
        traj.site_intensity.push_back(in);
        traj.total_intensity.push_back(in.sum());
    }
    return traj;
}

Trajectory Trajectory::normalized_copy() const {
    std::vector<StateVector> scaled;
    scaled.reserve(states.size());
    for (size_t i = 0; i < states.size(); ++i) {
        const double tot = total_intensity[i];
        scaled.push_back(tot > 0.0 ? StateVector(states[i] / std::sqrt(tot))
                                   : states[i]);
    }
    return from_states(times, std::move(scaled), true);
}

Trajectory evolve(const ComplexMatrix& H, const StateVector& psi0,
                  const std::vector<double>& times) {
    if (H.rows() != H.cols())
        throw ShapeError("evolve: H must be square");
    if (psi0.size() != H.rows())
        throw ShapeError("evolve: psi0 length must match H dimension");
    if (times.empty())
        throw InvalidParameter("evolve: need at least one sample time");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw InvalidParameter("evolve: times must be strictly increasing");

    const Complex minus_i(0.0, -1.0);
    std::vector<StateVector> states;
    states.reserve(times.size());

    const Spectrum s = eig(H);
    const Eigen::JacobiSVD<ComplexMatrix> svd(s.right_eigenvectors);
    const double smin = svd.singularValues().minCoeff();
    const double cond =
        smin > 0.0 ? svd.singularValues().maxCoeff() / smin
                   : std::numeric_limits<double>::infinity();

    if (cond < 1e6) {
        const StateVector c = s.right_eigenvectors.partialPivLu().solve(psi0);
        for (double t : times) {
            StateVector phase(c.size());
            for (Eigen::Index i = 0; i < c.size(); ++i)
                phase[i] = std::exp(minus_i * s.eigenvalues[i] * t) * c[i];
            states.push_back(s.right_eigenvectors * phase);
        }
    } else {
        // defective (or nearly) spectrum: Pade exponential straight from t = 0
        for (double t : times)
            states.push_back(matrix_exponential(minus_i * t * H) * psi0);
    }
    return Trajectory::from_states(times, std::move(states));
}

StateVector analytic_single_site(const LatticeParams& params, Leg leg, double t) {
    params.validate();
    require_pi_half(params, "analytic_single_site");
    const double J = params.J;
    const double G = params.Gamma;
    const Complex w = std::sqrt(Complex(J * J - G * G, 0.0));
    const Complex S = sinc_w(w, t);
    const Complex c = std::cos(w * t);
    StateVector psi(6);
    if (leg == Leg::Upper)
        psi << -J * S / 2.0, J * S / 2.0, c, G * S, J * S / 2.0, J * S / 2.0;
    else
        psi << -J * S / 2.0, J * S / 2.0, G * S, c, -J * S / 2.0, -J * S / 2.0;
    return psi;
}

StateVector embed_window(const StateVector& window, int cell, int N) {
    if (window.size() != 6)
        throw ShapeError("embed_window: window must have 6 components");
    if (cell < 2 || cell > N - 1)
        throw IndexError("embed_window: excited cell must be interior (2..N-1)");
    StateVector full = StateVector::Zero(2 * N);
    full.segment(2 * (cell - 2), 6) = window;
    return full;
}

double period(const LatticeParams& params) {
    params.validate();
    require_pi_half(params, "period");
    if (params.Gamma >= params.J)
        throw NoRealPeriod("period: spectrum is not real for Gamma >= J");
    return pi / std::sqrt(params.J * params.J - params.Gamma * params.Gamma);
}

SiteInterval confinement_region(const Trajectory& traj, double threshold) {
    if (!(threshold > 0.0))
        throw InvalidParameter("confinement_region: threshold must be > 0");
    SiteInterval interval;
    if (traj.site_intensity.empty()) return interval;
    Eigen::VectorXd peak = Eigen::VectorXd::Zero(traj.site_intensity[0].size());
    for (const auto& in : traj.site_intensity)
        peak = peak.cwiseMax(in);
    for (int sIdx = 0; sIdx < peak.size(); ++sIdx) {
        if (peak[sIdx] >= threshold) {
            if (interval.empty) {
                interval.lo = sIdx;
                interval.empty = false;
            }
            interval.hi = sIdx;
        }
    }
    return interval;
}

EdgeState edge_state(const LatticeParams& params, Side side) {
    params.validate();
    if (params.boundary != Boundary::Open)
        throw UnsupportedRegime("edge_state: defined under open boundaries only");
    require_pi_half(params, "edge_state");
    const int n = params.sites();
    EdgeState e;
    e.state = StateVector::Zero(n);
    const double r = 1.0 / std::sqrt(2.0);
    if (side == Side::Left) {
        e.state[0] = r;
        e.state[1] = r;
        e.energy = Complex(0.0, params.Gamma);
    } else {
        e.state[n - 2] = r;
        e.state[n - 1] = -r;
        e.energy = Complex(0.0, -params.Gamma);
    }
    const ComplexMatrix H = build_creutz(params);
    e.residual = (H * e.state - e.energy * e.state).norm();
    return e;
}

double edge_intensity(const LatticeParams& params, Side side, double t) {
    params.validate();
    if (params.boundary != Boundary::Open)
        throw UnsupportedRegime("edge_intensity: defined under open boundaries only");
    require_pi_half(params, "edge_intensity");
    const double sign = side == Side::Left ? 1.0 : -1.0;
    return std::exp(2.0 * sign * params.Gamma * t);
}

} // namespace abcage

#include "abcage/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace abcage {

namespace {

void check_finite_square(const ComplexMatrix& H, const char* who) {
    if (H.rows() != H.cols())
        throw ShapeError(std::string(who) + ": matrix must be square");
    if (!H.allFinite())
        throw InvalidParameter(std::string(who) + ": matrix entries must be finite");
}

// Clusters of nearly-equal eigenvalues via union-find; n is tiny here.
std::vector<std::vector<int>> eigenvalue_clusters(const StateVector& vals, double tol) {
    const int n = static_cast<int>(vals.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(vals[i] - vals[j]) < tol) parent[find(i)] = find(j);
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& g : groups)
        if (g.size() >= 2) out.push_back(std::move(g));
    return out;
}

double cluster_defectiveness(const StateVector& vals, const ComplexMatrix& vecs) {
    double worst = 0.0;
    for (const auto& cluster : eigenvalue_clusters(vals, 1e-6)) {
        double min_sin = 1.0;
        for (size_t a = 0; a < cluster.size(); ++a) {
            for (size_t b = a + 1; b < cluster.size(); ++b) {
                const Complex dot = vecs.col(cluster[a]).dot(vecs.col(cluster[b]));
                const double c2 = std::min(1.0, std::norm(dot));
                min_sin = std::min(min_sin, std::sqrt(std::max(0.0, 1.0 - c2)));
            }
        }
        worst = std::max(worst, 1.0 - min_sin);
    }
    return worst;
}

} // namespace

Spectrum eig(const ComplexMatrix& H) {
    check_finite_square(H, "eig");
    const int n = static_cast<int>(H.rows());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(H, true);
    if (solver.info() != Eigen::Success)
        throw EigensolverError("eig: QR iteration did not converge",
                               40L * n); // Eigen's default budget: 30-40 sweeps per row

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& raw_vals = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (raw_vals[a].real() != raw_vals[b].real())
            return raw_vals[a].real() < raw_vals[b].real();
        return raw_vals[a].imag() < raw_vals[b].imag();
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.right_eigenvectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        s.eigenvalues[i] = raw_vals[order[i]];
        StateVector v = solver.eigenvectors().col(order[i]);
        v.normalize();
        // deterministic gauge: largest-magnitude entry made real positive
        int imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        const Complex piv = v[imax];
        if (std::abs(piv) > 0.0) v *= std::conj(piv) / std::abs(piv);
        s.right_eigenvectors.col(i) = v;
    }
    s.residual = (H * s.right_eigenvectors -
                  s.right_eigenvectors * s.eigenvalues.asDiagonal())
                     .colwise()
                     .norm()
                     .maxCoeff();
    s.defectiveness = cluster_defectiveness(s.eigenvalues, s.right_eigenvectors);
    return s;
}

double ep_defectiveness(const ComplexMatrix& H) {
    return eig(H).defectiveness;
}

double flatness(const LatticeParams& params, int gridsize) {
    params.validate();
    if (gridsize < 3)
        throw InvalidParameter("flatness: gridsize must be >= 3");

    std::vector<double> grid(gridsize);
    for (int i = 0; i < gridsize; ++i)
        grid[i] = -pi + 2.0 * pi * i / (gridsize - 1);

    // Continuation matching: each point inherits the band assignment of its
    // predecessor (2 bands: keep or swap, whichever is closer in total).
    std::vector<std::array<Complex, 2>> bands(gridsize);
    for (int i = 0; i < gridsize; ++i) {
        const Spectrum s = eig(bloch(params, grid[i]));
        std::array<Complex, 2> cur = {s.eigenvalues[0], s.eigenvalues[1]};
        if (i > 0) {
            const auto& prev = bands[i - 1];
            const double keep = std::abs(cur[0] - prev[0]) + std::abs(cur[1] - prev[1]);
            const double swap = std::abs(cur[1] - prev[0]) + std::abs(cur[0] - prev[1]);
            if (swap < keep) std::swap(cur[0], cur[1]);
        }
        bands[i] = cur;
    }

    int ref = 0;
    for (int i = 1; i < gridsize; ++i)
        if (std::abs(grid[i]) < std::abs(grid[ref])) ref = i;

    double worst = 0.0;
    for (int i = 0; i < gridsize; ++i)
        for (int b = 0; b < 2; ++b)
            worst = std::max(worst, std::abs(bands[i][b] - bands[ref][b]));
    return worst;
}

std::pair<Complex, Complex> band_energy_analytic(const LatticeParams& params) {
    params.validate();
    if (std::abs(params.Phi1 - half_pi) > 1e-9)
        throw UnsupportedRegime(
            "band_energy_analytic: no closed form claimed away from Phi1 = pi/2");
    const Complex e = std::sqrt(Complex(params.J * params.J, 0.0) +
                                std::exp(Complex(0.0, 2.0 * params.Phi2)) *
                                    params.Gamma * params.Gamma);
    return {e, -e};
}

SweepResult sweep_phase(const LatticeParams& params, PhaseAxis which, int count) {
    params.validate();
    if (count < 2)
        throw InvalidParameter("sweep_phase: count must be >= 2");
    SweepResult result;
    result.axis = which;
    result.phases.reserve(count);
    result.spectra.reserve(count);
    result.flatness.reserve(count);
    result.coalescence.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double phase = 2.0 * pi * i / count;
        LatticeParams p = params;
        (which == PhaseAxis::Phi1 ? p.Phi1 : p.Phi2) = phase;
        const Spectrum s = eig(build_creutz(p));
        result.phases.push_back(phase);
        result.spectra.emplace_back(s.eigenvalues.data(),
                                    s.eigenvalues.data() + s.eigenvalues.size());
        result.flatness.push_back(flatness(p, 101));
        result.coalescence.push_back(s.defectiveness);
    }
    return result;
}

} // namespace abcage

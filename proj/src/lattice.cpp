#include "abcage/lattice.hpp"

#include <cmath>

namespace abcage {

void LatticeParams::validate() const {
    if (!(J > 0.0) || !std::isfinite(J))
        throw InvalidParameter("LatticeParams: J must be finite and > 0");
    if (!(Gamma >= 0.0) || !std::isfinite(Gamma))
        throw InvalidParameter("LatticeParams: Gamma must be finite and >= 0");
    if (!std::isfinite(Phi1) || !std::isfinite(Phi2))
        throw InvalidParameter("LatticeParams: phases must be finite");
    if (N < 2)
        throw InvalidParameter("LatticeParams: N must be >= 2");
}

bool LatticeParams::at_pi_half_phases(double tol) const {
    return std::abs(Phi1 - half_pi) <= tol && std::abs(Phi2 - half_pi) <= tol;
}

SiteIndex SiteIndex::from_flat(int flat_index) {
    if (flat_index < 0)
        throw IndexError("SiteIndex: flat index must be >= 0");
    return SiteIndex(flat_index / 2 + 1,
                     flat_index % 2 == 0 ? Sublattice::A : Sublattice::B);
}

void SiteIndex::check_range(int N) const {
    if (cell < 1 || cell > N)
        throw IndexError("SiteIndex: cell " + std::to_string(cell) +
                         " outside 1.." + std::to_string(N));
}

namespace {

// Forward-hop block from cell j to cell j+1, rows (A_j, B_j), columns
// (A_{j+1}, B_{j+1}). At Phi1 = pi/2 the A row is -iJ/2 and the B row +iJ/2.
Eigen::Matrix2cd forward_block(const LatticeParams& p) {
    const Complex ep = std::exp(Complex(0.0, -p.Phi1)) * (p.J / 2.0);
    const Complex em = std::exp(Complex(0.0, p.Phi1)) * (p.J / 2.0);
    Eigen::Matrix2cd T;
    T << ep, ep, em, em;
    return T;
}

// Reciprocal intracell block e^{i Phi2} Gamma sigma_x; not conjugated on the
// reverse direction, hence non-Hermitian for Gamma > 0.
Eigen::Matrix2cd intracell_block(const LatticeParams& p) {
    const Complex c = std::exp(Complex(0.0, p.Phi2)) * p.Gamma;
    Eigen::Matrix2cd C;
    C << 0.0, c, c, 0.0;
    return C;
}

ComplexMatrix build_ladder(const LatticeParams& p, bool with_rungs) {
    const int n = p.sites();
    ComplexMatrix H = ComplexMatrix::Zero(n, n);
    const Eigen::Matrix2cd T = forward_block(p);
    const Eigen::Matrix2cd Td = T.adjoint();
    const Eigen::Matrix2cd C = intracell_block(p);
    for (int j = 0; j < p.N; ++j) {
        if (with_rungs)
            H.block<2, 2>(2 * j, 2 * j) += C;
        if (j + 1 < p.N) {
            H.block<2, 2>(2 * j, 2 * j + 2) += T;
            H.block<2, 2>(2 * j + 2, 2 * j) += Td;
        }
    }
    if (p.boundary == Boundary::Periodic) {
        H.block<2, 2>(2 * (p.N - 1), 0) += T;
        H.block<2, 2>(0, 2 * (p.N - 1)) += Td;
    }
    return H;
}

} // namespace

ComplexMatrix build_cross_stitch(const LatticeParams& params) {
    params.validate();
    if (params.Gamma != 0.0)
        throw InvalidParameter("build_cross_stitch: requires Gamma = 0");
    return build_ladder(params, false);
}

ComplexMatrix build_creutz(const LatticeParams& params) {
    params.validate();
    return build_ladder(params, true);
}

ComplexMatrix bloch(const LatticeParams& params, double k) {
    params.validate();
    if (!std::isfinite(k))
        throw InvalidParameter("bloch: k must be finite");
    const Complex eik = std::exp(Complex(0.0, k));
    ComplexMatrix Hk = forward_block(params) * eik +
                       forward_block(params).adjoint() * std::conj(eik) +
                       intracell_block(params);
    return Hk;
}

ComplexMatrix dimer_transform(const ComplexMatrix& H, int N) {
    if (N < 1)
        throw InvalidParameter("dimer_transform: N must be >= 1");
    if (H.rows() != H.cols() || H.rows() != 2 * N)
        throw ShapeError("dimer_transform: H must be 2N x 2N with N = " +
                         std::to_string(N));
    // Per-cell Hadamard-type block; its columns are the symmetric and
    // antisymmetric combinations of (A_j, B_j). It is unitary and involutive,
    // and it carries diag(i Gamma, -i Gamma) onto i Gamma sigma_x and back.
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd B;
    B << r, r, r, -r;
    ComplexMatrix U = ComplexMatrix::Zero(2 * N, 2 * N);
    for (int j = 0; j < N; ++j)
        U.block<2, 2>(2 * j, 2 * j) = B;
    return U.adjoint() * H * U;
}

} // namespace abcage

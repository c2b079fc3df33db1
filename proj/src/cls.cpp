#include "abcage/cls.hpp"

#include <cmath>

namespace abcage {

namespace {

void require_pi_half(const LatticeParams& p, const char* who) {
    if (!p.at_pi_half_phases())
        throw UnsupportedRegime(std::string(who) +
                                ": requires Phi1 = Phi2 = pi/2");
}

Complex sqrt_g2_minus_j2(const LatticeParams& p) {
    return std::sqrt(Complex(p.Gamma * p.Gamma - p.J * p.J, 0.0));
}

CompactState cls_from_sign(const LatticeParams& p, int cell, Complex s) {
    CompactState state;
    state.window_start = SiteIndex(cell, Sublattice::A);
    state.amplitudes = {-s, s, Complex(1.0), Complex(1.0)};
    state.energy = Complex(0.0, 1.0) * (p.Gamma - p.J * s);
    const Complex root = sqrt_g2_minus_j2(p);
    state.alpha = (p.Gamma - root) / p.J;
    state.beta = (p.Gamma + root) / p.J;
    return state;
}

} // namespace

StateVector CompactState::embedded(int N) const {
    const int start = window_start.flat();
    if (start < 0 || start + 4 > 2 * N)
        throw IndexError("CompactState: window does not fit in 2N sites");
    StateVector v = StateVector::Zero(2 * N);
    for (int i = 0; i < 4; ++i) v[start + i] = amplitudes[i];
    return v;
}

std::array<Complex, 4> CompactState::normalized_amplitudes() const {
    double n2 = 0.0;
    for (const Complex& a : amplitudes) n2 += std::norm(a);
    const double inv = 1.0 / std::sqrt(n2);
    std::array<Complex, 4> out = amplitudes;
    for (Complex& a : out) a *= inv;
    return out;
}

CompactState build_cls(const LatticeParams& params, int cell, Branch branch) {
    params.validate();
    require_pi_half(params, "build_cls");
    if (cell < 1 || cell > params.N - 1)
        throw IndexError("build_cls: plaquette cell must be in 1..N-1");
    const Complex w =
        std::sqrt(Complex(params.J * params.J - params.Gamma * params.Gamma, 0.0));
    const Complex E = branch == Branch::Plus ? w : -w;
    const Complex s = (params.Gamma + Complex(0.0, 1.0) * E) / params.J;
    return cls_from_sign(params, cell, s);
}

double verify_cls(const ComplexMatrix& H, const CompactState& state) {
    if (H.rows() != H.cols() || H.rows() % 2 != 0)
        throw ShapeError("verify_cls: H must be square with even dimension");
    const StateVector psi = state.embedded(static_cast<int>(H.rows()) / 2);
    return (H * psi - state.energy * psi).norm();
}

CLSDecomposition decompose_single_site(const LatticeParams& params, SiteIndex site) {
    params.validate();
    require_pi_half(params, "decompose_single_site");
    site.check_range(params.N);
    if (site.cell < 2 || site.cell > params.N - 1)
        throw IndexError("decompose_single_site: site must be interior "
                         "(cell in 2..N-1, both flanking plaquettes present)");

    const Complex root = sqrt_g2_minus_j2(params);
    const Complex alpha = (params.Gamma - root) / params.J;
    const Complex beta = (params.Gamma + root) / params.J;
    if (std::abs(alpha - beta) < 1e-12)
        throw DegenerateBasis("decompose_single_site: alpha = beta at the "
                              "exceptional point J = Gamma; CLS basis incomplete");

    const Complex denom = 2.0 * alpha - 2.0 * beta;
    CLSDecomposition d;
    d.basis = {cls_from_sign(params, site.cell - 1, alpha),
               cls_from_sign(params, site.cell - 1, beta),
               cls_from_sign(params, site.cell, alpha),
               cls_from_sign(params, site.cell, beta)};
    if (site.sub == Sublattice::A)
        d.coefficients = {-beta / denom, alpha / denom, -1.0 / denom, 1.0 / denom};
    else
        d.coefficients = {-beta / denom, alpha / denom, 1.0 / denom, -1.0 / denom};
    return d;
}

} // namespace abcage

#include "abcage/resonator.hpp"

#include "abcage/expm.hpp"

#include <cmath>

namespace abcage {

void ResonatorParams::validate() const {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw InvalidParameter("ResonatorParams: kappa must be finite and >= 0");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InvalidParameter("ResonatorParams: gamma must be finite and > 0");
    if (!(gain >= 0.0) || !std::isfinite(gain))
        throw InvalidParameter("ResonatorParams: gain must be finite and >= 0");
    if (!std::isfinite(delta))
        throw InvalidParameter("ResonatorParams: delta must be finite");
}

ComplexMatrix full_three_mode(const ResonatorParams& p) {
    p.validate();
    const Complex i(0.0, 1.0);
    ComplexMatrix H(3, 3);
    H << i * p.gain, p.kappa, 0.0,
         p.kappa, -i * p.gamma, p.kappa,
         0.0, p.kappa, i * p.gain;
    return H;
}

ComplexMatrix effective_two_mode(const ResonatorParams& p) {
    p.validate();
    const Complex i(0.0, 1.0);
    const double g_eff = p.gamma_eff();
    const Complex coupling = -i * std::exp(i * p.delta) * g_eff;
    const Complex diag = i * (p.gain - g_eff);
    ComplexMatrix H(2, 2);
    H << diag, coupling, coupling, diag;
    return H;
}

ReductionResult reduction_error(const ResonatorParams& p, double horizon,
                                int samples) {
    p.validate();
    if (!(horizon > 0.0))
        throw InvalidParameter("reduction_error: horizon must be > 0");
    if (samples < 1)
        throw InvalidParameter("reduction_error: samples must be >= 1");

    ReductionResult result;
    result.regime_warning = !p.regime_valid();

    const ComplexMatrix H3 = full_three_mode(p);
    ResonatorParams steady = p;
    steady.delta = 0.0; // coupling sign produced by the elimination itself
    const ComplexMatrix H2 = effective_two_mode(steady);

    StateVector full(3), eff(2);
    full << 1.0, 0.0, 0.0;
    eff << 1.0, 0.0;
    const Complex minus_i(0.0, -1.0);
    for (int k = 1; k <= samples; ++k) {
        const double t = horizon * k / samples;
        const StateVector f = matrix_exponential(minus_i * t * H3) * full;
        const StateVector e = matrix_exponential(minus_i * t * H2) * eff;
        StateVector proj(2);
        proj << f[0], f[2];
        result.max_error = std::max(result.max_error, (proj - e).norm());
    }
    return result;
}

} // namespace abcage

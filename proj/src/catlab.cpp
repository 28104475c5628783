#include "deit/catlab.hpp"

#include <cmath>

namespace deit::catlab {

using fock::DensityOperator;
using fock::MultiModeState;
using num::Complex;

MultiModeState make_entangled_coherent(Complex alpha, double gamma_amp,
                                       const std::array<int, 2>& cutoffs) {
    const MultiModeState joint = fock::tensor(
        {fock::coherent_state(alpha, cutoffs[0]), fock::coherent_state(gamma_amp, cutoffs[1])});
    return ops::cross_kerr(joint, 0, 1, M_PI).normalized();
}

MultiModeState cat_state(double gamma_amp, Parity parity, int cutoff) {
    const MultiModeState plus = fock::coherent_state(gamma_amp, cutoff);
    const MultiModeState minus = fock::coherent_state(-gamma_amp, cutoff);
    MultiModeState out({cutoff});
    const double sign = parity == Parity::Even ? 1.0 : -1.0;
    out.amplitudes() = plus.amplitudes() + sign * minus.amplitudes();
    // exact parity support: zero the suppressed layers
    for (int n = parity == Parity::Even ? 1 : 0; n <= cutoff; n += 2) out.amplitudes()[n] = 0.0;
    const double norm = out.norm();
    if (norm < 1e-12) throw Error("cat_state: null vector (odd cat needs gamma > 0)");
    out.amplitudes() /= norm;
    out.set_lost_weight(plus.lost_weight(), 1e-6);
    return out;
}

HeraldResult herald_cat(const MultiModeState& psi_ab, Complex alpha_lo, HeraldOutcome outcome) {
    if (psi_ab.modes() != 2) throw Error("herald_cat: need a two-mode input");
    const int lo_cutoff = psi_ab.cutoffs()[0];
    const MultiModeState lo = fock::coherent_state(alpha_lo, lo_cutoff);
    // modes: 0 = a, 1 = b, 2 = local oscillator
    const MultiModeState joint = fock::tensor({psi_ab, lo});
    const MultiModeState mixed = ops::beam_splitter(joint, 0, 2);

    const auto project = [&](ops::ClickOutcome on_a, ops::ClickOutcome on_lo) {
        const auto first = ops::click_projection(mixed, 0, on_a);
        const auto second = ops::click_projection(first.state, 2, on_lo);
        const double prob = first.probability * second.probability;
        const DensityOperator rho_b = fock::partial_trace(fock::to_density(second.state), {1});
        return HeraldResult{rho_b, prob};
    };

    switch (outcome) {
        case HeraldOutcome::D1:
            return project(ops::ClickOutcome::Click, ops::ClickOutcome::NoClick);
        case HeraldOutcome::D2:
            return project(ops::ClickOutcome::NoClick, ops::ClickOutcome::Click);
        case HeraldOutcome::None:
            return project(ops::ClickOutcome::NoClick, ops::ClickOutcome::NoClick);
    }
    throw Error("herald_cat: bad outcome");
}

DensityOperator split_cat_density(double gamma_amp, double c, const std::array<int, 2>& cutoffs) {
    if (c < -1.0 || c > 1.0) throw Error("split_cat_density: c outside [-1, 1]");
    const double b = gamma_amp / std::sqrt(2.0);
    const MultiModeState pm =
        fock::tensor({fock::coherent_state(b, cutoffs[0]), fock::coherent_state(-b, cutoffs[1])});
    const MultiModeState mp =
        fock::tensor({fock::coherent_state(-b, cutoffs[0]), fock::coherent_state(b, cutoffs[1])});

    DensityOperator rho(std::vector<int>(cutoffs.begin(), cutoffs.end()));
    const auto& v1 = pm.amplitudes();
    const auto& v2 = mp.amplitudes();
    rho.matrix() = v1 * v1.adjoint() + v2 * v2.adjoint() +
                   c * (v2 * v1.adjoint() + v1 * v2.adjoint());
    rho.normalize();
    return rho;
}

DuanResult duan_S(const DensityOperator& rho, double eta) {
    if (rho.modes() != 2) throw Error("duan_S: need a two-mode state");
    DensityOperator lossy = ops::loss_channel(rho, 0, eta);
    lossy = ops::loss_channel(lossy, 1, eta);

    const fock::QuadratureMoments q = fock::quadrature_moments(lossy, 0, 1);
    // u = x_b + x_c, v = -p_b + p_c over (x_b, p_b, x_c, p_c)
    DuanResult out;
    out.var_u = q.cov(0, 0) + q.cov(2, 2) + 2.0 * q.cov(0, 2);
    out.var_v = q.cov(1, 1) + q.cov(3, 3) - 2.0 * q.cov(1, 3);
    out.S = out.var_u + out.var_v;
    out.inseparable = out.S <= out.separable_bound;
    return out;
}

}  // namespace deit::catlab

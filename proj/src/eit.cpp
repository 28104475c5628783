#include "deit/eit.hpp"

#include <cmath>
#include <sstream>

namespace deit::eit {

using num::Complex;
using num::Matrix;
using num::Vector;

namespace {
constexpr Complex I{0.0, 1.0};
}

double MediumParams::sigma0_a() const {
    return d24 * d24 * omega_a / (2.0 * constants::eps0 * constants::c_light * constants::hbar * gamma);
}

double MediumParams::sigma0_b() const {
    return d26 * d26 * omega_b / (2.0 * constants::eps0 * constants::c_light * constants::hbar * gamma);
}

double MediumParams::single_photon_rabi_a() const {
    return d24 * std::sqrt(omega_a / (2.0 * constants::hbar * constants::eps0 * V));
}

double MediumParams::single_photon_rabi_b() const {
    return d26 * std::sqrt(omega_b / (2.0 * constants::hbar * constants::eps0 * V));
}

void MediumParams::validate() const {
    const double rates[] = {gamma, Delta, Delta_U, Delta_L, Omega_d, omega_a, omega_b};
    for (double r : rates)
        if (!(r > 0.0)) throw Error("MediumParams: rates and frequencies must be positive");
    if (!(d24 > 0.0) || !(d26 > 0.0)) throw Error("MediumParams: dipoles must be positive");
    if (!(N_density > 0.0) || !(V > 0.0) || !(L > 0.0))
        throw Error("MediumParams: density, volume and length must be positive");
}

namespace {

// Shared six-level builder; diag5 carries the level-5 detuning of the chosen
// frame and gamma5 its decay.
Matrix build6(Complex Oa, Complex Ob, double Od, double diag5, double gamma, double gamma5,
              bool include_decay) {
    Matrix h = Matrix::Zero(6, 6);
    const auto couple = [&h](int i, int j, Complex v) {
        h(i - 1, j - 1) += v;
        h(j - 1, i - 1) += std::conj(v);
    };
    couple(4, 1, Od);
    couple(6, 3, Od);
    couple(4, 2, Oa);
    couple(5, 3, Oa);
    couple(6, 2, Ob);
    couple(5, 1, Ob);
    h(4, 4) += diag5;
    if (include_decay) {
        h(3, 3) -= I * gamma;
        h(4, 4) -= I * gamma5;
        h(5, 5) -= I * gamma;
    }
    return h;
}

}  // namespace

Matrix hamiltonian6(Complex Oa, Complex Ob, const MediumParams& p, bool include_decay) {
    return build6(Oa, Ob, p.Omega_d, p.Delta, p.gamma, p.gamma, include_decay);
}

LambdaBranch lambda_branch(Complex Oa, Complex Ob, const MediumParams& p) {
    LambdaBranch out;
    out.lambda_weakfield = 2.0 * constants::hbar * std::norm(Oa) * std::norm(Ob) /
                           ((I * p.gamma - p.Delta) * std::norm(p.Omega_d));
    if (Oa == 0.0 || Ob == 0.0) {
        out.lambda_exact = 0.0;
        out.lambda_weakfield = 0.0;
        return out;
    }

    // Level |5> accumulates the two-photon detuning and linewidth of both
    // dispersive paths, 2(Delta - i gamma); this frame reproduces the
    // weak-field closed form, a single Delta would double it.
    const int steps = 12;
    Vector v = Vector::Zero(6);
    v[1] = 1.0;
    Complex lambda = 0.0;
    for (int s = 1; s <= steps; ++s) {
        const double f = double(s) / steps;
        const Matrix h =
            build6(f * Oa, f * Ob, p.Omega_d, 2.0 * p.Delta, p.gamma, 2.0 * p.gamma, p.gamma > 0.0);
        const num::GeneralEigen eig = num::eig_general(h);
        int best = -1, second = -1;
        double best_ov = -1.0, second_ov = -1.0;
        for (int k = 0; k < 6; ++k) {
            const double ov = std::abs(eig.vectors.col(k).dot(v));
            if (ov > best_ov) {
                second = best;
                second_ov = best_ov;
                best = k;
                best_ov = ov;
            } else if (ov > second_ov) {
                second = k;
                second_ov = ov;
            }
        }
        if (second >= 0 && best_ov - second_ov < 0.05) {
            std::ostringstream os;
            os << "lambda_branch: ambiguous tracking at ramp fraction " << f << ", overlaps "
               << best_ov << " vs " << second_ov;
            throw NumericalError(os.str());
        }
        v = eig.vectors.col(best);
        lambda = eig.values[best];
    }
    out.lambda_exact = constants::hbar * lambda;
    return out;
}

Complex polarizability_a(const MediumParams& p, Complex Ob) {
    return 2.0 * p.N_density * p.sigma0_a() * p.gamma * std::norm(Ob) /
           ((p.Delta - I * p.gamma) * std::norm(p.Omega_d));
}

Complex polarizability_b(const MediumParams& p, Complex Oa) {
    return 2.0 * p.N_density * p.sigma0_b() * p.gamma * std::norm(Oa) /
           ((p.Delta - I * p.gamma) * std::norm(p.Omega_d));
}

PropagationConstants propagation_constants(const MediumParams& p) {
    p.validate();
    PropagationConstants out{};
    out.sigma0_a = p.sigma0_a();
    out.sigma0_b = p.sigma0_b();
    out.v_group = std::norm(p.Omega_d) / (p.N_density * out.sigma0_a * p.gamma);

    const double num =
        p.N_density * p.omega_a * p.omega_b * p.d24 * p.d24 * p.d26 * p.d26;
    const double den = 2.0 * constants::hbar * constants::hbar * constants::eps0 *
                       constants::eps0 * std::norm(p.Omega_d) * p.V;
    out.chi = (num / den * (1.0 / (I * p.gamma - p.Delta))).real();

    const double ga = p.single_photon_rabi_a();
    const double gb = p.single_photon_rabi_b();
    out.alpha_a = polarizability_a(p, gb);
    out.alpha_b = polarizability_b(p, ga);

    out.self_phase_scale = ga * ga / (p.Delta_U + p.Delta_L);
    const double cross_scale = 2.0 * gb * gb / p.Delta;
    out.self_to_cross_ratio = out.self_phase_scale / cross_scale;
    return out;
}

}  // namespace deit::eit

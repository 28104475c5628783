#pragma once

#include "deit/numerics.hpp"

namespace deit::eit {

namespace constants {
constexpr double hbar = 1.054571817e-34;       // J s
constexpr double eps0 = 8.8541878128e-12;      // F/m
constexpr double c_light = 299792458.0;        // m/s
}  // namespace constants

/// Semiclassical medium constants. All rates and frequencies are angular
/// (rad/s); dipoles in C m, density in 1/m^3, volume in m^3, length in m.
struct MediumParams {
    double gamma = 1e5;          // excited-state decay
    double Delta = 1e6;          // dispersive detuning on |5>
    double Delta_U = 5e6;        // excited Zeeman splitting
    double Delta_L = 4e6;        // ground Zeeman splitting
    double Omega_d = 1e6;        // classical drive Rabi frequency
    double d24 = 1e-32;          // dipole of the 2-4 transition
    double d26 = 1e-32;          // dipole of the 2-6 transition
    double N_density = 1e21;     // atoms per m^3
    double omega_a = 3.1394e15;  // 2 pi c / 600 nm
    double omega_b = 3.1394e15;
    double V = 1e-11;            // interaction volume (100 um beam, 1 mm length)
    double L = 1e-3;             // interaction length

    bool weak_two_photon_absorption() const { return Delta >= 10.0 * gamma; }

    // Resonant absorption cross sections, sigma0 = d^2 w / (2 eps0 c hbar gamma)
    double sigma0_a() const;
    double sigma0_b() const;

    // Single-photon Rabi scale g = d sqrt(w / (2 hbar eps0 V))
    double single_photon_rabi_a() const;
    double single_photon_rabi_b() const;

    void validate() const;
};

/// Six-level Hamiltonian over the bare basis {|1>..|6>} in rad/s:
/// couplings Omega_d(|4><1|, |6><3|), Omega_a(|4><2|, |5><3|),
/// Omega_b(|6><2|, |5><1|) plus h.c., detuning Delta on |5>; decay adds
/// -i gamma on |4>, |5>, |6>.
num::Matrix hamiltonian6(num::Complex omega_a_rabi, num::Complex omega_b_rabi,
                         const MediumParams& p, bool include_decay);

struct LambdaBranch {
    num::Complex lambda_exact;      // J, tracked from |2>
    num::Complex lambda_weakfield;  // J, 2 hbar |Oa|^2 |Ob|^2 / ((i gamma - Delta) |Od|^2)
};

/// Energy of the branch adiabatically connected to |2>, against the
/// weak-field closed form. The probe amplitudes are ramped from zero and the
/// branch is followed by eigenvector overlap; an ambiguous tracking step
/// (two candidates within overlap 0.05) fails with diagnostics.
LambdaBranch lambda_branch(num::Complex omega_a_rabi, num::Complex omega_b_rabi,
                           const MediumParams& p);

/// Cross polarizability seen by the a-field, alpha_a =
/// 2 N sigma0 gamma |Ob|^2 / ((Delta - i gamma) |Od|^2)  [1/m].
/// Re > 0 gives the dispersive phase, Im > 0 absorption; |Im/Re| = gamma/Delta.
num::Complex polarizability_a(const MediumParams& p, num::Complex omega_b_rabi);
num::Complex polarizability_b(const MediumParams& p, num::Complex omega_a_rabi);

struct PropagationConstants {
    double sigma0_a;             // m^2
    double sigma0_b;             // m^2
    double v_group;              // m/s, |Od|^2 / (N sigma0 gamma)
    double chi;                  // rad/s, cw cross-Kerr rate (negative for Delta > 0)
    num::Complex alpha_a;        // 1/m at the single-photon Rabi amplitude
    num::Complex alpha_b;        // 1/m
    double self_phase_scale;     // |Oa|^2/(Delta_U + Delta_L) at single-photon amplitude
    double self_to_cross_ratio;  // self-phase / cross-phase polarizability scales
    double pi_over_chi() const { return M_PI / std::abs(chi); }
};

PropagationConstants propagation_constants(const MediumParams& p);

}  // namespace deit::eit

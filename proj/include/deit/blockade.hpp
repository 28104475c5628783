#pragma once

#include <array>
#include <vector>

#include "deit/fockspace.hpp"
#include "deit/numerics.hpp"

namespace deit::blockade {

/// Atoms + bimodal cavity parameters. Rates in rad/s (or any common unit;
/// the spectra scale with Omega_d).
struct CavityParams {
    double g_a = 0.3;      // atom-mode a vacuum Rabi coupling
    double g_b = 0.3;      // atom-mode b coupling
    double Omega_d = 1.0;  // classical drive
    double Delta = 0.1;    // detuning on |5>
    double gamma = 0.01;   // atomic decay of |4>,|5>,|6>
    double Gamma = 0.0;    // cavity decay per photon
    double delta = 0.0;    // single-photon detuning on |4>,|6>
    double eps_pump = 0.1; // external drive amplitude
    int N_atoms = 1;

    void validate() const;
};

/// Basis state of the permutation-symmetric sector: occupation of the six
/// atomic levels (summing to N_atoms) plus the two photon numbers.
struct BasisState {
    std::array<int, 6> level_occ;
    int n_a = 0;
    int n_b = 0;
};

struct ManifoldModel {
    std::vector<BasisState> basis;
    int excitations = 0;
    num::Matrix hamiltonian;  // non-Hermitian when decay is included

    int index_of(const BasisState& s) const;  // -1 when absent
};

/// Fixed-excitation sector of the collective model, generated from
/// |2...2> x |n_a, n_b|>. One excitation spans both single-color sectors;
/// two excitations is the shared sector (one quantum of each color).
/// Couplings: +Od(1-4), -Od(3-6), +ga a(2-4), -gb b(2-6), +gb b(1-5),
/// +ga a(3-5), with collective sqrt factors from the symmetric sector.
/// Diagonal: Delta on |5>, delta on |4>,|6>; decay adds -i gamma on
/// |4>,|5>,|6> and -i Gamma (n_a + n_b).
ManifoldModel build_manifold(const CavityParams& p, int excitations, bool include_decay);

struct SpectrumScan {
    std::vector<double> g_b;
    std::vector<num::Vector> eigenvalues;  // sorted by Re, per grid point
    std::vector<double> gap;               // min |Re E| per grid point
};

/// Doubly-excited eigenvalues (relative to the bare two-photon energy)
/// against g_b, with decay included; gap = min |Re E|.
SpectrumScan blockade_spectrum_scan(CavityParams p, const std::vector<double>& g_b_grid,
                                    int n_atoms, double delta);

struct DarkState {
    ManifoldModel manifold;      // singly-excited, decay-free
    num::Vector amplitudes;      // (Od |2..2,1,0> - ga sqrt(N) |1sym,0,0>)/sqrt(Od^2+N ga^2)
};

DarkState collective_dark_state(const CavityParams& p, int n_atoms);

/// Steady excited-state population of a driven two-level system,
/// (Omega^2/4) / (Delta^2 + Omega^2/2 + gamma^2/4), with Omega the drive
/// matrix element between the two levels.
double steady_population(double rabi, double detuning, double gamma);

struct FiveLevelModel {
    num::Matrix hamiltonian;  // basis {|200>, |D_a>, |D_b>, |D_ab>, |D'_ab>}
    double E_plus = 0, E_minus = 0;  // measured doubly-excited energies nearest zero
    double Delta_prime = 0;          // half splitting
    double asymmetry = 0;            // |E+ + E-| / Delta_prime
    bool symmetric_warning = false;  // asymmetry beyond 10%
};

/// Effective model of the driven system restricted to the ground state, the
/// two singly-excited dark states and the two doubly-excited states nearest
/// the two-photon resonance. Couplings are exact drive matrix elements
/// computed with the manifold eigenvectors.
FiveLevelModel effective_five_level(const CavityParams& p);

struct FiveLevelDynamics {
    std::vector<double> t;
    std::array<std::vector<double>, 5> populations;  // |C_j(t)|^2
    std::vector<double> analytic_c1;  // cos^2(sqrt(2) V t), the closed three-level solution
    double max_c2 = 0, max_c3 = 0, max_c4 = 0, max_c5 = 0;
    double measured_frequency = 0;   // angular frequency of the |C1|^2 oscillation
    double omega_r = 0;              // Od eps / sqrt(Od^2 + g^2)
    double frequency_ratio = 0;      // measured / omega_r
};

FiveLevelDynamics five_level_dynamics(const CavityParams& p, const std::vector<double>& t_grid);

struct ProjectionResult {
    fock::MultiModeState cavity_state;  // cos(th_a)|10> + cos(th_b)|01>, normalized
    double probability;                 // (cos^2 th_a + cos^2 th_b)/2
};

/// Cavity state conditioned on finding the atom back in |2> when the system
/// sits in the equal superposition of the two singly-excited dark states.
ProjectionResult project_entangled_modes(const CavityParams& p);

}  // namespace deit::blockade

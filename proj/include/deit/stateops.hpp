#pragma once

#include "deit/fockspace.hpp"

namespace deit::ops {

/// Cross-Kerr unitary exp(-i phi n_a n_b) on modes (ma, mb).
fock::MultiModeState cross_kerr(const fock::MultiModeState& psi, int ma, int mc, double phi);

/// 50:50 beam splitter exp[(pi/4)(a†c - a c†)] on modes (ma, mc); the Fock
/// matrix is the numerically exponentiated generator, exactly unitary on the
/// truncated pair space. Coherent inputs |alpha>|beta> map to
/// |(alpha+beta)/√2>|(-alpha+beta)/√2> away from the cutoff edge; input weight
/// within 2 quanta of either cutoff above 1e-8 raises the truncation flag.
fock::MultiModeState beam_splitter(const fock::MultiModeState& psi, int ma, int mc);

/// Photon loss of transmissivity eta on one mode: a beam splitter of angle
/// arccos(√eta) against a vacuum ancilla, ancilla traced out. Realized by the
/// Kraus family of that splitter.
fock::DensityOperator loss_channel(const fock::DensityOperator& rho, int mode, double eta);

enum class ClickOutcome { Click, NoClick };

struct ProjectionResult {
    fock::MultiModeState state;  // renormalized conditional state
    double probability;
};

/// Threshold detection on one mode: NoClick projects on |0><0|, Click on its
/// complement. Conditioning on a zero-probability outcome fails.
ProjectionResult click_projection(const fock::MultiModeState& psi, int mode, ClickOutcome outcome);

/// Beam splitter of arbitrary angle on the pair space, exp[theta(a†c - a c†)];
/// exposed for tests and the loss channel.
num::Matrix beam_splitter_pair_matrix(int dim_a, int dim_c, double theta);

}  // namespace deit::ops

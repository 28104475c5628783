#pragma once

#include <array>

#include "deit/fockspace.hpp"
#include "deit/stateops.hpp"

namespace deit::catlab {

/// cross_kerr(|alpha> x |gamma>, pi): an entangled coherent state
/// ~ |alpha>(|gamma>+|-gamma>) + |-alpha>(|gamma>-|-gamma>), normalized.
fock::MultiModeState make_entangled_coherent(num::Complex alpha, double gamma_amp,
                                             const std::array<int, 2>& cutoffs);

enum class Parity { Even, Odd };

/// (|gamma> ± |-gamma>) normalized; even (odd) parity keeps only even (odd)
/// Fock layers. The odd cat at gamma = 0 is the null vector and is rejected.
fock::MultiModeState cat_state(double gamma_amp, Parity parity, int cutoff);

enum class HeraldOutcome { D1, D2, None };

struct HeraldResult {
    fock::DensityOperator mode_b;  // conditional state of the kept mode
    double probability;
};

/// Mixes mode a of psi_ab with a local oscillator |alpha_lo> on a 50:50
/// splitter and applies threshold detectors to the two outputs.
/// D1 = click at the first output and silence at the second (even cat on b),
/// D2 = the reverse (odd cat), None = both silent (retry).
HeraldResult herald_cat(const fock::MultiModeState& psi_ab, num::Complex alpha_lo,
                        HeraldOutcome outcome);

/// The two-mode mixture produced by splitting a cat of amplitude gamma on a
/// 50:50 splitter against vacuum, with purity parameter c in [-1, 1]:
/// A { |b,-b><b,-b| + |-b,b><-b,b| + c |-b,b><b,-b| + c |b,-b><-b,b| },
/// b = gamma/sqrt(2), normalized by its trace.
fock::DensityOperator split_cat_density(double gamma_amp, double c,
                                        const std::array<int, 2>& cutoffs);

struct DuanResult {
    double S = 0;
    double var_u = 0;  // Var(x_b + x_c)
    double var_v = 0;  // Var(-p_b + p_c)
    double separable_bound = 2.0;
    bool inseparable = false;  // S <= 2
};

/// Total variance S = Var(x_b + x_c) + Var(-p_b + p_c) after an independent
/// loss channel of efficiency eta on each mode (inefficient homodyne
/// detection); separable states satisfy S >= 2.
DuanResult duan_S(const fock::DensityOperator& rho, double eta);

}  // namespace deit::catlab

#pragma once

#include <vector>

#include "deit/eit.hpp"
#include "deit/numerics.hpp"

namespace deit::dressed {

/// 5x5 real symmetric Hamiltonian of one atom dressed by the drive and the
/// two quantized probe modes, over the basis
/// {|1,na-1,nb>, |2,na,nb>, |3,na,nb-1>, |4,na-1,nb>, |6,na,nb-1>}:
///
///        | 0    0    0    Od    0    |
///        | 0    0    0    ga√na -gb√nb|
///  H/h = | 0    0    0    0    -Od   |
///        | Od   ga√na 0   0     0    |
///        | 0   -gb√nb -Od 0     0    |
num::Matrix dressed_hamiltonian5(int n_a, int n_b, double g_a, double g_b, double omega_d);

struct DressedSpectrum {
    int n_a = 0, n_b = 0;
    double g_a = 0, g_b = 0, omega_d = 0;
    double omega = 0;        // sqrt(Od^2 + ga^2 na + gb^2 nb)
    double delta_small = 0;  // sqrt(ga^2 na + gb^2 nb)
    Eigen::Matrix<double, 5, 1> eigenvalues;  // {-omega, -Od, 0, +Od, +omega}
    Eigen::Matrix<double, 5, 5> eigenvectors; // closed form, columns match eigenvalues
    Eigen::Matrix<double, 5, 1> dark_state;   // (-Oa~/O, Od/O, -Ob~/O, 0, 0)
};

/// Closed-form spectrum {0, ±Omega, ±Omega_d} with eigenvectors; the zero
/// eigenvector has no support on the decaying components |4>, |6>.
/// Eigenvector phases are fixed by a positive |2,na,nb> component where it is
/// nonzero, else by the first nonzero component.
DressedSpectrum dressed_spectrum(int n_a, int n_b, double g_a, double g_b, double omega_d);

struct PerturbativeAmplitudes {
    num::Complex A0, A1_plus, A1_minus, A2_plus, A2_minus, A5;
    double Delta = 0;
};

struct AmplitudeTrajectory {
    std::vector<double> t;
    std::vector<PerturbativeAmplitudes> amps;
    PerturbativeAmplitudes steady;         // algebraic quasi-steady point (A0 = 1)
    PerturbativeAmplitudes time_averaged;  // trajectory mean, the measured steady values
};

/// Integrates the six-amplitude equations of the dressed picture from
/// A0(0) = 1 over t_grid (counter-rotating terms at 2*Delta + E dropped).
AmplitudeTrajectory amplitude_dynamics(int n_a, int n_b, double g_a, double g_b, double omega_d,
                                       double Delta, const std::vector<double>& t_grid);

struct BareCoefficients {
    num::Complex beta2, beta3, beta5;
    num::Complex beta4_printed;  // the closed-form expression, kept for inspection
    num::Complex beta4_steady;   // from the quasi-steady amplitudes (vanishing combination)
    num::Complex coherence;      // beta2* beta4_steady + beta3* beta5  ~ Oa~ Ob~^2 / (O^2 Delta)
    num::Complex alpha_a_dressed;            // N sigma0 * coherence, 1/m (needs medium)
    num::Complex alpha_a_dressed_per_Nsigma0; // dimensionless coherence
};

/// Bare-basis coefficients of the quasi-steady dressed state and the
/// polarizability-like coherence they imply. `medium` supplies N*sigma0 for
/// the dimensional value; without it only the dimensionless coherence is set.
BareCoefficients bare_coefficients(int n_a, int n_b, double g_a, double g_b, double omega_d,
                                   double Delta, const eit::MediumParams* medium = nullptr);

}  // namespace deit::dressed

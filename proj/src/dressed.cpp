#include "deit/dressed.hpp"

#include <cmath>

namespace deit::dressed {

using num::Complex;
using num::Matrix;
using num::Vector;

Matrix dressed_hamiltonian5(int n_a, int n_b, double g_a, double g_b, double omega_d) {
    if (n_a < 0 || n_b < 0) throw Error("dressed_hamiltonian5: photon numbers must be >= 0");
    const double oa = g_a * std::sqrt(double(n_a));
    const double ob = g_b * std::sqrt(double(n_b));
    Matrix h = Matrix::Zero(5, 5);
    h(0, 3) = h(3, 0) = omega_d;
    h(1, 3) = h(3, 1) = oa;
    h(1, 4) = h(4, 1) = -ob;
    h(2, 4) = h(4, 2) = -omega_d;
    return h;
}

DressedSpectrum dressed_spectrum(int n_a, int n_b, double g_a, double g_b, double omega_d) {
    DressedSpectrum s;
    s.n_a = n_a;
    s.n_b = n_b;
    s.g_a = g_a;
    s.g_b = g_b;
    s.omega_d = omega_d;
    const double oa = g_a * std::sqrt(double(n_a));
    const double ob = g_b * std::sqrt(double(n_b));
    s.delta_small = std::hypot(oa, ob);
    s.omega = std::sqrt(omega_d * omega_d + oa * oa + ob * ob);

    s.eigenvalues << -s.omega, -omega_d, 0.0, omega_d, s.omega;

    const double O = s.omega, Od = omega_d, dp = s.delta_small;
    Eigen::Matrix<double, 5, 1> dark, vO, wO, vD, wD;
    if (dp > 0.0) {
        dark << -oa / O, Od / O, -ob / O, 0.0, 0.0;
        // singular pair at Omega: ground part (Od oa, dp^2, Od ob)/(dp O), excited (oa, -ob)/dp
        vO << Od * oa / (dp * O), dp / O, Od * ob / (dp * O), 0.0, 0.0;
        wO << 0.0, 0.0, 0.0, oa / dp, -ob / dp;
        // singular pair at Omega_d: ground (ob, 0, -oa)/dp, excited (ob, oa)/dp
        vD << ob / dp, 0.0, -oa / dp, 0.0, 0.0;
        wD << 0.0, 0.0, 0.0, ob / dp, oa / dp;
    } else {
        // bare probe vacuum: |2> decouples, two independent drive doublets
        dark << 0.0, 1.0, 0.0, 0.0, 0.0;
        vO << 1.0, 0.0, 0.0, 0.0, 0.0;
        wO << 0.0, 0.0, 0.0, 1.0, 0.0;
        vD << 0.0, 0.0, 1.0, 0.0, 0.0;
        wD << 0.0, 0.0, 0.0, 0.0, -1.0;
    }
    const double r = 1.0 / std::sqrt(2.0);
    s.eigenvectors.col(0) = r * (vO - wO);
    s.eigenvectors.col(1) = r * (vD - wD);
    s.eigenvectors.col(2) = dark;
    s.eigenvectors.col(3) = r * (vD + wD);
    s.eigenvectors.col(4) = r * (vO + wO);
    // phase fix: |2,na,nb> component positive where nonzero, else first nonzero
    for (int c = 0; c < 5; ++c) {
        auto col = s.eigenvectors.col(c);
        double pivot = col(1);
        if (std::abs(pivot) < 1e-14)
            for (int rix = 0; rix < 5; ++rix)
                if (std::abs(col(rix)) > 1e-14) {
                    pivot = col(rix);
                    break;
                }
        if (pivot < 0.0) s.eigenvectors.col(c) = -col;
    }
    s.dark_state = dark;
    return s;
}

namespace {

// i dA/dt = M A over (A0, A1-, A1+, A2-, A2+, A5).
Matrix amplitude_matrix(double oa, double ob, double omega_d, double Delta) {
    const double dp = std::hypot(oa, ob);
    const double O = std::sqrt(omega_d * omega_d + dp * dp);
    const double k0 = (O > 0.0) ? oa * ob / O : 0.0;
    const double k1 = (dp > 0.0) ? oa * ob * omega_d / (std::sqrt(2.0) * O * dp) : 0.0;
    const double k2 = (dp > 0.0) ? ob * ob / (std::sqrt(2.0) * dp) : 0.0;
    Matrix m = Matrix::Zero(6, 6);
    m(0, 5) = -k0;
    m(1, 1) = -O;
    m(1, 5) = -k1;
    m(2, 2) = O;
    m(2, 5) = k1;
    m(3, 3) = -omega_d;
    m(3, 5) = k2;
    m(4, 4) = omega_d;
    m(4, 5) = -k2;
    m(5, 5) = Delta;
    m(5, 0) = -k0;
    m(5, 1) = -k1;
    m(5, 2) = k1;
    m(5, 3) = -k2;
    m(5, 4) = k2;
    return m;
}

PerturbativeAmplitudes pack(const Vector& v, double Delta) {
    return {v[0], v[2], v[1], v[4], v[3], v[5], Delta};
}

}  // namespace

AmplitudeTrajectory amplitude_dynamics(int n_a, int n_b, double g_a, double g_b, double omega_d,
                                       double Delta, const std::vector<double>& t_grid) {
    const double oa = g_a * std::sqrt(double(n_a));
    const double ob = g_b * std::sqrt(double(n_b));
    const Matrix m = amplitude_matrix(oa, ob, omega_d, Delta);

    Vector a0 = Vector::Zero(6);
    a0[0] = 1.0;
    const auto traj = num::integrate_schrodinger(m, a0, t_grid);

    AmplitudeTrajectory out;
    out.t = t_grid;
    out.amps.reserve(traj.size());
    Vector mean = Vector::Zero(6);
    for (const auto& v : traj) {
        out.amps.push_back(pack(v, Delta));
        mean += v;
    }
    if (!traj.empty()) mean /= double(traj.size());
    out.time_averaged = pack(mean, Delta);

    // Quasi-steady point with A0 pinned: all equal-and-opposite pairs balance.
    const double dp = std::hypot(oa, ob);
    const double O = std::sqrt(omega_d * omega_d + dp * dp);
    PerturbativeAmplitudes st;
    st.Delta = Delta;
    st.A0 = 1.0;
    st.A5 = (Delta != 0.0 && O > 0.0) ? Complex(oa * ob / (O * Delta)) : Complex(0.0);
    const double k1 = (dp > 0.0) ? oa * ob * omega_d / (std::sqrt(2.0) * O * dp) : 0.0;
    const double k2 = (dp > 0.0) ? ob * ob / (std::sqrt(2.0) * dp) : 0.0;
    st.A1_minus = st.A1_plus = (O > 0.0) ? -k1 * st.A5 / O : Complex(0.0);
    st.A2_minus = st.A2_plus = (omega_d > 0.0) ? k2 * st.A5 / omega_d : Complex(0.0);
    out.steady = st;
    return out;
}

BareCoefficients bare_coefficients(int n_a, int n_b, double g_a, double g_b, double omega_d,
                                   double Delta, const eit::MediumParams* medium) {
    const double oa = g_a * std::sqrt(double(n_a));
    const double ob = g_b * std::sqrt(double(n_b));
    const double dp = std::hypot(oa, ob);
    const double O = std::sqrt(omega_d * omega_d + dp * dp);

    BareCoefficients bc;
    bc.beta2 = -omega_d / O;
    bc.beta3 = ob / O;
    bc.beta5 = (Delta != 0.0) ? Complex(oa * ob / (O * Delta)) : Complex(0.0);
    bc.beta4_printed =
        (dp > 0.0 && Delta != 0.0 && omega_d > 0.0)
            ? Complex(ob * ob * oa / (dp * dp * O * Delta) *
                      (ob * ob / omega_d - oa * oa * omega_d / (O * O)))
            : Complex(0.0);
    // In the quasi-steady state the bright amplitudes pair up exactly, so the
    // |4> component they assemble cancels.
    bc.beta4_steady = 0.0;
    bc.coherence = std::conj(bc.beta2) * bc.beta4_steady + std::conj(bc.beta3) * bc.beta5;
    bc.alpha_a_dressed_per_Nsigma0 = bc.coherence;
    if (medium)
        bc.alpha_a_dressed = medium->N_density * medium->sigma0_a() * bc.coherence;
    return bc;
}

}  // namespace deit::dressed

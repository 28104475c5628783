#include "deit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace deit::num {

namespace {

// Rotate each column so that its first component above threshold is
// real-positive. Keeps regression output stable across LAPACK versions.
void fix_phases(Matrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        const double scale = vectors.col(c).cwiseAbs().maxCoeff();
        if (scale == 0.0) continue;
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const Complex v = vectors(r, c);
            if (std::abs(v) > 1e-12 * scale) {
                vectors.col(c) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }
}

double max_asymmetry(const Matrix& m) {
    double asym = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
    return asym;
}

}  // namespace

HermitianEigen eig_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw NumericalError("eig_hermitian: matrix not square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = max_asymmetry(m);
    if (asym > tol * scale) {
        std::ostringstream os;
        os << "eig_hermitian: input not Hermitian, max asymmetry " << asym
           << " exceeds " << tol * scale;
        throw NumericalError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_hermitian: solver did not converge");
    HermitianEigen out{solver.eigenvalues(), solver.eigenvectors()};
    fix_phases(out.vectors);
    return out;
}

GeneralEigen eig_general(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw NumericalError("eig_general: matrix not square");
    Eigen::ComplexEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_general: solver did not converge");

    const Eigen::Index n = m.rows();
    std::vector<Eigen::Index> order(n);
    for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
    const Vector& w = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (w[a].real() != w[b].real()) return w[a].real() < w[b].real();
        return w[a].imag() < w[b].imag();
    });

    GeneralEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[i] = w[order[i]];
        out.vectors.col(i) = solver.eigenvectors().col(order[i]).normalized();
    }
    fix_phases(out.vectors);

    const double mnorm = m.norm();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double res = (m * out.vectors.col(i) - out.values[i] * out.vectors.col(i)).norm();
        if (res > 10.0 * std::max(tol, 1e-14) * std::max(mnorm, 1.0)) {
            std::ostringstream os;
            os << "eig_general: residual " << res << " for eigenvalue " << out.values[i]
               << " exceeds bound";
            throw NumericalError(os.str());
        }
    }
    return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

}  // namespace

std::vector<Vector> integrate_schrodinger(const Matrix& h, const Vector& psi0,
                                          const std::vector<double>& t_grid, double tol) {
    if (h.rows() != h.cols() || h.rows() != psi0.size())
        throw NumericalError("integrate_schrodinger: dimension mismatch");
    if (t_grid.empty()) return {};
    for (size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1]))
            throw NumericalError("integrate_schrodinger: time grid not strictly increasing");

    const auto rhs = [&](const Vector& y) -> Vector { return Complex(0, -1) * (h * y); };

    std::vector<Vector> out;
    out.reserve(t_grid.size());
    out.push_back(psi0);

    const double span = t_grid.back() - t_grid.front();
    if (span == 0.0) return out;
    const double hmin = std::max(span * 1e-15, 1e-300);

    Vector y = psi0;
    Vector k1 = rhs(y);
    double dt = span / 100.0;

    for (size_t seg = 1; seg < t_grid.size(); ++seg) {
        double t = t_grid[seg - 1];
        const double t_end = t_grid[seg];
        while (t < t_end) {
            dt = std::min(dt, t_end - t);
            if (dt < hmin) {
                std::ostringstream os;
                os << "integrate_schrodinger: step size underflow at t = " << t;
                throw NumericalError(os.str());
            }
            const Vector k2 = rhs(y + dt * (A21 * k1));
            const Vector k3 = rhs(y + dt * (A31 * k1 + A32 * k2));
            const Vector k4 = rhs(y + dt * (A41 * k1 + A42 * k2 + A43 * k3));
            const Vector k5 = rhs(y + dt * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
            const Vector k6 = rhs(y + dt * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
            const Vector y5 = y + dt * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
            const Vector k7 = rhs(y5);
            const Vector err =
                dt * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
            const double sc = tol * (1.0 + y.norm());
            const double e = err.norm() / sc;
            if (e <= 1.0) {
                t += dt;
                y = y5;
                k1 = k7;  // FSAL
            }
            const double grow = (e > 0.0) ? 0.9 * std::pow(e, -0.2) : 5.0;
            dt *= std::clamp(grow, 0.2, 5.0);
        }
        out.push_back(y);
    }
    return out;
}

Matrix unitary_exp(const Matrix& h, double tol) {
    HermitianEigen eig = eig_hermitian(h, tol);
    Vector phases(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        phases[i] = std::exp(Complex(0, -eig.values[i]));
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace deit::num

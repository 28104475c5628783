#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace deit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

namespace num {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

constexpr double kDefaultEigTol = 1e-12;
constexpr double kDefaultOdeTol = 1e-10;

struct HermitianEigen {
    RealVector values;   // ascending
    Matrix vectors;      // orthonormal columns, phase-fixed
};

struct GeneralEigen {
    Vector values;       // sorted by (Re, Im)
    Matrix vectors;      // unit columns, phase-fixed
};

/// Eigendecomposition of a Hermitian matrix. Rejects input whose
/// asymmetry max|m_ij - conj(m_ji)| exceeds tol * max(1, max|m_ij|).
HermitianEigen eig_hermitian(const Matrix& m, double tol = kDefaultEigTol);

/// Eigendecomposition of a general square complex matrix.
/// Residuals ||m v - lambda v|| are verified against 10 * tol * ||m||.
GeneralEigen eig_general(const Matrix& m, double tol = kDefaultEigTol);

/// Integrates i dpsi/dt = h psi on a strictly increasing time grid with an
/// adaptive Dormand-Prince RK45 stepper. trajectory[k] = psi(t_grid[k]),
/// with psi(t_grid[0]) = psi0.
std::vector<Vector> integrate_schrodinger(const Matrix& h, const Vector& psi0,
                                          const std::vector<double>& t_grid,
                                          double tol = kDefaultOdeTol);

/// exp(-i h) for Hermitian h, built from the eigendecomposition.
Matrix unitary_exp(const Matrix& h, double tol = kDefaultEigTol);

}  // namespace num
}  // namespace deit

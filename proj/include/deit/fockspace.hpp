#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "deit/numerics.hpp"

namespace deit::fock {

constexpr int kMaxModes = 3;
constexpr Eigen::Index kTensorBudget = Eigen::Index(1) << 22;

/// Pure state of 1-3 bosonic modes on a truncated Fock space.
/// cutoff = maximum occupation (inclusive), so dimension per mode is cutoff+1.
/// Amplitudes are flattened row-major: the last mode has stride 1.
class MultiModeState {
public:
    explicit MultiModeState(std::vector<int> cutoffs);

    int modes() const { return static_cast<int>(cutoffs_.size()); }
    const std::vector<int>& cutoffs() const { return cutoffs_; }
    Eigen::Index dim() const { return amp_.size(); }
    int dim_mode(int mode) const { return cutoffs_[mode] + 1; }

    const num::Vector& amplitudes() const { return amp_; }
    num::Vector& amplitudes() { return amp_; }

    Eigen::Index index_of(const std::vector<int>& occ) const;
    std::vector<int> occupations_of(Eigen::Index idx) const;

    double norm() const { return amp_.norm(); }
    MultiModeState normalized() const;

    // Weight discarded by a truncating constructor/channel. Zero when exact.
    double lost_weight() const { return lost_weight_; }
    bool truncation_warning() const { return truncation_warning_; }
    void set_lost_weight(double w, double warn_threshold);

private:
    std::vector<int> cutoffs_;
    std::vector<Eigen::Index> strides_;
    num::Vector amp_;
    double lost_weight_ = 0.0;
    bool truncation_warning_ = false;
};

MultiModeState basis_state(const std::vector<int>& occupations, const std::vector<int>& cutoffs);

/// ceil(|alpha|^2 + 6|alpha| + 10): keeps the truncated Poisson tail
/// below ~1e-10 for |alpha| <= 3.
int coherent_cutoff(num::Complex alpha);

/// Truncated coherent state, renormalized; the discarded Poisson weight is
/// recorded and flagged when above 1e-6.
MultiModeState coherent_state(num::Complex alpha, int cutoff);

MultiModeState tensor(const std::vector<MultiModeState>& factors);

num::Complex overlap(const MultiModeState& a, const MultiModeState& b);

/// Density operator on the same flattened space. Stored dense.
class DensityOperator {
public:
    explicit DensityOperator(std::vector<int> cutoffs);

    int modes() const { return static_cast<int>(cutoffs_.size()); }
    const std::vector<int>& cutoffs() const { return cutoffs_; }
    Eigen::Index dim() const { return mat_.rows(); }

    const num::Matrix& matrix() const { return mat_; }
    num::Matrix& matrix() { return mat_; }

    num::Complex trace() const { return mat_.trace(); }
    double purity() const { return (mat_ * mat_).trace().real(); }
    void normalize();

private:
    std::vector<int> cutoffs_;
    num::Matrix mat_;
};

DensityOperator to_density(const MultiModeState& psi);

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// In-place ladder operators on flattened amplitude vectors; shared by states,
// density columns and the channel code.
num::Vector apply_annihilation(const num::Vector& v, const std::vector<int>& cutoffs, int mode);
num::Vector apply_creation(const num::Vector& v, const std::vector<int>& cutoffs, int mode);

/// Named observables: "number", "x", "p", "x2", "p2" (single mode m1)
/// and cross moments "xx", "pp" (modes m1, m2). Unknown names are rejected.
num::Complex expectation(const MultiModeState& psi, std::string_view name, int m1, int m2 = -1);
num::Complex expectation(const DensityOperator& rho, std::string_view name, int m1, int m2 = -1);

/// Means and covariance of (x_i, p_i, x_j, p_j) with x = (a+a†)/√2,
/// p = (a-a†)/(i√2); off-diagonal x-p entries are symmetrized.
struct QuadratureMoments {
    Eigen::Vector4d mean;
    Eigen::Matrix4d cov;
};

QuadratureMoments quadrature_moments(const DensityOperator& rho, int mode_i, int mode_j);

}  // namespace deit::fock

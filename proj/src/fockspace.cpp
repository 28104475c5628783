#include "deit/fockspace.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace deit::fock {

namespace {

std::vector<Eigen::Index> make_strides(const std::vector<int>& cutoffs) {
    std::vector<Eigen::Index> strides(cutoffs.size());
    Eigen::Index s = 1;
    for (int m = static_cast<int>(cutoffs.size()) - 1; m >= 0; --m) {
        strides[m] = s;
        s *= cutoffs[m] + 1;
    }
    return strides;
}

Eigen::Index total_dim(const std::vector<int>& cutoffs) {
    Eigen::Index d = 1;
    for (int c : cutoffs) {
        if (c < 0) throw Error("negative cutoff");
        d *= c + 1;
    }
    return d;
}

void check_mode(const std::vector<int>& cutoffs, int mode) {
    if (mode < 0 || mode >= static_cast<int>(cutoffs.size()))
        throw Error("mode index out of range");
}

}  // namespace

MultiModeState::MultiModeState(std::vector<int> cutoffs)
    : cutoffs_(std::move(cutoffs)), strides_(make_strides(cutoffs_)) {
    if (cutoffs_.empty() || cutoffs_.size() > kMaxModes)
        throw Error("MultiModeState supports 1 to 3 modes");
    amp_ = num::Vector::Zero(total_dim(cutoffs_));
}

Eigen::Index MultiModeState::index_of(const std::vector<int>& occ) const {
    if (occ.size() != cutoffs_.size()) throw Error("occupation tuple has wrong length");
    Eigen::Index idx = 0;
    for (size_t m = 0; m < occ.size(); ++m) {
        if (occ[m] < 0 || occ[m] > cutoffs_[m]) {
            std::ostringstream os;
            os << "occupation " << occ[m] << " outside cutoff " << cutoffs_[m] << " on mode " << m;
            throw Error(os.str());
        }
        idx += occ[m] * strides_[m];
    }
    return idx;
}

std::vector<int> MultiModeState::occupations_of(Eigen::Index idx) const {
    std::vector<int> occ(cutoffs_.size());
    for (size_t m = 0; m < cutoffs_.size(); ++m) {
        occ[m] = static_cast<int>(idx / strides_[m]);
        idx %= strides_[m];
    }
    return occ;
}

MultiModeState MultiModeState::normalized() const {
    const double n = norm();
    if (n == 0.0) throw Error("cannot normalize the zero state");
    MultiModeState out = *this;
    out.amp_ /= n;
    return out;
}

void MultiModeState::set_lost_weight(double w, double warn_threshold) {
    lost_weight_ = w;
    truncation_warning_ = w > warn_threshold;
}

MultiModeState basis_state(const std::vector<int>& occupations, const std::vector<int>& cutoffs) {
    MultiModeState s(cutoffs);
    s.amplitudes()[s.index_of(occupations)] = 1.0;
    return s;
}

int coherent_cutoff(num::Complex alpha) {
    const double a = std::abs(alpha);
    return static_cast<int>(std::ceil(a * a + 6.0 * a + 10.0));
}

MultiModeState coherent_state(num::Complex alpha, int cutoff) {
    MultiModeState s({cutoff});
    num::Complex term = 1.0;  // alpha^n / sqrt(n!)
    double weight = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        if (n > 0) term *= alpha / std::sqrt(double(n));
        s.amplitudes()[n] = term;
        weight += std::norm(term);
    }
    const double total = std::exp(std::norm(alpha));  // sum |alpha|^{2n}/n!
    s.amplitudes() /= std::sqrt(weight);
    s.set_lost_weight(std::max(0.0, 1.0 - weight / total), 1e-6);
    return s;
}

MultiModeState tensor(const std::vector<MultiModeState>& factors) {
    if (factors.empty()) throw Error("tensor: no factors");
    std::vector<int> cutoffs;
    Eigen::Index dim = 1;
    double lost = 0.0;
    for (const auto& f : factors) {
        for (int c : f.cutoffs()) cutoffs.push_back(c);
        dim *= f.dim();
        lost += f.lost_weight();
    }
    if (cutoffs.size() > kMaxModes) throw Error("tensor: more than 3 modes");
    if (dim > kTensorBudget) throw Error("tensor: result exceeds size budget");

    MultiModeState out(cutoffs);
    num::Vector acc = factors[0].amplitudes();
    for (size_t f = 1; f < factors.size(); ++f) {
        num::Vector next(acc.size() * factors[f].dim());
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < acc.size(); ++i)
            for (Eigen::Index j = 0; j < factors[f].dim(); ++j)
                next[k++] = acc[i] * factors[f].amplitudes()[j];
        acc.swap(next);
    }
    out.amplitudes() = acc;
    out.set_lost_weight(lost, 1e-6);
    return out;
}

num::Complex overlap(const MultiModeState& a, const MultiModeState& b) {
    if (a.cutoffs() != b.cutoffs()) throw Error("overlap: cutoff mismatch");
    return a.amplitudes().dot(b.amplitudes());  // conjugates the left argument
}

DensityOperator::DensityOperator(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
    if (cutoffs_.empty() || cutoffs_.size() > kMaxModes)
        throw Error("DensityOperator supports 1 to 3 modes");
    const Eigen::Index d = total_dim(cutoffs_);
    if (d * d > kTensorBudget) throw Error("DensityOperator exceeds size budget");
    mat_ = num::Matrix::Zero(d, d);
}

void DensityOperator::normalize() {
    const double t = mat_.trace().real();
    if (t <= 0.0) throw Error("DensityOperator has non-positive trace");
    mat_ /= t;
}

DensityOperator to_density(const MultiModeState& psi) {
    DensityOperator rho(psi.cutoffs());
    rho.matrix() = psi.amplitudes() * psi.amplitudes().adjoint();
    return rho;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw Error("partial_trace: empty keep set");
    const int n = rho.modes();
    std::vector<bool> kept(n, false);
    for (int m : keep) {
        check_mode(rho.cutoffs(), m);
        if (kept[m]) throw Error("partial_trace: duplicate mode in keep set");
        kept[m] = true;
    }

    std::vector<int> keep_sorted;
    std::vector<int> traced;
    for (int m = 0; m < n; ++m) (kept[m] ? keep_sorted : traced).push_back(m);

    std::vector<int> out_cutoffs;
    for (int m : keep_sorted) out_cutoffs.push_back(rho.cutoffs()[m]);
    DensityOperator out(out_cutoffs);

    const auto strides = make_strides(rho.cutoffs());
    const auto out_strides = make_strides(out_cutoffs);

    Eigen::Index traced_dim = 1;
    for (int m : traced) traced_dim *= rho.cutoffs()[m] + 1;
    const auto traced_strides = make_strides([&] {
        std::vector<int> c;
        for (int m : traced) c.push_back(rho.cutoffs()[m]);
        return c;
    }());

    const Eigen::Index dout = out.dim();
    for (Eigen::Index i = 0; i < dout; ++i) {
        for (Eigen::Index j = 0; j < dout; ++j) {
            // decode kept occupations
            Eigen::Index base_i = 0, base_j = 0, ii = i, jj = j;
            for (size_t k = 0; k < keep_sorted.size(); ++k) {
                base_i += (ii / out_strides[k]) * strides[keep_sorted[k]];
                base_j += (jj / out_strides[k]) * strides[keep_sorted[k]];
                ii %= out_strides[k];
                jj %= out_strides[k];
            }
            num::Complex sum = 0.0;
            for (Eigen::Index t = 0; t < traced_dim; ++t) {
                Eigen::Index off = 0, tt = t;
                for (size_t k = 0; k < traced.size(); ++k) {
                    off += (tt / traced_strides[k]) * strides[traced[k]];
                    tt %= traced_strides[k];
                }
                sum += rho.matrix()(base_i + off, base_j + off);
            }
            out.matrix()(i, j) = sum;
        }
    }
    return out;
}

num::Vector apply_annihilation(const num::Vector& v, const std::vector<int>& cutoffs, int mode) {
    check_mode(cutoffs, mode);
    const auto strides = make_strides(cutoffs);
    const int d = cutoffs[mode] + 1;
    num::Vector out = num::Vector::Zero(v.size());
    const Eigen::Index stride = strides[mode];
    const Eigen::Index block = stride * d;
    for (Eigen::Index base = 0; base < v.size(); base += block)
        for (int n = 1; n < d; ++n) {
            const double f = std::sqrt(double(n));
            for (Eigen::Index r = 0; r < stride; ++r)
                out[base + (n - 1) * stride + r] += f * v[base + n * stride + r];
        }
    return out;
}

num::Vector apply_creation(const num::Vector& v, const std::vector<int>& cutoffs, int mode) {
    check_mode(cutoffs, mode);
    const auto strides = make_strides(cutoffs);
    const int d = cutoffs[mode] + 1;
    num::Vector out = num::Vector::Zero(v.size());
    const Eigen::Index stride = strides[mode];
    const Eigen::Index block = stride * d;
    for (Eigen::Index base = 0; base < v.size(); base += block)
        for (int n = 0; n < d - 1; ++n) {
            const double f = std::sqrt(double(n + 1));
            for (Eigen::Index r = 0; r < stride; ++r)
                out[base + (n + 1) * stride + r] += f * v[base + n * stride + r];
        }
    return out;
}

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Applies the named observable to a flattened vector.
num::Vector apply_observable(const num::Vector& v, const std::vector<int>& cutoffs,
                             std::string_view name, int m1, int m2) {
    const auto a = [&](const num::Vector& u, int m) { return apply_annihilation(u, cutoffs, m); };
    const auto ad = [&](const num::Vector& u, int m) { return apply_creation(u, cutoffs, m); };
    const auto x = [&](const num::Vector& u, int m) -> num::Vector {
        return kInvSqrt2 * (a(u, m) + ad(u, m));
    };
    const auto p = [&](const num::Vector& u, int m) -> num::Vector {
        return num::Complex(0, -kInvSqrt2) * (a(u, m) - ad(u, m));
    };

    if (name == "number") return ad(a(v, m1), m1);
    if (name == "x") return x(v, m1);
    if (name == "p") return p(v, m1);
    if (name == "x2") return x(x(v, m1), m1);
    if (name == "p2") return p(p(v, m1), m1);
    if (name == "xx") {
        if (m2 < 0) throw Error("expectation: xx needs two modes");
        return x(x(v, m1), m2);
    }
    if (name == "pp") {
        if (m2 < 0) throw Error("expectation: pp needs two modes");
        return p(p(v, m1), m2);
    }
    throw Error("expectation: unknown observable name '" + std::string(name) + "'");
}

}  // namespace

num::Complex expectation(const MultiModeState& psi, std::string_view name, int m1, int m2) {
    return psi.amplitudes().dot(apply_observable(psi.amplitudes(), psi.cutoffs(), name, m1, m2));
}

num::Complex expectation(const DensityOperator& rho, std::string_view name, int m1, int m2) {
    // Tr[rho O] = sum_j row_j(rho) . (O e_j)
    num::Complex tr = 0.0;
    const Eigen::Index d = rho.dim();
    num::Vector ej = num::Vector::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        ej[j] = 1.0;
        const num::Vector oj = apply_observable(ej, rho.cutoffs(), name, m1, m2);
        tr += rho.matrix().row(j).transpose().cwiseProduct(oj).sum();
        ej[j] = 0.0;
    }
    return tr;
}

namespace {

// First and second ladder moments of a density operator for two modes.
struct LadderMoments {
    num::Complex ma, mb;        // <a_i>, <a_j>
    num::Complex aa, bb, ab;    // <a_i^2>, <a_j^2>, <a_i a_j>
    num::Complex adb;           // <a_i† a_j>
    double na, nb;              // <a_i† a_i>, <a_j† a_j>
};

LadderMoments ladder_moments(const DensityOperator& rho, int mi, int mj) {
    const auto& c = rho.cutoffs();
    const Eigen::Index d = rho.dim();
    // Tr[rho O] with O built by applying ladder ops to basis columns.
    const auto trace_of = [&](auto&& apply_op) {
        num::Complex tr = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) {
            num::Vector ej = num::Vector::Zero(d);
            ej[j] = 1.0;
            const num::Vector oj = apply_op(ej);
            tr += rho.matrix().row(j).transpose().cwiseProduct(oj).sum();
        }
        return tr;
    };
    LadderMoments m;
    m.ma = trace_of([&](const num::Vector& v) { return apply_annihilation(v, c, mi); });
    m.mb = trace_of([&](const num::Vector& v) { return apply_annihilation(v, c, mj); });
    m.aa = trace_of([&](const num::Vector& v) {
        return apply_annihilation(apply_annihilation(v, c, mi), c, mi);
    });
    m.bb = trace_of([&](const num::Vector& v) {
        return apply_annihilation(apply_annihilation(v, c, mj), c, mj);
    });
    m.ab = trace_of([&](const num::Vector& v) {
        return apply_annihilation(apply_annihilation(v, c, mj), c, mi);
    });
    m.adb = trace_of([&](const num::Vector& v) {
        return apply_creation(apply_annihilation(v, c, mj), c, mi);
    });
    m.na = trace_of([&](const num::Vector& v) {
        return apply_creation(apply_annihilation(v, c, mi), c, mi);
    }).real();
    m.nb = trace_of([&](const num::Vector& v) {
        return apply_creation(apply_annihilation(v, c, mj), c, mj);
    }).real();
    return m;
}

}  // namespace

QuadratureMoments quadrature_moments(const DensityOperator& rho, int mode_i, int mode_j) {
    if (mode_i == mode_j) throw Error("quadrature_moments: modes must be distinct");
    check_mode(rho.cutoffs(), mode_i);
    check_mode(rho.cutoffs(), mode_j);

    const LadderMoments m = ladder_moments(rho, mode_i, mode_j);
    const double sqrt2 = std::sqrt(2.0);

    QuadratureMoments q;
    q.mean << sqrt2 * m.ma.real(), sqrt2 * m.ma.imag(), sqrt2 * m.mb.real(), sqrt2 * m.mb.imag();

    // Second moments from ladder moments, then subtract means.
    const double xi2 = 0.5 * (1.0 + 2.0 * m.na + 2.0 * m.aa.real());
    const double pi2 = 0.5 * (1.0 + 2.0 * m.na - 2.0 * m.aa.real());
    const double xj2 = 0.5 * (1.0 + 2.0 * m.nb + 2.0 * m.bb.real());
    const double pj2 = 0.5 * (1.0 + 2.0 * m.nb - 2.0 * m.bb.real());
    const double xipi = m.aa.imag();  // symmetrized <x_i p_i>
    const double xjpj = m.bb.imag();
    const double xixj = m.ab.real() + m.adb.real();
    const double pipj = m.adb.real() - m.ab.real();
    const double xipj = m.ab.imag() + m.adb.imag();
    const double pixj = m.ab.imag() - m.adb.imag();

    Eigen::Matrix4d second;
    second << xi2, xipi, xixj, xipj,
              xipi, pi2, pixj, pipj,
              xixj, pixj, xj2, xjpj,
              xipj, pipj, xjpj, pj2;
    q.cov = second - q.mean * q.mean.transpose();
    return q;
}

}  // namespace deit::fock

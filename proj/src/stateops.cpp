#include "deit/stateops.hpp"

#include <cmath>

namespace deit::ops {

using fock::DensityOperator;
using fock::MultiModeState;
using num::Complex;
using num::Matrix;
using num::Vector;

MultiModeState cross_kerr(const MultiModeState& psi, int ma, int mc, double phi) {
    if (ma == mc) throw Error("cross_kerr: modes must be distinct");
    MultiModeState out = psi;
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const auto occ = psi.occupations_of(i);
        out.amplitudes()[i] *= std::exp(Complex(0, -phi * occ[ma] * occ[mc]));
    }
    return out;
}

Matrix beam_splitter_pair_matrix(int dim_a, int dim_c, double theta) {
    const Eigen::Index d = Eigen::Index(dim_a) * dim_c;
    // Hermitian generator i(a c† - a†c); exp(-i theta G) = exp[theta(a†c - a c†)]
    Matrix g = Matrix::Zero(d, d);
    const auto idx = [&](int na, int nc) { return Eigen::Index(na) * dim_c + nc; };
    for (int na = 0; na < dim_a - 1; ++na)
        for (int nc = 1; nc < dim_c; ++nc) {
            const double f = std::sqrt(double(na + 1) * nc);
            g(idx(na + 1, nc - 1), idx(na, nc)) = Complex(0, -f);  // -i a†c
            g(idx(na, nc), idx(na + 1, nc - 1)) = Complex(0, f);
        }
    return num::unitary_exp(theta * g);
}

namespace {

// Contracts a pair-space unitary over modes (ma, mc) of a flattened state.
Vector apply_pair_unitary(const Vector& v, const std::vector<int>& cutoffs, int ma, int mc,
                          const Matrix& u) {
    const int nmodes = static_cast<int>(cutoffs.size());
    std::vector<Eigen::Index> strides(nmodes);
    Eigen::Index s = 1;
    for (int m = nmodes - 1; m >= 0; --m) {
        strides[m] = s;
        s *= cutoffs[m] + 1;
    }
    const int da = cutoffs[ma] + 1, dc = cutoffs[mc] + 1;

    // Spectator index enumeration
    std::vector<int> spect;
    for (int m = 0; m < nmodes; ++m)
        if (m != ma && m != mc) spect.push_back(m);
    Eigen::Index spect_dim = 1;
    for (int m : spect) spect_dim *= cutoffs[m] + 1;

    Vector out = Vector::Zero(v.size());
    Vector in_block(da * dc), out_block(da * dc);
    for (Eigen::Index sp = 0; sp < spect_dim; ++sp) {
        Eigen::Index base = 0, rem = sp;
        for (int m : spect) {
            const Eigen::Index dm = cutoffs[m] + 1;
            base += (rem % dm) * strides[m];
            rem /= dm;
        }
        for (int na = 0; na < da; ++na)
            for (int nc = 0; nc < dc; ++nc)
                in_block[Eigen::Index(na) * dc + nc] =
                    v[base + na * strides[ma] + nc * strides[mc]];
        out_block.noalias() = u * in_block;
        for (int na = 0; na < da; ++na)
            for (int nc = 0; nc < dc; ++nc)
                out[base + na * strides[ma] + nc * strides[mc]] =
                    out_block[Eigen::Index(na) * dc + nc];
    }
    return out;
}

double edge_weight(const MultiModeState& psi, int ma, int mc) {
    double w = 0.0;
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const auto occ = psi.occupations_of(i);
        if (occ[ma] > psi.cutoffs()[ma] - 2 || occ[mc] > psi.cutoffs()[mc] - 2)
            w += std::norm(psi.amplitudes()[i]);
    }
    return w;
}

}  // namespace

MultiModeState beam_splitter(const MultiModeState& psi, int ma, int mc) {
    if (ma == mc) throw Error("beam_splitter: modes must be distinct");
    if (psi.cutoffs()[ma] != psi.cutoffs()[mc])
        throw Error("beam_splitter: modes must share a cutoff");

    const int d = psi.cutoffs()[ma] + 1;
    const Matrix u = beam_splitter_pair_matrix(d, d, M_PI / 4.0);

    MultiModeState out = psi;
    out.amplitudes() = apply_pair_unitary(psi.amplitudes(), psi.cutoffs(), ma, mc, u);
    out.set_lost_weight(psi.lost_weight() + edge_weight(psi, ma, mc), 1e-8);
    return out;
}

DensityOperator loss_channel(const DensityOperator& rho, int mode, double eta) {
    if (eta < 0.0 || eta > 1.0) throw Error("loss_channel: eta outside [0, 1]");
    if (mode < 0 || mode >= rho.modes()) throw Error("loss_channel: bad mode");

    const int d = rho.cutoffs()[mode] + 1;
    // Kraus operators of the vacuum-ancilla splitter, K_k = <k|B(theta)|0>:
    // K_k(n, m) = sqrt(C(m,k)) (sqrt(eta))^{m-k} (-sqrt(1-eta))^k δ_{n,m-k}
    const double t = std::sqrt(eta), r = std::sqrt(1.0 - eta);
    std::vector<std::vector<double>> kraus(d);  // kraus[k][n] multiplies |n+k> -> |n>
    for (int k = 0; k < d; ++k) {
        kraus[k].resize(d - k);
        for (int n = 0; n + k < d; ++n) {
            const int m = n + k;
            double c = 1.0;  // sqrt(C(m,k)) t^{m-k} r^k
            for (int i = 0; i < k; ++i) c *= std::sqrt(double(m - i) / double(i + 1));
            c *= std::pow(t, m - k) * std::pow(r, k) * ((k % 2) ? -1.0 : 1.0);
            if (k == 0 && m == 0) c = 1.0;
            kraus[k][n] = c;
        }
    }

    const auto& cutoffs = rho.cutoffs();
    const int nmodes = rho.modes();
    std::vector<Eigen::Index> strides(nmodes);
    Eigen::Index s = 1;
    for (int m = nmodes - 1; m >= 0; --m) {
        strides[m] = s;
        s *= cutoffs[m] + 1;
    }
    const Eigen::Index stride = strides[mode];
    const Eigen::Index dim = rho.dim();

    DensityOperator out(cutoffs);
    // rho'(i, j) = sum_k kraus[k][n_i] kraus[k][n_j] rho(i + k*stride_m, j + k*stride_m)
    for (Eigen::Index i = 0; i < dim; ++i) {
        const int ni = static_cast<int>((i / stride) % d);
        for (Eigen::Index j = 0; j < dim; ++j) {
            const int nj = static_cast<int>((j / stride) % d);
            Complex sum = 0.0;
            const int kmax = std::min(d - 1 - ni, d - 1 - nj);
            for (int k = 0; k <= kmax; ++k)
                sum += kraus[k][ni] * kraus[k][nj] *
                       rho.matrix()(i + k * stride, j + k * stride);
            out.matrix()(i, j) = sum;
        }
    }
    return out;
}

ProjectionResult click_projection(const MultiModeState& psi, int mode, ClickOutcome outcome) {
    if (mode < 0 || mode >= psi.modes()) throw Error("click_projection: bad mode");
    MultiModeState proj = psi;
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const bool vacuum = psi.occupations_of(i)[mode] == 0;
        if ((outcome == ClickOutcome::NoClick) != vacuum) proj.amplitudes()[i] = 0.0;
    }
    const double n2 = proj.amplitudes().squaredNorm();
    const double total = psi.amplitudes().squaredNorm();
    const double prob = total > 0.0 ? n2 / total : 0.0;
    if (prob <= 1e-20) throw Error("click_projection: conditioning on zero-probability outcome");
    proj.amplitudes() /= std::sqrt(n2);
    return {proj, prob};
}

}  // namespace deit::ops

#include "deit/blockade.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace deit::blockade {

using num::Complex;
using num::Matrix;
using num::Vector;

namespace {
constexpr Complex I{0.0, 1.0};

// Conserved color charges: Qa = n_a + m1 + m4 + m5, Qb = n_b + m3 + m6 + m5.
int charge_a(const BasisState& s) { return s.n_a + s.level_occ[0] + s.level_occ[3] + s.level_occ[4]; }
int charge_b(const BasisState& s) { return s.n_b + s.level_occ[2] + s.level_occ[5] + s.level_occ[4]; }

struct Key {
    std::array<int, 6> occ;
    int na, nb;
    bool operator<(const Key& o) const {
        if (occ != o.occ) return occ < o.occ;
        if (na != o.na) return na < o.na;
        return nb < o.nb;
    }
};

Key key_of(const BasisState& s) { return {s.level_occ, s.n_a, s.n_b}; }

}  // namespace

void CavityParams::validate() const {
    const double rates[] = {g_a, g_b, Omega_d, Delta, gamma, Gamma, delta, eps_pump};
    for (double r : rates)
        if (r < 0.0) throw Error("CavityParams: rates must be >= 0");
    if (Omega_d <= 0.0) throw Error("CavityParams: Omega_d must be positive");
    if (N_atoms < 1 || N_atoms > 4) throw Error("CavityParams: N_atoms must be in [1, 4]");
}

int ManifoldModel::index_of(const BasisState& s) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].level_occ == s.level_occ && basis[i].n_a == s.n_a && basis[i].n_b == s.n_b)
            return static_cast<int>(i);
    return -1;
}

namespace {

// Enumerates the symmetric sector reachable from |2..2> x |n_a, n_b> seeds of
// the requested excitation count by breadth-first closure under the couplings.
std::vector<BasisState> enumerate_basis(int n_atoms, int excitations) {
    std::vector<BasisState> seeds;
    if (excitations == 1) {
        seeds.push_back({{0, n_atoms, 0, 0, 0, 0}, 1, 0});
        seeds.push_back({{0, n_atoms, 0, 0, 0, 0}, 0, 1});
    } else {
        seeds.push_back({{0, n_atoms, 0, 0, 0, 0}, 1, 1});
    }

    // transitions: {from_level, to_level, photon_mode (0=a,1=b,-1=none), photon_change}
    struct Edge {
        int from, to, mode, dn;
    };
    const std::vector<Edge> edges = {
        {1, 4, -1, 0}, {4, 1, -1, 0},  // drive
        {3, 6, -1, 0}, {6, 3, -1, 0},
        {2, 4, 0, -1}, {4, 2, 0, +1},  // mode a
        {3, 5, 0, -1}, {5, 3, 0, +1},
        {2, 6, 1, -1}, {6, 2, 1, +1},  // mode b
        {1, 5, 1, -1}, {5, 1, 1, +1},
    };

    std::map<Key, int> seen;
    std::vector<BasisState> basis;
    std::vector<BasisState> queue = seeds;
    for (const auto& s : seeds) {
        seen[key_of(s)] = static_cast<int>(basis.size());
        basis.push_back(s);
    }
    while (!queue.empty()) {
        const BasisState s = queue.back();
        queue.pop_back();
        for (const auto& e : edges) {
            if (s.level_occ[e.from - 1] == 0) continue;
            BasisState t = s;
            t.level_occ[e.from - 1]--;
            t.level_occ[e.to - 1]++;
            if (e.mode == 0) t.n_a += e.dn;
            if (e.mode == 1) t.n_b += e.dn;
            if (t.n_a < 0 || t.n_b < 0) continue;
            const Key k = key_of(t);
            if (!seen.count(k)) {
                seen[k] = static_cast<int>(basis.size());
                basis.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const BasisState& x, const BasisState& y) { return key_of(x) < key_of(y); });
    return basis;
}

}  // namespace

ManifoldModel build_manifold(const CavityParams& p, int excitations, bool include_decay) {
    p.validate();
    if (excitations != 1 && excitations != 2)
        throw Error("build_manifold: excitations must be 1 or 2");

    ManifoldModel model;
    model.excitations = excitations;
    model.basis = enumerate_basis(p.N_atoms, excitations);

    const int dim = static_cast<int>(model.basis.size());
    Matrix h = Matrix::Zero(dim, dim);

    std::map<Key, int> index;
    for (int i = 0; i < dim; ++i) index[key_of(model.basis[i])] = i;

    // Collective |to><from| with coupling v; the symmetric-sector matrix
    // element is sqrt(m_from (m_to + 1)), photon factors sqrt(n).
    const auto add_coupling = [&](const BasisState& s, int from, int to, double v, int mode,
                                  int dn) {
        if (s.level_occ[from - 1] == 0) return;
        BasisState t = s;
        t.level_occ[from - 1]--;
        t.level_occ[to - 1]++;
        double amp = v * std::sqrt(double(s.level_occ[from - 1]) * double(t.level_occ[to - 1]));
        if (mode == 0) {
            t.n_a += dn;
            if (t.n_a < 0) return;
            amp *= std::sqrt(double(dn < 0 ? s.n_a : t.n_a));
        } else if (mode == 1) {
            t.n_b += dn;
            if (t.n_b < 0) return;
            amp *= std::sqrt(double(dn < 0 ? s.n_b : t.n_b));
        }
        const auto it = index.find(key_of(t));
        if (it == index.end()) return;
        h(it->second, index.at(key_of(s))) += amp;
    };

    for (const auto& s : model.basis) {
        add_coupling(s, 1, 4, p.Omega_d, -1, 0);
        add_coupling(s, 4, 1, p.Omega_d, -1, 0);
        add_coupling(s, 3, 6, -p.Omega_d, -1, 0);
        add_coupling(s, 6, 3, -p.Omega_d, -1, 0);
        add_coupling(s, 2, 4, p.g_a, 0, -1);
        add_coupling(s, 4, 2, p.g_a, 0, +1);
        add_coupling(s, 2, 6, -p.g_b, 1, -1);
        add_coupling(s, 6, 2, -p.g_b, 1, +1);
        add_coupling(s, 1, 5, p.g_b, 1, -1);
        add_coupling(s, 5, 1, p.g_b, 1, +1);
        add_coupling(s, 3, 5, p.g_a, 0, -1);
        add_coupling(s, 5, 3, p.g_a, 0, +1);
    }
    for (int i = 0; i < dim; ++i) {
        const auto& s = model.basis[i];
        Complex diag = p.Delta * s.level_occ[4] + p.delta * (s.level_occ[3] + s.level_occ[5]);
        if (include_decay) {
            diag -= I * p.gamma * double(s.level_occ[3] + s.level_occ[4] + s.level_occ[5]);
            diag -= I * p.Gamma * double(s.n_a + s.n_b);
        }
        h(i, i) += diag;
    }
    model.hamiltonian = h;
    return model;
}

SpectrumScan blockade_spectrum_scan(CavityParams p, const std::vector<double>& g_b_grid,
                                    int n_atoms, double delta) {
    p.N_atoms = n_atoms;
    p.delta = delta;
    SpectrumScan scan;
    scan.g_b = g_b_grid;
    scan.eigenvalues.reserve(g_b_grid.size());
    scan.gap.reserve(g_b_grid.size());
    for (double gb : g_b_grid) {
        if (gb < 0.0 || gb > p.Omega_d) throw Error("blockade_spectrum_scan: grid outside [0, Omega_d]");
        CavityParams q = p;
        q.g_b = gb;
        const ManifoldModel model = build_manifold(q, 2, true);
        const num::GeneralEigen eig = num::eig_general(model.hamiltonian);
        scan.eigenvalues.push_back(eig.values);
        double gap = std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < eig.values.size(); ++k)
            gap = std::min(gap, std::abs(eig.values[k].real()));
        scan.gap.push_back(gap);
    }
    return scan;
}

DarkState collective_dark_state(const CavityParams& p, int n_atoms) {
    if (n_atoms < 1) throw Error("collective_dark_state: need at least one atom");
    CavityParams q = p;
    q.N_atoms = n_atoms;
    DarkState out{build_manifold(q, 1, false), Vector()};

    const double norm = std::sqrt(p.Omega_d * p.Omega_d + n_atoms * p.g_a * p.g_a);
    BasisState ground{{0, n_atoms, 0, 0, 0, 0}, 1, 0};
    BasisState flipped{{1, n_atoms - 1, 0, 0, 0, 0}, 0, 0};
    Vector v = Vector::Zero(out.manifold.basis.size());
    v[out.manifold.index_of(ground)] = p.Omega_d / norm;
    v[out.manifold.index_of(flipped)] = -p.g_a * std::sqrt(double(n_atoms)) / norm;
    out.amplitudes = v;
    return out;
}

double steady_population(double rabi, double detuning, double gamma) {
    if (!(rabi > 0.0)) throw Error("steady_population: rabi must be positive");
    const double r2 = rabi * rabi;
    return (r2 / 4.0) / (detuning * detuning + r2 / 2.0 + gamma * gamma / 4.0);
}

namespace {

// Drive images eps (a† + b†) |D_a x 0_b>, |D_b x 0_a> expressed in the
// doubly-excited basis (unit prefactor; multiply by eps where used).
void drive_images(const ManifoldModel& two, const CavityParams& p, Vector& from_da,
                  Vector& from_db) {
    const int n = p.N_atoms;
    const double ma = std::sqrt(p.Omega_d * p.Omega_d + n * p.g_a * p.g_a);
    const double mb = std::sqrt(p.Omega_d * p.Omega_d + n * p.g_b * p.g_b);
    from_da = Vector::Zero(two.basis.size());
    from_db = Vector::Zero(two.basis.size());
    BasisState ground2{{0, n, 0, 0, 0, 0}, 1, 1};
    BasisState flip1a{{1, n - 1, 0, 0, 0, 0}, 0, 1};
    BasisState flip1b{{0, n - 1, 1, 0, 0, 0}, 1, 0};
    from_da[two.index_of(ground2)] = p.Omega_d / ma;            // b† on |2..2,1,0>
    from_da[two.index_of(flip1a)] = -p.g_a * std::sqrt(double(n)) / ma;
    from_db[two.index_of(ground2)] = p.Omega_d / mb;            // a† on |2..2,0,1>
    from_db[two.index_of(flip1b)] = -p.g_b * std::sqrt(double(n)) / mb;
}

}  // namespace

FiveLevelModel effective_five_level(const CavityParams& p) {
    p.validate();
    const ManifoldModel two = build_manifold(p, 2, false);
    const num::HermitianEigen eig = num::eig_hermitian(two.hamiltonian);

    // the two eigenvalues nearest the two-photon resonance
    int k1 = -1, k2 = -1;
    for (int k = 0; k < eig.values.size(); ++k) {
        if (k1 < 0 || std::abs(eig.values[k]) < std::abs(eig.values[k1])) {
            k2 = k1;
            k1 = k;
        } else if (k2 < 0 || std::abs(eig.values[k]) < std::abs(eig.values[k2])) {
            k2 = k;
        }
    }
    if (eig.values[k1] > eig.values[k2]) std::swap(k1, k2);  // k1 = lower
    FiveLevelModel out;
    out.E_minus = eig.values[k1];
    out.E_plus = eig.values[k2];
    out.Delta_prime = 0.5 * (std::abs(out.E_plus) + std::abs(out.E_minus));
    out.asymmetry = std::abs(out.E_plus + out.E_minus) / std::max(out.Delta_prime, 1e-300);
    out.symmetric_warning = out.asymmetry > 0.10;

    Vector from_da, from_db;
    drive_images(two, p, from_da, from_db);

    const double va = p.eps_pump * p.Omega_d /
                      std::sqrt(p.Omega_d * p.Omega_d + p.N_atoms * p.g_a * p.g_a);
    const double vb = p.eps_pump * p.Omega_d /
                      std::sqrt(p.Omega_d * p.Omega_d + p.N_atoms * p.g_b * p.g_b);

    Matrix h = Matrix::Zero(5, 5);
    h(3, 3) = out.E_plus;
    h(4, 4) = out.E_minus;
    h(0, 1) = h(1, 0) = va;  // <D_a| eps a† |2..2,0,0>
    h(0, 2) = h(2, 0) = vb;
    const Vector ep = eig.vectors.col(k2);
    const Vector em = eig.vectors.col(k1);
    const Complex c42 = p.eps_pump * ep.dot(from_da);
    const Complex c43 = p.eps_pump * ep.dot(from_db);
    const Complex c52 = p.eps_pump * em.dot(from_da);
    const Complex c53 = p.eps_pump * em.dot(from_db);
    h(3, 1) = c42;
    h(1, 3) = std::conj(c42);
    h(3, 2) = c43;
    h(2, 3) = std::conj(c43);
    h(4, 1) = c52;
    h(1, 4) = std::conj(c52);
    h(4, 2) = c53;
    h(2, 4) = std::conj(c53);
    out.hamiltonian = h;
    return out;
}

FiveLevelDynamics five_level_dynamics(const CavityParams& p, const std::vector<double>& t_grid) {
    if (p.eps_pump > 0.2 * p.Omega_d)
        throw Error("five_level_dynamics: pump beyond the weak regime (eps <= 0.2 Omega_d)");
    const FiveLevelModel model = effective_five_level(p);

    Vector c0 = Vector::Zero(5);
    c0[0] = 1.0;
    const auto traj = num::integrate_schrodinger(model.hamiltonian, c0, t_grid);

    FiveLevelDynamics out;
    out.t = t_grid;
    for (auto& v : out.populations) v.reserve(t_grid.size());
    for (const auto& v : traj)
        for (int j = 0; j < 5; ++j) out.populations[j].push_back(std::norm(v[j]));

    out.max_c2 = *std::max_element(out.populations[1].begin(), out.populations[1].end());
    out.max_c3 = *std::max_element(out.populations[2].begin(), out.populations[2].end());
    out.max_c4 = *std::max_element(out.populations[3].begin(), out.populations[3].end());
    out.max_c5 = *std::max_element(out.populations[4].begin(), out.populations[4].end());

    const double g2 = 0.5 * (p.g_a * p.g_a + p.g_b * p.g_b);
    out.omega_r = p.Omega_d * p.eps_pump / std::sqrt(p.Omega_d * p.Omega_d + g2);
    const double va = std::abs(model.hamiltonian(0, 1));

    // closed three-level solution: |C1|^2 = cos^2(sqrt(va^2+vb^2) t)
    const double vb = std::abs(model.hamiltonian(0, 2));
    const double veff = std::hypot(va, vb);
    out.analytic_c1.reserve(t_grid.size());
    for (double t : t_grid) {
        const double c = std::cos(veff * (t - t_grid.front()));
        out.analytic_c1.push_back(c * c);
    }

    // dominant |C1|^2 frequency from successive minima
    std::vector<double> minima;
    const auto& c1 = out.populations[0];
    for (size_t i = 1; i + 1 < c1.size(); ++i)
        if (c1[i] < c1[i - 1] && c1[i] <= c1[i + 1]) minima.push_back(t_grid[i]);
    if (minima.size() >= 2) {
        double spacing = 0.0;
        for (size_t i = 1; i < minima.size(); ++i) spacing += minima[i] - minima[i - 1];
        spacing /= double(minima.size() - 1);
        out.measured_frequency = M_PI / spacing;  // |C1|^2 = cos^2 -> period pi/omega
    }
    out.frequency_ratio = out.omega_r > 0.0 ? out.measured_frequency / out.omega_r : 0.0;
    return out;
}

ProjectionResult project_entangled_modes(const CavityParams& p) {
    p.validate();
    const double ca = p.Omega_d / std::sqrt(p.Omega_d * p.Omega_d + p.g_a * p.g_a);
    const double cb = p.Omega_d / std::sqrt(p.Omega_d * p.Omega_d + p.g_b * p.g_b);
    fock::MultiModeState psi({1, 1});
    const double norm = std::hypot(ca, cb);
    psi.amplitudes()[psi.index_of({1, 0})] = ca / norm;
    psi.amplitudes()[psi.index_of({0, 1})] = cb / norm;
    return {psi, 0.5 * (ca * ca + cb * cb)};
}

}  // namespace deit::blockade

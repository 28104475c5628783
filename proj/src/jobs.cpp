#include "deit/jobs.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "deit/catlab.hpp"
#include "deit/dressed.hpp"

namespace deit::jobs {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double two_pi() { return 2.0 * M_PI; }

}  // namespace

void CurveSeries::add_meta(const std::string& k, double v) { metadata.emplace_back(k, fmt(v)); }
void CurveSeries::add_meta(const std::string& k, const std::string& v) {
    metadata.emplace_back(k, v);
}

void write_csv(const CurveSeries& series, std::ostream& out, bool timestamp) {
    if (timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[64];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
        out << "# generated_at " << buf << "\n";
    }
    for (const auto& [k, v] : series.metadata) out << "# " << k << " " << v << "\n";
    for (size_t c = 0; c < series.columns.size(); ++c)
        out << series.columns[c] << (c + 1 < series.columns.size() ? "," : "\n");
    for (const auto& row : series.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            out << fmt(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
}

std::string csv_string(const CurveSeries& series, bool timestamp) {
    std::ostringstream ss;
    write_csv(series, ss, timestamp);
    return ss.str();
}

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("DEIT_LAB_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                if (failed.load()) return;
                try {
                    body(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    failed.store(true);
                    if (error.empty()) error = e.what();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) throw NumericalError("worker failure: " + error);
}

namespace {

// Reads a rate either as rad/s (plain key) or as Hz (key_hz, converted).
double rate_key(const Config& cfg, const std::string& key, double fallback) {
    if (cfg.has(key + "_hz")) return two_pi() * cfg.get_double(key + "_hz", 0.0);
    return cfg.get_double(key, fallback);
}

}  // namespace

eit::MediumParams medium_from_config(const Config& cfg) {
    eit::MediumParams p;
    p.gamma = rate_key(cfg, "medium.gamma", p.gamma);
    p.Delta = rate_key(cfg, "medium.Delta", p.Delta);
    p.Delta_U = rate_key(cfg, "medium.Delta_U", p.Delta_U);
    p.Delta_L = rate_key(cfg, "medium.Delta_L", p.Delta_L);
    p.Omega_d = rate_key(cfg, "medium.Omega_d", p.Omega_d);
    p.d24 = cfg.get_double("medium.d24", p.d24);
    p.d26 = cfg.get_double("medium.d26", p.d26);
    p.N_density = cfg.get_double("medium.density", p.N_density);
    p.omega_a = rate_key(cfg, "medium.omega_a", p.omega_a);
    p.omega_b = rate_key(cfg, "medium.omega_b", p.omega_b);
    p.V = cfg.get_double("medium.volume", p.V);
    p.L = cfg.get_double("medium.length", p.L);
    p.validate();
    return p;
}

blockade::CavityParams cavity_from_config(const Config& cfg) {
    blockade::CavityParams p;
    p.Omega_d = cfg.get_double("cavity.Omega_d", p.Omega_d);
    p.g_a = cfg.get_double("cavity.g_a", p.g_a) ;
    p.g_b = cfg.get_double("cavity.g_b", p.g_b);
    p.Delta = cfg.get_double("cavity.Delta", p.Delta);
    p.gamma = cfg.get_double("cavity.gamma", p.gamma);
    p.Gamma = cfg.get_double("cavity.Gamma", p.Gamma);
    p.delta = cfg.get_double("cavity.delta", p.delta);
    p.eps_pump = cfg.get_double("cavity.eps_pump", p.eps_pump);
    p.N_atoms = cfg.get_int("cavity.n_atoms", p.N_atoms);
    p.validate();
    return p;
}

namespace {

void meta_cavity(CurveSeries& s, const blockade::CavityParams& p) {
    s.add_meta("param cavity.Omega_d", p.Omega_d);
    s.add_meta("param cavity.g_a", p.g_a);
    s.add_meta("param cavity.g_b", p.g_b);
    s.add_meta("param cavity.Delta", p.Delta);
    s.add_meta("param cavity.gamma", p.gamma);
    s.add_meta("param cavity.Gamma", p.Gamma);
    s.add_meta("param cavity.delta", p.delta);
    s.add_meta("param cavity.eps_pump", p.eps_pump);
    s.add_meta("param cavity.n_atoms", p.N_atoms);
}

void meta_medium(CurveSeries& s, const eit::MediumParams& p) {
    s.add_meta("param medium.gamma", p.gamma);
    s.add_meta("param medium.Delta", p.Delta);
    s.add_meta("param medium.Delta_U", p.Delta_U);
    s.add_meta("param medium.Delta_L", p.Delta_L);
    s.add_meta("param medium.Omega_d", p.Omega_d);
    s.add_meta("param medium.d24", p.d24);
    s.add_meta("param medium.d26", p.d26);
    s.add_meta("param medium.density", p.N_density);
    s.add_meta("param medium.omega_a", p.omega_a);
    s.add_meta("param medium.omega_b", p.omega_b);
    s.add_meta("param medium.volume", p.V);
    s.add_meta("param medium.length", p.L);
}

int cat_cutoff(const Config& cfg, double gamma_max) {
    const int manual = cfg.get_int("cat.cutoff", 0);
    if (manual > 0) return manual;
    return fock::coherent_cutoff(gamma_max / std::sqrt(2.0));
}

double duan_point(double gamma_amp, double c, double eta, int cutoff) {
    const auto rho = catlab::split_cat_density(gamma_amp, c, {cutoff, cutoff});
    return catlab::duan_S(rho, eta).S;
}

CurveSeries job_fig3a(const Config& cfg) {
    Grid grid{cfg.get_double("grid.start", 0.0), cfg.get_double("grid.stop", 3.0),
              cfg.get_int("grid.points", 200)};
    grid.validate("grid");
    const auto cs = cfg.get_double_list("cat.c_list", {0.0, 0.5, 1.0});
    const double eta = cfg.get_double("cat.eta", 1.0);
    const int cutoff = cat_cutoff(cfg, std::max(std::abs(grid.start), std::abs(grid.stop)));

    CurveSeries s;
    s.add_meta("job", "fig3a");
    s.add_meta("param grid.start", grid.start);
    s.add_meta("param grid.stop", grid.stop);
    s.add_meta("param grid.points", grid.points);
    s.add_meta("param cat.eta", eta);
    s.add_meta("param cat.cutoff", cutoff);
    s.columns.push_back("gamma");
    for (double c : cs) {
        s.add_meta("param cat.c", c);
        s.columns.push_back("S_c" + fmt(c));
    }
    const auto gs = grid.values();
    s.rows.assign(gs.size(), {});
    parallel_for(static_cast<int>(gs.size()), [&](int i) {
        std::vector<double> row{gs[i]};
        for (double c : cs) row.push_back(duan_point(gs[i], c, eta, cutoff));
        s.rows[i] = std::move(row);
    });
    return s;
}

CurveSeries job_fig3b(const Config& cfg) {
    Grid grid{cfg.get_double("grid.start", 0.0), cfg.get_double("grid.stop", 3.0),
              cfg.get_int("grid.points", 200)};
    grid.validate("grid");
    const auto etas = cfg.get_double_list("cat.eta_list", {0.0, 0.4, 0.8});
    const double c = cfg.get_double("cat.c", 1.0);
    const int cutoff = cat_cutoff(cfg, std::max(std::abs(grid.start), std::abs(grid.stop)));

    CurveSeries s;
    s.add_meta("job", "fig3b");
    s.add_meta("param grid.start", grid.start);
    s.add_meta("param grid.stop", grid.stop);
    s.add_meta("param grid.points", grid.points);
    s.add_meta("param cat.c", c);
    s.add_meta("param cat.cutoff", cutoff);
    s.columns.push_back("gamma");
    for (double eta : etas) {
        s.add_meta("param cat.eta", eta);
        s.columns.push_back("S_eta" + fmt(eta));
    }
    const auto gs = grid.values();
    s.rows.assign(gs.size(), {});
    parallel_for(static_cast<int>(gs.size()), [&](int i) {
        std::vector<double> row{gs[i]};
        for (double eta : etas) row.push_back(duan_point(gs[i], c, eta, cutoff));
        s.rows[i] = std::move(row);
    });
    return s;
}

CurveSeries scan_job(const Config& cfg, const char* name, int default_atoms,
                     double default_delta) {
    blockade::CavityParams p = cavity_from_config(cfg);
    if (!cfg.has("cavity.n_atoms")) p.N_atoms = default_atoms;
    if (!cfg.has("cavity.delta")) p.delta = default_delta * p.Omega_d;
    Grid grid{cfg.get_double("grid.start", 0.0), cfg.get_double("grid.stop", p.Omega_d),
              cfg.get_int("grid.points", 200)};
    grid.validate("grid");

    const auto gs = grid.values();
    const auto scan = blockade::blockade_spectrum_scan(p, gs, p.N_atoms, p.delta);
    const int dim = static_cast<int>(scan.eigenvalues.front().size());

    CurveSeries s;
    s.add_meta("job", name);
    meta_cavity(s, p);
    s.add_meta("param grid.start", grid.start);
    s.add_meta("param grid.stop", grid.stop);
    s.add_meta("param grid.points", grid.points);
    s.columns.push_back("g_b");
    for (int k = 0; k < dim; ++k) s.columns.push_back("ReE" + std::to_string(k + 1));
    for (int k = 0; k < dim; ++k) s.columns.push_back("ImE" + std::to_string(k + 1));
    s.columns.push_back("gap");
    for (size_t i = 0; i < gs.size(); ++i) {
        std::vector<double> row{gs[i]};
        for (int k = 0; k < dim; ++k) row.push_back(scan.eigenvalues[i][k].real());
        for (int k = 0; k < dim; ++k) row.push_back(scan.eigenvalues[i][k].imag());
        row.push_back(scan.gap[i]);
        s.rows.push_back(std::move(row));
    }
    return s;
}

CurveSeries job_fig7(const Config& cfg) {
    blockade::CavityParams p = cavity_from_config(cfg);
    if (!cfg.has("cavity.g_a")) p.g_a = 0.5 * p.Omega_d;
    if (!cfg.has("cavity.g_b")) p.g_b = 0.5 * p.Omega_d;
    if (!cfg.has("cavity.eps_pump")) p.eps_pump = 0.015 * p.Omega_d;

    const double g2 = 0.5 * (p.g_a * p.g_a + p.g_b * p.g_b);
    const double v = p.Omega_d * p.eps_pump / std::sqrt(p.Omega_d * p.Omega_d + g2);
    const double t_max = cfg.get_double("grid.stop", 3.0 * M_PI / (std::sqrt(2.0) * v));
    const int points = cfg.get_int("grid.points", 2000);
    if (points < 2) throw ConfigError("grid.points: needs at least 2 points");
    std::vector<double> ts(points);
    for (int i = 0; i < points; ++i) ts[i] = t_max * double(i) / double(points - 1);

    const auto dyn = blockade::five_level_dynamics(p, ts);

    CurveSeries s;
    s.add_meta("job", "fig7");
    meta_cavity(s, p);
    s.add_meta("param grid.stop", t_max);
    s.add_meta("param grid.points", points);
    s.add_meta("result omega_r", dyn.omega_r);
    s.add_meta("result measured_frequency", dyn.measured_frequency);
    s.add_meta("result frequency_ratio", dyn.frequency_ratio);
    s.add_meta("result max_c2", dyn.max_c2);
    s.add_meta("result max_c4", dyn.max_c4);
    s.add_meta("result max_c5", dyn.max_c5);
    s.columns = {"t", "C1", "C2", "C3", "C4", "C5", "C1_analytic"};
    for (size_t i = 0; i < ts.size(); ++i)
        s.rows.push_back({ts[i], dyn.populations[0][i], dyn.populations[1][i],
                          dyn.populations[2][i], dyn.populations[3][i], dyn.populations[4][i],
                          dyn.analytic_c1[i]});
    return s;
}

CurveSeries job_constants(const Config& cfg) {
    const eit::MediumParams p = medium_from_config(cfg);
    const auto pc = eit::propagation_constants(p);

    CurveSeries s;
    s.add_meta("job", "constants");
    meta_medium(s, p);
    s.columns = {"sigma0_a",  "sigma0_b",   "v_group",      "v_over_c",
                 "chi",       "pi_over_chi", "alpha_a_re",  "alpha_a_im",
                 "alpha_b_re", "alpha_b_im", "self_to_cross", "weak_absorption"};
    s.rows.push_back({pc.sigma0_a, pc.sigma0_b, pc.v_group,
                      pc.v_group / eit::constants::c_light, pc.chi, pc.pi_over_chi(),
                      pc.alpha_a.real(), pc.alpha_a.imag(), pc.alpha_b.real(),
                      pc.alpha_b.imag(), pc.self_to_cross_ratio,
                      p.weak_two_photon_absorption() ? 1.0 : 0.0});
    return s;
}

CurveSeries job_spectrum(const Config& cfg) {
    const blockade::CavityParams p = cavity_from_config(cfg);
    const int exc = cfg.get_int("cavity.excitations", 2);
    const bool decay = cfg.get_int("cavity.include_decay", 1) != 0;
    const auto model = blockade::build_manifold(p, exc, decay);
    const auto eig = num::eig_general(model.hamiltonian);

    CurveSeries s;
    s.add_meta("job", "spectrum");
    meta_cavity(s, p);
    s.add_meta("param cavity.excitations", exc);
    s.add_meta("param cavity.include_decay", decay ? 1.0 : 0.0);
    s.add_meta("basis_dim", static_cast<double>(model.basis.size()));
    s.columns = {"index", "ReE", "ImE"};
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        s.rows.push_back({double(k), eig.values[k].real(), eig.values[k].imag()});
    return s;
}

CurveSeries job_duan(const Config& cfg) {
    const double gamma_amp = cfg.get_double("cat.gamma", 2.0);
    const double c = cfg.get_double("cat.c", 1.0);
    const double eta = cfg.get_double("cat.eta", 1.0);
    const int cutoff = cat_cutoff(cfg, std::abs(gamma_amp));

    const auto rho = catlab::split_cat_density(gamma_amp, c, {cutoff, cutoff});
    const auto duan = catlab::duan_S(rho, eta);

    CurveSeries s;
    s.add_meta("job", "duan");
    s.add_meta("param cat.gamma", gamma_amp);
    s.add_meta("param cat.c", c);
    s.add_meta("param cat.eta", eta);
    s.add_meta("param cat.cutoff", cutoff);
    s.columns = {"gamma", "c", "eta", "S", "var_u", "var_v", "inseparable"};
    s.rows.push_back({gamma_amp, c, eta, duan.S, duan.var_u, duan.var_v,
                      duan.inseparable ? 1.0 : 0.0});
    return s;
}

}  // namespace

std::vector<std::string> job_names() {
    return {"fig3a", "fig3b", "fig5a", "fig5b", "fig7", "constants", "spectrum", "duan"};
}

CurveSeries run_job(const std::string& name, const Config& cfg) {
    if (name == "fig3a") return job_fig3a(cfg);
    if (name == "fig3b") return job_fig3b(cfg);
    if (name == "fig5a") return scan_job(cfg, "fig5a", 1, 0.0);
    if (name == "fig5b") return scan_job(cfg, "fig5b", 2, 0.1);
    if (name == "fig7") return job_fig7(cfg);
    if (name == "constants") return job_constants(cfg);
    if (name == "spectrum") return job_spectrum(cfg);
    if (name == "duan") return job_duan(cfg);
    throw ConfigError("unknown job '" + name + "'");
}

}  // namespace deit::jobs

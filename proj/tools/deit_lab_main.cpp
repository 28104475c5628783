#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "deit/jobs.hpp"

namespace {

int run(const std::string& job, const std::string& config_path, const std::string& out_path,
        const std::vector<std::string>& overrides) {
    using namespace deit;
    try {
        jobs::Config cfg = config_path.empty() ? jobs::Config()
                                               : jobs::Config::parse_file(config_path);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw jobs::ConfigError("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        const jobs::CurveSeries series = jobs::run_job(job, cfg);
        if (out_path.empty() || out_path == "-") {
            jobs::write_csv(series, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw jobs::ConfigError("cannot open output file: " + out_path);
            jobs::write_csv(series, out);
            std::cerr << job << ": wrote " << series.rows.size() << " rows to " << out_path
                      << "\n";
        }
        return 0;
    } catch (const jobs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-EIT cross-Kerr laboratory: figure reproduction and scans"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::vector<std::string> overrides;

    std::vector<std::pair<std::string, std::string>> jobs_help = {
        {"fig3a", "Duan witness S(gamma) for a list of purity parameters c"},
        {"fig3b", "Duan witness S(gamma) under homodyne efficiencies eta"},
        {"fig5a", "doubly-excited eigenenergies vs g_b, single atom"},
        {"fig5b", "blockade restoration scan vs g_b, N atoms with detuning delta"},
        {"fig7", "driven five-level population dynamics"},
        {"constants", "medium constants: sigma0, group velocity, chi, polarizabilities"},
        {"spectrum", "one-shot manifold diagonalization"},
        {"duan", "single Duan witness point S(gamma, c, eta)"},
    };
    for (const auto& [name, help] : jobs_help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "INI-style configuration file");
        sub->add_option("--out", out_path, "output CSV path (default: stdout)");
        sub->add_option("--set", overrides, "override config entries, section.key=value");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    return run(app.get_subcommands().front()->get_name(), config_path, out_path, overrides);
}

#include <doctest.h>

#include <sstream>

#include "deit/jobs.hpp"
#include "oracles.hpp"

using namespace deit;

namespace {

std::string strip_timestamp(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("# generated_at", 0) != 0) out << line << "\n";
    return out.str();
}

double column_value(const jobs::CurveSeries& s, size_t row, const std::string& name) {
    for (size_t c = 0; c < s.columns.size(); ++c)
        if (s.columns[c] == name) return s.rows.at(row).at(c);
    throw std::runtime_error("no column " + name);
}

}  // namespace

TEST_CASE("config parsing, overrides and diagnostics") {
    const std::string text = R"(
# comment
[cat]
gamma = 2.0
c = 1      ; trailing comment
[grid]
points = 7
)";
    auto cfg = jobs::Config::parse_text(text, "inline");
    CHECK(cfg.get_double("cat.gamma", 0.0) == 2.0);
    CHECK(cfg.get_double("cat.c", 0.0) == 1.0);
    CHECK(cfg.get_int("grid.points", 0) == 7);
    CHECK(cfg.get_double("cat.eta", 0.25) == 0.25);  // fallback

    cfg.set("cat.gamma", "1.5");
    CHECK(cfg.get_double("cat.gamma", 0.0) == 1.5);

    CHECK_THROWS_WITH_AS(jobs::Config::parse_text("[cat]\noops\n", "f"),
                         doctest::Contains("f:2"), jobs::ConfigError);
    auto bad = jobs::Config::parse_text("[cat]\ngamma = abc\n", "f");
    CHECK_THROWS_WITH_AS(bad.get_double("cat.gamma", 0.0), doctest::Contains("f:2"),
                         jobs::ConfigError);

    jobs::Grid g{1.0, 1.0, 5};
    CHECK_THROWS_AS(g.validate("grid"), jobs::ConfigError);
    jobs::Grid g2{0.0, 1.0, 1};
    CHECK_THROWS_AS(g2.validate("grid"), jobs::ConfigError);
}

TEST_CASE("unknown job rejected") {
    CHECK_THROWS_AS(jobs::run_job("fig9", jobs::Config()), jobs::ConfigError);
}

TEST_CASE("duan job and csv determinism") {
    jobs::Config cfg;
    cfg.set("cat.gamma", "2");
    cfg.set("cat.c", "1");
    const auto s1 = jobs::run_job("duan", cfg);
    const auto s2 = jobs::run_job("duan", cfg);
    CHECK(strip_timestamp(jobs::csv_string(s1)) == strip_timestamp(jobs::csv_string(s2)));
    CHECK(column_value(s1, 0, "S") == doctest::Approx(oracle::duan_S(2.0, 1.0)).epsilon(1e-6));
    CHECK(column_value(s1, 0, "inseparable") == 1.0);

    const std::string csv = jobs::csv_string(s1);
    CHECK(csv.find("# param cat.gamma 2") != std::string::npos);
    CHECK(csv.find("gamma,c,eta,S,var_u,var_v,inseparable") != std::string::npos);
}

TEST_CASE("fig3a: the pure-cat curve dips below the bound, the mixture does not") {
    jobs::Config cfg;
    cfg.set("grid.start", "0");
    cfg.set("grid.stop", "2");
    cfg.set("grid.points", "5");
    cfg.set("cat.c_list", "0,1");
    const auto s = jobs::run_job("fig3a", cfg);
    REQUIRE(s.rows.size() == 5);
    CHECK(s.columns == std::vector<std::string>{"gamma", "S_c0", "S_c1"});
    bool dips = false;
    for (size_t r = 0; r < s.rows.size(); ++r) {
        CHECK(std::abs(column_value(s, r, "S_c0") - 2.0) < 1e-8);
        if (column_value(s, r, "S_c1") < 1.9) dips = true;
        const double g = column_value(s, r, "gamma");
        CHECK(column_value(s, r, "S_c1") ==
              doctest::Approx(oracle::duan_S(g, 1.0)).epsilon(1e-6));
    }
    CHECK(dips);
}

TEST_CASE("fig3b efficiencies") {
    jobs::Config cfg;
    cfg.set("grid.start", "0.2");
    cfg.set("grid.stop", "1.2");
    cfg.set("grid.points", "3");
    const auto s = jobs::run_job("fig3b", cfg);
    CHECK(s.columns.size() == 4);  // gamma + 3 efficiencies
    for (size_t r = 0; r < s.rows.size(); ++r) {
        const double g = column_value(s, r, "gamma");
        CHECK(column_value(s, r, "S_eta0") == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(column_value(s, r, "S_eta0.4") ==
              doctest::Approx(oracle::duan_S(g, 1.0, 0.4)).epsilon(1e-6));
        CHECK(column_value(s, r, "S_eta0.8") ==
              doctest::Approx(oracle::duan_S(g, 1.0, 0.8)).epsilon(1e-6));
    }
}

TEST_CASE("fig5a scan output") {
    jobs::Config cfg;
    cfg.set("grid.start", "0");
    cfg.set("grid.stop", "1");
    cfg.set("grid.points", "11");
    const auto s = jobs::run_job("fig5a", cfg);
    REQUIRE(s.rows.size() == 11);
    CHECK(s.columns.front() == "g_b");
    CHECK(s.columns.back() == "gap");
    CHECK(s.columns.size() == 1 + 12 + 1);  // six complex branches
    CHECK(column_value(s, 0, "gap") < 1e-12);
    // gap column is consistent with the eigenvalue columns
    for (size_t r = 0; r < s.rows.size(); ++r) {
        double gap = 1e300;
        for (int k = 1; k <= 6; ++k)
            gap = std::min(gap, std::abs(column_value(s, r, "ReE" + std::to_string(k))));
        CHECK(column_value(s, r, "gap") == doctest::Approx(gap).epsilon(1e-12));
    }
}

TEST_CASE("fig5b uses two atoms and a restoring detuning by default") {
    jobs::Config cfg;
    cfg.set("grid.start", "0.05");
    cfg.set("grid.stop", "0.5");
    cfg.set("grid.points", "4");
    const auto s = jobs::run_job("fig5b", cfg);
    const std::string csv = jobs::csv_string(s);
    CHECK(csv.find("# param cavity.n_atoms 2") != std::string::npos);
    CHECK(csv.find("# param cavity.delta 0.1") != std::string::npos);
    CHECK(s.columns.size() == 1 + 20 + 1);  // ten branches for two atoms
}

TEST_CASE("fig7 populations") {
    jobs::Config cfg;
    cfg.set("grid.points", "600");
    const auto s = jobs::run_job("fig7", cfg);
    CHECK(s.columns == std::vector<std::string>{"t", "C1", "C2", "C3", "C4", "C5", "C1_analytic"});
    double max_c2 = 0.0, max_c4 = 0.0;
    for (size_t r = 0; r < s.rows.size(); ++r) {
        max_c2 = std::max(max_c2, column_value(s, r, "C2"));
        max_c4 = std::max(max_c4, column_value(s, r, "C4"));
    }
    CHECK(max_c2 == doctest::Approx(0.5).epsilon(0.02));
    CHECK(max_c4 < 1e-2);
}

TEST_CASE("constants job magnitudes") {
    const auto s = jobs::run_job("constants", jobs::Config());
    CHECK(column_value(s, 0, "pi_over_chi") > 0.1e-6);
    CHECK(column_value(s, 0, "pi_over_chi") < 10e-6);
    CHECK(column_value(s, 0, "v_over_c") < 1e-5);
    CHECK(column_value(s, 0, "chi") < 0.0);
    CHECK(column_value(s, 0, "weak_absorption") == 1.0);
}

TEST_CASE("hz keys convert to angular rates") {
    jobs::Config cfg;
    cfg.set("medium.gamma_hz", "15915.494309");  // 1e5 rad/s
    const auto p = jobs::medium_from_config(cfg);
    CHECK(p.gamma == doctest::Approx(1e5).epsilon(1e-9));
}

TEST_CASE("spectrum job lists the manifold eigenvalues") {
    jobs::Config cfg;
    cfg.set("cavity.g_b", "0.2");
    const auto s = jobs::run_job("spectrum", cfg);
    CHECK(s.rows.size() == 6);
    CHECK(s.columns == std::vector<std::string>{"index", "ReE", "ImE"});
}

TEST_CASE("workers honour the thread cap") {
    CHECK(jobs::worker_count() >= 1);
    std::vector<int> hits(100, 0);
    jobs::parallel_for(100, [&](int i) { hits[i]++; });
    for (int h : hits) CHECK(h == 1);
}

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
    const char* bin = std::getenv("DEIT_LAB_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

int run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp_no_timestamp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("# generated_at", 0) != 0) out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("duan subcommand succeeds") {
    CHECK(run("duan --set cat.gamma=1.0 --out /tmp/deit_cli_duan.csv") == 0);
    const std::string csv = slurp_no_timestamp("/tmp/deit_cli_duan.csv");
    CHECK(csv.find("# job duan") != std::string::npos);
    CHECK(csv.find("gamma,c,eta,S") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
    CHECK(run("duan --config /nonexistent/deit.ini") == 2);
    CHECK(run("duan --set cat.gamma=abc") == 2);
    CHECK(run("duan --set grid=broken") == 2);
    CHECK(run("nosuchjob") == 2);
}

TEST_CASE("config file is honoured and flags override it") {
    const char* path = "/tmp/deit_cli_cfg.ini";
    {
        std::ofstream cfg(path);
        cfg << "[cat]\ngamma = 1.2\nc = 0\n";
    }
    CHECK(run(std::string("duan --config ") + path + " --out /tmp/deit_cli_a.csv") == 0);
    const std::string a = slurp_no_timestamp("/tmp/deit_cli_a.csv");
    CHECK(a.find("# param cat.c 0") != std::string::npos);

    CHECK(run(std::string("duan --config ") + path +
              " --set cat.c=1 --out /tmp/deit_cli_b.csv") == 0);
    const std::string b = slurp_no_timestamp("/tmp/deit_cli_b.csv");
    CHECK(b.find("# param cat.c 1") != std::string::npos);
}

TEST_CASE("reruns are byte-identical apart from the timestamp") {
    const std::string args =
        "fig5a --set grid.points=6 --set grid.stop=0.8 --out /tmp/deit_cli_rep";
    CHECK(run(args + "1.csv") == 0);
    CHECK(run(args + "2.csv") == 0);
    CHECK(slurp_no_timestamp("/tmp/deit_cli_rep1.csv") ==
          slurp_no_timestamp("/tmp/deit_cli_rep2.csv"));
}

TEST_CASE("thread cap environment variable is accepted") {
    const std::string cmd = "DEIT_LAB_THREADS=1 " + binary() +
                            " fig3a --set grid.points=4 --set grid.stop=1 "
                            "--out /tmp/deit_cli_threads.csv > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}

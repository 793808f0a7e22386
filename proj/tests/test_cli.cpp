#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string cli_path() {
    const char* p = std::getenv("DIPSPEC_CLI");
    return p ? std::string(p) : std::string("tools/dipspec");
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = "cli_test_output.tmp";
    const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status >= 256) ? status / 256 : status;  // WEXITSTATUS without <sys/wait.h>
    std::ifstream f(out_file, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    r.output = ss.str();
    std::remove(out_file.c_str());
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

TEST_CASE("mathieu command") {
    const auto r = run_cli("mathieu --b 0 --n 5");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0][0] == "index");
    CHECK(rows[0][1] == "eigenvalue");
    const std::vector<double> expect{0.0, 1.0, 1.0, 4.0, 4.0};
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(std::stod(rows[k + 1][1]) - expect[k]) < 1e-9);

    const auto r1 = run_cli("mathieu --b 1 --n 3");
    const auto rows1 = parse_csv(r1.output);
    CHECK(std::abs(std::stod(rows1[1][1]) + 0.378489221264) < 1e-6);

    const auto rt = run_cli("mathieu --b 1 --a 0 --trace");
    const auto rowst = parse_csv(rt.output);
    REQUIRE(rowst.size() == 2);
    CHECK(rowst[0][0] == "trace_sqrt_neg");
    CHECK(std::abs(std::stod(rowst[1][0]) - 0.615214776526) < 1e-6);
}

TEST_CASE("zeros command") {
    const auto r = run_cli("zeros --nu 1 --n 1..3");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n", "asymptotic", "refined", "gap"});
    CHECK(std::abs(std::stod(rows[1][1]) - 0.0639550258) < 1e-8);
    CHECK(!rows[1][2].empty());

    // deep zero: asymptotic emitted, refined column empty
    const auto rd = run_cli("zeros --nu 1 --n 50");
    const auto rowsd = parse_csv(rd.output);
    REQUIRE(rowsd.size() == 2);
    CHECK(!rowsd[1][1].empty());
    CHECK(rowsd[1].size() >= 3);
    CHECK(rowsd[1][2].empty());

    CHECK(run_cli("zeros --nu -1 --n 1..3").exit_code == 1);
}

TEST_CASE("count command") {
    const auto r = run_cli("count --a 1 --b 0 --E -1e-6 --bc dirichlet");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(rows[1][1] == "2");

    const auto r0 = run_cli("count --a 0 --b 0 --E -1e-4");
    CHECK(parse_csv(r0.output)[1][1] == "0");

    const auto ro = run_cli("count --a 0 --b 1 --E -1e-4 --oracle");
    const auto rowso = parse_csv(ro.output);
    std::size_t n_col = 1, oracle_col = 0, disc_col = 0;
    for (std::size_t j = 0; j < rowso[0].size(); ++j) {
        if (rowso[0][j] == "oracle_N") oracle_col = j;
        if (rowso[0][j] == "discrepancy") disc_col = j;
    }
    REQUIRE(oracle_col > 0);
    CHECK(rowso[1][n_col] == rowso[1][oracle_col]);
    CHECK(rowso[1][disc_col] == "0");

    // explicit undersized oracle grid trips the adequacy guard
    CHECK(run_cli("count --a 1 --b 0 --E -1e-6 --oracle --grid-T 4 --grid-n 2000").exit_code ==
          3);
}

TEST_CASE("slope command") {
    const auto r = run_cli("slope --a 0 --b 0 --E-range 1e-12..1e-6 --points 10");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(std::stod(rows[1][0]) == 0.0);
    CHECK(std::stod(rows[1][1]) == 0.0);
    CHECK(std::stod(rows[1][2]) == 0.0);

    const auto rd = run_cli("slope --dirac 1");
    const auto rowsd = parse_csv(rd.output);
    CHECK(rowsd[0][0] == "dirac_slope");
    CHECK(std::abs(std::stod(rowsd[1][0]) - 0.329282262381) < 1e-8);
    CHECK(std::stod(rowsd[1][2]) < 1e-12);
}

TEST_CASE("bounds command") {
    const auto r = run_cli("bounds --well 0.1 --rings 2000");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.output);
    CHECK(rows[1][3] == "1");

    const auto r0 = run_cli("bounds --well 0 --rings 500");
    const auto rows0 = parse_csv(r0.output);
    CHECK(std::stod(rows0[1][1]) == 0.0);
    CHECK(std::stod(rows0[1][2]) == 0.0);
    CHECK(rows0[1][3] == "0");

    const auto rs = run_cli("bounds --sum-rules --trials 50 --seed 7");
    REQUIRE(rs.exit_code == 0);
    const auto rowss = parse_csv(rs.output);
    REQUIRE(rowss.size() == 2);
    CHECK(rowss[1][0] == "50");
    CHECK(rowss[1][1] == "50");
    CHECK(rowss[1][2] == "true");
    CHECK(rowss[1][3] == "true");
}

TEST_CASE("deterministic output and json envelope") {
    const auto a = run_cli("slope --dirac 1 --format json --seed 3");
    const auto b = run_cli("slope --dirac 1 --format json --seed 3");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"config\"") != std::string::npos);
    CHECK(a.output.find("\"results\"") != std::string::npos);
    CHECK(a.output.find("\"diagnostics\"") != std::string::npos);

    const auto c = run_cli("bounds --sum-rules --trials 25 --seed 11");
    const auto d = run_cli("bounds --sum-rules --trials 25 --seed 11");
    CHECK(c.output == d.output);
}

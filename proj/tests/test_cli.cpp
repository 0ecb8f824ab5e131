#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "specrank/family.hpp"
#include "specrank/graph.hpp"

using namespace specrank;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPECRANK_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "specrank-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_p3() {
    fs::path p = temp_dir() / "p3.txt";
    std::ofstream out(p);
    out << "0 1\n1 2\n";
    return p.string();
}

}  // namespace

TEST_CASE("cli centrality formats and determinism") {
    std::string p3 = write_p3();
    RunResult csv = run_cli("centrality -i " + p3 + " --kind seeley --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "vertex,score\n0,0.25\n1,0.5\n2,0.25\n");

    RunResult exact = run_cli("centrality -i " + p3 + " --kind seeley --exact --format csv");
    CHECK(exact.output == "vertex,score\n0,1/4\n1,1/2\n2,1/4\n");

    RunResult again = run_cli("centrality -i " + p3 + " --kind seeley --format csv");
    CHECK(again.output == csv.output);

    RunResult pr = run_cli("centrality -i " + p3 + " --kind pagerank --alpha 0.85 --format json");
    CHECK(pr.exit_code == 0);
    auto j = nlohmann::json::parse(pr.output);
    CHECK(j["values"].size() == 3);

    RunResult eig = run_cli("centrality -i " + p3 + " --kind eigenvector --norm l2 --format csv");
    CHECK(eig.exit_code == 0);
}

TEST_CASE("cli usage errors exit with code 2") {
    CHECK(run_cli("centrality --kind seeley").exit_code == 2);        // missing input
    CHECK(run_cli("nonsense").exit_code == 2);                        // unknown subcommand
    std::string p3 = write_p3();
    CHECK(run_cli("centrality -i " + p3 + " --kind bogus").exit_code == 2);
    CHECK(run_cli("centrality -i /nonexistent.txt --kind seeley").exit_code == 2);
    CHECK(run_cli("scan -i " + p3 + " --budget 0").exit_code == 2);
    fs::path loops = temp_dir() / "loops.txt";
    std::ofstream(loops) << "0 0\n";
    CHECK(run_cli("centrality -i " + loops.string() + " --kind seeley").exit_code == 2);
}

TEST_CASE("cli check-edge exit codes") {
    std::string p3 = write_p3();
    RunResult ok = run_cli("check-edge -i " + p3 + " -x 0 -y 2 --kind seeley");
    CHECK(ok.exit_code == 0);

    // the family rank violation at k = 14, damping 2/3
    fs::path g14 = temp_dir() / "g14.txt";
    {
        std::ofstream out(g14);
        save_edge_list(build_total(14, false), out);
    }
    auto [p5, q7] = family_dashed_edge(14);
    RunResult bad = run_cli("check-edge -i " + g14.string() + " -x " + std::to_string(p5) +
                            " -y " + std::to_string(q7) + " --kind pagerank --alpha 2/3");
    CHECK(bad.exit_code == 3);
    auto j = nlohmann::json::parse(bad.output);
    CHECK(j["rank"]["monotone"] == "violated");
    CHECK(j["exact_verified"] == true);
}

TEST_CASE("cli scan on the degree index is clean") {
    std::string p3 = write_p3();
    RunResult r = run_cli("scan -i " + p3 + " --kind seeley --budget 10 --seed 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["violation_count"] == 0);
}

TEST_CASE("cli family verify") {
    RunResult ok = run_cli("family verify --theorem score --k-min 12 --k-max 16");
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.output);
    CHECK(j.size() == 5);
    CHECK(j[0]["k"] == 12);
    CHECK(j[0]["matches_expected"] == true);

    // below-threshold ks are informational by default, failures under --strict
    RunResult low = run_cli("family verify --theorem rank --k-min 4 --k-max 5");
    CHECK(low.exit_code == 0);
    RunResult strict = run_cli("family verify --theorem rank --k-min 4 --k-max 5 --strict");
    CHECK(strict.exit_code == 4);

    CHECK(run_cli("family verify --theorem bogus").exit_code == 2);
    CHECK(run_cli("family verify --k-min 2 --k-max 1").exit_code == 2);
}

TEST_CASE("cli fibration check on exported family files") {
    fs::path dir = temp_dir();
    std::string prefix = (dir / "fam5").string();
    RunResult exp = run_cli("family export --k 5 --out-prefix " + prefix);
    CHECK(exp.exit_code == 0);
    RunResult chk = run_cli("fibration check --total " + prefix + "-total.json --base " + prefix +
                            "-base.json --morphism " + prefix + "-morphism.json --beta 2/3");
    CHECK(chk.exit_code == 0);
    auto j = nlohmann::json::parse(chk.output);
    CHECK(j["is_fibration"] == true);
    CHECK(j["is_epimorphic"] == true);
    CHECK(j["identity"]["max_deviation"] == "0/1");
    CHECK(j["identity"]["holds"] == true);
}

TEST_CASE("cli search finds the star equality") {
    RunResult r = run_cli("search --kind seeley --axiom score --max-vertices 5");
    CHECK(r.exit_code == 3);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["found"] == true);
    CHECK(j["verdict"]["score"]["monotone"] == "weak");
}

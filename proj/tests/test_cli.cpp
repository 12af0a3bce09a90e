// End-to-end checks of the latcert binary: exit codes, output shapes,
// and byte determinism.  LATCERT_BIN_PATH and LATCERT_DATA_DIR come from
// the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const std::string kBin = LATCERT_BIN_PATH;
const std::string kData = LATCERT_DATA_DIR;

const fs::path& scratch() {
    static fs::path dir = [] {
        fs::path d = fs::current_path() / "cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_in_scratch(const std::string& name) { return (scratch() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string out_path = path_in_scratch("stdout.txt");
    std::string err_path = path_in_scratch("stderr.txt");
    std::string cmd = env_prefix + kBin + " " + args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

long line_count(const std::string& text) {
    long n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("split-primes prints the split and ramified primes of the cubic") {
    RunResult r = run_cli("split-primes 't^3-5t^2+6t-1' --bound 42");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["primes"] == Json::array({13, 29, 41}));
    CHECK(j["ramified"] == Json::array({7}));
    CHECK(j["config"]["bound"] == 42);

    RunResult r50 = run_cli("split-primes 't^3-5t^2+6t-1' --bound 50");
    CHECK(Json::parse(r50.out)["primes"] == Json::array({13, 29, 41, 43}));
}

TEST_CASE("split-primes accepts coefficient lists and linear polynomials") {
    RunResult r = run_cli("split-primes 't-1' --bound 10");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["primes"] == Json::array({2, 3, 5, 7}));

    RunResult r2 = run_cli("split-primes --bound 42 -- '-1,6,-5,1'");
    CHECK(r2.code == 0);
    CHECK(Json::parse(r2.out)["primes"] == Json::array({13, 29, 41}));
}

TEST_CASE("split-primes exit codes: precondition 3, parse 2") {
    CHECK(run_cli("split-primes 't^2'").code == 3);        // not squarefree
    CHECK(run_cli("split-primes 't^^2'").code == 2);       // malformed
    CHECK(run_cli("split-primes").code == 2);              // missing argument
    CHECK(run_cli("frobnicate").code == 2);                // unknown subcommand
}

TEST_CASE("the worked example verifies and writes a nine-item certificate") {
    std::string out = path_in_scratch("example.json");
    RunResult r = run_cli("example --out " + out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    Json j = Json::parse(slurp(out));
    CHECK(j["schema"] == 1);
    CHECK(j["construction"] == "worked-example");
    CHECK(j["overall"] == "Verified");
    REQUIRE(j["checklist"].size() == 9);
    for (const auto& item : j["checklist"]) CHECK(item["status"] == "Pass");
    CHECK(j["inputs"]["config"]["precision"] == 10);
}

TEST_CASE("the example demands precision and fails loudly on a perturbed cubic") {
    std::string out = path_in_scratch("example_lowprec.json");
    RunResult r = run_cli("example --precision 2 --out " + out);
    CHECK(r.code == 3);
    CHECK(!fs::exists(out)); // errored before any certificate was produced
    CHECK(r.err.find("InsufficientPrecision") != std::string::npos);

    std::string out2 = path_in_scratch("example_perturbed.json");
    RunResult r2 = run_cli("example --f 't^3-5t^2+6t-2' --out " + out2);
    CHECK(r2.code == 1);
    Json j = Json::parse(slurp(out2)); // certificate still written on failure
    CHECK(j["overall"] == "Failed");
    CHECK(j["inputs"]["config"]["f"] == "t^3 - 5*t^2 + 6*t - 2");
}

TEST_CASE("certify runs the shipped unit-lattice config to rank four") {
    std::string out = path_in_scratch("unit_lattice.json");
    RunResult r = run_cli("certify --config " + kData + "/unit_lattice_example.json --out " +
                          out);
    CHECK(r.code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["overall"] == "Verified");
    CHECK(j["outputs"]["rank"] == 4);
    CHECK(j["inputs"]["config"]["construction"] == "unit-lattice");
    CHECK(j["inputs"]["config"]["primes"] == Json::array({13}));
}

TEST_CASE("certify reads key=value configs") {
    RunResult r = run_cli("certify --config " + kData + "/shared_envelope_n2.cfg");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["construction"] == "shared-envelope");
    CHECK(j["overall"] == "Verified");
    CHECK(j["inputs"]["config"]["n"] == 2);
}

TEST_CASE("certify exits 1 on a failed certificate but still emits it") {
    std::string cfg = path_in_scratch("rotation.json");
    spit(cfg, R"({"construction": "sl2-envelope", "matrix": [[0, -1], [1, 0]]})");
    RunResult r = run_cli("certify --config " + cfg);
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["overall"] == "Failed");
    bool saw_order_fail = false;
    for (const auto& item : j["checklist"])
        if (item["name"] == "infinite-order" && item["status"] == "Fail") saw_order_fail = true;
    CHECK(saw_order_fail);
}

TEST_CASE("certify config errors exit 2") {
    std::string cfg = path_in_scratch("unknown.json");
    spit(cfg, R"({"construction": "perpetual-motion"})");
    CHECK(run_cli("certify --config " + cfg).code == 2);
    CHECK(run_cli("certify --config " + path_in_scratch("no_such_file.cfg")).code == 2);
    std::string bad = path_in_scratch("bad.json");
    spit(bad, "{ not json");
    CHECK(run_cli("certify --config " + bad).code == 2);
}

TEST_CASE("dl degree matches the regular degree of the graph") {
    RunResult r = run_cli("dl degree --d 2 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    CHECK(run_cli("dl degree --d 3 --n 3").out == "18\n");
    CHECK(run_cli("dl degree --branchings 2,3").out == "5\n");
}

TEST_CASE("dl ball emits a consistent edge list and summary") {
    std::string csv = path_in_scratch("ball.csv");
    std::string out = path_in_scratch("ball.json");
    RunResult r = run_cli("dl ball --d 2 --n 2 --radius 3 --csv " + csv + " --out " + out);
    CHECK(r.code == 0);
    std::string table = slurp(csv);
    CHECK(table.rfind("src,dst\n", 0) == 0);
    Json j = Json::parse(slurp(out));
    CHECK(line_count(table) == j["edge_count"].get<long>() + 1);
    long sphere_sum = 0;
    for (const auto& s : j["sphere_sizes"]) sphere_sum += s.get<long>();
    CHECK(sphere_sum == j["vertex_count"].get<long>());
    CHECK(j["sphere_sizes"][0] == 1);
    CHECK(j["sphere_sizes"][1] == 4);
}

TEST_CASE("dl ball respects the vertex budget") {
    CHECK(run_cli("dl ball --d 2 --n 2 --radius 2 --cap 3").code == 4);
}

TEST_CASE("dl orbit coverage stays within the uniformity constant") {
    std::string out = path_in_scratch("orbit.json");
    RunResult r = run_cli("dl orbit --group lamplighter --q 2 --radius 6 --out " + out);
    CHECK(r.code == 0);
    Json j = Json::parse(slurp(out));
    CHECK(j["covered_graph_radius"].get<long>() >= 4);
    CHECK(j["coverage_offset"].get<long>() <= 2);
    CHECK(run_cli("dl orbit --group dihedral --q 2 --radius 3").code == 3);
}

TEST_CASE("growth compares two configured groups as CSV") {
    RunResult r = run_cli("growth " + kData + "/growth_affine_n2.cfg " + kData +
                          "/growth_lambda_q2.cfg --radius 6");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("radius,ball_a,sphere_a,ball_b,sphere_b\n", 0) == 0);
    CHECK(line_count(r.out) == 8); // header + radii 0..6
}

TEST_CASE("growth report embeds the resolved group configs") {
    std::string triv = path_in_scratch("trivial.cfg");
    spit(triv, "kind = trivial\n");
    std::string csv = path_in_scratch("growth.csv");
    std::string out = path_in_scratch("growth.json");
    RunResult r =
        run_cli("growth " + triv + " " + triv + " --radius 3 --csv " + csv + " --out " + out);
    CHECK(r.code == 0);
    CHECK(slurp(csv) == "radius,ball_a,sphere_a,ball_b,sphere_b\n"
                        "0,1,1,1,1\n1,1,0,1,0\n2,1,0,1,0\n3,1,0,1,0\n");
    Json j = Json::parse(slurp(out));
    CHECK(j["config"]["group_a"]["kind"] == "trivial");
    CHECK(j["config"]["radius"] == 3);
    CHECK(j["superpolynomial_a"] == false);
}

TEST_CASE("growth exits 4 when the ball outgrows the budget") {
    RunResult r = run_cli("growth " + kData + "/growth_affine_n2.cfg " + kData +
                          "/growth_lambda_q2.cfg --radius 40 --cap 100");
    CHECK(r.code == 4);
    CHECK(r.err.find("MemoryBudgetExceeded") != std::string::npos);
}

TEST_CASE("certificate output is byte deterministic") {
    std::string a = path_in_scratch("det_a.json");
    std::string b = path_in_scratch("det_b.json");
    CHECK(run_cli("example --out " + a).code == 0);
    CHECK(run_cli("example --out " + b).code == 0);
    CHECK(slurp(a) == slurp(b));

    RunResult s1 = run_cli("split-primes 't^3-5t^2+6t-1' --bound 100");
    RunResult s2 = run_cli("split-primes 't^3-5t^2+6t-1' --bound 100");
    CHECK(s1.out == s2.out);
}

TEST_CASE("LATCERT_OUT_DIR redirects relative output paths") {
    fs::path dir = scratch() / "redirect";
    fs::create_directories(dir);
    RunResult r = run_cli("example --out cert.json", "LATCERT_OUT_DIR=" + dir.string() + " ");
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "cert.json"));
    Json j = Json::parse(slurp((dir / "cert.json").string()));
    CHECK(j["overall"] == "Verified");
}

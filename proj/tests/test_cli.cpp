#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TCM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "tcm_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("verify suites") {
    auto ok = run("verify --suite tropical --seed 7 --samples 400");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"pass\":true") != std::string::npos);

    auto semiconj = run("verify --suite semiconj --word-len 20 --words 25 --samples 20");
    CHECK(semiconj.code == 0);

    auto vacuous = run("verify --suite tropical --samples 0");
    CHECK(vacuous.code == 0);
    CHECK(vacuous.out.find("\"checks\":0") != std::string::npos);

    auto all = run("verify --samples 150 --words 15");
    CHECK(all.code == 0);

    CHECK(run("verify --suite bogus").code == 2);
}

TEST_CASE("orbit exact mode") {
    TempDir dir;
    auto id5 = run("orbit --matrix 1,0,0,1 --start 0/1,0/1 --n 5 --mode exact --out " +
                   (dir.path / "id.csv").string());
    CHECK(id5.code == 0);
    CHECK(id5.out.find("\"period\":1") != std::string::npos);
    std::string content = slurp(dir.path / "id.csv");
    CHECK(content == "n,phi,psi\n0,0/1,0/1\n1,0/1,0/1\n2,0/1,0/1\n3,0/1,0/1\n4,0/1,0/1\n");

    auto p3 = run("orbit --matrix 2,1,1,1 --start 1/2,1/2 --n 10 --mode exact");
    CHECK(p3.code == 0);
    CHECK(p3.out.find("\"period\":3") != std::string::npos);

    CHECK(run("orbit --matrix 2,1,1,1 --start sqrt2 --n 5 --mode exact").code == 2);
    CHECK(run("orbit --matrix 1,1,1,1 --start 0/1,0/1 --n 5").code == 2);
}

TEST_CASE("orbit float mode with fold, grid and determinism") {
    TempDir dir;
    std::string base = "orbit --matrix 2,1,1,1 --start sqrt2 --n 100000 --fold --grid 32 --out ";
    auto a = run(base + (dir.path / "a.csv").string());
    auto b = run(base + (dir.path / "b.csv").string());
    CHECK(a.code == 0);
    CHECK(slurp(dir.path / "a.csv") == slurp(dir.path / "b.csv"));
    CHECK(a.out.find("\"surface_residual_max\"") != std::string::npos);
    auto disc_pos = a.out.find("\"discrepancy\":");
    REQUIRE(disc_pos != std::string::npos);
    double disc = std::strtod(a.out.c_str() + disc_pos + 15, nullptr);
    CHECK(disc < 0.1);
    std::string first_line = slurp(dir.path / "a.csv").substr(0, 8);
    CHECK(first_line == "n,u,v,w\n");

    // JSON-lines export
    auto jl = run("orbit --matrix 2,1,1,1 --start sqrt2 --n 3 --fold --format json --out " +
                  (dir.path / "a.jsonl").string());
    CHECK(jl.code == 0);
    std::string lines = slurp(dir.path / "a.jsonl");
    CHECK(lines.find("\"u\":") != std::string::npos);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 3);
    CHECK(run("orbit --matrix 2,1,1,1 --start sqrt2 --n 3 --format xml").code == 2);
}

TEST_CASE("lyapunov") {
    auto cat = run("lyapunov --matrix 2,1,1,1 --n 50000");
    CHECK(cat.code == 0);
    CHECK(cat.out.find("\"reference\":") != std::string::npos);
    auto est_pos = cat.out.find("\"estimate\":");
    REQUIRE(est_pos != std::string::npos);
    double est = std::strtod(cat.out.c_str() + est_pos + 11, nullptr);
    CHECK(est == doctest::Approx(0.9624).epsilon(0.02));

    auto ident = run("lyapunov --matrix 1,0,0,1 --n 1000");
    CHECK(ident.code == 0);
    CHECK(ident.out.find("\"reference\":null") != std::string::npos);

    auto parab = run("lyapunov --matrix 1,1,0,1 --n 100000");
    CHECK(parab.code == 0);
    auto p = parab.out.find("\"estimate\":");
    double pest = std::strtod(parab.out.c_str() + p + 11, nullptr);
    CHECK(pest <= 0.001);
}

TEST_CASE("lambda") {
    auto golden = run("lambda --cf \"[1;(1)]\" --n 60 --estimator matrices");
    CHECK(golden.code == 0);
    // header + 60 rows on stdout
    CHECK(std::count(golden.out.begin(), golden.out.end(), '\n') == 61);
    CHECK(golden.out.substr(0, 11) == "k,lambda_k\n");

    TempDir dir;
    auto filed = run("lambda --cf \"[1;(1)]\" --n 200 --estimator matrices --out " +
                     (dir.path / "l.csv").string());
    CHECK(filed.code == 0);
    auto tail_pos = filed.out.find("\"tail_estimate\":");
    REQUIRE(tail_pos != std::string::npos);
    double tail = std::strtod(filed.out.c_str() + tail_pos + 16, nullptr);
    CHECK(tail == doctest::Approx(0.4812118251).epsilon(0.01));

    auto euclid = run("lambda --cf \"[1;(1)]\" --n 200 --estimator euclid");
    CHECK(euclid.code == 0);

    // trivial path: single row, value 0
    auto zero = run("lambda --cf \"[0;]\" --n 1");
    CHECK(zero.code == 0);
    CHECK(zero.out == "k,lambda_k\n1,0\n");

    // depth cap on the exact Markov estimator
    CHECK(run("lambda --cf \"[1;(1)]\" --n 31 --estimator markov").code == 1);
    CHECK(run("lambda --cf \"[1;(1)\" --n 5").code == 2);
    CHECK(run("lambda --estimator euclid --n 5").code == 2);
}

TEST_CASE("markov dump") {
    auto spine = run("markov --word RRRR --n 4");
    CHECK(spine.code == 0);
    CHECK(spine.out ==
          "n,x,y,z\n0,1,1,2\n1,1,2,5\n2,1,5,13\n3,1,13,34\n4,1,34,89\n");

    auto golden_json = run("markov --word RL --n 2 --format json");
    CHECK(golden_json.code == 0);
    CHECK(golden_json.out.find("[\"1\",\"2\",\"5\"]") != std::string::npos);

    auto euclid = run("markov --cf \"[1;(1)]\" --n 3 --tree euclid");
    CHECK(euclid.code == 0);
    CHECK(euclid.out == "n,x,y,z\n0,1,1,2\n1,1,2,3\n2,2,3,5\n3,3,5,8\n");

    CHECK(run("markov --word " + std::string(31, 'R') + " --n 31").code == 1);
    CHECK(run("markov --word RXR --n 3").code == 2);
}

TEST_CASE("semiconj scan") {
    auto scan = run("semiconj --word-len 12 --words 60 --samples 25 --seed 5");
    CHECK(scan.code == 0);
    CHECK(scan.out.find("\"max_residual\":\"0/1\"") != std::string::npos);
    CHECK(scan.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("bad invocations exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("orbit --matrix nope --start 0/1,0/1 --n 3").code == 2);
}

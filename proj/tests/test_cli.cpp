#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "../tools/emit.hpp"

using namespace gtheta::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("primecount") {
    auto r = run_cli({"primecount", "10", "--method", "theta-sum"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run_cli({"primecount", "10", "--method", "legendre", "--oracle-check"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run_cli({"primecount", "9"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    r = run_cli({"primecount", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out == "legendre 168\ntheta-sum 168\nsurvivor 168\n");
    CHECK(run_cli({"primecount", "10", "--method", "bogus"}).code == 2);
    CHECK(run_cli({"primecount", "100", "--mode", "float", "--method", "theta-sum"}).out == "25\n");
    r = run_cli({"primecount", "10", "--method", "survivor", "--emit", "csv"});
    CHECK(r.out == "n,method,count\n10,survivor,4\n");
}

TEST_CASE("composites") {
    auto r = run_cli({"composites", "10", "--method", "direct-mark"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    r = run_cli({"composites", "100", "--oracle-check"});
    CHECK(r.code == 0);
    CHECK(r.out == "legendre 74\ntheta-sum 74\ndirect-mark 74\n");
    CHECK(run_cli({"composites", "7"}).code == 2);
}

TEST_CASE("goldbach") {
    auto r = run_cli({"goldbach", "100", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("prime_pairs     10\n") != std::string::npos);
    CHECK(r.out.find("pairs           11 17 29 41 47 53 59 71 83 89") != std::string::npos);
    r = run_cli({"goldbach", "1000"});
    CHECK(r.out.find("prime_pairs     48\n") != std::string::npos);
    r = run_cli({"goldbach", "100", "--interval", "10:90", "--oracle-check"});
    CHECK(r.code == 0);
    r = run_cli({"goldbach", "100", "--emit", "json", "--list"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["prime_pairs"] == 10);
    CHECK(j["hat"] == 49);
    CHECK(j["tilde"] == 22);
    CHECK(j["pairs"].size() == 10);
    r = run_cli({"goldbach", "100", "--emit", "csv"});
    CHECK(r.out == "n,interval_a,interval_b,interval_len,prime_pairs,composite_pairs,hat,tilde\n100,10,90,81,10,71,49,22\n");
    r = run_cli({"goldbach", "1000", "--mode", "float", "--epsilon", "1e-8"});
    CHECK(r.code == 0);
    CHECK(run_cli({"goldbach", "6"}).code == 2);
    CHECK(run_cli({"goldbach", "100", "--interval", "90:10"}).code == 2);
    CHECK(run_cli({"goldbach", "100", "--interval", "x:10"}).code == 2);
    CHECK(run_cli({"goldbach", "100", "--mode", "float", "--epsilon", "0.5"}).code == 2);
}

TEST_CASE("scan-bound csv") {
    auto r = run_cli({"scan-bound", "100", "104", "--step", "2", "--emit", "csv"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "n,prime_pairs,hat,tilde,interval_len,bound,margin,holds");
    CHECK(ls[0] == kScanCsvHeader);
    for (int i = 1; i <= 3; ++i) {
        CHECK(ls[i].ends_with(",true"));
        CHECK(ls[i].starts_with(std::to_string(98 + 2 * i) + ","));
    }
    CHECK(ls[1] == "100,10,49,22,81,2.96321,7.03679,true");
    CHECK(r.err.find("violations=0") != std::string::npos);
}

TEST_CASE("scan-bound json and human") {
    auto r = run_cli({"scan-bound", "1000", "1010", "--emit", "json"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    for (const auto& l : ls) {
        CHECK(l.back() == '}');
        const auto j = nlohmann::json::parse(l);
        for (auto key : {"n", "prime_pairs", "hat", "tilde", "interval_len", "bound", "margin", "holds"})
            CHECK(j.contains(key));
        CHECK(j.size() == 8);
        CHECK(j["holds"] == true);
    }
    CHECK(nlohmann::json::parse(ls[0])["margin"].get<double>() == doctest::Approx(29.5).epsilon(0.01));

    r = run_cli({"scan-bound", "10000", "10000"});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary records=1 violations=0") != std::string::npos);
    CHECK(r.out.find("136.586") != std::string::npos);
}

TEST_CASE("scan-bound usage errors") {
    CHECK(run_cli({"scan-bound", "10", "8"}).code == 2);
    CHECK(run_cli({"scan-bound", "20", "40"}).code == 2);
    CHECK(run_cli({"scan-bound", "100", "200", "--step", "3"}).code == 2);
    CHECK(run_cli({"scan-bound", "101", "200"}).code == 2);
    CHECK(run_cli({"scan-bound", "100"}).code == 2);
    CHECK(run_cli({"scan-bound", "100", "200", "--workers", "0"}).code == 2);
}

TEST_CASE("scan-bound determinism and --out") {
    const auto dir = std::filesystem::temp_directory_path() / "gtheta_cli_test";
    std::filesystem::create_directories(dir);
    const auto f1 = dir / "w1.csv", f8 = dir / "w8.csv";
    CHECK(run_cli({"scan-bound", "1000", "2000", "--emit", "csv", "--workers", "1", "--out", f1.string()}).code == 0);
    CHECK(run_cli({"--workers", "8", "scan-bound", "1000", "2000", "--emit", "csv", "--out", f8.string()}).code == 0);
    const auto a = slurp(f1), b = slurp(f8);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(lines(a).size() == 502);
    const auto j1 = run_cli({"scan-bound", "1000", "2000", "--emit", "json", "--workers", "1"});
    const auto j8 = run_cli({"scan-bound", "1000", "2000", "--emit", "json", "--workers", "8"});
    CHECK(j1.out == j8.out);
    CHECK(run_cli({"scan-bound", "1000", "1002", "--out", (dir / "missing" / "x.csv").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("selftest") {
    auto r = run_cli({"selftest", "--max-n", "50"});
    CHECK(r.code == 2);
    r = run_cli({"selftest", "--max-n", "1000", "--mode", "float", "--epsilon", "1e-8"});
    CHECK(r.code == 0);
    for (auto suite : {"oracle-equivalence", "partition", "symmetry", "identity", "float-exact", "tilde-ie"})
        CHECK(r.out.find(suite) != std::string::npos);
    CHECK(r.out.find("failures=0") != std::string::npos);
    CHECK(run_cli({"selftest", "--max-n", "2000"}).code == 0);
}

TEST_CASE("global usage") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"primecount", "10", "--mode", "fuzzy"}).code == 2);
    CHECK(run_cli({"primecount", "10", "--emit", "xml"}).code == 2);
}

TEST_CASE("format_real") {
    CHECK(format_real(2.963214) == "2.96321");
    CHECK(format_real(113.41) == "113.41");
    CHECK(format_real(-0.5) == "-0.5");
}

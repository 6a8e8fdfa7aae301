#include "doctest.h"

#include "cli.hpp"
#include "finitea/cache.hpp"
#include "finitea/dobinski.hpp"
#include "finitea/finite_euler.hpp"
#include "finitea/primes.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace finitea;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Fresh cache directory, exported through the environment for the CLI.
struct TempCache {
    fs::path dir;
    explicit TempCache(const std::string& name) : dir(fs::temp_directory_path() / ("finitea-test-" + name)) {
        fs::remove_all(dir);
        setenv("FINITEA_CACHE_DIR", dir.c_str(), 1);
    }
    ~TempCache() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("report JSON round trip") {
    auto report = verify_dobinski(2, 5, make_rational(-2, 1), sieve_primes(2, 60));
    report.timestamp = "2026-01-01T00:00:00Z";
    const std::string text = to_json(report).dump();
    const auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == report);
    CHECK(to_json(back).dump() == text);

    auto euler = verify_kluyver({1, 2}, {0, make_rational(1, 2)}, sieve_primes(5, 100));
    CHECK(report_from_json(to_json(euler)) == euler);
}

TEST_CASE("cache records and reuse") {
    TempCache tmp("records");
    ResidueCacheRecord a{"gamma_M", {{"x", "1/2"}}, 7, 3};
    ResidueCacheRecord b{"e_A", {}, 11, std::nullopt};
    CHECK(cache_record_from_json(to_json(a)) == a);
    CHECK(cache_record_from_json(to_json(b)) == b);
    CHECK(to_line(b) == R"({"params":{},"prime":11,"residue":null,"tag":"e_A"})");

    CHECK(compute_residue("gamma_W", {}, 5) == 0u);
    CHECK(compute_residue("gamma_W", {}, 7) == 5u);
    CHECK(compute_residue("e_A", {}, 5) == 0u);
    CHECK(compute_residue("gamma_M", {{"x", "-1"}}, 13) == wilson_quotient(13));
    CHECK_THROWS_AS(compute_residue("zeta", {}, 5), std::invalid_argument);
    CHECK_THROWS_AS(compute_residue("gamma_M", {}, 5), std::invalid_argument);

    {
        ResidueCache cache(tmp.dir);
        CHECK(cache.records().empty());
        CHECK(cache.append({a, b}) == 2);
        CHECK(cache.append({a}) == 0);
    }
    ResidueCache reloaded(tmp.dir);
    REQUIRE(reloaded.records().size() == 2);
    REQUIRE(reloaded.find("gamma_M", {{"x", "1/2"}}, 7) != nullptr);
    CHECK(*reloaded.find("gamma_M", {{"x", "1/2"}}, 7) == a);
    CHECK(reloaded.find("gamma_M", {{"x", "1/3"}}, 7) == nullptr);
}

TEST_CASE("search reuses cached residues byte-identically") {
    TempCache tmp("search");
    ResidueCache cache(tmp.dir);
    auto first = search_primes(SearchTarget::wilson, 5, 600, &cache, 2);
    CHECK(first.hits == std::vector<u64>{5, 13, 563});
    CHECK(first.computed == sieve_primes(5, 600).size());
    const std::string bytes = slurp(cache.file());

    ResidueCache again(tmp.dir);
    auto second = search_primes(SearchTarget::wilson, 5, 600, &again, 2);
    CHECK(second.hits == first.hits);
    CHECK(second.computed == 0);
    CHECK(second.from_cache == first.computed);
    CHECK(slurp(again.file()) == bytes);

    auto ea = search_primes(SearchTarget::eA_zero, 5, 50, &again);
    CHECK(ea.hits == std::vector<u64>{5, 13, 37});
    CHECK(search_primes(SearchTarget::wilson, 30, 20, nullptr).hits.empty());

    auto check = verify_cache_sample(again, 40, 7);
    CHECK(check.sampled == 40);
    CHECK(check.mismatches.empty());

    // a tampered record is caught
    {
        std::ofstream out(again.file(), std::ios::app);
        out << to_line({"gamma_W", {}, 1009, 1}) << '\n';
    }
    ResidueCache tampered(tmp.dir);
    CHECK(verify_cache_sample(tampered, 10000, 1).mismatches.size() == 1);
}

TEST_CASE("cli verify") {
    auto r = run({"verify", "dobinski", "--r", "1", "--nmax", "10", "--x", "1", "--pmin", "5", "--pmax", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("484 passed, 0 failed") != std::string::npos);

    CHECK(run({"verify", "dobinski", "--r", "2", "--nmax", "8", "--x", "1/2", "--pmin", "5", "--pmax", "500"}).code == 0);
    CHECK(run({"verify", "dobinski", "--x", "1//2"}).code == 2);
    CHECK(run({"verify", "dobinski", "--x", "1 /2"}).code == 2);
    CHECK(run({"verify", "dobinski", "--r", "0"}).code == 2);
    CHECK(run({"verify", "dobinski", "--pmin", "30", "--pmax", "20"}).code == 0);

    auto m = run({"verify", "euler", "--which", "mascheroni", "--x", "-1", "--pmax", "1009"});
    CHECK(m.code == 0);
    CHECK(m.out.find("gamma_M(-1) = gamma_W at 167 of 167 admissible primes") != std::string::npos);
    CHECK(run({"verify", "euler", "--which", "kluyver", "--m", "2", "--x", "0", "--pmax", "503"}).code == 0);
    CHECK(run({"verify", "euler", "--which", "eisenstein", "--x", "7/3", "--pmax", "503"}).code == 0);
    CHECK(run({"verify", "euler", "--which", "interlude", "--k", "2,3", "--x", "0,-2", "--pmax", "200"}).code == 0);
    CHECK(run({"verify", "euler", "--which", "logadd", "--x", "2,3,1/2", "--pmax", "200"}).code == 0);
    CHECK(run({"verify", "euler", "--which", "l1", "--x", "2,7/3", "--pmax", "200"}).code == 0);
    CHECK(run({"verify", "euler", "--which", "interlude", "--k", "1"}).code == 2);
    CHECK(run({"verify", "euler", "--which", "wolstenholme"}).code == 2);
    CHECK(run({"verify", "euler"}).code == 2);
}

TEST_CASE("cli json reports are deterministic") {
    const fs::path dir = fs::temp_directory_path();
    const auto a = dir / "finitea-test-a.jsonl", b = dir / "finitea-test-b.jsonl";
    std::vector<std::string> base = {"verify", "dobinski", "--r", "3", "--nmax", "6", "--x", "7/3", "--pmax", "300",
                                     "--no-timestamp", "--json"};
    auto one = base, four = base;
    one.insert(one.end(), {a.string(), "--threads", "1"});
    four.insert(four.end(), {b.string(), "--threads", "4"});
    REQUIRE(run(one).code == 0);
    REQUIRE(run(four).code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.find("timestamp") == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    CHECK(report_from_json(nlohmann::json::parse(text)).all_passed());

    REQUIRE(run({"verify", "dobinski", "--nmax", "2", "--pmax", "30", "--json", a.string()}).code == 0);
    CHECK(slurp(a).find("timestamp") != std::string::npos);
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("cli search and cache verify") {
    TempCache tmp("cli");
    auto w = run({"search", "--target", "wilson", "--pmin", "5", "--pmax", "600"});
    CHECK(w.code == 0);
    CHECK(w.out.rfind("5\n13\n563\n#", 0) == 0);
    auto again = run({"search", "--target", "wilson", "--pmin", "5", "--pmax", "600"});
    CHECK(again.out.find("0 computed") != std::string::npos);

    auto e = run({"search", "--target", "eA-zero", "--pmin", "5", "--pmax", "50"});
    CHECK(e.out.rfind("5\n", 0) == 0);
    auto empty = run({"search", "--target", "wilson", "--pmin", "8", "--pmax", "10"});
    CHECK(empty.code == 0);
    CHECK(empty.out.rfind("# 0 hit(s)", 0) == 0);
    CHECK(run({"search", "--target", "wieferich"}).code == 2);

    auto c = run({"cache", "verify", "--sample", "20"});
    CHECK(c.code == 0);
    CHECK(c.out.find("mismatches  0") != std::string::npos);
}

TEST_CASE("cli seq") {
    CHECK(run({"seq", "--name", "bell", "--nmax", "7"}).out == "0 1\n1 1\n2 2\n3 5\n4 15\n5 52\n6 203\n7 877\n");
    CHECK(run({"seq", "--name", "g", "--nmax", "7"}).out == "0 0\n1 1\n2 1\n3 3\n4 9\n5 31\n6 121\n7 523\n");
    CHECK(run({"seq", "--name", "gregory", "--nmax", "4"}).out == "0 1\n1 1/2\n2 -1/12\n3 1/24\n4 -19/720\n");
    CHECK(run({"seq", "--name", "b2j", "--nmax", "8"}).out == "0 1\n1 0\n2 1\n3 1\n4 2\n5 5\n6 13\n7 36\n8 109\n");
    CHECK(run({"seq", "--name", "b2j", "--nmax", "8", "--j", "1"}).out ==
          "0 0\n1 1\n2 0\n3 1\n4 2\n5 4\n6 10\n7 29\n8 90\n");
    CHECK(run({"seq", "--name", "gregory", "--nmax", "1", "--x", "1/2"}).out == "0 1\n1 1\n");
    CHECK(run({"seq", "--name", "catalan", "--nmax", "4"}).code == 2);
    CHECK(run({"seq", "--name", "b2j", "--j", "2"}).code == 2);

    const auto file = fs::temp_directory_path() / "finitea-test.b";
    CHECK(run({"seq", "--name", "bell", "--nmax", "3", "--bfile", file.string()}).code == 0);
    CHECK(slurp(file) == "0 1\n1 1\n2 2\n3 5\n");
    fs::remove(file);
}

TEST_CASE("cli gamma") {
    auto k = run({"gamma", "--method", "kluyver", "--m", "1", "--x", "0", "--terms", "10000"});
    CHECK(k.code == 0);
    CHECK(k.out.find("value               5.772156648") != std::string::npos);
    CHECK(k.out.find("|value-gamma|       4.49445e-11") != std::string::npos);

    auto b = run({"gamma", "--method", "bla101", "--k", "1", "--x", "0", "--terms", "100"});
    CHECK(b.code == 0);
    CHECK(b.out.find("|value-gamma|       2.30907e-04") != std::string::npos);

    CHECK(run({"gamma", "--method", "mascheroni", "--x", "-2"}).code == 2);
    CHECK(run({"gamma", "--method", "mascheroni", "--x", "-1"}).code == 2);
    CHECK(run({"gamma", "--method", "mascheroni", "--m", "2"}).code == 2);
    CHECK(run({"gamma", "--method", "kluyver", "--prec", "32"}).code == 2);
    CHECK(run({"gamma", "--method", "euler"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
}

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fqtype::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out).at("report"); }

}  // namespace

TEST_CASE("check subcommand exit codes") {
  const Run ok = run({"check", "--field", "2", "--poly", "T^12+T^3"});
  CHECK(ok.code == 0);
  const auto rep = report(ok);
  CHECK(rep.at("gcd") == "x+y");
  CHECK(rep.at("verdicts").at("main_theorem") == true);
  CHECK(rep.at("bounds").at("total") == 131);
  CHECK(rep.at("field") == "2");
  CHECK(rep.at("bad_s_candidates") == nlohmann::json::array({0}));

  CHECK(run({"check", "--field", "2", "--poly", "T^7"}).code == 1);
  const Run sq = run({"check", "--field", "2", "--poly", "T^2"});
  CHECK(sq.code == 1);
  CHECK(report(sq).at("gcd").is_null());

  CHECK(run({"check", "--field", "4", "--poly", "T^2"}).code == 2);
  CHECK(run({"check", "--field", "2", "--poly", "T^2+"}).code == 2);
  CHECK(run({"check", "--field", "2"}).code == 2);
  CHECK(run({"check", "--field", "2", "--poly", "T"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check with the geometric reducibility search") {
  const Run r = run({"check", "--field", "2", "--poly", "T^3", "--lemma21"});
  CHECK(report(r).at("lemma21_bad_s") == nlohmann::json::array({0}));
}

TEST_CASE("reports carry a provenance header") {
  const auto doc = nlohmann::json::parse(run({"check", "--field", "2^2", "--poly", "T^3+g*T"}).out);
  CHECK(doc.at("tool") == "fqtype");
  CHECK(doc.at("version") == FQTYPE_VERSION);
  CHECK(doc.at("seed") == 0);
  CHECK(doc.at("config") == "command=check field=2^2 modulus=1,1,1 poly=T^3+2*T seed=0 format=json");
}

TEST_CASE("dist subcommand") {
  const Run a = run({"dist", "--field", "2^4", "--poly", "T^3+T", "--m", "0", "--s", "0"});
  CHECK(a.code == 0);
  CHECK(report(a).at("total") == 16);
  const Run b = run({"dist", "--field", "3", "--poly", "T^3+2*T", "--m", "1"});
  int sum = 0;
  const auto types = report(b).at("types");
  for (const auto& row : types) sum += row.at("count").get<int>();
  CHECK(sum == 9);
  const Run c = run({"dist", "--field", "3", "--poly", "T^3+2*T", "--sample", "0"});
  CHECK(c.code == 0);
  CHECK(report(c).at("total") == 0);
  const Run csv = run({"dist", "--field", "3", "--poly", "T^3+2*T", "--m", "1", "--format", "csv"});
  CHECK(csv.out.find("partition;count;probability;reference;deviation;scaled_deviation\n3;2;2/9;1/3;1/9;") !=
        std::string::npos);
  CHECK(run({"dist", "--field", "2^13", "--poly", "T^3", "--m", "1"}).code == 2);
  CHECK(run({"dist", "--field", "3", "--poly", "T^3", "--m", "2"}).code == 2);
  CHECK(run({"dist", "--field", "3", "--poly", "T^3", "--s", "T"}).code == 2);
}

TEST_CASE("sampled reports are byte-identical across runs") {
  const std::vector<std::string> args = {"dist", "--field", "2^6", "--poly", "T^7", "--m", "1", "--sample", "3000",
                                         "--seed", "5"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep = {"badsweep", "--field", "2^3", "--poly", "T^5+T^3", "--format", "csv"};
  CHECK(run(sweep).out == run(sweep).out);
}

TEST_CASE("badset, badsweep, conjecture and morse-scan") {
  const auto bad = report(run({"badset", "--field", "2", "--poly", "T^12+T^3"}));
  CHECK(bad.at("bounds") == nlohmann::json({{"B1", 10}, {"B2", 110}, {"B", 120}, {"total", 131}}));
  CHECK(bad.at("B1").at("roots_in_field") == nlohmann::json::array({0}));
  CHECK(run({"badset", "--field", "2", "--poly", "T^7"}).code == 2);

  const auto sweep = report(run({"badsweep", "--field", "2^2", "--poly", "T^2", "--tolerance", "1000"}));
  CHECK(sweep.at("bad_count") == 0);
  CHECK(sweep.at("bound") == 1);

  const Run conj = run({"conjecture", "--field", "3", "--dmax", "4"});
  CHECK(conj.code == 0);
  CHECK(report(conj).at("counterexamples").empty());
  CHECK(report(conj).at("skipped").at("fprimeprime_zero") == 36);
  CHECK(run({"conjecture", "--field", "3", "--dmax", "9"}).code == 2);

  const auto morse = report(run({"morse-scan", "--field", "7", "--poly", "T^3+T"}));
  CHECK(morse.at("morse_count") == 6);
  CHECK(morse.at("morse_s") == nlohmann::json::array({0, 1, 2, 3, 4, 5}));
  CHECK(run({"check", "--field", "2", "--poly", "T^3", "--format", "csv"}).code == 2);
}

TEST_CASE("output files are written whole") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fqtype_cli_test";
  fs::create_directories(dir);
  const fs::path target = dir / "report.json";
  fs::remove(target);
  const Run r = run({"check", "--field", "2", "--poly", "T^12+T^3", "--out", target.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(nlohmann::json::parse(text.str()).at("report").at("gcd") == "x+y");
  CHECK_FALSE(fs::exists(dir / "report.json.tmp"));
  // A failed computation leaves no file behind.
  const fs::path missing = dir / "never.json";
  fs::remove(missing);
  CHECK(run({"badset", "--field", "2", "--poly", "T^7", "--out", missing.string()}).code == 2);
  CHECK_FALSE(fs::exists(missing));
  CHECK(run({"check", "--field", "2", "--poly", "T^3", "--out", (dir / "no" / "such" / "dir.json").string()}).code ==
        2);
  fs::remove_all(dir);
}

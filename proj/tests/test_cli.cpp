#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = eoc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--family", "ec", "--n", "6"}).out == "3\n");
  CHECK(run({"count", "--family", "dumont", "--n", "5"}).out == "3\n");
  CHECK(run({"count", "--family", "ec", "--multiset", "1,2,3"}).out == "0\n");
  CHECK(run({"count", "--family", "dc", "--n", "4", "--k", "2"}).out == "14\n");
  CHECK(run({"count", "--family", "lag-mstar", "--n", "4"}).out == "3\n");
  CHECK(run({"count", "--family", "soe", "--n", "7", "--brute"}).out == "17\n");
  const auto j = nlohmann::json::parse(run({"count", "--family", "ec", "--n", "8", "--format", "json"}).out);
  CHECK(j["count"] == "17");
}

TEST_CASE("count errors map to exit codes") {
  CHECK(run({"count", "--family", "nope", "--n", "6"}).code == eoc::cli::kParseError);
  CHECK(run({"count", "--family", "ec", "--multiset", "1^0"}).code == eoc::cli::kParseError);
  CHECK(run({"count", "--family", "dumont", "--n", "4"}).code == eoc::cli::kParseError);
  CHECK(run({"count", "--family", "ec", "--n", "30"}).code == eoc::cli::kGuardRefused);
  CHECK(run({"count", "--family", "ec", "--n", "12", "--brute"}).code == eoc::cli::kGuardRefused);
  CHECK(run({"count", "--family", "lag-all", "--n", "11"}).code == eoc::cli::kGuardRefused);
  CHECK(run({"count", "--family", "lag-m", "--n", "12"}).code == eoc::cli::kOk);
  CHECK(run({"verify", "--suite", "counts", "--max-n", "8"}).code == eoc::cli::kGuardRefused);
  CHECK(run({"count"}).code == eoc::cli::kParseError);
  CHECK(run({}).code == eoc::cli::kParseError);
}

TEST_CASE("list is deterministic") {
  const auto a = run({"list", "--family", "ec", "--n", "6"});
  CHECK(a.out == "(1,2,3,4,5,6)\n(1,2,4,3,5,6)\n(1,2,5,6,3,4)\n");
  CHECK(run({"list", "--family", "ec", "--n", "6"}).out == a.out);
  CHECK(run({"list", "--family", "lag-m", "--n", "4"}).out ==
        "(L0UDL0; 0,0,0,0)\n(L0UDL0; 0,0,1,0)\n(L0L0L0L0; 0,0,0,0)\n");
  const auto j = nlohmann::json::parse(run({"list", "--family", "dumont", "--n", "5", "--format", "json"}).out);
  CHECK(j == nlohmann::json({"21435", "34215", "42135"}));
  const auto big = run({"list", "--family", "ec", "--multiset", "1^2,2^2,3^2,4^2"});
  const auto again = run({"list", "--family", "ec", "--multiset", "1^2,2^2,3^2,4^2"});
  CHECK(big.out == again.out);
  CHECK(std::count(big.out.begin(), big.out.end(), '\n') == 14);
}

TEST_CASE("map golden examples") {
  CHECK(run({"map", "--bijection", "theta", "--input", "(1,5,6,3,4,2)"}).out == "34215\n");
  CHECK(run({"map", "--bijection", "psi", "--input", "(1,2)"}).out == "(1,2)\n");
  CHECK(run({"map", "--bijection", "phi_fv", "--input", "528713649"}).out == "(UUL0UDDL1D; 0,1,0,0,3,1,1,1)\n");
  CHECK(run({"map", "--bijection", "phi_fv", "--inverse", "--trace", "--input", "(UL1UDL0D; 0,1,1,2,0,0)"}).out ==
        "∘\n∘1∘\n∘21∘\n∘3∘21∘\n43∘21∘\n43∘215∘\n43∘2156\n4372156\n");
  CHECK(run({"map", "--bijection", "psi", "--input", "(1,2^2,4^3,6,5^2,6,1^2,8,1^2,4,5,8,3^2,4)"}).out ==
        "(1^2,5,8,4,3^2,4,1,6,5^2,6,4^3,2^2,1^2,8)\n");
  CHECK(run({"map", "--bijection", "psi", "--inverse", "--input", "(1,6,5^2,6,4^3,2^2,1^2,8,1^2,5,8,4,3^2,4)"}).out ==
        "(1^2,4,5,8,3^2,4,1,2^2,4^3,6,5^2,6,1^2,8)\n");
  CHECK(run({"map", "--bijection", "compact", "--input", "(1,2,2,1,1,1,3,4,4,2,1)"}).out == "(1^2,2^2,1^3,3,4^2,2)\n");
  CHECK(run({"map", "--bijection", "Phi", "--input", "(1,2,3,4,5,6)"}).out == "21435\n");
  CHECK(run({"map", "--bijection", "Psi", "--input", "(1,2,3,4,5,6)"}).out == "42135\n");
  CHECK(run({"map", "--bijection", "Phi", "--inverse", "--input", "21435"}).out == "(1,2,3,4,5,6)\n");
  CHECK(run({"map", "--bijection", "eta", "--input", "(1,2,5,6,3,4)"}).out == "14523\n");
  CHECK(run({"map", "--bijection", "rho", "--input", "(L0L0L0L0,(0,0,0,0))"}).out == "(UDUD; 0,1,0,1)\n");
  CHECK(run({"map", "--bijection", "rho", "--inverse", "--input", "(UDUD; 0,1,0,1)"}).out == "(L0L0L0L0; 0,0,0,0)\n");
  CHECK(run({"map", "--bijection", "theta", "--inverse", "--input", "21435"}).out == "(1,4,3,5,6,2)\n");
}

TEST_CASE("map json and errors") {
  const auto j = nlohmann::json::parse(
      run({"map", "--bijection", "phi_fv", "--inverse", "--trace", "--format", "json", "--input", "(UDUD; 0,1,0,1)"}).out);
  CHECK(j["output"] == "21435");
  CHECK(j["trace"].size() == 6);
  CHECK(run({"map", "--bijection", "psi", "--input", "(1,2,1,4,3,3,4,2)"}).code == eoc::cli::kParseError);
  CHECK(run({"map", "--bijection", "warp", "--input", "(1,2)"}).code == eoc::cli::kParseError);
  CHECK(run({"map", "--bijection", "psi", "--trace", "--input", "(1,2)"}).code == eoc::cli::kParseError);
}

TEST_CASE("verify") {
  const auto counts = run({"verify", "--suite", "counts", "--max-n", "4"});
  CHECK(counts.code == 0);
  CHECK(counts.out.find("counts n=4 g=17 [ec,dc,dumont,soe,M,M*]=17,17,17,17,17,17") != std::string::npos);
  CHECK(run({"verify", "--suite", "roundtrips", "--max-n", "1"}).code == 0);
  const auto formulas = run({"verify", "--suite", "formulas", "--max-n", "6"});
  CHECK(formulas.code == 0);
  CHECK(formulas.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--suite", "psi-order", "--max-n", "3", "--samples", "30"}).code == 0);
  CHECK(run({"verify", "--suite", "bogus"}).code == eoc::cli::kParseError);
  CHECK(run({"verify", "--max-n", "12"}).code == eoc::cli::kGuardRefused);
}

TEST_CASE("table") {
  const auto g = run({"table", "--kind", "genocchi", "--max-n", "8", "--format", "csv"});
  CHECK(g.out == "n,value\n1,1\n2,1\n3,3\n4,17\n5,155\n6,2073\n7,38227\n8,929569\n");
  CHECK(run({"table", "--kind", "genocchi", "--max-n", "8", "--format", "csv"}).out == g.out);

  const auto k = run({"table", "--kind", "genocchi-k", "--max-n", "1", "--max-k", "3", "--format", "csv"});
  CHECK(k.out == "n,k,value\n1,1,1\n1,2,2\n1,3,4\n");

  const auto f = run({"table", "--kind", "f-eq", "--n", "5", "--format", "csv"});
  std::istringstream lines(f.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,S,value");
  int rows = 0;
  long sum = 0;
  while (std::getline(lines, line)) {
    ++rows;
    sum += std::stol(line.substr(line.rfind(',') + 1));
  }
  CHECK(rows == 16);
  CHECK(sum == 120);
  CHECK(f.out.find("5,\"{2,4}\",3\n") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"table", "--kind", "genocchi-k", "--max-n", "2", "--max-k", "2", "--format", "json"}).out);
  CHECK(j.size() == 4);
  CHECK(j[3]["value"] == "14");
  CHECK(j[3]["n"] == "2");

  CHECK(run({"table", "--kind", "genocchi-k", "--max-n", "4", "--max-k", "3"}).code == eoc::cli::kGuardRefused);
  CHECK(run({"table", "--kind", "nope"}).code == eoc::cli::kParseError);
  CHECK(run({"table", "--kind", "genocchi", "--format", "xml"}).code == eoc::cli::kParseError);
}

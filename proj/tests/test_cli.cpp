#include "shiftsym/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using shiftsym::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli basis")
{
  const Run r4 = run({"basis", "4"});
  CHECK(r4.code == 0);
  CHECK(r4.out == "(4): 27/4*Q2^2 + 27/2*Q4\n");
  const Run r2 = run({"basis", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.empty());
  const Run r9 = run({"basis", "9", "--format", "json"});
  REQUIRE(r9.code == 0);
  const auto j = nlohmann::json::parse(r9.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["lambda"] == nlohmann::json{9});
  CHECK(j[3]["lambda"] == nlohmann::json{3, 3, 3});
  CHECK(j[0]["q_bracket"] == nlohmann::json::array());
  const Run r4j = run({"basis", "4", "--format", "json"});
  const auto j4 = nlohmann::json::parse(r4j.out);
  CHECK(j4[0]["q_bracket"] == nlohmann::json::parse(R"([{"coeff":"9/320","P":0,"Q":1,"R":0}])"));
  CHECK(j4[0]["h"][0] == nlohmann::json::parse(R"({"coeff":"27/4","monomial":{"2":2}})"));
  const Run latex = run({"basis", "6", "--format", "latex"});
  CHECK(latex.out.find(R"($(3,3)$ & $\frac{225}{4} \left(63 Q_3^2-108 Q_2 Q_4+2 Q_2^3\right)$ \\)") != std::string::npos);
  CHECK(run({"basis", "5", "--min-part", "1"}).out.find("(5): ") != std::string::npos);
  CHECK(run({"basis", "-1"}).code == 2);
  CHECK(run({"basis"}).code == 2);
}

TEST_CASE("cli qbracket")
{
  const Run h4 = run({"qbracket", "27/4*Q2^2 + 27/2*Q4"});
  CHECK(h4.code == 0);
  CHECK(h4.out.substr(h4.out.rfind('\n', h4.out.size() - 2) + 1) == "9/320*Q\n");
  CHECK(run({"qbracket", "Q2"}).out.find("\n-1/24*P\n") != std::string::npos);
  CHECK(run({"qbracket", "Q3"}).out == "O(q^31)\n0\n");
  CHECK(run({"qbracket", "-N", "9", "Q3"}).out == "O(q^10)\n0\n");
  CHECK(run({"qbracket", "-N", "4", "Q3"}).code == 1);
  const Run stdin_run = run({"qbracket", "-"}, "Q2\n");
  CHECK(stdin_run.out.find("-1/24*P") != std::string::npos);
  const Run mixed = run({"qbracket", "Q2 + Q4"});
  CHECK(mixed.code == 0);
  CHECK(mixed.err.find("--weight") != std::string::npos);
  CHECK(run({"qbracket", "Q2 + Q4", "--weight", "4"}).code == 1);
  CHECK(run({"qbracket", "Q4", "-N", "5", "--weight", "10"}).code == 1);
  CHECK(run({"qbracket", "Q2^"}).code == 2);
  CHECK(run({"qbracket", "Q2^(1/2)"}).code == 2);
  const Run json = run({"qbracket", "Q2", "-N", "12", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["order"] == 12);
  CHECK(j["series"].size() == 13);
  CHECK(j["series"][0] == "-1/24");
  CHECK(j["series"][3] == "4");
  CHECK(j["q_bracket"][0]["coeff"] == "-1/24");
}

TEST_CASE("cli decompose")
{
  const Run q4 = run({"decompose", "Q4"});
  CHECK(q4.code == 0);
  CHECK(q4.out == "h0 = 1/2*Q2^2 + Q4  [harmonic]\nh1 = 0  [harmonic]\nh2 = -1/2  [harmonic]\ndepth = 2\n");
  CHECK(run({"decompose"}, "Q2^2").out.find("h2 = 1  [harmonic]\ndepth = 2") != std::string::npos);
  CHECK(run({"decompose", "27/4*(Q2^2 + 2*Q4)"}).out == "h0 = 27/4*Q2^2 + 27/2*Q4  [harmonic]\ndepth = 0\n");
  CHECK(run({"decompose", "Q1*Q3"}).code == 2);
  const auto j = nlohmann::json::parse(run({"decompose", "Q4", "--format", "json"}).out);
  CHECK(j["depth"] == 2);
  CHECK(j["components"].size() == 3);
  CHECK(j["components"][2]["h"][0]["coeff"] == "-1/2");
}

TEST_CASE("cli recognize and eval")
{
  CHECK(run({"recognize", "--weight", "2", "-1/24 + q + 3*q^2 + 4*q^3 + 7*q^4 + 6*q^5 + 12*q^6 + 8*q^7 + 15*q^8 + 13*q^9 + 18*q^10 + O(q^11)"}).out ==
        "-1/24*P\n");
  CHECK(run({"recognize", "--weight", "2", "1 - 24*q + O(q^2)"}).code == 1);
  CHECK(run({"recognize", "1 + O(q)"}).code == 2);
  CHECK(run({"recognize", "--weight", "0", "nonsense"}).code == 2);
  CHECK(run({"eval", "Q2", "(2,1)"}).out == "71/24\n");
  CHECK(run({"eval", "Q2^2", "(1)"}).out == "529/576\n");
  CHECK(run({"eval", "Q2", "(1,2)"}).code == 2);
}

TEST_CASE("cli tables and usage")
{
  const Run t = run({"tables"});
  CHECK(t.code == 0);
  CHECK(t.out.find("(4): 27/4*(2*Q4 + Q2^2)  |  9/320*Q\n") != std::string::npos);
  CHECK(t.out.find("(3,3,3): -893025/4*(1287*Q3^3 - 3564*Q2*Q3*Q4 + 3240*Q2^2*Q5 + 10*Q2^3*Q3)  |  0\n") !=
        std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"basis", "4", "--format", "yaml"}).code == 2);
}

TEST_CASE("cli verify with too small an order fails through recognition")
{
  const Run r = run({"verify", "--order", "5", "--max-weight", "10"});
  CHECK(r.code == 1);
  CHECK(r.out.find("insufficient order") != std::string::npos);
}

TEST_CASE("cli verify is deterministic")
{
  const Run a = run({"verify", "--max-weight", "6", "--order", "20"});
  const Run b = run({"verify", "--max-weight", "6", "--order", "20"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"verify", "--max-weight", "6", "--order", "20", "--seed", "99"}).code == 0);
}

/* This is test_cli.cpp */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagvar/root_datum.hpp"
#include "flagvar/weyl.hpp"
#include "flagvar_cli.hpp"

using namespace flagvar;
using jsonx = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

jsonx cli_json(const std::vector<std::string>& args) {
  Run r = cli(args);
  REQUIRE(r.code == 0);
  return jsonx::parse(r.out);
}

}  // namespace

TEST_CASE("analyze emits the full report") {
  jsonx d = cli_json({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "0",
                      "--format", "json"});
  CHECK(d["root_system"] == "A5");
  CHECK(d["node"] == 3);
  CHECK(d["admissible"] == true);
  CHECK(d["dim_X"] == 9);
  CHECK(d["k_max"] == 3);

  REQUIRE(d["ladder"].size() == 4);
  CHECK(d["ladder"][0]["length"] == 0);
  CHECK(d["ladder"][1]["length"] == 5);
  CHECK(d["ladder"][1]["word"] == jsonx::array({1, 2, 5, 4, 3}));
  CHECK(d["ladder"][3]["word"] == jsonx::array({3, 2, 4, 3, 1, 2, 5, 4, 3}));
  CHECK(d["ladder"][0]["wall_value"] == "3/2");
  CHECK(d["ladder"][3]["wall_value"] == "-3/2");

  REQUIRE(d["chambers"].size() == 3);
  CHECK(d["chambers"][1]["codim"] == 4);
  CHECK(d["chambers"][1]["vanishing"]["low"] == jsonx::array({1, 2}));
  CHECK(d["chambers"][1]["vanishing"]["high"].is_null());

  CHECK(d["query"]["q"] == "0");
  CHECK(d["query"]["location"] == "chamber 1");
  CHECK(d["query"]["codim"] == 4);
  CHECK(d["query"]["geometric"] == true);
  CHECK(d["query"]["unstable"]["dominant"]["length"] == 5);
  CHECK(d["query"]["vanishing"]["low"] == jsonx::array({1, 2}));
}

TEST_CASE("printed words recompose to their elements") {
  jsonx d = cli_json({"analyze", "--type", "B", "--rank", "3", "--node", "2", "--q", "0",
                      "--format", "json"});
  const RootDatum datum = build_root_datum(Family::B, 3);
  int checked = 0;
  for (const jsonx& entry : d["ladder"]) {
    std::vector<int> word = entry["word"].get<std::vector<int>>();
    WeylElement w = element_from_word(datum, word);
    CHECK(w.len == entry["length"].get<int>());
    ++checked;
  }
  CHECK(checked == d["k_max"].get<int>() + 1);
}

TEST_CASE("gorenstein flag engages the high vanishing range") {
  jsonx d = cli_json({"analyze", "--type", "E", "--rank", "7", "--node", "7", "--q", "0",
                      "--gorenstein", "--format", "json"});
  CHECK(d["dim_X"] == 27);
  CHECK(d["query"]["codim"] == 10);
  jsonx low = d["query"]["vanishing"]["low"];
  jsonx high = d["query"]["vanishing"]["high"];
  REQUIRE(low.size() == 8);
  CHECK(low[0] == 1);
  CHECK(low[7] == 8);
  REQUIRE(high.size() == 8);
  CHECK(high[0] == 19);
  CHECK(high[7] == 26);
}

TEST_CASE("wall and outside queries are not geometric") {
  jsonx d = cli_json({"analyze", "--type", "A", "--rank", "3", "--node", "2", "--q", "0",
                      "--format", "json"});
  CHECK(d["query"]["location"] == "wall 1");
  CHECK(d["query"]["geometric"] == false);
  CHECK(d["query"]["vanishing"].is_null());
  CHECK(d["query"]["codim"] == 4);

  d = cli_json({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "2", "--format",
                "json"});
  CHECK(d["query"]["location"] == "outside");
  CHECK(d["query"]["geometric"] == false);
  CHECK(d["query"]["codim"] == 0);
  CHECK(d["query"]["unstable"]["dominant"].is_null());
  CHECK(d["query"]["unstable"]["antidominant"]["length"] == 9);
}

TEST_CASE("antichains with several components list every word") {
  jsonx d = cli_json({"analyze", "--type", "D", "--rank", "4", "--node", "2", "--q", "1/2",
                      "--format", "json"});
  jsonx anti = d["query"]["unstable"]["antidominant"];
  CHECK(anti["cells"] == 3);
  REQUIRE(anti.contains("words"));
  CHECK(anti["words"].size() == 3);
  CHECK(anti["word"] == anti["words"][0]);
  jsonx dom = d["query"]["unstable"]["dominant"];
  CHECK(dom["cells"] == 1);
  CHECK_FALSE(dom.contains("words"));
}

TEST_CASE("walls subcommand lists walls chambers and arrows") {
  jsonx d = cli_json({"walls", "--type", "B", "--rank", "3", "--node", "2", "--format", "json"});
  CHECK(d["max_twist"] == "2");
  REQUIRE(d["walls"].size() == 5);
  CHECK(d["walls"][0]["value"] == "2");
  CHECK(d["walls"][2]["value"] == "0");
  CHECK(d["walls"][2]["codim"] == 4);
  CHECK(d["walls"][4]["value"] == "-2");
  CHECK(d["chambers"].size() == 4);
  CHECK(d["arrows"].size() == 8);
  CHECK(d["arrows"][0] == jsonx({{"chamber", 0}, {"wall", 0}}));
  CHECK(d["arrows"][1] == jsonx({{"chamber", 0}, {"wall", 1}}));
}

TEST_CASE("lambda scales the axis") {
  jsonx d = cli_json({"walls", "--type", "A", "--rank", "5", "--node", "3", "--lambda", "2",
                      "--format", "json"});
  CHECK(d["max_twist"] == "3");
  CHECK(d["walls"][0]["value"] == "3");
  CHECK(d["walls"][1]["value"] == "1");

  jsonx a = cli_json({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--lambda", "2",
                      "--q", "1", "--format", "json"});
  CHECK(a["query"]["location"] == "wall 1");
  CHECK(a["ladder"][1]["wall_value"] == "1");
}

TEST_CASE("ladder subcommand emits the chain") {
  jsonx d = cli_json({"ladder", "--type", "C", "--rank", "3", "--node", "3", "--format", "json"});
  CHECK(d["root_system"] == "C3");
  CHECK(d["dim_X"] == 6);
  CHECK(d["k_max"] == 3);
  CHECK(d["ladder"][3]["word"] == jsonx::array({3, 2, 3, 1, 2, 3}));
}

TEST_CASE("admissible table text and json") {
  Run r = cli({"admissible", "--max-rank", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A2 admissible nodes: none") != std::string::npos);
  CHECK(r.out.find("A3 admissible nodes: 2") != std::string::npos);
  CHECK(r.out.find("B4 admissible nodes: 1 2 3 4") != std::string::npos);

  jsonx d = cli_json({"admissible", "--max-rank", "3", "--format", "json"});
  bool saw_a2 = false;
  for (const jsonx& e : d["entries"])
    if (e["root_system"] == "A2" && e["node"] == 1) {
      saw_a2 = true;
      CHECK(e["admissible"] == false);
    }
  CHECK(saw_a2);
}

TEST_CASE("oracle subcommand reports agreement") {
  jsonx d = cli_json({"oracle", "--type", "A", "--rank", "5", "--node", "3", "--q", "0",
                      "--samples", "5", "--seed", "42", "--format", "json"});
  CHECK(d["n"] == 6);
  CHECK(d["i"] == 3);
  CHECK(d["covered"] == true);
  CHECK(d["cells"] == 20);
  CHECK(d["mismatches"].empty());

  d = cli_json({"oracle", "--type", "A", "--rank", "2", "--node", "1", "--q", "1/3", "--samples",
                "4", "--seed", "7", "--format", "json"});
  CHECK(d["covered"] == false);
  CHECK(d["mismatches"].empty());
}

TEST_CASE("rationals are canonicalized in the output") {
  jsonx d = cli_json({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "2/4",
                      "--format", "json"});
  CHECK(d["query"]["q"] == "1/2");
  CHECK(d["query"]["location"] == "wall 1");
}

TEST_CASE("identical requests produce identical bytes") {
  Run a = cli({"analyze", "--type", "B", "--rank", "4", "--node", "2", "--q", "1/3", "--format",
               "json"});
  Run b = cli({"analyze", "--type", "B", "--rank", "4", "--node", "2", "--q", "1/3", "--format",
               "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("exit codes separate the failure modes") {
  CHECK(cli({"analyze", "--type", "A", "--rank", "2", "--node", "1"}).code == 3);
  CHECK(cli({"ladder", "--type", "A", "--rank", "4", "--node", "1"}).code == 3);
  CHECK(cli({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "x"}).code == 2);
  CHECK(cli({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "1/0"}).code == 2);
  CHECK(cli({"analyze", "--type", "H", "--rank", "5", "--node", "3"}).code == 2);
  CHECK(cli({"analyze", "--type", "A", "--rank", "99", "--node", "3"}).code == 2);
  CHECK(cli({"analyze", "--type", "A", "--rank", "5", "--node", "9"}).code == 2);
  CHECK(cli({"oracle", "--type", "B", "--rank", "3", "--node", "2"}).code == 2);
  CHECK(cli({"oracle", "--type", "A", "--rank", "5", "--node", "3", "--samples", "0"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  Run r = cli({"analyze", "--type", "A", "--rank", "2", "--node", "1"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("text format mentions the essentials") {
  Run r = cli({"analyze", "--type", "A", "--rank", "5", "--node", "3", "--q", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A5 node 3") != std::string::npos);
  CHECK(r.out.find("k_max = 3") != std::string::npos);
  CHECK(r.out.find("codim 4") != std::string::npos);
  CHECK(r.out.find("chamber 1") != std::string::npos);
  CHECK(r.out.find("geometric quotient") != std::string::npos);
}

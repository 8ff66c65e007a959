#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "symporb/geometry.hpp"
#include "symporb/serialize.hpp"

using namespace symporb;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("symporb_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("analyze text output") {
  const auto smooth = call({"analyze", "2143"});
  CHECK(smooth.code == 0);
  CHECK(smooth.out.find("verdict rationally smooth") != std::string::npos);
  CHECK(smooth.out.find("P 1 + q + q^2") != std::string::npos);
  CHECK(smooth.out.find("factors [2,0]") != std::string::npos);

  const auto bottom = call({"analyze", "4321"});
  CHECK(bottom.out.find("P 1\n") != std::string::npos);
  CHECK(bottom.out.find("rationally smooth") != std::string::npos);
}

TEST_CASE("analyze JSON output") {
  const auto r = call({"analyze", "351624", "--output", "json"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["schema"] == "symporb/analyze/1");
  CHECK(doc["smooth"] == false);
  CHECK(doc["rank"] == 4);
  CHECK(doc["witness"]["pattern"] == "351624");
  CHECK(doc["witness"]["indices"] == Json({1, 2, 3, 4, 5, 6}));
  CHECK(doc["factors"].is_null());
  const auto& irregular = doc["singular_locus"]["irregular"];
  CHECK(std::find(irregular.begin(), irregular.end(), "654321") != irregular.end());
}

TEST_CASE("simple commands") {
  CHECK(call({"rank", "351624"}).out == "4\n");
  CHECK(call({"order", "4321", "3412"}).out == "true\n");
  CHECK(call({"order", "2143", "4321"}).out == "false\n");
  CHECK(call({"interval", "3412"}).out == "3412 1\n4321 0\n");
  CHECK(call({"poly", "2143"}).out == "1 + q + q^2\npalindromic\n");
  CHECK(call({"factor", "3412"}).out == "[1,0]\n1 + q\n");
  CHECK(call({"avoid", "47513826"}).out == "contains 351624 at {1,2,4,6,7,8}\n");
  CHECK(call({"avoid", "2143"}).out == "avoids all bad patterns\n");
  CHECK(call({"enumerate", "--degree", "4"}).out == "2143\n3412\n4321\n");
}

TEST_CASE("factor refuses containers with exit code 2") {
  const auto r = call({"factor", "47513826"});
  CHECK(r.code == 2);
  CHECK(r.err.find("351624") != std::string::npos);
}

TEST_CASE("input errors and caps") {
  CHECK(call({"rank", "1234"}).code == 2);
  CHECK(call({"rank"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"interval", "2,1,4,3,6,5,8,7,10,9,12,11"}).code == 3);
  CHECK(call({"verify-theorem", "--degree", "12"}).code == 3);
  CHECK(call({"enumerate", "--degree", "16", "--max-degree-override", "16"}).code == 3);
  const auto raised = call({"interval", "2,1,4,3,6,5,8,7,10,9,12,11", "--max-degree-override",
                            "12"});
  CHECK(raised.code == 0);
  CHECK(raised.err.find("warning") != std::string::npos);
}

TEST_CASE("verify-theorem at small degree") {
  const auto r = call({"verify-theorem", "--degree", "6", "--output", "json"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["holds"] == true);
  CHECK(doc["degrees"][1]["orbits"] == 3);
  CHECK(doc["degrees"][1]["smooth"] == 3);
  CHECK(doc["degrees"][2]["orbits"] == 15);
  CHECK(doc["degrees"][2]["smooth"] == 14);
}

TEST_CASE("verify-table reports the two published discrepancies") {
  const auto r = call({"verify-table"});
  CHECK(r.code == 1);
  CHECK(r.out.find("15/17 rows match") != std::string::npos);
  CHECK(r.out.find("DIFF 53281764") != std::string::npos);
  CHECK(r.out.find("DIFF 34128765") != std::string::npos);
}

TEST_CASE("output does not depend on the worker count") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-theorem", "--degree", "8", "--output", "json"},
           {"singular-locus", "53281764"},
           {"graph", "21654387", "--output", "dot"},
       }) {
    auto one = args;
    one.insert(one.end(), {"--workers", "1"});
    auto four = args;
    four.insert(four.end(), {"--workers", "4"});
    CHECK(call(one).out == call(four).out);
  }
}

TEST_CASE("graph exports") {
  const auto dot = call({"graph", "2143", "--output", "dot"});
  CHECK(dot.out.find("graph bruhat {") == 0);
  CHECK(dot.out.find("regular=true") != std::string::npos);
  CHECK(dot.out.find("label=\"13 24\"") != std::string::npos);

  const auto js = Json::parse(call({"graph", "351624", "--output", "json"}).out);
  CHECK(js["regular"] == false);
  CHECK(js["rank_gap"] == 4);

  const auto local = call({"graph", "351624", "--bottom", "564312"});
  CHECK(local.code == 0);
  CHECK(local.out.find("vertices") != std::string::npos);
}

TEST_CASE("classify flag files") {
  const auto identity = write_temp("identity.json", to_json(FlagMatrix(RationalMatrix::identity(4))).dump());
  const auto r = call({"classify", identity});
  CHECK(r.code == 0);
  CHECK(r.out.find("4321\nrank 0 (closed orbit)") == 0);

  const auto open = write_temp("open.json", to_json(gram_basis_flag(FpfInvolution::parse("2143"))).dump());
  const auto o = call({"classify", open, "--output", "json", "--grid"});
  const auto doc = Json::parse(o.out);
  CHECK(doc["involution"] == "2143");
  CHECK(doc["orbit"] == "open orbit");
  CHECK(doc["smooth"] == true);
  CHECK(doc["rank_grid"][3] == Json({1, 2, 3, 4}));

  const auto singular = write_temp("singular.json", R"([["1","2"],["2","4"]])");
  CHECK(call({"classify", singular}).code == 2);
  const auto broken = write_temp("broken.json", "[[1,0],");
  CHECK(call({"classify", broken}).code == 2);
  CHECK(call({"classify", "/nonexistent/flag.json"}).code == 2);
}

TEST_CASE("export bad patterns") {
  const auto doc = Json::parse(call({"export-bad-patterns", "--output", "json"}).out);
  REQUIRE(doc["patterns"].size() == 17);
  CHECK(doc["patterns"][0]["pattern"] == "351624");
  CHECK(doc["patterns"][13]["reverse_complement"] == "54821763");
}

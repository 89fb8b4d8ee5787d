#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "classprod/cli.hpp"
#include "classprod/constructions.hpp"
#include "classprod/group_io.hpp"
#include "classprod/report_json.hpp"

using namespace classprod;
namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code = 0;
    std::string out, err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run                r;
    r.code = run_cli(args, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  fs::path temp_path(std::string const& name) {
    return fs::temp_directory_path() / ("classprod-cli-" + name);
  }
}  // namespace

TEST_CASE("selectors") {
  FiniteGroup Q = quaternion8();
  CHECK(resolve_selector(Q, "i") == Q.find_name("i"));
  CHECK(resolve_selector(Q, "-1") == Q.find_name("-1"));
  CHECK(resolve_selector(Q, "1") == 0u);  // the name "1" wins over index 1
  CHECK(resolve_selector(Q, "g0*g1") == Q.find_name("k"));
  CHECK(resolve_selector(Q, "g0^2") == Q.find_name("-1"));
  CHECK(resolve_selector(Q, "g0^-1") == Q.find_name("-i"));
  CHECK_FALSE(resolve_selector(Q, "g2").has_value());
  CHECK_FALSE(resolve_selector(Q, "8").has_value());
  CHECK_FALSE(resolve_selector(Q, "g0*").has_value());
  FiniteGroup C = cyclic(6);
  CHECK(resolve_selector(C, "2") == 2u);
  FiniteGroup E = extraspecial_p3(3);
  CHECK(resolve_selector(E, "(1,0,0)") == 9u);
}

TEST_CASE("classes verb") {
  auto q8 = run({"classes", "--group", "q8"});
  CHECK(q8.code == 0);
  // Header plus five classes of sizes 1, 2, 2, 1, 2 in representative order.
  CHECK(std::count(q8.out.begin(), q8.out.end(), '\n') == 6);
  auto js = run({"classes", "--group", "es:3", "--json"});
  REQUIRE(js.code == 0);
  Json j = Json::parse(js.out);
  REQUIRE(j["classes"].size() == 11);
  int central = 0, size3 = 0;
  for (auto const& c : j["classes"]) {
    central += c["size"] == 1;
    size3 += c["size"] == 3;
  }
  CHECK(central == 3);
  CHECK(size3 == 8);
  auto c5 = Json::parse(run({"classes", "--group", "cyclic:5", "--json"}).out);
  CHECK(c5["classes"].size() == 5);
  CHECK(run({"classes", "--group", "nonsense"}).code == 2);
}

TEST_CASE("product verb") {
  auto q8 = Json::parse(run({"product", "--group", "q8", "-a", "i", "-b", "i", "--json"}).out);
  CHECK(q8["eta"] == 2);
  CHECK(q8["decomposition"].size() == 2);
  CHECK(q8["decomposition"][0]["size"] == 1);
  CHECK(q8["decomposition"][1]["size"] == 1);

  auto e27 = Json::parse(
      run({"product", "--group", "es:3", "-a", "(1,0,0)", "-b", "(2,0,0)", "--json"}).out);
  CHECK(e27["product_size"] == 3);
  CHECK(e27["eta"] == 3);

  auto c6 = Json::parse(run({"product", "--group", "cyclic:6", "-a", "1", "-b", "2", "--json"}).out);
  CHECK(c6["eta"] == 1);

  CHECK(run({"product", "--group", "q8", "-a", "nope", "-b", "i"}).code == 2);
  auto hyp = run({"product", "--group", "sym:3", "-a", "(1 2 3)", "-b", "(1 2)",
                  "--require-equal-centralizers"});
  CHECK(hyp.code == 3);
  CHECK(hyp.err.find("C_G") != std::string::npos);
  CHECK(run({"product", "--group", "q8", "-a", "i", "-b", "-i",
             "--require-equal-centralizers"}).code == 0);
}

TEST_CASE("check verb exit codes") {
  CHECK(run({"check", "all", "--group", "es:3"}).code == 0);
  CHECK(run({"check", "theorem-b", "--group", "alt:5"}).code == 0);
  auto q8 = run({"check", "theorem-a", "--group", "q8"});
  CHECK(q8.code == 0);
  CHECK(q8.err.find("DISCREPANCY") != std::string::npos);
  CHECK(q8.err.find("theorem-a/in-particular") != std::string::npos);
  CHECK(run({"check", "theorem-a", "--group", "es:3"}).err.empty());
  CHECK(run({"check", "bogus", "--group", "q8"}).code == 2);
  CHECK(run({"check", "all", "--group", "sym:"}).code == 2);
  CHECK(run({"check", "all"}).code == 2);
  CHECK(run({"check", "prop-eta1example", "--n", "9"}).code == 0);
  CHECK(run({"check", "lemma-observation2", "--p", "3", "--copies", "2"}).code == 0);
  CHECK(run({"check", "prop-eta1example", "--n", "4"}).code == 2);
  auto vac = run({"check", "theorem-b", "--group", "sym:4", "--json"});
  CHECK(vac.code == 0);
  CHECK(Json::parse(vac.out)["verdict"] == "vacuous");
}

TEST_CASE("check --json round trips") {
  auto r = run({"check", "theorem-a", "--group", "q8", "--json"});
  REQUIRE(r.code == 0);
  VerifierReport report = report_from_json(Json::parse(r.out));
  CHECK(report == check_theorem_a(quaternion8()));
  auto all = Json::parse(run({"check", "all", "--group", "sym:4", "--json"}).out);
  auto expected = check_all(symmetric(4));
  REQUIRE(all.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report_from_json(all[i]) == expected[i]);
  }
}

TEST_CASE("build and construct verbs") {
  auto path = temp_path("q8.cayley");
  auto b    = run({"build", "--group", "q8", "--export-cayley", path.string()});
  CHECK(b.code == 0);
  CHECK(b.out.find("order:") != std::string::npos);
  FiniteGroup H = from_cayley_table(parse_cayley(read_text_file(path)));
  CHECK(H.cayley_table() == quaternion8().cayley_table());
  fs::remove(path);

  auto w = Json::parse(run({"construct", "eta1-witness", "--n", "15", "--json"}).out);
  CHECK(w["order"] == 3375);
  CHECK(w["class_size"] == 15);
  CHECK(w["square_eta"] == 1);
  CHECK(run({"construct", "eta1-witness", "--n", "6"}).code == 2);
  CHECK(run({"construct", "other", "--n", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("scan verb") {
  auto dir = temp_path("catalog");
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "z2.cayley") << "2\n0 1\n1 0\n";
  auto out = temp_path("rows.jsonl");
  auto r   = run({"scan", "--catalog", dir.string(), "--mode", "homogeneous", "--json",
                  out.string(), "--summary-json", "--workers", "2"});
  CHECK(r.code == 0);
  auto summary = Json::parse(r.out);
  auto rows    = scan_rows_from_json_lines(read_text_file(out));
  CHECK(summary["total"] == rows.size());
  bool has_e27 = false, has_file = false;
  for (auto const& row : rows) {
    has_e27  = has_e27 || row.group_id == "es:3";
    has_file = has_file || row.group_id.find("z2.cayley") != std::string::npos;
  }
  CHECK(has_e27);
  CHECK(has_file);

  auto again = temp_path("rows1.jsonl");
  CHECK(run({"scan", "--catalog", dir.string(), "--json", again.string(), "--workers",
             "1"}).code == 0);
  CHECK(read_text_file(again) == read_text_file(out));

  CHECK(run({"scan", "--catalog", (dir / "missing").string()}).code == 2);
  CHECK(run({"scan", "--catalog", dir.string(), "--mode", "other"}).code == 2);
  fs::remove_all(dir);
  fs::remove(out);
  fs::remove(again);
}

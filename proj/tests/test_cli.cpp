#include <doctest.h>

#include "bracekit/cli/app.hpp"
#include "bracekit/cli/expr.hpp"
#include "bracekit/presets.hpp"

using namespace bracekit;
using cli::json;

TEST_CASE("preset expressions") {
  CHECK(cli::parse_preset("paper_7_3").order() == 21);
  CHECK(cli::parse_preset("heisenberg(3)").order() == 27);
  CHECK(cli::parse_preset(" semidirect( 13 , 3 , 3 ) ").order() == 39);
  CHECK(cli::parse_preset("direct(alt(4),paper_7_3)").order() == 252);
  CHECK(cli::parse_preset("abelian(2,2,3)").order() == 12);
  CHECK(cli::parse_preset("dihedral(8)").order() == 8);
  CHECK(cli::parse_preset("q8") == presets::quaternion8());
  CHECK_THROWS_AS(cli::parse_preset("heisenberg(4)"), InputError);
  CHECK_THROWS_AS(cli::parse_preset("nonsense(3)"), InputError);
  CHECK_THROWS_AS(cli::parse_preset("cyclic(3"), InputError);
  CHECK_THROWS_AS(cli::parse_preset("sym(4) x"), InputError);
}

TEST_CASE("group spec documents") {
  json cayley = {{"cayley", {{0, 1}, {1, 0}}}, {"labels", {"e", "t"}}};
  FiniteGroup c2 = cli::resolve(cayley);
  CHECK(c2.order() == 2);
  CHECK(c2.label(1) == "t");
  CHECK(cli::resolve(json{{"cayley", {0, 1, 1, 0}}}).order() == 2);

  json bad = {{"cayley", {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}}};
  CHECK_THROWS_WITH_AS(cli::resolve(bad), doctest::Contains("associativity"), InputError);

  json perm = {{"permutation", {{"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}}}};
  CHECK(cli::resolve(perm).order() == 6);

  json semi = {{"semidirect", {{"normal", "cyclic(7)"}, {"acting", "cyclic(3)"}, {"exponent", 2}}}};
  CHECK(cli::resolve(semi) == presets::paper_7_3());

  json direct = {{"direct", {"cyclic(2)", {{"preset", "sym(3)"}}}}};
  CHECK(cli::resolve(direct).order() == 12);

  CHECK_THROWS_WITH_AS(cli::resolve("sym(4)", 10), doctest::Contains("order cap"), InputError);
  CHECK_THROWS_AS(cli::resolve(json{{"unknown", 1}}), InputError);
  CHECK_THROWS_AS(cli::resolve(json{{"cayley", {0, 1, 1}}}), InputError);
}

TEST_CASE("expressions over the worked example") {
  FiniteGroup g = presets::paper_7_3();
  Brace b = cli::build_brace(g, "main", 0);
  auto ev = [&](const std::string& e) { return b.label(cli::evaluate(b, e)); };
  CHECK(ev("(0,1)(1,0)") == "(2,1)");
  CHECK(ev("(0,1)*(1,0)") == "(2,1)");
  CHECK(ev("(0,1)\xe2\x88\x98(1,0)") == "(2,1)");
  CHECK(ev("((0,1)+(0,1))(1,0)+(1,0)") == "(5,2)");
  CHECK(ev("(0,1)(1,0)+(0,1)(1,0)") == "(4,2)");
  CHECK(ev("-(0,1)+(0,1)(1,0)") == "(2,0)");
  CHECK(ev("#8") == "(1,1)");
  CHECK(ev("(3,2) - (3,2)") == "(0,0)");
  CHECK_THROWS_AS(cli::evaluate(b, "(9,9)"), InputError);
  CHECK_THROWS_AS(cli::evaluate(b, "(0,1)+"), InputError);
  CHECK_THROWS_AS(cli::evaluate(b, "#99"), InputError);

  Brace q = cli::build_brace(presets::quaternion8(), "trivial-skew", 0);
  CHECK(q.label(cli::evaluate(q, "-1")) == "-1");
  CHECK(q.label(cli::evaluate(q, "i j")) == "k");
}

TEST_CASE("build then verify reproduces the verification block") {
  cli::Options o;
  o.construction = "main";
  cli::Outcome built = cli::run("build", json("paper_7_3"), o);
  REQUIRE(built.exit_code == cli::kOk);
  cli::Outcome checked = cli::run("verify", built.report["brace"], o);
  CHECK(checked.exit_code == cli::kOk);
  CHECK(checked.report["verification"] == built.report["verification"]);
  CHECK(checked.report["fingerprint"] == built.report["fingerprint"]);

  o.construction = "main-skew";
  cli::Outcome skew = cli::run("build", json("sym(4)"), o);
  REQUIRE(skew.exit_code == cli::kOk);
  cli::Outcome sv = cli::run("verify", skew.report["brace"], o);
  CHECK(sv.report["verification"] == skew.report["verification"]);
  CHECK(sv.report["kind"] == "skew");
}

TEST_CASE("reports are deterministic") {
  cli::Options o;
  o.construction = "tower";
  o.seed = 2;
  std::string a = cli::run("build", json("alt(4)"), o).report.dump();
  std::string b = cli::run("build", json("alt(4)"), o).report.dump();
  CHECK(a == b);
  CHECK(cli::run("decompose", json("sl2_3"), o).report.dump() ==
        cli::run("decompose", json("sl2_3"), o).report.dump());
  o.timing = true;
  CHECK(cli::run("analyze", json("sym(3)"), o).report.contains("timing_ms"));
}

TEST_CASE("exit codes") {
  cli::Options o;
  o.construction = "main";
  cli::Outcome e = cli::run("build", json("sym(4)"), o);
  CHECK(e.exit_code == cli::kPrecondition);
  CHECK(e.report["status"] == "precondition_failed");
  CHECK(e.report["error"].get<std::string>().find("Sylow 2-subgroup is non-abelian") !=
        std::string::npos);

  CHECK(cli::run("build", json("nonsense"), o).exit_code == cli::kInput);
  CHECK(cli::run("frobnicate", json("sym(3)"), o).exit_code == cli::kInput);
  o.construction = "nope";
  CHECK(cli::run("build", json("sym(3)"), o).exit_code == cli::kInput);

  o.construction = "main";
  cli::Outcome y = cli::run("ybe", json("paper_7_3"), o);
  REQUIRE(y.exit_code == cli::kOk);
  json sol = y.report["solution"];
  CHECK(cli::run("verify", sol, o).exit_code == cli::kOk);
  auto sigma = sol["sigma"].get<std::vector<Elem>>();
  std::swap(sigma[21 * 4 + 2], sigma[21 * 4 + 5]);
  sol["sigma"] = sigma;
  cli::Outcome bad = cli::run("verify", sol, o);
  CHECK(bad.exit_code == cli::kVerification);
  CHECK_FALSE(bad.report["check"]["braid"].get<bool>());
  CHECK(bad.report["check"]["braid_witness"]["indices"].size() == 3);

  json broken = cli::run("build", json("paper_7_3"), o).report["brace"];
  auto add = broken["add"].get<std::vector<Elem>>();
  std::swap(add[22], add[23]);
  broken["add"] = add;
  CHECK(cli::run("verify", broken, o).exit_code == cli::kVerification);
}

TEST_CASE("analyze, decompose and search commands") {
  cli::Options o;
  json a = cli::run("analyze", json("sym(4)"), o).report;
  CHECK(a["analysis"]["order"] == 24);
  CHECK(a["analysis"]["solvable"] == true);
  CHECK(a["analysis"]["fitting"]["order"] == 4);
  CHECK(a["analysis"]["sylow_tower"]["exists"] == false);

  json d = cli::run("decompose", json("paper_7_3"), o).report;
  CHECK(d["verification"]["ok"] == true);
  CHECK(d["decomposition"]["k"] == 2);

  json s = cli::run("search", json("cyclic(5)"), o).report;
  CHECK(s["count"] == 1);
  CHECK(s["braces"][0]["trivial"] == true);
  o.guard_search = 4;
  CHECK(cli::run("search", json("cyclic(5)"), o).exit_code == cli::kPrecondition);
}

TEST_CASE("fingerprints") {
  FiniteGroup g = presets::cyclic(3);
  std::string f = cli::fingerprint(g.order(), g.table());
  CHECK(f.size() == 64);
  CHECK(f == cli::fingerprint(3, std::vector<Elem>{0, 1, 2, 1, 2, 0, 2, 0, 1}));
  CHECK(f != cli::fingerprint(presets::cyclic(4).order(), presets::cyclic(4).table()));
}

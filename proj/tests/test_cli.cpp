// Tests for the command layer: check suite composition, report envelopes,
// SVG structure, argument validation, and determinism of every report.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli/cli.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <string>
#include <vector>

using cli::CheckResult;
using cli::CommandOutput;
using cli::Json;
using cli::UsageError;
using cli::Window;

namespace {

Json strip_timing(Json doc) {
  doc.erase("elapsed_ms");
  return doc;
}

const CheckResult& find_check(const std::vector<CheckResult>& checks,
                              const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  REQUIRE_MESSAGE(false, "no check named ", name);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("the check suite: names, order, and verdicts") {
  const auto checks = cli::run_all_checks();
  REQUIRE(checks.size() == 16);

  const std::vector<std::string> expected_names = {
      "2c-cross-ratio",
      "blowup-intersections",
      "critical-value-matches-z",
      "cycle-orbit-identities",
      "diagonal-punctures",
      "equalizer-admitted",
      "exceptional-limit-u",
      "exceptional-limit-v",
      "normal-crossing-base-counterexample",
      "normal-crossing-model",
      "strata-counts",
      "z-infinity-locus",
      "z-minus-one-square",
      "z-minus-y-square",
      "z-minus-zero-square",
      "zq-solution-count"};
  std::vector<std::string> names;
  for (const auto& c : checks) names.push_back(c.name);
  CHECK(names == expected_names);
  CHECK(std::is_sorted(names.begin(), names.end()));

  // Exactly two checks carry open questions; everything else passes.
  for (const auto& c : checks) {
    if (c.name == "2c-cross-ratio" || c.name == "zq-solution-count")
      CHECK(c.status == "flagged");
    else
      CHECK_MESSAGE(c.status == "pass", c.name, ": ", c.certificate.dump());
  }
}

TEST_CASE("check certificates carry their exact content") {
  const auto checks = cli::run_all_checks();

  const auto& cross = find_check(checks, "2c-cross-ratio");
  CHECK(cross.certificate["agreement_solutions"][0]["value"] == "1/2");
  CHECK(cross.certificate["lower_modulus"] == "w");

  const auto& blowup = find_check(checks, "blowup-intersections");
  CHECK(blowup.certificate["self_intersections"]["E_inf"] == -2);
  CHECK(blowup.certificate["self_intersections"]["Vhat"] == -1);
  CHECK(blowup.certificate["self_intersections"]["E_q"] == -1);
  CHECK(blowup.certificate["pullback_conservation"]["pairs_checked"] == 121);
  CHECK(blowup.certificate["corner"]["point"] == "E_q:inf");
  CHECK(blowup.certificate["corner"]["v"] == "1");
  CHECK(blowup.certificate["vhat_meets_eq"] == false);

  const auto& crit = find_check(checks, "critical-value-matches-z");
  CHECK(crit.certificate["sample"]["t_c"] == "8/3");
  CHECK(crit.certificate["sample"]["z"] == "-1/8");

  const auto& diag = find_check(checks, "diagonal-punctures");
  CHECK(diag.certificate["count"] == 7);
  CHECK(diag.certificate["real_line_points"] == 3);
  CHECK(diag.certificate["real_curve_roots"] == 5);
  CHECK(diag.certificate["complex_pairs"] == 1);

  const auto& equalizer = find_check(checks, "equalizer-admitted");
  CHECK(equalizer.certificate["in_equalizer"].size() == 3);
  CHECK(equalizer.certificate["status_counts"]["in-equalizer"] == 3);
  CHECK(equalizer.certificate["status_counts"]["conditional"] == 5);
  CHECK(equalizer.certificate["status_counts"]["excluded"] == 17);
  CHECK(equalizer.certificate["target_configuration"] == "{0,1}|{inf,x}");

  const auto& lim_u = find_check(checks, "exceptional-limit-u");
  CHECK(lim_u.certificate["z_inf"] == "-1/(4*u*(1+u))");
  CHECK(lim_u.certificate["formula_matches"] == true);
  CHECK(lim_u.certificate["kappa_sample"]["value"] == "-1/8");

  const auto& lim_v = find_check(checks, "exceptional-limit-v");
  CHECK(lim_v.certificate["z_q"] == "-v/(4*(1-v)^2)");
  CHECK(lim_v.certificate["value_one_poly"] == "4*v^2-7*v+4");
  CHECK(lim_v.certificate["kappa_samples"][0]["value"] == "-3/16");

  const auto& nc_base = find_check(checks, "normal-crossing-base-counterexample");
  CHECK(nc_base.certificate["crossings_pass"] == false);
  CHECK(nc_base.certificate["witness"]["key"] == "base:(inf,inf)");
  CHECK(nc_base.certificate["witness"]["branches"].get<int>() >= 3);

  const auto& nc_model = find_check(checks, "normal-crossing-model");
  CHECK(nc_model.certificate["crossings_pass"] == true);
  CHECK(nc_model.certificate["total_points"] == 17);
  CHECK(nc_model.certificate["points_on"]["Vhat"] == 7);

  const auto& counts = find_check(checks, "strata-counts");
  CHECK(counts.certificate["enumerated"] == 25);
  CHECK(counts.certificate["two_block"] == 10);
  CHECK(counts.certificate["chains"] == 15);
  CHECK(counts.certificate["subtype_counts"]["2c"] == 1);

  const auto& zq = find_check(checks, "zq-solution-count");
  CHECK(zq.certificate["normalizations_agree"] == false);
  CHECK(zq.certificate["mobius_normalized"]["value_zero_solutions"].size() == 1);
  CHECK(zq.certificate["chart_normalized"]["value_zero_solutions"][0]
            ["multiplicity"] == 2);
}

TEST_CASE("verify: exit codes and summary") {
  const CommandOutput ok = cli::cmd_verify();
  CHECK(ok.exit_code == 0);
  CHECK(ok.json["summary"]["pass"] == 14);
  CHECK(ok.json["summary"]["fail"] == 0);
  CHECK(ok.json["summary"]["flagged"] == 2);
  CHECK(ok.json["summary"]["total"] == 16);
  CHECK(ok.json["command"] == "verify");

  // The corruption fixture drops Z4's constant term.  The square certificate
  // tied to Z4 must fail; the only other registry consumer among the checks
  // is the diagonal-puncture inventory.  Nothing else may move.
  const CommandOutput bad = cli::cmd_verify(true);
  CHECK(bad.exit_code == 1);
  CHECK(bad.json["summary"]["fail"].get<int>() >= 1);
  std::set<std::string> failing;
  for (const auto& c : bad.json["checks"])
    if (c["status"] == "fail") failing.insert(c["name"].get<std::string>());
  CHECK(failing.count("z-minus-y-square") == 1);
  for (const auto& name : failing)
    CHECK((name == "z-minus-y-square" || name == "diagonal-punctures"));
  for (const auto& c : bad.json["checks"])
    if (c["name"] == "z-minus-zero-square" || c["name"] == "z-minus-one-square" ||
        c["name"] == "z-infinity-locus")
      CHECK(c["status"] == "pass");
}

TEST_CASE("report envelope: stable key order, timing last") {
  const Json doc = cli::cmd_strata().json;
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  REQUIRE(keys.size() >= 5);
  CHECK(keys[0] == "schema_version");
  CHECK(keys[1] == "tool");
  CHECK(keys[2] == "version");
  CHECK(keys[3] == "command");
  CHECK(keys[4] == "input");
  CHECK(keys.back() == "elapsed_ms");
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["tool"] == "per4");
}

TEST_CASE("determinism: identical reports modulo the timing field") {
  CHECK(strip_timing(cli::cmd_verify().json) ==
        strip_timing(cli::cmd_verify().json));
  CHECK(strip_timing(cli::cmd_blowup().json) ==
        strip_timing(cli::cmd_blowup().json));
  CHECK(strip_timing(cli::cmd_strata().json) ==
        strip_timing(cli::cmd_strata().json));
  const Window w = cli::parse_window("-2,3,-2,3");
  const CommandOutput a = cli::cmd_locus(w, 201);
  const CommandOutput b = cli::cmd_locus(w, 201);
  CHECK(a.svg == b.svg);
  CHECK(strip_timing(a.json) == strip_timing(b.json));
}

TEST_CASE("blowup report: pinned geometry") {
  const Json doc = cli::cmd_blowup().json;
  CHECK(doc["divisors"]["E_inf"]["self_intersection"] == -2);
  CHECK(doc["divisors"]["Vhat"]["self_intersection"] == -1);
  CHECK(doc["divisors"]["E_q"]["self_intersection"] == -1);
  CHECK(doc["divisors"]["Z4"]["self_intersection"] == 3);
  CHECK(doc["limits"]["z_inf"] == "-1/(4*u*(1+u))");
  CHECK(doc["limits"]["z_q"] == "-v/(4*(1-v)^2)");

  const Json& edges = doc["x_configuration"]["edges"];
  const Json want_a = Json::array({"Vhat", "E_inf"});
  const Json want_b = Json::array({"E_inf", "E_q"});
  bool has_a = false, has_b = false;
  for (const auto& e : edges) {
    if (e == want_a) has_a = true;
    if (e == want_b) has_b = true;
  }
  CHECK(has_a);
  CHECK(has_b);
  CHECK(doc["x_configuration"]["consistent"] == true);

  CHECK(doc["centers"].size() == 4);
  CHECK(doc["centers"][3]["point"] == "E_inf:0");
  CHECK(doc["charts"].size() == 12);
  CHECK(doc["intersection_matrix"]["order"].size() == 15);

  // The dumped text also carries the pinned formula verbatim.
  const std::string text = doc.dump(2);
  CHECK(text.find("\"z_inf\": \"-1/(4*u*(1+u))\"") != std::string::npos);
}

TEST_CASE("strata report: counts and verdicts") {
  const Json doc = cli::cmd_strata().json;
  CHECK(doc["counts"]["total"] == 25);
  CHECK(doc["counts"]["two_block"] == 10);
  CHECK(doc["counts"]["chains"] == 15);
  CHECK(doc["counts"]["in_equalizer"] == 3);
  CHECK(doc["strata"].size() == 25);
  CHECK(doc["four_mark_boundary"].size() == 3);
  CHECK(doc["type_2c_condition"]["agreement_solutions"][0]["value"] == "1/2");
}

TEST_CASE("locus: SVG structure") {
  const Window w = cli::parse_window("-2,3,-2,3");
  const std::string svg = cli::render_locus_svg(w, 201);

  // Exactly eleven path elements: six lines, four curves, the diagonal.
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++count;
    pos += 5;
  }
  CHECK(count == 11);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);

  // The curve with the vertical asymptote is one path of several subpaths,
  // and the sample hitting the asymptote exactly is omitted (201 samples on
  // [-2, 3] land on x = 1/2, i.e. viewport 400).
  const std::regex z4_re("<path class=\"curve\" d=\"([^\"]*)\"><title>Z4");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, z4_re));
  const std::string d = m[1];
  size_t moves = 0;
  for (pos = 0; (pos = d.find("M ", pos)) != std::string::npos; pos += 2) ++moves;
  CHECK(moves == 2);
  CHECK(d.find(" 400,") == std::string::npos);

  // Lines at infinity are drawn on the border.
  CHECK(svg.find("d=\"M 800,800 L 800,0\"") != std::string::npos);  // x = inf
  CHECK(svg.find("d=\"M 0,0 L 800,0\"") != std::string::npos);      // y = inf

  // Every coordinate is a plain decimal (the single conversion boundary).
  CHECK(svg.find("e+") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf,") == std::string::npos);
}

TEST_CASE("locus: report content") {
  const Window w = cli::parse_window("-2,3,-2,3");
  const Json doc = cli::cmd_locus(w, 201).json;
  CHECK(doc["components"].size() == 10);
  CHECK(doc["svg_paths"] == 11);
  CHECK(doc["diagonal"] == "y = x");
  REQUIRE(doc["diagonal_punctures"].size() == 7);
  std::vector<std::string> minpolys;
  for (const auto& p : doc["diagonal_punctures"])
    minpolys.push_back(p["minpoly"].get<std::string>());
  const std::vector<std::string> expected = {
      "x", "x-1", "", "x^2-3*x+1", "x^2+x-1", "2*x-1", "3*x^2-3*x+1"};
  CHECK(minpolys == expected);
  CHECK(doc["diagonal_punctures"][6]["real"] == false);
  CHECK(doc["diagonal_punctures"][5]["roots"][0] == "1/2");
}

TEST_CASE("locus: a tiny window still renders every path") {
  const Window w = cli::parse_window("2,3,10,11");  // empty of locus content
  const std::string svg = cli::render_locus_svg(w, 5);
  size_t count = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++count;
    pos += 5;
  }
  CHECK(count == 11);  // off-window components contribute empty paths
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(cli::parse_window("1,2,3"), UsageError);
  CHECK_THROWS_AS(cli::parse_window("0,0,1,2"), UsageError);
  CHECK_THROWS_AS(cli::parse_window("2,1,0,1"), UsageError);
  CHECK_THROWS_AS(cli::parse_window("0.5,2,0,1"), UsageError);
  CHECK_THROWS_AS(cli::parse_window("a,b,c,d"), UsageError);
  const Window w = cli::parse_window(" -1/2, 3/2, 0, 1 ");
  CHECK(exactfield::to_string(w.xmin) == "-1/2");
  CHECK(exactfield::to_string(w.xmax) == "3/2");

  CHECK_THROWS_AS(cli::cmd_locus(cli::parse_window("0,1,0,1"), 1), UsageError);
  CHECK_THROWS_AS(cli::render_locus_svg(cli::parse_window("0,1,0,1"), 0),
                  UsageError);

  CHECK_THROWS_AS(cli::cmd_classify("foo", "3"), UsageError);
  CHECK_THROWS_AS(cli::cmd_classify("1.5", "3"), UsageError);
  CHECK_THROWS_AS(cli::cmd_classify("1/0", "3"), UsageError);
  CHECK_THROWS_AS(cli::cmd_classify("", "3"), UsageError);
  CHECK_THROWS_AS(cli::cmd_classify("2", "3/"), UsageError);
}

TEST_CASE("classify: interior point with full cycle replay") {
  const Json doc = cli::cmd_classify("2", "3").json;
  CHECK(doc["interior"] == true);
  CHECK(doc["on_components"].empty());
  CHECK(doc["map"]["r"] == "4");
  CHECK(doc["map"]["t_c"] == "8/3");
  CHECK(doc["map"]["z"] == "-1/8");
  CHECK(doc["cycle"]["F(0)"] == "inf");
  CHECK(doc["cycle"]["F(inf)"] == "1");
  CHECK(doc["cycle"]["F(1)"] == "3");
  CHECK(doc["cycle"]["F(x)"] == "0");
  CHECK(doc["cycle"]["F(t_c)"] == "-1/8");
  CHECK(doc["cycle"]["verified"] == true);
}

TEST_CASE("classify: points on the locus") {
  const Json on_z3 = cli::cmd_classify("1/2", "1/2").json;
  CHECK(on_z3["interior"] == false);
  CHECK(on_z3["on_components"] == Json::array({"Z3"}));
  CHECK(!on_z3.contains("map"));

  const Json at_inf = cli::cmd_classify("inf", "0").json;
  CHECK(at_inf["interior"] == false);
  CHECK(at_inf["on_components"] == Json::array({"L_xinf", "L_y0"}));

  const Json origin = cli::cmd_classify("0", "0").json;
  CHECK(origin["on_components"] == Json::array({"L_x0", "L_y0"}));

  // (0, 1) sits on two lines and all four curves at once.
  const Json stacked = cli::cmd_classify("0", "1").json;
  CHECK(stacked["on_components"] ==
        Json::array({"L_x0", "L_y1", "Z1", "Z2", "Z3", "Z4"}));

  const Json neg = cli::cmd_classify("-1", "2").json;  // x+y=1: on Z3
  CHECK(neg["on_components"] == Json::array({"Z3"}));
}

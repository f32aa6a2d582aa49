/**
 * The five subcommands: argument validation, payload assembly, exit codes.
 *
 * Every command produces one JSON document through report_document(), so all
 * reports share the same envelope and differ only in the payload.  All
 * mathematical content is exact; the only floating-point quantity anywhere
 * is the elapsed_ms timing field.
 */
#include "cli/cli.hpp"

#include "family/family.hpp"
#include "strata/strata.hpp"
#include "surface/surface.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <stdexcept>

namespace cli {

namespace {

using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::Rat;
using exactfield::to_string;
using surface::algebraic_key;
using surface::proj_key;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

/// Parse a rational literal ("3", "-5/8").  Throws UsageError otherwise.
Rat parse_rat(const std::string& text, const std::string& what) {
  const auto bad = [&] {
    return UsageError(what + " must be a rational number like 3, -2, or 5/8" +
                      " (got \"" + text + "\")");
  };
  if (text.empty()) throw bad();
  size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) throw bad();
  bool seen_slash = false, digits_before = false, digits_after = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) throw bad();
  try {
    return exactfield::rat_from_string(text);
  } catch (const std::exception&) {
    throw bad();
  }
}

/// Parse a coordinate that may be "inf" or a rational literal.
ProjVal parse_proj(const std::string& text, const std::string& what) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "oo")
    return ProjVal::infinity();
  return ProjVal(FieldElem(parse_rat(text, what)));
}

Json divisor_registry_json(const surface::SurfaceModel& model) {
  Json divisors;
  for (const auto& d : model.divisors) {
    Json entry;
    entry["self_intersection"] = d.self_int;
    entry["exceptional"] = d.exceptional;
    if (d.exceptional)
      entry["born_at"] = d.born_at;
    else
      entry["bidegree"] = {d.bideg_a, d.bideg_b};
    Json pullback;
    for (const auto& [name, mult] : d.pullback) pullback[name] = mult;
    entry["pullback_of_birth_class"] = pullback;
    Json eqs;
    for (const auto& ch : model.charts) {
      const auto* eq = d.eq_in(ch.name);
      if (eq != nullptr) eqs[ch.name] = eq->to_string(ch.xvar, ch.yvar);
    }
    entry["chart_equations"] = eqs;
    divisors[d.name] = entry;
  }
  return divisors;
}

Json limits_json(const surface::ExceptionalLimits& lim) {
  const auto entries = [](const std::vector<surface::LimitEntry>& es,
                          const char* param) {
    Json out = Json::array();
    for (const auto& e : es)
      out.push_back({{param, proj_key(e.param)}, {"curve", e.curve}});
    return out;
  };
  const auto roots = [](const std::vector<exactfield::RootRec>& rs) {
    Json out = Json::array();
    for (const auto& r : rs)
      out.push_back({{"value", algebraic_key(r.value)},
                     {"multiplicity", r.multiplicity},
                     {"real", r.real}});
    return out;
  };

  // The pinned closed forms are emitted only after confirming they are the
  // computed objects, so the report can never drift from the library.
  using exactfield::rat;
  using exactfield::UniPoly;
  using exactfield::UniRat;
  const UniRat zu_expected(UniPoly<Rat>(-1L, "u"),
                           UniPoly<Rat>({rat(0), rat(4), rat(4)}, "u"));
  const UniRat zv_expected(UniPoly<Rat>({rat(0), rat(-1)}, "v"),
                           UniPoly<Rat>({rat(4), rat(-8), rat(4)}, "v"));
  if (lim.z_u != zu_expected || lim.z_v != zv_expected)
    throw std::logic_error(
        "exceptional-curve limit formulas drifted from their recorded "
        "closed forms");

  Json limits;
  limits["z_inf"] = "-1/(4*u*(1+u))";
  limits["z_inf_canonical"] = lim.z_u.to_string();
  limits["z_inf_degenerate"] = entries(lim.u_degenerate, "u");
  limits["e_inf_punctures"] = entries(lim.einf_punctures, "u");
  limits["z_q"] = "-v/(4*(1-v)^2)";
  limits["z_q_canonical"] = lim.z_v.to_string();
  limits["z_q_degenerate"] = entries(lim.v_degenerate, "v");
  limits["e_q_punctures"] = entries(lim.eq_punctures, "v");
  limits["z_q_value_zero"] = roots(lim.z_v_zero);
  limits["z_q_value_one_poly"] = lim.z_v_one_poly.to_string();
  limits["z_q_value_one"] = roots(lim.z_v_one);
  limits["z_q_chart_normalization"] = {
      {"slope_formula", lim.z_s_chart.to_string()},
      {"formula", lim.z_v_chart.to_string()},
      {"value_zero", roots(lim.z_v_chart_zero)},
      {"value_one", roots(lim.z_v_chart_one)},
      {"agrees_with_z_q", lim.v_formulas_agree}};
  return limits;
}

}  // namespace

Window parse_window(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (const char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw UsageError("window must be xmin,xmax,ymin,ymax (got \"" + text +
                     "\")");
  Window w{parse_rat(parts[0], "window xmin"), parse_rat(parts[1], "window xmax"),
           parse_rat(parts[2], "window ymin"), parse_rat(parts[3], "window ymax")};
  if (w.xmin >= w.xmax || w.ymin >= w.ymax)
    throw UsageError("window must satisfy xmin < xmax and ymin < ymax");
  return w;
}

CommandOutput cmd_verify(bool corrupt_z4) {
  const Stopwatch clock;
  const auto checks = run_all_checks(corrupt_z4);
  Json list = Json::array();
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"status", c.status},
                    {"certificate", c.certificate}});
    if (c.status == "pass")
      ++pass;
    else if (c.status == "fail")
      ++fail;
    else
      ++flagged;
  }
  Json payload;
  payload["checks"] = list;
  payload["summary"] = {{"pass", pass},
                        {"fail", fail},
                        {"flagged", flagged},
                        {"total", checks.size()}};
  Json input;
  input["corrupt_z4"] = corrupt_z4;
  CommandOutput out;
  out.json = report_document("verify", input, payload, clock.ms());
  out.exit_code = fail > 0 ? 1 : 0;
  return out;
}

CommandOutput cmd_locus(const Window& w, int samples) {
  const Stopwatch clock;
  if (samples < 2) throw UsageError("samples must be at least 2");

  Json curves = Json::array();
  for (const auto& comp : family::degeneracy_components()) {
    Json entry;
    entry["name"] = comp.name;
    entry["kind"] = comp.is_line ? "line" : "curve";
    entry["at_infinity"] = comp.at_infinity;
    entry["equation"] =
        comp.at_infinity
            ? std::string(comp.name[2] == 'x' ? "x = inf" : "y = inf")
            : comp.affine.to_string() + " = 0";
    curves.push_back(entry);
  }

  Json punctures = Json::array();
  for (const auto& p : family::diagonal_punctures()) {
    Json roots = Json::array();
    for (const auto& r : p.roots) roots.push_back(algebraic_key(r));
    punctures.push_back(
        {{"sources", p.sources},
         {"at_infinity", p.at_infinity},
         {"minpoly", p.at_infinity ? "" : p.minpoly.to_string()},
         {"real", p.real},
         {"roots", roots}});
  }

  const std::string svg = render_locus_svg(w, samples);

  Json payload;
  payload["components"] = curves;
  payload["diagonal"] = "y = x";
  payload["diagonal_punctures"] = punctures;
  payload["svg_paths"] = 11;
  Json input;
  input["window"] = {to_string(w.xmin), to_string(w.xmax), to_string(w.ymin),
                     to_string(w.ymax)};
  input["samples"] = samples;
  CommandOutput out;
  out.json = report_document("locus", input, payload, clock.ms());
  out.svg = svg;
  return out;
}

CommandOutput cmd_blowup() {
  const Stopwatch clock;
  const surface::SurfaceModel model = surface::standard_model();

  Json centers = Json::array();
  for (const auto& c : model.centers)
    centers.push_back({{"index", c.index},
                       {"chart", c.chart},
                       {"x", to_string(c.cx)},
                       {"y", to_string(c.cy)},
                       {"point", c.key},
                       {"exceptional_curve", c.exc}});

  Json charts = Json::array();
  for (const auto& ch : model.charts)
    charts.push_back({{"name", ch.name},
                      {"variables", {ch.xvar, ch.yvar}},
                      {"base_x", ch.x_of.to_string(ch.xvar, ch.yvar)},
                      {"base_y", ch.y_of.to_string(ch.xvar, ch.yvar)}});

  std::vector<std::string> names;
  for (const auto& d : model.divisors) names.push_back(d.name);
  Json matrix;
  matrix["order"] = names;
  matrix["rows"] = surface::intersection_matrix(model, names);

  const surface::IncidenceGraph graph = surface::incidence_graph(
      model, {"Vhat", "E_inf", "E_q", "L_yinf"});
  Json xconf;
  {
    Json verts = Json::array();
    for (const auto& v : graph.vertices)
      verts.push_back({{"name", v.name},
                       {"self_intersection", v.self_int},
                       {"crossings", v.boundary_count}});
    Json edges = Json::array();
    Json edge_points = Json::array();
    for (const auto& e : graph.edges) {
      edges.push_back({e.a, e.b});
      Json pts = Json::array();
      for (const auto& p : e.points) pts.push_back(p.key);
      edge_points.push_back(
          {{"edge", {e.a, e.b}}, {"points", pts}, {"multiplicity", e.total_mult}});
    }
    Json plumbing = Json::array();
    for (const auto& v : surface::boundary_manifold(
             model, {"Vhat", "E_inf", "E_q", "L_yinf"}))
      plumbing.push_back({{"name", v.name},
                          {"base", v.base},
                          {"euler_number", v.euler},
                          {"boundary_tori", v.boundary_tori}});
    xconf["vertices"] = verts;
    xconf["edges"] = edges;
    xconf["edge_points"] = edge_points;
    xconf["consistent"] = graph.consistent;
    xconf["plumbing"] = plumbing;
  }

  Json payload;
  payload["centers"] = centers;
  payload["charts"] = charts;
  payload["divisors"] = divisor_registry_json(model);
  payload["intersection_matrix"] = matrix;
  payload["x_configuration"] = xconf;
  payload["limits"] = limits_json(surface::exceptional_limits(model));
  CommandOutput out;
  out.json = report_document("blowup", Json::object(), payload, clock.ms());
  return out;
}

CommandOutput cmd_strata() {
  const Stopwatch clock;
  const auto records = strata::enumerate_boundary_strata();
  Json list = Json::array();
  int in_equalizer = 0;
  for (const auto& r : records) {
    if (r.status == "in-equalizer") ++in_equalizer;
    list.push_back({{"name", r.name},
                    {"blocks", r.blocks},
                    {"chain", r.chain},
                    {"subtype", r.subtype},
                    {"lower_image", r.lower_image},
                    {"cover_images", r.cover_images},
                    {"status", r.status},
                    {"reason", r.reason}});
  }
  const auto brute = strata::brute_force_counts();
  const auto tc = strata::type_2c_condition();
  Json troots = Json::array();
  for (const auto& r : tc.solutions)
    troots.push_back({{"value", algebraic_key(r.value)},
                      {"multiplicity", r.multiplicity},
                      {"real", r.real}});

  Json payload;
  payload["strata"] = list;
  payload["counts"] = {{"total", records.size()},
                       {"two_block", brute.first},
                       {"chains", brute.second},
                       {"in_equalizer", in_equalizer}};
  payload["four_mark_boundary"] = strata::boundary_strata_A();
  payload["target_configuration"] = strata::target_configuration();
  payload["type_2c_condition"] = {{"stratum", tc.stratum},
                                  {"lower_modulus", tc.lower.to_string()},
                                  {"upper_modulus", tc.upper.to_string()},
                                  {"agreement_solutions", troots}};
  CommandOutput out;
  out.json = report_document("strata", Json::object(), payload, clock.ms());
  return out;
}

CommandOutput cmd_classify(const std::string& x_token,
                           const std::string& y_token) {
  const Stopwatch clock;
  const family::ParamPoint p{parse_proj(x_token, "x"), parse_proj(y_token, "y")};
  const family::Classification cls = family::classify_parameter(p);

  Json payload;
  payload["point"] = {{"x", proj_key(p.x)}, {"y", proj_key(p.y)}};
  payload["interior"] = cls.interior;
  payload["on_components"] = cls.on_components;

  if (cls.interior) {
    // Interior points are ordinary members of the family: report the map's
    // exact data and replay the marked cycle at this parameter.
    const FieldElem x = p.x.finite(), y = p.y.finite();
    const family::FamilyMap f = family::family_map(x, y);
    const family::CriticalData cd = family::critical_data(f);
    const ProjVal z = family::z_of(x, y);
    const ProjVal f0 = family::eval_family(f, ProjVal(0));
    const ProjVal finf = family::eval_family(f, ProjVal::infinity());
    const ProjVal f1 = family::eval_family(f, ProjVal(1));
    const ProjVal fx = family::eval_family(f, p.x);
    const ProjVal ftc = family::eval_family(f, cd.t_c);
    const bool cycle_ok = f0.is_infinity() && proj_key(finf) == "1" &&
                          finf == ProjVal(FieldElem(exactfield::rat(1))) &&
                          f1 == p.y && fx == ProjVal(0) && ftc == z &&
                          cd.value == z;
    payload["map"] = {{"r", algebraic_key(f.r)},
                      {"t_c", proj_key(cd.t_c)},
                      {"z", proj_key(z)}};
    payload["cycle"] = {{"F(0)", proj_key(f0)},
                        {"F(inf)", proj_key(finf)},
                        {"F(1)", proj_key(f1)},
                        {"F(x)", proj_key(fx)},
                        {"F(t_c)", proj_key(ftc)},
                        {"verified", cycle_ok}};
    if (!cycle_ok)
      throw std::logic_error("cycle identities failed at an interior point");
  }

  Json input;
  input["x"] = x_token;
  input["y"] = y_token;
  CommandOutput out;
  out.json = report_document("classify", input, payload, clock.ms());
  return out;
}

}  // namespace cli

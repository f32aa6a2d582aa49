#include "surface/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace surface {

namespace {

BiPoly constant(const Rat& r) { return BiPoly::constant(r); }

/// Chart equation across x = 1/x̄: c·x^i y^j ↦ c·x̄^(a−i) y^j, a = deg_x.
BiPoly flip_x(const BiPoly& f) {
  const int a = f.deg_x();
  BiPoly out;
  for (const auto& [ij, c] : f.terms()) out.set(a - ij.first, ij.second, c);
  return out;
}

/// Chart equation across y = 1/ȳ: c·x^i y^j ↦ c·x^i ȳ^(b−j), b = deg_y.
BiPoly flip_y(const BiPoly& f) {
  const int b = f.deg_y();
  BiPoly out;
  for (const auto& [ij, c] : f.terms()) out.set(ij.first, b - ij.second, c);
  return out;
}

void set_eq_if_curve(DivisorRecord& d, const std::string& chart,
                     const BiPoly& f) {
  if (!f.is_constant()) d.eqs[chart] = f;
}

std::pair<std::string, std::string> pair_key(const std::string& a,
                                             const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

const BiPoly* DivisorRecord::eq_in(const std::string& chart) const {
  auto it = eqs.find(chart);
  return it == eqs.end() ? nullptr : &it->second;
}

const Chart& SurfaceModel::chart(const std::string& name) const {
  for (const auto& c : charts)
    if (c.name == name) return c;
  throw std::invalid_argument("unknown chart: " + name);
}

Chart& SurfaceModel::chart_mut(const std::string& name) {
  for (auto& c : charts)
    if (c.name == name) return c;
  throw std::invalid_argument("unknown chart: " + name);
}

const DivisorRecord& SurfaceModel::divisor(const std::string& name) const {
  for (const auto& d : divisors)
    if (d.name == name) return d;
  throw std::invalid_argument("unknown divisor: " + name);
}

bool SurfaceModel::has_divisor(const std::string& name) const {
  for (const auto& d : divisors)
    if (d.name == name) return true;
  return false;
}

int SurfaceModel::pairing(const std::string& a, const std::string& b) const {
  divisor(a);
  divisor(b);
  auto it = pair_table.find(pair_key(a, b));
  if (it == pair_table.end())
    throw std::logic_error("pairing table has no entry for " + a + ", " + b);
  return it->second;
}

SurfaceModel base_model() {
  SurfaceModel m;

  const RatExpr X = RatExpr::X(), Y = RatExpr::Y();
  const RatExpr one(1);
  m.charts.push_back({"c00", "x", "y", X, Y, {}});
  m.charts.push_back({"c10", "xb", "y", one / X, Y, {}});
  m.charts.push_back({"c01", "x", "yb", X, one / Y, {}});
  m.charts.push_back({"c11", "xb", "yb", one / X, one / Y, {}});

  auto add_affine_curve = [&m](const std::string& name, const BiPoly& affine,
                               int a, int b) {
    DivisorRecord d;
    d.name = name;
    d.bideg_a = a;
    d.bideg_b = b;
    set_eq_if_curve(d, "c00", affine);
    set_eq_if_curve(d, "c10", flip_x(affine));
    set_eq_if_curve(d, "c01", flip_y(affine));
    set_eq_if_curve(d, "c11", flip_y(flip_x(affine)));
    d.self_int = 2 * a * b;
    d.pullback[name] = 1;
    m.divisors.push_back(std::move(d));
  };

  for (const auto& comp : family::degeneracy_components()) {
    if (!comp.at_infinity) {
      add_affine_curve(comp.name, comp.affine, comp.bidegree.first,
                       comp.bidegree.second);
      continue;
    }
    DivisorRecord d;
    d.name = comp.name;
    d.bideg_a = comp.bidegree.first;
    d.bideg_b = comp.bidegree.second;
    if (comp.name == "L_xinf") {
      d.eqs["c10"] = BiPoly::X();
      d.eqs["c11"] = BiPoly::X();
    } else {  // L_yinf
      d.eqs["c01"] = BiPoly::Y();
      d.eqs["c11"] = BiPoly::Y();
    }
    d.self_int = 0;
    d.pullback[comp.name] = 1;
    m.divisors.push_back(std::move(d));
  }

  add_affine_curve("Vhat", BiPoly::X() - BiPoly::Y(), 1, 1);

  // Intersection pairing on ℙ¹×ℙ¹: (a,b)·(c,d) = a·d + b·c.
  for (size_t i = 0; i < m.divisors.size(); ++i)
    for (size_t j = i; j < m.divisors.size(); ++j) {
      const auto& di = m.divisors[i];
      const auto& dj = m.divisors[j];
      m.pair_table[pair_key(di.name, dj.name)] =
          di.bideg_a * dj.bideg_b + di.bideg_b * dj.bideg_a;
    }

  return m;
}

SurfaceModel blow_up(SurfaceModel m, const std::string& chart_name,
                     const FieldElem& cx, const FieldElem& cy,
                     const std::string& exc_name, const std::string& a_chart,
                     const std::string& b_chart, const std::string& a_xvar,
                     const std::string& a_yvar, const std::string& b_xvar,
                     const std::string& b_yvar) {
  if (!cx.is_rational() || !cy.is_rational())
    throw std::domain_error(
        "blowup center must be rational: chart equations are kept over the "
        "rationals, so a center in a quadratic extension is not supported "
        "(blow up the conjugate pair via a rational model instead)");
  if (m.has_divisor(exc_name))
    throw std::invalid_argument("divisor name already in use: " + exc_name);

  const Chart old_chart = m.chart(chart_name);  // copy: charts vector grows
  const std::string key = canonical_key(m, old_chart, cx, cy);
  if (m.destroyed.count(key))
    throw std::invalid_argument(
        "blowup center coincides with an earlier center: " + key);

  const Rat ax = cx.rat_value(), ay = cy.rat_value();
  const int center_index = static_cast<int>(m.centers.size());

  const BiPoly PX = BiPoly::X(), PY = BiPoly::Y();
  const size_t n_old = m.divisors.size();
  std::map<std::string, int> mult_of;

  for (size_t i = 0; i < n_old; ++i) {
    DivisorRecord& d = m.divisors[i];
    const BiPoly* f = d.eq_in(chart_name);
    int mult = 0;
    if (f) {
      const BiPoly fc = f->subst_poly(PX + constant(ax), PY + constant(ay));
      mult = fc.min_total_deg();
      set_eq_if_curve(d, a_chart, fc.subst_poly(PX, PX * PY).strip_x_power(mult));
      set_eq_if_curve(d, b_chart, fc.subst_poly(PX * PY, PY).strip_y_power(mult));
    }
    mult_of[d.name] = mult;
    if (mult > 0) d.center_mults.emplace_back(center_index, mult);
  }

  // Pairing drops by the product of center multiplicities.
  for (size_t i = 0; i < n_old; ++i) {
    const int mi = mult_of[m.divisors[i].name];
    if (mi == 0) continue;
    for (size_t j = i; j < n_old; ++j) {
      const int mj = mult_of[m.divisors[j].name];
      if (mj == 0) continue;
      m.pair_table[pair_key(m.divisors[i].name, m.divisors[j].name)] -= mi * mj;
      if (i == j) m.divisors[i].self_int -= mi * mj;
    }
  }

  // Total transforms gain the exceptional curve with the accumulated weight.
  for (size_t i = 0; i < n_old; ++i) {
    int acc = 0;
    for (const auto& [dname, coeff] : m.divisors[i].pullback)
      acc += coeff * mult_of[dname];
    if (acc != 0) m.divisors[i].pullback[exc_name] = acc;
  }

  DivisorRecord e;
  e.name = exc_name;
  e.exceptional = true;
  e.born_at = key;
  e.eqs[a_chart] = PX;
  e.eqs[b_chart] = PY;
  e.self_int = -1;
  e.pullback[exc_name] = 1;
  for (size_t i = 0; i < n_old; ++i)
    m.pair_table[pair_key(exc_name, m.divisors[i].name)] =
        mult_of[m.divisors[i].name];
  m.pair_table[pair_key(exc_name, exc_name)] = -1;
  m.divisors.push_back(std::move(e));

  const RatExpr RX = RatExpr::X(), RY = RatExpr::Y();
  Chart ca{a_chart, a_xvar, a_yvar,
           old_chart.x_of.subst(RX + RatExpr(ax), RX * RY + RatExpr(ay)),
           old_chart.y_of.subst(RX + RatExpr(ax), RX * RY + RatExpr(ay)),
           {{exc_name, false, false}}};
  Chart cb{b_chart, b_xvar, b_yvar,
           old_chart.x_of.subst(RX * RY + RatExpr(ax), RY + RatExpr(ay)),
           old_chart.y_of.subst(RX * RY + RatExpr(ax), RY + RatExpr(ay)),
           {{exc_name, true, true}}};
  m.charts.push_back(std::move(ca));
  m.charts.push_back(std::move(cb));

  m.centers.push_back({center_index, chart_name, ax, ay, key, exc_name});
  m.destroyed.insert(key);
  return m;
}

SurfaceModel standard_model() {
  const FieldElem Z0(Rat(0)), Z1(Rat(1));
  SurfaceModel m = base_model();
  m = blow_up(m, "c00", Z0, Z0, "E_0", "e0_a", "e0_b", "x", "s", "w", "y");
  m = blow_up(m, "c00", Z1, Z1, "E_1", "e1_a", "e1_b", "p", "s", "w", "t");
  m = blow_up(m, "c11", Z0, Z0, "E_inf", "einf_a", "einf_b", "xb", "ub", "u",
              "yb");
  m = blow_up(m, "einf_a", Z0, Z0, "E_q", "eq_1", "eq_2", "xb", "s", "w", "ub");
  // In eq_2 = (w, ū) the strict transform of E_inf is {w = 0}, and the
  // E_inf parameter of such a point is its ū coordinate.
  m.chart_mut("eq_2").exc_params.push_back({"E_inf", false, false});
  return m;
}

namespace {

ProjVal param_from_spec(const ExcParamSpec& spec, const FieldElem& px,
                        const FieldElem& py) {
  const FieldElem& c = spec.from_x ? px : py;
  return spec.invert ? ProjVal(FieldElem(Rat(1)), c)
                     : ProjVal(c, FieldElem(Rat(1)));
}

}  // namespace

std::string canonical_key(const SurfaceModel& m, const Chart& ch,
                          const FieldElem& px, const FieldElem& py) {
  // Exceptional curves take priority, newest first, so a point on a corner
  // E_new ∩ E_old is identified on E_new (whose parameter survives later
  // blowups at points of E_old).
  for (auto it = m.centers.rbegin(); it != m.centers.rend(); ++it) {
    const DivisorRecord& e = m.divisor(it->exc);
    const BiPoly* eq = e.eq_in(ch.name);
    if (!eq || !eq->eval(px, py).is_zero()) continue;
    for (const auto& spec : ch.exc_params)
      if (spec.curve == e.name)
        return e.name + ":" + proj_key(param_from_spec(spec, px, py));
    throw std::logic_error("chart '" + ch.name + "' meets " + e.name +
                           " but carries no parameter rule for it");
  }
  const auto [bx, by] = ch.to_base(px, py);
  return "base:(" + proj_key(bx) + "," + proj_key(by) + ")";
}

ProjVal exc_param(const SurfaceModel& m, const Chart& ch, const FieldElem& px,
                  const FieldElem& py, const std::string& curve) {
  const BiPoly* eq = m.divisor(curve).eq_in(ch.name);
  if (!eq || !eq->eval(px, py).is_zero())
    throw std::logic_error("point is not on " + curve + " in chart " +
                           ch.name);
  for (const auto& spec : ch.exc_params)
    if (spec.curve == curve) return param_from_spec(spec, px, py);
  throw std::invalid_argument("chart '" + ch.name +
                              "' has no parameter rule for " + curve);
}

Transforms transforms(const SurfaceModel& m, const std::string& name) {
  const DivisorRecord& d = m.divisor(name);
  return {d, d.pullback};
}

std::vector<std::vector<int>> intersection_matrix(
    const SurfaceModel& m, const std::vector<std::string>& names) {
  const size_t n = names.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = m.pairing(names[i], names[j]);
  return out;
}

int combination_pairing(const SurfaceModel& m,
                        const std::map<std::string, int>& a,
                        const std::map<std::string, int>& b) {
  int out = 0;
  for (const auto& [na, ca] : a)
    for (const auto& [nb, cb] : b) out += ca * cb * m.pairing(na, nb);
  return out;
}

}  // namespace surface

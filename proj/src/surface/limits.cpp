#include "surface/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace surface {

namespace {

/// Entries sorted by the canonical key of their parameter.
void sort_entries(std::vector<LimitEntry>& v) {
  std::sort(v.begin(), v.end(), [](const LimitEntry& a, const LimitEntry& b) {
    return proj_key(a.param) < proj_key(b.param);
  });
}

/// All crossing parameters of one exceptional curve, labeled by the curve met.
std::vector<LimitEntry> punctures_on(const SurfaceModel& m,
                                     const std::string& exc) {
  std::vector<LimitEntry> out;
  for (const auto& d : m.divisors) {
    if (d.name == exc || m.pairing(exc, d.name) == 0) continue;
    for (const auto& ip : intersection_points(m, exc, d.name))
      out.push_back(
          {exc_param(m, m.chart(ip.chart), ip.x, ip.y, exc), d.name});
  }
  sort_entries(out);
  return out;
}

/// Label each parameter with the curve met there (they must all be crossings).
std::vector<LimitEntry> label_params(const std::vector<ProjVal>& params,
                                     const std::vector<LimitEntry>& punctures,
                                     const std::string& what) {
  std::vector<LimitEntry> out;
  for (const auto& p : params) {
    const std::string k = proj_key(p);
    bool hit = false;
    for (const auto& pu : punctures)
      if (proj_key(pu.param) == k) {
        out.push_back({p, pu.curve});
        hit = true;
        break;
      }
    if (!hit)
      throw std::logic_error(what + " parameter " + k +
                             " does not match any crossing point");
  }
  sort_entries(out);
  return out;
}

bool value_is_marked(const ProjVal& v) {
  return v.is_infinity() || v.finite() == FieldElem(Rat(0)) ||
         v.finite() == FieldElem(Rat(1));
}

}  // namespace

ProjVal v_of_slope(const ProjVal& s) {
  if (s.is_infinity()) return ProjVal(FieldElem(Rat(1)), FieldElem(Rat(1)));
  const FieldElem sv = s.finite();
  return ProjVal(sv - FieldElem(Rat(1)), sv);  // (s−1)/s, ∞ at s = 0
}

ExceptionalLimits exceptional_limits(const SurfaceModel& m) {
  ExceptionalLimits L;
  const RatExpr X = RatExpr::X(), Y = RatExpr::Y();
  const Rat zero(0), one(1);

  // The free critical value in the (1/x, 1/y) chart.
  const RatExpr z11 = family::z_expr().subst(RatExpr(one) / X, RatExpr(one) / Y);

  // --- Limit along E_inf -------------------------------------------------
  // Coordinates (u, ȳ) with x̄ = u·ȳ.  z itself has a pole along ȳ = 0; the
  // marked cross-ratio rescales by ȳ, and ȳ·z extends over E_inf.
  const RatExpr z_on_b = z11.subst(X * Y, Y);
  const RatExpr rescaled = Y * z_on_b;
  {
    const UniPoly<Rat> den0 = rescaled.den().eval_y_rat(zero, "u");
    if (den0.is_zero())
      throw std::logic_error(
          "rescaled critical value still has a pole along E_inf");
    L.z_u = UniRat(rescaled.num().eval_y_rat(zero, "u"), den0);
  }

  L.einf_punctures = punctures_on(m, "E_inf");
  // punctures_on reports the canonical chart parameter ū = ȳ/x̄; the limit
  // function uses u = x̄/ȳ.
  for (auto& e : L.einf_punctures) e.param = e.param.reciprocal();
  sort_entries(L.einf_punctures);

  // The limit configuration degenerates where its value meets {0, 1, ∞}.
  {
    std::vector<ProjVal> bad;
    for (const auto& r : L.z_u.poles())
      bad.push_back(ProjVal(r.value, FieldElem(one)));
    for (const auto& r : L.z_u.solutions_at(zero))
      if (r.real) bad.push_back(ProjVal(r.value, FieldElem(one)));
    for (const auto& r : L.z_u.solutions_at(one))
      if (r.real) bad.push_back(ProjVal(r.value, FieldElem(one)));
    if (value_is_marked(L.z_u.value_at_infinity()))
      bad.push_back(ProjVal::infinity());
    L.u_degenerate = label_params(bad, L.einf_punctures, "degenerate u");
  }

  // --- Limit along E_q ----------------------------------------------------
  // Recorded closed form of the rescaled value near the corner, in (ū, v̄)
  // with v̄ = 1/v the reciprocal E_q parameter; its restriction to ū = 0
  // gives the limit, replayed here exactly as stated.
  {
    const BiPoly U = BiPoly::X(), V = BiPoly::Y();
    const BiPoly unit(1L);
    const BiPoly inner = U * (unit - Rat(2) * V + V * V) - V;
    const BiPoly qnum = -(inner * inner);
    const BiPoly qden = Rat(4) * V * (V - unit) * (V + U * V - unit);
    const RatExpr Q(qnum, qden);
    const UniPoly<Rat> den0 = Q.den().eval_x_rat(zero, "vb");
    if (den0.is_zero())
      throw std::logic_error("recorded corner form has a pole along E_q");
    const UniRat on_vbar(Q.num().eval_x_rat(zero, "vb"), den0);
    L.z_v = on_vbar.mobius(zero, one, one, zero, "v");  // v̄ = 1/v
  }
  L.z_v_zero = L.z_v.solutions_at(zero);
  L.z_v_one_poly =
      exactfield::primitive_normalized(L.z_v.num() - L.z_v.den());
  L.z_v_one = L.z_v.solutions_at(one);

  // Direct chart computation for comparison: restrict z to E_q in the
  // fourth-blowup chart (x̄, s), ū = s·x̄, then convert s = 1/(1−v).
  {
    const RatExpr z_eq1 = z11.subst(X, X * Y).subst(X, X * Y);
    const UniPoly<Rat> den0 = z_eq1.den().eval_x_rat(zero, "s");
    if (den0.is_zero())
      throw std::logic_error("critical value has a pole along E_q in-chart");
    L.z_s_chart = UniRat(z_eq1.num().eval_x_rat(zero, "s"), den0);
    L.z_v_chart = L.z_s_chart.mobius(zero, one, -one, one, "v");
  }
  L.z_v_chart_zero = L.z_v_chart.solutions_at(zero);
  L.z_v_chart_one = L.z_v_chart.solutions_at(one);
  L.v_formulas_agree = (L.z_v == L.z_v_chart);

  L.eq_punctures = punctures_on(m, "E_q");
  // Chart parameter is the blowup slope s; report in v = (s−1)/s.
  for (auto& e : L.eq_punctures) e.param = v_of_slope(e.param);
  sort_entries(L.eq_punctures);

  // Declared degeneracies of the v-limit: the pole of z_v and the parameter
  // value v = ∞ where the v-coordinate itself breaks down.
  {
    std::vector<ProjVal> bad;
    for (const auto& r : L.z_v.poles())
      bad.push_back(ProjVal(r.value, FieldElem(one)));
    bad.push_back(ProjVal::infinity());
    L.v_degenerate = label_params(bad, L.eq_punctures, "degenerate v");
  }
  for (const auto& e : L.eq_punctures)
    if (proj_key(e.param) != "1") L.kappa_v_degenerate.push_back(e);
  sort_entries(L.kappa_v_degenerate);

  return L;
}

}  // namespace surface

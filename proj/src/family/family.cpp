#include "family/family.hpp"

#include <algorithm>

namespace family {

using exactfield::rat;
using exactfield::sqrt_poly;

// ---------------------------------------------------------------------------
// bihomogeneous evaluation
// ---------------------------------------------------------------------------

FieldElem BiHomPoly::eval(const ProjVal& px, const ProjVal& py) const {
  const FieldElem &xn = px.num(), &xd = px.den();
  const FieldElem &yn = py.num(), &yd = py.den();
  auto powers = [](const FieldElem& v, int n) {
    std::vector<FieldElem> p(n + 1, FieldElem(1));
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * v;
    return p;
  };
  const auto xnp = powers(xn, a), xdp = powers(xd, a);
  const auto ynp = powers(yn, b), ydp = powers(yd, b);
  FieldElem acc(0);
  for (const auto& [k, v] : affine.terms()) {
    const auto [i, j] = k;
    acc = acc + FieldElem(v) * xnp[i] * xdp[a - i] * ynp[j] * ydp[b - j];
  }
  if (affine.is_zero()) return FieldElem(0);
  return acc;
}

BiHomPoly bihomogenize(const BiPoly& f) {
  if (f.is_zero()) throw std::domain_error("bihomogenize of the zero polynomial");
  return BiHomPoly{f, std::max(f.deg_x(), 0), std::max(f.deg_y(), 0)};
}

// ---------------------------------------------------------------------------
// curves and the degeneracy locus
// ---------------------------------------------------------------------------

namespace {
BiPoly X() { return BiPoly::X(); }
BiPoly Y() { return BiPoly::Y(); }
BiPoly C(long n) { return BiPoly(n); }
}  // namespace

BiPoly curve_Z1() { return X() * X() - C(2) * X() + C(1) - Y(); }
BiPoly curve_Z2() { return X() * X() + Y() - C(1); }
BiPoly curve_Z3() { return X() + Y() - C(1); }
BiPoly curve_Z4() { return X() * X() + C(2) * X() * Y() - C(2) * X() - Y() + C(1); }

namespace {

std::vector<LocusComponent> build_components(bool corrupt_z4) {
  std::vector<LocusComponent> out;
  auto add_affine_line = [&out](const std::string& name, const BiPoly& f) {
    out.push_back({name, true, false, f, bihomogenize(f), {std::max(f.deg_x(), 0), std::max(f.deg_y(), 0)}});
  };
  add_affine_line("L_x0", X());
  add_affine_line("L_x1", X() - C(1));
  out.push_back({"L_xinf", true, true, C(1), BiHomPoly{C(1), 1, 0}, {1, 0}});
  add_affine_line("L_y0", Y());
  add_affine_line("L_y1", Y() - C(1));
  out.push_back({"L_yinf", true, true, C(1), BiHomPoly{C(1), 0, 1}, {0, 1}});
  auto add_curve = [&out](const std::string& name, const BiPoly& f) {
    out.push_back({name, false, false, f, bihomogenize(f), {f.deg_x(), f.deg_y()}});
  };
  add_curve("Z1", curve_Z1());
  add_curve("Z2", curve_Z2());
  add_curve("Z3", curve_Z3());
  BiPoly z4 = curve_Z4();
  if (corrupt_z4) z4 = z4 - C(1);  // deliberately wrong variant
  add_curve("Z4", z4);
  return out;
}

}  // namespace

const std::vector<LocusComponent>& degeneracy_components(bool corrupt_z4) {
  static const std::vector<LocusComponent> clean = build_components(false);
  static const std::vector<LocusComponent> corrupt = build_components(true);
  return corrupt_z4 ? corrupt : clean;
}

const RatExpr& z_expr() {
  static const RatExpr z = [] {
    const RatExpr x = RatExpr::X(), y = RatExpr::Y();
    const RatExpr z1(curve_Z1());
    const RatExpr den = RatExpr(4) * x * (x - RatExpr(1)) * RatExpr(curve_Z3());
    return -(z1 * z1) / den;
  }();
  return z;
}

const RatExpr& r_expr() {
  static const RatExpr r =
      RatExpr(curve_Z3()) / (RatExpr::X() - RatExpr(1));
  return r;
}

FieldElem r_of(const FieldElem& x, const FieldElem& y) {
  if (x == FieldElem(1))
    throw std::domain_error("r(x, y) undefined at x = 1");
  return (x + y - FieldElem(1)) / (x - FieldElem(1));
}

ProjVal z_of(const FieldElem& x, const FieldElem& y) {
  try {
    return z_expr().eval_proj(x, y);
  } catch (const exactfield::IndeterminateEval&) {
    std::string names;
    const ProjVal px(x), py(y);
    for (const auto& comp : degeneracy_components())
      if (comp.bihom.vanishes_at(px, py))
        names += (names.empty() ? "" : ", ") + comp.name;
    throw exactfield::IndeterminateEval(
        "z is indeterminate at (" + x.str() + ", " + y.str() +
        "); vanishing locus components: " + names);
  }
}

// ---------------------------------------------------------------------------
// the family map
// ---------------------------------------------------------------------------

namespace {
template <class K>
FamilyMapT<K> make_family(const K& x, const K& y, const K& r) {
  FamilyMapT<K> f;
  f.x = x;
  f.y = y;
  f.r = r;
  // num = (t − x)(t − r) = t² − (x + r)t + x·r,  den = t².
  f.num = UniPoly<K>({x * r, K(0) - (x + r), K(1)}, "t");
  f.den = UniPoly<K>::monomial(K(1), 2, "t");
  return f;
}
}  // namespace

FamilyMap family_map(const FieldElem& x, const FieldElem& y) {
  if (x == FieldElem(0))
    throw std::domain_error("family undefined at x = 0 (marked zero collides with 0)");
  if (x == FieldElem(1))
    throw std::domain_error("family undefined at x = 1 (r has a pole)");
  const FieldElem r = r_of(x, y);
  if (r.is_zero())
    throw std::domain_error(
        "family degenerates when x + y - 1 = 0 (the map drops to degree 1)");
  return make_family(x, y, r);
}

SymbolicFamilyMap family_map_symbolic() {
  const RatExpr x = RatExpr::X(), y = RatExpr::Y();
  return make_family(x, y, r_expr());
}

ProjVal eval_family(const FamilyMap& f, const ProjVal& t) {
  const FieldElem &tn = t.num(), &td = t.den();
  // Homogeneous degree-2 evaluation of num and den.
  auto h = [&](const UniPoly<FieldElem>& p) {
    FieldElem acc(0);
    std::vector<FieldElem> np{FieldElem(1), tn, tn * tn};
    std::vector<FieldElem> dp{FieldElem(1), td, td * td};
    for (int i = 0; i <= 2; ++i) acc = acc + p.coeff(i) * np[i] * dp[2 - i];
    return acc;
  };
  return ProjVal(h(f.num), h(f.den));
}

CriticalData critical_data(const FamilyMap& f) {
  const FieldElem s = f.x + f.r;
  CriticalData out{ProjVal(FieldElem(2) * f.x * f.r, s), ProjVal(FieldElem(0))};
  out.value = eval_family(f, out.t_c);
  return out;
}

// ---------------------------------------------------------------------------
// symbolic identities
// ---------------------------------------------------------------------------

std::vector<IdentityCheck> verify_cycle_identities() {
  std::vector<IdentityCheck> out;
  const SymbolicFamilyMap f = family_map_symbolic();
  const RatExpr x = RatExpr::X(), y = RatExpr::Y();
  const RatExpr one(1);

  // 0 ↦ ∞: den(0) = 0 while num(0) = x·r is not identically zero.
  {
    const bool pass = f.den.coeff(0).is_zero() && !f.num.coeff(0).is_zero();
    out.push_back({"orbit-zero-to-infinity",
                   pass, "num(0) = " + f.num.coeff(0).to_string() +
                             ", den(0) = " + f.den.coeff(0).to_string()});
  }
  // ∞ ↦ ∞ would be deg num < deg den; here F(∞) = ratio of leading coeffs = 1.
  {
    const bool pass = f.num.degree() == 2 && f.den.degree() == 2 &&
                      f.num.lead() == f.den.lead();
    out.push_back({"orbit-infinity-to-one", pass,
                   "leading coefficients " + f.num.lead().to_string() + " / " +
                       f.den.lead().to_string()});
  }
  // 1 ↦ y.
  {
    const RatExpr v = f.num.eval(one) / f.den.eval(one) - y;
    out.push_back({"orbit-one-to-y", v.is_zero(), "F(1) - y = " + v.to_string()});
  }
  // x ↦ 0.
  {
    const RatExpr v = f.num.eval(x);
    out.push_back({"zero-at-x", v.is_zero(), "num(x) = " + v.to_string()});
  }
  // Finite critical points are exactly {0, t_c}: num'·den − num·den' =
  // t·((x+r)·t − 2xr).
  {
    const UniPoly<RatExpr> wronskian =
        f.num.derivative() * f.den - f.num * f.den.derivative();
    const RatExpr r = r_expr();
    const UniPoly<RatExpr> expect({RatExpr(0) - RatExpr(2) * x * r, x + r}, "t");
    const UniPoly<RatExpr> t_poly = UniPoly<RatExpr>::variable("t");
    const bool pass = wronskian == t_poly * expect;
    out.push_back({"critical-points-zero-and-tc", pass,
                   "num'*den - num*den' = t*((x+r)*t - 2*x*r)"});
  }
  // F(t_c) = z.
  {
    const RatExpr r = r_expr();
    const RatExpr tc = (RatExpr(2) * x * r) / (x + r);
    const RatExpr val = f.num.eval(tc) / f.den.eval(tc);
    const RatExpr diff = val - z_expr();
    out.push_back({"critical-value-is-z", diff.is_zero(),
                   "F(2xr/(x+r)) - z = " + diff.to_string()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// degeneracy certificates
// ---------------------------------------------------------------------------

namespace {

// (z − c)·4x(x−1)(x+y−1) must be a polynomial equal to −(square), and the
// square root must match the registered component polynomial up to a
// rational scale.
LocusCertificate square_certificate(const std::string& name, const RatExpr& c,
                                    const BiPoly& registered) {
  const RatExpr x = RatExpr::X();
  const RatExpr D = RatExpr(4) * x * (x - RatExpr(1)) * RatExpr(curve_Z3());
  const RatExpr prod = (z_expr() - c) * D;
  LocusCertificate cert{name, false, ""};
  if (!prod.is_poly()) {
    cert.detail = "product is not a polynomial: " + prod.to_string();
    return cert;
  }
  const auto root = sqrt_poly(-prod.num());
  if (!root) {
    cert.detail = "-(z - (" + c.to_string() + "))*D is not a perfect square: " +
                  (-prod.num()).to_string();
    return cert;
  }
  // Match against the registered curve up to sign (the square root is
  // sign-normalized; the registered polynomial may differ by ±1).
  const BiPoly reg_norm = registered.primitive_part();
  const BiPoly root_norm = root->primitive_part();
  if (reg_norm != root_norm) {
    cert.detail = "square root " + root->to_string() +
                  " does not match the registered curve " + registered.to_string();
    return cert;
  }
  cert.pass = true;
  cert.detail = "(z - (" + c.to_string() + "))*4x(x-1)(x+y-1) = -(" +
                root->to_string() + ")^2";
  return cert;
}

}  // namespace

std::vector<LocusCertificate> degeneracy_certificates(bool corrupt_z4) {
  const auto& comps = degeneracy_components(corrupt_z4);
  auto find = [&comps](const std::string& n) -> const BiPoly& {
    for (const auto& c : comps)
      if (c.name == n) return c.affine;
    throw std::logic_error("unknown component " + n);
  };
  std::vector<LocusCertificate> out;
  out.push_back(square_certificate("z-minus-zero-square", RatExpr(0), find("Z1")));
  out.push_back(square_certificate("z-minus-one-square", RatExpr(1), find("Z2")));
  out.push_back(square_certificate("z-minus-y-square", RatExpr::Y(), find("Z4")));

  // Pole locus of z: denominator = x(x−1)(x+y−1) (canonical), scaled by 4.
  {
    LocusCertificate cert{"z-infinity-locus", false, ""};
    const BiPoly den = z_expr().den();
    const BiPoly expect = X() * (X() - C(1)) * find("Z3");
    cert.pass = (den == expect);
    cert.detail = cert.pass
                      ? "den(z) = x(x-1)(x+y-1), poles exactly on L_x0, L_x1, Z3"
                      : "den(z) = " + den.to_string();
    out.push_back(cert);
  }
  return out;
}

// ---------------------------------------------------------------------------
// classification and the diagonal
// ---------------------------------------------------------------------------

Classification classify_parameter(const ParamPoint& p, bool corrupt_z4) {
  Classification out{true, {}};
  for (const auto& comp : degeneracy_components(corrupt_z4))
    if (comp.bihom.vanishes_at(p.x, p.y)) {
      out.interior = false;
      out.on_components.push_back(comp.name);
    }
  return out;
}

std::vector<Puncture> diagonal_punctures(bool corrupt_z4) {
  const auto& comps = degeneracy_components(corrupt_z4);
  std::vector<Puncture> out;

  // The three line punctures x = 0, 1, ∞ (each from an x-line and a y-line).
  auto line_puncture = [&](const std::string& a, const std::string& b,
                           const Rat& where, bool at_inf) {
    Puncture p{{a, b}, at_inf, UniPoly<Rat>("x"), true, {}};
    if (!at_inf) {
      p.minpoly = UniPoly<Rat>({-where, Rat(1)}, "x");
      p.roots = {FieldElem(where)};
    }
    out.push_back(p);
  };
  line_puncture("L_x0", "L_y0", rat(0), false);
  line_puncture("L_x1", "L_y1", rat(1), false);
  line_puncture("L_xinf", "L_yinf", rat(0), true);

  // Restriction of each curve to the diagonal: p(x, x).
  for (const auto& comp : comps) {
    if (comp.is_line) continue;
    const BiPoly diag = comp.affine.subst_poly(BiPoly::X(), BiPoly::X());
    UniPoly<Rat> m("x");
    for (const auto& [k, v] : diag.terms()) {
      const int d = k.first + k.second;  // all terms are powers of x
      if (static_cast<int>(m.c.size()) <= d) m.c.resize(d + 1, Rat(0));
      m.c[d] += v;
    }
    m.trim();
    m = exactfield::primitive_normalized(m);
    Puncture p{{comp.name}, false, m, true, {}};
    for (const auto& r : exactfield::all_roots(m)) {
      p.roots.push_back(r.value);
      if (!r.real) p.real = false;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace family

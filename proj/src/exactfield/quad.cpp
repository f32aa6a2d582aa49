#include "exactfield/quad.hpp"

#include <cstdio>
#include <vector>

namespace exactfield {

std::string to_decimal15(const Rat& v) {
  // 120 bits of mantissa comfortably exceeds 15 decimal digits, so the
  // binary intermediate never disturbs the rounded decimal output.
  mpf_class f(v, 120);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.15Fg", f.get_mpf_t());
  return std::string(buf);
}

std::string QuadMinPoly::to_string(const std::string& var) const {
  std::string s = var + "^2";
  if (sgn(p) != 0) {
    std::string ps = exactfield::to_string(p);
    if (ps == "1")
      s += "+" + var;
    else if (ps == "-1")
      s += "-" + var;
    else
      s += (sgn(p) > 0 ? "+" : "") + ps + "*" + var;
  }
  if (sgn(q) != 0) s += (sgn(q) > 0 ? "+" : "") + exactfield::to_string(q);
  return s;
}

std::string Quad::to_string(const std::string& var) const {
  if (is_rational()) return exactfield::to_string(a);
  std::string bs = exactfield::to_string(b);
  std::string alpha;
  if (bs == "1")
    alpha = var;
  else if (bs == "-1")
    alpha = "-" + var;
  else
    alpha = bs + "*" + var;
  if (sgn(a) == 0) return alpha;
  std::string as = exactfield::to_string(a);
  return (sgn(b) > 0 || bs == "1") ? as + "+" + alpha : as + alpha;
}

namespace {
void require_same_field(const Quad& x, const Quad& y) {
  if (x.m != y.m)
    throw std::domain_error("arithmetic between distinct quadratic extensions");
}
}  // namespace

Quad operator+(const Quad& x, const Quad& y) {
  require_same_field(x, y);
  return Quad(x.a + y.a, x.b + y.b, x.m);
}
Quad operator-(const Quad& x, const Quad& y) {
  require_same_field(x, y);
  return Quad(x.a - y.a, x.b - y.b, x.m);
}
Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.m); }

Quad operator*(const Quad& x, const Quad& y) {
  require_same_field(x, y);
  // (a1 + b1·α)(a2 + b2·α) with α² = −p·α − q.
  const Rat cross = x.b * y.b;
  return Quad(x.a * y.a - x.m.q * cross,
              x.a * y.b + x.b * y.a - x.m.p * cross, x.m);
}

bool operator==(const Quad& x, const Quad& y) {
  return x.m == y.m && x.a == y.a && x.b == y.b;
}

Quad inverse(const Quad& x) {
  const Rat n = x.norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero field element");
  Quad c = x.conj();
  return Quad(c.a / n, c.b / n, x.m);
}

FieldElem FieldElem::conj() const {
  return is_rational() ? *this : FieldElem(quad_value().conj());
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return FieldElem(Rat(1) / rat_value());
  return FieldElem(exactfield::inverse(quad_value()));
}

std::string FieldElem::str() const {
  return is_rational() ? to_string(rat_value()) : quad_value().to_string();
}

namespace {
// Promote both operands into a common field; throws on incompatible extensions.
std::pair<Quad, Quad> promote(const FieldElem& x, const FieldElem& y) {
  const QuadMinPoly* mx = x.min_poly();
  const QuadMinPoly* my = y.min_poly();
  const QuadMinPoly& m = mx ? *mx : *my;
  if (mx && my && !(*mx == *my))
    throw std::domain_error("arithmetic between distinct quadratic extensions");
  auto lift = [&m](const FieldElem& v) {
    return v.is_rational() ? Quad(v.rat_value(), Rat(0), m) : v.quad_value();
  };
  return {lift(x), lift(y)};
}
}  // namespace

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
  if (x.is_rational() && y.is_rational())
    return FieldElem(x.rat_value() + y.rat_value());
  auto [a, b] = promote(x, y);
  return FieldElem(a + b);
}
FieldElem operator-(const FieldElem& x, const FieldElem& y) {
  if (x.is_rational() && y.is_rational())
    return FieldElem(x.rat_value() - y.rat_value());
  auto [a, b] = promote(x, y);
  return FieldElem(a - b);
}
FieldElem operator-(const FieldElem& x) {
  if (x.is_rational()) return FieldElem(-x.rat_value());
  return FieldElem(-x.quad_value());
}
FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  if (x.is_rational() && y.is_rational())
    return FieldElem(x.rat_value() * y.rat_value());
  auto [a, b] = promote(x, y);
  return FieldElem(a * b);
}
FieldElem operator/(const FieldElem& x, const FieldElem& y) {
  return x * y.inverse();
}

// Structural equality.  Values in *different* extensions are unequal (never
// an error): distinct minimal polynomials mean distinct abstract fields.
bool operator==(const FieldElem& x, const FieldElem& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.rat_value() == y.rat_value();
  const Quad& a = x.quad_value();
  const Quad& b = y.quad_value();
  return a.m == b.m && a.a == b.a && a.b == b.b;
}

QuadRoots solve_quadratic(const Rat& a, const Rat& b, const Rat& c) {
  if (sgn(a) == 0) throw std::domain_error("solve_quadratic: leading coefficient is zero");
  QuadRoots out;
  out.disc = b * b - 4 * a * c;
  out.disc_sign = sign(out.disc);
  const Rat p = b / a, q = c / a;  // monic form t² + p·t + q

  if (auto s = rat_sqrt(out.disc)) {
    out.rational = true;
    const Rat sq = *s / a;  // √disc / a, sign handled by symmetry of ±
    const Rat r1 = (-p + sq) / 2;
    const Rat r2 = (-p - sq) / 2;
    out.double_root = (r1 == r2);
    out.roots = {FieldElem(r1), FieldElem(r2)};
    return out;
  }
  out.rational = false;
  out.double_root = false;
  QuadMinPoly m{p, q};
  out.ext = m;
  // The two roots are α and −p − α.
  out.roots = {FieldElem(Quad(Rat(0), Rat(1), m)),
               FieldElem(Quad(-p, Rat(-1), m))};
  return out;
}

}  // namespace exactfield

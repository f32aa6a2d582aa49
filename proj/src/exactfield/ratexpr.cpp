#include "exactfield/ratexpr.hpp"

namespace exactfield {

// ---------------------------------------------------------------------------
// RatExpr
// ---------------------------------------------------------------------------

void RatExpr::reduce() {
  if (d_.is_zero()) throw std::domain_error("rational expression with zero denominator");
  if (n_.is_zero()) {
    d_ = BiPoly(1);
    return;
  }
  BiPoly g = gcd(n_, d_);
  if (!g.is_constant()) {
    n_ = exact_div(n_, g);
    d_ = exact_div(d_, g);
  }
  // Scale so the denominator has coprime integer coefficients and positive
  // graded-lex lead; the numerator absorbs the factor.
  Rat scale = d_.content();
  if (sgn(d_.lead_gl().second) < 0) scale = -scale;
  const Rat inv = Rat(1) / scale;
  n_ = inv * n_;
  d_ = inv * d_;
}

RatExpr RatExpr::operator-() const {
  RatExpr r;
  r.n_ = -n_;
  r.d_ = d_;
  return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
  return RatExpr(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}
RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }
RatExpr operator*(const RatExpr& a, const RatExpr& b) {
  return RatExpr(a.num() * b.num(), a.den() * b.den());
}
RatExpr operator/(const RatExpr& a, const RatExpr& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational expression");
  return RatExpr(a.num() * b.den(), a.den() * b.num());
}
bool operator==(const RatExpr& a, const RatExpr& b) {
  // Canonical form makes equality structural.
  return a.num() == b.num() && a.den() == b.den();
}

namespace {
RatExpr eval_bipoly_at(const BiPoly& p, const RatExpr& fx, const RatExpr& fy) {
  const int dx = p.deg_x();
  if (dx < 0) return RatExpr();
  const int dy = p.deg_y();
  std::vector<RatExpr> ypow(std::max(dy, 0) + 1, RatExpr(1));
  for (int j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * fy;
  std::vector<RatExpr> rows(dx + 1, RatExpr());
  for (const auto& [k, v] : p.terms())
    rows[k.first] = rows[k.first] + RatExpr(v) * ypow[k.second];
  RatExpr acc;
  for (int i = dx; i >= 0; --i) acc = acc * fx + rows[i];
  return acc;
}
}  // namespace

RatExpr RatExpr::subst(const RatExpr& fx, const RatExpr& fy) const {
  RatExpr N = eval_bipoly_at(n_, fx, fy);
  RatExpr D = eval_bipoly_at(d_, fx, fy);
  if (D.is_zero())
    throw std::domain_error("substitution makes the denominator vanish identically");
  return N / D;
}

ProjVal RatExpr::eval_proj(const FieldElem& x, const FieldElem& y) const {
  FieldElem N = n_.eval(x, y);
  FieldElem D = d_.eval(x, y);
  if (N.is_zero() && D.is_zero())
    throw IndeterminateEval("indeterminate 0/0 at (" + x.str() + ", " + y.str() +
                            ") for (" + n_.to_string() + ")/(" + d_.to_string() + ")");
  return ProjVal(N, D);
}

FieldElem RatExpr::eval(const FieldElem& x, const FieldElem& y) const {
  ProjVal v = eval_proj(x, y);
  if (v.is_infinity())
    throw std::domain_error("pole encountered where a finite value is required");
  return v.finite();
}

std::string RatExpr::to_string(const std::string& xv, const std::string& yv) const {
  if (is_poly()) return n_.to_string(xv, yv);
  return "(" + n_.to_string(xv, yv) + ")/(" + d_.to_string(xv, yv) + ")";
}

// ---------------------------------------------------------------------------
// UniRat
// ---------------------------------------------------------------------------

void UniRat::reduce() {
  if (d_.is_zero()) throw std::domain_error("rational function with zero denominator");
  detail::join_var(n_, d_);
  if (!n_.is_constant()) d_.var = n_.var;
  if (!d_.is_constant()) n_.var = d_.var;
  if (n_.is_zero()) {
    d_ = UniPoly<Rat>(1, d_.var);
    return;
  }
  UniPoly<Rat> g = gcd_monic(n_, d_);
  if (g.degree() > 0) {
    n_ = exact_div(n_, g);
    d_ = exact_div(d_, g);
  }
  Rat scale = content_rat(d_);
  if (sgn(d_.lead()) < 0) scale = -scale;
  const Rat inv = Rat(1) / scale;
  n_ = inv * n_;
  d_ = inv * d_;
}

ProjVal UniRat::eval_proj(const FieldElem& t) const {
  FieldElem N = n_.eval(t);
  FieldElem D = d_.eval(t);
  if (N.is_zero() && D.is_zero())
    throw IndeterminateEval("indeterminate 0/0 at " + t.str() + " for " + to_string());
  return ProjVal(N, D);
}

UniRat UniRat::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                      const std::string& newvar) const {
  if (sgn(a * d - b * c) == 0)
    throw std::domain_error("degenerate substitution: determinant is zero");
  const int M = std::max(n_.degree(), d_.degree());
  UniPoly<Rat> N = homog_subst(n_, M, a, b, c, d, newvar);
  UniPoly<Rat> D = homog_subst(d_, M, a, b, c, d, newvar);
  return UniRat(N, D);
}

std::vector<RootRec> UniRat::solutions_at(const Rat& c) const {
  UniPoly<Rat> p = n_ - c * d_;
  if (p.is_zero())
    throw std::domain_error("the function is identically equal to the target value");
  return all_roots(p);
}

std::vector<RootRec> UniRat::poles() const { return all_roots(d_); }

ProjVal UniRat::value_at_infinity() const {
  const int dn = n_.degree(), dd = d_.degree();
  if (dn > dd) return ProjVal::infinity();
  if (dn < dd) return ProjVal(FieldElem(0));
  return ProjVal(FieldElem(n_.lead() / d_.lead()));
}

std::string UniRat::to_string() const {
  if (d_ == UniPoly<Rat>(1, d_.var)) return n_.to_string();
  return "(" + n_.to_string() + ")/(" + d_.to_string() + ")";
}

bool operator==(const UniRat& a, const UniRat& b) {
  return a.num() == b.num() && a.den() == b.den();
}

}  // namespace exactfield

#include "exactfield/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace exactfield {

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}
int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}
int BiPoly::total_deg() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}
int BiPoly::min_total_deg() const {
  if (t_.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [k, v] : t_) d = std::min(d, k.first + k.second);
  return d;
}
int BiPoly::min_deg_x() const {
  if (t_.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [k, v] : t_) d = std::min(d, k.first);
  return d;
}
int BiPoly::min_deg_y() const {
  if (t_.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [k, v] : t_) d = std::min(d, k.second);
  return d;
}

std::pair<BiPoly::Key, Rat> BiPoly::lead_gl() const {
  if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
  auto best = t_.begin();
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it) {
    const auto [bi, bj] = best->first;
    const auto [i, j] = it->first;
    if (i + j > bi + bj || (i + j == bi + bj && i > bi)) best = it;
  }
  return {best->first, best->second};
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, v] : t_) r.t_[k] = -v;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.t_) {
    auto [it, fresh] = t_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }
  return *this;
}
BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, va] : a.terms())
    for (const auto& [kb, vb] : b.terms()) {
      BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      r.set(k.first, k.second, r.coeff(k.first, k.second) + va * vb);
    }
  return r;
}

BiPoly operator*(const Rat& k, const BiPoly& p) {
  BiPoly r;
  if (sgn(k) == 0) return r;
  for (const auto& [key, v] : p.terms()) r.set(key.first, key.second, k * v);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return a.terms() == b.terms();
}

BiPoly pow(BiPoly base, int e) {
  BiPoly r(1);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
  // Row-wise Horner: collect by x-exponent, evaluate each row in y.
  const int dx = deg_x();
  if (dx < 0) return FieldElem(0);
  std::vector<UniPoly<FieldElem>> rows(dx + 1, UniPoly<FieldElem>("y"));
  for (const auto& [k, v] : t_) {
    auto& row = rows[k.first];
    if (static_cast<int>(row.c.size()) <= k.second) row.c.resize(k.second + 1, FieldElem(0));
    row.c[k.second] = FieldElem(v);
  }
  FieldElem acc(0);
  for (int i = dx; i >= 0; --i) {
    rows[i].trim();
    acc = acc * x + rows[i].eval(y);
  }
  return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  FieldElem v = eval(FieldElem(x), FieldElem(y));
  return v.rat_value();
}

BiPoly BiPoly::subst_poly(const BiPoly& px, const BiPoly& py) const {
  const int dx = deg_x();
  if (dx < 0) return BiPoly();
  // rows[i](py) = Σ_j c_ij · py^j, then Horner in px.
  std::vector<BiPoly> rows(dx + 1);
  {
    const int dy = deg_y();
    std::vector<BiPoly> ypow(std::max(dy, 0) + 1);
    ypow[0] = BiPoly(1);
    for (int j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * py;
    for (const auto& [k, v] : t_) rows[k.first] += v * ypow[k.second];
  }
  BiPoly acc;
  for (int i = dx; i >= 0; --i) acc = acc * px + rows[i];
  return acc;
}

UniPoly<FieldElem> BiPoly::eval_x(const FieldElem& x, const std::string& var) const {
  UniPoly<FieldElem> out(var);
  const int dy = deg_y();
  if (dy < 0) return out;
  out.c.assign(dy + 1, FieldElem(0));
  const int dx = deg_x();
  std::vector<FieldElem> xpow(std::max(dx, 0) + 1, FieldElem(1));
  for (int i = 1; i <= dx; ++i) xpow[i] = xpow[i - 1] * x;
  for (const auto& [k, v] : t_)
    out.c[k.second] = out.c[k.second] + FieldElem(v) * xpow[k.first];
  out.trim();
  return out;
}

UniPoly<FieldElem> BiPoly::eval_y(const FieldElem& y, const std::string& var) const {
  UniPoly<FieldElem> out(var);
  const int dx = deg_x();
  if (dx < 0) return out;
  out.c.assign(dx + 1, FieldElem(0));
  const int dy = deg_y();
  std::vector<FieldElem> ypow(std::max(dy, 0) + 1, FieldElem(1));
  for (int j = 1; j <= dy; ++j) ypow[j] = ypow[j - 1] * y;
  for (const auto& [k, v] : t_)
    out.c[k.first] = out.c[k.first] + FieldElem(v) * ypow[k.second];
  out.trim();
  return out;
}

UniPoly<Rat> BiPoly::eval_x_rat(const Rat& x, const std::string& var) const {
  UniPoly<FieldElem> f = eval_x(FieldElem(x), var);
  UniPoly<Rat> out(var);
  out.c.reserve(f.c.size());
  for (const auto& c : f.c) out.c.push_back(c.rat_value());
  out.trim();
  return out;
}

UniPoly<Rat> BiPoly::eval_y_rat(const Rat& y, const std::string& var) const {
  UniPoly<FieldElem> f = eval_y(FieldElem(y), var);
  UniPoly<Rat> out(var);
  out.c.reserve(f.c.size());
  for (const auto& c : f.c) out.c.push_back(c.rat_value());
  out.trim();
  return out;
}

BiPoly BiPoly::partial_x() const {
  BiPoly r;
  for (const auto& [k, v] : t_)
    if (k.first > 0) r.set(k.first - 1, k.second, Rat(k.first) * v);
  return r;
}
BiPoly BiPoly::partial_y() const {
  BiPoly r;
  for (const auto& [k, v] : t_)
    if (k.second > 0) r.set(k.first, k.second - 1, Rat(k.second) * v);
  return r;
}

BiPoly BiPoly::strip_x_power(int k) const {
  BiPoly r;
  for (const auto& [key, v] : t_) {
    if (key.first < k)
      throw std::domain_error("strip_x_power: term with smaller exponent present");
    r.set(key.first - k, key.second, v);
  }
  return r;
}
BiPoly BiPoly::strip_y_power(int k) const {
  BiPoly r;
  for (const auto& [key, v] : t_) {
    if (key.second < k)
      throw std::domain_error("strip_y_power: term with smaller exponent present");
    r.set(key.first, key.second - k, v);
  }
  return r;
}

UniPoly<UniPoly<Rat>> BiPoly::as_x_over_y(const std::string& xv, const std::string& yv) const {
  UniPoly<UniPoly<Rat>> out(xv);
  const int dx = deg_x();
  if (dx < 0) return out;
  out.c.assign(dx + 1, UniPoly<Rat>(yv));
  for (const auto& [k, v] : t_) {
    auto& row = out.c[k.first];
    if (static_cast<int>(row.c.size()) <= k.second) row.c.resize(k.second + 1, Rat(0));
    row.c[k.second] = v;
  }
  for (auto& row : out.c) row.trim();
  out.trim();
  return out;
}

UniPoly<UniPoly<Rat>> BiPoly::as_y_over_x(const std::string& yv, const std::string& xv) const {
  UniPoly<UniPoly<Rat>> out(yv);
  const int dy = deg_y();
  if (dy < 0) return out;
  out.c.assign(dy + 1, UniPoly<Rat>(xv));
  for (const auto& [k, v] : t_) {
    auto& row = out.c[k.second];
    if (static_cast<int>(row.c.size()) <= k.first) row.c.resize(k.first + 1, Rat(0));
    row.c[k.first] = v;
  }
  for (auto& row : out.c) row.trim();
  out.trim();
  return out;
}

BiPoly BiPoly::from_x_over_y(const UniPoly<UniPoly<Rat>>& p) {
  BiPoly r;
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < p.c[i].c.size(); ++j)
      r.set(static_cast<int>(i), static_cast<int>(j), p.c[i].c[j]);
  return r;
}
BiPoly BiPoly::from_y_over_x(const UniPoly<UniPoly<Rat>>& p) {
  BiPoly r;
  for (size_t j = 0; j < p.c.size(); ++j)
    for (size_t i = 0; i < p.c[j].c.size(); ++i)
      r.set(static_cast<int>(i), static_cast<int>(j), p.c[j].c[i]);
  return r;
}
BiPoly BiPoly::from_x_poly(const UniPoly<Rat>& p) {
  BiPoly r;
  for (size_t i = 0; i < p.c.size(); ++i) r.set(static_cast<int>(i), 0, p.c[i]);
  return r;
}
BiPoly BiPoly::from_y_poly(const UniPoly<Rat>& p) {
  BiPoly r;
  for (size_t j = 0; j < p.c.size(); ++j) r.set(0, static_cast<int>(j), p.c[j]);
  return r;
}

Rat BiPoly::content() const {
  if (t_.empty()) return Rat(0);
  Int den_lcm(1);
  for (const auto& [k, v] : t_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  Int num_gcd(0);
  for (const auto& [k, v] : t_) {
    Int scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

BiPoly BiPoly::primitive_part() const {
  if (t_.empty()) return BiPoly();
  Rat c = content();
  BiPoly r = Rat(1) / c * *this;
  if (sgn(r.lead_gl().second) < 0) r = -r;
  return r;
}

bool BiPoly::is_primitive_normalized() const {
  if (t_.empty()) return true;
  return content() == 1 && sgn(lead_gl().second) > 0;
}

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
  if (t_.empty()) return "0";
  // Display in descending graded-lex order.
  std::vector<std::pair<Key, Rat>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto [ai, aj] = a.first;
    const auto [bi, bj] = b.first;
    if (ai + aj != bi + bj) return ai + aj > bi + bj;
    return ai > bi;
  });
  std::string out;
  for (const auto& [k, v] : terms) {
    std::string mono;
    if (k.first == 1)
      mono = xv;
    else if (k.first > 1)
      mono = xv + "^" + std::to_string(k.first);
    if (k.second >= 1) {
      if (!mono.empty()) mono += "*";
      mono += (k.second == 1) ? yv : yv + "^" + std::to_string(k.second);
    }
    std::string cs = exactfield::to_string(v);
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else if (cs == "-1")
      term = "-" + mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd / exact division / resultants via the ℚ[y][x] view
// ---------------------------------------------------------------------------

namespace {

using RPoly = UniPoly<Rat>;         // element of ℚ[y]
using XPoly = UniPoly<RPoly>;       // element of ℚ[y][x]

// gcd of the coefficient list — the content of f in ℚ[y] (monic).
RPoly content_in_y(const XPoly& f) {
  RPoly g(f.is_zero() ? "y" : f.c.front().var);
  for (const auto& c : f.c) g = gcd_monic(g, c);
  return g;
}

XPoly divide_coeffs(const XPoly& f, const RPoly& c) {
  XPoly r = f;
  for (auto& k : r.c) k = exact_div(k, c);
  return r;
}

// Pseudo-remainder: lead(B)^(deg A − deg B + 1) · A mod B, computed without
// any coefficient division.
XPoly pseudo_rem(const XPoly& A, const XPoly& B) {
  if (B.is_zero()) throw std::domain_error("pseudo-division by zero");
  if (A.degree() < B.degree()) return A;
  XPoly R = A;
  const RPoly l = B.lead();
  int e = A.degree() - B.degree() + 1;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    XPoly t = XPoly::monomial(R.lead(), R.degree() - B.degree(), R.var);
    R = l * R - t * B;
    --e;
  }
  RPoly scale(Rat(1), l.var);
  for (int i = 0; i < e; ++i) scale = scale * l;
  return scale * R;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  XPoly f = a.as_x_over_y("x", "y");
  XPoly g = b.as_x_over_y("x", "y");
  RPoly cf = content_in_y(f), cg = content_in_y(g);
  XPoly pf = divide_coeffs(f, cf), pg = divide_coeffs(g, cg);
  RPoly cont = gcd_monic(cf, cg);
  if (pf.degree() < pg.degree()) std::swap(pf, pg);
  while (!pg.is_zero()) {
    XPoly r = pseudo_rem(pf, pg);
    pf = pg;
    if (r.is_zero())
      pg = XPoly(pf.var);
    else
      pg = divide_coeffs(r, content_in_y(r));
  }
  pf = divide_coeffs(pf, content_in_y(pf));
  // Multiply back the shared content.
  for (auto& c : pf.c) c = c * cont;
  return BiPoly::from_x_over_y(pf).primitive_part();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
  if (a.is_zero()) return BiPoly();
  XPoly f = a.as_x_over_y("x", "y");
  XPoly g = b.as_x_over_y("x", "y");
  XPoly q(f.var);
  while (!f.is_zero() && f.degree() >= g.degree()) {
    RPoly qc = exact_div(f.lead(), g.lead());  // throws when not divisible
    XPoly t = XPoly::monomial(qc, f.degree() - g.degree(), f.var);
    q = q + t;
    f = f - t * g;
  }
  if (!f.is_zero()) throw std::domain_error("exact_div: not divisible");
  return BiPoly::from_x_over_y(q);
}

UniPoly<Rat> resultant_x(const BiPoly& a, const BiPoly& b, const std::string& yvar) {
  XPoly f = a.as_x_over_y("x_elim", yvar);
  XPoly g = b.as_x_over_y("x_elim", yvar);
  return resultant(f, g);
}

UniPoly<Rat> resultant_y(const BiPoly& a, const BiPoly& b, const std::string& xvar) {
  XPoly f = a.as_y_over_x("y_elim", xvar);
  XPoly g = b.as_y_over_x("y_elim", xvar);
  return resultant(f, g);
}

// ---------------------------------------------------------------------------
// polynomial square root
// ---------------------------------------------------------------------------

namespace {

std::optional<RPoly> sqrt_unipoly(const RPoly& p) {
  if (p.is_zero()) return RPoly(p.var);
  const int n = p.degree();
  if (n % 2 != 0) return std::nullopt;
  const int m = n / 2;
  auto lead_root = rat_sqrt(p.lead());
  if (!lead_root) return std::nullopt;
  RPoly q(p.var);
  q.c.assign(m + 1, Rat(0));
  q.c[m] = *lead_root;
  for (int k = m - 1; k >= 0; --k) {
    // p_{m+k} = 2·q_m·q_k + Σ_{i+j = m+k, k < i,j < m} q_i·q_j
    Rat s = p.coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) s -= q.c[i] * q.c[j];
    }
    q.c[k] = s / (2 * q.c[m]);
  }
  q.trim();
  if (q * q == p) return q;
  return std::nullopt;
}

}  // namespace

std::optional<BiPoly> sqrt_poly(const BiPoly& p) {
  if (p.is_zero()) return BiPoly();
  if (p.deg_x() == 0) {
    auto q = sqrt_unipoly(p.as_x_over_y("x", "y").c[0]);
    if (!q) return std::nullopt;
    BiPoly r = BiPoly::from_y_poly(*q);
    if (sgn(r.lead_gl().second) < 0) r = -r;
    return r;
  }
  XPoly f = p.as_x_over_y("x", "y");
  const int n = f.degree();
  if (n % 2 != 0) return std::nullopt;
  const int m = n / 2;
  auto lead_root = sqrt_unipoly(f.lead());
  if (!lead_root) return std::nullopt;
  XPoly q(f.var);
  q.c.assign(m + 1, RPoly("y"));
  q.c[m] = *lead_root;
  const RPoly two_qm = Rat(2) * q.c[m];
  for (int k = m - 1; k >= 0; --k) {
    RPoly s = f.coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) s = s - q.c[i] * q.c[j];
    }
    auto [quot, rem] = divmod(s, two_qm);
    if (!rem.is_zero()) return std::nullopt;
    q.c[k] = quot;
  }
  q.trim();
  BiPoly cand = BiPoly::from_x_over_y(q);
  if (!(cand * cand == p)) return std::nullopt;
  if (sgn(cand.lead_gl().second) < 0) cand = -cand;
  return cand;
}

}  // namespace exactfield

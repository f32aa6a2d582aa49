#pragma once
/**
 * @file unipoly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * `UniPoly<K>` stores coefficients in ascending degree with no trailing
 * zeros, together with the variable's display name.  Binary operations
 * require matching variable names unless one operand is constant; mixing
 * two different non-constant variables raises std::domain_error.
 *
 * Instantiations used in this project: K = Rat (ℚ), K = FieldElem
 * (quadratic extensions), K = UniPoly<Rat> (coefficients in ℚ[x], used for
 * elimination), and K = RatExpr via explicit template argument lists.
 *
 * Division-style operations (divmod, monic gcd) require K to be a field;
 * the Sylvester-matrix resultant only requires exact division, so it also
 * works for K = UniPoly<Rat> via fraction-free elimination.
 */

#include "exactfield/quad.hpp"
#include "exactfield/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactfield {

inline std::string coeff_to_string(const Rat& v) { return to_string(v); }
inline std::string coeff_to_string(const FieldElem& v) { return v.str(); }

inline Rat exact_div(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) throw std::domain_error("exact_div by zero rational");
  return a / b;
}
inline FieldElem exact_div(const FieldElem& a, const FieldElem& b) {
  return a / b;
}

template <class K>
struct UniPoly {
  std::vector<K> c;       ///< c[i] multiplies var^i; no trailing zeros
  std::string var = "t";

  UniPoly() = default;
  explicit UniPoly(std::string v) : var(std::move(v)) {}
  UniPoly(long n, std::string v = "t") : var(std::move(v)) {
    if (K(n) != K()) c.push_back(K(n));
  }
  UniPoly(const K& k, std::string v = "t") : var(std::move(v)) {
    if (!(k == K())) c.push_back(k);
  }
  UniPoly(std::vector<K> coeffs, std::string v) : c(std::move(coeffs)), var(std::move(v)) {
    trim();
  }

  static UniPoly monomial(const K& k, int deg, std::string v) {
    UniPoly p(std::move(v));
    if (!(k == K())) {
      p.c.assign(deg + 1, K());
      p.c[deg] = k;
    }
    return p;
  }
  /// The variable itself as a degree-1 polynomial.
  static UniPoly variable(std::string v) { return monomial(K(1), 1, std::move(v)); }

  void trim() {
    while (!c.empty() && c.back() == K()) c.pop_back();
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }  ///< −1 for 0
  bool is_zero() const { return c.empty(); }
  bool is_constant() const { return c.size() <= 1; }
  const K& lead() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
  }
  K coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K();
  }

  UniPoly derivative() const {
    UniPoly d(var);
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(K(long(i)) * c[i]);
    d.trim();
    return d;
  }

  /// Horner evaluation in any ring T constructible from K.
  template <class T>
  T eval(const T& x) const {
    T acc = T(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + T(c[i]);
    return acc;
  }

  std::string to_string() const {
    if (c.empty()) return "0";
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i] == K()) continue;
      std::string cs = coeff_to_string(c[i]);
      std::string term;
      if (i == 0) {
        term = cs;
      } else {
        std::string pow = (i == 1) ? var : var + "^" + std::to_string(i);
        if (cs == "1")
          term = pow;
        else if (cs == "-1")
          term = "-" + pow;
        else if (cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos)
          term = "(" + cs + ")*" + pow;
        else
          term = cs + "*" + pow;
      }
      if (out.empty())
        out = term;
      else if (!term.empty() && term[0] == '-')
        out += term;
      else
        out += "+" + term;
    }
    return out.empty() ? "0" : out;
  }
};

template <class K>
std::string coeff_to_string(const UniPoly<K>& p) {
  return "(" + p.to_string() + ")";
}

namespace detail {
template <class K>
inline std::string join_var(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_constant()) return b.var;
  if (b.is_constant()) return a.var;
  if (a.var != b.var)
    throw std::domain_error("mixed polynomial variables: " + a.var + " vs " + b.var);
  return a.var;
}
}  // namespace detail

template <class K>
bool operator==(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.c != b.c) return false;
  return a.is_constant() || b.is_constant() || a.var == b.var;
}
template <class K>
bool operator!=(const UniPoly<K>& a, const UniPoly<K>& b) {
  return !(a == b);
}

template <class K>
UniPoly<K> operator+(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r(detail::join_var(a, b));
  r.c.resize(std::max(a.c.size(), b.c.size()), K());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  r.trim();
  return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a) {
  UniPoly<K> r = a;
  for (auto& k : r.c) k = K() - k;
  return r;
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a, const UniPoly<K>& b) {
  return a + (-b);
}

template <class K>
UniPoly<K> operator*(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> r(detail::join_var(a, b));
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, K());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  r.trim();
  return r;
}

template <class K>
UniPoly<K> operator*(const K& k, const UniPoly<K>& p) {
  UniPoly<K> r(p.var);
  if (k == K()) return r;
  r.c = p.c;
  for (auto& v : r.c) v = k * v;
  r.trim();
  return r;
}

template <class K>
UniPoly<K> pow(UniPoly<K> base, int e) {
  UniPoly<K> r(K(1), base.var);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

/// Quotient and remainder over a field K; throws on division by zero.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  detail::join_var(a, b);
  UniPoly<K> q(a.is_constant() ? b.var : a.var), r = a;
  if (!r.is_constant()) q.var = r.var;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    K factor = exact_div(r.lead(), b.lead());
    int shift = r.degree() - b.degree();
    UniPoly<K> term = UniPoly<K>::monomial(factor, shift, q.var);
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

/// Exact polynomial division; throws std::domain_error when b ∤ a.
template <class K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic gcd over a field K (gcd(0,0) = 0).
template <class K>
UniPoly<K> gcd_monic(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  K inv = exact_div(K(1), a.lead());
  return inv * a;
}

/**
 * Determinant by fraction-free Bareiss elimination.  Requires only exact
 * division in K, so it works over ℚ[x] as well as over fields.
 */
template <class K>
K bareiss_det(std::vector<std::vector<K>> m) {
  const size_t n = m.size();
  if (n == 0) return K(1);
  K prev = K(1);
  int sgn_flip = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == K()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == K()) ++piv;
      if (piv == n) return K();
      std::swap(m[k], m[piv]);
      sgn_flip = -sgn_flip;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = K();
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return sgn_flip == 1 ? det : K() - det;
}

/**
 * Resultant of a and b via the Sylvester matrix.
 * Conventions: both zero → std::domain_error; exactly one zero → 0;
 * both nonzero constants → 1; constant a, deg-n b → a^n.
 */
template <class K>
K resultant(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) return K();
  detail::join_var(a, b);
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return K(1);
  if (m == 0) {
    K r = K(1);
    for (int i = 0; i < n; ++i) r = r * a.c[0];
    return r;
  }
  if (n == 0) {
    K r = K(1);
    for (int i = 0; i < m; ++i) r = r * b.c[0];
    return r;
  }
  const int N = m + n;
  std::vector<std::vector<K>> s(N, std::vector<K>(N, K()));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) s[row][row + i] = a.c[m - i];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) s[n + row][row + i] = b.c[n - i];
  return bareiss_det(std::move(s));
}

/**
 * Homogeneous Möbius substitution for p ∈ ℚ[t]: returns
 * Σ_i p_i (a·v + b)^i (c·v + d)^{M−i},  M ≥ deg p (pads with the (cv+d) factor).
 */
UniPoly<Rat> homog_subst(const UniPoly<Rat>& p, int M, const Rat& a, const Rat& b,
                         const Rat& c, const Rat& d, const std::string& newvar);

/// Content of f ∈ ℚ[t]: positive c with (1/c)·f integer and coprime; 0 for f = 0.
Rat content_rat(const UniPoly<Rat>& f);

/// Scale-normalize f over ℚ: integer coefficients, content 1, positive lead.
UniPoly<Rat> primitive_normalized(const UniPoly<Rat>& f);

/// One root of a squarefree factor, with its multiplicity in the original.
struct RootRec {
  FieldElem value;
  int multiplicity = 1;
  bool real = true;                 ///< false for roots of negative-discriminant quadratics
  std::optional<QuadMinPoly> ext;   ///< minimal polynomial when irrational
};

/// Yun squarefree decomposition: p = lead · Π f_i^i with f_i monic squarefree.
std::vector<std::pair<UniPoly<Rat>, int>> squarefree_decomposition(const UniPoly<Rat>& p);

/**
 * All roots of p ∈ ℚ[t] with multiplicity, over ℚ or quadratic extensions.
 * Throws std::domain_error when an irreducible factor of degree ≥ 3 remains.
 */
std::vector<RootRec> all_roots(const UniPoly<Rat>& p);

/// Rational roots only (with multiplicity); never throws on high-degree leftovers.
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly<Rat>& p);

/**
 * Roots of p over the ambient quadratic extension (or ℚ), for deg p ≤ 2.
 * Quadratics are solved when their coefficients are rational or their
 * discriminant is a rational square; anything else raises std::domain_error
 * ("requires an extension beyond degree 2").
 */
std::vector<FieldElem> roots_in_field(const UniPoly<FieldElem>& p);

}  // namespace exactfield

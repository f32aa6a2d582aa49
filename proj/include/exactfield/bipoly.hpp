#pragma once
/**
 * @file bipoly.hpp
 * @brief Sparse bivariate polynomials over ℚ with exact gcd, division,
 *        resultants, and polynomial square root.
 *
 * A `BiPoly` maps exponent pairs (i, j) — first variable to the power i,
 * second to the power j — to nonzero rational coefficients.  The variable
 * names are display-only: all BiPoly values in one expression are assumed
 * to share the same two variables, with positional meaning.
 *
 * Canonical normal form used by `primitive_part` and the rational-function
 * types: integer coefficients with content 1 and positive leading
 * coefficient in graded-lexicographic order (total degree first, then the
 * first variable's exponent).
 */

#include "exactfield/quad.hpp"
#include "exactfield/rational.hpp"
#include "exactfield/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace exactfield {

class BiPoly {
 public:
  using Key = std::pair<int, int>;  ///< (exponent of var 1, exponent of var 2)
  using Terms = std::map<Key, Rat>;

  BiPoly() = default;
  BiPoly(long n) { set(0, 0, Rat(n)); }
  explicit BiPoly(const Rat& r) { set(0, 0, r); }

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(const Rat& r) { return BiPoly(r); }
  /// First variable as a polynomial.
  static BiPoly X() { BiPoly p; p.set(1, 0, Rat(1)); return p; }
  /// Second variable as a polynomial.
  static BiPoly Y() { BiPoly p; p.set(0, 1, Rat(1)); return p; }
  static BiPoly term(const Rat& coeff, int i, int j) {
    BiPoly p;
    p.set(i, j, coeff);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
  }
  Rat coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
  }
  void set(int i, int j, const Rat& v) {
    if (sgn(v) == 0)
      t_.erase({i, j});
    else
      t_[{i, j}] = v;
  }

  int deg_x() const;      ///< degree in the first variable (−1 for 0)
  int deg_y() const;      ///< degree in the second variable (−1 for 0)
  int total_deg() const;  ///< max i+j (−1 for 0)
  /// Minimum total degree among terms — the vanishing order at the origin.
  int min_total_deg() const;
  /// Minimum exponent of the first / second variable among terms.
  int min_deg_x() const;
  int min_deg_y() const;

  /// Leading term in graded-lex order: largest (i+j, i).
  std::pair<Key, Rat> lead_gl() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);

  FieldElem eval(const FieldElem& x, const FieldElem& y) const;
  Rat eval(const Rat& x, const Rat& y) const;

  /// Substitute polynomials for both variables.
  BiPoly subst_poly(const BiPoly& px, const BiPoly& py) const;

  /// Substitute a value for the first variable: result in the second variable.
  UniPoly<FieldElem> eval_x(const FieldElem& x, const std::string& var) const;
  /// Substitute a value for the second variable: result in the first variable.
  UniPoly<FieldElem> eval_y(const FieldElem& y, const std::string& var) const;
  UniPoly<Rat> eval_x_rat(const Rat& x, const std::string& var) const;
  UniPoly<Rat> eval_y_rat(const Rat& y, const std::string& var) const;

  BiPoly partial_x() const;
  BiPoly partial_y() const;

  /// Divide every term by var1^k (throws if some term has exponent < k).
  BiPoly strip_x_power(int k) const;
  BiPoly strip_y_power(int k) const;

  /// View as a polynomial in the first variable with ℚ[second] coefficients.
  UniPoly<UniPoly<Rat>> as_x_over_y(const std::string& xv, const std::string& yv) const;
  /// View as a polynomial in the second variable with ℚ[first] coefficients.
  UniPoly<UniPoly<Rat>> as_y_over_x(const std::string& yv, const std::string& xv) const;
  static BiPoly from_x_over_y(const UniPoly<UniPoly<Rat>>& p);
  static BiPoly from_y_over_x(const UniPoly<UniPoly<Rat>>& p);
  /// Embed a univariate polynomial as a BiPoly in the first / second variable.
  static BiPoly from_x_poly(const UniPoly<Rat>& p);
  static BiPoly from_y_poly(const UniPoly<Rat>& p);

  /**
   * Content: the positive rational c such that (1/c)·f has coprime integer
   * coefficients; 0 for the zero polynomial.
   */
  Rat content() const;
  /// f / content, with the graded-lex leading coefficient made positive.
  BiPoly primitive_part() const;
  /// True when already equal to its primitive part.
  bool is_primitive_normalized() const;

  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  Terms t_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rat& k, const BiPoly& p);
bool operator==(const BiPoly& a, const BiPoly& b);
inline bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
BiPoly pow(BiPoly base, int e);

/// Primitive gcd with positive graded-lex lead; gcd(0,0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Exact division; throws std::domain_error when b ∤ a or b = 0.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

/**
 * Exact polynomial square root: q with q² = p, sign-normalized to positive
 * graded-lex lead; nullopt when p is not a square.  The result is verified
 * by multiplication before being returned.
 */
std::optional<BiPoly> sqrt_poly(const BiPoly& p);

/// Resultant eliminating the first variable: a polynomial in the second.
UniPoly<Rat> resultant_x(const BiPoly& a, const BiPoly& b, const std::string& yvar);
/// Resultant eliminating the second variable: a polynomial in the first.
UniPoly<Rat> resultant_y(const BiPoly& a, const BiPoly& b, const std::string& xvar);

}  // namespace exactfield

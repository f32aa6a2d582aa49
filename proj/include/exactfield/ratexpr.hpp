#pragma once
/**
 * @file ratexpr.hpp
 * @brief Canonical rational functions: bivariate (RatExpr) and univariate
 *        (UniRat).
 *
 * Canonical form shared by both types: numerator and denominator coprime,
 * denominator with coprime integer coefficients and positive leading
 * coefficient (graded-lex for two variables, top degree for one); the
 * numerator absorbs the remaining rational scale.  Two equal rational
 * functions therefore have identical representations, so `==` is structural.
 */

#include "exactfield/bipoly.hpp"
#include "exactfield/projval.hpp"
#include "exactfield/unipoly.hpp"

#include <stdexcept>
#include <string>

namespace exactfield {

/// Thrown when evaluation hits 0/0; lists the common vanishing factors.
struct IndeterminateEval : std::domain_error {
  using std::domain_error::domain_error;
};

class RatExpr {
 public:
  RatExpr() : n_(), d_(1) {}
  RatExpr(long v) : n_(v), d_(1) {}
  RatExpr(const Rat& v) : n_(v), d_(1) {}
  explicit RatExpr(const BiPoly& num) : n_(num), d_(1) { reduce(); }
  RatExpr(const BiPoly& num, const BiPoly& den) : n_(num), d_(den) { reduce(); }

  static RatExpr X() { return RatExpr(BiPoly::X()); }
  static RatExpr Y() { return RatExpr(BiPoly::Y()); }

  const BiPoly& num() const { return n_; }
  const BiPoly& den() const { return d_; }
  bool is_zero() const { return n_.is_zero(); }
  bool is_poly() const { return d_ == BiPoly(1); }

  RatExpr operator-() const;

  /// Substitute rational expressions for both variables.
  RatExpr subst(const RatExpr& fx, const RatExpr& fy) const;

  /**
   * Evaluate at an exact point, allowing poles: returns a projective value.
   * Throws IndeterminateEval when numerator and denominator both vanish.
   */
  ProjVal eval_proj(const FieldElem& x, const FieldElem& y) const;

  /// Evaluate where a finite value is required; throws on pole/indeterminate.
  FieldElem eval(const FieldElem& x, const FieldElem& y) const;

  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  void reduce();
  BiPoly n_, d_;
};

inline std::string coeff_to_string(const RatExpr& e) {
  return "(" + e.to_string() + ")";
}

RatExpr operator+(const RatExpr& a, const RatExpr& b);
RatExpr operator-(const RatExpr& a, const RatExpr& b);
RatExpr operator*(const RatExpr& a, const RatExpr& b);
RatExpr operator/(const RatExpr& a, const RatExpr& b);  ///< throws on b = 0
bool operator==(const RatExpr& a, const RatExpr& b);
inline bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

/// Univariate rational function in canonical form (see file comment).
class UniRat {
 public:
  UniRat() : n_(0, "t"), d_(1, "t") {}
  UniRat(const UniPoly<Rat>& num, const UniPoly<Rat>& den) : n_(num), d_(den) {
    reduce();
  }

  const UniPoly<Rat>& num() const { return n_; }
  const UniPoly<Rat>& den() const { return d_; }
  const std::string& var() const { return n_.var; }
  bool is_zero() const { return n_.is_zero(); }

  /// Evaluate allowing poles.  Throws IndeterminateEval on 0/0 (cannot occur
  /// in canonical form unless the argument is a pole of both — impossible).
  ProjVal eval_proj(const FieldElem& t) const;

  /**
   * Möbius substitution t = (a·v + b)/(c·v + d) (ad − bc ≠ 0), renaming the
   * variable to `newvar`.  Exact: clears denominators homogeneously.
   */
  UniRat mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                const std::string& newvar) const;

  /// Exact solution set of (this) = c, as roots of num − c·den (with multiplicity).
  std::vector<RootRec> solutions_at(const Rat& c) const;
  /// Finite poles: roots of the denominator, with multiplicity.  Behavior at
  /// ∞ is available separately through value_at_infinity().
  std::vector<RootRec> poles() const;
  /// Value at infinity: lead ratio when degrees match, 0 / ∞ otherwise.
  ProjVal value_at_infinity() const;

  std::string to_string() const;

 private:
  void reduce();
  UniPoly<Rat> n_, d_;
};

bool operator==(const UniRat& a, const UniRat& b);
inline bool operator!=(const UniRat& a, const UniRat& b) { return !(a == b); }

}  // namespace exactfield

#pragma once
/**
 * @file quad.hpp
 * @brief Quadratic extensions ℚ[α]/(α² + pα + q) and the scalar sum type.
 *
 * A `Quad` is an element a + b·α of a quadratic extension of ℚ given by a
 * monic irreducible minimal polynomial α² + p·α + q.  A `FieldElem` is the
 * scalar type used throughout: either a plain rational or a `Quad`.  Mixing
 * elements of two different extensions raises std::domain_error; a `Quad`
 * whose α-coefficient vanishes normalizes itself to the rational case.
 */

#include "exactfield/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace exactfield {

/// Monic quadratic α² + p·α + q over ℚ, assumed irreducible.
struct QuadMinPoly {
  Rat p, q;

  bool operator==(const QuadMinPoly& o) const { return p == o.p && q == o.q; }
  bool operator!=(const QuadMinPoly& o) const { return !(*this == o); }

  /// Discriminant p² − 4q of the minimal polynomial.
  Rat disc() const { return p * p - 4 * q; }
  /// +1: real quadratic field; −1: imaginary.  0 never occurs (irreducible).
  int disc_sign() const { return sign(disc()); }

  std::string to_string(const std::string& var = "a") const;
};

/// α² + pα + q is irreducible over ℚ iff p² − 4q is not a rational square.
inline bool is_irreducible_quad(const Rat& p, const Rat& q) {
  return !is_rational_square(p * p - 4 * q);
}

/// a + b·α in ℚ[α]/(α² + pα + q).
struct Quad {
  Rat a, b;
  QuadMinPoly m;

  Quad(const Rat& a_, const Rat& b_, const QuadMinPoly& m_)
      : a(a_), b(b_), m(m_) {}

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }

  /// Galois conjugate: image of α under α ↦ −p − α.
  Quad conj() const { return Quad(a - b * m.p, -b, m); }
  /// Field norm N(a + bα) = (a + bα)(a + bᾱ) = a² − a·b·p + b²·q ∈ ℚ.
  Rat norm() const { return a * a - a * b * m.p + b * b * m.q; }
  /// Trace 2a − b·p ∈ ℚ.
  Rat trace() const { return 2 * a - b * m.p; }

  std::string to_string(const std::string& var = "a") const;
};

Quad operator+(const Quad& x, const Quad& y);
Quad operator-(const Quad& x, const Quad& y);
Quad operator-(const Quad& x);
Quad operator*(const Quad& x, const Quad& y);
bool operator==(const Quad& x, const Quad& y);
/// Multiplicative inverse; throws std::domain_error on zero.
Quad inverse(const Quad& x);

/**
 * Exact scalar: a rational or an element of one quadratic extension.
 * Values with vanishing α-coefficient are stored as rationals, so equality
 * is structural.
 */
class FieldElem {
 public:
  FieldElem() : v_(Rat(0)) {}
  FieldElem(long n) : v_(Rat(n)) {}
  FieldElem(const Rat& r) : v_(r) {}
  FieldElem(const Quad& q) {
    if (q.is_rational())
      v_ = q.a;
    else
      v_ = q;
  }

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat_value() const { return std::get<Rat>(v_); }
  const Quad& quad_value() const { return std::get<Quad>(v_); }

  bool is_zero() const {
    return is_rational() ? sgn(rat_value()) == 0 : quad_value().is_zero();
  }

  /// Minimal polynomial when the value lives in an extension.
  const QuadMinPoly* min_poly() const {
    return is_rational() ? nullptr : &quad_value().m;
  }

  FieldElem conj() const;
  FieldElem inverse() const;  ///< throws std::domain_error on zero

  std::string str() const;

 private:
  std::variant<Rat, Quad> v_;
};

FieldElem operator+(const FieldElem& x, const FieldElem& y);
FieldElem operator-(const FieldElem& x, const FieldElem& y);
FieldElem operator-(const FieldElem& x);
FieldElem operator*(const FieldElem& x, const FieldElem& y);
FieldElem operator/(const FieldElem& x, const FieldElem& y);
bool operator==(const FieldElem& x, const FieldElem& y);
inline bool operator!=(const FieldElem& x, const FieldElem& y) {
  return !(x == y);
}

/// Result of solving a·t² + b·t + c = 0 exactly over ℚ.
struct QuadRoots {
  Rat disc;        ///< b² − 4ac
  int disc_sign;   ///< sign of the discriminant (+1 two real, 0 double, −1 complex pair)
  bool rational;   ///< roots lie in ℚ
  bool double_root;
  std::vector<FieldElem> roots;      ///< always two entries (equal when double)
  std::optional<QuadMinPoly> ext;    ///< extension used when !rational
};

/**
 * Solve a·t² + b·t + c = 0 (a ≠ 0, else std::domain_error) exactly.
 * When the discriminant is a rational square the two roots are rational;
 * otherwise they are α and −b/a − α in ℚ[α]/(α² + (b/a)α + (c/a)).
 */
QuadRoots solve_quadratic(const Rat& a, const Rat& b, const Rat& c);

}  // namespace exactfield

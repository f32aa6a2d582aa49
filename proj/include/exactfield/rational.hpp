#pragma once
/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP, plus small helpers.
 *
 * Every scalar in the core libraries is an element of ℚ (or of a quadratic
 * extension of ℚ, see quad.hpp).  `Rat` is an alias for `mpq_class`, which
 * keeps values in canonical form: lowest terms, positive denominator.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace exactfield {

using Rat = mpq_class;
using Int = mpz_class;

/// Build a rational n/d.  Throws std::domain_error when d == 0.
inline Rat rat(long n, long d = 1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  Rat v(n, d);
  v.canonicalize();
  return v;
}

/// Sign of a rational: -1, 0, +1.
inline int sign(const Rat& v) { return sgn(v); }

/// True when v is an integer.
inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

/// Canonical text form: "p/q" with q > 1, otherwise just "p".
inline std::string to_string(const Rat& v) { return v.get_str(); }

/**
 * Parse "p", "-p", or "p/q" (optionally signed) into a canonical rational.
 * Throws std::invalid_argument on malformed input or zero denominator.
 */
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (v.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  v.canonicalize();
  return v;
}

/// Exact square root when v is a perfect square of a rational, else nullopt.
inline std::optional<Rat> rat_sqrt(const Rat& v) {
  if (sgn(v) < 0) return std::nullopt;
  const Int& n = v.get_num();
  const Int& d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

/// True when v is the square of a rational.
inline bool is_rational_square(const Rat& v) { return rat_sqrt(v).has_value(); }

/**
 * One documented decimal conversion point: format an exact rational with
 * 15 significant digits.  This is the only place the core libraries leave
 * exact arithmetic; it is used solely when emitting SVG coordinates.
 */
std::string to_decimal15(const Rat& v);

}  // namespace exactfield

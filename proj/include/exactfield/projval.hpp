#pragma once
/**
 * @file projval.hpp
 * @brief Exact points of the projective line over ℚ or a quadratic extension.
 *
 * A `ProjVal` is a pair [n : d], normalized so that finite values are
 * [v : 1] and the point at infinity is [1 : 0].  This is the value type for
 * evaluating rational functions where poles are legitimate outputs.
 */

#include "exactfield/quad.hpp"

#include <stdexcept>
#include <string>

namespace exactfield {

class ProjVal {
 public:
  /// Finite value v = [v : 1].
  ProjVal(const FieldElem& v) : n_(v), d_(1) {}
  ProjVal(long v) : n_(v), d_(1) {}
  ProjVal(const Rat& v) : n_(FieldElem(v)), d_(1) {}
  /// General pair [n : d]; throws std::domain_error when both vanish.
  ProjVal(const FieldElem& n, const FieldElem& d) : n_(n), d_(d) { normalize(); }

  static ProjVal infinity() { return ProjVal(FieldElem(1), FieldElem(0)); }

  bool is_infinity() const { return d_.is_zero(); }
  /// The finite value; throws std::domain_error at infinity.
  const FieldElem& finite() const {
    if (is_infinity()) throw std::domain_error("finite() called on infinity");
    return n_;
  }
  const FieldElem& num() const { return n_; }
  const FieldElem& den() const { return d_; }

  bool operator==(const ProjVal& o) const {
    return n_ == o.n_ && d_ == o.d_;
  }
  bool operator!=(const ProjVal& o) const { return !(*this == o); }

  /// 1/v as a projective point (0 ↦ ∞ and ∞ ↦ 0).
  ProjVal reciprocal() const { return ProjVal(d_, n_); }

  std::string str() const { return is_infinity() ? "inf" : n_.str(); }

 private:
  void normalize() {
    if (d_.is_zero()) {
      if (n_.is_zero()) throw std::domain_error("projective point [0 : 0]");
      n_ = FieldElem(1);
    } else {
      n_ = n_ / d_;
      d_ = FieldElem(1);
    }
  }
  FieldElem n_, d_;
};

}  // namespace exactfield

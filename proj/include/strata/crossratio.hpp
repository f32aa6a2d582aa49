#pragma once
/**
 * Exact cross-ratios of projective values.  [a,b;c,d] = ((a-c)(b-d)) /
 * ((b-c)(a-d)), computed through determinant lifts so the point at infinity
 * needs no special casing.
 */
#include "exactfield/projval.hpp"
#include "exactfield/rational.hpp"

namespace strata {

struct CrossRatioValue {
  exactfield::ProjVal value;
  /// True when two of the four points coincide: the value is then forced
  /// into {0, 1, inf} and carries no moduli information.
  bool degenerate = false;
};

/**
 * [a,b;c,d].  Throws std::domain_error when three or more of the points
 * coincide (the cross-ratio is then the indeterminate 0/0).
 */
CrossRatioValue cross_ratio(const exactfield::ProjVal& a,
                            const exactfield::ProjVal& b,
                            const exactfield::ProjVal& c,
                            const exactfield::ProjVal& d);

/**
 * Image of p under [n : d] -> [a n + b d : c n + d d].  Throws
 * std::domain_error when ad - bc = 0.  Cross-ratios are invariant under this
 * action applied to all four points.
 */
exactfield::ProjVal mobius_apply(const exactfield::Rat& a,
                                 const exactfield::Rat& b,
                                 const exactfield::Rat& c,
                                 const exactfield::Rat& d,
                                 const exactfield::ProjVal& p);

}  // namespace strata

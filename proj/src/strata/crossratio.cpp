#include "strata/crossratio.hpp"

#include <stdexcept>

namespace strata {

using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::Rat;

namespace {
/// det [[p.num, q.num], [p.den, q.den]] — zero exactly when p == q.
FieldElem lift_det(const ProjVal& p, const ProjVal& q) {
  return p.num() * q.den() - q.num() * p.den();
}
}  // namespace

CrossRatioValue cross_ratio(const ProjVal& a, const ProjVal& b,
                            const ProjVal& c, const ProjVal& d) {
  const ProjVal pts[4] = {a, b, c, d};
  int largest_class = 1;
  int coincidences = 0;
  for (int i = 0; i < 4; ++i) {
    int cls = 1;
    for (int j = 0; j < 4; ++j)
      if (j != i && pts[i] == pts[j]) ++cls;
    largest_class = std::max(largest_class, cls);
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) ++coincidences;
  }
  if (largest_class >= 3)
    throw std::domain_error(
        "cross_ratio: three of the four points coincide (0/0)");
  const FieldElem num = lift_det(a, c) * lift_det(b, d);
  const FieldElem den = lift_det(b, c) * lift_det(a, d);
  return CrossRatioValue{ProjVal(num, den), coincidences > 0};
}

ProjVal mobius_apply(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                     const ProjVal& p) {
  if (a * d - b * c == 0)
    throw std::domain_error("mobius_apply: singular coefficient matrix");
  const FieldElem fa(a), fb(b), fc(c), fd(d);
  return ProjVal(fa * p.num() + fb * p.den(), fc * p.num() + fd * p.den());
}

}  // namespace strata

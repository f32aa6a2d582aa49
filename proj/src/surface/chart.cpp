#include "surface/surface.hpp"

#include <stdexcept>

namespace surface {

namespace {

using exactfield::Int;

/// |n| = s²·d with d squarefree; returns {s, d·sign(n)}.  n must be nonzero.
std::pair<Int, Int> squarefree_split(Int n) {
  const int sg = sgn(n);
  Int m = abs(n);
  Int s = 1, d = 1;
  for (Int f = 2; f * f <= m; ++f) {
    int e = 0;
    while (m % f == 0) {
      m /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= f;
    if (e % 2) d *= f;
  }
  d *= m;  // leftover prime (or 1)
  if (sg < 0) d = -d;
  return {s, d};
}

}  // namespace

std::string algebraic_key(const FieldElem& v) {
  if (v.is_rational()) return exactfield::to_string(v.rat_value());
  const auto& qv = v.quad_value();
  // Interpret the abstract root as the "+" branch: a + b·α with
  // α = (−p + √disc)/2, disc = p² − 4q, so the value is u + w·√disc.
  const Rat disc = qv.m.p * qv.m.p - 4 * qv.m.q;
  const Rat u = qv.a - qv.b * qv.m.p / 2;
  const Rat w = qv.b / 2;
  // √disc = √(num·den)/den; split num·den = s²·D with D squarefree.
  const Int N = disc.get_num() * disc.get_den();
  if (sgn(N) == 0 || sgn(w) == 0)
    return exactfield::to_string(u);  // degenerate presentation: rational
  const auto [s, D] = squarefree_split(N);
  const Rat wp = w * Rat(s) / Rat(disc.get_den());
  if (D == 1) return exactfield::to_string(u + wp);  // square disc: rational
  std::string out = exactfield::to_string(u);
  out += sgn(wp) > 0 ? "+" : "-";
  out += exactfield::to_string(abs(wp));
  out += "*sqrt(" + D.get_str() + ")";
  return out;
}

std::string proj_key(const ProjVal& v) {
  return v.is_infinity() ? std::string("inf") : algebraic_key(v.finite());
}

bool is_real_elem(const FieldElem& v) {
  if (v.is_rational()) return true;
  const auto& m = v.quad_value().m;
  return sgn(m.p * m.p - 4 * m.q) > 0;
}

std::pair<ProjVal, ProjVal> Chart::to_base(const FieldElem& px,
                                           const FieldElem& py) const {
  try {
    return {x_of.eval_proj(px, py), y_of.eval_proj(px, py)};
  } catch (const exactfield::IndeterminateEval&) {
    throw std::logic_error("chart '" + name +
                           "': base coordinates indeterminate at a point "
                           "that was not recorded as a blowup center");
  }
}

}  // namespace surface

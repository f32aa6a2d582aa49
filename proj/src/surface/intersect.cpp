#include "surface/surface.hpp"

#include <set>
#include <stdexcept>

namespace surface {

namespace {

using exactfield::all_roots;
using exactfield::gcd_monic;
using exactfield::resultant_x;
using exactfield::resultant_y;
using exactfield::roots_in_field;

struct ChartSolution {
  FieldElem x, y;
  int mult = 1;
  bool real = true;
};

/// A polynomial with no y-terms, as a univariate polynomial in x.
UniPoly<Rat> x_only(const BiPoly& f) { return f.eval_y_rat(Rat(0), "t"); }

/// A polynomial with no x-terms, as a univariate polynomial in y.
UniPoly<Rat> y_only(const BiPoly& f) { return f.eval_x_rat(Rat(0), "t"); }

/// Vanishing order of v as a root of p (0 when p(v) ≠ 0).
int order_at(UniPoly<Rat> p, const FieldElem& v) {
  int k = 0;
  while (k <= p.degree() + 1 && !p.is_zero() && p.eval(v).is_zero()) {
    ++k;
    p = p.derivative();
  }
  return k;
}

/// Distinct values with their repetition counts, order preserved.
std::vector<std::pair<FieldElem, int>> grouped(
    const std::vector<FieldElem>& vals) {
  std::vector<std::pair<FieldElem, int>> out;
  for (const auto& v : vals) {
    bool seen = false;
    for (auto& [w, n] : out)
      if (w == v) {
        ++n;
        seen = true;
        break;
      }
    if (!seen) out.emplace_back(v, 1);
  }
  return out;
}

/**
 * All common zeros of fa, fb inside one chart, with local intersection
 * multiplicities.  Exact throughout; multiplicity comes from the Jacobian
 * when the crossing is transversal and from resultant valuations at
 * tangencies (valid when the point is alone on its elimination fiber and no
 * leading coefficient drops; deeper coincidences throw rather than guess).
 */
std::vector<ChartSolution> solve_in_chart(const BiPoly& fa, const BiPoly& fb,
                                          const std::string& na,
                                          const std::string& nb,
                                          const std::string& chart) {
  std::vector<ChartSolution> out;
  const auto fail = [&](const std::string& what) -> std::logic_error {
    return std::logic_error(na + " ∩ " + nb + " in chart " + chart + ": " +
                            what);
  };

  // Both equations free of y: vertical lines, meeting only along a shared
  // component (which registered curves never have).
  if (fa.deg_y() == 0 && fb.deg_y() == 0) {
    if (gcd_monic(x_only(fa), x_only(fb)).degree() >= 1)
      throw fail("common vertical component");
    return out;
  }

  // One equation free of y: solve the other on each vertical line.  The
  // local multiplicity on (x−a)^k is k times the fiber's vanishing order.
  if (fa.deg_y() == 0 || fb.deg_y() == 0) {
    const BiPoly& vert = fa.deg_y() == 0 ? fa : fb;
    const BiPoly& other = fa.deg_y() == 0 ? fb : fa;
    for (const auto& r : all_roots(x_only(vert))) {
      const UniPoly<FieldElem> fiber = other.eval_x(r.value, "t");
      if (fiber.is_zero()) throw fail("common vertical component");
      if (fiber.degree() == 0) continue;
      for (const auto& [y0, ord] : grouped(roots_in_field(fiber)))
        out.push_back({r.value, y0, r.multiplicity * ord,
                       r.real && is_real_elem(y0)});
    }
    return out;
  }

  // Both equations free of x: horizontal lines.
  if (fa.deg_x() == 0 && fb.deg_x() == 0) {
    if (gcd_monic(y_only(fa), y_only(fb)).degree() >= 1)
      throw fail("common horizontal component");
    return out;
  }

  // One equation free of x: the mirror of the vertical case — solve the
  // other equation on each horizontal line.
  if (fa.deg_x() == 0 || fb.deg_x() == 0) {
    const BiPoly& horiz = fa.deg_x() == 0 ? fa : fb;
    const BiPoly& other = fa.deg_x() == 0 ? fb : fa;
    for (const auto& r : all_roots(y_only(horiz))) {
      const UniPoly<FieldElem> fiber = other.eval_y(r.value, "t");
      if (fiber.is_zero()) throw fail("common horizontal component");
      if (fiber.degree() == 0) continue;
      for (const auto& [x0, ord] : grouped(roots_in_field(fiber)))
        out.push_back({x0, r.value, r.multiplicity * ord,
                       r.real && is_real_elem(x0)});
    }
    return out;
  }

  // Generic case: eliminate y.
  const UniPoly<Rat> R = resultant_y(fa, fb, "x");
  if (R.is_zero()) throw fail("common component (resultant vanishes)");

  struct Raw {
    FieldElem x, y;
    int x_mult;
    bool real;
  };
  std::vector<Raw> raws;
  for (const auto& xr : all_roots(R)) {
    const UniPoly<FieldElem> fib_a = fa.eval_x(xr.value, "t");
    const UniPoly<FieldElem> fib_b = fb.eval_x(xr.value, "t");
    if (fib_a.is_zero() || fib_b.is_zero())
      throw fail("vertical line inside a registered curve");
    // A nonzero constant fiber cannot vanish: the resultant root came from
    // a leading-coefficient drop, not from a point.
    if (fib_a.degree() == 0 || fib_b.degree() == 0) continue;
    const UniPoly<FieldElem>* solvable = nullptr;
    if (fib_a.degree() <= 2)
      solvable = &fib_a;
    else if (fib_b.degree() <= 2)
      solvable = &fib_b;
    else
      throw std::domain_error(na + " ∩ " + nb + " in chart " + chart +
                              ": both fibers have degree ≥ 3; the point "
                              "would live beyond a quadratic extension");
    const UniPoly<FieldElem>& check = solvable == &fib_a ? fib_b : fib_a;
    for (const auto& [y0, ord] : grouped(roots_in_field(*solvable))) {
      (void)ord;  // local order enters through the resultant, not here
      if (!check.eval(y0).is_zero()) continue;
      raws.push_back({xr.value, y0, xr.multiplicity,
                      xr.real && is_real_elem(y0)});
    }
  }

  const BiPoly jac = fa.partial_x() * fb.partial_y() -
                     fa.partial_y() * fb.partial_x();
  const UniPoly<Rat> lcy_a = fa.as_y_over_x("y", "x").lead();
  const UniPoly<Rat> lcy_b = fb.as_y_over_x("y", "x").lead();

  for (const auto& raw : raws) {
    int mult;
    if (!jac.eval(raw.x, raw.y).is_zero()) {
      mult = 1;
    } else {
      int same_x = 0, same_y = 0;
      for (const auto& o : raws) {
        if (o.x == raw.x) ++same_x;
        if (o.y == raw.y) ++same_y;
      }
      if (same_x == 1 && !lcy_a.eval(raw.x).is_zero() &&
          !lcy_b.eval(raw.x).is_zero()) {
        // ord_x(Res_y) = sum of multiplicities over the fiber = this one.
        mult = raw.x_mult;
      } else {
        const UniPoly<Rat> Rx = resultant_x(fa, fb, "y");
        const UniPoly<Rat> lcx_a = fa.as_x_over_y("x", "y").lead();
        const UniPoly<Rat> lcx_b = fb.as_x_over_y("x", "y").lead();
        if (Rx.is_zero()) throw fail("common component (resultant vanishes)");
        if (same_y == 1 && !lcx_a.eval(raw.y).is_zero() &&
            !lcx_b.eval(raw.y).is_zero())
          mult = order_at(Rx, raw.y);
        else
          throw fail(
              "tangency outside the reach of resultant valuations "
              "(crowded fiber or leading-coefficient drop in both "
              "directions)");
      }
    }
    out.push_back({raw.x, raw.y, mult, raw.real});
  }
  return out;
}

}  // namespace

std::vector<IntersectionPoint> intersection_points(const SurfaceModel& m,
                                                   const std::string& a,
                                                   const std::string& b) {
  if (a == b)
    throw std::invalid_argument(
        "intersection points are defined for two distinct divisors");
  const DivisorRecord& da = m.divisor(a);
  const DivisorRecord& db = m.divisor(b);

  std::map<std::string, IntersectionPoint> found;
  for (const auto& ch : m.charts) {
    const BiPoly* fa = da.eq_in(ch.name);
    const BiPoly* fb = db.eq_in(ch.name);
    if (!fa || !fb) continue;
    for (const auto& s : solve_in_chart(*fa, *fb, a, b, ch.name)) {
      if (!fa->eval(s.x, s.y).is_zero() || !fb->eval(s.x, s.y).is_zero())
        throw std::logic_error("solver produced a non-vanishing point for " +
                               a + " ∩ " + b);
      const std::string key = canonical_key(m, ch, s.x, s.y);
      if (m.destroyed.count(key)) continue;
      auto it = found.find(key);
      if (it == found.end()) {
        found.emplace(key,
                      IntersectionPoint{key, ch.name, s.x, s.y, s.mult, s.real});
      } else if (it->second.mult != s.mult || it->second.real != s.real) {
        throw std::logic_error("charts disagree about " + a + " ∩ " + b +
                               " at " + key);
      }
    }
  }

  std::vector<IntersectionPoint> out;
  out.reserve(found.size());
  for (auto& [k, p] : found) out.push_back(std::move(p));
  return out;
}

std::vector<std::string> curves_through(const SurfaceModel& m, const Chart& ch,
                                        const FieldElem& px,
                                        const FieldElem& py) {
  std::vector<std::string> out;
  for (const auto& d : m.divisors) {
    const BiPoly* eq = d.eq_in(ch.name);
    if (eq && eq->eval(px, py).is_zero()) out.push_back(d.name);
  }
  return out;
}

NcReport normal_crossing_check(const SurfaceModel& m,
                               const std::vector<std::string>& fam_a,
                               const std::vector<std::string>& fam_b) {
  std::set<std::string> sa(fam_a.begin(), fam_a.end());
  std::set<std::string> sb(fam_b.begin(), fam_b.end());
  if (sa.size() != fam_a.size() || sb.size() != fam_b.size())
    throw std::invalid_argument("duplicate divisor in a family");
  for (const auto& n : fam_a)
    if (sb.count(n))
      throw std::invalid_argument("the two families must be disjoint: " + n);
  std::vector<std::string> all = fam_a;
  all.insert(all.end(), fam_b.begin(), fam_b.end());
  for (const auto& n : all) m.divisor(n);

  std::map<std::string, NcPointReport> reports;
  for (const auto& a : fam_a)
    for (const auto& b : fam_b)
      for (const auto& ip : intersection_points(m, a, b)) {
        if (reports.count(ip.key)) continue;
        const Chart& ch = m.chart(ip.chart);
        NcPointReport rep;
        rep.key = ip.key;
        rep.chart = ip.chart;
        rep.x = ip.x;
        rep.y = ip.y;
        rep.real = ip.real;
        for (const auto& n : all) {
          const BiPoly* eq = m.divisor(n).eq_in(ch.name);
          if (eq && eq->eval(ip.x, ip.y).is_zero()) rep.curves.push_back(n);
        }
        if (rep.curves.size() != 2) {
          rep.reason = std::to_string(rep.curves.size()) + " branches";
        } else {
          const BiPoly& f = *m.divisor(rep.curves[0]).eq_in(ch.name);
          const BiPoly& g = *m.divisor(rep.curves[1]).eq_in(ch.name);
          const bool f_smooth = !f.partial_x().eval(ip.x, ip.y).is_zero() ||
                                !f.partial_y().eval(ip.x, ip.y).is_zero();
          const bool g_smooth = !g.partial_x().eval(ip.x, ip.y).is_zero() ||
                                !g.partial_y().eval(ip.x, ip.y).is_zero();
          if (!f_smooth || !g_smooth) {
            rep.reason = "singular branch";
          } else {
            const BiPoly jac = f.partial_x() * g.partial_y() -
                               f.partial_y() * g.partial_x();
            if (jac.eval(ip.x, ip.y).is_zero())
              rep.reason = "tangential contact";
            else
              rep.ok = true;
          }
        }
        reports.emplace(ip.key, std::move(rep));
      }

  NcReport out;
  out.total_points = static_cast<int>(reports.size());
  for (const auto& a : fam_a) out.points_on[a] = 0;
  for (auto& [key, rep] : reports) {
    for (const auto& a : fam_a) {
      const BiPoly* eq = m.divisor(a).eq_in(rep.chart);
      if (eq && eq->eval(rep.x, rep.y).is_zero()) ++out.points_on[a];
    }
    if (!rep.ok) out.failures.push_back(rep);
    out.points.push_back(std::move(rep));
  }
  out.pass = out.failures.empty();
  return out;
}

IncidenceGraph incidence_graph(const SurfaceModel& m,
                               const std::vector<std::string>& names) {
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size())
    throw std::invalid_argument("duplicate divisor in incidence request");
  IncidenceGraph g;
  g.consistent = true;
  for (const auto& n : names)
    g.vertices.push_back({n, m.divisor(n).self_int, true, 0});
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j) {
      auto pts = intersection_points(m, names[i], names[j]);
      const int pairing = m.pairing(names[i], names[j]);
      int total = 0;
      for (const auto& p : pts) total += p.mult;
      if (total != pairing) g.consistent = false;
      if (!pts.empty() || pairing != 0) {
        g.vertices[i].boundary_count += total;
        g.vertices[j].boundary_count += total;
        g.edges.push_back({names[i], names[j], std::move(pts), total, pairing});
      }
    }
  return g;
}

std::vector<VertexManifold> boundary_manifold(
    const SurfaceModel& m, const std::vector<std::string>& names) {
  const IncidenceGraph g = incidence_graph(m, names);
  if (!g.consistent)
    throw std::logic_error(
        "incidence graph disagrees with the intersection matrix; the "
        "plumbing description would be wrong");
  std::vector<VertexManifold> out;
  out.reserve(g.vertices.size());
  for (const auto& v : g.vertices)
    out.push_back({v.name, "sphere", v.self_int, v.boundary_count});
  return out;
}

}  // namespace surface

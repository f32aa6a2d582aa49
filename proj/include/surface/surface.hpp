#pragma once
/**
 * @file surface.hpp
 * @brief Exact blowup calculus on ℙ¹×ℙ¹: chart atlases, strict and total
 *        transforms, intersection theory, normal-crossing verification,
 *        incidence graphs, and limits of the free critical value along the
 *        exceptional curves.
 *
 * The model of interest starts from ℙ¹×ℙ¹ carrying the parameter plane's
 * ten degeneracy components and the diagonal, blows up the three diagonal
 * points (0,0), (1,1), (∞,∞), and then the point q where the transform of
 * {y=∞} crosses E_inf.  Every chart carries polynomial equations over ℚ, and
 * every intersection point lives in ℚ or a quadratic extension; nothing is
 * approximated.
 *
 * Charts.  Each blowup replaces a rational chart point by two standard
 * charts: over a center (a, b) in coordinates (X, Y), the first new chart
 * has coordinates (X−a, S) with Y−b = S·(X−a), the second (W, Y−b) with
 * X−a = W·(Y−b).  Old charts stay in the atlas; the blown-up centers are
 * remembered as destroyed point keys and excluded from every query, so the
 * atlas always covers the current surface exactly.
 *
 * Point identity.  A chart point is identified across charts by a canonical
 * key: points of an exceptional curve by that curve's ℙ¹ parameter (the
 * newest such curve wins at a corner), all other points by their image in
 * base (x, y) coordinates.  Quadratic irrationals are written in a canonical
 * u + v·√D form so the same point computed through different quadratic
 * presentations gets the same key.
 */

#include "exactfield/bipoly.hpp"
#include "exactfield/projval.hpp"
#include "exactfield/ratexpr.hpp"
#include "exactfield/unipoly.hpp"
#include "family/family.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace surface {

using exactfield::BiPoly;
using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::Rat;
using exactfield::RatExpr;
using exactfield::RootRec;
using exactfield::UniPoly;
using exactfield::UniRat;

// ---------------------------------------------------------------------------
// Canonical identities for exact scalars
// ---------------------------------------------------------------------------

/**
 * Canonical display form: rationals as "p/q", quadratic irrationals as
 * "u+v*sqrt(D)" with D a squarefree integer.  Two equal values produce the
 * same string even when they were computed inside different quadratic
 * presentations of the same field.
 */
std::string algebraic_key(const FieldElem& v);

/// "inf" for the point at infinity, algebraic_key of the value otherwise.
std::string proj_key(const ProjVal& v);

/// True for rationals and elements of real quadratic extensions.
bool is_real_elem(const FieldElem& v);

// ---------------------------------------------------------------------------
// Charts and divisors
// ---------------------------------------------------------------------------

/**
 * How to read an exceptional curve's ℙ¹ parameter in one chart: the value of
 * one chart coordinate (or its reciprocal).  The parameter is the identity
 * of points on that curve across charts.
 */
struct ExcParamSpec {
  std::string curve;
  bool from_x;  ///< parameter read from the first coordinate (else second)
  bool invert;  ///< parameter is the reciprocal of that coordinate
};

struct Chart {
  std::string name;
  std::string xvar, yvar;
  /// Base (x, y) coordinates as exact rational functions of the chart pair.
  RatExpr x_of, y_of;
  std::vector<ExcParamSpec> exc_params;

  /// Push a chart point to base coordinates (∞ allowed per coordinate).
  std::pair<ProjVal, ProjVal> to_base(const FieldElem& px,
                                      const FieldElem& py) const;
};

struct DivisorRecord {
  std::string name;
  bool exceptional = false;
  int bideg_a = 0, bideg_b = 0;  ///< class on ℙ¹×ℙ¹ (base curves only)
  std::string born_at;           ///< exceptional: canonical key of its center
  /// Local equation of the strict transform per chart (units omitted).
  std::map<std::string, BiPoly> eqs;
  /// (center index, local multiplicity) for every center on the curve.
  std::vector<std::pair<int, int>> center_mults;
  int self_int = 0;
  /// Total transform of the divisor's birth class, as multiplicities of the
  /// current strict transforms (exceptional curves included).
  std::map<std::string, int> pullback;

  const BiPoly* eq_in(const std::string& chart) const;
};

struct BlowupCenter {
  int index = 0;
  std::string chart;  ///< chart in which the center was given
  Rat cx, cy;
  std::string key;  ///< canonical key (now a destroyed point)
  std::string exc;  ///< name of the exceptional curve it created
};

class SurfaceModel {
 public:
  std::vector<Chart> charts;
  std::vector<DivisorRecord> divisors;
  std::vector<BlowupCenter> centers;
  std::set<std::string> destroyed;  ///< canonical keys of blown-up points

  const Chart& chart(const std::string& name) const;
  Chart& chart_mut(const std::string& name);
  const DivisorRecord& divisor(const std::string& name) const;
  bool has_divisor(const std::string& name) const;

  /// Exact intersection number of two registered divisors (self allowed).
  int pairing(const std::string& a, const std::string& b) const;

  // internal: symmetric intersection pairing, keyed by ordered name pair
  std::map<std::pair<std::string, std::string>, int> pair_table;
};

/// ℙ¹×ℙ¹ with the ten degeneracy components and the diagonal "Vhat".
SurfaceModel base_model();

/**
 * Blow up one rational chart point.  Adds the two standard charts and the
 * exceptional divisor `exc_name` (self-intersection −1), transforms every
 * registered equation, updates multiplicities, self-intersections, the
 * pairing table, and all total-transform records.
 *
 * Errors: unknown chart (std::invalid_argument); center equal to an earlier
 * center (std::invalid_argument); center in a quadratic extension
 * (std::domain_error — chart equations stay over ℚ, so only rational centers
 * are supported; conjugate pairs would need equations over the extension).
 */
SurfaceModel blow_up(SurfaceModel model, const std::string& chart_name,
                     const FieldElem& cx, const FieldElem& cy,
                     const std::string& exc_name, const std::string& a_chart,
                     const std::string& b_chart, const std::string& a_xvar,
                     const std::string& a_yvar, const std::string& b_xvar,
                     const std::string& b_yvar);

/**
 * The four-blowup model: centers (0,0), (1,1), (∞,∞) on the diagonal, then
 * q = the point ū = 0 on E_inf (where the transform of {y=∞} crosses it).
 * Exceptional curves E_0, E_1, E_inf, E_q; charts
 *   e0_a (x, s), e0_b (w, y), e1_a (p, s), e1_b (w, t),
 *   einf_a (xb, ub), einf_b (u, yb), eq_1 (xb, s), eq_2 (w, ub).
 */
SurfaceModel standard_model();

/**
 * Canonical key of a chart point: "<curve>:<param>" on an exceptional curve
 * (newest curve first at corners), else "base:(<x>,<y>)".
 */
std::string canonical_key(const SurfaceModel& m, const Chart& ch,
                          const FieldElem& px, const FieldElem& py);

/// The ℙ¹ parameter of `curve` at a chart point lying on it.
ProjVal exc_param(const SurfaceModel& m, const Chart& ch, const FieldElem& px,
                  const FieldElem& py, const std::string& curve);

/// Proper transform (current record) and total transform of a divisor.
struct Transforms {
  DivisorRecord proper;
  std::map<std::string, int> total;
};
Transforms transforms(const SurfaceModel& m, const std::string& name);

/// Symmetric matrix of exact intersection numbers for the named divisors.
std::vector<std::vector<int>> intersection_matrix(
    const SurfaceModel& m, const std::vector<std::string>& names);

/// Intersection number of two integer combinations of divisors.
int combination_pairing(const SurfaceModel& m,
                        const std::map<std::string, int>& a,
                        const std::map<std::string, int>& b);

// ---------------------------------------------------------------------------
// Intersection points
// ---------------------------------------------------------------------------

struct IntersectionPoint {
  std::string key;    ///< canonical identity
  std::string chart;  ///< chart in which the point was recorded
  FieldElem x, y;     ///< chart coordinates there
  int mult = 1;       ///< local intersection multiplicity
  bool real = true;
};

/**
 * All intersection points of two distinct registered divisors, deduplicated
 * across charts, destroyed centers excluded.  Multiplicities are exact: a
 * nonvanishing Jacobian gives 1; tangencies fall back to the valuation of
 * the eliminating resultant (valid here whenever the point is alone on its
 * fiber and the leading coefficients survive; anything deeper throws).
 * The sum of multiplicities equals pairing(a, b) — checked by tests, not
 * assumed.
 */
std::vector<IntersectionPoint> intersection_points(const SurfaceModel& m,
                                                   const std::string& a,
                                                   const std::string& b);

/// Names of registered divisors whose chart equation vanishes at the point.
std::vector<std::string> curves_through(const SurfaceModel& m, const Chart& ch,
                                        const FieldElem& px,
                                        const FieldElem& py);

// ---------------------------------------------------------------------------
// Normal crossings
// ---------------------------------------------------------------------------

struct NcPointReport {
  std::string key;
  std::string chart;
  FieldElem x, y;
  std::vector<std::string> curves;  ///< family members through the point
  bool ok = false;
  std::string reason;  ///< failure description when !ok
  bool real = true;
};

struct NcReport {
  bool pass = false;
  int total_points = 0;
  /// Per first-family divisor: number of crossing points lying on it.
  std::map<std::string, int> points_on;
  std::vector<NcPointReport> points;
  std::vector<NcPointReport> failures;
};

/**
 * Check that every intersection point between a divisor of `fam_a` and one
 * of `fam_b` is a normal crossing: exactly two family members through the
 * point, each smooth there, with distinct tangents (nonvanishing Jacobian).
 * Families must be disjoint.  Only membership in fam_a ∪ fam_b counts
 * toward the branch count — the check asserts nothing about other curves.
 */
NcReport normal_crossing_check(const SurfaceModel& m,
                               const std::vector<std::string>& fam_a,
                               const std::vector<std::string>& fam_b);

// ---------------------------------------------------------------------------
// Incidence graphs and boundary manifolds
// ---------------------------------------------------------------------------

struct IncidenceVertex {
  std::string name;
  int self_int = 0;
  bool rational_curve = true;  ///< all registered curves are rational
  int boundary_count = 0;      ///< total multiplicity of incident edges
};

struct IncidenceEdge {
  std::string a, b;
  std::vector<IntersectionPoint> points;
  int total_mult = 0;
  int pairing = 0;  ///< matrix entry, for the consistency flag
};

struct IncidenceGraph {
  std::vector<IncidenceVertex> vertices;
  std::vector<IncidenceEdge> edges;
  /// Every pair's summed point multiplicity equals its intersection number.
  bool consistent = false;
};

IncidenceGraph incidence_graph(const SurfaceModel& m,
                               const std::vector<std::string>& names);

/**
 * Plumbing description of the boundary of a tubular neighborhood of the
 * named configuration: one vertex manifold per curve — a circle bundle over
 * the sphere with Euler number the self-intersection — glued along one torus
 * per incident crossing.
 */
struct VertexManifold {
  std::string name;
  std::string base = "sphere";
  int euler = 0;
  int boundary_tori = 0;
};
std::vector<VertexManifold> boundary_manifold(
    const SurfaceModel& m, const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Limits of the free critical value on the exceptional curves
// ---------------------------------------------------------------------------

/// A marked parameter on an exceptional curve with the curve it comes from.
struct LimitEntry {
  ProjVal param;
  std::string curve;
};

/**
 * The free critical value z, restricted to the two exceptional curves that
 * matter for limits of the marked-sphere data.
 *
 * On E_inf (parameter u, the chart coordinate with x̄ = u·ȳ): z itself has a
 * pole along E_inf, and the meaningful limit is the rescaled value ȳ·z,
 * computed symbolically and evaluated at ȳ = 0 after verifying there is no
 * pole: z_u(u) = −1/(4u(1+u)).
 *
 * On E_q two normalizations are recorded side by side, because they differ
 * and the difference is surfaced rather than hidden:
 *   - z_v(v) = −v/(4(1−v)²), the pinned published form, replayed exactly
 *     from its printed intermediate (evaluate at ū = 0, then v̄ = 1/v);
 *   - z_v_chart(v) = −v²/(4(1−v)), the direct chart restriction of z to E_q
 *     (computed as z_s_chart in the blowup slope s, then s = 1/(1−v)).
 * Both solution sets of value = 0 and value = 1 are solved exactly for each.
 */
struct ExceptionalLimits {
  UniRat z_u;  ///< −1/(4u(1+u)), variable "u"
  /// u-values where the limit configuration degenerates, with the curve met:
  /// 0 → L_xinf, −1 → Z3, −1/2 → Z4, ∞ → E_q.
  std::vector<LimitEntry> u_degenerate;
  /// All E_inf crossing parameters (u) with the curves met (includes Vhat at u=1).
  std::vector<LimitEntry> einf_punctures;

  UniRat z_v;  ///< −v/(4(1−v)²), variable "v" (pinned published form)
  /// Structural degeneracies of the v-limit: 1 → E_inf (corner), ∞ → L_yinf.
  std::vector<LimitEntry> v_degenerate;
  std::vector<RootRec> z_v_zero;     ///< z_v = 0: v = 0
  UniPoly<Rat> z_v_one_poly;         ///< z_v = 1: 4v² − 7v + 4 (primitive)
  std::vector<RootRec> z_v_one;      ///< its roots (a complex pair)

  UniRat z_s_chart;  ///< chart restriction in the blowup slope s: −(s−1)²/(4s)
  UniRat z_v_chart;  ///< the same after s = 1/(1−v): −v²/(4(1−v))
  std::vector<RootRec> z_v_chart_zero;  ///< v = 0 (multiplicity 2)
  std::vector<RootRec> z_v_chart_one;   ///< v = 2 (multiplicity 2)
  bool v_formulas_agree = false;        ///< z_v == z_v_chart (they differ)

  /// All E_q crossing parameters (v) with the curves met: 0 → Z1, 1 → E_inf,
  /// 2 → Z2, ∞ → L_yinf.
  std::vector<LimitEntry> eq_punctures;
  /// Parameters rejected by the limit maps on E_q: the non-corner punctures.
  std::vector<LimitEntry> kappa_v_degenerate;
};

ExceptionalLimits exceptional_limits(const SurfaceModel& m);

/// The E_q parameter v of a crossing, from the blowup slope s: v = (s−1)/s.
ProjVal v_of_slope(const ProjVal& s);

}  // namespace surface

#pragma once
/**
 * @file family.hpp
 * @brief The two-parameter family of degree-2 rational self-maps of ℙ¹
 *
 *     F_{x,y}(t) = (t − x)(t − r) / t²,   r = (x + y − 1)/(x − 1),
 *
 * normalized so that F(0) = ∞, F(∞) = 1, F(1) = y, F(x) = 0.  The finite
 * critical points are 0 and t_c = 2xr/(x + r); the free critical value is
 *
 *     z(x, y) = F(t_c) = −(x² − 2x − y + 1)² / (4x(x − 1)(x + y − 1)).
 *
 * This module provides the family symbolically (over ℚ(x, y)) and at exact
 * parameter values, the ten-component degeneracy locus in ℙ¹×ℙ¹ with exact
 * square certificates, parameter classification, and the puncture data on
 * the diagonal x = y.
 */

#include "exactfield/bipoly.hpp"
#include "exactfield/projval.hpp"
#include "exactfield/quad.hpp"
#include "exactfield/ratexpr.hpp"
#include "exactfield/unipoly.hpp"

#include <string>
#include <vector>

namespace family {

using exactfield::BiPoly;
using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::Rat;
using exactfield::RatExpr;
using exactfield::UniPoly;

/// A parameter in ℙ¹×ℙ¹: either coordinate may be ∞.
struct ParamPoint {
  ProjVal x, y;
  static ParamPoint affine(const Rat& x, const Rat& y) {
    return {ProjVal(FieldElem(x)), ProjVal(FieldElem(y))};
  }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/**
 * Bihomogeneous form of a curve in ℙ¹×ℙ¹ of bidegree (a, b): the affine
 * part plus implicit homogenizing exponents.  A term c·x^i·y^j stands for
 * c·X^i·W^(a−i)·Y^j·V^(b−j) where x = X/W, y = Y/V.
 */
struct BiHomPoly {
  BiPoly affine;
  int a = 0, b = 0;

  /// Exact evaluation at a point of ℙ¹×ℙ¹ (normalized representative).
  FieldElem eval(const ProjVal& px, const ProjVal& py) const;
  bool vanishes_at(const ProjVal& px, const ProjVal& py) const {
    return eval(px, py).is_zero();
  }
};

/// Bihomogenize an affine curve: a = deg_x, b = deg_y.
BiHomPoly bihomogenize(const BiPoly& f);

/// One irreducible component of the degeneracy locus.
struct LocusComponent {
  std::string name;
  bool is_line;       ///< one of the six horizontal/vertical lines
  bool at_infinity;   ///< the two lines x = ∞, y = ∞ (affine part is 1)
  BiPoly affine;      ///< affine defining polynomial (constant 1 at infinity)
  BiHomPoly bihom;
  std::pair<int, int> bidegree;
};

/// Defining polynomials of the four affine degeneracy curves.
BiPoly curve_Z1();  ///< x² − 2x − y + 1   (critical value z = 0)
BiPoly curve_Z2();  ///< x² + y − 1        (critical value z = 1)
BiPoly curve_Z3();  ///< x + y − 1         (critical value z = ∞; r = 0)
BiPoly curve_Z4();  ///< x² + 2xy − 2x − y + 1  (critical value z = y)

/**
 * The ten components of the degeneracy locus, in fixed order:
 * L_x0, L_x1, L_xinf, L_y0, L_y1, L_yinf, Z1, Z2, Z3, Z4.
 * With corrupt_z4 the stored polynomial of Z4 drops its constant term —
 * a deliberately wrong variant used to demonstrate certificate failure.
 */
const std::vector<LocusComponent>& degeneracy_components(bool corrupt_z4 = false);

/// z(x, y) as a canonical rational expression.
const RatExpr& z_expr();
/// r(x, y) = (x + y − 1)/(x − 1) as a canonical rational expression.
const RatExpr& r_expr();

/// Exact r at a parameter; throws std::domain_error when x = 1.
FieldElem r_of(const FieldElem& x, const FieldElem& y);

/**
 * Exact critical value z at a parameter (∞ allowed).  On 0/0 the error
 * message names the degeneracy components through the point.
 */
ProjVal z_of(const FieldElem& x, const FieldElem& y);

/// The family map at one parameter (or symbolically over ℚ(x, y)).
template <class K>
struct FamilyMapT {
  K x, y, r;
  UniPoly<K> num, den;  ///< F(t) = num(t)/den(t), den = t², in the variable t
};
using FamilyMap = FamilyMapT<FieldElem>;
using SymbolicFamilyMap = FamilyMapT<RatExpr>;

/**
 * Construct F at an exact parameter.  Preconditions (violations raise
 * std::domain_error with the reason): x ∉ {0, 1} and x + y − 1 ≠ 0, so that
 * the map has exact degree 2 with the required marked-point behavior.
 */
FamilyMap family_map(const FieldElem& x, const FieldElem& y);

/// The same map with symbolic coefficients in ℚ(x, y).
SymbolicFamilyMap family_map_symbolic();

/// Evaluate F at a point of ℙ¹ (poles allowed, homogeneous evaluation).
ProjVal eval_family(const FamilyMap& f, const ProjVal& t);

/// The free finite critical point t_c = 2xr/(x + r) and its value.
struct CriticalData {
  ProjVal t_c;
  ProjVal value;  ///< F(t_c)
};
CriticalData critical_data(const FamilyMap& f);

/// One named symbolic identity with its verdict and certificate text.
struct IdentityCheck {
  std::string name;
  bool pass;
  std::string witness;
};

/**
 * The marked-point and critical-point identities of the family, verified
 * symbolically over ℚ(x, y): the orbit 0 ↦ ∞ ↦ 1 ↦ y, the zero at x, the
 * finite critical points {0, t_c}, and F(t_c) = z.
 */
std::vector<IdentityCheck> verify_cycle_identities();

/// One degeneracy-locus certificate.
struct LocusCertificate {
  std::string name;
  bool pass;
  std::string detail;
};

/**
 * Exact certificates tying z to the locus components, with
 * D = 4x(x − 1)(x + y − 1):
 *   (z − 0)·D = −Z1²,  (z − 1)·D = −Z2²,  (z − y)·D = −Z4²,
 * and the pole locus of z being {x = 0} ∪ {x = 1} ∪ {Z3 = 0}.
 * Comparisons are made against the registered component polynomials, so a
 * corrupted Z4 makes the z − y certificate fail.
 */
std::vector<LocusCertificate> degeneracy_certificates(bool corrupt_z4 = false);

/// Which locus components pass through a parameter point.
struct Classification {
  bool interior;   ///< on no component
  std::vector<std::string> on_components;
};
Classification classify_parameter(const ParamPoint& p, bool corrupt_z4 = false);

/// A puncture on the diagonal x = y, cut out by the locus components.
struct Puncture {
  std::vector<std::string> sources;   ///< components vanishing there
  bool at_infinity;                   ///< the puncture x = ∞
  UniPoly<Rat> minpoly;               ///< defining polynomial in x (empty at ∞)
  bool real;                          ///< all roots real
  std::vector<FieldElem> roots;
};

/**
 * The punctures that the degeneracy locus cuts on the diagonal x = y,
 * merged by position: x = 0, x = 1, x = ∞, then one entry per curve
 * restriction Z_i(x, x).
 */
std::vector<Puncture> diagonal_punctures(bool corrupt_z4 = false);

}  // namespace family

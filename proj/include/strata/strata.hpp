#pragma once
/**
 * Boundary strata of the space of five-marked stable genus-zero
 * configurations (marks 0, 1, inf, y, z) and their behaviour under the two
 * induced maps to the four-marked space (marks 0, 1, inf, x):
 *
 *  - the forgetful map: delete the mark z, stabilize, rename y to x;
 *  - the cover map: replace the configuration by the combinatorial limits of
 *    the degree-2 covers branched over inf and z, where the mark over 0 is
 *    x, the mark over 1 is inf, the mark over y is 1, and the mark over inf
 *    is 0 (the branch point over z is unmarked).
 *
 * A stratum survives into the closure of the equalizer of the two maps only
 * if both maps degenerate onto the common limit configuration
 * {0,1}|{inf,x}; three strata are actually reached by explicit
 * one-parameter limit families (`kappa_infinity`, `kappa_q`).
 */
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactfield/projval.hpp"
#include "exactfield/ratexpr.hpp"
#include "exactfield/unipoly.hpp"
#include "strata/crossratio.hpp"
#include "strata/tree.hpp"

namespace strata {

struct StratumRecord {
  std::string name;                              ///< canonical partition name
  std::vector<std::vector<std::string>> blocks;  ///< canonical block order
  bool chain = false;                            ///< three blocks
  /// "2a".."2d" for two-block strata (position of z and inf), "chain" else.
  std::string subtype;
  std::string lower_image;              ///< forgetful image partition
  std::vector<std::string> cover_images;  ///< sorted distinct cover limits
  /// "in-equalizer", "conditional", or "excluded".
  std::string status;
  std::string reason;
};

/// The forgetful image of one stratum: delete z, stabilize, rename y -> x.
std::string lower_image(const MarkedTree& t);

/**
 * All partitions of {0,1,inf,x} (or "interior") arising as stabilized limits
 * of admissible degree-2 covers over the stratum tree.  Each component is
 * covered either by a connected double cover — branched over the critical
 * marks {inf, z} it carries plus enough incident nodes to make exactly two
 * branch points — or by two disjoint copies (which forces no critical marks
 * and no branched nodes); the covering configuration must again be a
 * connected tree.  Marks sitting on a split component may land in either
 * copy, so several limits can arise.  Sorted, duplicates removed.
 */
std::vector<std::string> cover_images(const MarkedTree& t);

/// The boundary point of the four-mark space both maps reach along the
/// equalizer: "{0,1}|{inf,x}".
const std::string& target_configuration();

/// All 25 boundary strata (10 two-block + 15 chains), sorted by name, with
/// status and images filled in.
std::vector<StratumRecord> enumerate_boundary_strata();

/// The three boundary partitions of the four-marked space, sorted.
std::vector<std::string> boundary_strata_A();

/// Independent counting oracle by direct subset enumeration (no tree
/// machinery): {two-block count, chain count} = {10, 15}.
std::pair<int, int> brute_force_counts();

/// Canonical names of the three strata reached by the limit families.
const std::string& stratum_A1();      ///< {inf,y,z}|{0,1}
const std::string& stratum_A2();      ///< {0,1,z}|{inf,y}
const std::string& stratum_corner();  ///< {0,1}|{z}|{inf,y}

// ---------------------------------------------------------------------------
// one-parameter limit families along exceptional curves
// ---------------------------------------------------------------------------

/// Data describing the five-mark configurations along one exceptional curve
/// of the compactified parameter surface (supplied by the surface geometry).
struct LimitFamily {
  /// Limit of the critical value as a function of the curve parameter.
  exactfield::UniRat value_curve;
  /// Parameters where the curve meets another boundary component, with the
  /// component name; the family is not defined there.
  std::vector<std::pair<exactfield::ProjVal, std::string>> degenerate_params;
};

struct KappaPoint {
  std::string stratum;  ///< canonical name of the boundary stratum hit
  bool has_datum = false;
  /// Modulus of the positive-dimensional component (when there is one).
  exactfield::ProjVal datum = exactfield::ProjVal(0);
  /// Limit of the critical value itself.
  exactfield::ProjVal value = exactfield::ProjVal(0);
};

/**
 * Limit configuration along the exceptional curve over the doubly-infinite
 * parameter point, at curve parameter u: the marks inf, y, z collide at
 * comparable rates and bubble onto one component, with z sitting at position
 * value_curve(u) in the coordinate where the node is 0, y is 1, and inf is
 * infinity.  Lands in stratum_A1().  Throws std::domain_error at the
 * degenerate parameters, and std::logic_error if the degeneracy list is
 * inconsistent with the value formula.
 */
KappaPoint kappa_infinity(const exactfield::ProjVal& u, const LimitFamily& fam);

/**
 * Limit configuration along the second-level exceptional curve, at curve
 * parameter v: for v != 1 the marks inf and y bubble off together and the
 * configuration lands in stratum_A2() with modulus [0,1; inf, 1/v] = 1 - v;
 * at v = 1 the mark z bubbles out on its own middle component and the
 * configuration is the corner stratum.  Throws std::domain_error at the
 * degenerate parameters.
 */
KappaPoint kappa_q(const exactfield::ProjVal& v, const LimitFamily& fam);

// ---------------------------------------------------------------------------
// the interior cross-ratio condition on the type-2c stratum
// ---------------------------------------------------------------------------

/**
 * On the stratum {0,1,y}|{inf,z} both induced maps stay interior; in the
 * coordinate where the four special points of the main component are
 * (0, 1, y = w, node = inf), the forgetful map has modulus w and the cover
 * map has modulus 1 - w.  They agree exactly at the solutions of w = 1 - w.
 */
struct Type2cCondition {
  std::string stratum;          ///< canonical name of the stratum
  exactfield::UniRat lower;     ///< forgetful modulus as a function of w
  exactfield::UniRat upper;     ///< cover modulus as a function of w
  std::vector<exactfield::RootRec> solutions;  ///< where they agree
};

Type2cCondition type_2c_condition();

}  // namespace strata

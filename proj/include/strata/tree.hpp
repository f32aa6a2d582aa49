#pragma once
/**
 * Marked trees: dual graphs of genus-zero nodal curves whose components carry
 * labeled points.  A vertex stands for a component, an edge for a node, and
 * each mark names a smooth labeled point on its component.  A configuration
 * is stable when every component carries at least three special points
 * (marks plus nodes); `stabilize` contracts the offending components.
 *
 * All stable trees appearing here have at most five marks, so they are paths
 * of at most three vertices and are determined by how the marks distribute
 * over the path (`mark_partition` / `partition_name`).
 */
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace strata {

struct MarkedTree {
  int n = 1;                                   ///< vertices are 0 .. n-1
  std::vector<std::pair<int, int>> edges;      ///< unordered pairs
  std::map<std::string, int> marks;            ///< mark label -> vertex

  int degree(int v) const;
  int mark_count(int v) const;
  /// Connected with exactly n-1 distinct edges and valid endpoints.
  bool is_tree() const;
  /// degree + marks >= 3, or the whole tree is a single vertex.
  bool vertex_stable(int v) const;
  bool stable() const;
};

/**
 * Contract unstable components until the configuration is stable: a degree-1
 * vertex with at most one mark melts into its neighbor (marks transfer), and
 * a bare degree-2 vertex drops out, fusing its two neighbors.  A one-vertex
 * tree is already stable.  Throws std::invalid_argument when the input is
 * not a tree.
 */
MarkedTree stabilize(const MarkedTree& t);

/// Fixed display order for marks: 0 < 1 < inf < x < y < z.
bool mark_less(const std::string& a, const std::string& b);

/**
 * Marks grouped by vertex along the path, each block sorted by `mark_less`.
 * One-vertex trees give a single block.  Throws std::invalid_argument for
 * trees that are not paths (cannot occur for stable trees with <= 5 marks).
 */
std::vector<std::vector<std::string>> mark_partition(const MarkedTree& t);

/**
 * Canonical display form of a partition: blocks joined with `|`, e.g.
 * "{0,1,z}|{inf,y}".  Two blocks are ordered larger first (ties resolved
 * lexicographically); the ends of a three-block chain are ordered
 * lexicographically around the fixed middle.  A single block prints as
 * "interior" — the configuration did not degenerate.
 */
std::string partition_name(std::vector<std::vector<std::string>> blocks);
std::string partition_name(const MarkedTree& t);

/// The block ordering used by `partition_name` (marks sorted within blocks,
/// blocks in canonical order).
std::vector<std::vector<std::string>> canonical_blocks(
    std::vector<std::vector<std::string>> blocks);

/// Tree with one vertex per block and consecutive blocks joined by an edge.
MarkedTree tree_from_blocks(const std::vector<std::vector<std::string>>& blocks);

}  // namespace strata

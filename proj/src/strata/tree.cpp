#include "strata/tree.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace strata {

int MarkedTree::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

int MarkedTree::mark_count(int v) const {
  int c = 0;
  for (const auto& [name, at] : marks)
    if (at == v) ++c;
  return c;
}

bool MarkedTree::is_tree() const {
  if (n <= 0) return false;
  if (static_cast<int>(edges.size()) != n - 1) return false;
  for (const auto& [a, b] : edges)
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) return false;
  for (const auto& [name, at] : marks)
    if (at < 0 || at >= n) return false;
  // Connectivity by depth-first search.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      const int w = (a == v) ? b : (b == v) ? a : -1;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool MarkedTree::vertex_stable(int v) const {
  if (n == 1) return true;
  return degree(v) + mark_count(v) >= 3;
}

bool MarkedTree::stable() const {
  for (int v = 0; v < n; ++v)
    if (!vertex_stable(v)) return false;
  return true;
}

namespace {

/// Remove vertex `v`, renumbering the rest while keeping edges and marks.
MarkedTree drop_vertex(const MarkedTree& t, int v) {
  MarkedTree out;
  out.n = t.n - 1;
  auto renum = [v](int w) { return w < v ? w : w - 1; };
  for (const auto& [a, b] : t.edges)
    if (a != v && b != v) out.edges.emplace_back(renum(a), renum(b));
  for (const auto& [name, at] : t.marks) out.marks[name] = renum(at);
  return out;
}

}  // namespace

MarkedTree stabilize(const MarkedTree& input) {
  if (!input.is_tree())
    throw std::invalid_argument("stabilize: input is not a tree");
  MarkedTree t = input;
  for (;;) {
    if (t.n == 1) return t;
    int bad = -1;
    for (int v = 0; v < t.n; ++v)
      if (!t.vertex_stable(v)) {
        bad = v;
        break;
      }
    if (bad < 0) return t;
    std::vector<int> nbrs;
    for (const auto& [a, b] : t.edges) {
      if (a == bad) nbrs.push_back(b);
      if (b == bad) nbrs.push_back(a);
    }
    if (nbrs.size() == 1) {
      // End component with at most one mark: melt into the neighbor.
      for (auto& [name, at] : t.marks)
        if (at == bad) at = nbrs[0];
      t = drop_vertex(t, bad);
    } else if (nbrs.size() == 2 && t.mark_count(bad) == 0) {
      // Bare middle component: drop it and fuse the neighbors.
      t.edges.emplace_back(nbrs[0], nbrs[1]);
      t = drop_vertex(t, bad);
    } else {
      // degree 0 with n > 1 cannot happen in a tree; degree 2 with a mark or
      // degree >= 3 is stable and never selected.
      throw std::logic_error("stabilize: unexpected unstable vertex shape");
    }
  }
}

bool mark_less(const std::string& a, const std::string& b) {
  static const std::array<std::string, 6> order{"0", "1", "inf", "x", "y", "z"};
  auto idx = [&](const std::string& m) -> int {
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] == m) return static_cast<int>(i);
    return static_cast<int>(order.size());  // unknown marks sort last, by name
  };
  const int ia = idx(a), ib = idx(b);
  if (ia != ib) return ia < ib;
  return a < b;
}

std::vector<std::vector<std::string>> mark_partition(const MarkedTree& t) {
  if (!t.is_tree()) throw std::invalid_argument("mark_partition: not a tree");
  // Order vertices along the path.
  std::vector<int> path;
  if (t.n == 1) {
    path = {0};
  } else {
    int end = -1;
    for (int v = 0; v < t.n && end < 0; ++v)
      if (t.degree(v) == 1) end = v;
    if (end < 0) throw std::invalid_argument("mark_partition: not a path");
    int prev = -1, cur = end;
    while (true) {
      path.push_back(cur);
      int next = -1;
      for (const auto& [a, b] : t.edges) {
        const int w = (a == cur) ? b : (b == cur) ? a : -1;
        if (w >= 0 && w != prev) next = w;
      }
      if (next < 0) break;
      if (t.degree(cur) > 2)
        throw std::invalid_argument("mark_partition: not a path");
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(path.size()) != t.n)
      throw std::invalid_argument("mark_partition: not a path");
  }
  std::vector<std::vector<std::string>> blocks;
  for (const int v : path) {
    std::vector<std::string> block;
    for (const auto& [name, at] : t.marks)
      if (at == v) block.push_back(name);
    std::sort(block.begin(), block.end(), mark_less);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

namespace {
std::string join_block(const std::vector<std::string>& block) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) os << ",";
    os << block[i];
  }
  os << "}";
  return os.str();
}
}  // namespace

std::vector<std::vector<std::string>> canonical_blocks(
    std::vector<std::vector<std::string>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end(), mark_less);
  if (blocks.size() == 2) {
    const bool swap_blocks =
        blocks[0].size() < blocks[1].size() ||
        (blocks[0].size() == blocks[1].size() &&
         join_block(blocks[1]) < join_block(blocks[0]));
    if (swap_blocks) std::swap(blocks[0], blocks[1]);
  } else if (blocks.size() == 3) {
    if (join_block(blocks[2]) < join_block(blocks[0]))
      std::swap(blocks[0], blocks[2]);
  } else if (blocks.size() > 3) {
    throw std::invalid_argument("canonical_blocks: more than three blocks");
  }
  return blocks;
}

std::string partition_name(std::vector<std::vector<std::string>> blocks) {
  blocks = canonical_blocks(std::move(blocks));
  if (blocks.size() == 1) return "interior";
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "|";
    out += join_block(blocks[i]);
  }
  return out;
}

std::string partition_name(const MarkedTree& t) {
  return partition_name(mark_partition(t));
}

MarkedTree tree_from_blocks(const std::vector<std::vector<std::string>>& blocks) {
  MarkedTree t;
  t.n = static_cast<int>(blocks.size());
  for (int v = 0; v + 1 < t.n; ++v) t.edges.emplace_back(v, v + 1);
  for (int v = 0; v < t.n; ++v)
    for (const auto& m : blocks[v]) t.marks[m] = v;
  return t;
}

}  // namespace strata

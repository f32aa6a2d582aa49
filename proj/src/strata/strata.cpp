#include "strata/strata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace strata {

using exactfield::all_roots;
using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::Rat;
using exactfield::RootRec;
using exactfield::UniPoly;
using exactfield::UniRat;

std::string lower_image(const MarkedTree& t) {
  MarkedTree c = t;
  c.marks.erase("z");
  MarkedTree s = stabilize(c);
  auto it = s.marks.find("y");
  if (it != s.marks.end()) {
    const int v = it->second;
    s.marks.erase(it);
    s.marks["x"] = v;
  }
  return partition_name(s);
}

std::vector<std::string> cover_images(const MarkedTree& t) {
  if (!t.is_tree())
    throw std::invalid_argument("cover_images: input is not a tree");
  const int n = t.n;
  const int ne = static_cast<int>(t.edges.size());
  // Number of critical marks (inf, z) on each component.
  std::vector<int> kcrit(n, 0);
  for (const std::string m : {"inf", "z"}) {
    auto it = t.marks.find(m);
    if (it != t.marks.end()) ++kcrit[it->second];
  }
  // The mark over 0 is x, over 1 is inf, over y is 1, over inf is 0; the
  // branch point over z carries no mark.
  static const std::map<std::string, std::string> prelabel{
      {"0", "x"}, {"1", "inf"}, {"y", "1"}, {"inf", "0"}};

  std::set<std::string> out;
  for (int types = 0; types < (1 << n); ++types) {
    const auto split = [&](int v) { return ((types >> v) & 1) != 0; };
    for (int br = 0; br < (1 << ne); ++br) {
      const auto branched = [&](int e) { return ((br >> e) & 1) != 0; };
      // Per-component branch count: a connected double cover of a component
      // needs exactly two branch points (critical marks plus branched
      // nodes); a split component allows neither.
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        int branched_at = 0;
        for (int e = 0; e < ne; ++e)
          if (branched(e) &&
              (t.edges[e].first == v || t.edges[e].second == v))
            ++branched_at;
        if (split(v))
          ok = kcrit[v] == 0 && branched_at == 0;
        else
          ok = branched_at == 2 - kcrit[v];
      }
      if (!ok) continue;

      // Build the covering configuration: one vertex per double component,
      // two per split one; a branched node has one preimage, an unbranched
      // node two.
      std::vector<int> base(n);
      int nu = 0;
      for (int v = 0; v < n; ++v) {
        base[v] = nu;
        nu += split(v) ? 2 : 1;
      }
      MarkedTree up;
      up.n = nu;
      for (int e = 0; e < ne; ++e) {
        const auto [a, b] = t.edges[e];
        if (branched(e)) {
          up.edges.emplace_back(base[a], base[b]);
        } else if (!split(a) && !split(b)) {
          // Two parallel preimage nodes: never a tree, rejected below.
          up.edges.emplace_back(base[a], base[b]);
          up.edges.emplace_back(base[a], base[b]);
        } else if (split(a) != split(b)) {
          const int d = split(a) ? base[b] : base[a];
          const int s = split(a) ? base[a] : base[b];
          up.edges.emplace_back(d, s);
          up.edges.emplace_back(d, s + 1);
        } else {
          // Both split: copy-to-copy.  The crossed matching is isomorphic
          // because the mark distribution below ranges over both copies.
          up.edges.emplace_back(base[a], base[b]);
          up.edges.emplace_back(base[a] + 1, base[b] + 1);
        }
      }
      if (!up.is_tree()) continue;

      // Fixed marks over double components; marks over a split component
      // may land in either copy.
      std::vector<std::pair<std::string, int>> choice;
      for (const auto& [bm, v] : t.marks) {
        auto pl = prelabel.find(bm);
        if (pl == prelabel.end()) continue;
        if (split(v))
          choice.emplace_back(pl->second, v);
        else
          up.marks[pl->second] = base[v];
      }
      for (int dist = 0; dist < (1 << choice.size()); ++dist) {
        MarkedTree m = up;
        for (size_t i = 0; i < choice.size(); ++i)
          m.marks[choice[i].first] = base[choice[i].second] + ((dist >> i) & 1);
        out.insert(partition_name(stabilize(m)));
      }
    }
  }
  return std::vector<std::string>(out.begin(), out.end());
}

const std::string& stratum_A1() {
  static const std::string s =
      partition_name(tree_from_blocks({{"inf", "y", "z"}, {"0", "1"}}));
  return s;
}

const std::string& stratum_A2() {
  static const std::string s =
      partition_name(tree_from_blocks({{"0", "1", "z"}, {"inf", "y"}}));
  return s;
}

const std::string& stratum_corner() {
  static const std::string s =
      partition_name(tree_from_blocks({{"0", "1"}, {"z"}, {"inf", "y"}}));
  return s;
}

const std::string& target_configuration() {
  // Both maps degenerate onto this point along the equalizer; it is the
  // forgetful image of the stratum reached by the u-limit family.
  static const std::string s =
      lower_image(tree_from_blocks({{"inf", "y", "z"}, {"0", "1"}}));
  return s;
}

std::vector<StratumRecord> enumerate_boundary_strata() {
  const std::vector<std::string> B{"0", "1", "inf", "y", "z"};
  // Tree enumeration: all stable assignments of the five marks to every
  // labeled tree on two or three vertices, deduplicated by partition.  (A
  // stable tree with five marks has at most three components.)
  std::vector<MarkedTree> shapes;
  {
    MarkedTree t2;
    t2.n = 2;
    t2.edges = {{0, 1}};
    shapes.push_back(t2);
    for (const auto& es : std::vector<std::vector<std::pair<int, int>>>{
             {{0, 1}, {1, 2}}, {{0, 1}, {0, 2}}, {{0, 2}, {1, 2}}}) {
      MarkedTree t3;
      t3.n = 3;
      t3.edges = es;
      shapes.push_back(t3);
    }
  }
  std::map<std::string, MarkedTree> found;
  for (const auto& shape : shapes) {
    int total = 1;
    for (size_t i = 0; i < B.size(); ++i) total *= shape.n;
    for (int code = 0; code < total; ++code) {
      MarkedTree t = shape;
      int c = code;
      for (const auto& m : B) {
        t.marks[m] = c % shape.n;
        c /= shape.n;
      }
      if (!t.stable()) continue;
      found.emplace(partition_name(t), t);
    }
  }

  const std::string& target = target_configuration();
  std::vector<StratumRecord> records;
  for (const auto& [name, tree] : found) {
    StratumRecord rec;
    rec.name = name;
    rec.blocks = canonical_blocks(mark_partition(tree));
    rec.chain = rec.blocks.size() == 3;
    if (rec.chain) {
      rec.subtype = "chain";
    } else {
      const auto has = [](const std::vector<std::string>& b,
                          const std::string& m) {
        return std::find(b.begin(), b.end(), m) != b.end();
      };
      const auto& zb = has(rec.blocks[0], "z") ? rec.blocks[0] : rec.blocks[1];
      if (has(zb, "inf"))
        rec.subtype = zb.size() == 3 ? "2b" : "2c";
      else
        rec.subtype = zb.size() == 3 ? "2a" : "2d";
    }
    rec.lower_image = lower_image(tree);
    rec.cover_images = cover_images(tree);
    const bool covers_target =
        std::find(rec.cover_images.begin(), rec.cover_images.end(), target) !=
        rec.cover_images.end();

    if (rec.lower_image == target && covers_target) {
      if (rec.name == stratum_A1()) {
        rec.status = "in-equalizer";
        rec.reason =
            "reached by the u-limit family; the cover matches when both "
            "marks over the split component land in one copy";
      } else if (rec.name == stratum_A2()) {
        rec.status = "in-equalizer";
        rec.reason = "reached by the v-limit family";
      } else if (rec.name == stratum_corner()) {
        rec.status = "in-equalizer";
        rec.reason = "reached by the v-limit family at parameter 1";
      } else {
        rec.status = "conditional";
        rec.reason = "both maps degenerate onto " + target +
                     ", but no limit family passes through this stratum";
      }
    } else if (rec.subtype == "2c") {
      rec.status = "conditional";
      rec.reason =
          "both maps stay interior and agree exactly at the half "
          "cross-ratio";
    } else if (rec.lower_image == target) {
      rec.status = "excluded";
      rec.reason = "the cover limits never reach " + target;
    } else {
      rec.status = "excluded";
      rec.reason = "the forgetful image " + rec.lower_image +
                   " is not the common limit configuration " + target;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<std::string> boundary_strata_A() {
  const std::vector<std::string> A{"0", "1", "inf", "x"};
  std::set<std::string> out;
  for (int mask = 1; mask < 15; ++mask) {
    std::vector<std::string> b0, b1;
    for (int i = 0; i < 4; ++i)
      (((mask >> i) & 1) ? b0 : b1).push_back(A[i]);
    if (b0.size() != 2) continue;
    out.insert(partition_name({b0, b1}));
  }
  return std::vector<std::string>(out.begin(), out.end());
}

std::pair<int, int> brute_force_counts() {
  // Direct subset enumeration over the five marks, independent of the tree
  // machinery: two-block partitions need both sides of size >= 2; a chain
  // is an unordered pair of two-mark ends around a one-mark middle.
  int two_block = 0, chains = 0;
  for (int mask = 1; mask < 31; ++mask) {
    int sz = 0;
    for (int i = 0; i < 5; ++i) sz += (mask >> i) & 1;
    if (sz == 2) ++two_block;  // counted once via the smaller side
  }
  for (int mid = 0; mid < 5; ++mid) {
    std::vector<int> rest;
    for (int i = 0; i < 5; ++i)
      if (i != mid) rest.push_back(i);
    // The end containing the smallest non-middle mark is {rest[0], partner};
    // the remaining two marks form the opposite end, so each unordered chain
    // is counted exactly once.
    for (size_t partner = 1; partner < rest.size(); ++partner) ++chains;
  }
  return {two_block, chains};
}

namespace {

ProjVal eval_curve(const UniRat& f, const ProjVal& p) {
  return p.is_infinity() ? f.value_at_infinity() : f.eval_proj(p.finite());
}

void reject_degenerate(const ProjVal& p, const LimitFamily& fam) {
  for (const auto& [bad, name] : fam.degenerate_params)
    if (bad == p)
      throw std::domain_error("limit family undefined: parameter lies on " +
                              name);
}

}  // namespace

KappaPoint kappa_infinity(const ProjVal& u, const LimitFamily& fam) {
  reject_degenerate(u, fam);
  const ProjVal val = eval_curve(fam.value_curve, u);
  // On the bubble the node is at 0, y at 1, inf at infinity and z at `val`;
  // the degenerate parameters must be exactly where these would collide.
  if (val == ProjVal(0) || val == ProjVal(1) || val.is_infinity())
    throw std::logic_error(
        "kappa_infinity: degeneracy data inconsistent with the value formula");
  KappaPoint k;
  k.stratum = stratum_A1();
  k.has_datum = true;
  k.datum = val;
  k.value = val;
  return k;
}

KappaPoint kappa_q(const ProjVal& v, const LimitFamily& fam) {
  if (v == ProjVal(1)) {
    KappaPoint k;
    k.stratum = stratum_corner();
    k.has_datum = false;
    k.value = ProjVal::infinity();  // the critical value leaves every chart
    return k;
  }
  reject_degenerate(v, fam);
  const CrossRatioValue cr =
      cross_ratio(ProjVal(0), ProjVal(1), ProjVal::infinity(), v.reciprocal());
  if (cr.degenerate)
    throw std::domain_error("limit family undefined: marks collide");
  KappaPoint k;
  k.stratum = stratum_A2();
  k.has_datum = true;
  k.datum = cr.value;
  k.value = eval_curve(fam.value_curve, v);
  return k;
}

Type2cCondition type_2c_condition() {
  // Projective lifts over the function field Q(w).
  struct Lift {
    UniPoly<Rat> n, d;
  };
  const std::string w = "w";
  const Lift zero{UniPoly<Rat>(0L, w), UniPoly<Rat>(1L, w)};
  const Lift one{UniPoly<Rat>(1L, w), UniPoly<Rat>(1L, w)};
  const Lift inf{UniPoly<Rat>(1L, w), UniPoly<Rat>(0L, w)};
  const Lift lam{UniPoly<Rat>::variable(w), UniPoly<Rat>(1L, w)};
  const auto det = [](const Lift& p, const Lift& q) {
    return p.n * q.d - q.n * p.d;
  };
  // Modulus of the point px in the coordinate sending (p0, p1, pinf) to
  // (0, 1, inf).
  const auto pos = [&](const Lift& px, const Lift& p0, const Lift& p1,
                       const Lift& pinf) {
    return UniRat(det(px, p0) * det(p1, pinf), det(p1, p0) * det(px, pinf));
  };

  Type2cCondition c{
      partition_name(tree_from_blocks({{"0", "1", "y"}, {"inf", "z"}})),
      UniRat(), UniRat(), {}};
  // Main component: 0 at 0, 1 at 1, y at w, node at infinity.
  // Forgetful map: inf lands at the node, y becomes x.
  c.lower = pos(lam, zero, one, inf);
  // Cover map: on the surviving copy x sits over 0, inf over 1, 1 over y,
  // and 0 arrives at the node from the contracted branched component.
  c.upper = pos(zero, inf, lam, one);
  const UniPoly<Rat> eq =
      c.lower.num() * c.upper.den() - c.upper.num() * c.lower.den();
  c.solutions = all_roots(eq);
  return c;
}

}  // namespace strata

/**
 * SVG rendering of the degeneracy locus and the diagonal.
 *
 * Exactly eleven path elements: the six degenerate lines, the four curve
 * components drawn from exactly verified solved forms y(x), and the diagonal
 * y = x.  All geometry is computed in exact rational arithmetic; numbers
 * enter the document through a single 15-significant-digit decimal
 * conversion at emission time.
 */
#include "cli/cli.hpp"

#include "family/family.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace cli {

namespace {

using exactfield::BiPoly;
using exactfield::FieldElem;
using exactfield::ProjVal;
using exactfield::rat;
using exactfield::Rat;
using exactfield::RatExpr;
using exactfield::to_decimal15;
using exactfield::UniPoly;
using exactfield::UniRat;

struct SolvedCurve {
  std::string name;
  UniRat y_of_x;         ///< exact solved form, verified against the registry
  std::string equation;  ///< display form for the <title>
};

std::vector<SolvedCurve> solved_curves() {
  const auto P = [](std::vector<Rat> c) {
    return UniPoly<Rat>(std::move(c), "x");
  };
  return {
      {"Z1", UniRat(P({rat(1), rat(-2), rat(1)}), P({rat(1)})), "y = (x-1)^2"},
      {"Z2", UniRat(P({rat(1), rat(0), rat(-1)}), P({rat(1)})), "y = 1-x^2"},
      {"Z3", UniRat(P({rat(1), rat(-1)}), P({rat(1)})), "y = 1-x"},
      {"Z4", UniRat(P({rat(1), rat(-2), rat(1)}), P({rat(1), rat(-2)})),
       "y = (x-1)^2/(1-2*x)"},
  };
}

/// Require f(x, y(x)) = 0 identically against the registered component.
void verify_solved_form(const SolvedCurve& c) {
  for (const auto& comp : family::degeneracy_components()) {
    if (comp.name != c.name) continue;
    const RatExpr f(comp.affine);
    const RatExpr solved(BiPoly::from_x_poly(c.y_of_x.num()),
                         BiPoly::from_x_poly(c.y_of_x.den()));
    if (!f.subst(RatExpr::X(), solved).is_zero())
      throw std::logic_error("solved form for " + c.name +
                             " does not satisfy the registered equation");
    return;
  }
  throw std::logic_error("no registered component named " + c.name);
}

using Pt = std::pair<Rat, Rat>;
using Subpaths = std::vector<std::vector<Pt>>;

/// Map window coordinates to the 800x800 viewport (y axis flipped), exactly.
struct Mapper {
  Window w;
  Rat sx(const Rat& x) const {
    Rat t = x - w.xmin;
    t *= 800;
    t /= w.xmax - w.xmin;
    return t;
  }
  Rat sy(const Rat& y) const {
    Rat t = w.ymax - y;
    t *= 800;
    t /= w.ymax - w.ymin;
    return t;
  }
};

std::string path_data(const Subpaths& subs, const Mapper& m) {
  std::ostringstream d;
  bool first_sub = true;
  for (const auto& sub : subs) {
    if (sub.size() < 2) continue;
    if (!first_sub) d << " ";
    first_sub = false;
    for (size_t i = 0; i < sub.size(); ++i)
      d << (i == 0 ? "M " : " L ") << to_decimal15(m.sx(sub[i].first)) << ","
        << to_decimal15(m.sy(sub[i].second));
  }
  return d.str();
}

std::string path_element(const std::string& cls, const std::string& title,
                         const std::string& d) {
  return "  <path class=\"" + cls + "\" d=\"" + d + "\"><title>" + title +
         "</title></path>\n";
}

bool in_window_y(const Window& w, const Rat& y) {
  return w.ymin <= y && y <= w.ymax;
}

}  // namespace

std::string render_locus_svg(const Window& w, int samples) {
  if (samples < 2)
    throw UsageError("samples must be at least 2");
  if (w.xmin >= w.xmax || w.ymin >= w.ymax)
    throw UsageError("window must satisfy xmin < xmax and ymin < ymax");

  const Mapper m{w};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg << "  <title>degeneracy locus</title>\n";
  svg << "  <desc>window [" << exactfield::to_string(w.xmin) << ", "
      << exactfield::to_string(w.xmax) << "] x ["
      << exactfield::to_string(w.ymin) << ", "
      << exactfield::to_string(w.ymax)
      << "]; exact rational coordinates converted to 15-significant-digit "
         "decimals at emission</desc>\n";
  svg << "  <style>\n"
         "    path { fill: none; }\n"
         "    .line { stroke: #c0392b; stroke-width: 1.5; }\n"
         "    .curve { stroke: #2458a6; stroke-width: 2; }\n"
         "    .diagonal { stroke: #1a7a3c; stroke-width: 1.5; "
         "stroke-dasharray: 7 5; }\n"
         "  </style>\n";

  // The six degenerate lines.  Lines at infinity are drawn on the window
  // border; finite lines outside the window contribute an empty path so the
  // set of path elements is stable.
  struct Line {
    std::string name, title;
    bool vertical, at_infinity;
    Rat c;
  };
  const std::vector<Line> lines = {
      {"L_x0", "L_x0: x = 0", true, false, rat(0)},
      {"L_x1", "L_x1: x = 1", true, false, rat(1)},
      {"L_xinf", "L_xinf: x = inf (right border)", true, true, rat(0)},
      {"L_y0", "L_y0: y = 0", false, false, rat(0)},
      {"L_y1", "L_y1: y = 1", false, false, rat(1)},
      {"L_yinf", "L_yinf: y = inf (top border)", false, true, rat(0)},
  };
  for (const auto& ln : lines) {
    Subpaths subs;
    if (ln.at_infinity) {
      if (ln.vertical)
        subs.push_back({{w.xmax, w.ymin}, {w.xmax, w.ymax}});
      else
        subs.push_back({{w.xmin, w.ymax}, {w.xmax, w.ymax}});
    } else if (ln.vertical && w.xmin <= ln.c && ln.c <= w.xmax) {
      subs.push_back({{ln.c, w.ymin}, {ln.c, w.ymax}});
    } else if (!ln.vertical && w.ymin <= ln.c && ln.c <= w.ymax) {
      subs.push_back({{w.xmin, ln.c}, {w.xmax, ln.c}});
    }
    svg << path_element("line", ln.title, path_data(subs, m));
  }

  // The four curve components, sampled from verified solved forms.  The
  // subpath breaks at window exits and at poles of the solved form; sample
  // points landing exactly on a pole are omitted.
  for (const auto& c : solved_curves()) {
    verify_solved_form(c);
    const auto poles = c.y_of_x.poles();
    Subpaths subs;
    std::vector<Pt> cur;
    bool have_prev = false;
    Rat prev_x;
    for (int i = 0; i < samples; ++i) {
      Rat x = w.xmax - w.xmin;
      x *= i;
      x /= samples - 1;
      x += w.xmin;
      bool at_pole = false, crossed_pole = false;
      for (const auto& p : poles) {
        if (!p.value.is_rational()) continue;  // unreachable by rational samples
        const Rat& px = p.value.rat_value();
        if (x == px) at_pole = true;
        if (have_prev && prev_x < px && px < x) crossed_pole = true;
      }
      if (at_pole) {
        if (!cur.empty()) subs.push_back(std::move(cur));
        cur.clear();
        have_prev = false;
        continue;
      }
      const ProjVal y = c.y_of_x.eval_proj(FieldElem(x));
      const bool visible = !y.is_infinity() &&
                           in_window_y(w, y.finite().rat_value());
      if (crossed_pole || !visible) {
        if (!cur.empty()) subs.push_back(std::move(cur));
        cur.clear();
      }
      if (visible) cur.push_back({x, y.finite().rat_value()});
      have_prev = true;
      prev_x = x;
    }
    if (!cur.empty()) subs.push_back(std::move(cur));
    svg << path_element("curve", c.name + ": " + c.equation,
                        path_data(subs, m));
  }

  // The diagonal y = x, clipped to the window.
  {
    const Rat lo = std::max(w.xmin, w.ymin);
    const Rat hi = std::min(w.xmax, w.ymax);
    Subpaths subs;
    if (lo < hi) subs.push_back({{lo, lo}, {hi, hi}});
    svg << path_element("diagonal", "diagonal: y = x", path_data(subs, m));
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cli

#include "exactfield/quad.hpp"
#include "exactfield/unipoly.hpp"

#include <algorithm>
#include <map>

namespace exactfield {

UniPoly<Rat> homog_subst(const UniPoly<Rat>& p, int M, const Rat& a, const Rat& b,
                         const Rat& c, const Rat& d, const std::string& newvar) {
  if (M < p.degree())
    throw std::domain_error("homog_subst: homogenization degree below deg p");
  UniPoly<Rat> A({b, a}, newvar);  // a·v + b
  UniPoly<Rat> C({d, c}, newvar);  // c·v + d
  std::vector<UniPoly<Rat>> apow(M + 1, UniPoly<Rat>(1, newvar));
  std::vector<UniPoly<Rat>> cpow(M + 1, UniPoly<Rat>(1, newvar));
  for (int i = 1; i <= M; ++i) {
    apow[i] = apow[i - 1] * A;
    cpow[i] = cpow[i - 1] * C;
  }
  UniPoly<Rat> out(newvar);
  for (int i = 0; i <= p.degree(); ++i) {
    const Rat pi = p.coeff(i);
    if (sgn(pi) == 0) continue;
    out = out + pi * (apow[i] * cpow[M - i]);
  }
  return out;
}

Rat content_rat(const UniPoly<Rat>& p) {
  if (p.is_zero()) return Rat(0);
  Int den_lcm(1);
  for (const auto& c : p.c)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Int num_gcd(0);
  for (const auto& c : p.c) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

UniPoly<Rat> primitive_normalized(const UniPoly<Rat>& p) {
  if (p.is_zero()) return p;
  Rat c = content_rat(p);
  if (sgn(p.lead()) < 0) c = -c;
  const Rat inv = Rat(1) / c;
  return inv * p;
}

std::vector<std::pair<UniPoly<Rat>, int>> squarefree_decomposition(const UniPoly<Rat>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly<Rat>, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm on the monic associate.
  UniPoly<Rat> f = exact_div(Rat(1), p.lead()) * p;
  UniPoly<Rat> fp = f.derivative();
  UniPoly<Rat> a = gcd_monic(f, fp);
  UniPoly<Rat> b = exact_div(f, a);
  UniPoly<Rat> c = exact_div(fp, a);
  UniPoly<Rat> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<Rat> ai = gcd_monic(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

// All positive divisors of |n| via trial division.  Loudly refuses inputs
// whose unfactored part exceeds the trial bound — exact root extraction must
// never silently miss candidates.
std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  if (n == 0) throw std::domain_error("divisors of zero requested");
  std::map<Int, int> fac;
  Int m = n;
  for (Int p = 2; p * p <= m && p < 1000000; ++p) {
    while (m % p == 0) {
      ++fac[p];
      m /= p;
    }
  }
  if (m > 1) {
    if (!mpz_probab_prime_p(m.get_mpz_t(), 30))
      throw std::domain_error("coefficient too large to factor for root search");
    ++fac[m];
  }
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    const size_t base = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly<Rat>& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<std::pair<Rat, int>> out;
  UniPoly<Rat> f = p;
  // Root at 0.
  int z = 0;
  while (!f.is_zero() && f.c[0] == 0) {
    f.c.erase(f.c.begin());
    ++z;
  }
  if (z > 0) out.emplace_back(Rat(0), z);
  if (f.degree() <= 0) return out;
  f = primitive_normalized(f);
  const Int a0 = f.c[0].get_num();
  const Int an = f.lead().get_num();
  std::vector<Int> ps = positive_divisors(a0);
  std::vector<Int> qs = positive_divisors(an);
  std::vector<Rat> cands;
  for (const Int& pi : ps)
    for (const Int& qi : qs) {
      Rat r(pi, qi);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Rat& r : cands) {
    if (f.degree() <= 0) break;
    int mult = 0;
    while (f.degree() > 0 && f.eval(r) == 0) {
      UniPoly<Rat> lin({-r, Rat(1)}, f.var);  // t − r
      f = exact_div(f, lin);
      ++mult;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Split a squarefree quartic with no rational roots into two rational
// quadratics, if possible.  Enumerates integer divisor pairs for the outer
// coefficients and solves the remaining linear system exactly.
std::optional<std::pair<UniPoly<Rat>, UniPoly<Rat>>> split_quartic(
    const UniPoly<Rat>& g) {
  const UniPoly<Rat> f = primitive_normalized(g);
  const Int g4 = f.c[4].get_num(), g0 = f.c[0].get_num();
  const Rat g3 = f.c[3], g2 = f.c[2], g1 = f.c[1];
  for (const Int& a : positive_divisors(g4)) {
    const Rat ar(a), dr(g4 / a);
    for (const Int& cpos : positive_divisors(g0))
      for (int csign = -1; csign <= 1; csign += 2) {
        const Rat cr = Rat(csign) * Rat(cpos);
        const Rat fr = Rat(g0) / cr;
        // Unknown middle coefficients b, e:  d·b + a·e = g3,  f·b + c·e = g1.
        const Rat det = dr * cr - ar * fr;
        if (sgn(det) == 0) continue;
        const Rat br = (g3 * cr - ar * g1) / det;
        const Rat er = (dr * g1 - g3 * fr) / det;
        if (ar * fr + br * er + cr * dr != g2) continue;
        UniPoly<Rat> p1({cr, br, ar}, f.var);
        UniPoly<Rat> p2({fr, er, dr}, f.var);
        if (p1 * p2 == f) return std::make_pair(p1, p2);
      }
  }
  return std::nullopt;
}

}  // namespace

std::vector<RootRec> all_roots(const UniPoly<Rat>& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<RootRec> out;
  auto push_quadratic_roots = [&out](const UniPoly<Rat>& g, int mult) {
    QuadRoots qr = solve_quadratic(g.c[2], g.c[1], g.c[0]);
    for (const auto& root : qr.roots)
      out.push_back(RootRec{root, mult, qr.disc_sign >= 0, qr.ext});
  };
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    UniPoly<Rat> g = f;
    for (const auto& [r, k] : rational_roots(f)) {
      (void)k;  // squarefree ⇒ k = 1
      out.push_back(RootRec{FieldElem(r), mult, true, std::nullopt});
      g = exact_div(g, UniPoly<Rat>({-r, Rat(1)}, g.var));
    }
    if (g.degree() == 0) continue;
    if (g.degree() == 2) {
      push_quadratic_roots(g, mult);
      continue;
    }
    if (g.degree() == 4) {
      if (auto parts = split_quartic(g)) {
        push_quadratic_roots(parts->first, mult);
        push_quadratic_roots(parts->second, mult);
        continue;
      }
    }
    throw std::domain_error(
        "irreducible factor of degree >= 3: roots beyond quadratic extensions");
  }
  return out;
}

std::vector<FieldElem> roots_in_field(const UniPoly<FieldElem>& p) {
  if (p.is_zero())
    throw std::domain_error("roots of the identically zero polynomial");
  if (p.degree() == 0) return {};
  if (p.degree() == 1) return {(-p.c[0]) / p.c[1]};
  if (p.degree() == 2) {
    const FieldElem &a = p.c[2], &b = p.c[1], &c = p.c[0];
    if (a.is_rational() && b.is_rational() && c.is_rational()) {
      QuadRoots qr = solve_quadratic(a.rat_value(), b.rat_value(), c.rat_value());
      return qr.roots;
    }
    FieldElem disc = b * b - FieldElem(4) * a * c;
    if (disc.is_rational()) {
      if (auto s = rat_sqrt(disc.rat_value())) {
        const FieldElem sq(*s);
        const FieldElem two_a = FieldElem(2) * a;
        return {(-b + sq) / two_a, (-b - sq) / two_a};
      }
    }
    throw std::domain_error(
        "quadratic over an extension field requires an extension beyond degree 2");
  }
  throw std::domain_error("roots_in_field supports degree <= 2 only");
}

}  // namespace exactfield

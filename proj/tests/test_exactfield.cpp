// Unit tests for the exact-arithmetic kernel: rationals, quadratic
// extensions, univariate/bivariate polynomials, and rational functions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exactfield/bipoly.hpp"
#include "exactfield/projval.hpp"
#include "exactfield/quad.hpp"
#include "exactfield/ratexpr.hpp"
#include "exactfield/rational.hpp"
#include "exactfield/unipoly.hpp"

#include <random>

using namespace exactfield;

namespace {

std::mt19937 rng(20240817);

Rat random_rat(int num_range = 20, int den_range = 6) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return rat(num(rng), den(rng));
}

UniPoly<Rat> random_unipoly(int max_deg, const std::string& var = "t") {
  std::uniform_int_distribution<int> degd(0, max_deg);
  const int d = degd(rng);
  UniPoly<Rat> p(var);
  p.c.assign(d + 1, Rat(0));
  for (int i = 0; i <= d; ++i) p.c[i] = random_rat();
  p.trim();
  return p;
}

BiPoly random_bipoly(int max_deg_each) {
  std::uniform_int_distribution<int> degd(0, max_deg_each);
  BiPoly p;
  const int dx = degd(rng), dy = degd(rng);
  for (int i = 0; i <= dx; ++i)
    for (int j = 0; j <= dy; ++j)
      if (std::uniform_int_distribution<int>(0, 2)(rng) != 0)
        p.set(i, j, random_rat(9, 3));
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  CHECK(rat_from_string("22/7") == rat(22, 7));
  CHECK(rat_from_string("-5") == rat(-5));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);

  CHECK(rat_sqrt(rat(9, 4)) == rat(3, 2));
  CHECK(rat_sqrt(rat(0)) == rat(0));
  CHECK(!rat_sqrt(rat(2)).has_value());
  CHECK(!rat_sqrt(rat(-4)).has_value());
  CHECK(is_rational_square(rat(49)));
  CHECK(!is_rational_square(rat(50)));

  CHECK(to_decimal15(rat(1, 5)) == "0.2");
  CHECK(to_decimal15(rat(1, 3)) == "0.333333333333333");
  CHECK(to_decimal15(rat(-7, 2)) == "-3.5");
  // Deterministic: same value, same string.
  CHECK(to_decimal15(rat(1, 3)) == to_decimal15(rat(2, 6)));
}

TEST_CASE("quadratic extension arithmetic") {
  // ℚ[α]/(α² − 3α + 1): α² = 3α − 1.
  QuadMinPoly m{rat(-3), rat(1)};
  CHECK(is_irreducible_quad(m.p, m.q));
  CHECK(m.disc() == rat(5));
  CHECK(m.disc_sign() == 1);

  Quad alpha(rat(0), rat(1), m);
  Quad asq = alpha * alpha;
  CHECK(asq == Quad(rat(-1), rat(3), m));  // 3α − 1

  CHECK(alpha.norm() == rat(1));   // α·(3−α) = 3α − α² = 1
  CHECK(alpha.trace() == rat(3));
  CHECK(alpha.conj() == Quad(rat(3), rat(-1), m));

  Quad inv = inverse(alpha);
  CHECK(alpha * inv == Quad(rat(1), rat(0), m));

  Quad v(rat(2, 3), rat(-5), m);
  CHECK(v * inverse(v) == Quad(rat(1), rat(0), m));
  CHECK(v + (-v) == Quad(rat(0), rat(0), m));
  CHECK_THROWS_AS(inverse(Quad(rat(0), rat(0), m)), std::domain_error);

  // Norm is multiplicative.
  Quad w(rat(1, 2), rat(4), m);
  CHECK((v * w).norm() == v.norm() * w.norm());

  // Imaginary extension: α² + 1.
  QuadMinPoly mi{rat(0), rat(1)};
  CHECK(mi.disc_sign() == -1);
  Quad i(rat(0), rat(1), mi);
  CHECK(i * i == Quad(rat(-1), rat(0), mi));

  CHECK(!is_irreducible_quad(rat(0), rat(-4)));  // α² − 4 = (α−2)(α+2)
}

TEST_CASE("field element sum type") {
  QuadMinPoly m{rat(-3), rat(1)};
  QuadMinPoly m2{rat(0), rat(-2)};
  FieldElem a(Quad(rat(1), rat(2), m));
  FieldElem b(rat(5, 7));
  FieldElem c(Quad(rat(4), rat(0), m));  // normalizes to the rational 4

  CHECK(c.is_rational());
  CHECK(c == FieldElem(4));

  CHECK((a + b) - b == a);
  CHECK(a * a.inverse() == FieldElem(1));
  CHECK((a - a).is_zero());

  FieldElem other(Quad(rat(0), rat(1), m2));
  CHECK_THROWS_AS(a + other, std::domain_error);
  CHECK(a != other);  // structural inequality across extensions, no throw

  // Mixed rational/extension arithmetic promotes the rational.
  CHECK(FieldElem(2) * a == a + a);
  CHECK_THROWS_AS(FieldElem(0).inverse(), std::domain_error);
}

TEST_CASE("solve_quadratic") {
  SUBCASE("rational roots") {
    QuadRoots r = solve_quadratic(rat(1), rat(-3), rat(2));
    CHECK(r.rational);
    CHECK(r.disc == rat(1));
    CHECK(!r.double_root);
    CHECK(((r.roots[0] == FieldElem(2) && r.roots[1] == FieldElem(1)) ||
           (r.roots[0] == FieldElem(1) && r.roots[1] == FieldElem(2))));
  }
  SUBCASE("double root") {
    QuadRoots r = solve_quadratic(rat(4), rat(-4), rat(1));
    CHECK(r.rational);
    CHECK(r.double_root);
    CHECK(r.roots[0] == FieldElem(rat(1, 2)));
    CHECK(r.disc_sign == 0);
  }
  SUBCASE("real irrational roots") {
    QuadRoots r = solve_quadratic(rat(1), rat(0), rat(-2));
    CHECK(!r.rational);
    CHECK(r.disc_sign == 1);
    REQUIRE(r.ext.has_value());
    CHECK(r.ext->p == rat(0));
    CHECK(r.ext->q == rat(-2));
    // Both roots satisfy t² − 2 = 0.
    for (const auto& root : r.roots) CHECK((root * root) == FieldElem(2));
    CHECK(r.roots[0] + r.roots[1] == FieldElem(0));  // −p/a
    CHECK(r.roots[0] * r.roots[1] == FieldElem(-2)); // q/a
  }
  SUBCASE("complex pair") {
    QuadRoots r = solve_quadratic(rat(1), rat(2), rat(5));
    CHECK(r.disc_sign == -1);
    CHECK(!r.rational);
    for (const auto& root : r.roots)
      CHECK(root * root + FieldElem(2) * root + FieldElem(5) == FieldElem(0));
  }
  SUBCASE("Vieta for random inputs") {
    for (int k = 0; k < 200; ++k) {
      Rat a = random_rat(8, 3);
      if (sgn(a) == 0) a = rat(1);
      const Rat b = random_rat(8, 3), c = random_rat(8, 3);
      QuadRoots r = solve_quadratic(a, b, c);
      CHECK(r.roots[0] + r.roots[1] == FieldElem(-b / a));
      CHECK(r.roots[0] * r.roots[1] == FieldElem(c / a));
    }
  }
  CHECK_THROWS_AS(solve_quadratic(rat(0), rat(1), rat(1)), std::domain_error);
}

TEST_CASE("univariate polynomial basics") {
  UniPoly<Rat> p({rat(1), rat(-3), rat(1)}, "t");  // t² − 3t + 1... coeffs ascending
  CHECK(p.degree() == 2);
  CHECK(p.eval(rat(2)) == rat(-1));
  CHECK(p.to_string() == "t^2-3*t+1");

  UniPoly<Rat> q = UniPoly<Rat>::variable("t") - UniPoly<Rat>(1, "t");
  CHECK(q.to_string() == "t-1");
  CHECK((p * q).degree() == 3);
  CHECK(p * q == q * p);

  UniPoly<Rat> zero("t");
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK((p + (-p)).is_zero());

  CHECK(p.derivative().to_string() == "2*t-3");

  UniPoly<Rat> u = UniPoly<Rat>::variable("u");
  CHECK_THROWS_AS(p + u, std::domain_error);
  CHECK_NOTHROW(p + UniPoly<Rat>(5, "u"));  // constants carry no variable
}

TEST_CASE("divmod properties") {
  for (int k = 0; k < 1000; ++k) {
    UniPoly<Rat> a = random_unipoly(6);
    UniPoly<Rat> b = random_unipoly(4);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(a == q * b + r);
    CHECK(r.degree() < b.degree());
  }
  UniPoly<Rat> a = random_unipoly(3);
  CHECK_THROWS_AS(divmod(a, UniPoly<Rat>("t")), std::domain_error);
}

TEST_CASE("gcd and exact division") {
  UniPoly<Rat> t = UniPoly<Rat>::variable("t");
  UniPoly<Rat> f = (t - UniPoly<Rat>(1, "t")) * (t - UniPoly<Rat>(2, "t"));
  UniPoly<Rat> g = (t - UniPoly<Rat>(2, "t")) * (t - UniPoly<Rat>(3, "t"));
  UniPoly<Rat> d = gcd_monic(f, g);
  CHECK(d.to_string() == "t-2");
  CHECK(exact_div(f, d) * d == f);
  CHECK_THROWS_AS(exact_div(f, g), std::domain_error);

  // gcd of coprime polynomials is 1.
  UniPoly<Rat> h = gcd_monic(f, t);
  CHECK(h.to_string() == "1");
}

TEST_CASE("resultants") {
  UniPoly<Rat> t = UniPoly<Rat>::variable("t");
  // Res(t − a, t − b) = a − b.
  UniPoly<Rat> f = t - UniPoly<Rat>(5, "t");
  UniPoly<Rat> g = t - UniPoly<Rat>(2, "t");
  CHECK(resultant(f, g) == rat(3));

  // Resultant vanishes exactly when a common factor exists.
  for (int k = 0; k < 300; ++k) {
    UniPoly<Rat> a = random_unipoly(3);
    UniPoly<Rat> b = random_unipoly(3);
    if (a.is_zero() || b.is_zero()) continue;
    const Rat res = resultant(a, b);
    const bool common = gcd_monic(a, b).degree() > 0;
    CHECK((res == 0) == common);
  }

  // Shared factor forces zero.
  UniPoly<Rat> shared = t * t - UniPoly<Rat>(7, "t");
  CHECK(resultant(shared * f, shared * g) == 0);

  CHECK_THROWS_AS(resultant(UniPoly<Rat>("t"), UniPoly<Rat>("t")), std::domain_error);
  CHECK(resultant(UniPoly<Rat>("t"), f) == 0);
  CHECK(resultant(UniPoly<Rat>(4, "t"), g) == rat(4));  // a^deg(g)
}

TEST_CASE("homogeneous substitution") {
  // p(t) = t² + 1 under t = (v+1)/(v−1), degree 2: (v+1)² + (v−1)² = 2v² + 2.
  UniPoly<Rat> p({rat(1), rat(0), rat(1)}, "t");
  UniPoly<Rat> s = homog_subst(p, 2, rat(1), rat(1), rat(1), rat(-1), "v");
  CHECK(s == UniPoly<Rat>({rat(2), rat(0), rat(2)}, "v"));
}

TEST_CASE("bivariate polynomial basics") {
  BiPoly x = BiPoly::X(), y = BiPoly::Y();
  BiPoly f = x * x - y * y;
  BiPoly g = x - y;
  CHECK(f.deg_x() == 2);
  CHECK(f.deg_y() == 2);
  CHECK(f.total_deg() == 2);
  CHECK(f.eval(rat(3), rat(2)) == rat(5));
  CHECK(f.to_string() == "x^2-y^2");

  CHECK(exact_div(f, g) == x + y);
  CHECK_THROWS_AS(exact_div(f, x + BiPoly(1)), std::domain_error);

  BiPoly h = gcd(f, g * g);
  CHECK(h == g);  // primitive, positive graded-lex lead

  // Content and primitive part.
  BiPoly k = rat(4, 6) * (x * y + BiPoly(2));
  CHECK(k.content() == rat(2, 3));
  CHECK(k.primitive_part() == x * y + BiPoly(2));
  CHECK((-g).primitive_part() == g);  // sign normalized
  CHECK((-(x * y)).primitive_part() == x * y);

  // Substitution.
  BiPoly sub = f.subst_poly(x + y, x - y);  // (x+y)² − (x−y)² = 4xy
  CHECK(sub == rat(4) * (x * y));

  // Partial derivatives.
  CHECK(f.partial_x() == rat(2) * x);
  CHECK(f.partial_y() == rat(-2) * y);

  // Graded-lex leading term: x² beats y² at equal total degree.
  auto [lk, lv] = f.lead_gl();
  CHECK(lk == BiPoly::Key{2, 0});
  CHECK(lv == rat(1));

  // Vanishing order at the origin.
  CHECK((x * y + x * x * y).min_total_deg() == 2);
  CHECK(f.strip_x_power(0) == f);
  CHECK((x * y).strip_x_power(1) == y);
  CHECK_THROWS_AS(f.strip_x_power(1), std::domain_error);
}

TEST_CASE("bivariate gcd stress") {
  for (int k = 0; k < 60; ++k) {
    BiPoly a = random_bipoly(2), b = random_bipoly(2), c = random_bipoly(1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    BiPoly g = gcd(a * c, b * c);
    // c divides the gcd; the gcd divides both products.
    CHECK_NOTHROW(exact_div(g, gcd(g, c.primitive_part())));
    CHECK_NOTHROW(exact_div(a * c, g));
    CHECK_NOTHROW(exact_div(b * c, g));
    CHECK(g.is_primitive_normalized());
  }
}

TEST_CASE("bivariate resultants") {
  BiPoly x = BiPoly::X(), y = BiPoly::Y();
  // Eliminating y from y − (x−1)² and y − x leaves x² − 3x + 1.
  BiPoly f = y - (x - BiPoly(1)) * (x - BiPoly(1));
  BiPoly g = y - x;
  UniPoly<Rat> r = resultant_y(f, g, "x");
  CHECK(r == UniPoly<Rat>({rat(1), rat(-3), rat(1)}, "x"));

  // Eliminating x from the same pair gives y² − 3y + 1.
  UniPoly<Rat> rx = resultant_x(f, g, "y");
  CHECK(primitive_normalized(rx) == UniPoly<Rat>({rat(1), rat(-3), rat(1)}, "y"));
}

TEST_CASE("polynomial square root round trips") {
  BiPoly x = BiPoly::X(), y = BiPoly::Y();
  // Fixed example.
  BiPoly s = x * y - x + BiPoly(2);
  auto r = sqrt_poly(s * s);
  REQUIRE(r.has_value());
  CHECK(*r * *r == s * s);

  // Non-squares are rejected.
  CHECK(!sqrt_poly(x).has_value());
  CHECK(!sqrt_poly(x * x + BiPoly(1)).has_value());
  CHECK(!sqrt_poly(x * x * y).has_value());
  CHECK(sqrt_poly(BiPoly()).has_value());  // 0 = 0²
  CHECK(sqrt_poly(BiPoly(rat(9, 4))) == BiPoly(rat(3, 2)));

  int done = 0;
  while (done < 200) {
    BiPoly q = random_bipoly(3);
    if (q.is_zero()) continue;
    auto root = sqrt_poly(q * q);
    REQUIRE(root.has_value());
    CHECK(*root * *root == q * q);
    // Result is sign-normalized: positive graded-lex lead.
    CHECK(sgn(root->lead_gl().second) > 0);
    ++done;
  }
}

TEST_CASE("rational expressions are canonical") {
  RatExpr x = RatExpr::X(), y = RatExpr::Y();
  RatExpr f = (x * x - y * y) / (x - y);
  CHECK(f == x + y);  // reduced structurally

  // Denominator normalization: integer, coprime, positive lead.
  RatExpr g = x / (RatExpr(rat(-1, 2)) * y);
  CHECK(g.den() == BiPoly::Y());
  CHECK(g.num() == rat(-2) * BiPoly::X());

  CHECK((f - f).is_zero());
  CHECK(f * RatExpr(1) == f);
  CHECK_THROWS_AS(f / RatExpr(), std::domain_error);

  // Field identities on random samples.
  for (int k = 0; k < 100; ++k) {
    // The +100 keeps the random denominators away from zero (coefficients
    // are bounded by 9 in magnitude).
    RatExpr a(random_bipoly(2), random_bipoly(1) + BiPoly(100));
    RatExpr b(random_bipoly(2), random_bipoly(1) + BiPoly(100));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("rational expression substitution and evaluation") {
  RatExpr x = RatExpr::X(), y = RatExpr::Y();
  RatExpr f = x / y;
  CHECK(f.subst(y, x) == y / x);

  ProjVal v = f.eval_proj(FieldElem(1), FieldElem(0));
  CHECK(v.is_infinity());
  CHECK(f.eval_proj(FieldElem(6), FieldElem(2)).finite() == FieldElem(3));
  CHECK_THROWS_AS(f.eval_proj(FieldElem(0), FieldElem(0)), IndeterminateEval);
  CHECK_THROWS_AS(f.eval(FieldElem(1), FieldElem(0)), std::domain_error);

  // Substitution that kills the denominator identically.
  RatExpr g = x / (x - y);
  CHECK_THROWS_AS(g.subst(y, y), std::domain_error);
}

TEST_CASE("univariate rational functions") {
  UniPoly<Rat> vnum({rat(-1)}, "u");
  UniPoly<Rat> vden({rat(0), rat(4), rat(4)}, "u");  // 4u + 4u²
  UniRat f(vnum, vden);
  CHECK(f.num() == UniPoly<Rat>({rat(-1, 4)}, "u"));
  CHECK(f.den() == UniPoly<Rat>({rat(0), rat(1), rat(1)}, "u"));
  CHECK(f.eval_proj(FieldElem(1)).finite() == FieldElem(rat(-1, 8)));
  CHECK(f.eval_proj(FieldElem(0)).is_infinity());
  CHECK(f.value_at_infinity() == ProjVal(FieldElem(0)));

  auto at_quarter_neg = f.solutions_at(rat(-1, 8));  // −1/(4u(1+u)) = −1/8 at u = 1, −2
  REQUIRE(at_quarter_neg.size() == 2);

  auto poles = f.poles();
  REQUIRE(poles.size() == 2);
  CHECK(poles[0].value * poles[1].value == FieldElem(0));

  // Möbius substitution round trip: u = 1/w then w = 1/u.
  UniRat g = f.mobius(rat(0), rat(1), rat(1), rat(0), "w");
  UniRat back = g.mobius(rat(0), rat(1), rat(1), rat(0), "u");
  CHECK(back == f);
  CHECK_THROWS_AS(f.mobius(rat(1), rat(1), rat(1), rat(1), "w"), std::domain_error);
}

TEST_CASE("root extraction with multiplicity") {
  UniPoly<Rat> t = UniPoly<Rat>::variable("t");
  UniPoly<Rat> one(1, "t");
  UniPoly<Rat> p = (t - one) * (t - one) * (t * t - UniPoly<Rat>(5, "t")) *
                   (t * t + one);
  auto roots = all_roots(p);
  int rational_count = 0, real_irrational = 0, complex_count = 0;
  for (const auto& r : roots) {
    if (r.value.is_rational()) {
      ++rational_count;
      CHECK(r.value == FieldElem(1));
      CHECK(r.multiplicity == 2);
    } else if (r.real) {
      ++real_irrational;
      CHECK(r.value * r.value == FieldElem(5));
    } else {
      ++complex_count;
      CHECK(r.value * r.value == FieldElem(-1));
    }
  }
  CHECK(rational_count == 1);
  CHECK(real_irrational == 2);
  CHECK(complex_count == 2);

  CHECK_THROWS_AS(all_roots((t * t * t) - UniPoly<Rat>(2, "t")),
                  std::domain_error);

  auto rr = rational_roots((t * t) * (t - one) * UniPoly<Rat>(rat(7, 3), "t"));
  REQUIRE(rr.size() == 2);
  CHECK(rr[0] == std::pair<Rat, int>{rat(0), 2});
  CHECK(rr[1] == std::pair<Rat, int>{rat(1), 1});
}

TEST_CASE("roots over an ambient extension") {
  // Linear over ℚ(√5).
  QuadRoots base = solve_quadratic(rat(1), rat(-3), rat(1));
  FieldElem phi = base.roots[0];
  UniPoly<FieldElem> lin({FieldElem(1) - phi, FieldElem(1)}, "s");
  auto r = roots_in_field(lin);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == phi - FieldElem(1));

  // Quadratic with rational coefficients stays solvable.
  UniPoly<FieldElem> quad({FieldElem(-2), FieldElem(0), FieldElem(1)}, "s");
  CHECK(roots_in_field(quad).size() == 2);

  // Quadratic over the extension with non-square discriminant is refused.
  UniPoly<FieldElem> bad({phi, FieldElem(0), FieldElem(1)}, "s");
  CHECK_THROWS_AS(roots_in_field(bad), std::domain_error);
}

TEST_CASE("projective values") {
  ProjVal inf = ProjVal::infinity();
  CHECK(inf.is_infinity());
  CHECK(inf == ProjVal(FieldElem(3), FieldElem(0)));
  CHECK_THROWS_AS(ProjVal(FieldElem(0), FieldElem(0)), std::domain_error);
  CHECK(ProjVal(FieldElem(6), FieldElem(2)) == ProjVal(FieldElem(3)));
  CHECK(ProjVal(FieldElem(0)).reciprocal().is_infinity());
  CHECK(inf.reciprocal() == ProjVal(FieldElem(0)));
  CHECK(inf.str() == "inf");
  CHECK_THROWS_AS(inf.finite(), std::domain_error);
}

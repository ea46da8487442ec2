#include <random>

#include "doctest.h"
#include "symsing/core/cyclotomic.hpp"
#include "symsing/core/groebner.hpp"
#include "symsing/core/matrix.hpp"
#include "symsing/core/parse.hpp"
#include "symsing/core/poly.hpp"
#include "symsing/core/series.hpp"

using namespace symsing;

namespace {

IntPoly ints(std::initializer_list<long> v) {
  IntPoly p;
  for (long x : v) p.emplace_back(x);
  return p;
}

RingPtr xy_ring() { return PolyRing::make({{"x", 1}, {"y", 1}}); }

QPoly random_poly(const RingPtr& ring, std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
  QPoly p(ring);
  for (int t = 0; t < terms; ++t) {
    Exponents ex(ring->size());
    for (auto& x : ex) x = static_cast<std::uint16_t>(e(rng));
    p.add_term(ex, Rational(c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(5) == ints({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
}

TEST_CASE("roots of unity relations hold in every constructed field") {
  for (int d = 1; d <= 16; ++d) {
    auto field = CyclotomicField::get(d);
    Cyclo z = Cyclo::zeta_power(field, 1);
    Cyclo p(1);
    for (int k = 0; k < d; ++k) p *= z;
    CHECK(p == Cyclo(1));
    CHECK(Cyclo::zeta_power(field, -1) * z == Cyclo(1));
    bool prime = d > 1;
    for (int k = 2; k * k <= d; ++k)
      if (d % k == 0) prime = false;
    if (prime) {
      Cyclo sum(0);
      for (int k = 0; k < d; ++k) sum += Cyclo::zeta_power(field, k);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("cyclotomic inverse and field mismatch") {
  auto f7 = CyclotomicField::get(7);
  Cyclo a = Cyclo(3) + Cyclo::zeta_power(f7, 2) - Cyclo(Rational(1, 2)) * Cyclo::zeta_power(f7, 5);
  CHECK(a * a.inverse() == Cyclo(1));
  Cyclo b = Cyclo::zeta_power(CyclotomicField::get(5), 1);
  CHECK_THROWS_AS(a + b, std::domain_error);
  CHECK_THROWS_AS(Cyclo(0).inverse(), std::domain_error);
}

TEST_CASE("qsqrt2 arithmetic") {
  QSqrt2 r2 = QSqrt2::sqrt2();
  CHECK(r2 * r2 == QSqrt2(2));
  QSqrt2 a(Rational(1, 3), Rational(-2));
  CHECK(a * a.inverse() == QSqrt2(1));
}

TEST_CASE("substitution examples") {
  auto src = PolyRing::make({{"q", 2}, {"Q", 2}, {"e", 2}, {"a1", 5}});
  auto tgt = PolyRing::make({{"x", 1}, {"y", 1}, {"X", 1}, {"Y", 1}});
  std::map<std::string, QPoly> bind{{"q", parse_poly("x*y", tgt)},
                                    {"Q", parse_poly("X*Y", tgt)},
                                    {"e", parse_poly("x*X + y*Y", tgt)},
                                    {"a1", parse_poly("x^4*Y + y^4*X", tgt)}};
  QPoly ea1 = parse_poly("e*a1", src);
  CHECK(substitute(ea1, bind, tgt) == parse_poly("(x*X + y*Y)*(x^4*Y + y^4*X)", tgt));
  CHECK(substitute(ea1, bind, tgt).is_homogeneous());
  CHECK(substitute(ea1, bind, tgt).max_degree() == 7);

  QPoly psi2 = parse_poly("e^2 - q*Q", src);
  // hand expansion: x^2X^2 + 2xXyY + y^2Y^2 - xyXY
  CHECK(substitute(psi2, bind, tgt) == parse_poly("x^2*X^2 + x*y*X*Y + y^2*Y^2", tgt));

  std::map<std::string, QPoly> zero{{"q", QPoly(tgt)}};
  CHECK(substitute(parse_poly("q", src), zero, tgt).is_zero());
  CHECK_THROWS_AS(substitute(parse_poly("q*e", src), zero, tgt), UnboundVariable);
}

TEST_CASE("substitution mixing cyclotomic fields is rejected") {
  auto src = PolyRing::make({{"u", 1}, {"v", 1}});
  auto tgt = PolyRing::make({{"x", 1}});
  CPoly x = CPoly::variable(tgt, 0);
  std::map<std::string, CPoly> bind{{"u", x * Cyclo::zeta_power(CyclotomicField::get(5), 1)},
                                    {"v", x * Cyclo::zeta_power(CyclotomicField::get(7), 1)}};
  CPoly p = CPoly::variable(src, 0) + CPoly::variable(src, 1);
  CHECK_THROWS_AS(substitute(p, bind, tgt), std::domain_error);
}

TEST_CASE("substitution is a ring homomorphism on random pairs") {
  auto src = PolyRing::make({{"u", 1}, {"v", 1}, {"w", 1}});
  auto tgt = PolyRing::make({{"x", 1}, {"y", 1}});
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::string, QPoly> bind{{"u", random_poly(tgt, rng, 3, 2)},
                                      {"v", random_poly(tgt, rng, 3, 2)},
                                      {"w", random_poly(tgt, rng, 2, 1)}};
    QPoly f = random_poly(src, rng, 4, 2), g = random_poly(src, rng, 4, 2);
    CHECK(substitute(f * g, bind, tgt) == substitute(f, bind, tgt) * substitute(g, bind, tgt));
    CHECK(substitute(f + g, bind, tgt) == substitute(f, bind, tgt) + substitute(g, bind, tgt));
  }
}

TEST_CASE("canonical printing is degrevlex in table order") {
  auto r = PolyRing::make({{"x", 1}, {"y", 1}, {"z", 1}});
  CHECK(parse_poly("z^2 + x*z + y^2 + x^2 - 1 + 3/2*y", r).to_string() == "x^2 + y^2 + x*z + z^2 + 3/2*y - 1");
  CHECK(parse_poly("-x*y", r).to_string() == "-x*y");
  CHECK(QPoly(r).to_string() == "0");
}

TEST_CASE("groebner basis examples") {
  auto r = xy_ring();
  auto gb = groebner_basis({parse_poly("x", r)});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == parse_poly("x", r));

  // In the quotient x = y^2, so xy = y^3 = 0: the staircase is {1, y, y^2 = x}.
  std::vector<QPoly> gens{parse_poly("x^2", r), parse_poly("x*y", r), parse_poly("y^2 - x", r)};
  gb = groebner_basis(gens);
  CHECK(is_groebner(gb));
  CHECK(quotient_dimension(gens) == std::optional<std::size_t>(3));
  CHECK(quotient_dimension(gens, MonomialOrder::lex()) == std::optional<std::size_t>(3));

  CHECK(quotient_dimension({parse_poly("x", r), parse_poly("y", r)}) == std::optional<std::size_t>(1));
  CHECK(quotient_dimension({parse_poly("x^2", r), parse_poly("y^2", r)}) == std::optional<std::size_t>(4));
  CHECK(!quotient_dimension({parse_poly("x^2", r)}).has_value());
  CHECK(is_unit_ideal(groebner_basis({parse_poly("x*y - 1", r), parse_poly("x", r)})));
}

TEST_CASE("groebner basis is order independent as an ideal") {
  auto r = PolyRing::make({{"x", 1}, {"y", 1}, {"z", 1}});
  std::vector<QPoly> gens{parse_poly("x^2 + y*z - 2", r), parse_poly("x*y - z^2 + 1", r), parse_poly("y^3 - x", r)};
  auto g1 = groebner_basis(gens);
  auto g2 = groebner_basis(gens, MonomialOrder::lex());
  for (const auto& g : g1) CHECK(normal_form(g, g2, MonomialOrder::lex()).is_zero());
  for (const auto& g : g2) CHECK(normal_form(g, g1).is_zero());
  CHECK(quotient_dimension(gens) == quotient_dimension(gens, MonomialOrder::lex()));
}

TEST_CASE("groebner budget is surfaced") {
  auto r = PolyRing::make({{"x", 1}, {"y", 1}, {"z", 1}});
  std::vector<QPoly> gens{parse_poly("x^3 - y*z^2 + 1", r), parse_poly("y^3 - x*z + 2", r), parse_poly("z^3 - x*y^2 - 3", r)};
  Budget tiny{2, 1000000, 60.0};
  CHECK_THROWS_AS(groebner_basis(gens, {}, tiny), BudgetExceeded);
}

TEST_CASE("exact rank examples") {
  CHECK(exact_rank(QMatrix::identity(3)) == 3);
  CHECK(exact_rank(QMatrix(2, 5)) == 0);
  CHECK(exact_rank(ZMatrix{{1, 2}, {2, 4}, {0, 1}}) == 2);
  CHECK(exact_rank(QMatrix{{Rational(1, 2), 1}, {1, 2}}) == 1);
}

TEST_CASE("rank equals rank of transpose and certified path matches bareiss") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t R = 14 + trial % 5, C = 17 + trial % 3, k = 3 + trial;
    ZMatrix a(R, k), b(k, C);
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = entry(rng);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < C; ++j) b(i, j) = entry(rng);
    ZMatrix m = a * b;
    std::size_t ref = rank_bareiss(m);
    CHECK(ref <= k);
    CHECK(certified_rank(m) == ref);
    CHECK(exact_rank(m.transpose()) == ref);
  }
}

TEST_CASE("rank certificate survives a prime dividing a minor") {
  // entries multiples of the first modular prime vanish mod p but not over Q
  const long p = 67108859;
  ZMatrix m(14, 14);
  for (std::size_t i = 0; i < 14; ++i) m(i, i) = (i == 5) ? Integer(p) : Integer(1);
  CHECK(certified_rank(m) == 14);
}

TEST_CASE("nullspace and solve") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2] == 0);
  auto x = solve(QMatrix{{2, 0}, {0, 4}}, {1, 1});
  REQUIRE(x.has_value());
  CHECK((*x)[1] == Rational(1, 4));
  CHECK(!solve(QMatrix{{1, 1}, {1, 1}}, {0, 1}).has_value());
  CHECK(determinant(ZMatrix{{2, 1}, {7, 4}}) == 1);
}

TEST_CASE("series inverse square root") {
  auto ru = PolyRing::make({{"u", 1}});
  auto s = series_inv_sqrt(QPoly(ru, Rational(4)), 6);
  CHECK(s.poly() == QPoly(ru, Rational(1, 2)));

  auto s1 = series_inv_sqrt(parse_poly("1 + u", ru), 4);
  CHECK(s1.poly() == parse_poly("1 - 1/2*u + 3/8*u^2 - 5/16*u^3 + 35/128*u^4", ru));

  auto r = PolyRing::make({{"q", 2}, {"Q", 2}, {"e", 2}});
  QPoly f = parse_poly("16 + 4*q*Q - e^2", r);
  auto s4 = series_inv_sqrt(f, 4);
  CHECK(s4.poly().constant_term() == Rational(1, 4));
  CHECK((s4 * s4).times(f).poly() == QPoly(r, Rational(1)));
  for (long N : {6L, 9L, 12L}) {
    auto sn = series_inv_sqrt(f, N);
    CHECK((sn * sn).times(f).poly() == QPoly(r, Rational(1)));
  }

  CHECK_THROWS_AS(series_inv_sqrt(parse_poly("u", ru), 4), std::domain_error);
  CHECK_THROWS_AS(series_inv_sqrt(parse_poly("2 + u", ru), 4), std::domain_error);
}

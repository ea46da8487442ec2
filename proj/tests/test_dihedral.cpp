#include <doctest.h>

#include "symsing/dihedral/dihedral.hpp"

using namespace symsing;
using namespace symsing::dihedral;

TEST_CASE("group has 2d elements, d reflections, all reflections involutive") {
  for (int d = 3; d <= 10; ++d) {
    auto g = build_group(d);
    REQUIRE(g.size() == static_cast<std::size_t>(2 * d));
    int refl = 0;
    for (const auto& w : g) {
      if (w.reflection) {
        ++refl;
        CHECK(w.det == Cyclo(-1));
        CHECK((w.matrix * w.matrix) == Matrix<Cyclo>::identity(2));
      } else {
        CHECK(w.det == Cyclo(1));
      }
    }
    CHECK(refl == d);
  }
  auto ts = rotation(7);
  auto f = CyclotomicField::get(7);
  CHECK(ts.matrix(0, 0) == Cyclo::zeta_power(f, 1));
  CHECK(ts.matrix(1, 1) == Cyclo::zeta_power(f, -1));
  CHECK(is_zero(ts.matrix(0, 1)));
}

TEST_CASE("action on generators") {
  const int d = 5;
  auto inv = invariants(d);
  auto f = CyclotomicField::get(d);
  const auto& R = coordinate_ring();
  auto x = CPoly::variable(R, "x");
  CHECK(act(rotation(d), x) == Cyclo::zeta_power(f, 1) * x);
  auto s = reflection(d, 2);
  CHECK(act(s, inv.q) == lift<Cyclo>(inv.q));
  CHECK(act(s, inv.delta) == Cyclo(-1) * lift<Cyclo>(inv.delta));
  CHECK(act(s, inv.a[1]) == lift<Cyclo>(inv.a[1]));
}

TEST_CASE("action is a homomorphism on the group") {
  const int d = 6;
  auto group = build_group(d);
  auto inv = invariants(d);
  // a generic non-invariant test polynomial
  const auto& R = coordinate_ring();
  QPoly p = QPoly::variable(R, "x").pow(3) * QPoly::variable(R, "Y") + Rational(2) * QPoly::variable(R, "y") * QPoly::variable(R, "X");
  for (std::size_t i = 0; i < group.size(); i += 3)
    for (std::size_t j = 1; j < group.size(); j += 4) {
      auto gh = compose(group[i], group[j]);
      CHECK(act(gh, p) == act(group[i], act(group[j], p)));
    }
}

TEST_CASE("invariance suite passes for d = 4..10") {
  for (int d = 4; d <= 10; ++d) {
    auto rep = verify_invariance(d);
    CHECK_MESSAGE(!rep.any_failed(), rep.to_json().dump());
    CHECK(rep.count(Status::pass) == rep.checks().size());
  }
}

TEST_CASE("corrupted a_1 is caught with a residual") {
  auto inv = invariants(5);
  inv.a[1] = inv.a[1] + QPoly::variable(coordinate_ring(), "x") * inv.q.pow(2);
  auto rep = verify_invariance(inv);
  REQUIRE(rep.any_failed());
  bool found = false;
  for (const auto& c : rep.checks())
    if (c.failed()) {
      CHECK(c.params["f"] == "a1");
      CHECK(!c.witness["residual"].get<std::string>().empty());
      CHECK(c.witness["residual"] != "0");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("psi values") {
  const auto& R = psi_ring();
  auto q = QPoly::variable(R, "q"), Q = QPoly::variable(R, "Q"), e = QPoly::variable(R, "e");
  CHECK(psi(0) == QPoly(R, Rational(1)));
  CHECK(psi(1) == e);
  CHECK(psi(2) == e * e - q * Q);
  CHECK(psi(3) == e.pow(3) - Rational(2) * q * Q * e);
  QPoly zero(R);
  CHECK(substitute(psi(3), {{"q", q}, {"Q", Q}, {"e", zero}}, R).is_zero());
}

TEST_CASE("psi suite to order 50") {
  auto rep = verify_psi(50);
  CHECK_MESSAGE(!rep.any_failed(), rep.to_json().dump());
  CHECK(rep.checks().size() == 5);
}

TEST_CASE("a wrong sign in the psi recurrence is caught") {
  const auto& R = dihedral::psi_ring();
  const QPoly e = QPoly::variable(R, "e"), qQ = QPoly::variable(R, "q") * QPoly::variable(R, "Q");
  std::vector<QPoly> table{QPoly(R, Rational(1)), e};
  for (int k = 2; k <= 12; ++k) table.push_back(e * table[k - 1] + qQ * table[k - 2]);
  auto rep = dihedral::verify_psi(12, [&](int k) { return table[k]; });
  CHECK(rep.find("psi.recurrence")->failed());
  CHECK(rep.find("psi.generating_series")->failed());
}

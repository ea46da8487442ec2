#include <doctest.h>

#include "symsing/slodowy/slodowy.hpp"

using namespace symsing;
using namespace symsing::slodowy;

namespace {

void require_clean(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, c.to_json().dump());
}

}  // namespace

TEST_CASE("d = 4 triple") {
  auto t = build_triple(4);
  QMatrix h{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  CHECK(t.h == h);
  CHECK(exact_rank(t.e) == 2);
  CHECK_THROWS_AS(build_triple(3), std::invalid_argument);
}

TEST_CASE("triple relations for d = 4..9") {
  for (int d = 4; d <= 9; ++d) {
    auto t = build_triple(d);
    CHECK((commutator(t.e, t.f) - t.h).is_zero());
    CHECK(exact_rank(t.e) == static_cast<std::size_t>(d - 2));
    require_clean(verify_triple(d, t));
  }
}

TEST_CASE("slice sizes") {
  CHECK(slice_equations(5).basis.size() == 8);
  auto s4 = slice_equations(4);
  CHECK(s4.equations().size() == 3);
  for (const auto& p : s4.equations()) CHECK(p.constant_term() == 0);
}

TEST_CASE("geometry of the slice for d = 4..9") {
  for (int d = 4; d <= 9; ++d) require_clean(verify_slice_geometry(d));
}

TEST_CASE("the regular point is a single Jordan block") {
  auto s = slice_equations(6);
  auto z = find_regular_point(s, 1000);
  REQUIRE(z);
  CHECK(is_regular_nilpotent(slice_point(s, *z)));
  CHECK(!is_regular_nilpotent(s.triple.e));
  CHECK(jacobian_rank(s, *z) == 5);
}

TEST_CASE("an exhausted search is skipped, not failed") {
  auto rep = verify_slice_geometry(slice_equations(5), 0);
  const auto* c = rep.find("slodowy.regular_point");
  REQUIRE(c);
  CHECK(c->status == Status::skipped_budget);
  CHECK(!rep.any_failed());
}

TEST_CASE("a mis-scaled f is caught") {
  auto t = build_triple(6);
  t.f = Rational(2) * t.f;
  auto rep = verify_triple(6, t);
  const auto* c = rep.find("slodowy.triple_relations");
  REQUIRE(c);
  CHECK(c->failed());
  CHECK(!c->witness["residual"].get<std::string>().empty());
}

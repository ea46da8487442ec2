#include <doctest.h>

#include "symsing/hilbert/hilbert.hpp"

using namespace symsing;
using namespace symsing::hilbert;

namespace {

void require_clean(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, c.to_json().dump());
}

}  // namespace

TEST_CASE("series for d = 4 starts 1, 0, 8, 0, 27") {
  auto s = series_coefficients(4, 4);
  std::vector<Integer> want{1, 0, 8, 0, 27};
  CHECK(s == want);
}

TEST_CASE("series quotient inverts a product") {
  std::vector<Integer> den{1, -1};
  auto s = series_quotient({1}, den, 5);
  for (const auto& c : s) CHECK(c == 1);
  CHECK_THROWS_AS(series_quotient({1}, {2, 1}, 3), std::invalid_argument);
}

TEST_CASE("small graded pieces by hand") {
  CHECK(graded_dimension(4, 0) == 1);
  CHECK(graded_dimension(4, 1) == 0);
  // q, Q, e, b_0..b_4 are independent in degree 2 for d = 4
  CHECK(graded_dimension(4, 2) == 8);
  CHECK(graded_dimension(6, 2) == 3);
  CHECK(monomial_count(6, 2) == 3);
}

TEST_CASE("graded dimensions match the series") {
  for (int d = 4; d <= 6; ++d) require_clean(verify_hilbert(d, std::max(2 * d, 12)));
}

TEST_CASE("a perturbed numerator is caught") {
  const int d = 5;
  auto num = hilbert_numerator(d);
  num[d - 2] += 1;
  auto wrong = series_quotient(num, hilbert_denominator(d), 2 * d);
  auto rep = verify_hilbert_against(d, wrong);
  CHECK(rep.any_failed());
  auto c = rep.find("hilbert.graded_dimensions");
  REQUIRE(c);
  CHECK(c->witness["first_mismatch"]["n"] == d - 2);
}

TEST_CASE("fiber algebra") {
  for (int d = 4; d <= 8; ++d) require_clean(verify_fiber_algebra(d));
}

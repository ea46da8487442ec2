#include <doctest.h>

#include "symsing/core/parse.hpp"
#include "symsing/varieties/checks.hpp"

using namespace symsing;
using namespace symsing::varieties;

namespace {

void require_clean(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, c.to_json().dump());
}

}  // namespace

TEST_CASE("relation counts and small examples") {
  auto Qp = presentation(Kind::Q, 4);
  CHECK(Qp.relations.size() == 9);
  auto Yp = presentation(Kind::Y, 5);
  CHECK(Yp.relations.size() == 14);
  CHECK_THROWS_AS(presentation(Kind::Q, 3), std::invalid_argument);

  // Y, (j, k) = (1, 1): b1^2 - b0 b2 = q^{d-2}
  for (int d = 4; d <= 7; ++d) {
    auto Y = presentation(Kind::Y, d);
    const auto& r = Y.relations[d - 1];
    REQUIRE(r.type == "quadratic");
    CHECK(r.j == 1);
    CHECK(r.k == 1);
    CHECK(r.poly() == parse_poly("b1^2 - b0*b2 - q^" + std::to_string(d - 2), Y.ring));
  }
}

TEST_CASE("Z relation (1, d-1) at q = Q = 0") {
  for (int d = 4; d <= 7; ++d) {
    auto Z = presentation(Kind::Z, d);
    const RingPtr R = Z.ring;
    std::map<std::string, QPoly> point;
    for (const auto& v : R->variables()) point.emplace(v.name, QPoly::variable(R, v.name));
    point["q"] = QPoly(R);
    point["Q"] = QPoly(R);
    const Relation* rel = nullptr;
    for (const auto& r : Z.relations)
      if (r.type == "quadratic" && r.j == 1 && r.k == d - 1) rel = &r;
    REQUIRE(rel);
    std::string ad = "a" + std::to_string(d), ad1 = "a" + std::to_string(d - 1);
    QPoly expected = parse_poly("a0*" + ad + " - a1*" + ad1 + " - (e^2 - " + std::to_string(d * d) + ")*e^" +
                                    std::to_string(d - 2),
                                R);
    CHECK(substitute(rel->poly(), point, R) == expected);
  }
}

TEST_CASE("presentation structure") {
  for (int d = 4; d <= 10; ++d) require_clean(verify_presentation_structure(d));
}

TEST_CASE("presentation json is stable") {
  auto j = presentation(Kind::Y, 5).to_json();
  CHECK(j["kind"] == "Y");
  CHECK(j["d"] == 5);
  CHECK(j["variables"].size() == 9);
  CHECK(j["variables"][3]["name"] == "b0");
  CHECK(j["variables"][3]["weight"] == 3);
  CHECK(j["relations"].size() == 14);
  CHECK(j["relations"][0] == "-Q*b0 + e*b1 - q*b2");
  CHECK(j.dump() == presentation(Kind::Y, 5).to_json().dump());
}

TEST_CASE("relations vanish on the invariants") {
  for (int d = 4; d <= 10; ++d) {
    require_clean(verify_presentation_on_invariants(Kind::Q, d));
    require_clean(verify_presentation_on_invariants(Kind::Y, d));
  }
}

TEST_CASE("Y(5) relation (1,2) cleared by delta^2") {
  auto bundle = dihedral::invariants(5);
  auto Y = presentation(Kind::Y, 5);
  const Relation* rel = nullptr;
  for (const auto& r : Y.relations)
    if (r.j == 1 && r.k == 2) rel = &r;
  REQUIRE(rel);
  int exponent = -1;
  QPoly residual = cleared_coordinates(rel->poly(), bundle, &exponent);
  CHECK(exponent == 2);
  CHECK(residual.is_zero());
  QPoly direct = bundle.beta[1] * bundle.beta[2] - bundle.beta[0] * bundle.beta[3] -
                 (bundle.e * bundle.e - Rational(4) * bundle.q * bundle.Q) * bundle.q.pow(2) * bundle.e;
  CHECK(direct.is_zero());
}

TEST_CASE("flipping the sign of a quadratic Y relation is caught") {
  auto Y = presentation(Kind::Y, 5);
  for (auto& r : Y.relations)
    if (r.type == "quadratic" && r.j == 2 && r.k == 3) r.rhs = -r.rhs;
  auto rep = verify_presentation_on_invariants(Y);
  REQUIRE(rep.any_failed());
  const auto& c = rep.checks().front();
  CHECK(c.witness["identity"] == "quadratic j=2 k=3");
  CHECK(c.witness["residual"] != "0");
}

TEST_CASE("delta clearing is multiplicative and stable under extra powers") {
  const int d = 5;
  const RingPtr A = ambient_ring(d);
  auto bundle = dihedral::invariants(d);
  std::vector<QPoly> samples{parse_poly("b1*b2 - 3*q*b0 + e^2*b4", A), parse_poly("D*b0 - e*a0 + 2*q*a1", A),
                             parse_poly("b3^2*b1 + Q*b2 - 1/2*a2", A), parse_poly("q*Q - D", A)};
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      auto ci = clear_delta(samples[i], d), cj = clear_delta(samples[j], d);
      auto cij = clear_delta(samples[i] * samples[j], d);
      CHECK(cij.exponent == ci.exponent + cj.exponent);
      CHECK(to_coordinates(cij.poly, bundle) == to_coordinates(ci.poly * cj.poly, bundle));
    }
  for (const auto& p : samples) {
    auto c = clear_delta(p, d);
    auto c2 = clear_delta(p, d, 2 * c.exponent + 1);
    QPoly delta = QPoly::variable(A, "delta");
    CHECK(c2.poly == c.poly * delta.pow(c.exponent + 1));
  }
}

TEST_CASE("blow-up relations and chart identities") {
  for (int d = 4; d <= 10; ++d) {
    require_clean(verify_blowup_relations(d));
    require_clean(verify_chart_Y0(d));
  }
}

TEST_CASE("chart Y_r smoothness certificates") {
  for (auto [d, r] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {4, 3}, {6, 3}, {5, 2}}) {
    auto rep = verify_chart_Yr_smooth(d, r);
    require_clean(rep);
    CHECK(rep.checks().size() == 2);
  }
  auto control = verify_chart_Yr_smooth(4, 1, false);
  CHECK(control.any_failed());
  CHECK(jacobian_minors(chart_relations(4, 1)).size() <= 15);
}

TEST_CASE("completion substitution") {
  require_clean(verify_completion_substitution(5, 8));
  require_clean(verify_completion_substitution(4, 8));
  auto wrong = verify_completion_substitution(4, 8, 25);
  CHECK(wrong.any_failed());
  CHECK_THROWS_AS(verify_completion_substitution(4, 3), std::invalid_argument);
}

TEST_CASE("orbit representatives, phi, fiber identity") {
  for (int d = 4; d <= 9; ++d) {
    require_clean(verify_orbit_representatives(d));
    require_clean(verify_phi_immersion(d));
    require_clean(verify_fiber_identity(d));
  }
  auto rep = verify_fiber_identity(7);
  CHECK(rep.checks().front().witness["constraint"] == "b0*b7 = -xi^5");
}

TEST_CASE("singular locus identities") {
  for (int d : {4, 6, 8, 10}) require_clean(verify_singular_locus(d));
  CHECK_THROWS_AS(verify_singular_locus(5), std::invalid_argument);
  auto s = singular_locus_ideals(4);
  CHECK(s.J1.size() == 6);
  CHECK(s.a_minus[1].to_string() == "-q*e + a1");
}

#include <doctest.h>

#include "symsing/dihedral/dihedral.hpp"
#include "symsing/sl2rep/sl2rep.hpp"

using namespace symsing;
using namespace symsing::sl2rep;

namespace {

void require_clean(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, c.to_json().dump());
}

}  // namespace

TEST_CASE("identity acts trivially, delta picks up the determinant") {
  auto inv = dihedral::invariants(5);
  GL2Element id(1, 0, 0, 1);
  CHECK(act_gl2(id, inv.a[2]) == inv.a[2]);
  for (auto g : {GL2Element(2, 1, 1, 1), GL2Element(-3, 2, 1, 3), GL2Element(0, 1, -1, 2)})
    CHECK(act_gl2(g, inv.delta) == g.det() * inv.delta);
  CHECK_THROWS_AS(GL2Element(1, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("torus weights follow the b_0 .. b_d pattern") {
  const int d = 6;
  auto inv = dihedral::invariants(d);
  CHECK(*grading_weight(inv.q, torus_grading()) == -2);
  CHECK(*grading_weight(inv.Q, torus_grading()) == 2);
  CHECK(*grading_weight(inv.beta[0], torus_grading()) == -d);
  CHECK(*grading_weight(inv.beta[d], torus_grading()) == d);
  std::vector<long> weights;
  for (int j = 0; j <= d; ++j) weights.push_back(*grading_weight(inv.a[j], torus_grading()));
  for (int j = 0; j <= d; ++j) CHECK(weights[j] == -d + 2 * j);
}

TEST_CASE("module structure") {
  require_clean(verify_module_structure(4, {GL2Element(1, 1, 0, 1)}));
  require_clean(verify_module_structure(5, {GL2Element(2, 1, 1, 1)}));
  for (int d = 4; d <= 7; ++d) require_clean(verify_module_structure(d, 4));
  auto a = verify_module_structure(5, 3).to_json().dump();
  auto b = verify_module_structure(5, 3).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("sl3 table") {
  auto rep = sl3_embedding_check();
  require_clean(rep);
  CHECK(rep.find("sl2rep.sl3.injective")->witness["rank"] == 8);
  CHECK(rep.find("sl2rep.sl3.equivariance")->witness["zero_residuals"] == 24);
  auto t = sl3_table();
  // [image(E), image(e2^4)] = image(4 e1 e2^3)
  CHECK(commutator(t[0], t[7]) == QSqrt2(4) * t[6]);
}

TEST_CASE("corrupted sl3 table is caught") {
  auto t = sl3_table();
  t[4](0, 1) = QSqrt2(0, 1);
  auto rep = sl3_embedding_check(t);
  const Check* c = rep.find("sl2rep.sl3.equivariance");
  REQUIRE(c);
  CHECK(c->failed());
  CHECK(!c->witness["residual"].get<std::string>().empty());
}

TEST_CASE("orthosymplectic example") { require_clean(sosp_check()); }

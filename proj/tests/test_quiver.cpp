#include <doctest.h>

#include <random>

#include "symsing/quiver/quiver.hpp"

using namespace symsing;
using namespace symsing::quiver;

namespace {

void require_clean(const VerificationReport& rep) {
  for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, c.to_json().dump());
}

DimVector sum(const DimVector& a, const DimVector& b) {
  DimVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

TEST_CASE("form is symmetric with 2 on the diagonal") {
  FramedQuiver quiver(6);
  for (std::size_t i = 0; i < quiver.vertex_count(); ++i) {
    CHECK(quiver.pairing(i, i) == 2);
    for (std::size_t j = 0; j < quiver.vertex_count(); ++j) CHECK(quiver.pairing(i, j) == quiver.pairing(j, i));
  }
  CHECK(quiver.pairing(0, 1) == -1);
  CHECK(quiver.pairing(0, 2) == 0);
}

TEST_CASE("p values") {
  FramedQuiver quiver(5);
  for (int i = 0; i < 5; ++i) CHECK(quiver.p_value(quiver.rho(i)) == 0);
  CHECK(quiver.p_value(quiver.delta_imag()) == 1);
  CHECK(quiver.p_value(quiver.v()) == 2);
  CHECK(dot(quiver.lambda(), quiver.v()) == 0);
  CHECK(dot(quiver.lambda(), quiver.rho(0)) == 1);
}

TEST_CASE("root classification") {
  FramedQuiver quiver(6);
  CHECK(quiver.classify_root(sum(quiver.rho(1), quiver.rho(2))) == RootKind::real);
  CHECK(quiver.classify_root(sum(quiver.rho(1), quiver.rho(3))) == RootKind::not_a_root);
  CHECK(quiver.classify_root(quiver.v()) == RootKind::imaginary);
  CHECK(quiver.classify_root(quiver.delta_imag()) == RootKind::imaginary);
  CHECK(quiver.classify_root(sum(quiver.rho(2), quiver.rho(2))) == RootKind::not_a_root);
  CHECK(quiver.classify_root(quiver.zero()) == RootKind::not_a_root);
  CHECK(quiver.classify_root(quiver.rho_inf()) == RootKind::real);
}

TEST_CASE("reflections preserve the form on random vectors") {
  FramedQuiver quiver(7);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    DimVector a = quiver.zero();
    for (auto& x : a) x = coord(rng);
    CHECK(quiver.form(a, a) % 2 == 0);
    for (std::size_t i = 0; i < quiver.vertex_count(); ++i) {
      DimVector r = quiver.reflect(a, i);
      CHECK(quiver.form(r, r) == quiver.form(a, a));
    }
  }
}

TEST_CASE("norm sets") {
  CHECK(norm4_families(4).size() == 2);
  std::vector<std::size_t> sizes;
  for (int d = 4; d <= 8; ++d) {
    require_clean(norm_sets(d));
    sizes.push_back(norm4_families(d).size());
  }
  CHECK(sizes == std::vector<std::size_t>{2, 10, 30, 70, 140});
}

TEST_CASE("the strictly-ranged families miss norm-4 vectors") {
  auto rep = verify_norm4_against(5, norm4_families_strict(5));
  REQUIRE(rep.any_failed());
  const auto* c = rep.find("quiver.norm4_set");
  REQUIRE(c);
  CHECK(!c->witness["enumerated_not_claimed"].empty());
  // alpha_{1,2} + alpha_{3,4} = alpha_{1,4} is a root, not a norm-4 vector
  CHECK(c->witness["claimed_not_enumerated"].size() >= 1);
}

TEST_CASE("sigma for d = 5 has the seven listed members") {
  auto s = sigma_lambda(5);
  CHECK(s.size() == 7);
  CHECK(s == expected_sigma(5));
  FramedQuiver quiver(5);
  CHECK(std::find(s.begin(), s.end(), quiver.rho(0)) == s.end());
}

TEST_CASE("sigma, leaves and local quiver for d = 4..8") {
  for (int d = 4; d <= 8; ++d) {
    require_clean(verify_sigma(d));
    require_clean(verify_leaves(d));
    require_clean(local_quiver_data(d));
    CHECK(sigma_lambda(d).size() == static_cast<std::size_t>(d + 2));
  }
}

TEST_CASE("local quiver at d = 6 and the degenerate d = 4 framing") {
  auto rep = local_quiver_data(6);
  CHECK(rep.find("quiver.local.framing")->witness["w"] == Json({0, 1, 0, 1, 0}));
  CHECK(rep.find("quiver.local.dimension_vector")->witness["v"] == Json({1, 2, 2, 2, 1}));
  CHECK(rep.find("quiver.local.variety_dimension")->witness["dimension"] == 4);
  auto rep4 = local_quiver_data(4);
  CHECK(rep4.find("quiver.local.framing") == nullptr);
  CHECK(rep4.find("quiver.local.partitions")->witness["w"] == Json({0, 2, 0}));
  FramedQuiver quiver(7);
  DimVector framing = quiver.zero();
  framing[0] = 1, framing[1] = 2, framing[2] = 1, framing[7] = 1;
  CHECK(-quiver.form(framing, quiver.rho(3)) == 0);
}

TEST_CASE("a wrong parameter changes sigma and is reported") {
  FramedQuiver quiver(5);
  Parameter wrong = quiver.lambda();
  wrong[0] = -1;
  auto rep = verify_sigma(5, wrong);
  REQUIRE(rep.any_failed());
  CHECK(!rep.find("quiver.sigma")->witness["missing"].empty());
}

TEST_CASE("dropping a sigma member loses representation types") {
  auto sigma = sigma_lambda(6);
  FramedQuiver quiver(6);
  sigma.erase(std::find(sigma.begin(), sigma.end(), quiver.v()));
  auto rep = verify_leaves(6, sigma);
  CHECK(rep.find("quiver.leaves.count")->failed());
  CHECK(rep.find("quiver.leaves.count")->witness["count"] == 2);
}

TEST_CASE("export carries sigma and types") {
  Json j = quiver_export(5);
  CHECK(j["sigma"].size() == 7);
  CHECK(j["representation_types"].size() == 3);
  CHECK(j["local_quiver"].contains("quiver.local.variety_dimension"));
}

// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "symsing/cli/run.hpp"
#include "symsing/dihedral/dihedral.hpp"
#include "symsing/hilbert/hilbert.hpp"
#include "symsing/quiver/quiver.hpp"
#include "symsing/sl2rep/sl2rep.hpp"
#include "symsing/slodowy/slodowy.hpp"
#include "symsing/varieties/checks.hpp"
#include "symsing/varieties/presentation.hpp"

#ifndef SYMSING_CLI_PATH
#error "SYMSING_CLI_PATH must name the command-line tool"
#endif

using namespace symsing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

// pass/fail/skip counts plus the first failing check
std::string summary(const VerificationReport& rep) {
  std::ostringstream s;
  s << rep.count(Status::pass) << " pass, " << rep.count(Status::fail) << " fail, "
    << rep.count(Status::skipped_budget) << " skipped";
  for (const auto& c : rep.checks())
    if (c.failed()) {
      s << "; first failure " << c.id << " " << c.params.dump() << " " << c.witness.dump().substr(0, 200);
      break;
    }
  return s.str();
}

Outcome strict(const VerificationReport& rep) { return {rep.all_passed() && !rep.checks().empty(), summary(rep)}; }

std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome identities() {
  cli::RunConfig cfg;
  cfg.identity = {4, 10};
  VerificationReport rep = cli::run_suite("identities", cfg);
  for (int d = 4; d <= 10; ++d) {
    auto inv = dihedral::verify_invariance(d);
    for (const auto& c : inv.checks())
      if (c.id == "dihedral.delta_squared") rep.add(c);
  }
  return strict(rep);
}

Outcome invariance() {
  cli::RunConfig cfg;
  cfg.identity = {4, 10};
  return strict(cli::run_suite("invariance", cfg));
}

Outcome psi() { return strict(dihedral::verify_psi(50)); }

Outcome smoothness() {
  VerificationReport rep;
  for (int d = 4; d <= 8; ++d)
    for (int r = 1; r <= d - 1; ++r) rep.add(varieties::verify_chart_Yr_smooth(d, r));
  return strict(rep);
}

Outcome completion() {
  VerificationReport rep;
  for (int d = 4; d <= 6; ++d) rep.add(varieties::verify_completion_substitution(d, 8));
  return strict(rep);
}

Outcome sl3() {
  auto rep = sl2rep::sl3_embedding_check();
  Outcome o = strict(rep);
  const Check* inj = rep.find("sl2rep.sl3.injective");
  const Check* eq = rep.find("sl2rep.sl3.equivariance");
  const Check* mo = rep.find("sl2rep.sl3.minimal_orbit_element");
  o.ok = o.ok && inj && eq && mo && inj->witness["rank"] == 8 && eq->witness["zero_residuals"] == 24 &&
         mo->witness["rank"] == 1 && mo->witness["trace"] == "0";
  return o;
}

Outcome hilbert_suite() {
  VerificationReport rep;
  for (int d = 4; d <= 7; ++d) rep.add(hilbert::verify_hilbert(d, std::max(2 * d, 12)));
  for (int d = 4; d <= 10; ++d) {
    auto fib = hilbert::verify_fiber_algebra(d);
    rep.add(fib);
    const Check* c = fib.find("hilbert.fiber_matrix_independence");
    rep.add(make_check("acceptance.fiber_rank", {{"d", d}}, c && c->witness["rank"] == 2 * d - 2, c ? c->witness : Json()));
  }
  std::vector<std::size_t> head;
  for (int n = 0; n <= 4; ++n) head.push_back(hilbert::graded_dimension(4, n));
  rep.add(make_check("acceptance.d4_head", {}, head == std::vector<std::size_t>{1, 0, 8, 0, 27}, {{"head", head}}));
  return strict(rep);
}

Outcome quiver_suite() {
  VerificationReport rep;
  for (int d = 4; d <= 8; ++d) {
    auto norms = quiver::norm_sets(d);
    auto sigma = quiver::verify_sigma(d);
    auto leaves = quiver::verify_leaves(d);
    auto local = quiver::local_quiver_data(d);
    for (const auto* r : {&norms, &sigma, &leaves, &local}) rep.add(*r);
    const Check* n2 = norms.find("quiver.norm2_set");
    const Check* sg = sigma.find("quiver.sigma");
    const Check* lv = leaves.find("quiver.leaves.dimensions");
    const Check* vd = local.find("quiver.local.variety_dimension");
    bool ok = n2 && n2->witness["size"] == d * (d - 1) / 2 && sg && sg->witness["size"] == d + 2 && lv &&
              lv->witness["dimensions"] == Json({0, 2, 4}) && (d < 5 || (vd && vd->witness["dimension"] == 4));
    rep.add(make_check("acceptance.quiver_counts", {{"d", d}}, ok, nullptr));
  }
  return strict(rep);
}

Outcome slodowy_suite() {
  VerificationReport rep;
  for (int d = 4; d <= 9; ++d) rep.add(slodowy::verify_slice_geometry(d));
  // a skipped regular-point search is allowed; anything else must pass
  bool ok = !rep.any_failed();
  for (const auto& c : rep.checks())
    if (c.status == Status::skipped_budget && c.id != "slodowy.regular_point") ok = false;
  return {ok, summary(rep)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const std::string tag = std::to_string(::getpid());
  const fs::path a = dir / ("symsing_all_a_" + tag + ".json"), b = dir / ("symsing_all_b_" + tag + ".json");
  auto run = [](const fs::path& out) {
    std::string cmd = std::string("\"") + SYMSING_CLI_PATH + "\" all --out \"" + out.string() + "\" 2>/dev/null";
    return std::system(cmd.c_str());
  };
  int ra = run(a), rb = run(b);
  std::string ba = read_bytes(a), bb = read_bytes(b);
  fs::remove(a);
  fs::remove(b);
  bool ok = !ba.empty() && ba == bb;
  std::ostringstream s;
  s << "exit codes " << ra << ", " << rb << "; " << ba.size() << " bytes; " << (ba == bb ? "identical" : "different");
  return {ok, s.str()};
}

// A corrupted input per suite must produce a failed check carrying a witness.
Outcome negative_controls() {
  std::vector<std::pair<std::string, std::function<VerificationReport()>>> controls{
      {"identities",
       [] {
         auto Y = varieties::presentation(varieties::Kind::Y, 5);
         for (auto& r : Y.relations)
           if (r.type == "quadratic" && r.j == 2 && r.k == 3) r.rhs = -r.rhs;
         return varieties::verify_presentation_on_invariants(Y);
       }},
      {"invariance",
       [] {
         auto inv = dihedral::invariants(5);
         inv.a[1] = inv.a[1] + QPoly::variable(dihedral::coordinate_ring(), "x") * inv.q.pow(2);
         return dihedral::verify_invariance(inv);
       }},
      {"psi",
       [] {
         const auto& R = dihedral::psi_ring();
         const QPoly e = QPoly::variable(R, "e"), qQ = QPoly::variable(R, "q") * QPoly::variable(R, "Q");
         std::vector<QPoly> t{QPoly(R, Rational(1)), e};
         for (int k = 2; k <= 12; ++k) t.push_back(e * t[k - 1] + qQ * t[k - 2]);
         return dihedral::verify_psi(12, [t](int k) { return t[k]; });
       }},
      {"smoothness", [] { return varieties::verify_chart_Yr_smooth(4, 1, false); }},
      {"completion", [] { return varieties::verify_completion_substitution(4, 8, 25); }},
      {"sl2",
       [] {
         auto t = sl2rep::sl3_table();
         t[4](0, 1) = QSqrt2(0, 1);
         return sl2rep::sl3_embedding_check(t);
       }},
      {"hilbert",
       [] {
         auto num = hilbert::hilbert_numerator(5);
         num[3] += 1;
         return hilbert::verify_hilbert_against(5, hilbert::series_quotient(num, hilbert::hilbert_denominator(5), 10));
       }},
      {"quiver", [] { return quiver::verify_norm4_against(5, quiver::norm4_families_strict(5)); }},
      {"slodowy",
       [] {
         auto t = slodowy::build_triple(6);
         t.f = Rational(2) * t.f;
         return slodowy::verify_triple(6, t);
       }},
  };
  bool ok = true;
  std::ostringstream s;
  for (const auto& [name, run] : controls) {
    auto rep = run();
    bool caught = false;
    for (const auto& c : rep.checks())
      if (c.failed() && !c.witness.is_null() && !c.witness.empty()) caught = true;
    if (!caught) ok = false;
    s << name << (caught ? " caught" : " MISSED") << "; ";
  }
  return {ok, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity suite, d in [4,10]", identities},
      {"invariance suite, d in [4,10]", invariance},
      {"psi suite, N = 50", psi},
      {"smoothness certificates, d in [4,8], all r", smoothness},
      {"completion substitution, d in {4,5,6}, N = 8", completion},
      {"sl3 map: rank 8, 24 zero residuals, rank-1 trace-0 image", sl3},
      {"Hilbert suite and fiber algebra", hilbert_suite},
      {"quiver suite, d in [4,8]", quiver_suite},
      {"Slodowy suite, d in [4,9]", slodowy_suite},
      {"determinism of two `all` runs", determinism},
      {"negative controls in every suite", negative_controls},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && o.ok;
    std::printf("criterion %2zu: %s  %s (%.2fs) [%s]\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}

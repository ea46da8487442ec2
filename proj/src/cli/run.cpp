#include "symsing/cli/run.hpp"

#include <sstream>
#include <stdexcept>

#include "symsing/core/groebner.hpp"
#include "symsing/dihedral/dihedral.hpp"
#include "symsing/hilbert/hilbert.hpp"
#include "symsing/quiver/quiver.hpp"
#include "symsing/sl2rep/sl2rep.hpp"
#include "symsing/slodowy/slodowy.hpp"
#include "symsing/varieties/checks.hpp"
#include "symsing/varieties/presentation.hpp"

namespace symsing::cli {

namespace {

long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void set_field(RunConfig& cfg, const std::string& key, const Json& value) {
  auto as_text = [&]() { return value.is_string() ? value.get<std::string>() : value.dump(); };
  auto as_long = [&]() { return value.is_number_integer() ? value.get<long>() : parse_int(as_text(), key); };
  auto as_double = [&]() {
    if (value.is_number()) return value.get<double>();
    try {
      std::size_t used = 0;
      double v = std::stod(as_text(), &used);
      if (used == as_text().size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(key + ": not a number: '" + as_text() + "'");
  };
  auto positive = [&](long v) {
    if (v <= 0) throw std::invalid_argument(key + ": must be positive");
    return v;
  };
  if (key == "heavy_d") cfg.heavy = parse_range(as_text());
  else if (key == "identity_d") cfg.identity = parse_range(as_text());
  else if (key == "N") cfg.N = static_cast<int>(as_long());
  else if (key == "psi_order") cfg.psi_order = static_cast<int>(as_long());
  else if (key == "completion_order") cfg.completion_order = static_cast<int>(as_long());
  else if (key == "completion_d_max") cfg.completion_d_max = static_cast<int>(as_long());
  else if (key == "seed") {
    long v = as_long();
    if (v < 0) throw std::invalid_argument("seed: must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(v);
  } else if (key == "trials") cfg.trials = static_cast<int>(positive(as_long()));
  else if (key == "max_terms") cfg.max_terms = static_cast<std::size_t>(positive(as_long()));
  else if (key == "max_basis") cfg.max_basis = static_cast<std::size_t>(positive(as_long()));
  else if (key == "max_seconds") cfg.max_seconds = as_double();
  else if (key == "regular_point_candidates") cfg.regular_point_candidates = static_cast<std::size_t>(positive(as_long()));
  else if (key == "out") cfg.out = as_text();
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

Json range_json(const DRange& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

Budget budget_of(const RunConfig& cfg) {
  Budget b;
  b.max_basis = cfg.max_basis;
  b.max_terms = cfg.max_terms;
  b.max_seconds = cfg.max_seconds;
  return b;
}

}  // namespace

DRange parse_range(const std::string& text) {
  const std::string t = trim(text);
  DRange r;
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = static_cast<int>(parse_int(t, "d range"));
  } else {
    r.lo = static_cast<int>(parse_int(t.substr(0, dots), "d range"));
    r.hi = static_cast<int>(parse_int(t.substr(dots + 2), "d range"));
  }
  if (r.lo > r.hi) throw std::invalid_argument("d range '" + t + "' is empty");
  return r;
}

Json RunConfig::to_json() const {
  return {{"heavy_d", range_json(heavy)},
          {"identity_d", range_json(identity)},
          {"N", N},
          {"psi_order", psi_order},
          {"completion_order", completion_order},
          {"completion_d_max", completion_d_max},
          {"seed", seed},
          {"trials", trials},
          {"max_terms", max_terms},
          {"max_basis", max_basis},
          {"max_seconds", max_seconds},
          {"regular_point_candidates", regular_point_candidates}};
}

void RunConfig::validate() const {
  if (heavy.lo < 4) throw std::invalid_argument("heavy_d: d must be at least 4");
  if (identity.lo < 4) throw std::invalid_argument("identity_d: d must be at least 4");
  if (N < 0) throw std::invalid_argument("N: must be nonnegative");
  if (psi_order < 1) throw std::invalid_argument("psi_order: must be positive");
  if (completion_order < 4) throw std::invalid_argument("completion_order: must be at least 4");
  if (trials < 1) throw std::invalid_argument("trials: must be positive");
  if (!(max_seconds > 0)) throw std::invalid_argument("max_seconds: must be positive");
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }
    for (auto it = j.begin(); it != j.end(); ++it) set_field(cfg, it.key(), it.value());
    return;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    try {
      set_field(cfg, trim(line.substr(0, eq)), Json(trim(line.substr(eq + 1))));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "invariance", "psi",    "smoothness", "completion",
                                              "sl2",        "hilbert",    "quiver", "slodowy"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const RunConfig& cfg) {
  using varieties::Kind;
  VerificationReport rep;
  if (suite == "identities") {
    for (int d = cfg.identity.lo; d <= cfg.identity.hi; ++d) {
      rep.add(varieties::verify_presentation_structure(d));
      for (Kind k : {Kind::Q, Kind::Y}) rep.add(varieties::verify_presentation_on_invariants(k, d));
      rep.add(varieties::verify_blowup_relations(d));
      rep.add(varieties::verify_chart_Y0(d));
      rep.add(varieties::verify_orbit_representatives(d));
      if (d % 2 == 0) rep.add(varieties::verify_singular_locus(d));
      rep.add(varieties::verify_phi_immersion(d));
      rep.add(varieties::verify_fiber_identity(d));
    }
  } else if (suite == "invariance") {
    for (int d = cfg.identity.lo; d <= cfg.identity.hi; ++d) rep.add(dihedral::verify_invariance(d));
  } else if (suite == "psi") {
    rep.add(dihedral::verify_psi(cfg.psi_order));
  } else if (suite == "smoothness") {
    for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d)
      for (int r = 1; r <= d - 1; ++r) rep.add(varieties::verify_chart_Yr_smooth(d, r, true, budget_of(cfg)));
  } else if (suite == "completion") {
    for (int d = cfg.heavy.lo; d <= std::min(cfg.heavy.hi, cfg.completion_d_max); ++d)
      rep.add(varieties::verify_completion_substitution(d, cfg.completion_order));
  } else if (suite == "sl2") {
    for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d)
      rep.add(sl2rep::verify_module_structure(d, cfg.trials, cfg.seed));
    rep.add(sl2rep::sl3_embedding_check());
    rep.add(sl2rep::sosp_check());
  } else if (suite == "hilbert") {
    for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d) {
      rep.add(hilbert::verify_hilbert(d, std::max(cfg.N, 2 * d)));
      rep.add(hilbert::verify_fiber_algebra(d));
    }
  } else if (suite == "quiver") {
    for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d) {
      rep.add(quiver::norm_sets(d));
      rep.add(quiver::verify_sigma(d));
      rep.add(quiver::verify_leaves(d));
      rep.add(quiver::local_quiver_data(d));
    }
  } else if (suite == "slodowy") {
    for (int d = cfg.heavy.lo; d <= cfg.heavy.hi; ++d)
      rep.add(slodowy::verify_slice_geometry(d, cfg.regular_point_candidates));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return rep;
}

Json make_report(const std::string& command, const RunConfig& cfg, const VerificationReport& rep, const Json& data) {
  Json body = rep.to_json();
  Json out = {{"tool", tool_name},
              {"version", tool_version},
              {"schema_version", report_schema_version},
              {"command", command},
              {"config", cfg.to_json()},
              {"checks", body["checks"]},
              {"summary", body["summary"]}};
  if (!data.is_null()) out["data"] = data;
  return out;
}

}  // namespace symsing::cli

#include "symsing/quiver/quiver.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>
#include <stdexcept>

namespace symsing::quiver {

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::real: return "real";
    case RootKind::imaginary: return "imaginary";
    case RootKind::not_a_root: return "not-a-root";
  }
  return "?";
}

FramedQuiver::FramedQuiver(int d) : d_(d) {
  if (d < 3) throw std::invalid_argument("FramedQuiver: d must be at least 3");
  const std::size_t n = vertex_count();
  form_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) form_[i * n + i] = 2;
  auto arrow = [&](std::size_t a, std::size_t b) {
    form_[a * n + b] -= 1;
    form_[b * n + a] -= 1;
  };
  for (int i = 0; i < d; ++i) arrow(1 + static_cast<std::size_t>(i), 1 + static_cast<std::size_t>((i + 1) % d));
  arrow(0, 1);
}

int FramedQuiver::form(const DimVector& a, const DimVector& b) const {
  const std::size_t n = vertex_count();
  int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < n; ++j) s += a[i] * form_[i * n + j] * b[j];
  }
  return s;
}

DimVector FramedQuiver::simple(std::size_t vertex) const {
  DimVector a = zero();
  a.at(vertex) = 1;
  return a;
}

DimVector FramedQuiver::reflect(const DimVector& a, std::size_t i) const {
  DimVector r = a;
  r[i] -= form(a, simple(i));
  return r;
}

DimVector FramedQuiver::delta_imag() const {
  DimVector a(vertex_count(), 1);
  a[0] = 0;
  return a;
}

DimVector FramedQuiver::highest_root() const {
  DimVector a = delta_imag();
  a[1] = 0;
  return a;
}

DimVector FramedQuiver::v() const {
  DimVector a = delta_imag();
  for (auto& x : a) x *= 2;
  a[0] = 1;
  return a;
}

Parameter FramedQuiver::lambda() const {
  Parameter l = zero();
  l[0] = -2;
  l[1] = 1;
  return l;
}

std::string FramedQuiver::label(const DimVector& a) const {
  std::string s;
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    if (!a[i]) continue;
    if (!s.empty()) s += a[i] > 0 ? " + " : " - ";
    else if (a[i] < 0) s += "-";
    int c = std::abs(a[i]);
    if (c != 1) s += std::to_string(c);
    s += i == 0 ? "rho_inf" : "rho_" + std::to_string(i - 1);
  }
  return s.empty() ? "0" : s;
}

RootKind FramedQuiver::classify_root(const DimVector& alpha) const {
  const std::size_t n = vertex_count();
  DimVector a = alpha;
  if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }) ||
      std::all_of(a.begin(), a.end(), [](int x) { return x == 0; }))
    return RootKind::not_a_root;
  for (;;) {
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i]) ++nonzero, last = i;
    if (nonzero == 1 && a[last] == 1) return RootKind::real;

    // roots have connected support
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{last};
    seen[last] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (!seen[w] && a[w] && w != u && form_[u * n + w] < 0) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != nonzero) return RootKind::not_a_root;

    std::size_t i = 0;
    int pairing = 0;
    for (; i < n; ++i)
      if ((pairing = form(a, simple(i))) > 0) break;
    if (i == n) return RootKind::imaginary;
    a[i] -= pairing;
    if (a[i] < 0) return RootKind::not_a_root;
  }
}

int dot(const Parameter& lambda, const DimVector& a) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += lambda[i] * a[i];
  return s;
}

Json to_json(const FramedQuiver& quiver, const DimVector& a) { return {{"label", quiver.label(a)}, {"vector", a}}; }

namespace {

// All vectors with 0 <= x_i <= bound_i, in mixed-radix order (coordinate 0 fastest).
std::vector<std::vector<int>> box(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(bound.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

// Type A_{d-1} coordinates (rho_1..rho_{d-1}) placed into the framed quiver.
DimVector embed(const FramedQuiver& quiver, const std::vector<int>& finite) {
  DimVector a = quiver.zero();
  for (std::size_t i = 0; i < finite.size(); ++i) a[2 + i] = finite[i];
  return a;
}

std::vector<int> interval(int d, int i, int j) {
  std::vector<int> a(static_cast<std::size_t>(d - 1), 0);
  for (int k = i; k <= j; ++k) a[k - 1] += 1;
  return a;
}

std::vector<int> add(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Json finite_set_json(int d, const std::vector<std::vector<int>>& vs) {
  FramedQuiver quiver(d);
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(quiver.label(embed(quiver, v)));
  return arr;
}

std::vector<std::vector<int>> families(int d, bool strict) {
  std::set<std::vector<int>> out;
  const int n = d - 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
          bool nested = strict ? (i < k && k < l && l < j) : (i < k && k <= l && l < j);
          bool disjoint = strict ? (i < j && j < k && k < l) : (j + 1 < k);
          if (nested || disjoint) out.insert(add(interval(d, i, j), interval(d, k, l)));
        }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> norm4_enumerated(int d) {
  FramedQuiver quiver(d);
  std::vector<std::vector<int>> out;
  for (const auto& a : box(std::vector<int>(static_cast<std::size_t>(d - 1), 2)))
    if (quiver.form(embed(quiver, a), embed(quiver, a)) == 4) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> norm4_families(int d) { return families(d, false); }
std::vector<std::vector<int>> norm4_families_strict(int d) { return families(d, true); }

VerificationReport verify_norm4_against(int d, const std::vector<std::vector<int>>& claimed) {
  if (d < 4) throw std::invalid_argument("norm sets: d must be at least 4");
  VerificationReport rep;
  auto found = norm4_enumerated(d);
  std::vector<std::vector<int>> want = claimed, missing, extra;
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  std::set_difference(found.begin(), found.end(), want.begin(), want.end(), std::back_inserter(missing));
  std::set_difference(want.begin(), want.end(), found.begin(), found.end(), std::back_inserter(extra));
  bool ok = missing.empty() && extra.empty();
  Json witness = {{"size", found.size()}};
  if (!ok) {
    witness["enumerated_not_claimed"] = finite_set_json(d, missing);
    witness["claimed_not_enumerated"] = finite_set_json(d, extra);
  }
  rep.add(make_check("quiver.norm4_set", {{"d", d}}, ok, witness));
  return rep;
}

VerificationReport norm_sets(int d) {
  if (d < 4) throw std::invalid_argument("norm_sets: d must be at least 4");
  VerificationReport rep;
  FramedQuiver quiver(d);
  std::set<std::vector<int>> roots;
  for (int i = 1; i <= d - 1; ++i)
    for (int j = i; j <= d - 1; ++j) roots.insert(interval(d, i, j));

  // norm 2 over a box wider than the roots need, plus the reflection classifier on the same box
  std::set<std::vector<int>> norm2;
  Json classify_bad = nullptr;
  bool even = true;
  for (const auto& a : box(std::vector<int>(static_cast<std::size_t>(d - 1), 3))) {
    DimVector full = embed(quiver, a);
    int n = quiver.form(full, full);
    if (n % 2) even = false;
    if (n == 2) norm2.insert(a);
    bool nonzero = std::any_of(a.begin(), a.end(), [](int x) { return x != 0; });
    if (nonzero && classify_bad.is_null() && (quiver.classify_root(full) == RootKind::real) != (n == 2))
      classify_bad = {{"alpha", quiver.label(full)}, {"norm", n}, {"kind", to_string(quiver.classify_root(full))}};
  }
  Json w2 = {{"size", norm2.size()}, {"expected", d * (d - 1) / 2}};
  if (norm2 != roots) {
    std::vector<std::vector<int>> diff;
    std::set_symmetric_difference(norm2.begin(), norm2.end(), roots.begin(), roots.end(), std::back_inserter(diff));
    w2["symmetric_difference"] = finite_set_json(d, diff);
  }
  rep.add(make_check("quiver.norm2_set", {{"d", d}}, norm2 == roots, w2));
  rep.add(make_check("quiver.classify_matches_norm", {{"d", d}}, classify_bad.is_null(), classify_bad));
  rep.add(make_check("quiver.even_form", {{"d", d}}, even, nullptr));

  auto fam = norm4_families(d);
  VerificationReport n4 = verify_norm4_against(d, fam);
  // how far the strict index ranges are from the enumeration
  auto strict = norm4_families_strict(d);
  auto found = norm4_enumerated(d);
  std::vector<std::vector<int>> strict_missing;
  std::set_difference(found.begin(), found.end(), strict.begin(), strict.end(), std::back_inserter(strict_missing));
  for (auto c : n4.checks()) {
    c.witness["strict_ranges"] = {{"size", strict.size()}, {"missing", strict_missing.size()}};
    rep.add(c);
  }

  // reflection invariance of the form on the whole framed quiver
  Json refl_bad = nullptr;
  std::vector<int> bound(quiver.vertex_count(), 2);
  for (const auto& a : box(bound)) {
    for (std::size_t i = 0; i < quiver.vertex_count() && refl_bad.is_null(); ++i) {
      DimVector r = quiver.reflect(a, i);
      if (quiver.form(r, r) != quiver.form(a, a)) refl_bad = {{"alpha", quiver.label(a)}, {"vertex", i}};
    }
    if (!refl_bad.is_null()) break;
  }
  rep.add(make_check("quiver.reflection_invariance", {{"d", d}}, refl_bad.is_null(), refl_bad));
  return rep;
}

std::vector<SigmaEntry> sigma_candidates(int d, const Parameter& lambda) {
  FramedQuiver quiver(d);
  const DimVector v = quiver.v();
  const std::size_t n = quiver.vertex_count();
  std::vector<int> bound(v.begin(), v.end());
  const auto all = box(bound);
  std::vector<std::size_t> radix(n, 1);
  for (std::size_t i = 1; i < n; ++i) radix[i] = radix[i - 1] * static_cast<std::size_t>(bound[i - 1] + 1);
  auto index = [&](const DimVector& a) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += radix[i] * static_cast<std::size_t>(a[i]);
    return k;
  };
  auto below = [](const DimVector& a, const DimVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  auto sub = [](DimVector a, const DimVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };

  std::vector<std::size_t> roots;  // indices into all
  for (std::size_t k = 1; k < all.size(); ++k)
    if (dot(lambda, all[k]) == 0 && quiver.is_root(all[k])) roots.push_back(k);

  // best[g]: largest sum of p over decompositions of g into members of roots
  constexpr int none = INT_MIN / 4;
  std::vector<int> best(all.size(), none), choice(all.size(), -1);
  best[0] = 0;
  for (std::size_t g = 1; g < all.size(); ++g)
    for (std::size_t r : roots) {
      if (!below(all[r], all[g])) continue;
      std::size_t rest = index(sub(all[g], all[r]));
      if (best[rest] == none) continue;
      int val = quiver.p_value(all[r]) + best[rest];
      if (val > best[g]) best[g] = val, choice[g] = static_cast<int>(r);
    }
  auto unfold = [&](std::size_t g) {
    std::vector<DimVector> parts;
    while (g) {
      parts.push_back(all[choice[g]]);
      g = index(sub(all[g], all[choice[g]]));
    }
    return parts;
  };

  std::vector<SigmaEntry> out;
  for (std::size_t r : roots) {
    SigmaEntry e{all[r], quiver.classify_root(all[r]), quiver.p_value(all[r]), true, std::nullopt};
    int proper = none;
    std::size_t arg = 0;
    for (std::size_t s : roots) {
      if (s == r || !below(all[s], all[r])) continue;
      std::size_t rest = index(sub(all[r], all[s]));
      if (best[rest] == none) continue;
      int val = quiver.p_value(all[s]) + best[rest];
      if (val > proper) proper = val, arg = s;
    }
    if (proper != none) {
      Decomposition dec;
      dec.parts.push_back(all[arg]);
      for (auto& p : unfold(index(sub(all[r], all[arg])))) dec.parts.push_back(p);
      std::sort(dec.parts.begin(), dec.parts.end());
      dec.p_sum = proper;
      e.in_sigma = e.p > proper;
      e.best = dec;
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SigmaEntry& a, const SigmaEntry& b) { return a.alpha < b.alpha; });
  return out;
}

std::vector<DimVector> sigma_lambda(int d, const Parameter& lambda) {
  std::vector<DimVector> out;
  for (const auto& e : sigma_candidates(d, lambda))
    if (e.in_sigma) out.push_back(e.alpha);
  return out;
}

std::vector<DimVector> sigma_lambda(int d) { return sigma_lambda(d, FramedQuiver(d).lambda()); }

namespace {

DimVector plus(DimVector a, const DimVector& b, int k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

// rho_inf + 2 rho_0 + rho_1 + rho_{d-1}
DimVector zero_leaf_root(const FramedQuiver& quiver) {
  return plus(plus(plus(quiver.rho_inf(), quiver.rho(0), 2), quiver.rho(1)), quiver.rho(quiver.d() - 1));
}

DimVector two_leaf_root(const FramedQuiver& quiver) {
  return plus(plus(quiver.rho_inf(), quiver.rho(0), 2), quiver.highest_root());
}

Json type_json(const FramedQuiver& quiver, const RepresentationType& t) {
  Json entries = Json::array();
  for (const auto& [beta, n] : t.entries)
    entries.push_back({{"root", to_json(quiver, beta)}, {"multiplicity", n}, {"p", quiver.p_value(beta)}});
  return {{"entries", entries}, {"dimension", t.dimension}};
}

void canonicalize(RepresentationType& t) { std::sort(t.entries.begin(), t.entries.end()); }

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

}  // namespace

std::vector<DimVector> expected_sigma(int d) {
  FramedQuiver quiver(d);
  std::vector<DimVector> out{quiver.v(), two_leaf_root(quiver), zero_leaf_root(quiver)};
  for (int i = 1; i <= d - 1; ++i) out.push_back(quiver.rho(i));
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_sigma(int d, const Parameter& lambda) {
  if (d < 4) throw std::invalid_argument("verify_sigma: d must be at least 4");
  VerificationReport rep;
  FramedQuiver quiver(d);
  const auto cands = sigma_candidates(d, lambda);
  std::vector<DimVector> got;
  for (const auto& e : cands)
    if (e.in_sigma) got.push_back(e.alpha);
  const auto want = expected_sigma(d);
  Json witness = {{"size", got.size()}, {"sigma", Json::array()}};
  for (const auto& a : got) witness["sigma"].push_back(quiver.label(a));
  if (got != want) {
    Json missing = Json::array(), extra = Json::array();
    for (const auto& a : want)
      if (!std::binary_search(got.begin(), got.end(), a)) {
        Json m = {{"alpha", quiver.label(a)}};
        for (const auto& e : cands)
          if (e.alpha == a && e.best) {
            m["p"] = e.p;
            m["decomposition"] = Json::array();
            for (const auto& part : e.best->parts) m["decomposition"].push_back(quiver.label(part));
            m["decomposition_p"] = e.best->p_sum;
          }
        if (dot(lambda, a) != 0) m["lambda_pairing"] = dot(lambda, a);
        missing.push_back(m);
      }
    for (const auto& a : got)
      if (!std::binary_search(want.begin(), want.end(), a)) extra.push_back(quiver.label(a));
    witness["missing"] = missing;
    witness["unexpected"] = extra;
  }
  rep.add(make_check("quiver.sigma", {{"d", d}}, got == want, witness));

  bool simples = true;
  for (int i = 1; i <= d - 1; ++i) simples = simples && std::binary_search(got.begin(), got.end(), quiver.rho(i));
  rep.add(make_check("quiver.sigma_contains_simples", {{"d", d}}, simples, nullptr));

  const DimVector v = quiver.v();
  Json pv = {{"p_v", quiver.p_value(v)}, {"p_delta_imag", quiver.p_value(quiver.delta_imag())},
             {"lambda_v", dot(lambda, v)}, {"kind_v", to_string(quiver.classify_root(v))}};
  bool ok = quiver.p_value(v) == 2 && quiver.p_value(quiver.delta_imag()) == 1 && dot(lambda, v) == 0 &&
            quiver.classify_root(v) == RootKind::imaginary;
  rep.add(make_check("quiver.v_data", {{"d", d}}, ok, pv));
  return rep;
}

VerificationReport verify_sigma(int d) { return verify_sigma(d, FramedQuiver(d).lambda()); }

std::vector<RepresentationType> representation_types(int d, const std::vector<DimVector>& sigma) {
  FramedQuiver quiver(d);
  std::vector<RepresentationType> out;
  std::vector<std::pair<DimVector, int>> chosen;
  std::function<void(std::size_t, DimVector)> rec = [&](std::size_t idx, DimVector rest) {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
      // imaginary roots may split their multiplicity over non-isomorphic simples
      std::vector<RepresentationType> acc{RepresentationType{}};
      for (const auto& [beta, n] : chosen) {
        std::vector<std::vector<int>> splits{{n}};
        if (quiver.classify_root(beta) == RootKind::imaginary) splits = partitions(n, n);
        std::vector<RepresentationType> next;
        for (const auto& t : acc)
          for (const auto& parts : splits) {
            RepresentationType u = t;
            for (int k : parts) u.entries.emplace_back(beta, k);
            next.push_back(u);
          }
        acc = std::move(next);
      }
      for (auto& t : acc) {
        for (const auto& e : t.entries) t.dimension += 2 * quiver.p_value(e.first);
        canonicalize(t);
        out.push_back(t);
      }
      return;
    }
    if (idx == sigma.size()) return;
    const DimVector& beta = sigma[idx];
    for (int n = 0;; ++n) {
      DimVector r = plus(rest, beta, -n);
      if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) break;
      if (n) chosen.emplace_back(beta, n);
      rec(idx + 1, r);
      if (n) chosen.pop_back();
      if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; })) break;
    }
  };
  rec(0, quiver.v());
  std::sort(out.begin(), out.end(), [](const RepresentationType& a, const RepresentationType& b) {
    return std::tie(a.dimension, a.entries) < std::tie(b.dimension, b.entries);
  });
  return out;
}

std::vector<RepresentationType> representation_types(int d) { return representation_types(d, sigma_lambda(d)); }

std::vector<RepresentationType> expected_types(int d) {
  FramedQuiver quiver(d);
  RepresentationType t0, t2, t4;
  t0.entries = {{zero_leaf_root(quiver), 1}, {quiver.rho(1), 1}, {quiver.rho(d - 1), 1}};
  for (int i = 2; i <= d - 2; ++i) t0.entries.emplace_back(quiver.rho(i), 2);
  t2.entries = {{two_leaf_root(quiver), 1}};
  for (int i = 1; i <= d - 1; ++i) t2.entries.emplace_back(quiver.rho(i), 1);
  t4.entries = {{quiver.v(), 1}};
  t0.dimension = 0, t2.dimension = 2, t4.dimension = 4;
  for (auto* t : {&t0, &t2, &t4}) canonicalize(*t);
  return {t0, t2, t4};
}

VerificationReport verify_leaves(int d, const std::vector<DimVector>& sigma) {
  if (d < 4) throw std::invalid_argument("verify_leaves: d must be at least 4");
  VerificationReport rep;
  FramedQuiver quiver(d);
  const auto types = representation_types(d, sigma);
  const auto want = expected_types(d);
  Json listed = Json::array();
  for (const auto& t : types) listed.push_back(type_json(quiver, t));

  rep.add(make_check("quiver.leaves.count", {{"d", d}}, types.size() == 3, {{"count", types.size()}}));
  bool same = types.size() == want.size();
  for (std::size_t i = 0; same && i < types.size(); ++i)
    same = types[i].entries == want[i].entries && types[i].dimension == want[i].dimension;
  rep.add(make_check("quiver.leaves.types", {{"d", d}}, same,
                     {{"types", listed}, {"dimension_convention", "sum of 2p(beta) over entries"}}));

  std::vector<int> dims;
  for (const auto& t : types) dims.push_back(t.dimension);
  rep.add(make_check("quiver.leaves.dimensions", {{"d", d}}, dims == std::vector<int>{0, 2, 4}, {{"dimensions", dims}}));

  // real roots sit in a single entry
  bool real_once = true;
  for (const auto& t : types)
    for (std::size_t i = 1; i < t.entries.size(); ++i)
      if (t.entries[i].first == t.entries[i - 1].first && quiver.classify_root(t.entries[i].first) == RootKind::real)
        real_once = false;
  rep.add(make_check("quiver.leaves.real_roots_once", {{"d", d}}, real_once, nullptr));
  return rep;
}

VerificationReport verify_leaves(int d) { return verify_leaves(d, sigma_lambda(d)); }

VerificationReport local_quiver_data(int d) {
  if (d < 4) throw std::invalid_argument("local_quiver_data: d must be at least 4");
  VerificationReport rep;
  FramedQuiver quiver(d);
  const Json params = {{"d", d}};

  // the zero-dimensional leaf, as enumerated
  std::optional<RepresentationType> t0;
  for (const auto& t : representation_types(d))
    if (t.dimension == 0) t0 = t;
  if (!t0) {
    rep.add(make_check("quiver.local.zero_leaf", params, false, {{"reason", "no zero-dimensional representation type"}}));
    return rep;
  }
  DimVector framing_dim;
  std::vector<int> v_loc(static_cast<std::size_t>(d - 1), 0);
  bool shape_ok = true;
  for (const auto& [beta, n] : t0->entries) {
    if (beta[0] == 1) {
      framing_dim = beta;
      shape_ok = shape_ok && n == 1;
      continue;
    }
    int vertex = -1;
    for (int i = 1; i <= d - 1; ++i)
      if (beta == quiver.rho(i)) vertex = i;
    if (vertex < 0) shape_ok = false;
    else v_loc[vertex - 1] = n;
  }
  rep.add(make_check("quiver.local.zero_leaf", params, shape_ok && !framing_dim.empty(),
                     {{"framing_summand", framing_dim.empty() ? Json(nullptr) : Json(quiver.label(framing_dim))}}));
  if (framing_dim.empty()) return rep;

  // arrows between summands, loops, framing
  const std::size_t m = static_cast<std::size_t>(d - 1);
  std::vector<std::vector<int>> arrows(m, std::vector<int>(m, 0));
  bool type_a = true, loops = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (quiver.p_value(quiver.rho(static_cast<int>(i) + 1)) != 0) loops = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      arrows[i][j] = -quiver.form(quiver.rho(static_cast<int>(i) + 1), quiver.rho(static_cast<int>(j) + 1));
      if (arrows[i][j] != ((i + 1 == j || j + 1 == i) ? 1 : 0)) type_a = false;
    }
  }
  rep.add(make_check("quiver.local.type_A", params, type_a && !loops, {{"arrows", arrows}, {"loops", loops}}));

  std::vector<int> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = -quiver.form(framing_dim, quiver.rho(static_cast<int>(i) + 1));
  if (d >= 5) {
    std::vector<int> want(m, 0);
    want[1] += 1;
    want[d - 3] += 1;
    rep.add(make_check("quiver.local.framing", params, w == want, {{"w", w}}));
  }
  std::vector<int> v_want(m, 2);
  v_want.front() = v_want.back() = 1;
  rep.add(make_check("quiver.local.dimension_vector", params, v_loc == v_want, {{"v", v_loc}}));

  // 2 sum v_i w_i - (v, v) with the Cartan form of the local quiver
  long vw = 0, vv = 0;
  for (std::size_t i = 0; i < m; ++i) {
    vw += long(v_loc[i]) * w[i];
    vv += 2L * v_loc[i] * v_loc[i];
    for (std::size_t j = 0; j < m; ++j) vv -= long(v_loc[i]) * arrows[i][j] * v_loc[j];
  }
  long dim = 2 * vw - vv;
  rep.add(make_check("quiver.local.variety_dimension", params, dim == 4,
                     {{"dimension", dim}, {"vw", vw}, {"vv", vv}}));

  // partitions lambda = (d-2, 2), mu = (d): w counts parts of lambda, v from column partial sums
  const std::vector<int> lam{d - 2, 2}, mu{d};
  std::vector<int> w_part(m, 0), v_part(m, 0);
  for (int part : lam)
    if (part >= 1 && part <= d - 1) w_part[part - 1] += 1;
  for (std::size_t i = 1; i <= m; ++i) {
    int s = 0;
    for (int part : lam) s += std::min<int>(static_cast<int>(i), part);
    for (int part : mu) s -= std::min<int>(static_cast<int>(i), part);
    v_part[i - 1] = s;
  }
  bool dominated = true;
  int sl = 0, sm = 0;
  for (std::size_t k = 0; k < 2; ++k) {
    sl += lam[k];
    sm += k < mu.size() ? mu[k] : 0;
    if (sl > sm) dominated = false;
  }
  bool partition_ok = w_part == w && v_part == v_loc && dominated;
  rep.add(make_check("quiver.local.partitions", params, partition_ok,
                     {{"lambda", lam}, {"mu", mu}, {"w_from_lambda", w_part}, {"v_from_partitions", v_part},
                      {"w", w}, {"v", v_loc}, {"lambda_dominated_by_mu", dominated}}));
  return rep;
}

Json quiver_export(int d) {
  FramedQuiver quiver(d);
  Json sigma = Json::array();
  const auto members = sigma_lambda(d);
  for (const auto& a : members) {
    Json e = to_json(quiver, a);
    e["p"] = quiver.p_value(a);
    e["kind"] = to_string(quiver.classify_root(a));
    sigma.push_back(e);
  }
  Json types = Json::array();
  for (const auto& t : representation_types(d, members)) types.push_back(type_json(quiver, t));
  Json local = Json::object();
  const VerificationReport local_rep = local_quiver_data(d);
  for (const auto& c : local_rep.checks()) local[c.id] = c.witness;
  return {{"d", d},
          {"vertices", "index 0 is rho_inf, index 1 + i is rho_i"},
          {"v", to_json(quiver, quiver.v())},
          {"lambda", quiver.lambda()},
          {"sigma", sigma},
          {"representation_types", types},
          {"local_quiver", local}};
}

}  // namespace symsing::quiver

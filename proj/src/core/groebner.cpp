#include "symsing/core/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace symsing {

int MonomialOrder::compare(const Exponents& a, const Exponents& b, const PolyRing& ring) const {
  const std::size_t n = a.size();
  auto at = [&](const Exponents& e, std::size_t i) -> long { return permutation.empty() ? e[i] : e[permutation[i]]; };
  auto weight = [&](std::size_t i) -> long {
    std::size_t v = permutation.empty() ? i : permutation[i];
    if (kind == Kind::weighted_revlex) return weights.empty() ? ring.var(v).weight : weights[v];
    return 1;
  };
  if (kind != Kind::lex) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      da += at(a, i) * weight(i);
      db += at(b, i) * weight(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > 0;)
      if (at(a, i) != at(b, i)) return at(a, i) > at(b, i) ? -1 : 1;
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (at(a, i) != at(b, i)) return at(a, i) < at(b, i) ? -1 : 1;
  return 0;
}

namespace {

using Term = std::pair<Exponents, Rational>;

// Terms sorted by strictly decreasing monomial.
struct GPoly {
  std::vector<Term> terms;
  long sugar = 0;
  bool zero() const { return terms.empty(); }
  const Exponents& lm() const { return terms.front().first; }
};

long total_degree(const Exponents& e) {
  long d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class Engine {
 public:
  Engine(RingPtr ring, const MonomialOrder& order, const Budget& budget)
      : ring_(std::move(ring)), order_(order), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  int cmp(const Exponents& a, const Exponents& b) const { return order_.compare(a, b, *ring_); }

  GPoly from_poly(const QPoly& p) const {
    GPoly g;
    g.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return cmp(a.first, b.first) > 0; });
    for (const auto& t : g.terms) g.sugar = std::max(g.sugar, total_degree(t.first));
    return g;
  }

  QPoly to_poly(const GPoly& g) const {
    QPoly p(ring_);
    for (const auto& [e, c] : g.terms) p.add_term(e, c);
    return p;
  }

  static void make_monic(GPoly& g) {
    if (g.zero()) return;
    Rational inv = inverse(g.terms.front().second);
    if (inv == 1) return;
    for (auto& t : g.terms) t.second *= inv;
  }

  // a - c * m * b, both sorted.
  std::vector<Term> sub_scaled(const std::vector<Term>& a, const Rational& c, const Exponents& m,
                               const std::vector<Term>& b) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Exponents shifted(m.size());
    auto shift = [&](const Exponents& e) {
      for (std::size_t k = 0; k < e.size(); ++k) shifted[k] = static_cast<std::uint16_t>(e[k] + m[k]);
    };
    bool have = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have) {
        shift(b[j].first);
        have = true;
      }
      int s = (i == a.size()) ? -1 : (j == b.size() ? 1 : cmp(a[i].first, shifted));
      if (s > 0) {
        out.push_back(a[i++]);
      } else if (s < 0) {
        out.emplace_back(shifted, -(c * b[j].second));
        ++j;
        have = false;
      } else {
        Rational v = a[i].second - c * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
        have = false;
      }
    }
    return out;
  }

  // Full reduction: every term of the result is irreducible by the leading monomials of basis.
  GPoly reduce(GPoly p, const std::vector<GPoly>& basis, std::size_t skip = SIZE_MAX) {
    std::vector<Term> done;
    while (!p.terms.empty()) {
      const Exponents& lead = p.terms.front().first;
      const GPoly* div = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].zero()) continue;
        if (divides(basis[k].lm(), lead)) {
          div = &basis[k];
          break;
        }
      }
      if (!div) {
        done.push_back(std::move(p.terms.front()));
        p.terms.erase(p.terms.begin());
        continue;
      }
      Exponents m = quotient(lead, div->lm());
      Rational c = p.terms.front().second / div->terms.front().second;
      p.sugar = std::max(p.sugar, div->sugar + total_degree(m));
      p.terms = sub_scaled(p.terms, c, m, div->terms);
      check_budget(p.terms.size() + done.size());
    }
    p.terms = std::move(done);
    return p;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    Exponents l = lcm_of(f.lm(), g.lm());
    Exponents mf = quotient(l, f.lm()), mg = quotient(l, g.lm());
    std::vector<Term> a;
    a.reserve(f.terms.size());
    Rational cf = inverse(f.terms.front().second);
    for (const auto& [e, c] : f.terms) {
      Exponents s(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) s[k] = static_cast<std::uint16_t>(e[k] + mf[k]);
      a.emplace_back(std::move(s), c * cf);
    }
    GPoly r;
    r.terms = sub_scaled(a, inverse(g.terms.front().second), mg, g.terms);
    r.sugar = std::max(f.sugar + total_degree(mf), g.sugar + total_degree(mg));
    return r;
  }

  void check_budget(std::size_t terms) {
    if (terms > budget_.max_terms) throw BudgetExceeded("groebner: polynomial exceeds max_terms");
    if (++ticks_ % 256 == 0) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (secs > budget_.max_seconds) throw BudgetExceeded("groebner: time budget exhausted");
    }
  }

  std::vector<QPoly> run(const std::vector<QPoly>& gens) {
    std::vector<GPoly> G;
    struct Pair {
      std::size_t i, j;
      Exponents lcm;
      long sugar;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto is_constant = [](const GPoly& g) { return total_degree(g.lm()) == 0; };

    auto add = [&](GPoly h) -> bool {
      make_monic(h);
      if (is_constant(h)) return true;
      std::size_t n = G.size();
      G.push_back(std::move(h));
      if (G.size() > budget_.max_basis) throw BudgetExceeded("groebner: basis exceeds max_basis");
      for (std::size_t i = 0; i < n; ++i) {
        if (G[i].zero()) continue;
        Exponents l = lcm_of(G[i].lm(), G[n].lm());
        long s = std::max(G[i].sugar + total_degree(quotient(l, G[i].lm())),
                          G[n].sugar + total_degree(quotient(l, G[n].lm())));
        pairs.push_back({i, n, std::move(l), s});
        pending.insert({i, n});
      }
      return false;
    };

    for (const auto& p : gens) {
      if (p.is_zero()) continue;
      GPoly h = reduce(from_poly(p), G);
      if (h.zero()) continue;
      if (add(std::move(h))) return {QPoly(ring_, Rational(1))};
    }

    while (!pairs.empty()) {
      auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
      });
      Pair pr = *best;
      pairs.erase(best);
      pending.erase({pr.i, pr.j});

      const GPoly& f = G[pr.i];
      const GPoly& g = G[pr.j];
      if (coprime(f.lm(), g.lm())) continue;
      bool chain = false;
      for (std::size_t k = 0; k < G.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j || G[k].zero()) continue;
        if (!divides(G[k].lm(), pr.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
      }
      if (chain) continue;
      GPoly h = reduce(spoly(f, g), G);
      if (h.zero()) continue;
      if (add(std::move(h))) return {QPoly(ring_, Rational(1))};
    }

    // minimize, then reduce the tails
    std::vector<GPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j) continue;
        if (divides(G[j].lm(), G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(G[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      GPoly head;
      head.terms.push_back(minimal[i].terms.front());
      GPoly tail;
      tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
      tail = reduce(std::move(tail), minimal, i);
      head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
      head.sugar = minimal[i].sugar;
      make_monic(head);
      minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const GPoly& a, const GPoly& b) { return cmp(a.lm(), b.lm()) < 0; });
    std::vector<QPoly> out;
    for (const auto& g : minimal) out.push_back(to_poly(g));
    return out;
  }

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  unsigned long ticks_ = 0;
};

RingPtr ring_of(const std::vector<QPoly>& polys) {
  for (const auto& p : polys)
    if (p.ring()) return p.ring();
  return nullptr;
}

}  // namespace

std::vector<QPoly> groebner_basis(const std::vector<QPoly>& gens, const MonomialOrder& order, const Budget& budget) {
  RingPtr ring = ring_of(gens);
  if (!ring) return {};
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("groebner_basis: generators from different rings");
  Engine engine(ring, order, budget);
  auto basis = engine.run(gens);
  if (!is_groebner(basis, order)) throw std::logic_error("groebner_basis: result failed the S-pair check");
  return basis;
}

QPoly normal_form(const QPoly& p, const std::vector<QPoly>& basis, const MonomialOrder& order) {
  if (p.is_zero() || basis.empty()) return p;
  Engine engine(p.ring(), order, Budget{SIZE_MAX, SIZE_MAX, 1e300});
  std::vector<GPoly> G;
  for (const auto& b : basis) G.push_back(engine.from_poly(b));
  return engine.to_poly(engine.reduce(engine.from_poly(p), G));
}

bool is_groebner(const std::vector<QPoly>& basis, const MonomialOrder& order) {
  RingPtr ring = ring_of(basis);
  if (!ring) return true;
  Engine engine(ring, order, Budget{SIZE_MAX, SIZE_MAX, 1e300});
  std::vector<GPoly> G;
  for (const auto& b : basis) {
    if (b.is_zero()) return false;
    G.push_back(engine.from_poly(b));
  }
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!engine.reduce(engine.spoly(G[i], G[j]), G).zero()) return false;
  return true;
}

bool ideal_contains(const std::vector<QPoly>& gens, const QPoly& p, const MonomialOrder& order, const Budget& budget) {
  if (p.is_zero()) return true;
  auto basis = groebner_basis(gens, order, budget);
  return normal_form(p, basis, order).is_zero();
}

bool is_unit_ideal(const std::vector<QPoly>& basis) {
  for (const auto& b : basis)
    if (!b.is_zero() && b.num_terms() == 1 && b.terms().begin()->first == Exponents(b.ring()->size(), 0)) return true;
  return false;
}

Exponents leading_monomial(const QPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || order.compare(e, *best, *p.ring()) > 0) best = &e;
  return *best;
}

std::optional<std::vector<Exponents>> standard_monomials(const std::vector<QPoly>& basis, std::size_t nvars,
                                                         const MonomialOrder& order) {
  std::vector<Exponents> leads;
  for (const auto& b : basis) leads.push_back(leading_monomial(b, order));
  // finite iff every variable has a pure power among the leading monomials
  std::vector<unsigned> bound(nvars, 0);
  for (const auto& l : leads) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (l[i]) {
        ++support;
        var = i;
      }
    if (support == 0) return std::vector<Exponents>{};
    if (support == 1 && (bound[var] == 0 || l[var] < bound[var])) bound[var] = l[var];
  }
  for (unsigned b : bound)
    if (b == 0) return std::nullopt;
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto reducible = [&](const Exponents& e) {
    for (const auto& l : leads)
      if (divides(l, e)) return true;
    return false;
  };
  // depth-first walk over the order ideal; multiples of a reducible monomial are reducible
  std::vector<Exponents> stack{cur};
  std::set<Exponents> seen{cur};
  while (!stack.empty()) {
    Exponents e = stack.back();
    stack.pop_back();
    if (reducible(e)) continue;
    out.push_back(e);
    for (std::size_t i = 0; i < nvars; ++i) {
      Exponents f = e;
      ++f[i];
      if (seen.insert(f).second) stack.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), degrevlex_greater);
  return out;
}

std::optional<std::size_t> quotient_dimension(const std::vector<QPoly>& gens, const MonomialOrder& order,
                                              const Budget& budget) {
  RingPtr ring = ring_of(gens);
  if (!ring) return std::nullopt;
  auto basis = groebner_basis(gens, order, budget);
  auto st = standard_monomials(basis, ring->size(), order);
  if (!st) return std::nullopt;
  return st->size();
}

}  // namespace symsing

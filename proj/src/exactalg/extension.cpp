#include "kkth/exactalg/extension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "kkth/errors.hpp"

namespace kkth::exactalg {

namespace {

std::map<Integer, unsigned> factorize(Integer n) {
  std::map<Integer, unsigned> out;
  for (Integer p = 2; p * p <= n; ++p) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  while (sgn(n) != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

Partition primary_type(const FgAbGroup& g, const Integer& p) {
  Partition t;
  for (const auto& d : g.invariant_factors()) {
    unsigned v = valuation(d, p);
    if (v) t.push_back(v);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

unsigned size_of(const Partition& p) {
  unsigned s = 0;
  for (unsigned x : p) s += x;
  return s;
}

unsigned part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool lr_coefficient_positive(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (size_of(lambda) != size_of(mu) + size_of(nu)) return false;
  if (mu.size() > lambda.size()) return false;
  for (std::size_t r = 0; r < mu.size(); ++r)
    if (mu[r] > lambda[r]) return false;

  // Cells of lambda/mu in reverse reading order: rows top to bottom, right to left.
  std::vector<std::pair<std::size_t, unsigned>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (unsigned c = lambda[r]; c-- > part(mu, r);) cells.emplace_back(r, c);
  if (cells.empty()) return true;

  std::map<std::pair<std::size_t, unsigned>, unsigned> filled;
  std::vector<unsigned> used(nu.size() + 1, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == cells.size()) return true;
    auto [r, c] = cells[idx];
    unsigned hi = static_cast<unsigned>(nu.size());
    if (c + 1 < lambda[r]) hi = std::min(hi, filled[{r, c + 1}]);
    unsigned lo = 1;
    if (r > 0 && c >= part(mu, r - 1) && c < lambda[r - 1]) lo = filled[{r - 1, c}] + 1;
    for (unsigned v = lo; v <= hi; ++v) {
      if (used[v] >= nu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      filled[{r, c}] = v;
      if (place(idx + 1)) return true;
      --used[v];
    }
    filled.erase({r, c});
    return false;
  };
  return place(0);
}

std::vector<FgAbGroup> extension_candidates(const FgAbGroup& sub, const FgAbGroup& quot,
                                            const Integer& bound) {
  if (!sub.is_finite() || !quot.is_finite()) {
    throw InfiniteInput("extension of groups with free part");
  }
  const Integer order = sub.order() * quot.order();
  if (order > bound) {
    throw BoundExceeded("extension order " + order.get_str() + " exceeds " + bound.get_str());
  }

  // Per prime, the admissible p-power cyclic decompositions.
  std::vector<std::vector<std::vector<Integer>>> choices;
  for (const auto& [p, e] : factorize(order)) {
    Partition mu = primary_type(sub, p);
    Partition nu = primary_type(quot, p);
    std::vector<std::vector<Integer>> here;
    for (const auto& lambda : partitions_of(e)) {
      if (!lr_coefficient_positive(lambda, mu, nu)) continue;
      std::vector<Integer> cyc;
      for (unsigned x : lambda) {
        Integer q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), x);
        cyc.push_back(q);
      }
      here.push_back(cyc);
    }
    choices.push_back(here);
  }

  std::set<FgAbGroup> found;
  std::vector<Integer> cur;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == choices.size()) {
      found.insert(FgAbGroup::from_invariants(cur, 0));
      return;
    }
    for (const auto& cyc : choices[i]) {
      const std::size_t keep = cur.size();
      cur.insert(cur.end(), cyc.begin(), cyc.end());
      combine(i + 1);
      cur.resize(keep);
    }
  };
  combine(0);
  return {found.begin(), found.end()};
}

}  // namespace kkth::exactalg

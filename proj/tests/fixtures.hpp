#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "kkth/kgraph.hpp"

namespace fixtures {

using kkth::exactalg::IntMatrix;
using kkth::kgraph::KGraphSpec;

inline KGraphSpec make_spec(std::vector<IntMatrix> ms, std::vector<std::size_t> involution) {
  KGraphSpec s;
  s.k = ms.size();
  for (std::size_t v = 0; v < involution.size(); ++v) s.vertices.push_back("v" + std::to_string(v + 1));
  s.matrices = std::move(ms);
  s.involution = std::move(involution);
  return s;
}

// Single vertex, n loops of color 1 and m loops of color 2.
inline KGraphSpec one_vertex(long m, long n) {
  return make_spec({IntMatrix::from_rows({{n}}), IntMatrix::from_rows({{m}})}, {0});
}

inline IntMatrix symmetric_family(long n) {
  return IntMatrix::from_rows({{1, 1, 1}, {1, 0, n - 1}, {1, n - 1, 0}});
}

// Both colors equal, vertices 2 and 3 swapped.
inline KGraphSpec three_vertex_equal(long n) {
  return make_spec({symmetric_family(n), symmetric_family(n)}, {0, 2, 1});
}

// Second color differs from the first.
inline KGraphSpec three_vertex_mixed(long n) {
  return make_spec({symmetric_family(n), IntMatrix::from_rows({{1, 1, 1}, {1, n - 1, 0}, {1, 0, n - 1}})},
                   {0, 2, 1});
}

inline std::vector<std::size_t> random_involution(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> order(n), inv(n);
  std::iota(order.begin(), order.end(), 0);
  std::iota(inv.begin(), inv.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    if (coin(rng)) {
      inv[order[i]] = order[i + 1];
      inv[order[i + 1]] = order[i];
    }
  }
  return inv;
}

// Colors are nonnegative polynomials in a gamma-symmetric matrix X and the
// permutation matrix P, so they commute with each other and with P.
inline KGraphSpec random_spec(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  std::vector<std::size_t> inv = random_involution(rng, n);
  IntMatrix p(n, n);
  for (std::size_t v = 0; v < n; ++v) p(inv[v], v) = 1;
  std::uniform_int_distribution<long> entry(0, 2);
  IntMatrix y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(i, j) = entry(rng);
  IntMatrix x = y + p * y * p;
  IntMatrix x2 = x * x;
  std::uniform_int_distribution<long> coef(0, 2);
  std::vector<IntMatrix> ms;
  for (std::size_t i = 0; i < k; ++i) {
    long a = coef(rng), b = coef(rng), c = coef(rng) / 2, d = coef(rng), e = coef(rng) / 2;
    if (a + d == 0) a = 1;
    IntMatrix m = kkth::exactalg::Integer(a) * IntMatrix::identity(n) + kkth::exactalg::Integer(b) * x +
                  kkth::exactalg::Integer(c) * x2 + kkth::exactalg::Integer(d) * p +
                  kkth::exactalg::Integer(e) * (p * x);
    ms.push_back(m);
  }
  return make_spec(std::move(ms), std::move(inv));
}

}  // namespace fixtures

#include "kkth/koszul.hpp"

#include <algorithm>

#include "kkth/errors.hpp"

namespace kkth::koszul {

const char* part_name(Part p) { return p == Part::Real ? "real" : "complex"; }

std::vector<std::vector<std::size_t>> index_set(std::size_t k, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > k) return out;
  std::vector<std::size_t> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == k - (p - i)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

GradedChainComplex koszul_complex(const FgAbGroup& a, const std::vector<IntMatrix>& rho, int degree,
                                  Part part) {
  const std::size_t k = rho.size();
  const std::size_t n = a.ambient_rank();
  GradedChainComplex cx;
  cx.degree = degree;
  cx.part = part;
  cx.k = k;
  std::vector<std::vector<std::vector<std::size_t>>> sets;
  for (std::size_t p = 0; p <= k; ++p) {
    sets.push_back(index_set(k, p));
    cx.groups.push_back(FgAbGroup::direct_sum(std::vector<FgAbGroup>(sets[p].size(), a)));
  }
  cx.boundaries.push_back(GroupHom::zero(cx.groups[0], FgAbGroup()));
  for (std::size_t p = 1; p <= k; ++p) {
    const auto& rows = sets[p - 1];
    const auto& cols = sets[p];
    IntMatrix d(rows.size() * n, cols.size() * n);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& mu = cols[c];
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<std::size_t> lambda = mu;
        lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
        const std::size_t r = static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), lambda) - rows.begin());
        const IntMatrix& block = rho.at(mu[i] - 1);
        const long sign = (i % 2 == 0) ? 1 : -1;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) d(r * n + x, c * n + y) = sign * block(x, y);
      }
    }
    cx.boundaries.push_back(GroupHom(cx.groups[p], cx.groups[p - 1], d));
  }
  cx.boundaries.push_back(GroupHom::zero(FgAbGroup(), cx.groups[k]));
  if (!verify_square_zero(cx).pass()) throw CompositionNotZero("Koszul boundary in degree " + std::to_string(degree));
  return cx;
}

GradedChainComplex build_complex(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                                 int degree, Part which) {
  const crmod::GradedGroupA a = crmod::build_graded_group(part);
  std::vector<IntMatrix> rho;
  for (std::size_t i = 0; i < spec.k; ++i) {
    crmod::RhoMap r = crmod::build_rho(spec, part, i);
    rho.push_back(which == Part::Real ? r.real.at(static_cast<std::size_t>(degree))
                                      : r.complex.at(static_cast<std::size_t>(degree)));
  }
  const FgAbGroup& g = which == Part::Real ? a.real.at(static_cast<std::size_t>(degree))
                                           : a.complex.at(static_cast<std::size_t>(degree));
  return koszul_complex(g, rho, degree, which);
}

SquareZeroReport verify_square_zero(const GradedChainComplex& cx) {
  SquareZeroReport report;
  for (std::size_t p = 0; p + 1 < cx.boundaries.size(); ++p) {
    const GroupHom& lo = cx.boundaries[p];
    const GroupHom& hi = cx.boundaries[p + 1];
    IntMatrix both = lo.matrix() * hi.matrix();
    bool zero = true;
    for (std::size_t j = 0; j < both.cols() && zero; ++j) zero = lo.target().is_zero(both.column(j));
    if (!zero) report.failing.push_back(p);
  }
  return report;
}

}  // namespace kkth::koszul

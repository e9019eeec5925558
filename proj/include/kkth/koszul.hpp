#pragma once

#include <string>
#include <vector>

#include "kkth/crmod.hpp"
#include "kkth/exactalg/abelian_group.hpp"
#include "kkth/kgraph.hpp"

namespace kkth::koszul {

using exactalg::FgAbGroup;
using exactalg::GroupHom;
using exactalg::IntMatrix;

enum class Part { Real, Complex };

const char* part_name(Part p);

// Strictly increasing p-tuples from {1..k}, lexicographic.
std::vector<std::vector<std::size_t>> index_set(std::size_t k, std::size_t p);

struct GradedChainComplex {
  int degree = 0;
  Part part = Part::Real;
  std::size_t k = 0;
  std::vector<FgAbGroup> groups;      // C_0 .. C_k
  std::vector<GroupHom> boundaries;   // boundaries[p] : C_p -> C_{p-1}, p = 0..k+1 (ends are zero maps)

  const GroupHom& boundary(std::size_t p) const { return boundaries.at(p); }
};

// The block formula for an arbitrary family of commuting endomorphisms of one group.
GradedChainComplex koszul_complex(const FgAbGroup& a, const std::vector<IntMatrix>& rho, int degree,
                                  Part part);

GradedChainComplex build_complex(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                                 int degree, Part which);

struct SquareZeroReport {
  std::vector<std::size_t> failing;  // p with d_p d_{p+1} != 0
  bool pass() const { return failing.empty(); }
};

SquareZeroReport verify_square_zero(const GradedChainComplex& cx);

}  // namespace kkth::koszul

#pragma once

#include <array>
#include <string>
#include <vector>

#include "kkth/exactalg/abelian_group.hpp"
#include "kkth/kgraph.hpp"

namespace kkth::crmod {

using exactalg::FgAbGroup;
using exactalg::GroupHom;
using exactalg::IntMatrix;

// One free CR-module building block, degrees 0..7.
// eta[n]: KO_n -> KO_{n+1}, c[n]: KO_n -> KU_n, r[n]: KU_n -> KO_n, psi[n]: KU_n -> KU_n.
struct CrBlock {
  std::string name;
  std::array<FgAbGroup, 8> ko;
  std::array<FgAbGroup, 8> ku;
  std::array<IntMatrix, 8> eta, c, r, psi;
};

struct CrBlockTables {
  CrBlock real;     // K^CR of the reals
  CrBlock complex;  // K^CR of the complex numbers
};

CrBlockTables standard_tables();

struct RelationCheck {
  std::string block;
  std::string relation;
  int degree = 0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
  std::vector<RelationCheck> failures() const;
};

RelationReport check_cr_relations(const CrBlockTables& tables);

// A = K^CR(R)^{G_f} + K^CR(C)^{G_1}.
struct GradedGroupA {
  std::size_t f = 0;
  std::size_t g1 = 0;
  std::array<FgAbGroup, 8> real;
  std::array<FgAbGroup, 2> complex;
};

GradedGroupA build_graded_group(const kgraph::VertexPartition& part);

struct RhoMap {
  std::size_t color = 0;
  std::array<IntMatrix, 8> real;
  std::array<IntMatrix, 2> complex;

  GroupHom real_hom(const GradedGroupA& a, int degree) const;
  GroupHom complex_hom(const GradedGroupA& a, int degree) const;
};

RhoMap build_rho(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                 std::size_t color);

// Degree-0 involution on the complex part: swaps each (v, gamma v) coordinate pair.
GroupHom psi_on_A(const kgraph::VertexPartition& part);

// Degree-0 complexification A_0^O -> A_0^U.
IntMatrix complexification_degree0(const kgraph::VertexPartition& part);

}  // namespace kkth::crmod

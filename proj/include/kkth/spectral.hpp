#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kkth/exactalg/extension.hpp"
#include "kkth/exactalg/homology.hpp"
#include "kkth/koszul.hpp"
#include "kkth/kgraph.hpp"

namespace kkth::spectral {

using exactalg::FgAbGroup;
using exactalg::GroupHom;
using exactalg::HomologyGroup;
using exactalg::Integer;
using koszul::Part;

inline int period(Part p) { return p == Part::Real ? 8 : 2; }
inline int wrap(int q, int m) { return ((q % m) + m) % m; }

struct E2Page {
  std::size_t k = 0;
  std::array<std::vector<HomologyGroup>, 8> real;     // real[j][p]
  std::array<std::vector<HomologyGroup>, 2> complex;  // complex[j][p]
  std::array<koszul::GradedChainComplex, 8> real_complexes;
  std::array<koszul::GradedChainComplex, 2> complex_complexes;

  // Periodic lookup; zero outside 0..k.
  FgAbGroup cell(Part part, int p, int q) const;
};

E2Page compute_e2(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part);

struct Cell {
  int p = 0;
  int q = 0;
  friend bool operator==(const Cell& a, const Cell& b) { return a.p == b.p && a.q == b.q; }
};

struct DifferentialEntry {
  int r = 2;
  Part part = Part::Real;
  Cell source;
  Cell target;
};

struct DifferentialReport {
  std::vector<DifferentialEntry> entries;
  bool empty() const { return entries.empty(); }
  std::vector<DifferentialEntry> of(Part part) const;
};

DifferentialReport differential_report(const E2Page& page);

enum class DiagonalStatus { Determined, ExtensionAmbiguous, D2Ambiguous };
const char* status_name(DiagonalStatus s);

struct DiagonalVariant {
  std::string label;               // "d2=0" or "d2≠0"
  std::vector<FgAbGroup> factors;  // indexed by filtration degree p
  std::vector<FgAbGroup> candidates;
  bool complete = true;            // false when candidates could not be enumerated
  std::string note;
};

struct DiagonalAssembly {
  Part part = Part::Real;
  int degree = 0;
  DiagonalStatus status = DiagonalStatus::Determined;
  std::vector<DiagonalVariant> variants;

  // The single candidate when every variant agrees on one group.
  std::optional<FgAbGroup> determined() const;
};

struct AssemblyOptions {
  Integer ext_bound = exactalg::kDefaultExtensionBound;
};

std::vector<DiagonalAssembly> assemble_diagonals(const E2Page& page, const DifferentialReport& report,
                                                 const AssemblyOptions& opts = {});

struct KuData {
  std::array<FgAbGroup, 8> ku;
  std::array<GroupHom, 8> psi;
  std::array<int, 8> filtration{};  // p of the factor carrying KU_q
};

// Throws AmbiguousComplexPart unless every complex diagonal has one nonzero
// factor and no complex differential can be nonzero.
KuData compute_ku_with_psi(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                           const E2Page& page, const DifferentialReport& report);

std::array<FgAbGroup, 8> compute_mu(const KuData& ku);

// Core long exact sequence, at the level of Z_2-ranks:
//   eta'_i : MO_i -> MO_{i+1},  c'_i : MO_i -> MU_{i-1},  r'_i : MU_i -> MO_{i-2}.
enum class Arrow { Eta, C, R };
const char* arrow_name(Arrow a);

enum class ArrowProperty { Zero, Injective, Surjective };

struct ArrowConstraint {
  Arrow arrow = Arrow::Eta;
  int index = 0;
  ArrowProperty property = ArrowProperty::Zero;
};

struct CoreConstraints {
  std::map<int, unsigned> mo_rank;  // known dim MO_q
  std::vector<ArrowConstraint> arrows;
};

struct CoreSolution {
  std::array<unsigned, 8> mo{};
  // Ranks of one consistent choice of arrows.
  std::array<unsigned, 8> eta{}, c{}, r{};
};

struct CoreOptions {
  unsigned bound = 8;
};

std::vector<CoreSolution> enumerate_core_solutions(const std::array<unsigned, 8>& mu_rank,
                                                   const CoreConstraints& constraints,
                                                   const CoreOptions& opts = {});

// Independent re-check of exactness, eta^3 bound and constraints.
bool verify_core_certificate(const std::array<unsigned, 8>& mu_rank, const CoreConstraints& constraints,
                             const CoreSolution& s);

// Z_2-rank of an elementary abelian 2-group; throws NoSolution otherwise.
unsigned elementary_rank(const FgAbGroup& g);

}  // namespace kkth::spectral

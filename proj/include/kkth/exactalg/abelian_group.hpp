#pragma once

#include <string>
#include <vector>

#include "kkth/exactalg/int_matrix.hpp"
#include "kkth/exactalg/smith.hpp"

namespace kkth::exactalg {

// Finitely generated abelian group Z^n / (column span of relations).
//
// Canonical coordinates are the SNF coordinates y = u x with trivial (unit)
// factors dropped: torsion coordinates first, in divisibility order, then the
// free ones.
class FgAbGroup {
 public:
  FgAbGroup();
  FgAbGroup(std::size_t ambient_rank, IntMatrix relations);

  static FgAbGroup free(std::size_t rank);
  static FgAbGroup cyclic(const Integer& n);  // n == 0 gives Z
  static FgAbGroup from_invariants(const std::vector<Integer>& torsion, std::size_t free_rank);
  static FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
  static FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts);

  std::size_t ambient_rank() const noexcept { return n_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const SnfDecomposition& snf() const noexcept { return snf_; }

  const std::vector<Integer>& invariant_factors() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t canonical_rank() const noexcept { return torsion_.size() + free_rank_; }
  bool is_trivial() const noexcept { return canonical_rank() == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  // Product of invariant factors; only meaningful when finite.
  Integer order() const;
  // Largest invariant factor, 0 when infinite, 1 when trivial.
  Integer exponent() const;

  // Canonical coordinates of an ambient element; torsion entries reduced to [0, d).
  IntVector to_canonical(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  bool equal_elements(const IntVector& x, const IntVector& y) const;
  // Ambient representative of the j-th canonical generator.
  IntVector canonical_generator(std::size_t j) const;
  // Order of the j-th canonical generator (0 for free ones).
  Integer generator_order(std::size_t j) const;

  std::string to_string() const;

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.torsion_ == b.torsion_ && a.free_rank_ == b.free_rank_;
  }
  friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }
  // Total order on isomorphism classes.
  friend bool operator<(const FgAbGroup& a, const FgAbGroup& b);

 private:
  std::size_t n_ = 0;
  IntMatrix relations_;
  SnfDecomposition snf_;
  std::vector<std::size_t> coords_;
  std::vector<Integer> torsion_;
  std::size_t free_rank_ = 0;
};

FgAbGroup group_from_presentation(const IntMatrix& relations);

// Homomorphism given by an integer matrix on ambient generators.
class GroupHom {
 public:
  GroupHom() : GroupHom(FgAbGroup(), FgAbGroup(), IntMatrix(0, 0)) {}
  // Throws IllDefinedHom if relations of the source are not sent to zero.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
  static GroupHom identity(const FgAbGroup& g);

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_.apply(x); }
  bool is_zero() const;
  bool equals(const GroupHom& other) const;
  // Matrix with respect to canonical generators, entries reduced in the target.
  IntMatrix canonical_matrix() const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

// g after f
GroupHom compose(const GroupHom& g, const GroupHom& f);

}  // namespace kkth::exactalg

#pragma once

// Element-enumeration reference implementations. Nothing here touches Smith
// normal form; groups are explicit products of cyclic groups.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Elem = std::vector<long>;

struct CyclicProduct {
  std::vector<long> mods;  // Z_{mods[0]} + Z_{mods[1]} + ...

  long order() const;
  std::vector<Elem> elements() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem scale(long s, const Elem& a) const;
  bool is_zero(const Elem& a) const;
  std::int64_t index(const Elem& a) const;
};

// Integer matrix acting on representatives, rows = target coordinates.
using Mat = std::vector<std::vector<long>>;

Elem apply(const Mat& m, const CyclicProduct& tgt, const Elem& x);

// Invariant factors (each >= 2, divisibility chain) of a finite abelian group
// given by its elements and a predicate "k * x lies in the subgroup sub".
// Works on subquotients: members are the elements of the numerator, and
// in_denominator tests membership in the denominator.
std::vector<long> invariant_factors_of_subquotient(
    const std::vector<Elem>& members, long denominator_size,
    const std::vector<Elem>& denominator, const CyclicProduct& ambient);

// ker(d_out) / im(d_in) at the middle group, by listing elements.
std::vector<long> homology(const CyclicProduct& src, const Mat& d_in, const CyclicProduct& mid,
                           const Mat& d_out, const CyclicProduct& tgt);

// Every finite abelian group of order n, as invariant factor chains.
std::vector<std::vector<long>> abelian_groups_of_order(long n);

// Whether the group with invariant factors g has a subgroup of type sub with
// quotient of type quot.
bool has_subgroup_with_quotient(const std::vector<long>& g, const std::vector<long>& sub,
                                const std::vector<long>& quot);

// C2 -d2-> C1 -d1-> C0 with each C_i a product of up to three cyclic groups.
// Returns nothing when some C_i is larger than max_order.
struct Chain {
  CyclicProduct c2, c1, c0;
  Mat d2, d1;
};
std::optional<Chain> random_chain(std::mt19937_64& rng, long max_order);

}  // namespace oracle

#pragma once

#include <vector>

#include "kkth/exactalg/abelian_group.hpp"

namespace kkth::exactalg {

inline const Integer kDefaultExtensionBound = Integer(1) << 16;

// Isomorphism classes of finite abelian G with a subgroup isomorphic to sub
// and quotient isomorphic to quot, sorted ascending.
//
// For each prime the p-primary types are partitions; a group of type lambda
// has such a subgroup/quotient pair of types (mu, nu) exactly when the
// Littlewood-Richardson coefficient c^lambda_{mu nu} is nonzero.
std::vector<FgAbGroup> extension_candidates(const FgAbGroup& sub, const FgAbGroup& quot,
                                            const Integer& bound = kDefaultExtensionBound);

// Exposed for testing.
using Partition = std::vector<unsigned>;
bool lr_coefficient_positive(const Partition& lambda, const Partition& mu, const Partition& nu);
std::vector<Partition> partitions_of(unsigned n);

}  // namespace kkth::exactalg

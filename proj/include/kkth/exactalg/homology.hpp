#pragma once

#include <vector>

#include "kkth/exactalg/abelian_group.hpp"

namespace kkth::exactalg {

// Basis (as columns) of {x in Z^n_src : h(x) == 0 in the target}.
IntMatrix kernel_lattice(const GroupHom& h);

struct HomologyGroup {
  FgAbGroup group;  // presented on the kernel-lattice basis
  IntMatrix lift;   // kernel-lattice basis in ambient coordinates of the middle group

  // Ambient representative of the j-th canonical generator of group.
  IntVector lift_generator(std::size_t j) const;
};

// ker(d_out) / im(d_in)
HomologyGroup homology(const GroupHom& d_in, const GroupHom& d_out);

// Map induced on subquotients by f : middle(src) -> middle(tgt).
GroupHom induced_hom(const GroupHom& f, const HomologyGroup& src, const HomologyGroup& tgt);

FgAbGroup kernel_group(const GroupHom& h);
FgAbGroup cokernel_group(const GroupHom& h);
FgAbGroup image_group(const GroupHom& h);

// Every homomorphism source -> target, as matrices on canonical generators
// (columns are canonical target coordinates). Requires a finite answer: throws
// InfiniteInput if a free source generator meets a free target part, and
// BoundExceeded if the count exceeds bound.
std::vector<GroupHom> enumerate_homs(const FgAbGroup& source, const FgAbGroup& target,
                                     const Integer& bound);

}  // namespace kkth::exactalg

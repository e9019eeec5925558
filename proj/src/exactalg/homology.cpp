#include "kkth/exactalg/homology.hpp"

#include "kkth/errors.hpp"

namespace kkth::exactalg {

namespace {

// Coordinates of every column of y in the basis given by the columns of basis.
IntMatrix coordinates_in(const SnfDecomposition& basis_snf, const IntMatrix& y, const char* what) {
  IntMatrix out(basis_snf.d.cols(), y.cols());
  for (std::size_t j = 0; j < y.cols(); ++j) {
    auto c = solve_integer(basis_snf, y.column(j));
    if (!c) throw CompositionNotZero(std::string(what) + " leaves the kernel lattice");
    for (std::size_t i = 0; i < c->size(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

}  // namespace

IntMatrix kernel_lattice(const GroupHom& h) {
  const std::size_t n = h.source().ambient_rank();
  IntMatrix stacked = hstack(h.matrix(), h.target().relations());
  IntMatrix k = integer_kernel(stacked);
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  std::vector<std::size_t> cols(k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) cols[j] = j;
  return lattice_basis(k.submatrix(rows, cols));
}

IntVector HomologyGroup::lift_generator(std::size_t j) const {
  return lift.apply(group.canonical_generator(j));
}

HomologyGroup homology(const GroupHom& d_in, const GroupHom& d_out) {
  if (d_in.target().ambient_rank() != d_out.source().ambient_rank()) {
    throw DimensionMismatch("homology: middle groups differ");
  }
  IntMatrix both = d_out.matrix() * d_in.matrix();
  for (std::size_t j = 0; j < both.cols(); ++j) {
    if (!d_out.target().is_zero(both.column(j))) throw CompositionNotZero();
  }
  IntMatrix k = kernel_lattice(d_out);
  SnfDecomposition ksnf = smith_normal_form(k);
  IntMatrix rel = hstack(coordinates_in(ksnf, d_in.matrix(), "image"),
                         coordinates_in(ksnf, d_out.source().relations(), "relation"));
  return HomologyGroup{FgAbGroup(k.cols(), rel), k};
}

GroupHom induced_hom(const GroupHom& f, const HomologyGroup& src, const HomologyGroup& tgt) {
  if (f.matrix().cols() != src.lift.rows() || f.matrix().rows() != tgt.lift.rows()) {
    throw DimensionMismatch("induced_hom: map does not match the middle groups");
  }
  IntMatrix images = f.matrix() * src.lift;
  SnfDecomposition ksnf = smith_normal_form(tgt.lift);
  IntMatrix m(tgt.lift.cols(), src.lift.cols());
  for (std::size_t j = 0; j < images.cols(); ++j) {
    auto c = solve_integer(ksnf, images.column(j));
    if (!c) throw NotChainMap("a cycle is sent outside the target kernel");
    for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
  }
  try {
    return GroupHom(src.group, tgt.group, m);
  } catch (const IllDefinedHom&) {
    throw NotChainMap("a boundary is not sent to a boundary");
  }
}

FgAbGroup kernel_group(const GroupHom& h) {
  IntMatrix k = kernel_lattice(h);
  SnfDecomposition ksnf = smith_normal_form(k);
  return FgAbGroup(k.cols(), coordinates_in(ksnf, h.source().relations(), "relation"));
}

FgAbGroup cokernel_group(const GroupHom& h) {
  return FgAbGroup(h.target().ambient_rank(), hstack(h.target().relations(), h.matrix()));
}

FgAbGroup image_group(const GroupHom& h) {
  return FgAbGroup(h.source().ambient_rank(), kernel_lattice(h));
}

std::vector<GroupHom> enumerate_homs(const FgAbGroup& source, const FgAbGroup& target,
                                     const Integer& bound) {
  const std::size_t cs = source.canonical_rank();
  const std::size_t ct = target.canonical_rank();
  const std::size_t tt = target.invariant_factors().size();

  // Per source generator, the admissible step in each torsion coordinate of the target.
  std::vector<std::vector<Integer>> step(cs, std::vector<Integer>(tt));
  std::vector<std::vector<Integer>> count(cs, std::vector<Integer>(tt));
  Integer total = 1;
  for (std::size_t j = 0; j < cs; ++j) {
    const Integer d = source.generator_order(j);
    if (sgn(d) == 0 && target.free_rank() > 0) {
      throw InfiniteInput("free source meets free target");
    }
    for (std::size_t i = 0; i < tt; ++i) {
      const Integer& t = target.invariant_factors()[i];
      Integer g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), t.get_mpz_t());
      count[j][i] = g;
      step[j][i] = t / g;
      total *= g;
      if (total > bound) throw BoundExceeded("homomorphism count exceeds " + bound.get_str());
    }
  }

  IntMatrix gens(target.ambient_rank(), ct);
  for (std::size_t i = 0; i < ct; ++i) {
    IntVector g = target.canonical_generator(i);
    for (std::size_t r = 0; r < g.size(); ++r) gens(r, i) = g[r];
  }
  IntMatrix proj(cs, source.ambient_rank());
  for (std::size_t c = 0; c < source.ambient_rank(); ++c) {
    IntVector e(source.ambient_rank());
    e[c] = 1;
    IntVector y = source.to_canonical(e);
    for (std::size_t j = 0; j < cs; ++j) proj(j, c) = y[j];
  }

  std::vector<GroupHom> out;
  std::vector<std::vector<Integer>> digit(cs, std::vector<Integer>(tt));
  for (;;) {
    IntMatrix img(ct, cs);
    for (std::size_t j = 0; j < cs; ++j)
      for (std::size_t i = 0; i < tt; ++i) img(i, j) = digit[j][i] * step[j][i];
    out.emplace_back(source, target, gens * img * proj);
    std::size_t j = 0, i = 0;
    bool carried = true;
    for (j = 0; j < cs && carried; ++j) {
      for (i = 0; i < tt && carried; ++i) {
        digit[j][i] += 1;
        if (digit[j][i] == count[j][i]) {
          digit[j][i] = 0;
        } else {
          carried = false;
        }
      }
    }
    if (carried) break;
  }
  return out;
}

}  // namespace kkth::exactalg

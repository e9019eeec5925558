#include "kkth/exactalg/abelian_group.hpp"

#include <sstream>

#include "kkth/errors.hpp"

namespace kkth::exactalg {

FgAbGroup::FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}

FgAbGroup::FgAbGroup(std::size_t ambient_rank, IntMatrix relations)
    : n_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.rows() != n_) {
    throw DimensionMismatch("relations have " + std::to_string(relations_.rows()) +
                            " rows for " + std::to_string(n_) + " generators");
  }
  snf_ = smith_normal_form(relations_);
  for (std::size_t i = 0; i < snf_.rank; ++i) {
    if (snf_.d(i, i) != 1) {
      coords_.push_back(i);
      torsion_.push_back(snf_.d(i, i));
    }
  }
  for (std::size_t i = snf_.rank; i < n_; ++i) coords_.push_back(i);
  free_rank_ = n_ - snf_.rank;
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(rank, 0)); }

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
  if (sgn(n) == 0) return free(1);
  IntMatrix rel(1, 1);
  rel(0, 0) = abs(n);
  return FgAbGroup(1, rel);
}

FgAbGroup FgAbGroup::from_invariants(const std::vector<Integer>& torsion, std::size_t free_rank) {
  const std::size_t n = torsion.size() + free_rank;
  IntMatrix rel(n, torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(i, i) = torsion[i];
  return FgAbGroup(n, rel);
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return FgAbGroup(a.n_ + b.n_, block_diagonal({a.relations_, b.relations_}));
}

FgAbGroup FgAbGroup::direct_sum(const std::vector<FgAbGroup>& parts) {
  std::vector<IntMatrix> rels;
  std::size_t n = 0;
  for (const auto& p : parts) {
    rels.push_back(p.relations_);
    n += p.n_;
  }
  return FgAbGroup(n, block_diagonal(rels));
}

Integer FgAbGroup::order() const {
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

Integer FgAbGroup::exponent() const {
  if (free_rank_ > 0) return 0;
  return torsion_.empty() ? Integer(1) : torsion_.back();
}

IntVector FgAbGroup::to_canonical(const IntVector& x) const {
  if (x.size() != n_) throw DimensionMismatch("element length");
  IntVector y = snf_.u.apply(x);
  IntVector out(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    out[j] = y[coords_[j]];
    if (j < torsion_.size()) mpz_fdiv_r(out[j].get_mpz_t(), out[j].get_mpz_t(), torsion_[j].get_mpz_t());
  }
  return out;
}

bool FgAbGroup::is_zero(const IntVector& x) const {
  for (const auto& e : to_canonical(x))
    if (sgn(e) != 0) return false;
  return true;
}

bool FgAbGroup::equal_elements(const IntVector& x, const IntVector& y) const {
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return is_zero(diff);
}

IntVector FgAbGroup::canonical_generator(std::size_t j) const { return snf_.u_inv.column(coords_.at(j)); }

Integer FgAbGroup::generator_order(std::size_t j) const {
  return j < torsion_.size() ? torsion_[j] : Integer(0);
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion_) {
    os << (first ? "" : " + ") << "Z_" << t.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < free_rank_; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  return os.str();
}

bool operator<(const FgAbGroup& a, const FgAbGroup& b) {
  if (a.free_rank_ != b.free_rank_) return a.free_rank_ < b.free_rank_;
  if (a.torsion_.size() != b.torsion_.size()) return a.torsion_.size() < b.torsion_.size();
  return a.torsion_ < b.torsion_;
}

FgAbGroup group_from_presentation(const IntMatrix& relations) {
  return FgAbGroup(relations.rows(), relations);
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ambient_rank() || matrix_.cols() != source_.ambient_rank()) {
    throw DimensionMismatch("hom matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " +
                            std::to_string(target_.ambient_rank()) + "x" +
                            std::to_string(source_.ambient_rank()));
  }
  IntMatrix images = matrix_ * source_.relations();
  for (std::size_t j = 0; j < images.cols(); ++j) {
    if (!target_.is_zero(images.column(j))) {
      throw IllDefinedHom("relation " + std::to_string(j) + " of the source is not killed");
    }
  }
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return GroupHom(source, target, IntMatrix(target.ambient_rank(), source.ambient_rank()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.ambient_rank()));
}

bool GroupHom::is_zero() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    if (!target_.is_zero(matrix_.column(j))) return false;
  return true;
}

bool GroupHom::equals(const GroupHom& other) const {
  if (source_ != other.source_ || target_ != other.target_) return false;
  if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols()) return false;
  IntMatrix diff = matrix_ - other.matrix_;
  for (std::size_t j = 0; j < diff.cols(); ++j)
    if (!target_.is_zero(diff.column(j))) return false;
  return true;
}

IntMatrix GroupHom::canonical_matrix() const {
  IntMatrix out(target_.canonical_rank(), source_.canonical_rank());
  for (std::size_t j = 0; j < source_.canonical_rank(); ++j) {
    IntVector img = target_.to_canonical(matrix_.apply(source_.canonical_generator(j)));
    for (std::size_t i = 0; i < img.size(); ++i) out(i, j) = img[i];
  }
  return out;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target().ambient_rank() != g.source().ambient_rank()) {
    throw DimensionMismatch("composition of incompatible maps");
  }
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace kkth::exactalg

#include "kkth/exactalg/smith.hpp"

#include <algorithm>
#include <utility>

#include "kkth/errors.hpp"

namespace kkth::exactalg {

namespace {

struct Reducer {
  IntMatrix d, u, u_inv, v, v_inv;
  std::size_t r, c;

  explicit Reducer(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())),
        r(m.rows()),
        c(m.cols()) {}

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t k = 0; k < c; ++k) d(i, k) += q * d(j, k);
    for (std::size_t k = 0; k < r; ++k) u(i, k) += q * u(j, k);
    for (std::size_t k = 0; k < r; ++k) u_inv(k, j) -= q * u_inv(k, i);
  }

  // col_j += q * col_i
  void add_col(std::size_t j, std::size_t i, const Integer& q) {
    for (std::size_t k = 0; k < r; ++k) d(k, j) += q * d(k, i);
    for (std::size_t k = 0; k < c; ++k) v(k, j) += q * v(k, i);
    for (std::size_t k = 0; k < c; ++k) v_inv(i, k) -= q * v_inv(j, k);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c; ++k) std::swap(d(i, k), d(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
    for (std::size_t k = 0; k < r; ++k) std::swap(u_inv(k, i), u_inv(k, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(d(k, i), d(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(v_inv(i, k), v_inv(j, k));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) d(i, k) = -d(i, k);
    for (std::size_t k = 0; k < r; ++k) u(i, k) = -u(i, k);
    for (std::size_t k = 0; k < r; ++k) u_inv(k, i) = -u_inv(k, i);
  }

  bool smallest_in_submatrix(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < c; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        Integer a = abs(d(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    return found;
  }

  // Smallest nonzero entry in row t or column t of the trailing block.
  void smallest_in_cross(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    Integer best = abs(d(t, t));
    pi = t;
    pj = t;
    for (std::size_t i = t + 1; i < r; ++i) {
      if (sgn(d(i, t)) != 0 && (sgn(best) == 0 || abs(d(i, t)) < best)) {
        best = abs(d(i, t));
        pi = i;
        pj = t;
      }
    }
    for (std::size_t j = t + 1; j < c; ++j) {
      if (sgn(d(t, j)) != 0 && (sgn(best) == 0 || abs(d(t, j)) < best)) {
        best = abs(d(t, j));
        pi = t;
        pj = j;
      }
    }
  }

  void run(std::size_t& rank) {
    const std::size_t n = std::min(r, c);
    std::size_t t = 0;
    for (; t < n; ++t) {
      std::size_t pi = 0, pj = 0;
      if (!smallest_in_submatrix(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (sgn(d(i, t)) == 0) continue;
          Integer q = d(i, t) / d(t, t);
          if (sgn(q) != 0) add_row(i, t, -q);
          if (sgn(d(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (sgn(d(t, j)) == 0) continue;
          Integer q = d(t, j) / d(t, t);
          if (sgn(q) != 0) add_col(j, t, -q);
          if (sgn(d(t, j)) != 0) clean = false;
        }
        if (!clean) {
          smallest_in_cross(t, pi, pj);
          swap_rows(t, pi);
          swap_cols(t, pj);
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < r && divides; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (sgn(d(t, t)) < 0) negate_row(t);
    }
    rank = t;
  }
};

}  // namespace

IntVector SnfDecomposition::diagonal() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
  return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer red(m);
  SnfDecomposition out;
  red.run(out.rank);
  out.u = std::move(red.u);
  out.d = std::move(red.d);
  out.v = std::move(red.v);
  out.u_inv = std::move(red.u_inv);
  out.v_inv = std::move(red.v_inv);
  return out;
}

std::optional<IntVector> solve_integer(const SnfDecomposition& snf, const IntVector& y) {
  if (y.size() != snf.d.rows()) throw DimensionMismatch("solve: right-hand side length");
  IntVector uy = snf.u.apply(y);
  IntVector z(snf.d.cols());
  for (std::size_t i = 0; i < uy.size(); ++i) {
    if (i < snf.rank) {
      const Integer& di = snf.d(i, i);
      if (!mpz_divisible_p(uy[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), uy[i].get_mpz_t(), di.get_mpz_t());
    } else if (sgn(uy[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.v.apply(z);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y) {
  return solve_integer(smith_normal_form(m), y);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfDecomposition snf = smith_normal_form(m);
  return snf.v.columns(snf.rank, m.cols() - snf.rank);
}

IntMatrix lattice_basis(const IntMatrix& g) {
  SnfDecomposition snf = smith_normal_form(g);
  IntMatrix basis(g.rows(), snf.rank);
  for (std::size_t j = 0; j < snf.rank; ++j)
    for (std::size_t i = 0; i < g.rows(); ++i) basis(i, j) = snf.u_inv(i, j) * snf.d(j, j);
  return basis;
}

}  // namespace kkth::exactalg

#pragma once

#include <optional>

#include "kkth/exactalg/int_matrix.hpp"

namespace kkth::exactalg {

// u * m * v == d, with u_inv == u^-1 and v_inv == v^-1 kept alongside.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  // d[i][i] for i < min(rows, cols)
  IntVector diagonal() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

// Some x with m * x == y, or nothing if y is outside the integer column span.
std::optional<IntVector> solve_integer(const SnfDecomposition& snf, const IntVector& y);
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y);

// Columns form a basis of the integer null space {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Columns form a basis of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

}  // namespace kkth::exactalg

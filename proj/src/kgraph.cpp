#include "kkth/kgraph.hpp"

#include "kkth/errors.hpp"

namespace kkth::kgraph {

std::vector<std::size_t> VertexPartition::ordering() const {
  std::vector<std::size_t> out = g_f;
  out.insert(out.end(), g_1.begin(), g_1.end());
  out.insert(out.end(), g_2.begin(), g_2.end());
  return out;
}

namespace {

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntMatrix p(perm.size(), perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) p(perm[v], v) = 1;
  return p;
}

std::string pair(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

VertexPartition validate(const KGraphSpec& spec) {
  const std::size_t n = spec.vertices.size();
  if (spec.k == 0) throw MalformedSpec("k must be at least 1");
  if (n == 0) throw MalformedSpec("no vertices");
  if (spec.matrices.size() != spec.k) {
    throw MalformedSpec("expected " + std::to_string(spec.k) + " matrices, got " +
                        std::to_string(spec.matrices.size()));
  }
  if (spec.involution.size() != n) throw MalformedSpec("involution length differs from vertex count");
  for (std::size_t i = 0; i < spec.k; ++i) {
    const IntMatrix& m = spec.matrices[i];
    if (m.rows() != n || m.cols() != n) {
      throw MalformedSpec("matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" +
                          std::to_string(n));
    }
    for (const auto& e : m.entries())
      if (sgn(e) < 0) throw NegativeEntry("matrix " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t j = i + 1; j < spec.k; ++j) {
      if (!(spec.matrices[i] * spec.matrices[j] == spec.matrices[j] * spec.matrices[i])) {
        throw NonCommutingMatrices(pair(i + 1, j + 1));
      }
    }
  }
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      bool any = false;
      for (std::size_t w = 0; w < n && !any; ++w) any = sgn(spec.matrices[i](v, w)) > 0;
      if (!any) throw SourceAtVertex("(" + std::to_string(i + 1) + "," + spec.vertices[v] + ")");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (spec.involution[v] >= n || spec.involution[spec.involution[v]] != v) {
      throw NotInvolutive("vertex " + std::to_string(v));
    }
  }
  IntMatrix p = permutation_matrix(spec.involution);
  for (std::size_t i = 0; i < spec.k; ++i) {
    if (!(p * spec.matrices[i] * p == spec.matrices[i])) {
      throw IncompatibleInvolution("(" + std::to_string(i + 1) + ")");
    }
  }

  VertexPartition part;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t w = spec.involution[v];
    if (w == v) {
      part.g_f.push_back(v);
    } else if (v < w) {
      part.g_1.push_back(v);
      part.g_2.push_back(w);
    }
  }
  return part;
}

IntMatrix reordered_boundary(const KGraphSpec& spec, const VertexPartition& part, std::size_t color) {
  const IntMatrix& m = spec.matrices.at(color);
  const std::vector<std::size_t> ord = part.ordering();
  IntMatrix b = IntMatrix::identity(ord.size()) - m.transpose().submatrix(ord, ord);
  return b;
}

BlockDecomposition block_decompose(const KGraphSpec& spec, const VertexPartition& part,
                                   std::size_t color) {
  const IntMatrix mt = spec.matrices.at(color).transpose();
  auto block = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix b(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        b(i, j) = (rows[i] == cols[j] ? 1 : 0) - mt(rows[i], cols[j]);
    return b;
  };
  BlockDecomposition out;
  out.color = color;
  out.b11 = block(part.g_f, part.g_f);
  out.b12 = block(part.g_f, part.g_1);
  out.b21 = block(part.g_1, part.g_f);
  out.b22 = block(part.g_1, part.g_1);
  out.b23 = block(part.g_1, part.g_2);
  return out;
}

IntMatrix BlockDecomposition::reassemble() const {
  IntMatrix top = hstack(hstack(b11, b12), b12);
  IntMatrix mid = hstack(hstack(b21, b22), b23);
  IntMatrix bot = hstack(hstack(b21, b23), b22);
  return vstack(vstack(top, mid), bot);
}

}  // namespace kkth::kgraph

#pragma once

#include <string>
#include <vector>

#include "kkth/exactalg/int_matrix.hpp"

namespace kkth::kgraph {

using exactalg::IntMatrix;

// matrices[i](v, w) counts color-i edges with source w and range v.
struct KGraphSpec {
  std::size_t k = 0;
  std::vector<std::string> vertices;
  std::vector<IntMatrix> matrices;
  std::vector<std::size_t> involution;  // image of each vertex index
};

struct VertexPartition {
  std::vector<std::size_t> g_f;
  std::vector<std::size_t> g_1;
  std::vector<std::size_t> g_2;  // g_2[i] is the partner of g_1[i]

  // Coordinates in the order (g_f, g_1, g_2).
  std::vector<std::size_t> ordering() const;
};

// Throws one of the validation errors; returns the canonical partition.
VertexPartition validate(const KGraphSpec& spec);

struct BlockDecomposition {
  std::size_t color = 0;
  IntMatrix b11, b12, b21, b22, b23;

  // [[B11, B12, B12], [B21, B22, B23], [B21, B23, B22]]
  IntMatrix reassemble() const;
};

// I - M^t with coordinates reordered as (g_f, g_1, g_2).
IntMatrix reordered_boundary(const KGraphSpec& spec, const VertexPartition& part, std::size_t color);

BlockDecomposition block_decompose(const KGraphSpec& spec, const VertexPartition& part,
                                   std::size_t color);

}  // namespace kkth::kgraph

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tight36/mesh.hpp"

namespace tight36 {

// Arithmetic in F_p with p = 2^61 - 1.
namespace fp {
constexpr uint64_t kP = (uint64_t(1) << 61) - 1;
uint64_t mul(uint64_t a, uint64_t b);
uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t pow(uint64_t a, uint64_t e);
uint64_t inv(uint64_t a);
}  // namespace fp

struct RankReport {
  int vertex_count = 0;
  int edge_count = 0;
  int rank = 0;
  int dof = 0;                // 3|V| - 6 - rank for |V| >= 3
  bool is_3rigid = false;     // rank == 3|V| - 6
  bool is_min_3rigid = false; // 3-rigid and |E| == 3|V| - 6
  int trials_used = 0;
  uint64_t seed = 0;
};

// Placement per vertex (in graph vertex order), one field triple each.
using Placement = std::vector<std::array<uint64_t, 3>>;

// |E| x 3|V| matrix: the row of edge vw holds p(v)-p(w) in v's column block
// and the negation in w's block.
std::vector<std::vector<uint64_t>> rigidity_matrix(const Graph& g,
                                                   const Placement& placement);

int matrix_rank(std::vector<std::vector<uint64_t>> m);

// Random placements in F_p, up to three trials, rank = max over trials.
// Deterministic for a fixed seed; stops early once the rank bound is hit.
RankReport generic_rank(const Graph& g, uint64_t seed = 1);

struct MinRigidityReport {
  bool minimally_rigid = false;
  RankReport rank;
  // An edge whose removal keeps the rank, when the graph is rigid with excess
  // edges.
  std::optional<std::pair<int, int>> redundant_edge;
};

MinRigidityReport is_min_3rigid(const Graph& g, uint64_t seed = 1);

}  // namespace tight36

#include "tight36/rigidity.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace tight36 {

namespace fp {

uint64_t mul(uint64_t a, uint64_t b) {
  __uint128_t t = static_cast<__uint128_t>(a) * b;
  uint64_t lo = static_cast<uint64_t>(t & kP);
  uint64_t hi = static_cast<uint64_t>(t >> 61);
  uint64_t r = lo + hi;
  if (r >= kP) r -= kP;
  return r;
}

uint64_t add(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  if (r >= kP) r -= kP;
  return r;
}

uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }

uint64_t pow(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t inv(uint64_t a) { return pow(a, kP - 2); }

}  // namespace fp

std::vector<std::vector<uint64_t>> rigidity_matrix(const Graph& g,
                                                   const Placement& placement) {
  const int n = static_cast<int>(g.vertices.size());
  if (static_cast<int>(placement.size()) != n)
    throw Error(ErrorKind::Precondition, "placement size mismatch");
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[g.vertices[i]] = i;

  std::vector<std::vector<uint64_t>> m;
  m.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    int iu = index[u], iv = index[v];
    if (placement[iu] == placement[iv])
      throw Error(ErrorKind::Precondition, "edge endpoints placed at the same point");
    std::vector<uint64_t> row(3 * n, 0);
    for (int k = 0; k < 3; ++k) {
      uint64_t d = fp::sub(placement[iu][k], placement[iv][k]);
      row[3 * iu + k] = d;
      row[3 * iv + k] = fp::sub(0, d);
    }
    m.push_back(std::move(row));
  }
  return m;
}

int matrix_rank(std::vector<std::vector<uint64_t>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    uint64_t pinv = fp::inv(m[rank][col]);
    for (int r = rank + 1; r < rows; ++r) {
      uint64_t f = m[r][col];
      if (f == 0) continue;
      f = fp::mul(f, pinv);
      uint64_t* a = m[r].data();
      const uint64_t* b = m[rank].data();
      for (int c = col; c < cols; ++c) a[c] = fp::sub(a[c], fp::mul(f, b[c]));
    }
    ++rank;
  }
  return rank;
}

RankReport generic_rank(const Graph& g, uint64_t seed) {
  const int n = static_cast<int>(g.vertices.size());
  if (n < 3) throw Error(ErrorKind::Precondition, "need at least 3 vertices");
  RankReport rep;
  rep.vertex_count = n;
  rep.edge_count = static_cast<int>(g.edges.size());
  rep.seed = seed;

  const int upper = std::min(rep.edge_count, 3 * n - 6);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(0, fp::kP - 1);
  for (int trial = 0; trial < 3; ++trial) {
    Placement placement(n);
    for (auto& p : placement)
      for (auto& c : p) c = dist(rng);
    int r = matrix_rank(rigidity_matrix(g, placement));
    rep.rank = std::max(rep.rank, r);
    ++rep.trials_used;
    if (rep.rank >= upper) break;
  }
  rep.dof = 3 * n - 6 - rep.rank;
  rep.is_3rigid = rep.rank == 3 * n - 6;
  rep.is_min_3rigid = rep.is_3rigid && rep.edge_count == 3 * n - 6;
  return rep;
}

MinRigidityReport is_min_3rigid(const Graph& g, uint64_t seed) {
  MinRigidityReport rep;
  rep.rank = generic_rank(g, seed);
  rep.minimally_rigid = rep.rank.is_min_3rigid;
  if (rep.rank.is_3rigid && !rep.rank.is_min_3rigid) {
    // Rigid with excess edges: find one whose removal keeps the rank.
    for (size_t i = 0; i < g.edges.size(); ++i) {
      Graph h = g;
      h.edges.erase(h.edges.begin() + i);
      if (generic_rank(h, seed).rank == rep.rank.rank) {
        rep.redundant_edge = g.edges[i];
        break;
      }
    }
  }
  return rep;
}

}  // namespace tight36

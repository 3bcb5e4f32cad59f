#pragma once

#include <vector>

#include "tight36/mesh.hpp"

namespace tight36 {

enum class SparsityStatus { Tight, SparseNotTight, Violating };

struct SparsityVerdict {
  SparsityStatus status = SparsityStatus::SparseNotTight;
  // max over vertex sets W, |W| >= 3, of |E(G[W])| - (3|W| - 6)
  int deficiency = 0;
  std::vector<int> witness;  // ascending vertex ids attaining the max
  int maxwell = 0;           // 3|V| - |E| of the whole graph

  bool tight() const { return status == SparsityStatus::Tight; }
};

int maxwell_count(const Graph& g);

// Every subset of size >= 3, up to `bound` vertices.
SparsityVerdict check_36_exhaustive(const Graph& g, int bound = 20);

// Min-cut oracle; same verdict contract as the exhaustive check. Witness is a
// deterministic maximizer (not necessarily the lexicographically least one).
// With maximal_witness the inclusion-maximal optimal W is returned.
SparsityVerdict check_36_flow(const Graph& g, bool maximal_witness = false);

const char* to_string(SparsityStatus s);

}  // namespace tight36

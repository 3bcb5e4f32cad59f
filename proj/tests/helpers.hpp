#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "tight36/mesh.hpp"

namespace t36test {

inline tight36::Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  tight36::Graph g;
  for (int i = 0; i < n; ++i) g.vertices.push_back(i);
  for (auto [u, v] : edges) g.edges.push_back(std::minmax(u, v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline tight36::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return make_graph(n, e);
}

// r-cycle plus two vertices adjacent to every cycle vertex (no apex-apex edge).
inline tight36::Graph bipyramid_graph(int r) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < r; ++i) {
    e.push_back({i, (i + 1) % r});
    e.push_back({i, r});
    e.push_back({i, r + 1});
  }
  return make_graph(r + 2, e);
}

// Two K5-minus-an-edge blocks sharing the two ends of the missing edge.
inline tight36::Graph double_banana() {
  std::vector<std::pair<int, int>> e;
  auto add_banana = [&](std::vector<int> vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!(vs[i] == 0 && vs[j] == 1)) e.push_back({vs[i], vs[j]});
  };
  add_banana({0, 1, 2, 3, 4});
  add_banana({0, 1, 5, 6, 7});
  return make_graph(8, e);
}

inline tight36::Graph random_graph(std::mt19937_64& rng, int max_n = 12) {
  std::uniform_int_distribution<int> nd(4, max_n);
  int n = nd(rng);
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<size_t> md(n - 1, std::min(all.size(), size_t(3 * n)));
  all.resize(md(rng));
  return make_graph(n, all);
}

}  // namespace t36test

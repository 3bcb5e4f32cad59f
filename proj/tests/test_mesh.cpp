#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "tight36/mesh.hpp"

using namespace tight36;

namespace {

SurfaceMesh k3_disc() {
  return mesh_from_faces({{{0, 1, 2}, false}, {{0, 1, 2}, true}});
}

SurfaceMesh octahedron() {
  // Bipyramid over a 4-cycle.
  std::vector<PolygonSpec> faces;
  for (int i = 0; i < 4; ++i) {
    faces.push_back({{i, (i + 1) % 4, 4}, false});
    faces.push_back({{i, (i + 1) % 4, 5}, false});
  }
  return mesh_from_faces(faces);
}

SurfaceMesh hemi_icosahedron() {
  // K6 embedded in the projective plane.
  std::vector<PolygonSpec> faces = {
      {{1, 2, 3}, false}, {{1, 3, 4}, false}, {{1, 4, 5}, false},
      {{1, 5, 6}, false}, {{1, 2, 6}, false}, {{2, 4, 6}, false},
      {{2, 3, 5}, false}, {{3, 4, 6}, false}, {{2, 4, 5}, false},
      {{3, 5, 6}, false}};
  return mesh_from_faces(faces);
}

SurfaceMesh grid_torus(int p, int q) {
  std::vector<PolygonSpec> faces;
  auto id = [&](int r, int c) { return ((r % p + p) % p) * q + (c % q + q) % q; };
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < q; ++c) {
      faces.push_back({{id(r, c), id(r + 1, c), id(r + 1, c + 1)}, false});
      faces.push_back({{id(r, c), id(r, c + 1), id(r + 1, c + 1)}, false});
    }
  }
  return mesh_from_faces(faces);
}

}  // namespace

TEST_CASE("k3 disc validates and traces two walks") {
  SurfaceMesh m = k3_disc();
  CHECK(validate(m).ok);
  auto walks = trace_faces(m);
  REQUIRE(walks.size() == 2);
  CHECK(walks[0].length() == 3);
  CHECK(walks[1].length() == 3);
  int holes = 0;
  for (const auto& w : walks) holes += w.hole ? 1 : 0;
  CHECK(holes == 1);

  auto inv = surface_invariants(m);
  CHECK(inv.euler_closed == 2);
  CHECK(inv.orientable);
  CHECK(inv.twice_reduced_genus == 0);
  CHECK(inv.maxwell == 6);
  CHECK(inv.boundary_lengths == std::vector<int>{3});
}

TEST_CASE("k3 with both faces filled is a valid degenerate sphere") {
  SurfaceMesh m = mesh_from_faces({{{0, 1, 2}, false}, {{0, 1, 2}, false}});
  CHECK(validate(m).ok);
  auto inv = surface_invariants(m);
  CHECK(inv.hole_count == 0);
  CHECK(inv.euler_closed == 2);
}

TEST_CASE("nontriangular non-hole face is rejected") {
  SurfaceMesh m = mesh_from_faces({{{0, 1, 2, 3}, true},
                                   {{0, 1, 2, 3}, true}});
  // Both quadrilateral faces as holes: fine.
  CHECK(validate(m).ok);
  // Clear one marker: nontriangular face must be flagged.
  SurfaceMesh bad(m.vertices(), m.edges(), m.rotation(), {});
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.kind == ErrorKind::Invariant);
  CHECK(rep.message.find("nontriangular") != std::string::npos);
}

TEST_CASE("dangling dart reference is a format error") {
  SurfaceMesh m = k3_disc();
  auto rot = m.rotation();
  rot.begin()->second[0] = Dart{99, 0};
  SurfaceMesh bad(m.vertices(), m.edges(), rot, m.holes());
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.kind == ErrorKind::Format);
}

TEST_CASE("octahedron traces eight triangles") {
  SurfaceMesh m = octahedron();
  CHECK(validate(m).ok);
  auto walks = trace_faces(m);
  CHECK(walks.size() == 8);
  for (const auto& w : walks) CHECK(w.length() == 3);
  auto inv = surface_invariants(m);
  CHECK(inv.euler_closed == 2);
  CHECK(inv.orientable);
  CHECK(inv.maxwell == 6);
}

TEST_CASE("hemi-icosahedron is a projective plane") {
  SurfaceMesh m = hemi_icosahedron();
  CHECK(validate(m).ok);
  auto inv = surface_invariants(m);
  CHECK(inv.euler_closed == 1);
  CHECK_FALSE(inv.orientable);
  CHECK(inv.genus == 1);
  CHECK(inv.twice_reduced_genus == 1);
  CHECK(inv.triangle_count == 10);
  CHECK(inv.maxwell == 3);
}

TEST_CASE("grid torus invariants") {
  SurfaceMesh m = grid_torus(3, 3);
  CHECK(validate(m).ok);
  auto inv = surface_invariants(m);
  CHECK(inv.euler_closed == 0);
  CHECK(inv.orientable);
  CHECK(inv.genus == 1);
  CHECK(inv.triangle_count == 18);
  CHECK(inv.maxwell == 0);
}

TEST_CASE("face tracing partitions the darts") {
  for (const SurfaceMesh& m :
       {k3_disc(), octahedron(), hemi_icosahedron(), grid_torus(3, 4)}) {
    auto walks = trace_faces(m);
    std::set<Dart> seen;
    size_t total = 0;
    for (const auto& w : walks) {
      for (Dart d : w.darts) {
        CHECK(seen.insert(d).second);
        ++total;
      }
    }
    CHECK(total == 2 * m.edges().size());
  }
}

TEST_CASE("tracing is independent of rotation start") {
  SurfaceMesh m = hemi_icosahedron();
  auto rot = m.rotation();
  for (auto& [v, r] : rot) std::rotate(r.begin(), r.begin() + 1, r.end());
  SurfaceMesh shifted(m.vertices(), m.edges(), rot, m.holes());
  auto a = trace_faces(m);
  auto b = trace_faces(shifted);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].darts == b[i].darts);
    CHECK(a[i].vertices == b[i].vertices);
  }
}

TEST_CASE("canonicalized is a fixpoint") {
  SurfaceMesh m = canonicalized(k3_disc());
  CHECK(canonicalized(m) == m);
}

TEST_CASE("underlying graph extraction") {
  Graph g = underlying_graph(octahedron());
  CHECK(g.vertices.size() == 6);
  CHECK(g.edges.size() == 12);
}

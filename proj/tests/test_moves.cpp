#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "tight36/moves.hpp"
#include "tight36/sparsity.hpp"

using namespace tight36;
using namespace t36test;

namespace {

SurfaceMesh k3_disc() {
  return mesh_from_faces({{{0, 1, 2}, false}, {{0, 1, 2}, true}});
}

SurfaceMesh octahedron() {
  std::vector<PolygonSpec> faces;
  for (int i = 0; i < 4; ++i) {
    faces.push_back({{i, (i + 1) % 4, 4}, false});
    faces.push_back({{i, (i + 1) % 4, 5}, false});
  }
  return mesh_from_faces(faces);
}

int maxwell(const SurfaceMesh& m) {
  return 3 * m.vertex_count() - m.edge_count();
}

const FaceWalk* some_hole(const std::vector<FaceWalk>& walks) {
  for (const auto& w : walks)
    if (w.hole) return &w;
  return nullptr;
}

// Disc with its (length 3) hole widened structurally: repeated collars give a
// family of tight test meshes of growing size.
SurfaceMesh collared_disc(int collars) {
  SurfaceMesh m = k3_disc();
  for (int i = 0; i < collars; ++i) {
    auto walks = trace_faces(m);
    m = collar(m, some_hole(walks)->face_id()).mesh;
  }
  return m;
}

}  // namespace

TEST_CASE("zero extension splits a triangle into three") {
  SurfaceMesh m = k3_disc();
  auto walks = trace_faces(m);
  const FaceWalk* tri = nullptr;
  for (const auto& w : walks)
    if (!w.hole) tri = &w;
  auto r = zero_extension(m, tri->face_id(), tri->vertices[0], tri->vertices[1],
                          tri->vertices[2]);
  CHECK(r.mesh.vertex_count() == 4);
  CHECK(r.mesh.edge_count() == 6);
  CHECK(maxwell(r.mesh) == 6);
  auto inv = surface_invariants(r.mesh);
  CHECK(inv.triangle_count == 3);
  CHECK(inv.boundary_lengths == std::vector<int>{3});
}

TEST_CASE("zero extension into a hole splits arcs per their lengths") {
  // Build a length-8 hole by collaring twice then widening via excise is
  // overkill; instead use an 8-cycle with two hole faces and fill one side.
  std::vector<PolygonSpec> ring;
  std::vector<int> cyc = {0, 1, 2, 3, 4, 5, 6, 7};
  ring.push_back({cyc, true});
  ring.push_back({cyc, true});
  SurfaceMesh cycle8 = mesh_from_faces(ring);
  // Close one side partially so the mesh has interior structure.
  auto walks = trace_faces(cycle8);
  const FaceWalk& back = walks[1];
  SurfaceMesh m = cycle8;
  auto r0 = zero_extension(m, back.face_id(), back.vertices[0], back.vertices[1],
                           back.vertices[2]);  // arcs 1,1,6 -> tri,tri,hole(8)
  m = r0.mesh;

  // now find the hole of length 8 containing the new vertex
  walks = trace_faces(m);
  const FaceWalk* hole8 = nullptr;
  for (const auto& w : walks)
    if (w.hole && w.contains_vertex(r0.new_vertex)) hole8 = &w;
  REQUIRE(hole8 != nullptr);
  REQUIRE(hole8->length() == 8);

  // anchors with arc lengths 1,3,4
  int a = hole8->vertices[0], b = hole8->vertices[1], c = hole8->vertices[4];
  auto r1 = zero_extension(m, hole8->face_id(), a, b, c);
  auto inv = surface_invariants(r1.mesh);
  // one region becomes a triangle, the others holes of lengths 5 and 6
  std::vector<int> lens;
  for (const auto& w : trace_faces(r1.mesh))
    if (w.hole) lens.push_back(w.length());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{5, 6, 8});
  CHECK(maxwell(r1.mesh) == maxwell(m));
}

TEST_CASE("zero extension keeps meshes tight") {
  std::mt19937_64 rng(2024);
  SurfaceMesh m = collared_disc(2);
  for (int trial = 0; trial < 60; ++trial) {
    auto walks = trace_faces(m);
    std::uniform_int_distribution<size_t> pick(0, walks.size() - 1);
    const FaceWalk& w = walks[pick(rng)];
    int len = w.length();
    if (!w.hole) {
      auto r = zero_extension(m, w.face_id(), w.vertices[0], w.vertices[1],
                              w.vertices[2]);
      m = r.mesh;
    } else {
      std::uniform_int_distribution<int> p(0, len - 1);
      int i = p(rng);
      int j = (i + 1 + p(rng) % (len - 2)) % len;
      int k = (j + 1 + p(rng) % (len - 2)) % len;
      int pi = i, pj = j, pk = k;
      // ensure strictly increasing cyclic order from i
      auto off = [&](int x) { return (x - pi + len) % len; };
      if (!(0 < off(pj) && off(pj) < off(pk))) continue;
      auto r = zero_extension(m, w.face_id(), w.vertices[pi], w.vertices[pj],
                              w.vertices[pk]);
      m = r.mesh;
    }
    CHECK(maxwell(m) == 6);
    if (m.vertex_count() <= 14)
      CHECK(check_36_exhaustive(underlying_graph(m)).tight());
    else
      CHECK(check_36_flow(underlying_graph(m)).tight());
  }
}

TEST_CASE("vertex split on an interior octahedron vertex") {
  SurfaceMesh m = octahedron();
  // split vertex 4 with neighbours 0 and 2
  auto r = vertex_split(m, 4, 0, 2, 0);
  CHECK(r.mesh.vertex_count() == 7);
  CHECK(r.mesh.edge_count() == 15);
  CHECK(maxwell(r.mesh) == 6);
  CHECK(check_36_exhaustive(underlying_graph(r.mesh)).tight());
  auto inv = surface_invariants(r.mesh);
  CHECK(inv.euler_closed == 2);
}

TEST_CASE("vertex split transfers a hole corner without changing its length") {
  SurfaceMesh m = collared_disc(1);
  auto walks = trace_faces(m);
  const FaceWalk* h = some_hole(walks);
  int len = h->length();
  int v = h->vertices[0];
  // pick a and b as the two hole-walk neighbours of v, then the side whose
  // arc holds the hole corner (exactly one does)
  int a = h->vertices[1];
  int b = h->vertices[len - 1];
  for (int side = 0; side < 2; ++side) {
    auto r = vertex_split(m, v, a, b, side);
    CHECK(maxwell(r.mesh) == 6);
    auto inv = surface_invariants(r.mesh);
    CHECK(inv.boundary_lengths == std::vector<int>{3});
    CHECK(check_36_exhaustive(underlying_graph(r.mesh)).tight());
  }
}

TEST_CASE("random vertex splits preserve the maxwell count and tightness") {
  std::mt19937_64 rng(555);
  SurfaceMesh base = collared_disc(2);
  for (int trial = 0; trial < 60; ++trial) {
    SurfaceMesh m = base;
    auto verts = m.vertices();
    std::uniform_int_distribution<size_t> pv(0, verts.size() - 1);
    int v = verts[pv(rng)];
    const auto& rot = m.rotation().at(v);
    if (rot.size() < 2) continue;
    std::uniform_int_distribution<size_t> pr(0, rot.size() - 1);
    int ia = (int)pr(rng), ib = (int)pr(rng);
    if (ia == ib) continue;
    int a = m.dart_other(rot[ia]);
    int b = m.dart_other(rot[ib]);
    std::uniform_int_distribution<int> ps(0, 1);
    auto r = vertex_split(m, v, a, b, ps(rng));
    CHECK(maxwell(r.mesh) == 6);
    CHECK(check_36_exhaustive(underlying_graph(r.mesh), 21).tight());
  }
}

TEST_CASE("carve hole refuses shared vertices and works on interior triangles") {
  SurfaceMesh disc = k3_disc();
  auto walks = trace_faces(disc);
  const FaceWalk* tri = nullptr;
  for (const auto& w : walks)
    if (!w.hole) tri = &w;
  CHECK_THROWS_AS((void)carve_hole(disc, tri->face_id()), Error);

  // collared disc: interior triangles exist (they avoid the hole walk)
  SurfaceMesh m = collared_disc(1);
  walks = trace_faces(m);
  const FaceWalk* hole = some_hole(walks);
  const FaceWalk* interior = nullptr;
  for (const auto& w : walks) {
    if (w.hole) continue;
    bool disjoint = true;
    for (int v : w.vertices)
      if (hole->contains_vertex(v)) disjoint = false;
    if (disjoint) interior = &w;
  }
  REQUIRE(interior != nullptr);
  SurfaceMesh carved = carve_hole(m, interior->face_id());
  auto inv = surface_invariants(carved);
  CHECK(inv.boundary_lengths == std::vector<int>{3, 3});
  CHECK(maxwell(carved) == 6);
}

TEST_CASE("collar of the disc hole is the octahedron minus a face") {
  SurfaceMesh m = k3_disc();
  auto walks = trace_faces(m);
  auto r = collar(m, some_hole(walks)->face_id());
  CHECK(r.mesh.vertex_count() == 6);
  CHECK(r.mesh.edge_count() == 12);
  CHECK(maxwell(r.mesh) == 6);
  CHECK(check_36_exhaustive(underlying_graph(r.mesh)).tight());
  // new hole disjoint from the old boundary
  auto inv = surface_invariants(r.mesh);
  CHECK(inv.boundary_lengths == std::vector<int>{3});
  for (int v : {0, 1, 2}) {
    const FaceWalk& h = walk_of_face(trace_faces(r.mesh), r.new_hole);
    CHECK_FALSE(h.contains_vertex(v));
  }
}

TEST_CASE("collar of a length-5 hole") {
  // pentagon ring, one side filled by fan
  std::vector<int> cyc = {0, 1, 2, 3, 4};
  SurfaceMesh ring = mesh_from_faces({{cyc, true}, {cyc, true}});
  auto rwalks = trace_faces(ring);
  const FaceWalk& w0 = rwalks[0];
  auto r0 = zero_extension(ring, w0.face_id(), w0.vertices[0], w0.vertices[1],
                           w0.vertices[2]);
  SurfaceMesh m = r0.mesh;
  // collar the untouched pentagon hole
  auto mwalks = trace_faces(m);
  const FaceWalk* target = nullptr;
  for (const auto& w : mwalks)
    if (w.hole && !w.contains_vertex(r0.new_vertex)) target = &w;
  REQUIRE(target);
  auto r = collar(m, target->face_id());
  CHECK((int)r.ring.size() == 5);
  auto inv = surface_invariants(r.mesh);
  CHECK(maxwell(r.mesh) == maxwell(m));
}

TEST_CASE("collar twice nests disjoint rings") {
  SurfaceMesh m = k3_disc();
  auto r1 = collar(m, some_hole(trace_faces(m))->face_id());
  auto r2 = collar(r1.mesh, r1.new_hole);
  for (int v : r1.ring) {
    const FaceWalk& h = walk_of_face(trace_faces(r2.mesh), r2.new_hole);
    CHECK_FALSE(h.contains_vertex(v));
  }
  CHECK(maxwell(r2.mesh) == 6);
}

TEST_CASE("local barycentric move on the octahedron") {
  SurfaceMesh m = octahedron();
  SurfaceMesh out = barycentric_local(m, m.edges()[0].id);
  CHECK(out.vertex_count() == 9);
  CHECK(out.edge_count() == 21);
  CHECK(maxwell(out) == 6);
  auto inv = surface_invariants(out);
  CHECK(inv.triangle_count == 14);  // 8 - 2 + 8
  CHECK(inv.euler_closed == 2);
}

TEST_CASE("barycentric move refuses hole edges") {
  SurfaceMesh m = k3_disc();
  CHECK_THROWS_AS((void)barycentric_local(m, m.edges()[0].id), Error);
}

TEST_CASE("random barycentric moves keep tightness and add 3 vertices, 9 edges") {
  std::mt19937_64 rng(99);
  SurfaceMesh m = octahedron();
  for (int trial = 0; trial < 25; ++trial) {
    const auto& edges = m.edges();
    std::uniform_int_distribution<size_t> pe(0, edges.size() - 1);
    int id = edges[pe(rng)].id;
    int v_before = m.vertex_count(), e_before = m.edge_count();
    SurfaceMesh out;
    try {
      out = barycentric_local(m, id);
    } catch (const Error&) {
      continue;  // hole-adjacent edge
    }
    CHECK(out.vertex_count() == v_before + 3);
    CHECK(out.edge_count() == e_before + 9);
    CHECK(maxwell(out) == maxwell(m));
    if (out.vertex_count() <= 15)
      CHECK(check_36_exhaustive(underlying_graph(out)).tight());
    m = out;
  }
}

TEST_CASE("join of two discs along length-3 holes is a sphere") {
  SurfaceMesh a = k3_disc();
  SurfaceMesh b = k3_disc();
  Dart ha = some_hole(trace_faces(a))->face_id();
  Dart hb = some_hole(trace_faces(b))->face_id();
  SurfaceMesh out = join(a, ha, b, hb);
  CHECK(out.vertex_count() == 3);
  CHECK(out.edge_count() == 3);
  CHECK(maxwell(out) == 6);
  auto inv = surface_invariants(out);
  CHECK(inv.hole_count == 0);
  CHECK(inv.euler_closed == 2);
}

TEST_CASE("join obeys the maxwell formula and keeps other holes") {
  SurfaceMesh a = collared_disc(1);  // hole length 3
  SurfaceMesh b = collared_disc(1);
  Dart ha = some_hole(trace_faces(a))->face_id();
  Dart hb = some_hole(trace_faces(b))->face_id();
  SurfaceMesh out = join(a, ha, b, hb);
  CHECK(maxwell(out) == 6 + 6 - 2 * 3);
  CHECK(surface_invariants(out).hole_count == 0);
  CHECK(check_36_exhaustive(underlying_graph(out)).tight());
}

TEST_CASE("reversed-alignment join stays valid with recomputed invariants") {
  SurfaceMesh a = collared_disc(1);
  SurfaceMesh b = collared_disc(1);
  Dart ha = some_hole(trace_faces(a))->face_id();
  Dart hb = some_hole(trace_faces(b))->face_id();
  for (int off = 0; off < 3; ++off) {
    for (bool rev : {false, true}) {
      SurfaceMesh out = join(a, ha, b, hb, {off, rev});
      CHECK(validate(out).ok);
      (void)surface_invariants(out);
    }
  }
}

TEST_CASE("excise a single interior vertex leaves a hole of its degree") {
  SurfaceMesh m = octahedron();
  // vertex 4 has degree 4 with link cycle 0,1,2,3
  auto r = excise_region(m, {0, 1, 2, 3}, {4});
  auto inv = surface_invariants(r.mesh);
  CHECK(inv.boundary_lengths == std::vector<int>{4});
  CHECK(r.mesh.vertex_count() == 5);
  CHECK(maxwell(r.mesh) == 6 + 1);  // f rises by |cycle| - 3
}

TEST_CASE("excise then rejoin restores the mesh up to relabeling") {
  SurfaceMesh m = octahedron();
  auto r = excise_region(m, {0, 1, 2, 3}, {4});
  // the removed region as its own mesh: a 4-fan disc
  SurfaceMesh cap = mesh_from_faces({{{0, 1, 4}, false},
                                     {{1, 2, 4}, false},
                                     {{2, 3, 4}, false},
                                     {{3, 0, 4}, false},
                                     {{0, 1, 2, 3}, true}});
  Dart hc = some_hole(trace_faces(cap))->face_id();
  for (int off = 0; off < 4; ++off) {
    for (bool rev : {false, true}) {
      SurfaceMesh out = join(r.mesh, r.new_hole, cap, hc, {off, rev});
      CHECK(out.vertex_count() == 6);
      CHECK(out.edge_count() == 12);
      CHECK(surface_invariants(out).euler_closed == 2);
    }
  }
}

TEST_CASE("replay reproduces the final mesh byte for byte") {
  SurfaceMesh m = k3_disc();
  MoveLog log;

  MoveRecord r1;
  r1.kind = MoveRecord::Kind::Collar;
  r1.face = some_hole(trace_faces(m))->face_id();
  log.push_back(r1);
  SurfaceMesh m1 = apply_move(m, r1);

  MoveRecord r2;
  r2.kind = MoveRecord::Kind::Barycentric;
  // find an interior edge
  for (const Edge& e : m1.edges()) {
    try {
      (void)barycentric_local(m1, e.id);
      r2.edge = e.id;
      break;
    } catch (const Error&) {
    }
  }
  REQUIRE(r2.edge != -1);
  log.push_back(r2);
  SurfaceMesh m2 = apply_move(m1, r2);

  SurfaceMesh replayed = replay(m, log);
  CHECK(canonicalized(replayed) == canonicalized(m2));
}

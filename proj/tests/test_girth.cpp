#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "tight36/girth.hpp"
#include "tight36/seeds.hpp"
#include "tight36/sparsity.hpp"

using namespace tight36;
using namespace t36test;

namespace {

SurfaceMesh k3_sphere() {
  return mesh_from_faces({{{0, 1, 2}, false}, {{0, 1, 2}, false}});
}

// Hemi-icosahedron with the 4-face fan at vertex 1 excised: a valid f = 6
// mesh of the punctured projective plane that fails tightness (vertex 1 ends
// with degree 2).
SurfaceMesh k6_fan_mesh() {
  SurfaceMesh m = hemi_icosahedron();
  return excise_region(m, {1, 2, 3, 4, 5, 6}, {}).mesh;
}

// Annulus between two 9-cycles pinched through a 3-ring waist.
SurfaceMesh hourglass_annulus() {
  std::vector<PolygonSpec> faces;
  auto a = [](int i) { return (i % 9 + 9) % 9; };         // 0..8
  auto b = [](int i) { return 9 + (i % 3 + 3) % 3; };     // 9..11
  auto c = [](int i) { return 12 + (i % 9 + 9) % 9; };    // 12..20
  std::vector<int> ring_a, ring_c;
  for (int i = 0; i < 9; ++i) ring_a.push_back(a(i));
  for (int i = 0; i < 9; ++i) ring_c.push_back(c(i));
  faces.push_back({ring_a, true});
  faces.push_back({ring_c, true});
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      faces.push_back({{a(3 * i + k), a(3 * i + k + 1), b(i)}, false});
      faces.push_back({{c(3 * i + k), c(3 * i + k + 1), b(i)}, false});
    }
    faces.push_back({{b(i), b(i + 1), a(3 * i + 3)}, false});
    faces.push_back({{b(i), b(i + 1), c(3 * i + 3)}, false});
  }
  return mesh_from_faces(faces);
}

int maxwell(const SurfaceMesh& m) { return 3 * m.vertex_count() - m.edge_count(); }

}  // namespace

TEST_CASE("K3 sphere superfaces: two discs with zero defect") {
  auto reports = enumerate_superfaces(k3_sphere());
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.s == 1);
    CHECK(r.walk_lengths == std::vector<int>{3});
    CHECK(r.twice_gr == 0);
    CHECK(r.delta == 0);
    CHECK(r.balanced);
    CHECK(r.simple);
  }
}

TEST_CASE("octahedron superface count matches brute-force subgraph enumeration") {
  SurfaceMesh m = octahedron();
  auto reports = enumerate_superfaces(m);

  // Independent oracle: subgraphs with min degree >= 2; faces of each are the
  // connected components of mesh faces glued across absent edges; every
  // proper component is a superface region. Deduplicate by region.
  auto walks = trace_faces(m);
  std::map<std::tuple<int, int, int>, int> owner;
  trace_faces_with_flags(m, true, &owner);
  std::set<std::set<int>> regions;
  const auto& edges = m.edges();
  const int ne = (int)edges.size();
  for (uint32_t mask = 0; mask < (1u << ne); ++mask) {
    std::map<int, int> deg;
    for (int i = 0; i < ne; ++i)
      if (mask & (1u << i)) {
        ++deg[edges[i].u];
        ++deg[edges[i].v];
      }
    bool ok = true;
    for (auto [v, d] : deg)
      if (d < 2) ok = false;
    if (!ok || mask == 0) continue;
    // glue faces across edges absent from the subgraph
    std::map<int, int> comp;
    for (int i = 0; i < (int)walks.size(); ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (int i = 0; i < ne; ++i) {
      if (mask & (1u << i)) continue;
      int s1 = owner.at({edges[i].id, 0, 0});
      int s2 = owner.at({edges[i].id, 0, 1});
      comp[find(s1)] = find(s2);
    }
    std::map<int, std::set<int>> by_root;
    for (int i = 0; i < (int)walks.size(); ++i) by_root[find(i)].insert(i);
    if (by_root.size() < 2) continue;  // dense single face
    for (auto& [root, faces] : by_root) regions.insert(faces);
  }
  CHECK(reports.size() == regions.size());
}

TEST_CASE("capped torus seed: the hole region is a disc superface") {
  auto ts = torus_seed();
  auto walks = trace_faces(ts.mesh);
  const FaceWalk& hw = walk_of_face(walks, ts.hole);
  auto rep = superface_of_region(ts.mesh, {hw.face_id()});
  CHECK(rep.s == 1);
  CHECK(rep.walk_lengths == std::vector<int>{9});
  CHECK(rep.twice_gr == 0);
  CHECK(rep.enclosed_hole_lengths == std::vector<int>{9});
  CHECK(rep.delta == 0);
  CHECK(rep.balanced);
  CHECK(rep.simple);
}

TEST_CASE("girth pass on tight meshes, fail on the fan violator") {
  SurfaceMesh disc_m = disc().mesh;
  CHECK(check_girth(disc_m).pass);
  SurfaceMesh oct = octahedron();
  CHECK(check_girth(oct).pass);

  SurfaceMesh bad = k6_fan_mesh();
  CHECK(maxwell(bad) == 6);
  CHECK_FALSE(check_36_exhaustive(underlying_graph(bad)).tight());
  auto verdict = check_girth(bad);
  CHECK_FALSE(verdict.pass);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->delta < 0);
}

TEST_CASE("girth verdict equals tightness on a mixed corpus") {
  std::mt19937_64 rng(4242);
  std::vector<SurfaceMesh> corpus;
  corpus.push_back(disc().mesh);
  corpus.push_back(octahedron());
  corpus.push_back(k6_fan_mesh());
  // grow small tight meshes by random moves, keeping |E| <= 18
  SurfaceMesh m = disc().mesh;
  for (int i = 0; i < 30 && (int)corpus.size() < 24; ++i) {
    auto walks = trace_faces(m);
    std::uniform_int_distribution<size_t> pick(0, walks.size() - 1);
    const FaceWalk& w = walks[pick(rng)];
    SurfaceMesh next = m;
    if (!w.hole) {
      next = zero_extension(m, w.face_id(), w.vertices[0], w.vertices[1],
                            w.vertices[2])
                 .mesh;
    } else {
      next = collar(m, w.face_id()).mesh;
    }
    if (next.edge_count() <= 18) {
      corpus.push_back(next);
      m = next;
    } else {
      m = disc().mesh;
    }
  }
  int checked = 0;
  for (const SurfaceMesh& mesh : corpus) {
    if (maxwell(mesh) != 6 || mesh.edge_count() > 18) continue;
    bool tight = check_36_exhaustive(underlying_graph(mesh)).tight();
    CHECK(check_girth(mesh).pass == tight);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("lemma 5.1 equivalences agree on balanced simple superfaces") {
  for (const SurfaceMesh& mesh :
       {disc().mesh, octahedron(), k3_sphere(), k6_fan_mesh()}) {
    for (const auto& rep : enumerate_superfaces(mesh)) {
      if (!rep.balanced || !rep.simple) continue;
      auto res = lemma51_check(mesh, rep);
      CHECK(res.subgraph_count == res.capped_identity);
      CHECK(res.subgraph_count == res.girth_form);
      CHECK(reduced_genus_addition_holds(mesh, rep));
    }
  }
}

TEST_CASE("repair heals the fan violator") {
  SurfaceMesh bad = k6_fan_mesh();
  auto res = repair(bad, 100);
  CHECK(res.success);
  CHECK(maxwell(res.mesh) == 6);
  CHECK(check_36_flow(underlying_graph(res.mesh)).tight());
  CHECK(res.moves_used >= 1);
  // replaying the log reproduces the repaired mesh
  SurfaceMesh replayed = replay(bad, res.log);
  CHECK(canonicalized(replayed) == canonicalized(res.mesh));
}

TEST_CASE("repair is the identity on already-tight input") {
  auto res = repair(disc().mesh, 100);
  CHECK(res.success);
  CHECK(res.moves_used == 0);
}

TEST_CASE("extend_join repairs an hourglass join onto the torus seed") {
  auto ts = torus_seed();
  SurfaceMesh hg = hourglass_annulus();
  CHECK(maxwell(hg) == 18);
  // entrance: hole on ring a (contains vertex 0)
  auto walks = trace_faces(hg);
  Dart entrance{};
  for (const FaceWalk& w : walks)
    if (w.hole && w.contains_vertex(0)) entrance = w.face_id();

  SurfaceMesh joined = join(ts.mesh, ts.hole, hg, entrance);
  CHECK(maxwell(joined) == 6);
  CHECK_FALSE(check_36_flow(underlying_graph(joined)).tight());

  auto res = extend_join(ts.mesh, ts.hole, hg, entrance);
  CHECK(res.success);
  CHECK(check_36_flow(underlying_graph(res.mesh)).tight());
  CHECK(maxwell(res.mesh) == 6);
}

#include "tight36/seeds.hpp"

#include <algorithm>
#include <map>

#include "tight36/sparsity.hpp"

namespace tight36 {

int twice_reduced_genus(PieceSurface s) {
  switch (s) {
    case PieceSurface::Sphere: return 0;
    case PieceSurface::Projective: return 1;
    case PieceSurface::Torus: return 2;
  }
  return 0;
}

const char* to_string(PieceSurface s) {
  switch (s) {
    case PieceSurface::Sphere: return "sphere";
    case PieceSurface::Projective: return "projective";
    case PieceSurface::Torus: return "torus";
  }
  return "?";
}

SurfaceMesh cycle_mesh(int m) {
  if (m < 3) throw Error(ErrorKind::Precondition, "cycle length below 3");
  std::vector<int> cyc(m);
  for (int i = 0; i < m; ++i) cyc[i] = i;
  return mesh_from_faces({{cyc, true}, {cyc, true}});
}

SurfaceMesh bipyramid_mesh(int r) {
  if (r < 3) throw Error(ErrorKind::Precondition, "bipyramid needs r >= 3");
  std::vector<PolygonSpec> faces;
  for (int i = 0; i < r; ++i) {
    faces.push_back({{i, (i + 1) % r, r}, false});
    faces.push_back({{i, (i + 1) % r, r + 1}, false});
  }
  return mesh_from_faces(faces);
}

Graph bipyramid(int r) { return underlying_graph(bipyramid_mesh(r)); }

SurfaceMesh octahedron() { return bipyramid_mesh(4); }

SurfaceMesh hemi_icosahedron() {
  std::vector<PolygonSpec> faces = {
      {{1, 2, 3}, false}, {{1, 3, 4}, false}, {{1, 4, 5}, false},
      {{1, 5, 6}, false}, {{1, 2, 6}, false}, {{2, 4, 6}, false},
      {{2, 3, 5}, false}, {{3, 4, 6}, false}, {{2, 4, 5}, false},
      {{3, 5, 6}, false}};
  return mesh_from_faces(faces);
}

SurfaceMesh grid_torus(int p, int q) {
  if (p < 3 || q < 3) throw Error(ErrorKind::Precondition, "grid torus needs p,q >= 3");
  std::vector<PolygonSpec> faces;
  auto id = [&](int r, int c) { return ((r % p + p) % p) * q + ((c % q + q) % q); };
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < q; ++c) {
      faces.push_back({{id(r, c), id(r + 1, c), id(r + 1, c + 1)}, false});
      faces.push_back({{id(r, c), id(r, c + 1), id(r + 1, c + 1)}, false});
    }
  }
  return mesh_from_faces(faces);
}

SurfaceMesh triforce(const SurfaceMesh& mesh) {
  auto walks = trace_faces(mesh);
  for (const FaceWalk& w : walks)
    if (w.hole || w.length() != 3)
      throw Error(ErrorKind::Precondition, "refinement needs a closed triangle mesh");
  int next = mesh.max_vertex_id() + 1;
  std::map<std::pair<int, int>, int> midpoint;
  for (const Edge& e : mesh.edges()) midpoint[std::minmax(e.u, e.v)] = next++;
  std::vector<PolygonSpec> faces;
  for (const FaceWalk& w : walks) {
    int a = w.vertices[0], b = w.vertices[1], c = w.vertices[2];
    int ab = midpoint[std::minmax(a, b)];
    int bc = midpoint[std::minmax(b, c)];
    int ca = midpoint[std::minmax(c, a)];
    faces.push_back({{a, ab, ca}, false});
    faces.push_back({{b, bc, ab}, false});
    faces.push_back({{c, ca, bc}, false});
    faces.push_back({{ab, bc, ca}, false});
  }
  return mesh_from_faces(faces);
}

SeedResult disc() {
  SurfaceMesh m = mesh_from_faces({{{0, 1, 2}, false}, {{0, 1, 2}, true}});
  auto walks = trace_faces(m);
  for (const FaceWalk& w : walks)
    if (w.hole) return {m, w.face_id()};
  throw Error(ErrorKind::Internal, "disc without hole");
}

std::optional<StripRegion> find_strip(const SurfaceMesh& mesh, int length,
                                      const std::set<int>& forbidden) {
  if (length < 3) throw Error(ErrorKind::Precondition, "strip length below 3");
  auto walks = trace_faces(mesh);
  const int nf = static_cast<int>(walks.size());
  const int target = length - 2;

  std::map<std::pair<int, int>, std::vector<int>> faces_of_edge;
  for (int wi = 0; wi < nf; ++wi) {
    if (walks[wi].hole) continue;
    for (Dart d : walks[wi].darts) {
      const Edge* e = mesh.find_edge(d.edge);
      faces_of_edge[std::minmax(e->u, e->v)].push_back(wi);
    }
  }
  std::map<int, int> degree;
  for (const Edge& e : mesh.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }

  std::vector<int> path;
  std::set<int> used_faces;
  std::set<int> region_verts;

  auto face_ok_as_seed = [&](int wi) {
    if (walks[wi].hole) return false;
    for (int v : walks[wi].vertices)
      if (forbidden.count(v)) return false;
    return true;
  };

  auto finish_checks = [&]() -> std::optional<StripRegion> {
    // Count edge usage inside the region.
    std::map<std::pair<int, int>, int> usage;
    for (int wi : path)
      for (Dart d : walks[wi].darts) {
        const Edge* e = mesh.find_edge(d.edge);
        ++usage[std::minmax(e->u, e->v)];
      }
    std::map<int, std::vector<int>> boundary_adj;
    std::map<int, int> interior_at;
    int boundary_edges = 0;
    for (auto& [key, count] : usage) {
      if (count == 1) {
        boundary_adj[key.first].push_back(key.second);
        boundary_adj[key.second].push_back(key.first);
        ++boundary_edges;
      } else {
        ++interior_at[key.first];
        ++interior_at[key.second];
      }
    }
    if (boundary_edges != length) return std::nullopt;
    for (auto& [v, nbrs] : boundary_adj)
      if (nbrs.size() != 2) return std::nullopt;
    // Walk the boundary cycle.
    std::vector<int> cycle;
    int start = boundary_adj.begin()->first;
    int prev = -1, cur = start;
    do {
      cycle.push_back(cur);
      auto& nb = boundary_adj[cur];
      int nxt = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    } while (cur != start && static_cast<int>(cycle.size()) <= length);
    if (static_cast<int>(cycle.size()) != length) return std::nullopt;
    // Degrees after excision must not leave weak spots.
    std::map<int, int> new_deg;
    for (int v : region_verts) {
      int nd = degree.at(v) - (interior_at.count(v) ? interior_at.at(v) : 0);
      if (nd < 3) return std::nullopt;
      new_deg[v] = nd;
    }
    for (auto& [key, count] : usage) {
      if (count != 1) continue;  // this edge survives on the boundary
      if (new_deg[key.first] == 3 && new_deg[key.second] == 3) return std::nullopt;
    }
    StripRegion region;
    region.boundary_cycle = cycle;
    region.vertices = region_verts;
    return region;
  };

  std::optional<StripRegion> found;
  auto dfs = [&](auto&& self, int last) -> bool {
    if (static_cast<int>(path.size()) == target) {
      found = finish_checks();
      return found.has_value();
    }
    // Extend across a free edge of the last face.
    for (Dart d : walks[last].darts) {
      const Edge* e = mesh.find_edge(d.edge);
      for (int wi : faces_of_edge[std::minmax(e->u, e->v)]) {
        if (used_faces.count(wi) || walks[wi].hole) continue;
        int apex = -1;
        bool fits = true;
        for (int v : walks[wi].vertices) {
          if (v == e->u || v == e->v) continue;
          if (region_verts.count(v) || forbidden.count(v)) fits = false;
          apex = v;
        }
        if (!fits || apex < 0) continue;
        path.push_back(wi);
        used_faces.insert(wi);
        region_verts.insert(apex);
        if (self(self, wi)) return true;
        path.pop_back();
        used_faces.erase(wi);
        region_verts.erase(apex);
      }
    }
    return false;
  };

  for (int seed = 0; seed < nf; ++seed) {
    if (!face_ok_as_seed(seed)) continue;
    path = {seed};
    used_faces = {seed};
    region_verts =
        std::set<int>(walks[seed].vertices.begin(), walks[seed].vertices.end());
    if (target == 1) {
      found = finish_checks();
      if (found) return found;
    } else if (dfs(dfs, seed)) {
      return found;
    }
  }
  return std::nullopt;
}

namespace {

Dart hole_with_ring(const SurfaceMesh& mesh, const std::vector<int>& ring_members,
                    int expected_len) {
  auto walks = trace_faces(mesh);
  for (const FaceWalk& w : walks) {
    if (!w.hole || w.length() != expected_len) continue;
    bool all = true;
    for (int v : ring_members)
      if (!w.contains_vertex(v)) all = false;
    if (all) return w.face_id();
  }
  throw Error(ErrorKind::Internal, "expected hole not found");
}

// Cut one boundary cycle of the requested length out of a closed mesh.
struct CutResult {
  SurfaceMesh mesh;
  Dart hole{};
  std::set<int> region_vertices;
};

std::optional<CutResult> cut_boundary(const SurfaceMesh& closed, int length,
                                      const std::set<int>& forbidden) {
  auto strip = find_strip(closed, length, forbidden);
  if (!strip) return std::nullopt;
  auto ex = excise_region(closed, strip->boundary_cycle, {});
  return CutResult{ex.mesh, ex.new_hole, strip->vertices};
}

bool certify_sparse(const SurfaceMesh& mesh) {
  auto verdict = check_36_flow(underlying_graph(mesh));
  return verdict.deficiency <= 0;
}

}  // namespace

SeedResult projective_seed() {
  static const SeedResult cached = [] {
    SurfaceMesh base = triforce(hemi_icosahedron());
    auto cut = cut_boundary(base, 6, {});
    if (!cut) throw Error(ErrorKind::Internal, "no hexagon strip in the base mesh");
    if (!certify_sparse(cut->mesh))
      throw Error(ErrorKind::Internal, "projective seed failed the sparsity check");
    auto inv = surface_invariants(cut->mesh);
    if (inv.orientable || inv.twice_reduced_genus != 1 || inv.maxwell != 6)
      throw Error(ErrorKind::Internal, "projective seed has wrong invariants");
    return SeedResult{cut->mesh, cut->hole};
  }();
  return cached;
}

SeedResult torus_seed() {
  static const SeedResult cached = [] {
    for (auto [p, q] : {std::pair{3, 6}, std::pair{4, 5}, std::pair{4, 6}}) {
      SurfaceMesh base = grid_torus(p, q);
      auto cut = cut_boundary(base, 9, {});
      if (!cut) continue;
      if (!certify_sparse(cut->mesh)) continue;
      auto inv = surface_invariants(cut->mesh);
      if (!inv.orientable || inv.twice_reduced_genus != 2 || inv.maxwell != 6)
        continue;
      return SeedResult{cut->mesh, cut->hole};
    }
    throw Error(ErrorKind::Internal, "no torus seed candidate certified");
  }();
  return cached;
}

PantsResult sphere_pants(int lb, int lc) {
  if (lb < 3 || lc < 3)
    throw Error(ErrorKind::Precondition, "pants exits must have length >= 3");
  const int d = lb + lc - 3;
  SurfaceMesh m = cycle_mesh(d);
  auto walks = trace_faces(m);
  const FaceWalk& back = walks[0].hole ? walks[0] : walks[1];
  // Split the back hole into a triangle and the two exits.
  int x = back.vertices[0];
  int y = back.vertices[1 % d];
  int z = back.vertices[(lb - 1) % d];
  auto r = zero_extension(m, back.face_id(), x, y, z, {false, true, true});
  m = r.mesh;
  int u = r.new_vertex;

  // Exits are the two holes through the new vertex; the entrance is the other.
  Dart exit_b{}, exit_c{};
  {
    auto hs = trace_faces(m);
    bool b_found = false;
    for (const FaceWalk& w : hs) {
      if (!w.hole || !w.contains_vertex(u)) continue;
      if (w.length() == lb && !b_found) {
        exit_b = w.face_id();
        b_found = true;
      } else {
        exit_c = w.face_id();
      }
    }
  }

  // Collars free both exits from the entrance cycle.
  auto cb = collar(m, exit_b);
  m = cb.mesh;
  // re-locate exit_c: the hole through u of length lc
  Dart exit_c2{};
  for (const FaceWalk& w : trace_faces(m))
    if (w.hole && w.contains_vertex(u) && w.length() == lc) exit_c2 = w.face_id();
  auto cc = collar(m, exit_c2);
  m = cc.mesh;
  Dart exit_c3 = cc.new_hole;
  Dart exit_b3 = hole_with_ring(m, cb.ring, lb);

  // The entrance is the remaining hole: the original cycle.
  Dart entrance{};
  for (const FaceWalk& w : trace_faces(m)) {
    if (!w.hole) continue;
    if (w.contains_vertex(0) && w.length() == d) entrance = w.face_id();
  }

  int f = 3 * m.vertex_count() - m.edge_count();
  if (f != 2 * (lb + lc) - 6)
    throw Error(ErrorKind::Internal, "pants maxwell count is off");
  require_valid(m);
  return PantsResult{m, entrance, exit_b3, exit_c3};
}

PieceResult piece(PieceSurface kind, int delta) {
  if (delta < 3) throw Error(ErrorKind::Precondition, "piece entrance below 3");
  static std::map<std::pair<PieceSurface, int>, PieceResult> cache;
  auto key = std::make_pair(kind, delta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int exit_len = delta + 3 * twice_reduced_genus(kind);
  PieceResult result;
  result.entrance_length = delta;
  result.exit_length = exit_len;

  if (kind == PieceSurface::Sphere) {
    // A cylinder: the entrance cycle with a collared far side.
    SurfaceMesh m = cycle_mesh(delta);
    auto walks = trace_faces(m);
    auto c = collar(m, walks[0].face_id());
    m = c.mesh;
    result.exit = c.new_hole;
    for (const FaceWalk& w : trace_faces(m))
      if (w.hole && w.contains_vertex(0)) result.entrance = w.face_id();
    result.mesh = m;
  } else {
    // Open a 3-hole next to the seed boundary, then grow both walks in step
    // by subdividing an edge they share; collars separate them at the end.
    SeedResult seed =
        kind == PieceSurface::Torus ? torus_seed() : projective_seed();
    SurfaceMesh m = seed.mesh;
    auto walks = trace_faces(m);
    const FaceWalk& seed_hole = walk_of_face(walks, seed.hole);

    const FaceWalk* door = nullptr;  // triangle with one edge on the seed hole
    for (const FaceWalk& w : walks) {
      if (w.hole) continue;
      int on_walk_edges = 0, on_walk_verts = 0;
      for (Dart d : w.darts) {
        const Edge* e = m.find_edge(d.edge);
        bool u_on = seed_hole.contains_vertex(e->u);
        bool v_on = seed_hole.contains_vertex(e->v);
        bool edge_on = false;
        if (u_on && v_on) {
          const int L = seed_hole.length();
          for (int i = 0; i < L; ++i) {
            int a = seed_hole.vertices[i], b = seed_hole.vertices[(i + 1) % L];
            if ((a == e->u && b == e->v) || (a == e->v && b == e->u)) edge_on = true;
          }
        }
        if (edge_on) ++on_walk_edges;
      }
      for (int v : w.vertices)
        if (seed_hole.contains_vertex(v)) ++on_walk_verts;
      if (on_walk_edges == 1 && on_walk_verts == 2) {
        door = &w;
        break;
      }
    }
    if (!door) throw Error(ErrorKind::Internal, "no door triangle by the seed hole");
    auto ex = excise_region(m, door->vertices, {});
    m = ex.mesh;

    // Grow both holes together.
    const int base_small = 3;
    for (int k = 0; k < delta - base_small; ++k) {
      int shared = -1;
      auto cur = trace_faces(m);
      for (const Edge& e : m.edges()) {
        const FaceWalk* s[2] = {nullptr, nullptr};
        int cnt = 0;
        for (const FaceWalk& w : cur)
          for (Dart d : w.darts)
            if (d.edge == e.id && cnt < 2) s[cnt++] = &w;
        if (cnt == 2 && s[0] != s[1] && s[0]->hole && s[1]->hole) {
          shared = e.id;
          break;
        }
      }
      if (shared < 0)
        throw Error(ErrorKind::Internal, "piece growth lost the shared edge");
      m = subdivide_boundary_edge(m, shared).mesh;
    }

    // Collar both boundaries, smaller first.
    auto hole_of_length = [&](const SurfaceMesh& mm, int len) {
      for (const FaceWalk& w : trace_faces(mm))
        if (w.hole && w.length() == len) return w.face_id();
      throw Error(ErrorKind::Internal, "expected boundary length missing");
    };
    auto c1 = collar(m, hole_of_length(m, delta));
    m = c1.mesh;
    auto c2 = collar(m, hole_of_length(m, exit_len));
    m = c2.mesh;
    result.entrance = hole_with_ring(m, c1.ring, delta);
    result.exit = c2.new_hole;

    int f = 3 * m.vertex_count() - m.edge_count();
    if (f != 2 * delta)
      throw Error(ErrorKind::Internal, "piece maxwell count is off");
    require_valid(m);
    if (!certify_sparse(m))
      throw Error(ErrorKind::Internal,
                  std::string("piece for ") + to_string(kind) + " with entrance " +
                      std::to_string(delta) + " failed the sparsity check");
    result.mesh = m;
  }

  cache[key] = result;
  return result;
}

}  // namespace tight36

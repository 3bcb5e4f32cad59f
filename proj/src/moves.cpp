#include "tight36/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tight36 {

namespace {

std::map<std::pair<int, int>, int> edge_id_map(const SurfaceMesh& mesh) {
  std::map<std::pair<int, int>, int> ids;
  for (const Edge& e : mesh.edges()) ids[std::minmax(e.u, e.v)] = e.id;
  return ids;
}

std::vector<PolygonSpec> polygons_of(const std::vector<FaceWalk>& walks) {
  std::vector<PolygonSpec> polys;
  polys.reserve(walks.size());
  for (const FaceWalk& w : walks) polys.push_back({w.vertices, w.hole});
  return polys;
}

void check_deltas(const SurfaceMesh& before, const SurfaceMesh& after, int dv,
                  int de) {
  if (after.vertex_count() - before.vertex_count() != dv ||
      after.edge_count() - before.edge_count() != de)
    throw Error(ErrorKind::Internal, "move changed counts unexpectedly");
  require_valid(after);
}

int position_of(const std::vector<int>& cycle, int v) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  if (it == cycle.end())
    throw Error(ErrorKind::Precondition,
                "vertex " + std::to_string(v) + " is not on the face walk");
  return static_cast<int>(it - cycle.begin());
}

std::vector<int> ring_canon(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> cand(n);
      for (int i = 0; i < n; ++i)
        cand[i] = c[dir == 0 ? (s + i) % n : ((s - i) % n + n) % n];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

ZeroExtensionResult zero_extension(const SurfaceMesh& mesh, Dart face, int x,
                                   int y, int z,
                                   std::array<bool, 3> force_hole) {
  if (x == y || y == z || x == z)
    throw Error(ErrorKind::Precondition, "anchors must be distinct");
  auto walks = trace_faces(mesh);
  const FaceWalk& w = walk_of_face(walks, face);
  const int len = w.length();
  int px = position_of(w.vertices, x);
  int py = position_of(w.vertices, y);
  int pz = position_of(w.vertices, z);
  int ay = (py - px + len) % len;
  int az = (pz - px + len) % len;
  if (!(0 < ay && ay < az))
    throw Error(ErrorKind::Precondition, "anchors are not in cyclic walk order");
  int arc[3] = {ay, az - ay, len - az};

  if (!w.hole) {
    if (force_hole[0] || force_hole[1] || force_hole[2])
      throw Error(ErrorKind::Precondition, "hole regions only arise inside holes");
  }

  const int u = mesh.max_vertex_id() + 1;
  std::vector<PolygonSpec> polys;
  for (const FaceWalk& other : walks) {
    if (&other == &w) continue;
    polys.push_back({other.vertices, other.hole});
  }
  int starts[3] = {px, py, pz};
  for (int r = 0; r < 3; ++r) {
    std::vector<int> region;
    for (int k = 0; k <= arc[r]; ++k) region.push_back(w.vertices[(starts[r] + k) % len]);
    region.push_back(u);
    bool hole = w.hole && (arc[r] >= 2 || force_hole[r]);
    polys.push_back({region, hole});
  }

  auto ids = edge_id_map(mesh);
  ZeroExtensionResult res{mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1), u};
  check_deltas(mesh, res.mesh, 1, 3);
  return res;
}

VertexSplitResult vertex_split(const SurfaceMesh& mesh, int v, int a, int b,
                               int side) {
  if (a == b) throw Error(ErrorKind::Precondition, "split neighbours must differ");
  auto rot_it = mesh.rotation().find(v);
  if (rot_it == mesh.rotation().end())
    throw Error(ErrorKind::Precondition, "no such vertex " + std::to_string(v));
  const auto& rot = rot_it->second;
  const int t = static_cast<int>(rot.size());
  int ia = -1, ib = -1;
  for (int i = 0; i < t; ++i) {
    int other = mesh.dart_other(rot[i]);
    if (other == a) ia = i;
    if (other == b) ib = i;
  }
  if (ia < 0 || ib < 0)
    throw Error(ErrorKind::Precondition, "a and b must be neighbours of v");

  // Slots between consecutive rotation darts, walked from va to vb one way or
  // the other; the faces at those slots move their v-corner to the new vertex.
  std::vector<int> slots;  // slot s sits between rot[s] and rot[s+1]
  if (side == 0) {
    for (int s = ia; s != ib; s = (s + 1) % t) slots.push_back(s);
  } else {
    for (int s = ib; s != ia; s = (s + 1) % t) slots.push_back(s);
  }
  std::set<int> arc_positions;  // rotation positions transferred to v2
  for (size_t k = 1; k < slots.size(); ++k) arc_positions.insert(slots[k]);
  int start = side == 0 ? ia : ib;
  int finish = side == 0 ? ib : ia;
  int va_like = mesh.dart_other(rot[start]);
  int vb_like = mesh.dart_other(rot[finish]);

  auto walks = trace_faces(mesh);

  // Assign each face corner at v to a rotation slot.
  std::vector<std::pair<int, int>> corner_edge_pairs(t);
  for (int s = 0; s < t; ++s)
    corner_edge_pairs[s] = {rot[s].edge, rot[(s + 1) % t].edge};
  std::vector<int> slot_face(t, -1);
  for (int wi = 0; wi < static_cast<int>(walks.size()); ++wi) {
    const FaceWalk& w = walks[wi];
    const int len = w.length();
    for (int p = 0; p < len; ++p) {
      if (w.vertices[p] != v) continue;
      int e_in = w.darts[(p - 1 + len) % len].edge;
      int e_out = w.darts[p].edge;
      bool placed = false;
      for (int s = 0; s < t && !placed; ++s) {
        if (slot_face[s] != -1) continue;
        auto [ea, eb] = corner_edge_pairs[s];
        if ((ea == e_in && eb == e_out) || (ea == e_out && eb == e_in)) {
          slot_face[s] = wi;
          placed = true;
        }
      }
      if (!placed) throw Error(ErrorKind::Internal, "corner without a slot");
    }
  }

  std::set<int> moved_faces;
  for (int s : slots)
    if (slot_face[s] >= 0) moved_faces.insert(slot_face[s]);

  const int v2 = mesh.max_vertex_id() + 1;
  std::vector<PolygonSpec> polys;
  for (int wi = 0; wi < static_cast<int>(walks.size()); ++wi) {
    PolygonSpec p{walks[wi].vertices, walks[wi].hole};
    if (moved_faces.count(wi))
      for (int& vv : p.cycle)
        if (vv == v) vv = v2;
    polys.push_back(p);
  }
  polys.push_back({{v, va_like, v2}, false});
  polys.push_back({{v, v2, vb_like}, false});

  // Transferred edges keep their ids under the new endpoint.
  auto ids = edge_id_map(mesh);
  for (int s : arc_positions) {
    int other = mesh.dart_other(rot[s]);
    auto key = std::minmax(v, other);
    int id = ids.at(key);
    ids.erase(key);
    ids[std::minmax(v2, other)] = id;
  }
  VertexSplitResult res{mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1), v2};
  check_deltas(mesh, res.mesh, 1, 3);
  return res;
}

SurfaceMesh carve_hole(const SurfaceMesh& mesh, Dart face) {
  auto walks = trace_faces(mesh);
  const FaceWalk& w = walk_of_face(walks, face);
  if (w.hole) throw Error(ErrorKind::Precondition, "face is already a hole");
  if (w.length() != 3)
    throw Error(ErrorKind::Precondition, "only triangle faces can be carved");
  for (const FaceWalk& other : walks) {
    if (!other.hole) continue;
    for (int v : w.vertices)
      if (other.contains_vertex(v))
        throw Error(ErrorKind::Precondition,
                    "triangle shares vertex " + std::to_string(v) +
                        " with an existing hole");
  }
  std::set<Dart> holes = mesh.holes();
  holes.insert(w.face_id());
  return SurfaceMesh(mesh.vertices(), mesh.edges(), mesh.rotation(), holes);
}

CollarResult collar(const SurfaceMesh& mesh, Dart hole) {
  auto walks = trace_faces(mesh);
  const FaceWalk* cur = &walk_of_face(walks, hole);
  if (!cur->hole) throw Error(ErrorKind::Precondition, "collar target is not a hole");
  if (!cur->is_cycle())
    throw Error(ErrorKind::Precondition, "hole walk is not a cycle");
  const int m = cur->length();
  std::vector<int> old_ring = cur->vertices;

  std::set<int> old_set(old_ring.begin(), old_ring.end());
  SurfaceMesh work = mesh;
  std::vector<int> ring;
  int prev_u = -1;
  for (int step = 0; step < m; ++step) {
    walks = trace_faces(work);
    const FaceWalk* hw = nullptr;
    if (step == 0) {
      hw = &walk_of_face(walks, hole);
    } else {
      for (const FaceWalk& w : walks)
        if (w.hole && w.contains_vertex(prev_u)) hw = &w;
      if (!hw) throw Error(ErrorKind::Internal, "lost the collar hole");
    }
    const int len = hw->length();
    // Each step swallows one original boundary vertex: march from the newest
    // ring vertex towards whichever side of the walk still carries old ones.
    int x, y, z;
    if (step == 0) {
      x = hw->vertices[0];
      y = hw->vertices[1];
      z = hw->vertices[2];
    } else {
      int p = position_of(hw->vertices, prev_u);
      int succ = hw->vertices[(p + 1) % len];
      if (old_set.count(succ)) {
        x = prev_u;
        y = succ;
        z = hw->vertices[(p + 2) % len];
      } else {
        x = hw->vertices[(p - 2 + len) % len];
        y = hw->vertices[(p - 1 + len) % len];
        z = prev_u;
      }
      if (!old_set.count(y))
        throw Error(ErrorKind::Internal, "collar lost track of the boundary");
    }
    auto r = zero_extension(work, hw->face_id(), x, y, z, {false, false, true});
    work = r.mesh;
    prev_u = r.new_vertex;
    ring.push_back(prev_u);
  }

  walks = trace_faces(work);
  const FaceWalk* final_hole = nullptr;
  for (const FaceWalk& w : walks)
    if (w.hole && w.contains_vertex(prev_u)) final_hole = &w;
  if (!final_hole || final_hole->length() != m)
    throw Error(ErrorKind::Internal, "collar did not preserve the hole length");
  for (int v : old_ring)
    if (final_hole->contains_vertex(v))
      throw Error(ErrorKind::Internal, "collar ring touches the old walk");
  return CollarResult{work, final_hole->face_id(), final_hole->vertices};
}

SurfaceMesh barycentric_local(const SurfaceMesh& mesh, int edge_id) {
  const Edge* e = mesh.find_edge(edge_id);
  if (!e) throw Error(ErrorKind::Precondition, "no such edge");
  auto walks = trace_faces(mesh);
  const FaceWalk* w1 = nullptr;
  const FaceWalk* w2 = nullptr;
  for (const FaceWalk& w : walks) {
    for (Dart d : w.darts) {
      if (d.edge != edge_id) continue;
      if (!w1) {
        w1 = &w;
      } else if (&w != w1) {
        w2 = &w;
      } else {
        throw Error(ErrorKind::Precondition, "edge lies twice on one face walk");
      }
    }
  }
  if (!w1 || !w2) throw Error(ErrorKind::Internal, "edge misses a face side");
  if (w1->hole || w2->hole || w1->length() != 3 || w2->length() != 3)
    throw Error(ErrorKind::Precondition,
                "edge must be interior to two triangle faces");

  auto third = [&](const FaceWalk& w) {
    for (int v : w.vertices)
      if (v != e->u && v != e->v) return v;
    throw Error(ErrorKind::Internal, "degenerate triangle");
  };
  int c1 = third(*w1), c2 = third(*w2);
  int mid = mesh.max_vertex_id() + 1, b1 = mid + 1, b2 = mid + 2;

  std::vector<PolygonSpec> polys;
  for (const FaceWalk& w : walks) {
    if (&w == w1 || &w == w2) continue;
    polys.push_back({w.vertices, w.hole});
  }
  for (auto [bi, ci] : {std::pair{b1, c1}, std::pair{b2, c2}}) {
    polys.push_back({{e->u, mid, bi}, false});
    polys.push_back({{mid, e->v, bi}, false});
    polys.push_back({{e->v, ci, bi}, false});
    polys.push_back({{ci, e->u, bi}, false});
  }

  auto ids = edge_id_map(mesh);
  ids.erase(std::minmax(e->u, e->v));
  SurfaceMesh out = mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1);
  check_deltas(mesh, out, 3, 9);
  return out;
}

SubdivideResult subdivide_boundary_edge(const SurfaceMesh& mesh, int edge_id) {
  const Edge* e = mesh.find_edge(edge_id);
  if (!e) throw Error(ErrorKind::Precondition, "no such edge");
  auto walks = trace_faces(mesh);
  std::vector<const FaceWalk*> sides;
  for (const FaceWalk& w : walks)
    for (Dart d : w.darts)
      if (d.edge == edge_id) sides.push_back(&w);
  if (sides.size() != 2 || sides[0] == sides[1] || !sides[0]->hole ||
      !sides[1]->hole)
    throw Error(ErrorKind::Precondition,
                "edge must separate two distinct hole faces");

  const int w = mesh.max_vertex_id() + 1;
  std::vector<PolygonSpec> polys;
  for (const FaceWalk& fw : walks) {
    PolygonSpec p{fw.vertices, fw.hole};
    if (&fw == sides[0] || &fw == sides[1]) {
      std::vector<int> cyc;
      const int len = fw.length();
      for (int i = 0; i < len; ++i) {
        cyc.push_back(fw.vertices[i]);
        if (fw.darts[i].edge == edge_id) cyc.push_back(w);
      }
      p.cycle = cyc;
    }
    polys.push_back(p);
  }
  auto ids = edge_id_map(mesh);
  ids.erase(std::minmax(e->u, e->v));
  SubdivideResult res{mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1), w};
  check_deltas(mesh, res.mesh, 1, 1);
  return res;
}

SurfaceMesh join(const SurfaceMesh& a, Dart hole_a, const SurfaceMesh& b,
                 Dart hole_b, JoinAlignment alignment) {
  return join_ex(a, hole_a, b, hole_b, alignment).mesh;
}

JoinResult join_ex(const SurfaceMesh& a, Dart hole_a, const SurfaceMesh& b,
                   Dart hole_b, JoinAlignment alignment) {
  auto walks_a = trace_faces(a);
  auto walks_b = trace_faces(b);
  const FaceWalk& wa = walk_of_face(walks_a, hole_a);
  const FaceWalk& wb = walk_of_face(walks_b, hole_b);
  if (!wa.hole || !wb.hole)
    throw Error(ErrorKind::Precondition, "join targets must be holes");
  if (wa.length() != wb.length())
    throw Error(ErrorKind::Precondition, "hole lengths differ");
  const int m = wa.length();

  auto ring_from_least = [](const FaceWalk& w) {
    auto it = std::min_element(w.vertices.begin(), w.vertices.end());
    std::vector<int> r(w.vertices.size());
    std::rotate_copy(w.vertices.begin(), it, w.vertices.end(), r.begin());
    return r;
  };
  std::vector<int> ra = ring_from_least(wa);
  std::vector<int> rb = ring_from_least(wb);

  std::map<int, int> vmap;  // b vertex -> merged vertex
  for (int i = 0; i < m; ++i) {
    int j = alignment.reversed ? ((alignment.offset - i) % m + m) % m
                               : (alignment.offset + i) % m;
    vmap[rb[j]] = ra[i];
  }
  int next_v = a.max_vertex_id() + 1;
  for (int v : b.vertices())
    if (!vmap.count(v)) vmap[v] = next_v++;

  // Simplicity: a mapped b-edge may coincide with an a-edge only on the ring.
  std::set<std::pair<int, int>> ring_edges;
  for (int i = 0; i < m; ++i) ring_edges.insert(std::minmax(ra[i], ra[(i + 1) % m]));
  std::set<std::pair<int, int>> a_pairs;
  for (const Edge& e : a.edges()) a_pairs.insert(std::minmax(e.u, e.v));
  for (const Edge& e : b.edges()) {
    auto key = std::minmax(vmap[e.u], vmap[e.v]);
    if (key.first == key.second)
      throw Error(ErrorKind::Precondition, "join identification collapses an edge");
    if (a_pairs.count(key) && !ring_edges.count(key))
      throw Error(ErrorKind::Precondition,
                  "join would create parallel edges outside the glued cycle");
  }

  std::vector<PolygonSpec> polys;
  for (const FaceWalk& w : walks_a) {
    if (&w == &wa) continue;
    polys.push_back({w.vertices, w.hole});
  }
  for (const FaceWalk& w : walks_b) {
    if (&w == &wb) continue;
    PolygonSpec p{w.vertices, w.hole};
    for (int& v : p.cycle) v = vmap[v];
    polys.push_back(p);
  }

  auto ids = edge_id_map(a);
  SurfaceMesh out = mesh_from_faces(polys, &ids, a.max_edge_id() + 1);
  require_valid(out);
  int fa = 3 * a.vertex_count() - a.edge_count();
  int fb = 3 * b.vertex_count() - b.edge_count();
  int fo = 3 * out.vertex_count() - out.edge_count();
  if (fo != fa + fb - 2 * m)
    throw Error(ErrorKind::Internal, "join count formula violated");
  return JoinResult{out, vmap};
}

SurfaceMesh self_join(const SurfaceMesh& mesh, Dart hole_a, Dart hole_b,
                      JoinAlignment alignment) {
  auto walks = trace_faces(mesh);
  const FaceWalk& wa = walk_of_face(walks, hole_a);
  const FaceWalk& wb = walk_of_face(walks, hole_b);
  if (&wa == &wb)
    throw Error(ErrorKind::Precondition, "self join needs two distinct holes");
  if (!wa.hole || !wb.hole)
    throw Error(ErrorKind::Precondition, "self join targets must be holes");
  if (wa.length() != wb.length())
    throw Error(ErrorKind::Precondition, "hole lengths differ");
  const int m = wa.length();
  for (int v : wa.vertices)
    if (wb.contains_vertex(v))
      throw Error(ErrorKind::Precondition, "self join walks share a vertex");

  auto ring_from_least = [](const FaceWalk& w) {
    auto it = std::min_element(w.vertices.begin(), w.vertices.end());
    std::vector<int> r(w.vertices.size());
    std::rotate_copy(w.vertices.begin(), it, w.vertices.end(), r.begin());
    return r;
  };
  std::vector<int> ra = ring_from_least(wa);
  std::vector<int> rb = ring_from_least(wb);
  std::map<int, int> vmap;
  for (int v : mesh.vertices()) vmap[v] = v;
  for (int i = 0; i < m; ++i) {
    int j = alignment.reversed ? ((alignment.offset - i) % m + m) % m
                               : (alignment.offset + i) % m;
    vmap[rb[j]] = ra[i];
  }

  std::set<std::pair<int, int>> ring_edges;
  for (int i = 0; i < m; ++i) ring_edges.insert(std::minmax(ra[i], ra[(i + 1) % m]));
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : mesh.edges()) {
    auto key = std::minmax(vmap[e.u], vmap[e.v]);
    if (key.first == key.second)
      throw Error(ErrorKind::Precondition, "self join collapses an edge");
    if (!seen.insert(key).second && !ring_edges.count(key))
      throw Error(ErrorKind::Precondition,
                  "self join would create parallel edges outside the glued cycle");
  }

  std::vector<PolygonSpec> polys;
  for (const FaceWalk& w : walks) {
    if (&w == &wa || &w == &wb) continue;
    PolygonSpec p{w.vertices, w.hole};
    for (int& v : p.cycle) v = vmap[v];
    polys.push_back(p);
  }
  // Edges on the b-walk take the ids of their identified a-walk partners.
  std::map<std::pair<int, int>, int> ids;
  for (const Edge& e : mesh.edges()) {
    auto key = std::minmax(vmap[e.u], vmap[e.v]);
    auto it = ids.find(key);
    if (it == ids.end() || e.id < it->second) ids[key] = e.id;
  }
  SurfaceMesh out = mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1);
  require_valid(out);
  int f_in = 3 * mesh.vertex_count() - mesh.edge_count();
  int f_out = 3 * out.vertex_count() - out.edge_count();
  if (f_out != f_in - 2 * m)
    throw Error(ErrorKind::Internal, "self join count formula violated");
  return out;
}

ExciseResult excise_region(const SurfaceMesh& mesh, const std::vector<int>& cycle,
                           const std::vector<int>& interior) {
  const int m = static_cast<int>(cycle.size());
  if (m < 3) throw Error(ErrorKind::Precondition, "boundary cycle shorter than 3");
  if (std::set<int>(cycle.begin(), cycle.end()).size() != cycle.size())
    throw Error(ErrorKind::Precondition, "boundary is not a cycle");
  std::set<std::pair<int, int>> boundary_edges;
  for (int i = 0; i < m; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % m];
    if (!mesh.find_edge_between(u, v))
      throw Error(ErrorKind::Precondition, "boundary cycle uses a missing edge");
    boundary_edges.insert(std::minmax(u, v));
  }
  std::set<int> interior_set(interior.begin(), interior.end());
  for (int v : interior_set)
    if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
      throw Error(ErrorKind::Precondition, "interior vertex lies on the boundary");

  auto walks = trace_faces(mesh);
  const int nf = static_cast<int>(walks.size());

  // Face adjacency across non-boundary edges.
  std::map<std::pair<int, int>, std::vector<int>> faces_of_edge;
  for (int wi = 0; wi < nf; ++wi)
    for (Dart d : walks[wi].darts) {
      const Edge* e = mesh.find_edge(d.edge);
      faces_of_edge[std::minmax(e->u, e->v)].push_back(wi);
    }

  auto grow = [&](int seed) {
    std::set<int> region;
    std::queue<int> q;
    q.push(seed);
    region.insert(seed);
    while (!q.empty()) {
      int wi = q.front();
      q.pop();
      for (Dart d : walks[wi].darts) {
        const Edge* e = mesh.find_edge(d.edge);
        auto key = std::minmax(e->u, e->v);
        if (boundary_edges.count(key)) continue;
        for (int other : faces_of_edge[key])
          if (region.insert(other).second) q.push(other);
      }
    }
    return region;
  };

  auto region_ok = [&](const std::set<int>& region) {
    if (region.size() == walks.size()) return false;
    std::set<int> verts;
    std::set<std::pair<int, int>> edges_in;
    for (int wi : region) {
      if (walks[wi].hole) return false;
      for (int v : walks[wi].vertices) verts.insert(v);
      for (Dart d : walks[wi].darts) {
        const Edge* e = mesh.find_edge(d.edge);
        edges_in.insert(std::minmax(e->u, e->v));
      }
    }
    std::set<int> inner = verts;
    for (int v : cycle) inner.erase(v);
    if (inner != interior_set) return false;
    for (int v : cycle)
      if (!verts.count(v)) return false;
    // Every region edge is either on the cycle or strictly inside; boundary
    // edges used by the region must be exactly the cycle.
    std::set<std::pair<int, int>> used_boundary;
    for (auto& e : edges_in)
      if (boundary_edges.count(e)) used_boundary.insert(e);
    if (used_boundary != boundary_edges) return false;
    int chi = static_cast<int>(verts.size()) - static_cast<int>(edges_in.size()) +
              static_cast<int>(region.size());
    return chi == 1;
  };

  // The two sides of the first boundary edge are the candidate regions.
  auto first_edge = *boundary_edges.begin();
  std::vector<int> seeds = faces_of_edge[first_edge];
  std::optional<std::set<int>> chosen;
  for (int seed : seeds) {
    auto region = grow(seed);
    if (!region_ok(region)) continue;
    if (!chosen || *region.begin() < *chosen->begin()) chosen = region;
  }
  if (!chosen)
    throw Error(ErrorKind::Precondition,
                "the given cycle and interior do not bound a disc region");

  std::vector<PolygonSpec> polys;
  for (int wi = 0; wi < nf; ++wi) {
    if (chosen->count(wi)) continue;
    polys.push_back({walks[wi].vertices, walks[wi].hole});
  }
  polys.push_back({cycle, true});

  auto ids = edge_id_map(mesh);
  SurfaceMesh out = mesh_from_faces(polys, &ids, mesh.max_edge_id() + 1);
  require_valid(out);
  int df = (3 * out.vertex_count() - out.edge_count()) -
           (3 * mesh.vertex_count() - mesh.edge_count());
  if (df != m - 3)
    throw Error(ErrorKind::Internal, "excision count formula violated");

  auto out_walks = trace_faces(out);
  for (const FaceWalk& w : out_walks) {
    if (!w.hole) continue;
    if (ring_canon(w.vertices) == ring_canon(cycle))
      return ExciseResult{out, w.face_id()};
  }
  throw Error(ErrorKind::Internal, "excised hole not found");
}

SurfaceMesh apply_move(const SurfaceMesh& mesh, const MoveRecord& rec) {
  using K = MoveRecord::Kind;
  switch (rec.kind) {
    case K::ZeroExtension:
      return zero_extension(mesh, rec.face, rec.anchors[0], rec.anchors[1],
                            rec.anchors[2], rec.force_hole)
          .mesh;
    case K::VertexSplit:
      return vertex_split(mesh, rec.v, rec.a, rec.b, rec.side).mesh;
    case K::Carve:
      return carve_hole(mesh, rec.face);
    case K::Collar:
      return collar(mesh, rec.face).mesh;
    case K::Barycentric:
      return barycentric_local(mesh, rec.edge);
    case K::SubdivideBoundary:
      return subdivide_boundary_edge(mesh, rec.edge).mesh;
    case K::Join:
      if (!rec.piece) throw Error(ErrorKind::Format, "join record without piece");
      return join(mesh, rec.face, *rec.piece, rec.piece_hole, rec.alignment);
    case K::Excise:
      return excise_region(mesh, rec.cycle, rec.interior).mesh;
  }
  throw Error(ErrorKind::Format, "unknown move kind");
}

SurfaceMesh replay(const SurfaceMesh& initial, const MoveLog& log) {
  SurfaceMesh m = initial;
  for (const MoveRecord& rec : log) m = apply_move(m, rec);
  return m;
}

}  // namespace tight36

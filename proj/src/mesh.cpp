#include "tight36/mesh.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace tight36 {

namespace {

std::string dart_str(Dart d) {
  std::ostringstream os;
  os << "(" << d.edge << "," << d.end << ")";
  return os.str();
}

// Canonical representative of a cyclic sequence up to rotation/reflection.
template <typename T>
std::vector<T> canonical_cycle(const std::vector<T>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<T> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < n; ++s) {
      std::vector<T> cand(n);
      for (int i = 0; i < n; ++i) {
        int idx = dir == 0 ? (s + i) % n : (s - i % n + 2 * n) % n;
        cand[i] = c[idx];
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

bool FaceWalk::is_cycle() const {
  std::set<int> seen(vertices.begin(), vertices.end());
  return seen.size() == vertices.size();
}

Dart FaceWalk::face_id() const {
  return *std::min_element(darts.begin(), darts.end());
}

bool FaceWalk::contains_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

SurfaceMesh::SurfaceMesh(std::vector<int> vertices, std::vector<Edge> edges,
                         std::map<int, std::vector<Dart>> rotation,
                         std::set<Dart> holes)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      rotation_(std::move(rotation)),
      holes_(std::move(holes)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
}

bool SurfaceMesh::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Edge* SurfaceMesh::find_edge(int id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, int want) { return e.id < want; });
  if (it == edges_.end() || it->id != id) return nullptr;
  return &*it;
}

const Edge* SurfaceMesh::find_edge_between(int u, int v) const {
  for (const Edge& e : edges_) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return &e;
  }
  return nullptr;
}

int SurfaceMesh::dart_vertex(Dart d) const {
  const Edge* e = find_edge(d.edge);
  if (!e) throw Error(ErrorKind::Format, "dart references missing edge " + dart_str(d));
  return e->endpoint(d.end);
}

int SurfaceMesh::dart_other(Dart d) const {
  const Edge* e = find_edge(d.edge);
  if (!e) throw Error(ErrorKind::Format, "dart references missing edge " + dart_str(d));
  return e->endpoint(1 - d.end);
}

int SurfaceMesh::max_vertex_id() const {
  return vertices_.empty() ? -1 : vertices_.back();
}

int SurfaceMesh::max_edge_id() const {
  return edges_.empty() ? -1 : edges_.back().id;
}

namespace {

// Flag machinery. Each edge end has two flags (its cw and ccw side relative
// to the rotation at its vertex); faces are the cycles that alternate corner
// arcs and edge rails over the 4|E| flags.
struct FlagStructure {
  std::vector<int> edge_index_of_id;          // dense by edge id (may have gaps -> -1)
  std::vector<int> corner_partner;            // size 4E
  std::vector<int> rail_partner;              // size 4E
  std::vector<int> corner_vertex;             // vertex at which a flag's corner sits

  static int flag(int edge_idx, int end, int side) {
    return 4 * edge_idx + 2 * end + side;  // side: 0 = cw, 1 = ccw
  }
};

FlagStructure build_flags(const SurfaceMesh& mesh) {
  const auto& edges = mesh.edges();
  FlagStructure fs;
  int max_id = mesh.max_edge_id();
  fs.edge_index_of_id.assign(max_id + 1, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    fs.edge_index_of_id[edges[i].id] = i;

  const int nflags = 4 * static_cast<int>(edges.size());
  fs.corner_partner.assign(nflags, -1);
  fs.rail_partner.assign(nflags, -1);
  fs.corner_vertex.assign(nflags, -1);

  for (const auto& [v, rot] : mesh.rotation()) {
    const int t = static_cast<int>(rot.size());
    for (int i = 0; i < t; ++i) {
      Dart a = rot[i];
      Dart b = rot[(i + 1) % t];
      int ia = fs.edge_index_of_id[a.edge];
      int ib = fs.edge_index_of_id[b.edge];
      int fa = FlagStructure::flag(ia, a.end, 1);  // ccw of a
      int fb = FlagStructure::flag(ib, b.end, 0);  // cw of next
      fs.corner_partner[fa] = fb;
      fs.corner_partner[fb] = fa;
      fs.corner_vertex[fa] = v;
      fs.corner_vertex[fb] = v;
    }
  }

  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    int cw0 = FlagStructure::flag(i, 0, 0), ccw0 = FlagStructure::flag(i, 0, 1);
    int cw1 = FlagStructure::flag(i, 1, 0), ccw1 = FlagStructure::flag(i, 1, 1);
    if (edges[i].sign > 0) {
      fs.rail_partner[ccw0] = cw1;
      fs.rail_partner[cw1] = ccw0;
      fs.rail_partner[cw0] = ccw1;
      fs.rail_partner[ccw1] = cw0;
    } else {
      fs.rail_partner[ccw0] = ccw1;
      fs.rail_partner[ccw1] = ccw0;
      fs.rail_partner[cw0] = cw1;
      fs.rail_partner[cw1] = cw0;
    }
  }
  return fs;
}

// Each rail carries one dart so that walks partition the darts: the rail
// holding ccw(end 0) maps to end 0, the one holding cw(end 0) to end 1.
Dart rail_dart(const Edge& e, int flag_a) {
  int side_a = flag_a & 1;
  int end_a = (flag_a >> 1) & 1;
  if (e.sign > 0) {
    // rails: {ccw0, cw1} -> end 0, {cw0, ccw1} -> end 1
    bool is_end0_rail = (end_a == 0 && side_a == 1) || (end_a == 1 && side_a == 0);
    return Dart{e.id, is_end0_rail ? 0 : 1};
  }
  // rails: {ccw0, ccw1} -> end 0, {cw0, cw1} -> end 1
  return Dart{e.id, side_a == 1 ? 0 : 1};
}

FaceWalk canonical_walk(std::vector<Dart> darts, std::vector<int> verts) {
  const int n = static_cast<int>(darts.size());
  FaceWalk best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < n; ++s) {
      FaceWalk cand;
      cand.darts.resize(n);
      cand.vertices.resize(n);
      for (int i = 0; i < n; ++i) {
        if (dir == 0) {
          cand.darts[i] = darts[(s + i) % n];
          cand.vertices[i] = verts[(s + i) % n];
        } else {
          cand.darts[i] = darts[(s - i + 2 * n) % n];
          cand.vertices[i] = verts[(s - i + 1 + 2 * n) % n];
        }
      }
      if (best.darts.empty() || cand.darts < best.darts ||
          (cand.darts == best.darts && cand.vertices < best.vertices)) {
        best = cand;
      }
    }
  }
  return best;
}

void check_structure(const SurfaceMesh& mesh, bool require_connected = true) {
  const auto& verts = mesh.vertices();
  if (verts.empty()) throw Error(ErrorKind::Format, "mesh has no vertices");
  for (size_t i = 1; i < verts.size(); ++i)
    if (verts[i] == verts[i - 1])
      throw Error(ErrorKind::Format, "duplicate vertex id " + std::to_string(verts[i]));

  std::map<std::pair<int, int>, int> pair_seen;
  for (size_t i = 0; i < mesh.edges().size(); ++i) {
    const Edge& e = mesh.edges()[i];
    if (i > 0 && mesh.edges()[i - 1].id == e.id)
      throw Error(ErrorKind::Format, "duplicate edge id " + std::to_string(e.id));
    if (!mesh.has_vertex(e.u) || !mesh.has_vertex(e.v))
      throw Error(ErrorKind::Format, "edge " + std::to_string(e.id) + " references missing vertex");
    if (e.sign != 1 && e.sign != -1)
      throw Error(ErrorKind::Format, "edge " + std::to_string(e.id) + " has sign outside {+1,-1}");
    if (e.u == e.v)
      throw Error(ErrorKind::Invariant, "loop edge " + std::to_string(e.id));
    auto key = std::minmax(e.u, e.v);
    if (!pair_seen.emplace(key, e.id).second)
      throw Error(ErrorKind::Invariant, "parallel edges between " + std::to_string(e.u) +
                                            " and " + std::to_string(e.v));
  }

  if (mesh.rotation().size() != verts.size())
    throw Error(ErrorKind::Format, "rotation must cover every vertex exactly once");
  std::set<Dart> all_darts;
  for (const auto& [v, rot] : mesh.rotation()) {
    if (!mesh.has_vertex(v))
      throw Error(ErrorKind::Format, "rotation lists unknown vertex " + std::to_string(v));
    for (Dart d : rot) {
      const Edge* e = mesh.find_edge(d.edge);
      if (!e) throw Error(ErrorKind::Format, "dart references missing edge " + dart_str(d));
      if (d.end != 0 && d.end != 1)
        throw Error(ErrorKind::Format, "dart end outside {0,1}: " + dart_str(d));
      if (e->endpoint(d.end) != v)
        throw Error(ErrorKind::Format, "dart " + dart_str(d) + " listed at wrong vertex");
      if (!all_darts.insert(d).second)
        throw Error(ErrorKind::Format, "dart " + dart_str(d) + " appears twice in rotations");
    }
  }
  if (all_darts.size() != 2 * mesh.edges().size())
    throw Error(ErrorKind::Format, "rotations do not cover every dart");

  for (Dart h : mesh.holes()) {
    if (!mesh.find_edge(h.edge))
      throw Error(ErrorKind::Format, "hole dart references missing edge " + dart_str(h));
  }

  // Connectivity.
  if (require_connected && (!mesh.edges().empty() || verts.size() > 1)) {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : mesh.edges()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::set<int> seen;
    std::queue<int> q;
    q.push(verts[0]);
    seen.insert(verts[0]);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (seen.insert(w).second) q.push(w);
    }
    if (seen.size() != verts.size())
      throw Error(ErrorKind::Invariant, "graph is not connected");
  }
}

}  // namespace

std::vector<FaceWalk> trace_faces_with_flags(
    const SurfaceMesh& mesh, bool require_connected,
    std::map<std::tuple<int, int, int>, int>* flag_owner) {
  check_structure(mesh, require_connected);
  FlagStructure fs = build_flags(mesh);
  const int nflags = 4 * mesh.edge_count();
  std::vector<char> visited(nflags, 0);
  std::vector<FaceWalk> walks;
  std::vector<std::pair<int, int>> owner;  // (flag, provisional walk index)

  for (int start = 0; start < nflags; ++start) {
    if (visited[start]) continue;
    std::vector<Dart> darts;
    std::vector<int> corners;
    int cur = start;
    int widx = static_cast<int>(walks.size());
    do {
      visited[cur] = 1;
      int r = fs.rail_partner[cur];
      if (r < 0) throw Error(ErrorKind::Internal, "incomplete rail pairing");
      visited[r] = 1;
      owner.push_back({cur, widx});
      owner.push_back({r, widx});
      darts.push_back(rail_dart(mesh.edges()[cur / 4], cur));
      corners.push_back(fs.corner_vertex[r]);
      cur = fs.corner_partner[r];
      if (cur < 0) throw Error(ErrorKind::Internal, "incomplete corner pairing");
    } while (cur != start);

    const int n = static_cast<int>(darts.size());
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[(i + 1) % n] = corners[i];
    walks.push_back(canonical_walk(std::move(darts), std::move(verts)));
  }

  if (flag_owner) {
    // Walks are about to be sorted; remap provisional indices afterwards.
    std::vector<int> order(walks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return walks[a].darts < walks[b].darts;
    });
    std::vector<int> rank(walks.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (auto [flag, widx] : owner) {
      int edge_idx = flag / 4;
      int end = (flag >> 1) & 1;
      int side = flag & 1;
      (*flag_owner)[{mesh.edges()[edge_idx].id, end, side}] = rank[widx];
    }
  }

  // Attach hole markers.
  for (Dart h : mesh.holes()) {
    bool found = false;
    for (FaceWalk& w : walks) {
      if (std::find(w.darts.begin(), w.darts.end(), h) != w.darts.end()) {
        if (w.hole)
          throw Error(ErrorKind::Format, "two hole markers identify the same face");
        w.hole = true;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::Internal, "hole dart not on any traced walk");
  }

  std::sort(walks.begin(), walks.end(), [](const FaceWalk& a, const FaceWalk& b) {
    return a.darts < b.darts;
  });
  return walks;
}

std::vector<FaceWalk> trace_faces(const SurfaceMesh& mesh) {
  return trace_faces_with_flags(mesh, true, nullptr);
}

const FaceWalk& walk_of_face(const std::vector<FaceWalk>& walks, Dart face) {
  for (const FaceWalk& w : walks)
    if (std::find(w.darts.begin(), w.darts.end(), face) != w.darts.end()) return w;
  throw Error(ErrorKind::Precondition, "no face contains dart " + dart_str(face));
}

ValidationReport validate(const SurfaceMesh& mesh) {
  ValidationReport rep;
  try {
    check_structure(mesh);
    auto walks = trace_faces(mesh);
    for (const FaceWalk& w : walks) {
      if (w.length() < 3)
        throw Error(ErrorKind::Invariant, "face walk shorter than 3");
      if (!w.hole) {
        if (w.length() != 3)
          throw Error(ErrorKind::Invariant,
                      "nontriangular face of length " + std::to_string(w.length()));
        if (!w.is_cycle())
          throw Error(ErrorKind::Invariant, "triangle face repeats a vertex");
      } else if (!w.is_cycle()) {
        throw Error(ErrorKind::Invariant, "hole walk is not a cycle");
      }
    }
  } catch (const Error& e) {
    rep.ok = false;
    rep.kind = e.kind();
    rep.message = e.what();
  }
  return rep;
}

void require_valid(const SurfaceMesh& mesh) {
  ValidationReport rep = validate(mesh);
  if (!rep.ok) throw Error(rep.kind, rep.message);
}

bool orientable_by_switching(const SurfaceMesh& mesh) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (w, sign)
  for (const Edge& e : mesh.edges()) {
    adj[e.u].push_back({e.v, e.sign});
    adj[e.v].push_back({e.u, e.sign});
  }
  std::map<int, int> s;
  for (int root : mesh.vertices()) {
    if (s.count(root)) continue;
    s[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, sign] : adj[v]) {
        int want = sign * s[v];
        auto it = s.find(w);
        if (it == s.end()) {
          s[w] = want;
          q.push(w);
        } else if (it->second != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool orientable_by_cycle_signs(const SurfaceMesh& mesh) {
  // Spanning forest; every non-tree edge must close a positive cycle.
  std::map<int, std::vector<const Edge*>> adj;
  for (const Edge& e : mesh.edges()) {
    adj[e.u].push_back(&e);
    adj[e.v].push_back(&e);
  }
  std::map<int, int> s;
  std::set<int> tree_edges;
  for (int root : mesh.vertices()) {
    if (s.count(root)) continue;
    s[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge* e : adj[v]) {
        int w = e->u == v ? e->v : e->u;
        if (!s.count(w)) {
          s[w] = e->sign * s[v];
          tree_edges.insert(e->id);
          q.push(w);
        }
      }
    }
  }
  for (const Edge& e : mesh.edges()) {
    if (tree_edges.count(e.id)) continue;
    if (e.sign * s[e.u] * s[e.v] != 1) return false;
  }
  return true;
}

SurfaceInvariants surface_invariants(const SurfaceMesh& mesh) {
  require_valid(mesh);
  auto walks = trace_faces(mesh);

  SurfaceInvariants inv;
  inv.vertex_count = mesh.vertex_count();
  inv.edge_count = mesh.edge_count();
  for (const FaceWalk& w : walks) {
    if (w.hole) {
      ++inv.hole_count;
      inv.boundary_lengths.push_back(w.length());
    } else {
      ++inv.triangle_count;
    }
  }
  std::sort(inv.boundary_lengths.begin(), inv.boundary_lengths.end());
  inv.euler_closed = inv.vertex_count - inv.edge_count + static_cast<int>(walks.size());
  inv.orientable = orientable_by_switching(mesh);
  if (inv.orientable != orientable_by_cycle_signs(mesh))
    throw Error(ErrorKind::Internal, "orientability checks disagree");
  inv.twice_reduced_genus = 2 - inv.euler_closed;
  if (inv.orientable) {
    if ((2 - inv.euler_closed) % 2 != 0)
      throw Error(ErrorKind::Internal, "odd Euler defect on orientable surface");
    inv.genus = (2 - inv.euler_closed) / 2;
  } else {
    inv.genus = 2 - inv.euler_closed;
  }
  inv.maxwell = 3 * inv.vertex_count - inv.edge_count;

  // Face walk identity: sum of (|c|-3) over nontriangular faces equals
  // 6 g_r + f - 6, in integers via twice_reduced_genus.
  int lhs = 0;
  for (int len : inv.boundary_lengths) lhs += len - 3;
  int rhs = 3 * inv.twice_reduced_genus + inv.maxwell - 6;
  if (lhs != rhs)
    throw Error(ErrorKind::Internal, "face walk identity violated: " +
                                         std::to_string(lhs) + " != " + std::to_string(rhs));
  return inv;
}

SurfaceMesh mesh_from_faces(const std::vector<PolygonSpec>& faces,
                            const std::map<std::pair<int, int>, int>* edge_ids,
                            int next_edge_id) {
  if (faces.empty()) throw Error(ErrorKind::Precondition, "no faces given");
  for (const PolygonSpec& f : faces) {
    if (f.cycle.size() < 3)
      throw Error(ErrorKind::Precondition, "face cycle shorter than 3");
    std::set<int> distinct(f.cycle.begin(), f.cycle.end());
    if (distinct.size() != f.cycle.size())
      throw Error(ErrorKind::Precondition, "face cycle repeats a vertex");
  }

  std::set<int> vset;
  for (const PolygonSpec& f : faces)
    vset.insert(f.cycle.begin(), f.cycle.end());

  // Discover edges and their two face sides.
  struct Side {
    int face;
    int pos;  // edge between cycle[pos] and cycle[pos+1]
  };
  std::map<std::pair<int, int>, std::vector<Side>> sides;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& c = faces[fi].cycle;
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
      int a = c[i], b = c[(i + 1) % n];
      if (a == b) throw Error(ErrorKind::Precondition, "loop in face cycle");
      sides[std::minmax(a, b)].push_back({fi, i});
    }
  }
  for (const auto& [key, occ] : sides) {
    if (occ.size() != 2)
      throw Error(ErrorKind::Precondition,
                  "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                      ") lies on " + std::to_string(occ.size()) + " face sides, expected 2");
  }

  // Assign edge ids: pinned ones first, the rest in sorted pair order.
  int fresh = next_edge_id;
  if (edge_ids)
    for (const auto& [k, id] : *edge_ids) fresh = std::max(fresh, id + 1);
  std::map<std::pair<int, int>, int> id_of;
  std::map<std::pair<int, int>, int> idx_of;
  std::vector<Edge> edges;
  for (const auto& [key, occ] : sides) {
    int id;
    if (edge_ids && edge_ids->count(key)) {
      id = edge_ids->at(key);
    } else {
      id = fresh++;
    }
    id_of[key] = id;
  }
  for (const auto& [key, id] : id_of) {
    idx_of[key] = static_cast<int>(edges.size());
    edges.push_back(Edge{id, key.first, key.second, +1});
  }

  // Corners at each vertex: (prev edge, next edge, face, pos).
  struct Corner {
    int e_prev;
    int e_next;
    int face;
    int pos;
    int slot = -1;
  };
  std::map<int, std::vector<Corner>> corners;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& c = faces[fi].cycle;
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
      int w = c[i];
      int prev = c[(i - 1 + n) % n], next = c[(i + 1) % n];
      corners[w].push_back(Corner{idx_of[std::minmax(prev, w)],
                                  idx_of[std::minmax(w, next)], fi, i});
    }
  }

  // Rotation at each vertex: the corners chain incident edges into one cycle.
  std::map<int, std::vector<int>> rotation_idx;  // vertex -> edge indices
  for (int v : vset) {
    auto& cs = corners[v];
    std::map<int, std::vector<int>> link;  // edge idx -> corner indices
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci) {
      link[cs[ci].e_prev].push_back(ci);
      link[cs[ci].e_next].push_back(ci);
    }
    for (const auto& [e, cc] : link) {
      if (cc.size() != 2)
        throw Error(ErrorKind::Precondition,
                    "vertex " + std::to_string(v) + " has a pinched link");
    }
    int start = link.begin()->first;
    std::vector<int> order;
    std::set<int> used_corner;
    int cur = start, via = -1;
    do {
      order.push_back(cur);
      int chosen = -1;
      for (int ci : link[cur]) {
        if (used_corner.count(ci)) continue;
        if (chosen == -1) chosen = ci;
        else {
          // First step: pick the corner leading to the smaller neighbor edge.
          auto other = [&](int cj) {
            const Corner& c = cs[cj];
            return c.e_prev == cur ? c.e_next : c.e_prev;
          };
          if (other(ci) < other(chosen)) chosen = ci;
        }
      }
      if (chosen == -1)
        throw Error(ErrorKind::Precondition,
                    "vertex " + std::to_string(v) + " link is not a single cycle");
      used_corner.insert(chosen);
      via = chosen;
      const Corner& c = cs[via];
      cur = (c.e_prev == cur) ? c.e_next : c.e_prev;
    } while (cur != start);
    if (order.size() != link.size() || used_corner.size() != cs.size())
      throw Error(ErrorKind::Precondition,
                  "vertex " + std::to_string(v) + " link is not a single cycle");
    rotation_idx[v] = order;

    // Slot assignment: slot i sits between rotation[i] and rotation[i+1].
    const int t = static_cast<int>(order.size());
    std::vector<char> slot_used(t, 0);
    for (auto& c : cs) {
      for (int s = 0; s < t; ++s) {
        if (slot_used[s]) continue;
        int a = order[s], b = order[(s + 1) % t];
        if ((a == c.e_prev && b == c.e_next) || (a == c.e_next && b == c.e_prev)) {
          c.slot = s;
          slot_used[s] = 1;
          break;
        }
      }
      if (c.slot == -1)
        throw Error(ErrorKind::Internal, "corner does not fit any rotation slot");
    }
  }

  // Signs: a face side touches, at each endpoint, either the cw or the ccw
  // flag of the edge (ccw when the edge opens the slot, cw when it closes it).
  // A rail joining flags of different kinds means an untwisted band.
  auto side_flag = [&](int v, int face, int pos_at_v, int edge_idx) -> int {
    for (const Corner& c : corners[v]) {
      if (c.face != face || c.pos != pos_at_v) continue;
      const auto& order = rotation_idx[v];
      const int t = static_cast<int>(order.size());
      int a = order[c.slot], b = order[(c.slot + 1) % t];
      if (edge_idx == a && edge_idx == b)
        throw Error(ErrorKind::Internal, "ambiguous slot role");
      if (edge_idx == a) return 1;  // ccw
      if (edge_idx == b) return 0;  // cw
      throw Error(ErrorKind::Internal, "edge not on its own corner");
    }
    throw Error(ErrorKind::Internal, "missing corner record");
  };

  for (auto& [key, occ] : sides) {
    int ei = idx_of[key];
    Edge& e = edges[ei];
    int seen_flags[2][2] = {{0, 0}, {0, 0}};  // [end][side] counts
    int sign = 0;
    for (const Side& s : occ) {
      const auto& c = faces[s.face].cycle;
      const int n = static_cast<int>(c.size());
      int w = c[s.pos], x = c[(s.pos + 1) % n];
      int fw = side_flag(w, s.face, s.pos, ei);
      int fx = side_flag(x, s.face, (s.pos + 1) % n, ei);
      int end_w = (w == e.u) ? 0 : 1;
      int end_x = 1 - end_w;
      ++seen_flags[end_w][fw];
      ++seen_flags[end_x][fx];
      int this_sign = (fw != fx) ? +1 : -1;
      if (sign == 0) sign = this_sign;
      else if (sign != this_sign)
        throw Error(ErrorKind::Internal, "inconsistent sign between the two sides");
    }
    if (seen_flags[0][0] != 1 || seen_flags[0][1] != 1 || seen_flags[1][0] != 1 ||
        seen_flags[1][1] != 1)
      throw Error(ErrorKind::Internal, "face sides do not use all four edge flags");
    e.sign = sign;
  }

  // Assemble rotations as darts.
  std::map<int, std::vector<Dart>> rotation;
  for (const auto& [v, order] : rotation_idx) {
    std::vector<Dart> rot;
    for (int ei : order) {
      const Edge& e = edges[ei];
      rot.push_back(Dart{e.id, e.u == v ? 0 : 1});
    }
    rotation[v] = rot;
  }

  SurfaceMesh mesh(std::vector<int>(vset.begin(), vset.end()), edges, rotation, {});

  // Self check: traced faces must reproduce the input polygons; recover the
  // hole markers from the matching.
  auto walks = trace_faces(mesh);
  std::map<std::vector<int>, std::vector<int>> walk_by_cycle;  // canon cycle -> walk idxs
  for (int wi = 0; wi < static_cast<int>(walks.size()); ++wi)
    walk_by_cycle[canonical_cycle(walks[wi].vertices)].push_back(wi);
  std::map<std::vector<int>, std::pair<int, int>> poly_count;  // canon -> (total, holes)
  for (const PolygonSpec& f : faces) {
    auto& pc = poly_count[canonical_cycle(f.cycle)];
    ++pc.first;
    if (f.hole) ++pc.second;
  }
  std::set<Dart> holes;
  for (const auto& [cyc, pc] : poly_count) {
    auto it = walk_by_cycle.find(cyc);
    if (it == walk_by_cycle.end() || static_cast<int>(it->second.size()) != pc.first)
      throw Error(ErrorKind::Internal, "traced faces do not match the input polygons");
    // Hole markers go to the walks with the largest face ids.
    std::vector<int> idxs = it->second;
    std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
      return walks[a].face_id() < walks[b].face_id();
    });
    for (int k = 0; k < pc.second; ++k)
      holes.insert(walks[idxs[idxs.size() - 1 - k]].face_id());
  }
  if (walks.size() != faces.size())
    throw Error(ErrorKind::Internal, "traced face count differs from input");

  return SurfaceMesh(mesh.vertices(), mesh.edges(), mesh.rotation(), holes);
}

SurfaceMesh canonicalized(const SurfaceMesh& mesh) {
  auto walks = trace_faces(mesh);
  std::set<Dart> holes;
  for (const FaceWalk& w : walks)
    if (w.hole) holes.insert(w.face_id());

  std::map<int, std::vector<Dart>> rotation;
  for (const auto& [v, rot] : mesh.rotation()) {
    if (rot.empty()) {
      rotation[v] = rot;
      continue;
    }
    auto least = std::min_element(rot.begin(), rot.end());
    std::vector<Dart> r(rot.size());
    std::rotate_copy(rot.begin(), least, rot.end(), r.begin());
    rotation[v] = r;
  }
  return SurfaceMesh(mesh.vertices(), mesh.edges(), rotation, holes);
}

Graph underlying_graph(const SurfaceMesh& mesh) {
  Graph g;
  g.vertices = mesh.vertices();
  for (const Edge& e : mesh.edges()) g.edges.push_back(std::minmax(e.u, e.v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace tight36

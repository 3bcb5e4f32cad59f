#include "tight36/model.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <set>

namespace tight36 {

const char* to_string(NodeLabel l) {
  switch (l) {
    case NodeLabel::S0: return "S0";
    case NodeLabel::S1: return "S1";
    case NodeLabel::P: return "P";
  }
  return "?";
}

NodeLabel node_label_from_string(const std::string& s) {
  if (s == "S0") return NodeLabel::S0;
  if (s == "S1") return NodeLabel::S1;
  if (s == "P") return NodeLabel::P;
  throw Error(ErrorKind::Format, "unknown surface label: " + s);
}

int twice_reduced_genus(NodeLabel l) {
  switch (l) {
    case NodeLabel::S0: return 0;
    case NodeLabel::P: return 1;
    case NodeLabel::S1: return 2;
  }
  return 0;
}

const char* to_string(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "orientable";
    case Orientability::FinitelyNonorientableEven: return "finitely-nonorientable-even";
    case Orientability::FinitelyNonorientableOdd: return "finitely-nonorientable-odd";
    case Orientability::InfinitelyNonorientable: return "infinitely-nonorientable";
  }
  return "?";
}

void validate_spec(const TreeSpec& spec) {
  if (!spec.nodes.count(spec.root))
    throw Error(ErrorKind::Format, "root node missing");
  if (spec.nodes.at(spec.root).label != NodeLabel::S0)
    throw Error(ErrorKind::Format, "root must be labeled S0");

  std::set<int> seen;
  std::deque<int> queue = {spec.root};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    if (!seen.insert(id).second)
      throw Error(ErrorKind::Format, "node " + std::to_string(id) + " reached twice");
    auto it = spec.nodes.find(id);
    if (it == spec.nodes.end())
      throw Error(ErrorKind::Format, "child reference to missing node " + std::to_string(id));
    const TreeNode& n = it->second;
    if (n.children.size() > 2)
      throw Error(ErrorKind::Format, "node " + std::to_string(id) + " has more than 2 children");
    if (n.children.size() == 2 && n.label != NodeLabel::S0)
      throw Error(ErrorKind::Format,
                  "branching node " + std::to_string(id) + " must be labeled S0");
    if (n.children.empty()) {
      auto t = spec.tails.find(id);
      if (t == spec.tails.end())
        throw Error(ErrorKind::Format, "leaf " + std::to_string(id) + " has no tail");
      if (t->second.kind == TailSpec::Kind::Ray && t->second.word.empty())
        throw Error(ErrorKind::Format, "ray tail of leaf " + std::to_string(id) + " is empty");
    } else if (spec.tails.count(id)) {
      throw Error(ErrorKind::Format,
                  "interior node " + std::to_string(id) + " carries a tail");
    }
    for (int c : n.children) queue.push_back(c);
  }
  if (seen.size() != spec.nodes.size())
    throw Error(ErrorKind::Format, "spec contains nodes unreachable from the root");
}

SpecInvariants classify(const TreeSpec& spec) {
  validate_spec(spec);
  SpecInvariants inv;
  int p_count = 0;
  bool ray_has_genus = false, ray_has_p = false, any_full_binary = false;

  for (const auto& [id, node] : spec.nodes) {
    inv.twice_genus_total += twice_reduced_genus(node.label);
    if (node.label == NodeLabel::P) ++p_count;
  }
  for (const auto& [leaf, tail] : spec.tails) {
    if (tail.kind == TailSpec::Kind::FullBinary) {
      any_full_binary = true;
      continue;
    }
    for (NodeLabel l : tail.word) {
      if (l != NodeLabel::S0) ray_has_genus = true;
      if (l == NodeLabel::P) ray_has_p = true;
    }
  }

  inv.genus_finite = !ray_has_genus;
  if (ray_has_p) {
    inv.orientability = Orientability::InfinitelyNonorientable;
  } else if (p_count > 0) {
    inv.orientability = p_count % 2 == 0 ? Orientability::FinitelyNonorientableEven
                                         : Orientability::FinitelyNonorientableOdd;
  } else {
    inv.orientability = Orientability::Orientable;
  }

  inv.ends_cantor = any_full_binary;
  for (const auto& [leaf, tail] : spec.tails) {
    EndReport end;
    end.leaf = leaf;
    if (tail.kind == TailSpec::Kind::FullBinary) {
      end.cantor = true;
      end.planar = true;
      end.orientable = true;
    } else {
      end.planar = true;
      end.orientable = true;
      for (NodeLabel l : tail.word) {
        if (l != NodeLabel::S0) end.planar = false;
        if (l == NodeLabel::P) end.orientable = false;
      }
    }
    inv.ends.push_back(end);
  }
  for (const auto& [leaf, tail] : spec.tails)
    if (tail.kind == TailSpec::Kind::Ray) ++inv.end_count;
  return inv;
}

TreeSpec unroll_once(const TreeSpec& spec) {
  validate_spec(spec);
  TreeSpec out = spec;
  int next = 0;
  for (const auto& [id, _] : out.nodes) next = std::max(next, id + 1);

  std::map<int, TailSpec> tails = out.tails;
  out.tails.clear();
  for (const auto& [leaf, tail] : tails) {
    if (tail.kind == TailSpec::Kind::FullBinary) {
      int a = next++, b = next++;
      out.nodes[leaf].children = {a, b};
      out.nodes[a] = TreeNode{a, NodeLabel::S0, {}};
      out.nodes[b] = TreeNode{b, NodeLabel::S0, {}};
      out.tails[a] = tail;
      out.tails[b] = tail;
    } else {
      int a = next++;
      out.nodes[leaf].children = {a};
      out.nodes[a] = TreeNode{a, tail.word.front(), {}};
      TailSpec rotated = tail;
      std::rotate(rotated.word.begin(), rotated.word.begin() + 1, rotated.word.end());
      out.tails[a] = rotated;
    }
  }
  return out;
}

namespace {

// One virtual node of the tail-unrolled tree.
struct WorkItem {
  NodeLabel label = NodeLabel::S0;
  int stage = 0;
  // continuation: explicit children, or the tail state
  std::vector<int> child_nodes;             // explicit node ids
  std::optional<TailSpec> tail;             // set when the subtree is a tail
  std::vector<int> entrance_ring;           // vertices of the pending hole
};

Dart hole_by_ring(const SurfaceMesh& mesh, const std::vector<int>& ring) {
  auto walks = trace_faces(mesh);
  for (const FaceWalk& w : walks) {
    if (!w.hole || w.length() != static_cast<int>(ring.size())) continue;
    bool all = true;
    for (int v : ring)
      if (!w.contains_vertex(v)) all = false;
    if (all) return w.face_id();
  }
  throw Error(ErrorKind::Internal, "pending hole ring not found");
}

std::vector<int> ring_of_hole(const SurfaceMesh& mesh, Dart hole) {
  return walk_of_face(trace_faces(mesh), hole).vertices;
}

std::vector<int> remap_ring(const std::vector<int>& ring,
                            const std::map<int, int>& vmap) {
  std::vector<int> out;
  out.reserve(ring.size());
  for (int v : ring) out.push_back(vmap.at(v));
  return out;
}

}  // namespace

TowerResult build_tower(const TreeSpec& spec, int depth) {
  validate_spec(spec);
  if (depth < 0) throw Error(ErrorKind::Precondition, "negative depth");

  TowerResult result;
  auto d = disc();
  SurfaceMesh mesh = d.mesh;
  result.stages.push_back(mesh);
  result.frontier_lengths.push_back({3});

  std::deque<WorkItem> queue;
  auto push_continuations = [&](const WorkItem& item,
                                const std::vector<std::vector<int>>& exit_rings) {
    // One continuation per child, paired with the exit rings in order.
    size_t idx = 0;
    auto make_child = [&](int node_id) {
      WorkItem child;
      const TreeNode& n = spec.nodes.at(node_id);
      child.label = n.label;
      child.stage = item.stage + 1;
      child.entrance_ring = exit_rings[idx++];
      if (n.children.empty()) {
        child.tail = spec.tails.at(node_id);
        child.child_nodes = {};
      } else {
        child.child_nodes = n.children;
      }
      queue.push_back(child);
    };
    auto make_tail_child = [&](const TailSpec& tail) {
      if (tail.kind == TailSpec::Kind::FullBinary) {
        WorkItem child;
        child.label = NodeLabel::S0;
        child.stage = item.stage + 1;
        child.tail = tail;
        child.entrance_ring = exit_rings[idx++];
        queue.push_back(child);
      } else {
        WorkItem child;
        child.label = tail.word.front();
        child.stage = item.stage + 1;
        TailSpec rotated = tail;
        std::rotate(rotated.word.begin(), rotated.word.begin() + 1,
                    rotated.word.end());
        child.tail = rotated;
        child.entrance_ring = exit_rings[idx++];
        queue.push_back(child);
      }
    };
    if (item.tail) {
      if (item.tail->kind == TailSpec::Kind::FullBinary) {
        make_tail_child(*item.tail);
        make_tail_child(*item.tail);
      } else {
        make_tail_child(*item.tail);
      }
    } else {
      for (int c : item.child_nodes) make_child(c);
    }
  };

  // Seed the queue from the root.
  {
    const TreeNode& root = spec.nodes.at(spec.root);
    std::vector<int> disc_ring = ring_of_hole(mesh, d.hole);
    WorkItem first;
    first.stage = 1;
    first.entrance_ring = disc_ring;
    if (root.children.empty()) {
      const TailSpec& tail = spec.tails.at(spec.root);
      if (tail.kind == TailSpec::Kind::FullBinary) {
        // The branching starts immediately: the root item is a pants node.
        first.label = NodeLabel::S0;
        first.tail = tail;
        queue.push_back(first);
      } else {
        first.label = tail.word.front();
        TailSpec rotated = tail;
        std::rotate(rotated.word.begin(), rotated.word.begin() + 1,
                    rotated.word.end());
        first.tail = rotated;
        queue.push_back(first);
      }
    } else if (root.children.size() == 1) {
      const TreeNode& child = spec.nodes.at(root.children[0]);
      first.label = child.label;
      if (child.children.empty())
        first.tail = spec.tails.at(child.id);
      else
        first.child_nodes = child.children;
      queue.push_back(first);
    } else {
      // Two children: the root's own branching is a pants at stage 1.
      first.label = NodeLabel::S0;
      first.child_nodes = root.children;
      queue.push_back(first);
    }
  }

  for (int stage = 1; stage <= depth; ++stage) {
    std::deque<WorkItem> now;
    std::deque<WorkItem> later;
    while (!queue.empty()) {
      WorkItem item = queue.front();
      queue.pop_front();
      (item.stage == stage ? now : later).push_back(item);
    }
    queue = later;

    for (WorkItem& item : now) {
      const int entrance_len = static_cast<int>(item.entrance_ring.size());
      Dart entrance = hole_by_ring(mesh, item.entrance_ring);
      int children = item.tail
                         ? (item.tail->kind == TailSpec::Kind::FullBinary ? 2 : 1)
                         : static_cast<int>(item.child_nodes.size());

      if (children == 2) {
        if (item.label != NodeLabel::S0)
          throw Error(ErrorKind::Internal, "branching attachment must be a sphere");
        int lb = (entrance_len + 3 + 1) / 2;
        int lc = entrance_len + 3 - lb;
        PantsResult pants = sphere_pants(lb, lc);
        std::vector<int> ring_b = ring_of_hole(pants.mesh, pants.exit_b);
        std::vector<int> ring_c = ring_of_hole(pants.mesh, pants.exit_c);
        auto jr = join_ex(mesh, entrance, pants.mesh, pants.entrance);
        mesh = jr.mesh;
        MoveRecord rec;
        rec.kind = MoveRecord::Kind::Join;
        rec.face = entrance;
        rec.piece = std::make_shared<SurfaceMesh>(pants.mesh);
        rec.piece_hole = pants.entrance;
        result.log.push_back(rec);
        push_continuations(item, {remap_ring(ring_b, jr.b_vertex_map),
                                  remap_ring(ring_c, jr.b_vertex_map)});
      } else {
        PieceSurface kind = item.label == NodeLabel::S0 ? PieceSurface::Sphere
                            : item.label == NodeLabel::S1 ? PieceSurface::Torus
                                                          : PieceSurface::Projective;
        PieceResult pc = piece(kind, entrance_len);
        std::vector<int> exit_ring = ring_of_hole(pc.mesh, pc.exit);
        auto jr = join_ex(mesh, entrance, pc.mesh, pc.entrance);
        mesh = jr.mesh;
        MoveRecord rec;
        rec.kind = MoveRecord::Kind::Join;
        rec.face = entrance;
        rec.piece = std::make_shared<SurfaceMesh>(pc.mesh);
        rec.piece_hole = pc.entrance;
        result.log.push_back(rec);
        push_continuations(item, {remap_ring(exit_ring, jr.b_vertex_map)});
      }
    }

    result.stages.push_back(mesh);
    std::vector<int> lengths;
    for (const FaceWalk& w : trace_faces(mesh))
      if (w.hole) lengths.push_back(w.length());
    std::sort(lengths.begin(), lengths.end());
    result.frontier_lengths.push_back(lengths);
  }
  return result;
}

SurfaceMesh schwarz_block_join(int m) {
  if (m < 1) throw Error(ErrorKind::Precondition, "block count below 1");

  // Six-holed sphere with all boundary lengths 3, assembled from four pants.
  struct Unit {
    SurfaceMesh mesh;
    std::array<std::vector<int>, 6> rings;  // -x +x -y +y -z +z
  };
  static const Unit unit = [] {
    PantsResult p1 = sphere_pants(3, 3);
    SurfaceMesh mesh = p1.mesh;
    std::vector<int> open0 = ring_of_hole(mesh, p1.entrance);
    std::vector<int> open1 = ring_of_hole(mesh, p1.exit_b);
    std::vector<int> open2 = ring_of_hole(mesh, p1.exit_c);

    std::vector<std::vector<int>> open_rings;
    auto attach = [&](const std::vector<int>& onto_ring) {
      PantsResult p = sphere_pants(3, 3);
      std::vector<int> rb = ring_of_hole(p.mesh, p.exit_b);
      std::vector<int> rc = ring_of_hole(p.mesh, p.exit_c);
      Dart hole = hole_by_ring(mesh, onto_ring);
      auto jr = join_ex(mesh, hole, p.mesh, p.entrance);
      mesh = jr.mesh;
      open_rings.push_back(remap_ring(rb, jr.b_vertex_map));
      open_rings.push_back(remap_ring(rc, jr.b_vertex_map));
    };
    attach(open0);
    attach(open1);
    attach(open2);

    Unit u;
    u.mesh = mesh;
    for (int i = 0; i < 6; ++i) u.rings[i] = open_rings[i];
    return u;
  }();

  // Cells in lexicographic order; each new cell joins its -direction
  // neighbours, the first by a mesh join, the rest by self joins.
  auto cell_index = [m](int x, int y, int z) { return (x * m + y) * m + z; };
  std::vector<std::array<std::vector<int>, 6>> rings(m * m * m);
  SurfaceMesh mesh;
  bool first_cell = true;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        std::array<std::vector<int>, 6> mine = unit.rings;
        if (first_cell) {
          mesh = unit.mesh;
          first_cell = false;
        } else {
          // Pick the first available lower neighbour for the join.
          struct Nbr {
            int dir_mine;   // my face towards the neighbour
            int dir_theirs; // their face towards me
            int idx;
          };
          std::vector<Nbr> nbrs;
          if (x > 0) nbrs.push_back({0, 1, cell_index(x - 1, y, z)});
          if (y > 0) nbrs.push_back({2, 3, cell_index(x, y - 1, z)});
          if (z > 0) nbrs.push_back({4, 5, cell_index(x, y, z - 1)});

          const Nbr& primary = nbrs.front();
          Dart onto = hole_by_ring(mesh, rings[primary.idx][primary.dir_theirs]);
          Dart from = hole_by_ring(unit.mesh, unit.rings[primary.dir_mine]);
          auto jr = join_ex(mesh, onto, unit.mesh, from);
          mesh = jr.mesh;
          for (int d = 0; d < 6; ++d) mine[d] = remap_ring(unit.rings[d], jr.b_vertex_map);

          for (size_t k = 1; k < nbrs.size(); ++k) {
            const Nbr& nb = nbrs[k];
            Dart a = hole_by_ring(mesh, rings[nb.idx][nb.dir_theirs]);
            Dart b = hole_by_ring(mesh, mine[nb.dir_mine]);
            mesh = self_join(mesh, a, b);
          }
        }
        rings[cell_index(x, y, z)] = mine;
      }
    }
  }
  require_valid(mesh);
  return mesh;
}

TreeSpec spec_single_ray(const std::vector<NodeLabel>& word) {
  TreeSpec spec;
  spec.root = 0;
  spec.nodes[0] = TreeNode{0, NodeLabel::S0, {}};
  spec.tails[0] = TailSpec{TailSpec::Kind::Ray, word};
  return spec;
}

TreeSpec spec_full_binary() {
  TreeSpec spec;
  spec.root = 0;
  spec.nodes[0] = TreeNode{0, NodeLabel::S0, {}};
  spec.tails[0] = TailSpec{TailSpec::Kind::FullBinary, {}};
  return spec;
}

}  // namespace tight36

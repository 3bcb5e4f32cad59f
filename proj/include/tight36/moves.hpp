#pragma once

#include <array>
#include <memory>
#include <optional>

#include "tight36/mesh.hpp"

namespace tight36 {

struct JoinAlignment {
  int offset = 0;
  bool reversed = false;
};

// Every move returns a fresh mesh; ids of untouched vertices and edges are
// preserved, transferred edges keep their id under new endpoints.

struct ZeroExtensionResult {
  SurfaceMesh mesh;
  int new_vertex = -1;
};

// Add a degree-3 vertex inside `face`, joined to anchors x, y, z, which must
// be distinct and appear in this cyclic order on the face walk. On a hole
// face each arc region becomes a triangle when its arc has one edge and a new
// hole otherwise; force_hole[i] keeps region i a hole even for a 1-edge arc
// (region order: x->y, y->z, z->x).
ZeroExtensionResult zero_extension(const SurfaceMesh& mesh, Dart face, int x,
                                   int y, int z,
                                   std::array<bool, 3> force_hole = {false, false,
                                                                     false});

struct VertexSplitResult {
  SurfaceMesh mesh;
  int new_vertex = -1;
};

// Split v along the rotation arc between the darts towards a and b; the arc
// selected by `side` (0: from va forward to vb in rotation order) transfers
// to the new vertex, which also becomes adjacent to v, a and b.
VertexSplitResult vertex_split(const SurfaceMesh& mesh, int v, int a, int b,
                               int side);

// Mark a triangle face as a hole; its vertices must avoid all existing hole
// walks.
SurfaceMesh carve_hole(const SurfaceMesh& mesh, Dart face);

struct CollarResult {
  SurfaceMesh mesh;
  Dart new_hole{};
  std::vector<int> ring;  // new boundary vertices in walk order
};

// Push a hole boundary inward by a ring of fresh vertices: |walk| successive
// 0-extensions produce a new hole of the same length, vertex-disjoint from
// the old walk.
CollarResult collar(const SurfaceMesh& mesh, Dart hole);

// Replace an interior edge by three vertices and ten edges, splitting each of
// its two triangles into four.
SurfaceMesh barycentric_local(const SurfaceMesh& mesh, int edge_id);

// Insert a degree-2 vertex on an edge both of whose sides are hole faces;
// each walk gains one step. Used while shaping two-holed pieces, before the
// final collars separate the boundaries.
struct SubdivideResult {
  SurfaceMesh mesh;
  int new_vertex = -1;
};
SubdivideResult subdivide_boundary_edge(const SurfaceMesh& mesh, int edge_id);

// Glue meshB onto meshA along two hole walks of equal length. Walks are
// aligned starting from their least vertices; alignment shifts/reflects the
// correspondence. B's interior vertices are renumbered above A's.
SurfaceMesh join(const SurfaceMesh& a, Dart hole_a, const SurfaceMesh& b,
                 Dart hole_b, JoinAlignment alignment = {});

struct JoinResult {
  SurfaceMesh mesh;
  std::map<int, int> b_vertex_map;  // meshB vertex -> vertex in the result
};
JoinResult join_ex(const SurfaceMesh& a, Dart hole_a, const SurfaceMesh& b,
                   Dart hole_b, JoinAlignment alignment = {});

// Identify two vertex-disjoint hole walks of the same mesh (the second walk's
// vertices collapse onto the first); both markers disappear.
SurfaceMesh self_join(const SurfaceMesh& mesh, Dart hole_a, Dart hole_b,
                      JoinAlignment alignment = {});

struct ExciseResult {
  SurfaceMesh mesh;
  Dart new_hole{};
};

// Remove the disc-like region bounded by the cycle (given as a closed vertex
// sequence) whose interior vertices are exactly `interior`; the cycle becomes
// a hole walk.
ExciseResult excise_region(const SurfaceMesh& mesh, const std::vector<int>& cycle,
                           const std::vector<int>& interior);

// Move log for replay.
struct MoveRecord {
  enum class Kind {
    ZeroExtension,
    VertexSplit,
    Carve,
    Collar,
    Barycentric,
    SubdivideBoundary,
    Join,
    Excise
  };
  Kind kind{};
  Dart face{};
  std::array<int, 3> anchors{-1, -1, -1};
  std::array<bool, 3> force_hole{false, false, false};
  int v = -1, a = -1, b = -1, side = 0;
  int edge = -1;
  std::shared_ptr<const SurfaceMesh> piece;
  Dart piece_hole{};
  JoinAlignment alignment{};
  std::vector<int> cycle, interior;
};

using MoveLog = std::vector<MoveRecord>;

SurfaceMesh apply_move(const SurfaceMesh& mesh, const MoveRecord& rec);
SurfaceMesh replay(const SurfaceMesh& initial, const MoveLog& log);

}  // namespace tight36

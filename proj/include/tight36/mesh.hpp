#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tight36 {

// A dart is one end of an edge: (edge id, end index). End 0 sits at the
// edge's u vertex, end 1 at v.
struct Dart {
  int edge = -1;
  int end = 0;
  auto operator<=>(const Dart&) const = default;
};

struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
  int sign = +1;
  int endpoint(int end) const { return end == 0 ? u : v; }
  bool operator==(const Edge&) const = default;
};

enum class ErrorKind { Format, Invariant, Precondition, Budget, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Closed facial walk. darts[i] is the edge between vertices[i] and
// vertices[(i+1) % n]; each dart of the mesh occurs in exactly one walk.
struct FaceWalk {
  std::vector<Dart> darts;
  std::vector<int> vertices;
  bool hole = false;

  int length() const { return static_cast<int>(darts.size()); }
  bool is_cycle() const;
  Dart face_id() const;  // least dart on the walk
  bool contains_vertex(int v) const;
};

// Graph cellularly embedded in a surface via a signed rotation system.
// Values are immutable once built; moves construct new meshes.
class SurfaceMesh {
 public:
  SurfaceMesh() = default;
  SurfaceMesh(std::vector<int> vertices, std::vector<Edge> edges,
              std::map<int, std::vector<Dart>> rotation, std::set<Dart> holes);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<int, std::vector<Dart>>& rotation() const { return rotation_; }
  const std::set<Dart>& holes() const { return holes_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const;
  const Edge* find_edge(int id) const;
  const Edge* find_edge_between(int u, int v) const;
  int dart_vertex(Dart d) const;   // vertex the dart sits at
  int dart_other(Dart d) const;    // opposite endpoint
  int max_vertex_id() const;
  int max_edge_id() const;

  bool operator==(const SurfaceMesh& other) const = default;

 private:
  std::vector<int> vertices_;              // ascending
  std::vector<Edge> edges_;                // ascending by id
  std::map<int, std::vector<Dart>> rotation_;
  std::set<Dart> holes_;                   // canonical face ids
};

struct ValidationReport {
  bool ok = true;
  ErrorKind kind = ErrorKind::Invariant;
  std::string message;
};

struct SurfaceInvariants {
  int vertex_count = 0;
  int edge_count = 0;
  int triangle_count = 0;
  int hole_count = 0;
  std::vector<int> boundary_lengths;  // ascending
  int euler_closed = 0;               // V - E + F over all faces
  bool orientable = true;
  int genus = 0;                      // crosscap count when nonorientable
  int twice_reduced_genus = 0;
  int maxwell = 0;                    // 3V - E
};

// Polygon input for the face-list builder: a vertex cycle, optionally a hole.
struct PolygonSpec {
  std::vector<int> cycle;
  bool hole = false;
};

// Build a mesh from its faces. Rotations are recovered from vertex links and
// edge signs from the side pairing; existing edge ids can be pinned via
// edge_ids (keys are (min,max) vertex pairs), new edges get ids above
// next_edge_id.
SurfaceMesh mesh_from_faces(
    const std::vector<PolygonSpec>& faces,
    const std::map<std::pair<int, int>, int>* edge_ids = nullptr,
    int next_edge_id = 0);

ValidationReport validate(const SurfaceMesh& mesh);
void require_valid(const SurfaceMesh& mesh);

// Face tracing; works on any structurally sound rotation system.
std::vector<FaceWalk> trace_faces(const SurfaceMesh& mesh);

// Tracing with the walk index recorded per flag (edge id, end, side with
// 0 = cw, 1 = ccw relative to the rotation at the dart's vertex). Disconnected
// rotation systems are allowed when require_connected is false; subgraph
// tracing relies on that.
std::vector<FaceWalk> trace_faces_with_flags(
    const SurfaceMesh& mesh, bool require_connected,
    std::map<std::tuple<int, int, int>, int>* flag_owner);

// Locate the traced walk whose face id equals `face`.
const FaceWalk& walk_of_face(const std::vector<FaceWalk>& walks, Dart face);

SurfaceInvariants surface_invariants(const SurfaceMesh& mesh);

// Orientability two ways; surface_invariants asserts they agree.
bool orientable_by_switching(const SurfaceMesh& mesh);
bool orientable_by_cycle_signs(const SurfaceMesh& mesh);

// Canonical form: rotations start at their least dart, hole ids are the
// canonical walk ids. Serialization uses this.
SurfaceMesh canonicalized(const SurfaceMesh& mesh);

// Abstract graph view.
struct Graph {
  std::vector<int> vertices;                 // ascending
  std::vector<std::pair<int, int>> edges;    // u < v, ascending
};
Graph underlying_graph(const SurfaceMesh& mesh);

}  // namespace tight36

#pragma once

#include <optional>
#include <set>

#include "tight36/mesh.hpp"
#include "tight36/moves.hpp"

namespace tight36 {

enum class PieceSurface { Sphere, Projective, Torus };

// Reduced genus as twice its value: 0, 1, 2.
int twice_reduced_genus(PieceSurface s);
const char* to_string(PieceSurface s);

// Elementary closed meshes.
SurfaceMesh cycle_mesh(int m);                 // m-cycle, both faces holes
SurfaceMesh bipyramid_mesh(int r);             // r-cycle with two apexes, a sphere
Graph bipyramid(int r);                        // the same graph (r >= 3)
SurfaceMesh octahedron();
SurfaceMesh hemi_icosahedron();                // K6 in the projective plane
SurfaceMesh grid_torus(int p, int q);          // p x q triangulated grid torus
SurfaceMesh triforce(const SurfaceMesh& mesh); // 1-to-4 refinement, closed meshes

struct SeedResult {
  SurfaceMesh mesh;
  Dart hole{};
};

// K3 with one triangle face and a length-3 hole.
SeedResult disc();

// Tight triangulation of the projective plane minus a disc, hole length 6.
SeedResult projective_seed();

// Tight triangulation of the torus minus a disc, hole length 9.
SeedResult torus_seed();

struct PantsResult {
  SurfaceMesh mesh;
  Dart entrance{};
  Dart exit_b{};
  Dart exit_c{};
};

// Sphere minus three discs with pairwise disjoint boundary cycles of lengths
// (lb + lc - 3, lb, lc); joins onto any tight mesh along the entrance.
PantsResult sphere_pants(int lb, int lc);

struct PieceResult {
  SurfaceMesh mesh;
  Dart entrance{};
  Dart exit{};
  int entrance_length = 0;
  int exit_length = 0;
};

// Two-holed piece of the given surface with boundary lengths
// (delta, delta + 6 g_r); joinable onto tight meshes along the entrance.
PieceResult piece(PieceSurface kind, int delta);

// Corridor of triangle faces whose union is a disc with boundary a cycle of
// the requested length avoiding `forbidden`; used to cut boundary cycles out
// of closed meshes.
struct StripRegion {
  std::vector<int> boundary_cycle;
  std::set<int> vertices;
};
std::optional<StripRegion> find_strip(const SurfaceMesh& mesh, int length,
                                      const std::set<int>& forbidden);

}  // namespace tight36

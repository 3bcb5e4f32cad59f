#pragma once

#include <optional>

#include "tight36/mesh.hpp"
#include "tight36/moves.hpp"

namespace tight36 {

// A superface: a face U of a subgraph with minimum degree 2, described by the
// set of mesh faces it contains, together with its boundary walks and the
// topology of its closure. Nontriangular faces are the mesh's holes.
struct SuperfaceReport {
  std::vector<Dart> region;                 // face ids inside U, ascending
  std::vector<std::vector<int>> walks;      // boundary walks d_1..d_s
  std::vector<int> walk_lengths;
  int s = 0;
  bool balanced = false;
  bool simple = false;
  int euler_closure = 0;                    // chi of the closure of U
  bool orientable = true;
  int twice_gr = 0;                         // of the closure of U
  std::vector<int> enclosed_hole_lengths;   // |c_k| for holes inside U
  int delta = 0;                            // girth defect of U
};

// All superfaces (one per connected proper face region). Exhaustive mode only:
// meshes above the edge budget are refused.
std::vector<SuperfaceReport> enumerate_superfaces(const SurfaceMesh& mesh,
                                                  int budget = 18);

// The report of one specific region, given as face ids.
SuperfaceReport superface_of_region(const SurfaceMesh& mesh,
                                    const std::vector<Dart>& region);

struct GirthVerdict {
  bool pass = false;
  bool exhaustive = false;  // full enumeration vs oracle-guided
  std::optional<SuperfaceReport> witness;  // a delta-minimal violator
};

// Girth inequalities: delta(U) >= 0 for every balanced superface. Requires a
// mesh with maxwell count 6. Above the budget the sparsity oracle stands in
// and witnesses are derived from its violating vertex set.
GirthVerdict check_girth(const SurfaceMesh& mesh, int budget = 18);

struct Lemma51Result {
  bool subgraph_count;      // f(G_W) >= 6 computed directly
  bool capped_identity;     // the face-walk-identity form for G_W
  bool girth_form;          // delta(U) >= 0
  bool printed_variant_agrees;  // the alternative delta normalisation
};

// Evaluate the three equivalent inequalities on a balanced simple superface.
Lemma51Result lemma51_check(const SurfaceMesh& mesh, const SuperfaceReport& u);

struct RepairResult {
  SurfaceMesh mesh;
  MoveLog log;
  bool success = false;
  int moves_used = 0;
};

// Barycentric repair loop: subdivide an interior edge on a delta-minimal
// violating walk until the girth inequalities hold.
RepairResult repair(const SurfaceMesh& mesh, int max_moves = 10000,
                    int budget = 18);

// Join then repair: the joined mesh must have maxwell count 6.
RepairResult extend_join(const SurfaceMesh& g, Dart hole, const SurfaceMesh& piece,
                         Dart piece_hole, JoinAlignment alignment = {},
                         int max_moves = 10000, int budget = 18);

// Reduced genus addition check: g_r(S) = g_r(U closure) + g_r(W closure) +
// (s - 1) for a balanced simple superface with complement W.
bool reduced_genus_addition_holds(const SurfaceMesh& mesh,
                                  const SuperfaceReport& u);

}  // namespace tight36

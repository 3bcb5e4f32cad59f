#pragma once

#include <map>
#include <string>

#include "tight36/mesh.hpp"
#include "tight36/moves.hpp"
#include "tight36/seeds.hpp"

namespace tight36 {

enum class NodeLabel { S0, S1, P };
const char* to_string(NodeLabel l);
NodeLabel node_label_from_string(const std::string& s);
int twice_reduced_genus(NodeLabel l);

struct TailSpec {
  enum class Kind { Ray, FullBinary };
  Kind kind = Kind::Ray;
  std::vector<NodeLabel> word;  // nonempty for rays, repeated periodically
};

struct TreeNode {
  int id = -1;
  NodeLabel label = NodeLabel::S0;
  std::vector<int> children;
};

// Finite rooted tree with per-leaf tail descriptors encoding a noncompact
// model surface.
struct TreeSpec {
  std::map<int, TreeNode> nodes;
  int root = -1;
  std::map<int, TailSpec> tails;
};

// Throws with the first violated constraint named.
void validate_spec(const TreeSpec& spec);

enum class Orientability {
  Orientable,
  FinitelyNonorientableEven,
  FinitelyNonorientableOdd,
  InfinitelyNonorientable
};
const char* to_string(Orientability o);

struct EndReport {
  int leaf = -1;
  bool cantor = false;  // full-binary tail
  bool planar = false;
  bool orientable = false;
};

struct SpecInvariants {
  bool genus_finite = true;
  int twice_genus_total = 0;  // meaningful when finite
  Orientability orientability = Orientability::Orientable;
  bool ends_cantor = false;
  int end_count = 0;  // when not Cantor
  std::vector<EndReport> ends;
};

SpecInvariants classify(const TreeSpec& spec);

// Replace every tail by one unrolled level; classify is invariant under this.
TreeSpec unroll_once(const TreeSpec& spec);

struct TowerResult {
  std::vector<SurfaceMesh> stages;  // G_0 .. G_depth
  MoveLog log;                      // replays from disc()
  std::vector<std::vector<int>> frontier_lengths;  // per stage, ascending
};

// Theorem-style tower: G_0 is the disc; stage k attaches the level-k nodes of
// the unrolled tree, pants at branching nodes and two-holed pieces along rays.
TowerResult build_tower(const TreeSpec& spec, int depth);

// Fixed six-holed sphere unit (all boundary lengths 3) joined in an m x m x m
// cubic block; opposite outer faces remain holes.
SurfaceMesh schwarz_block_join(int m);

// Convenience specs used across tests and the command line.
TreeSpec spec_single_ray(const std::vector<NodeLabel>& word);
TreeSpec spec_full_binary();

}  // namespace tight36

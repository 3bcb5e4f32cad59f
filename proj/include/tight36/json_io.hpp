#pragma once

#include <string>

#include "json.hpp"
#include "tight36/girth.hpp"
#include "tight36/mesh.hpp"
#include "tight36/model.hpp"
#include "tight36/moves.hpp"
#include "tight36/rigidity.hpp"
#include "tight36/sparsity.hpp"

namespace tight36 {

using nlohmann::json;

// srs-mesh/1
json mesh_to_json(const SurfaceMesh& mesh);
SurfaceMesh mesh_from_json(const json& j);

// Canonical byte representation: canonicalize, dump with sorted keys.
std::string mesh_to_canonical_string(const SurfaceMesh& mesh);

// Piece serialization: srs-mesh/1 with a "piece" metadata block.
json piece_to_json(const PieceResult& piece, PieceSurface surface);

// Plain graph {"vertices": [...], "edges": [[u,v],...]}; mesh JSON is also
// accepted and reduced to its graph.
Graph graph_from_json(const json& j);

// tree-spec/1
json spec_to_json(const TreeSpec& spec);
TreeSpec spec_from_json(const json& j);

// moves/1
json move_log_to_json(const MoveLog& log);
MoveLog move_log_from_json(const json& j);

json invariants_to_json(const SurfaceInvariants& inv);
json verdict_to_json(const SparsityVerdict& v);
json rank_report_to_json(const RankReport& r);
json spec_invariants_to_json(const SpecInvariants& inv);
json superface_to_json(const SuperfaceReport& rep);

std::string graph_to_dot(const Graph& g);

json load_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tight36

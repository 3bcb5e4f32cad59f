#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "tight36/girth.hpp"
#include "tight36/json_io.hpp"
#include "tight36/model.hpp"
#include "tight36/rigidity.hpp"
#include "tight36/seeds.hpp"
#include "tight36/sparsity.hpp"

using namespace tight36;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(const Error& err) {
  switch (err.kind()) {
    case ErrorKind::Budget: return kExitBudget;
    default: return kExitUsage;
  }
}

SurfaceMesh load_mesh(const std::string& path) {
  return mesh_from_json(load_json_file(path));
}

int cmd_build(const std::string& spec_path, int depth, const std::string& out_dir) {
  TreeSpec spec = spec_from_json(load_json_file(spec_path));
  TowerResult tower = build_tower(spec, depth);
  std::filesystem::create_directories(out_dir);
  for (size_t k = 0; k < tower.stages.size(); ++k) {
    std::string path = out_dir + "/G_" + std::to_string(k) + ".json";
    write_file(path, mesh_to_canonical_string(tower.stages[k]));
  }
  write_file(out_dir + "/moves.json", move_log_to_json(tower.log).dump() + "\n");
  json summary;
  summary["stages"] = tower.stages.size();
  summary["frontier_lengths"] = tower.frontier_lengths;
  std::cout << summary.dump() << "\n";
  return kExitPass;
}

int cmd_classify(const std::string& spec_path) {
  TreeSpec spec = spec_from_json(load_json_file(spec_path));
  std::cout << spec_invariants_to_json(classify(spec)).dump() << "\n";
  return kExitPass;
}

int cmd_check(const std::string& what, const std::string& mesh_path,
              const std::string& method, int budget, uint64_t seed) {
  if (what == "tight") {
    Graph g = graph_from_json(load_json_file(mesh_path));
    SparsityVerdict v = method == "exhaustive"
                            ? check_36_exhaustive(g, std::max(budget, 20))
                            : check_36_flow(g);
    std::cout << verdict_to_json(v).dump() << "\n";
    return v.tight() ? kExitPass : kExitPropertyFailed;
  }
  if (what == "girth") {
    SurfaceMesh mesh = load_mesh(mesh_path);
    GirthVerdict v = check_girth(mesh, budget);
    json out{{"pass", v.pass}, {"exhaustive", v.exhaustive}};
    if (v.witness) out["witness"] = superface_to_json(*v.witness);
    std::cout << out.dump() << "\n";
    return v.pass ? kExitPass : kExitPropertyFailed;
  }
  if (what == "rigid") {
    Graph g = graph_from_json(load_json_file(mesh_path));
    MinRigidityReport rep = is_min_3rigid(g, seed);
    json out = rank_report_to_json(rep.rank);
    out["minimally_rigid"] = rep.minimally_rigid;
    if (rep.redundant_edge)
      out["redundant_edge"] = {rep.redundant_edge->first, rep.redundant_edge->second};
    std::cout << out.dump() << "\n";
    return rep.minimally_rigid ? kExitPass : kExitPropertyFailed;
  }
  std::cerr << "unknown check: " << what << "\n";
  return kExitUsage;
}

int cmd_repair(const std::string& mesh_path, const std::string& out_path,
               int max_moves) {
  SurfaceMesh mesh = load_mesh(mesh_path);
  RepairResult res = repair(mesh, max_moves);
  if (!out_path.empty())
    write_file(out_path, mesh_to_canonical_string(res.mesh));
  json out{{"success", res.success}, {"moves_used", res.moves_used}};
  std::cout << out.dump() << "\n";
  return res.success ? kExitPass : kExitBudget;
}

int cmd_invariants(const std::string& mesh_path) {
  SurfaceMesh mesh = load_mesh(mesh_path);
  std::cout << invariants_to_json(surface_invariants(mesh)).dump() << "\n";
  return kExitPass;
}

int cmd_rank(const std::string& mesh_path, uint64_t seed) {
  Graph g = graph_from_json(load_json_file(mesh_path));
  std::cout << rank_report_to_json(generic_rank(g, seed)).dump() << "\n";
  return kExitPass;
}

int cmd_replay(const std::string& mesh_path, const std::string& log_path,
               const std::string& out_path) {
  SurfaceMesh mesh = load_mesh(mesh_path);
  MoveLog log = move_log_from_json(load_json_file(log_path));
  SurfaceMesh out = replay(mesh, log);
  std::string text = mesh_to_canonical_string(out);
  if (!out_path.empty())
    write_file(out_path, text);
  else
    std::cout << text;
  return kExitPass;
}

int cmd_export(const std::string& format, const std::string& mesh_path) {
  if (format == "dot") {
    Graph g = graph_from_json(load_json_file(mesh_path));
    std::cout << graph_to_dot(g);
    return kExitPass;
  }
  if (format == "json") {
    std::cout << mesh_to_canonical_string(load_mesh(mesh_path));
    return kExitPass;
  }
  std::cerr << "unknown export format: " << format << "\n";
  return kExitUsage;
}

int cmd_schwarz(int m, const std::string& out_path) {
  SurfaceMesh mesh = schwarz_block_join(m);
  SparsityVerdict v = check_36_flow(underlying_graph(mesh));
  if (!out_path.empty())
    write_file(out_path, mesh_to_canonical_string(mesh));
  json out{{"m", m},
           {"vertices", mesh.vertex_count()},
           {"edges", mesh.edge_count()},
           {"maxwell", 3 * mesh.vertex_count() - mesh.edge_count()},
           {"status", to_string(v.status)},
           {"deficiency", v.deficiency}};
  std::cout << out.dump() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for (3,6)-tight surface triangulations"};
  app.require_subcommand(1);

  std::string spec_path, mesh_path, log_path, out_path, method = "flow",
                                                        format = "json";
  int depth = 3, budget = 18, max_moves = 10000, m_blocks = 1;
  uint64_t seed = 1;

  auto* build = app.add_subcommand("build", "build a triangulation tower");
  build->add_option("--spec", spec_path, "tree-spec/1 file")->required();
  build->add_option("--depth", depth, "tower depth");
  build->add_option("--out", out_path, "output directory")->required();

  auto* classify_cmd = app.add_subcommand("classify", "surface invariants of a spec");
  classify_cmd->add_option("--spec", spec_path, "tree-spec/1 file")->required();

  auto* check = app.add_subcommand("check", "verify tight / girth / rigid");
  std::string what;
  check->add_option("what", what, "tight|girth|rigid")->required();
  check->add_option("mesh", mesh_path, "mesh or graph file")->required();
  check->add_option("--method", method, "exhaustive|flow (tight only)");
  check->add_option("--budget", budget, "enumeration budget");
  check->add_option("--seed", seed, "rigidity seed");

  auto* repair_cmd = app.add_subcommand("repair", "barycentric repair loop");
  repair_cmd->add_option("mesh", mesh_path, "mesh file")->required();
  repair_cmd->add_option("--out", out_path, "output mesh file");
  repair_cmd->add_option("--max-moves", max_moves, "move budget");

  auto* inv_cmd = app.add_subcommand("invariants", "surface invariants of a mesh");
  inv_cmd->add_option("mesh", mesh_path, "mesh file")->required();

  auto* rank_cmd = app.add_subcommand("rank", "generic rigidity rank");
  rank_cmd->add_option("mesh", mesh_path, "mesh or graph file")->required();
  rank_cmd->add_option("--seed", seed, "placement seed");

  auto* replay_cmd = app.add_subcommand("replay", "apply a move log");
  replay_cmd->add_option("mesh", mesh_path, "initial mesh")->required();
  replay_cmd->add_option("log", log_path, "moves/1 file")->required();
  replay_cmd->add_option("--out", out_path, "output mesh file");

  auto* export_cmd = app.add_subcommand("export", "dot or canonical json");
  export_cmd->add_option("--format", format, "dot|json");
  export_cmd->add_option("mesh", mesh_path, "mesh file")->required();

  auto* schwarz_cmd = app.add_subcommand("schwarz", "cubic block join");
  schwarz_cmd->add_option("--m", m_blocks, "blocks per side");
  schwarz_cmd->add_option("--out", out_path, "output mesh file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(spec_path, depth, out_path);
    if (classify_cmd->parsed()) return cmd_classify(spec_path);
    if (check->parsed()) return cmd_check(what, mesh_path, method, budget, seed);
    if (repair_cmd->parsed()) return cmd_repair(mesh_path, out_path, max_moves);
    if (inv_cmd->parsed()) return cmd_invariants(mesh_path);
    if (rank_cmd->parsed()) return cmd_rank(mesh_path, seed);
    if (replay_cmd->parsed()) return cmd_replay(mesh_path, log_path, out_path);
    if (export_cmd->parsed()) return cmd_export(format, mesh_path);
    if (schwarz_cmd->parsed()) return cmd_schwarz(m_blocks, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

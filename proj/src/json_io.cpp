#include "tight36/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tight36 {

json mesh_to_json(const SurfaceMesh& input) {
  SurfaceMesh mesh = canonicalized(input);
  json j;
  j["format"] = "srs-mesh/1";
  j["vertices"] = mesh.vertices();
  json edges = json::array();
  for (const Edge& e : mesh.edges())
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"sign", e.sign}});
  j["edges"] = edges;
  json rot = json::object();
  for (const auto& [v, darts] : mesh.rotation()) {
    json seq = json::array();
    for (Dart d : darts) seq.push_back({d.edge, d.end});
    rot[std::to_string(v)] = seq;
  }
  j["rotation"] = rot;
  json holes = json::array();
  for (Dart d : mesh.holes()) holes.push_back({d.edge, d.end});
  j["holes"] = holes;
  return j;
}

SurfaceMesh mesh_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != std::string("srs-mesh/1"))
    throw Error(ErrorKind::Format, "expected an srs-mesh/1 document");
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  std::vector<Edge> edges;
  for (const json& e : j.at("edges"))
    edges.push_back(Edge{e.at("id").get<int>(), e.at("u").get<int>(),
                         e.at("v").get<int>(), e.at("sign").get<int>()});
  std::map<int, std::vector<Dart>> rotation;
  for (auto it = j.at("rotation").begin(); it != j.at("rotation").end(); ++it) {
    int v = std::stoi(it.key());
    std::vector<Dart> darts;
    for (const json& d : it.value())
      darts.push_back(Dart{d.at(0).get<int>(), d.at(1).get<int>()});
    rotation[v] = darts;
  }
  std::set<Dart> holes;
  for (const json& d : j.at("holes"))
    holes.insert(Dart{d.at(0).get<int>(), d.at(1).get<int>()});
  return SurfaceMesh(vertices, edges, rotation, holes);
}

std::string mesh_to_canonical_string(const SurfaceMesh& mesh) {
  return mesh_to_json(mesh).dump() + "\n";
}

json piece_to_json(const PieceResult& piece, PieceSurface surface) {
  json j = mesh_to_json(piece.mesh);
  j["piece"] = json{{"surface", to_string(surface)},
                    {"entrance", piece.entrance_length},
                    {"exits", json::array({piece.exit_length})}};
  return j;
}

Graph graph_from_json(const json& j) {
  if (j.is_object() && j.value("format", "") == std::string("srs-mesh/1"))
    return underlying_graph(mesh_from_json(j));
  Graph g;
  g.vertices = j.at("vertices").get<std::vector<int>>();
  for (const json& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    g.edges.push_back(std::minmax(u, v));
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

json spec_to_json(const TreeSpec& spec) {
  json j;
  j["format"] = "tree-spec/1";
  j["root"] = spec.root;
  json nodes = json::array();
  for (const auto& [id, node] : spec.nodes)
    nodes.push_back({{"id", id}, {"label", to_string(node.label)},
                     {"children", node.children}});
  j["nodes"] = nodes;
  json tails = json::object();
  for (const auto& [leaf, tail] : spec.tails) {
    json t;
    if (tail.kind == TailSpec::Kind::FullBinary) {
      t["kind"] = "full-binary";
    } else {
      t["kind"] = "ray";
      json word = json::array();
      for (NodeLabel l : tail.word) word.push_back(to_string(l));
      t["word"] = word;
    }
    tails[std::to_string(leaf)] = t;
  }
  j["tails"] = tails;
  return j;
}

TreeSpec spec_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != std::string("tree-spec/1"))
    throw Error(ErrorKind::Format, "expected a tree-spec/1 document");
  TreeSpec spec;
  spec.root = j.at("root").get<int>();
  for (const json& n : j.at("nodes")) {
    TreeNode node;
    node.id = n.at("id").get<int>();
    node.label = node_label_from_string(n.at("label").get<std::string>());
    if (n.contains("children"))
      node.children = n.at("children").get<std::vector<int>>();
    spec.nodes[node.id] = node;
  }
  if (j.contains("tails")) {
    for (auto it = j.at("tails").begin(); it != j.at("tails").end(); ++it) {
      TailSpec tail;
      std::string kind = it.value().at("kind").get<std::string>();
      if (kind == "full-binary") {
        tail.kind = TailSpec::Kind::FullBinary;
      } else if (kind == "ray") {
        tail.kind = TailSpec::Kind::Ray;
        for (const json& w : it.value().at("word"))
          tail.word.push_back(node_label_from_string(w.get<std::string>()));
      } else {
        throw Error(ErrorKind::Format, "unknown tail kind: " + kind);
      }
      spec.tails[std::stoi(it.key())] = tail;
    }
  }
  validate_spec(spec);
  return spec;
}

namespace {

json dart_to_json(Dart d) { return json::array({d.edge, d.end}); }
Dart dart_from_json(const json& j) {
  return Dart{j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

json move_log_to_json(const MoveLog& log) {
  json moves = json::array();
  for (const MoveRecord& rec : log) {
    json m;
    using K = MoveRecord::Kind;
    switch (rec.kind) {
      case K::ZeroExtension:
        m["kind"] = "zero-extension";
        m["face"] = dart_to_json(rec.face);
        m["anchors"] = rec.anchors;
        m["force_hole"] = rec.force_hole;
        break;
      case K::VertexSplit:
        m["kind"] = "vertex-split";
        m["v"] = rec.v;
        m["a"] = rec.a;
        m["b"] = rec.b;
        m["side"] = rec.side;
        break;
      case K::Carve:
        m["kind"] = "carve";
        m["face"] = dart_to_json(rec.face);
        break;
      case K::Collar:
        m["kind"] = "collar";
        m["hole"] = dart_to_json(rec.face);
        break;
      case K::Barycentric:
        m["kind"] = "barycentric";
        m["edge"] = rec.edge;
        break;
      case K::SubdivideBoundary:
        m["kind"] = "subdivide-boundary";
        m["edge"] = rec.edge;
        break;
      case K::Join:
        m["kind"] = "join";
        m["hole"] = dart_to_json(rec.face);
        m["piece"] = mesh_to_json(*rec.piece);
        m["piece_hole"] = dart_to_json(rec.piece_hole);
        m["offset"] = rec.alignment.offset;
        m["reversed"] = rec.alignment.reversed;
        break;
      case K::Excise:
        m["kind"] = "excise";
        m["cycle"] = rec.cycle;
        m["interior"] = rec.interior;
        break;
    }
    moves.push_back(m);
  }
  return json{{"format", "moves/1"}, {"moves", moves}};
}

MoveLog move_log_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != std::string("moves/1"))
    throw Error(ErrorKind::Format, "expected a moves/1 document");
  MoveLog log;
  for (const json& m : j.at("moves")) {
    MoveRecord rec;
    std::string kind = m.at("kind").get<std::string>();
    using K = MoveRecord::Kind;
    if (kind == "zero-extension") {
      rec.kind = K::ZeroExtension;
      rec.face = dart_from_json(m.at("face"));
      auto a = m.at("anchors");
      rec.anchors = {a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()};
      auto f = m.at("force_hole");
      rec.force_hole = {f.at(0).get<bool>(), f.at(1).get<bool>(),
                        f.at(2).get<bool>()};
    } else if (kind == "vertex-split") {
      rec.kind = K::VertexSplit;
      rec.v = m.at("v").get<int>();
      rec.a = m.at("a").get<int>();
      rec.b = m.at("b").get<int>();
      rec.side = m.at("side").get<int>();
    } else if (kind == "carve") {
      rec.kind = K::Carve;
      rec.face = dart_from_json(m.at("face"));
    } else if (kind == "collar") {
      rec.kind = K::Collar;
      rec.face = dart_from_json(m.at("hole"));
    } else if (kind == "barycentric") {
      rec.kind = K::Barycentric;
      rec.edge = m.at("edge").get<int>();
    } else if (kind == "subdivide-boundary") {
      rec.kind = K::SubdivideBoundary;
      rec.edge = m.at("edge").get<int>();
    } else if (kind == "join") {
      rec.kind = K::Join;
      rec.face = dart_from_json(m.at("hole"));
      rec.piece = std::make_shared<SurfaceMesh>(mesh_from_json(m.at("piece")));
      rec.piece_hole = dart_from_json(m.at("piece_hole"));
      rec.alignment.offset = m.value("offset", 0);
      rec.alignment.reversed = m.value("reversed", false);
    } else if (kind == "excise") {
      rec.kind = K::Excise;
      rec.cycle = m.at("cycle").get<std::vector<int>>();
      rec.interior = m.at("interior").get<std::vector<int>>();
    } else {
      throw Error(ErrorKind::Format, "unknown move kind: " + kind);
    }
    log.push_back(rec);
  }
  return log;
}

json invariants_to_json(const SurfaceInvariants& inv) {
  return json{{"vertices", inv.vertex_count},
              {"edges", inv.edge_count},
              {"triangles", inv.triangle_count},
              {"holes", inv.hole_count},
              {"boundary_lengths", inv.boundary_lengths},
              {"euler_closed", inv.euler_closed},
              {"orientable", inv.orientable},
              {"genus", inv.genus},
              {"twice_reduced_genus", inv.twice_reduced_genus},
              {"maxwell", inv.maxwell}};
}

json verdict_to_json(const SparsityVerdict& v) {
  return json{{"status", to_string(v.status)},
              {"deficiency", v.deficiency},
              {"witness", v.witness},
              {"maxwell", v.maxwell}};
}

json rank_report_to_json(const RankReport& r) {
  return json{{"vertices", r.vertex_count}, {"edges", r.edge_count},
              {"rank", r.rank},             {"dof", r.dof},
              {"is_3rigid", r.is_3rigid},   {"is_min_3rigid", r.is_min_3rigid},
              {"trials_used", r.trials_used}, {"seed", r.seed}};
}

json spec_invariants_to_json(const SpecInvariants& inv) {
  json ends = json::array();
  for (const EndReport& e : inv.ends)
    ends.push_back({{"leaf", e.leaf},
                    {"cantor", e.cantor},
                    {"planar", e.planar},
                    {"orientable", e.orientable}});
  json j{{"orientability", to_string(inv.orientability)},
         {"ends", ends}};
  if (inv.genus_finite)
    j["twice_total_reduced_genus"] = inv.twice_genus_total;
  else
    j["twice_total_reduced_genus"] = "infinite";
  j["end_space"] = inv.ends_cantor ? json("Cantor") : json(inv.end_count);
  return j;
}

json superface_to_json(const SuperfaceReport& rep) {
  json region = json::array();
  for (Dart d : rep.region) region.push_back(dart_to_json(d));
  return json{{"region", region},
              {"walks", rep.walks},
              {"walk_lengths", rep.walk_lengths},
              {"balanced", rep.balanced},
              {"simple", rep.simple},
              {"twice_reduced_genus", rep.twice_gr},
              {"enclosed_hole_lengths", rep.enclosed_hole_lengths},
              {"delta", rep.delta}};
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (int v : g.vertices) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Format, "cannot write " + path);
  out << contents;
}

}  // namespace tight36

#include "symflex/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "symflex/errors.hpp"

namespace symflex::io {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in output
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("'{}': {}", path.string(), e.what()));
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot write '{}'", tmp.string()));
    out << content;
    if (!out.flush()) throw IoError(fmt::format("cannot write '{}'", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError(fmt::format("cannot move '{}' into place: {}", path.string(), ec.message()));
}

namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(fmt::format("missing field '{}'", key));
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("field '{}': {}", key, e.what()));
  }
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : get_field<json>(j, key)) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw ParseError(fmt::format("'{}' entries must be pairs of vertex names", key));
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

Edge resolve_pair(const Graph& g, const std::pair<std::string, std::string>& p) {
  const auto u = g.find_vertex(p.first);
  const auto v = g.find_vertex(p.second);
  if (!u || !v || *u == *v) throw ParseError(fmt::format("invalid vertex pair {}-{}", p.first, p.second));
  return Edge::make(*u, *v);
}

std::vector<Edge> resolve_pairs(const Graph& g, const json& j, const char* key) {
  std::vector<Edge> out;
  for (const auto& p : pair_list(j, key)) out.push_back(resolve_pair(g, p));
  return out;
}

json edges_json(const Graph& g, const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back(edge_json(g, e));
  return arr;
}

}  // namespace

json edge_json(const Graph& g, const Edge& e) { return json::array({g.name(e.u), g.name(e.v)}); }

json vertex_list_json(const Graph& g, const std::vector<Vertex>& vs) {
  json arr = json::array();
  for (const auto v : vs) arr.push_back(g.name(v));
  return arr;
}

json to_json(const SymmetricGraph& g) {
  json j;
  j["n"] = g.order();
  j["vertices"] = json(std::vector<std::string>(g.names().begin(), g.names().end()));
  j["edges"] = edges_json(g, {g.edges().begin(), g.edges().end()});
  json omega = json::object();
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) omega[g.name(v)] = g.name(g.omega(v));
  j["omega"] = omega;
  return j;
}

SymmetricGraph graph_from_json(const json& j) {
  const auto n = get_field<int>(j, "n");
  const auto vertices = get_field<std::vector<std::string>>(j, "vertices");
  const auto edges = pair_list(j, "edges");
  std::map<std::string, std::string> omega;
  const auto om = get_field<json>(j, "omega");
  if (!om.is_object()) throw ParseError("'omega' must be an object mapping vertex to image");
  for (const auto& [k, v] : om.items()) {
    if (!v.is_string()) throw ParseError(fmt::format("omega image of '{}' must be a string", k));
    omega[k] = v.get<std::string>();
  }
  return SymmetricGraph(n, vertices, edges, omega);
}

json to_json(const Graph& g, const EdgeColouring& c) {
  std::vector<Edge> red;
  std::vector<Edge> blue;
  for (std::size_t i = 0; i < g.edge_count(); ++i) (c[i] == Colour::red ? red : blue).push_back(g.edge(i));
  json j;
  j["red"] = edges_json(g, red);
  j["blue"] = edges_json(g, blue);
  return j;
}

EdgeColouring colouring_from_json(const Graph& g, const json& j) {
  std::vector<int> seen(g.edge_count(), -1);
  for (const auto colour : {Colour::red, Colour::blue}) {
    const auto key = colour == Colour::red ? "red" : "blue";
    for (const auto& e : resolve_pairs(g, j, key)) {
      const auto idx = g.edge_index(e.u, e.v);
      if (!idx) throw ParseError(fmt::format("{} pair {} is not an edge of the graph", key, g.edge_label(e)));
      if (seen[*idx] >= 0) throw ParseError(fmt::format("edge {} coloured twice", g.edge_label(e)));
      seen[*idx] = static_cast<int>(colour);
    }
  }
  std::vector<Colour> colours(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (seen[i] < 0) throw ParseError(fmt::format("edge {} is not coloured", g.edge_label(g.edge(i))));
    colours[i] = static_cast<Colour>(seen[i]);
  }
  return EdgeColouring(std::move(colours));
}

json to_json(const Graph& g, const std::vector<EdgeColouring>& colourings) {
  json arr = json::array();
  for (const auto& c : colourings) arr.push_back(to_json(g, c));
  return arr;
}

json to_json(const Graph& g, const MotionSamples& m) {
  json j;
  j["n"] = m.n;
  json frames = json::array();
  for (std::size_t f = 0; f < m.frames.size(); ++f) {
    json frame;
    frame["t"] = round12(m.t[f]);
    json pos = json::object();
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      const auto& p = m.frames[f][static_cast<std::size_t>(v)];
      pos[g.name(v)] = json::array({round12(p.x), round12(p.y)});
    }
    frame["positions"] = pos;
    frames.push_back(frame);
  }
  j["frames"] = frames;
  return j;
}

MotionSamples motion_from_json(const Graph& g, const json& j) {
  MotionSamples m;
  m.n = get_field<int>(j, "n");
  for (const auto& frame : get_field<json>(j, "frames")) {
    m.t.push_back(get_field<double>(frame, "t"));
    const auto pos = get_field<json>(frame, "positions");
    if (!pos.is_object()) throw ParseError("'positions' must be an object");
    Placement p(g.vertex_count());
    std::vector<bool> placed(g.vertex_count(), false);
    for (const auto& [name, xy] : pos.items()) {
      const auto v = g.find_vertex(name);
      if (!v) throw ParseError(fmt::format("position for unknown vertex '{}'", name));
      if (!xy.is_array() || xy.size() != 2 || !xy[0].is_number() || !xy[1].is_number()) {
        throw ParseError(fmt::format("position of '{}' must be [x, y]", name));
      }
      p[static_cast<std::size_t>(*v)] = {xy[0].get<double>(), xy[1].get<double>()};
      placed[static_cast<std::size_t>(*v)] = true;
    }
    for (std::size_t v = 0; v < placed.size(); ++v) {
      if (!placed[v]) throw ParseError(fmt::format("frame has no position for '{}'", g.name(static_cast<Vertex>(v))));
    }
    m.frames.push_back(std::move(p));
  }
  return m;
}

ClosureReport make_closure_report(const VerdictResult& v) {
  ClosureReport r;
  r.complete = v.closure.complete;
  for (const auto& round : v.closure.rounds) r.rounds.push_back(round.added());
  r.degenerate_pairs = v.closure.degenerate_pairs;
  r.verdict = v.verdict;
  return r;
}

json to_json(const Graph& g, const ClosureReport& r) {
  json j;
  j["complete"] = r.complete;
  json rounds = json::array();
  for (const auto& added : r.rounds) rounds.push_back(json{{"added", edges_json(g, added)}});
  j["rounds"] = rounds;
  j["degenerate_pairs"] = edges_json(g, r.degenerate_pairs);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

ClosureReport closure_report_from_json(const Graph& g, const json& j) {
  ClosureReport r;
  r.complete = get_field<bool>(j, "complete");
  for (const auto& round : get_field<json>(j, "rounds")) {
    auto added = resolve_pairs(g, round, "added");
    r.rounds.push_back(std::move(added));
  }
  r.degenerate_pairs = resolve_pairs(g, j, "degenerate_pairs");
  const auto verdict = get_field<std::string>(j, "verdict");
  if (verdict == "NO_PROPER_PLACEMENT") {
    r.verdict = ProperVerdict::no_proper_placement;
  } else if (verdict == "PROPER_PLACEMENT_EXISTS") {
    r.verdict = ProperVerdict::proper_placement_exists;
  } else if (verdict == "UNDECIDED") {
    r.verdict = ProperVerdict::undecided;
  } else {
    throw ParseError(fmt::format("unknown verdict '{}'", verdict));
  }
  return r;
}

namespace {

json nac_witness(const Graph& g, const NacCheck& check) {
  if (check.failure == NacCheck::Failure::not_surjective) return json{{"not_surjective", true}};
  const auto& w = *check.witness;
  return json{{"edge", edge_json(g, g.edge(w.edge))},
              {"colour", std::string(to_string(w.edge_colour))},
              {"path", vertex_list_json(g, w.path)}};
}

const char* reason_code(SymmetricNacCheck::Failure f) {
  switch (f) {
    case SymmetricNacCheck::Failure::none:
      return "";
    case SymmetricNacCheck::Failure::not_orbit_constant:
      return "not_orbit_constant";
    case SymmetricNacCheck::Failure::not_nac:
      return "not_nac";
    case SymmetricNacCheck::Failure::linked_partially_invariant:
      return "linked_partially_invariant_components";
  }
  return "";
}

}  // namespace

json to_json(const SymmetricGraph& g, const SymmetricNacCheck& check) {
  json j;
  j["ok"] = check.ok();
  if (check.ok()) {
    j["reason"] = nullptr;
    j["witness"] = nullptr;
    return j;
  }
  j["reason"] = reason_code(check.failure);
  json w;
  w["message"] = describe(g, check);
  switch (check.failure) {
    case SymmetricNacCheck::Failure::not_orbit_constant:
      w["edge"] = edge_json(g, g.edge(*check.edge));
      w["image"] = edge_json(g, g.edge(*check.image_edge));
      break;
    case SymmetricNacCheck::Failure::not_nac:
      w["nac"] = nac_witness(g, *check.nac);
      break;
    case SymmetricNacCheck::Failure::linked_partially_invariant:
      w["colour"] = std::string(to_string(check.link->colour));
      w["components"] = json::array({vertex_list_json(g, check.link->first), vertex_list_json(g, check.link->second)});
      w["edge"] = edge_json(g, g.edge(check.link->edge));
      break;
    case SymmetricNacCheck::Failure::none:
      break;
  }
  j["witness"] = w;
  return j;
}

json to_json(const Graph& g, const NacCheck& check) {
  json j;
  j["ok"] = check.ok();
  if (check.ok()) {
    j["reason"] = nullptr;
    j["witness"] = nullptr;
  } else {
    j["reason"] = check.failure == NacCheck::Failure::not_surjective ? "not_surjective" : "almost_cycle";
    j["witness"] = nac_witness(g, check);
  }
  return j;
}

json to_json(const SymmetricGraph& g, const ValidationReport& report) {
  json j;
  j["valid"] = report.valid();
  json vs = json::array();
  for (const auto& v : report.violations) {
    json x;
    switch (v.kind) {
      case ViolationKind::wrong_order: x["kind"] = "wrong_order"; break;
      case ViolationKind::not_automorphism: x["kind"] = "not_automorphism"; break;
      case ViolationKind::partially_invariant_vertex: x["kind"] = "partially_invariant_vertex"; break;
      case ViolationKind::adjacent_invariant_vertices: x["kind"] = "adjacent_invariant_vertices"; break;
    }
    x["message"] = v.message;
    if (v.vertex) x["vertex"] = g.name(*v.vertex);
    if (v.edge) x["edge"] = edge_json(g, *v.edge);
    if (v.k) x["k"] = *v.k;
    vs.push_back(x);
  }
  j["violations"] = vs;
  return j;
}

json to_json(const VerificationReport& r, const MotionTolerances& tolerances) {
  json j;
  j["passed"] = r.passed();
  j["frames"] = r.min_pair_distance.size();
  j["max_edge_residual"] = round12(r.max_edge_residual);
  j["max_symmetry_residual"] = round12(r.max_symmetry_residual);
  j["min_edge_length"] = round12(r.min_edge_length);
  j["max_edge_length"] = round12(r.max_edge_length);
  j["nontriviality_margin"] = round12(r.nontriviality_margin);
  json inj = json::array();
  for (const double d : r.min_pair_distance) inj.push_back(round12(d));
  j["min_pair_distance"] = inj;
  j["checks"] = json{{"edge_lengths", r.edge_lengths_ok},
                     {"symmetry", r.symmetry_ok},
                     {"framework", r.framework_ok},
                     {"nontrivial", r.nontrivial_ok}};
  j["tolerances"] = json{{"equality", round12(tolerances.equality)},
                         {"nontrivial_relative", round12(tolerances.nontrivial_relative)}};
  return j;
}

json to_json(const Graph& g, const ProperCheck& check) {
  json j;
  j["ok"] = check.ok();
  json vs = json::array();
  for (const auto& v : check.violations) {
    vs.push_back(json{{"condition", v.condition},
                      {"message", v.message},
                      {"vertices", vertex_list_json(g, v.vertices)}});
  }
  j["violations"] = vs;
  return j;
}

}  // namespace symflex::io

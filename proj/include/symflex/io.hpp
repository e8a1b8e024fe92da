#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symflex/closure.hpp"
#include "symflex/graph.hpp"
#include "symflex/motion.hpp"
#include "symflex/nac.hpp"
#include "symflex/symmetric_nac.hpp"

namespace symflex::io {

using json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; every double written to JSON goes through this.
double round12(double x);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
/// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Graph: {"n", "vertices", "edges", "omega"}; vertices sorted, edges sorted
// with the smaller endpoint first, omega listed for every vertex.
json to_json(const SymmetricGraph& g);
SymmetricGraph graph_from_json(const json& j);

// Colouring: {"red": [[u, v], ...], "blue": [...]}; union must be E(G) exactly.
json to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const Graph& g, const json& j);

json to_json(const Graph& g, const std::vector<EdgeColouring>& colourings);

struct MotionSamples {
  int n = 2;
  std::vector<double> t;
  std::vector<Placement> frames;
};

// Motion: {"n", "frames": [{"t", "positions": {"v": [x, y]}}]}.
json to_json(const Graph& g, const MotionSamples& m);
MotionSamples motion_from_json(const Graph& g, const json& j);

struct ClosureReport {
  bool complete = false;
  std::vector<std::vector<Edge>> rounds;
  std::vector<Edge> degenerate_pairs;
  ProperVerdict verdict = ProperVerdict::undecided;

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

ClosureReport make_closure_report(const VerdictResult& v);
// Closure report: {"complete", "rounds": [{"added"}], "degenerate_pairs", "verdict"}.
json to_json(const Graph& g, const ClosureReport& r);
ClosureReport closure_report_from_json(const Graph& g, const json& j);

// {"ok", "reason", "witness"}
json to_json(const SymmetricGraph& g, const SymmetricNacCheck& check);
json to_json(const Graph& g, const NacCheck& check);
json to_json(const SymmetricGraph& g, const ValidationReport& report);
json to_json(const VerificationReport& report, const MotionTolerances& tolerances);
json to_json(const Graph& g, const ProperCheck& check);

json edge_json(const Graph& g, const Edge& e);
json vertex_list_json(const Graph& g, const std::vector<Vertex>& vs);

}  // namespace symflex::io

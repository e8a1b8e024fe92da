#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symflex {

/// Dense vertex index. Indices follow the sorted order of vertex names.
using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite simple graph with named vertices.
///
/// Vertex names are kept sorted; edges are kept sorted by (u, v), which is the
/// canonical edge ordering every colouring is indexed by.
class Graph {
 public:
  Graph() = default;

  /// Throws StructuralError on duplicate vertices, unknown endpoints, loops or
  /// duplicate edges.
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based constructor; `names` must already be sorted and unique.
  Graph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const std::string> names() const { return names_; }
  const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<Vertex> find_vertex(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Position of {a, b} in the canonical edge list.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  /// Neighbours of v in increasing order.
  std::span<const Vertex> neighbours(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool is_complete() const {
    const auto n = vertex_count();
    return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  std::string edge_label(const Edge& e) const { return name(e.u) + "-" + name(e.v); }

 private:
  void index();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> edge_lookup_;  // vertex_count^2, -1 when absent
};

/// A graph together with the action of the generator omega of a cyclic group
/// of order n. Construction only checks structure; use validate_symmetric_graph
/// for the symmetry invariants.
class SymmetricGraph : public Graph {
 public:
  SymmetricGraph() = default;

  /// Throws StructuralError when n < 2 or omega is not a permutation of the
  /// declared vertices.
  SymmetricGraph(int n, std::vector<std::string> names,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::map<std::string, std::string>& omega);

  SymmetricGraph(int n, Graph graph, std::vector<Vertex> omega);

  int order() const { return n_; }
  Vertex omega(Vertex v) const { return omega_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> omega() const { return omega_; }

  /// omega^k(v) for any integer k (reduced modulo n).
  Vertex act(Vertex v, int k) const;
  Edge act(const Edge& e, int k) const { return Edge::make(act(e.u, k), act(e.v, k)); }

  bool is_invariant(Vertex v) const { return omega(v) == v; }

  /// Same vertices and action, edge set extended by `extra` (which must not
  /// contain existing edges or loops).
  SymmetricGraph with_added_edges(std::span<const Edge> extra) const;

 private:
  int n_ = 2;
  std::vector<Vertex> omega_;
};

enum class ViolationKind {
  wrong_order,                 // omega does not have order exactly n
  not_automorphism,            // an edge whose omega-image is not an edge
  partially_invariant_vertex,  // fixed by some omega^k, 0 < k < n, but not by omega
  adjacent_invariant_vertices  // invariant vertices do not form an independent set
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
  std::optional<int> k;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks every symmetry invariant and reports all violations, not only the first.
ValidationReport validate_symmetric_graph(const SymmetricGraph& g);

/// Throws PreconditionError listing the violations when g is not valid.
void require_valid(const SymmetricGraph& g);

/// Multiplicative order of the permutation omega.
long long permutation_order(std::span<const Vertex> omega);

/// Partition of a ground set (vertices or edge indices) into orbits of <omega>.
///
/// Classes are ordered by their smallest element; the representative is that
/// smallest element, and each class lists rep, omega(rep), omega^2(rep), ...
struct OrbitPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  std::size_t size() const { return classes.size(); }
  int representative(std::size_t c) const { return classes[c].front(); }
};

OrbitPartition vertex_orbits(const SymmetricGraph& g);
OrbitPartition edge_orbits(const SymmetricGraph& g);

/// Orbits of vertex pairs (not necessarily edges) under omega.
std::vector<std::vector<Edge>> pair_orbits(const SymmetricGraph& g, std::span<const Edge> pairs);

}  // namespace symflex

#include "symflex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "symflex/errors.hpp"

namespace symflex {

namespace {

std::vector<std::string> sorted_unique_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  const auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) {
    throw StructuralError(fmt::format("duplicate vertex '{}'", *dup));
  }
  return names;
}

}  // namespace

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(sorted_unique_names(std::move(names))) {
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto u = find_vertex(a);
    const auto v = find_vertex(b);
    if (!u) throw StructuralError(fmt::format("edge {}-{} has unknown endpoint '{}'", a, b, a));
    if (!v) throw StructuralError(fmt::format("edge {}-{} has unknown endpoint '{}'", a, b, b));
    if (*u == *v) throw StructuralError(fmt::format("loop at vertex '{}'", a));
    edges_.push_back(Edge::make(*u, *v));
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw StructuralError(fmt::format("duplicate edge {}", edge_label(*dup)));
  }
  index();
}

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const auto n = static_cast<Vertex>(names_.size());
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) {
      throw StructuralError("edge index out of range or not normalized");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw StructuralError("duplicate edge");
  }
  index();
}

void Graph::index() {
  const auto n = names_.size();
  adjacency_.assign(n, {});
  edge_lookup_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    edge_lookup_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = static_cast<int>(i);
    edge_lookup_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = static_cast<int>(i);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<Vertex> Graph::find_vertex(std::string_view name) const {
  const auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const auto n = names_.size();
  const int i = edge_lookup_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

// ---------------------------------------------------------------------------

SymmetricGraph::SymmetricGraph(int n, std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::map<std::string, std::string>& omega)
    : Graph(std::move(names), edges), n_(n) {
  if (n < 2) throw StructuralError(fmt::format("symmetry order n = {} must be at least 2", n));
  omega_.assign(vertex_count(), -1);
  for (const auto& [from, to] : omega) {
    const auto u = find_vertex(from);
    const auto v = find_vertex(to);
    if (!u) throw StructuralError(fmt::format("omega maps unknown vertex '{}'", from));
    if (!v) throw StructuralError(fmt::format("omega maps '{}' to unknown vertex '{}'", from, to));
    omega_[static_cast<std::size_t>(*u)] = *v;
  }
  // Vertices absent from the omega map are fixed.
  for (std::size_t v = 0; v < omega_.size(); ++v) {
    if (omega_[v] < 0) omega_[v] = static_cast<Vertex>(v);
  }
  std::vector<bool> hit(vertex_count(), false);
  for (std::size_t v = 0; v < omega_.size(); ++v) {
    auto h = hit[static_cast<std::size_t>(omega_[v])];
    if (h) {
      throw StructuralError(fmt::format("omega is not injective: two vertices map to '{}'",
                                        name(omega_[v])));
    }
    h = true;
  }
}

SymmetricGraph::SymmetricGraph(int n, Graph graph, std::vector<Vertex> omega)
    : Graph(std::move(graph)), n_(n), omega_(std::move(omega)) {
  if (n < 2) throw StructuralError(fmt::format("symmetry order n = {} must be at least 2", n));
  if (omega_.size() != vertex_count()) throw StructuralError("omega has wrong size");
  std::vector<bool> hit(vertex_count(), false);
  for (const auto w : omega_) {
    if (w < 0 || static_cast<std::size_t>(w) >= vertex_count() || hit[static_cast<std::size_t>(w)]) {
      throw StructuralError("omega is not a permutation");
    }
    hit[static_cast<std::size_t>(w)] = true;
  }
}

Vertex SymmetricGraph::act(Vertex v, int k) const {
  k %= n_;
  if (k < 0) k += n_;
  for (int i = 0; i < k; ++i) v = omega(v);
  return v;
}

SymmetricGraph SymmetricGraph::with_added_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all(edges().begin(), edges().end());
  all.insert(all.end(), extra.begin(), extra.end());
  std::vector<std::string> names(this->names().begin(), this->names().end());
  return SymmetricGraph(n_, Graph(std::move(names), std::move(all)), omega_);
}

// ---------------------------------------------------------------------------

long long permutation_order(std::span<const Vertex> omega) {
  long long order = 1;
  std::vector<bool> seen(omega.size(), false);
  for (std::size_t start = 0; start < omega.size(); ++start) {
    if (seen[start]) continue;
    long long len = 0;
    for (auto v = static_cast<Vertex>(start); !seen[static_cast<std::size_t>(v)];
         v = omega[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

ValidationReport validate_symmetric_graph(const SymmetricGraph& g) {
  ValidationReport report;
  const int n = g.order();

  const auto order = permutation_order(g.omega());
  if (order != n) {
    report.violations.push_back({ViolationKind::wrong_order,
                                 fmt::format("order of omega is {}, not {}", order, n),
                                 std::nullopt, std::nullopt, static_cast<int>(order)});
  }

  for (const auto& e : g.edges()) {
    const auto image = g.act(e, 1);
    if (!g.adjacent(image.u, image.v)) {
      report.violations.push_back(
          {ViolationKind::not_automorphism,
           fmt::format("omega maps edge {} to non-edge {}-{}", g.edge_label(e), g.name(image.u),
                       g.name(image.v)),
           std::nullopt, e, std::nullopt});
    }
  }

  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (g.is_invariant(v)) continue;
    int cycle = 1;
    for (Vertex w = g.omega(v); w != v; w = g.omega(w)) ++cycle;
    if (cycle < n) {
      report.violations.push_back(
          {ViolationKind::partially_invariant_vertex,
           fmt::format("vertex {} is fixed by omega^{} but is not invariant", g.name(v), cycle), v,
           std::nullopt, cycle});
    }
  }

  for (const auto& e : g.edges()) {
    if (g.is_invariant(e.u) && g.is_invariant(e.v)) {
      report.violations.push_back(
          {ViolationKind::adjacent_invariant_vertices,
           fmt::format("invariant vertices {} and {} are adjacent", g.name(e.u), g.name(e.v)),
           std::nullopt, e, std::nullopt});
    }
  }
  return report;
}

void require_valid(const SymmetricGraph& g) {
  const auto report = validate_symmetric_graph(g);
  if (report.valid()) return;
  std::string msg = "graph is not a valid Cn-symmetric graph:";
  for (const auto& v : report.violations) msg += "\n  " + v.message;
  throw PreconditionError(msg);
}

namespace {

template <typename Image>
OrbitPartition orbits_of(std::size_t count, Image image) {
  OrbitPartition p;
  p.class_of.assign(count, -1);
  for (std::size_t start = 0; start < count; ++start) {
    if (p.class_of[start] >= 0) continue;
    const int id = static_cast<int>(p.classes.size());
    auto& cls = p.classes.emplace_back();
    for (auto x = static_cast<int>(start); p.class_of[static_cast<std::size_t>(x)] < 0; x = image(x)) {
      p.class_of[static_cast<std::size_t>(x)] = id;
      cls.push_back(x);
    }
  }
  return p;
}

}  // namespace

OrbitPartition vertex_orbits(const SymmetricGraph& g) {
  return orbits_of(g.vertex_count(), [&](int v) { return g.omega(v); });
}

OrbitPartition edge_orbits(const SymmetricGraph& g) {
  return orbits_of(g.edge_count(), [&](int e) {
    const auto image = g.act(g.edge(static_cast<std::size_t>(e)), 1);
    const auto idx = g.edge_index(image.u, image.v);
    if (!idx) throw PreconditionError("omega is not an automorphism of the graph");
    return static_cast<int>(*idx);
  });
}

std::vector<std::vector<Edge>> pair_orbits(const SymmetricGraph& g, std::span<const Edge> pairs) {
  std::set<Edge> seen;
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& p : sorted) {
    if (seen.contains(p)) continue;
    std::vector<Edge> orbit;
    for (int k = 0; k < g.order(); ++k) {
      const auto q = g.act(p, k);
      if (seen.insert(q).second) orbit.push_back(q);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace symflex

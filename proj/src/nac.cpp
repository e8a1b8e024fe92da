#include "symflex/nac.hpp"

#include <algorithm>
#include <deque>

#include "symflex/errors.hpp"
#include "symflex/search.hpp"

namespace symflex {

std::size_t EdgeColouring::count(Colour c) const {
  return static_cast<std::size_t>(std::count(colours_.begin(), colours_.end(), c));
}

bool canonical_less(const EdgeColouring& a, const EdgeColouring& b) {
  return std::lexicographical_compare(
      a.colours().begin(), a.colours().end(), b.colours().begin(), b.colours().end(),
      [](Colour x, Colour y) { return x == Colour::blue && y == Colour::red; });
}

EdgeColouring conjugate(const EdgeColouring& c) {
  std::vector<Colour> flipped(c.colours());
  for (auto& x : flipped) x = opposite(x);
  return EdgeColouring(std::move(flipped));
}

namespace {

void require_total(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) {
    throw PreconditionError("colouring does not cover exactly the edge set of the graph");
  }
}

}  // namespace

MonochromaticComponents monochromatic_components(const Graph& g, const EdgeColouring& c,
                                                 Colour colour) {
  require_total(g, c);
  MonochromaticComponents out;
  out.colour = colour;
  out.component_of.assign(g.vertex_count(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < static_cast<Vertex>(g.vertex_count()); ++s) {
    if (out.component_of[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    auto& cls = out.classes.emplace_back();
    out.component_of[static_cast<std::size_t>(s)] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      cls.push_back(x);
      for (const Vertex y : g.neighbours(x)) {
        if (out.component_of[static_cast<std::size_t>(y)] >= 0) continue;
        if (c[*g.edge_index(x, y)] != colour) continue;
        out.component_of[static_cast<std::size_t>(y)] = id;
        queue.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
  }
  return out;
}

std::vector<Vertex> monochromatic_path(const Graph& g, const EdgeColouring& c, Colour colour,
                                       Vertex u, Vertex v) {
  require_total(g, c);
  std::vector<Vertex> parent(g.vertex_count(), -1);
  parent[static_cast<std::size_t>(u)] = u;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (const Vertex y : g.neighbours(x)) {
      if (parent[static_cast<std::size_t>(y)] >= 0 || c[*g.edge_index(x, y)] != colour) continue;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (parent[static_cast<std::size_t>(v)] < 0) return {};
  std::vector<Vertex> path;
  for (Vertex x = v; x != u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

NacCheck is_nac(const Graph& g, const EdgeColouring& c) {
  require_total(g, c);
  NacCheck result;
  if (!c.is_surjective()) {
    result.failure = NacCheck::Failure::not_surjective;
    return result;
  }
  const auto red = monochromatic_components(g, c, Colour::red);
  const auto blue = monochromatic_components(g, c, Colour::blue);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    const auto& other = c[i] == Colour::red ? blue : red;
    if (!other.same(e.u, e.v)) continue;
    result.failure = NacCheck::Failure::almost_cycle;
    result.witness = AlmostCycle{i, c[i], monochromatic_path(g, c, opposite(c[i]), e.u, e.v)};
    return result;
  }
  return result;
}

std::vector<EdgeColouring> enumerate_nac(const Graph& g, const NacSearchOptions& options) {
  if (g.edge_count() > options.max_edges) {
    throw SearchBoundExceeded("edges", g.edge_count(), options.max_edges);
  }
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) groups.push_back({i});
  return detail::search_group_colourings(
      g, groups, [](const EdgeColouring&) { return true; },
      {options.up_to_conjugation, options.threads});
}

}  // namespace symflex

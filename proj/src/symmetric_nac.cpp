#include "symflex/symmetric_nac.hpp"

#include <fmt/format.h>

#include "symflex/errors.hpp"
#include "symflex/search.hpp"

namespace symflex {

ComponentFlags component_symmetry_flags(const SymmetricGraph& g, const EdgeColouring& c,
                                        Colour colour) {
  ComponentFlags flags;
  flags.components = monochromatic_components(g, c, colour);
  const auto& comps = flags.components;
  const int n = g.order();
  flags.symmetry.assign(comps.size(), {});

  // Edges of the chosen colour, grouped by component.
  std::vector<std::vector<std::size_t>> comp_edges(comps.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (c[i] != colour) continue;
    comp_edges[static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(g.edge(i).u)])]
        .push_back(i);
  }

  std::vector<Vertex> power(g.vertex_count());
  for (std::size_t v = 0; v < power.size(); ++v) power[v] = static_cast<Vertex>(v);

  for (int k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < comps.size(); ++h) {
      bool fixed = true;
      for (const Vertex v : comps.classes[h]) {
        if (comps.component_of[static_cast<std::size_t>(power[static_cast<std::size_t>(v)])] !=
            static_cast<int>(h)) {
          fixed = false;
          break;
        }
      }
      for (std::size_t i = 0; fixed && i < comp_edges[h].size(); ++i) {
        const auto& e = g.edge(comp_edges[h][i]);
        const auto image = g.edge_index(power[static_cast<std::size_t>(e.u)],
                                        power[static_cast<std::size_t>(e.v)]);
        fixed = image && c[*image] == colour;
      }
      if (fixed) flags.symmetry[h].stabilizer.push_back(k);
    }
    for (auto& p : power) p = g.omega(p);
  }

  for (auto& s : flags.symmetry) {
    s.partially_invariant = s.stabilizer.size() > 1;
    s.invariant = static_cast<int>(s.stabilizer.size()) == n;
  }
  return flags;
}

std::optional<PartiallyInvariantLink> find_partially_invariant_link(const SymmetricGraph& g,
                                                                    const EdgeColouring& c) {
  for (const auto colour : {Colour::red, Colour::blue}) {
    const auto flags = component_symmetry_flags(g, c, colour);
    const auto& comps = flags.components;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (c[i] == colour) continue;
      const auto& e = g.edge(i);
      if (comps.same(e.u, e.v)) continue;
      if (!flags.partially_invariant(e.u) || !flags.partially_invariant(e.v)) continue;
      const auto cu = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(e.u)]);
      const auto cv = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(e.v)]);
      return PartiallyInvariantLink{colour, comps.classes[cu], comps.classes[cv], i};
    }
  }
  return std::nullopt;
}

SymmetricNacCheck is_cn_symmetric_nac(const SymmetricGraph& g, const EdgeColouring& c) {
  if (c.size() != g.edge_count()) {
    throw PreconditionError("colouring does not cover exactly the edge set of the graph");
  }
  SymmetricNacCheck result;

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto image = g.act(g.edge(i), 1);
    const auto j = g.edge_index(image.u, image.v);
    if (!j) throw PreconditionError("omega is not an automorphism of the graph");
    if (c[*j] != c[i]) {
      result.failure = SymmetricNacCheck::Failure::not_orbit_constant;
      result.edge = i;
      result.image_edge = *j;
      return result;
    }
  }

  auto nac = is_nac(g, c);
  if (!nac) {
    result.failure = SymmetricNacCheck::Failure::not_nac;
    result.nac = std::move(nac);
    return result;
  }

  if (auto link = find_partially_invariant_link(g, c)) {
    result.failure = SymmetricNacCheck::Failure::linked_partially_invariant;
    result.link = std::move(link);
  }
  return result;
}

namespace {

std::string vertex_set(const SymmetricGraph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += g.name(vs[i]);
  }
  return s + "}";
}

}  // namespace

std::string describe(const SymmetricGraph& g, const SymmetricNacCheck& check) {
  using F = SymmetricNacCheck::Failure;
  switch (check.failure) {
    case F::none:
      return "Cn-symmetric NAC-colouring";
    case F::not_orbit_constant:
      return fmt::format("not constant on edge orbits: omega maps {} to {} of the other colour",
                         g.edge_label(g.edge(*check.edge)), g.edge_label(g.edge(*check.image_edge)));
    case F::not_nac:
      if (check.nac->failure == NacCheck::Failure::not_surjective) {
        return "not NAC: colouring is not surjective";
      } else {
        const auto& w = *check.nac->witness;
        return fmt::format("not NAC: {} edge {} closes a {} path", to_string(w.edge_colour),
                           g.edge_label(g.edge(w.edge)), to_string(opposite(w.edge_colour)));
      }
    case F::linked_partially_invariant: {
      const auto& l = *check.link;
      return fmt::format("distinct partially invariant {} components {} and {} joined by edge {}",
                         to_string(l.colour), vertex_set(g, l.first), vertex_set(g, l.second),
                         g.edge_label(g.edge(l.edge)));
    }
  }
  return {};
}

std::vector<EdgeColouring> enumerate_cn_symmetric_nac(const SymmetricGraph& g,
                                                      const SymmetricNacSearchOptions& options) {
  require_valid(g);
  const auto orbits = edge_orbits(g);
  if (orbits.size() > options.max_orbits) {
    throw SearchBoundExceeded("edge orbits", orbits.size(), options.max_orbits);
  }
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(orbits.size());
  for (const auto& cls : orbits.classes) groups.emplace_back(cls.begin(), cls.end());
  return detail::search_group_colourings(
      g, groups, [&](const EdgeColouring& c) { return !find_partially_invariant_link(g, c); },
      {options.up_to_conjugation, options.threads});
}

}  // namespace symflex

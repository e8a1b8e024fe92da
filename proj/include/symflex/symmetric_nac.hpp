#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symflex/graph.hpp"
#include "symflex/nac.hpp"

namespace symflex {

/// Symmetry data of one monochromatic component H.
struct ComponentSymmetry {
  std::vector<int> stabilizer;  // all k in [0, n) with omega^k H = H, ascending
  bool partially_invariant = false;
  bool invariant = false;
};

/// Components of one colour together with their symmetry flags.
struct ComponentFlags {
  MonochromaticComponents components;
  std::vector<ComponentSymmetry> symmetry;  // parallel to components.classes

  bool partially_invariant(Vertex v) const {
    return symmetry[static_cast<std::size_t>(components.component_of[static_cast<std::size_t>(v)])]
        .partially_invariant;
  }
};

/// omega^k H = H means omega^k maps the vertex set of H onto itself and every
/// edge of H onto an edge of H. Works for colourings that are not orbit-constant.
ComponentFlags component_symmetry_flags(const SymmetricGraph& g, const EdgeColouring& c, Colour colour);

/// An edge of the opposite colour joining two distinct partially invariant
/// components of `colour`.
struct PartiallyInvariantLink {
  Colour colour = Colour::red;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  std::size_t edge = 0;
};

struct SymmetricNacCheck {
  enum class Failure { none, not_orbit_constant, not_nac, linked_partially_invariant };

  Failure failure = Failure::none;
  // not_orbit_constant: edge whose omega-image has a different colour.
  std::optional<std::size_t> edge;
  std::optional<std::size_t> image_edge;
  // not_nac
  std::optional<NacCheck> nac;
  // linked_partially_invariant
  std::optional<PartiallyInvariantLink> link;

  bool ok() const { return failure == Failure::none; }
  explicit operator bool() const { return ok(); }
};

std::string describe(const SymmetricGraph& g, const SymmetricNacCheck& check);

/// Clauses are checked in the order: constant on edge orbits, NAC, no edge
/// between distinct same-colour partially invariant components (both colours).
/// The first violated clause is reported.
SymmetricNacCheck is_cn_symmetric_nac(const SymmetricGraph& g, const EdgeColouring& c);

/// The partially-invariant-component clause on its own.
std::optional<PartiallyInvariantLink> find_partially_invariant_link(const SymmetricGraph& g,
                                                                    const EdgeColouring& c);

struct SymmetricNacSearchOptions {
  bool up_to_conjugation = false;
  std::size_t max_orbits = 30;
  unsigned threads = 1;
};

/// All Cn-symmetric NAC-colourings, searching over one decision per edge
/// orbit. Canonical order as enumerate_nac. Throws SearchBoundExceeded when
/// the number of edge orbits exceeds max_orbits.
std::vector<EdgeColouring> enumerate_cn_symmetric_nac(const SymmetricGraph& g,
                                                      const SymmetricNacSearchOptions& options = {});

}  // namespace symflex

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "symflex/graph.hpp"
#include "symflex/nac.hpp"
#include "symflex/symmetric_nac.hpp"

namespace symflex {

struct ClosureOptions {
  std::size_t max_orbits = 30;
  unsigned threads = 1;
};

/// Non-adjacent pairs {u, v} lying in a common red or a common blue component
/// for every Cn-symmetric NAC-colouring, i.e. joined by a path that is
/// monochromatic in every such colouring. With no such colouring at all, every
/// non-adjacent pair qualifies.
std::vector<Edge> u_pairs(const SymmetricGraph& g, const ClosureOptions& options = {});

/// Same, for an already enumerated list of colourings of g.
std::vector<Edge> u_pairs(const SymmetricGraph& g, const std::vector<EdgeColouring>& colourings);

struct ClosureRound {
  std::vector<std::vector<Edge>> orbits;  // added pairs grouped by omega-orbit
  std::vector<Edge> added() const;
};

struct ClosureResult {
  SymmetricGraph closure_graph;
  std::vector<ClosureRound> rounds;
  bool complete = false;
  /// U-pairs joining two invariant vertices. They are never added: both
  /// vertices sit at the origin in every symmetric placement.
  std::vector<Edge> degenerate_pairs;
};

/// Repeatedly adds the U-pairs (orbit-wholesale) until none remain.
ClosureResult constant_distance_closure(const SymmetricGraph& g, const ClosureOptions& options = {});

enum class ProperVerdict { no_proper_placement, proper_placement_exists, undecided };

std::string_view to_string(ProperVerdict v);

struct VerdictResult {
  ProperVerdict verdict = ProperVerdict::undecided;
  ClosureResult closure;
  /// A Cn-symmetric NAC-colouring passing the proper-placement conditions,
  /// and whether it colours the closure graph (true) or the input graph.
  std::optional<EdgeColouring> certificate;
  bool certificate_on_closure = false;
};

/// NO_PROPER_PLACEMENT if the closure is complete or a degenerate pair was met;
/// PROPER_PLACEMENT_EXISTS if a Cn-symmetric NAC-colouring of the closure (or
/// of g itself) passes check_proper_conditions; UNDECIDED otherwise.
VerdictResult proper_flex_verdict(const SymmetricGraph& g, const ClosureOptions& options = {});

}  // namespace symflex

#pragma once

// Branch-and-prune search over colourings in which prescribed groups of edges
// share a colour. Shared by plain and symmetric NAC enumeration.

#include <cstddef>
#include <functional>
#include <vector>

#include "symflex/graph.hpp"
#include "symflex/nac.hpp"

namespace symflex::detail {

struct GroupSearchOptions {
  bool up_to_conjugation = false;
  unsigned threads = 1;
};

/// Enumerates every total colouring that is constant on each group, has no
/// almost-cycle, and satisfies `accept`. `groups` must partition the edge set.
/// `accept` must be invariant under conjugation. The result is in canonical
/// order; with up_to_conjugation only the representative with edge 0 red is kept.
std::vector<EdgeColouring> search_group_colourings(
    const Graph& g, const std::vector<std::vector<std::size_t>>& groups,
    const std::function<bool(const EdgeColouring&)>& accept, const GroupSearchOptions& options);

/// Edge order used by the search: vertices in breadth-first order, each
/// attached first by its tree edge, followed by its edges back to earlier vertices.
std::vector<std::size_t> spanning_tree_first_order(const Graph& g);

/// Worker count from SYMFLEX_THREADS, falling back to the hardware concurrency.
unsigned default_thread_count();

}  // namespace symflex::detail

#include "symflex/closure.hpp"

#include <algorithm>

#include "symflex/errors.hpp"
#include "symflex/motion.hpp"

namespace symflex {

std::vector<Edge> u_pairs(const SymmetricGraph& g, const std::vector<EdgeColouring>& colourings) {
  const auto nv = g.vertex_count();
  // related[u * nv + v]: still joined monochromatically in every colouring seen.
  std::vector<char> related(nv * nv, 1);
  for (const auto& c : colourings) {
    const auto red = monochromatic_components(g, c, Colour::red);
    const auto blue = monochromatic_components(g, c, Colour::blue);
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        auto& r = related[u * nv + v];
        if (r && !red.same(static_cast<Vertex>(u), static_cast<Vertex>(v)) &&
            !blue.same(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          r = 0;
        }
      }
    }
  }
  std::vector<Edge> out;
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      if (!related[u * nv + v] || g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
      out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return out;
}

std::vector<Edge> u_pairs(const SymmetricGraph& g, const ClosureOptions& options) {
  const auto colourings =
      enumerate_cn_symmetric_nac(g, {/*up_to_conjugation=*/true, options.max_orbits, options.threads});
  return u_pairs(g, colourings);
}

std::vector<Edge> ClosureRound::added() const {
  std::vector<Edge> all;
  for (const auto& o : orbits) all.insert(all.end(), o.begin(), o.end());
  std::sort(all.begin(), all.end());
  return all;
}

ClosureResult constant_distance_closure(const SymmetricGraph& g, const ClosureOptions& options) {
  require_valid(g);
  ClosureResult result;
  result.closure_graph = g;
  const auto& current = result.closure_graph;

  for (;;) {
    std::vector<Edge> additions;
    for (const auto& p : u_pairs(current, options)) {
      if (current.is_invariant(p.u) && current.is_invariant(p.v)) {
        if (std::find(result.degenerate_pairs.begin(), result.degenerate_pairs.end(), p) ==
            result.degenerate_pairs.end()) {
          result.degenerate_pairs.push_back(p);
        }
        continue;
      }
      additions.push_back(p);
    }
    if (additions.empty()) break;

    ClosureRound round;
    round.orbits = pair_orbits(current, additions);
    result.rounds.push_back(round);
    const auto added = round.added();
    result.closure_graph = current.with_added_edges(added);
  }
  std::sort(result.degenerate_pairs.begin(), result.degenerate_pairs.end());
  result.complete = result.closure_graph.is_complete();
  return result;
}

std::string_view to_string(ProperVerdict v) {
  switch (v) {
    case ProperVerdict::no_proper_placement:
      return "NO_PROPER_PLACEMENT";
    case ProperVerdict::proper_placement_exists:
      return "PROPER_PLACEMENT_EXISTS";
    case ProperVerdict::undecided:
      return "UNDECIDED";
  }
  return "UNDECIDED";
}

VerdictResult proper_flex_verdict(const SymmetricGraph& g, const ClosureOptions& options) {
  VerdictResult out;
  out.closure = constant_distance_closure(g, options);
  if (out.closure.complete || !out.closure.degenerate_pairs.empty()) {
    out.verdict = ProperVerdict::no_proper_placement;
    return out;
  }
  const SymmetricNacSearchOptions search{true, options.max_orbits, options.threads};
  for (const bool on_closure : {true, false}) {
    const auto& h = on_closure ? out.closure.closure_graph : g;
    for (const auto& c : enumerate_cn_symmetric_nac(h, search)) {
      if (check_proper_conditions(h, c).ok()) {
        out.verdict = ProperVerdict::proper_placement_exists;
        out.certificate = c;
        out.certificate_on_closure = on_closure;
        return out;
      }
    }
  }
  out.verdict = ProperVerdict::undecided;
  return out;
}

}  // namespace symflex

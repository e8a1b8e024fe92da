#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symflex/graph.hpp"

namespace symflex {

enum class Colour : std::uint8_t { red, blue };

constexpr Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
constexpr std::string_view to_string(Colour c) { return c == Colour::red ? "red" : "blue"; }

/// Total red/blue assignment indexed by the canonical edge order of a graph.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}
  EdgeColouring(std::size_t edge_count, Colour fill) : colours_(edge_count, fill) {}

  std::size_t size() const { return colours_.size(); }
  Colour operator[](std::size_t e) const { return colours_[e]; }
  void set(std::size_t e, Colour c) { colours_[e] = c; }
  const std::vector<Colour>& colours() const { return colours_; }

  std::size_t count(Colour c) const;
  bool is_surjective() const { return count(Colour::red) > 0 && count(Colour::blue) > 0; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// Canonical order: lexicographic comparison of the red-edge bit sequence
/// (edge 0 first, blue = 0, red = 1).
bool canonical_less(const EdgeColouring& a, const EdgeColouring& b);

EdgeColouring conjugate(const EdgeColouring& c);

/// Connected components of (V(G), edges of one colour). Isolated vertices are
/// singleton components. Components are numbered by their smallest vertex.
struct MonochromaticComponents {
  Colour colour = Colour::red;
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> classes;

  bool same(Vertex u, Vertex v) const {
    return component_of[static_cast<std::size_t>(u)] == component_of[static_cast<std::size_t>(v)];
  }
  std::size_t size() const { return classes.size(); }
};

MonochromaticComponents monochromatic_components(const Graph& g, const EdgeColouring& c, Colour colour);

/// An edge whose endpoints are joined by a path of the opposite colour: the
/// edge and the path form a cycle with exactly one edge of `edge_colour`.
struct AlmostCycle {
  std::size_t edge = 0;
  Colour edge_colour = Colour::red;
  std::vector<Vertex> path;  // from edge.u to edge.v, all edges of the opposite colour
};

struct NacCheck {
  enum class Failure { none, not_surjective, almost_cycle };

  Failure failure = Failure::none;
  std::optional<AlmostCycle> witness;

  bool ok() const { return failure == Failure::none; }
  explicit operator bool() const { return ok(); }
};

/// Decides the NAC property through the component characterisation: no edge
/// of one colour joins two vertices of the same component of the other colour.
NacCheck is_nac(const Graph& g, const EdgeColouring& c);

/// Path between u and v using only edges of `colour`, or empty if none.
std::vector<Vertex> monochromatic_path(const Graph& g, const EdgeColouring& c, Colour colour,
                                       Vertex u, Vertex v);

struct NacSearchOptions {
  bool up_to_conjugation = false;
  std::size_t max_edges = 30;
  unsigned threads = 1;
};

/// All NAC-colourings in canonical order. With up_to_conjugation, each
/// conjugate pair is represented by the member whose edge 0 is red.
/// Throws SearchBoundExceeded when the edge count exceeds max_edges.
std::vector<EdgeColouring> enumerate_nac(const Graph& g, const NacSearchOptions& options = {});

}  // namespace symflex

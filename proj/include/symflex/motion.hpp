#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symflex/graph.hpp"
#include "symflex/nac.hpp"

namespace symflex {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;

  double norm() const { return std::hypot(x, y); }
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Counter-clockwise rotation by `angle` radians.
Vec2 rotate(Vec2 p, double angle);

/// tau(omega^k): counter-clockwise rotation by 2*pi*k/n.
Vec2 symmetry_rotate(Vec2 p, int k, int n);

/// One base point per orbit of non-partially-invariant red (a) and blue (b)
/// components.
struct BasePoints {
  std::vector<Vec2> a;
  std::vector<Vec2> b;
  int n = 2;
};

/// Checks the three genericity conditions at the given relative tolerance:
/// points nonzero; a_j != tau^i a_j' and b_j != tau^i b_j' for j != j';
/// a_j and tau^i b_j' linearly independent.
bool base_points_generic(const BasePoints& bp, double tolerance = 1e-9);

/// Without a seed: red points at radii 1..m, angle j/7; blue points at radii
/// m+1..m+k, angle j/7 + 1/14 (falling back to the seeded sampler if that ever
/// fails the numerical check). With a seed: rejection sampling from that seed.
/// Throws std::runtime_error if 1000 samples all fail.
BasePoints choose_base_points(std::size_t m, std::size_t k, int n,
                              std::optional<std::uint64_t> seed = std::nullopt);

/// p_t(v) = R(t) abar(v) + bbar(v).
struct ParametricMotion {
  int n = 2;
  std::vector<Vec2> abar;
  std::vector<Vec2> bbar;
  BasePoints base;
};

/// Grid construction from a Cn-symmetric NAC-colouring. Throws
/// PreconditionError naming the failed clause when c is not Cn-symmetric NAC.
/// When `base` is given its sizes must match the component orbit counts.
ParametricMotion construct_motion(const SymmetricGraph& g, const EdgeColouring& c,
                                  const std::optional<BasePoints>& base = std::nullopt);

/// Number of red (m) and blue (k) orbits of non-partially-invariant components.
std::pair<std::size_t, std::size_t> component_orbit_counts(const SymmetricGraph& g,
                                                           const EdgeColouring& c);

using Placement = std::vector<Vec2>;

Placement sample_at(const ParametricMotion& motion, double t);
std::vector<Placement> sample_motion(const ParametricMotion& motion, std::span<const double> ts);

/// `count` uniformly spaced parameters on [0, 2*pi), optionally shifted by `offset`.
std::vector<double> uniform_parameters(std::size_t count, double offset = 0.0);

struct MotionTolerances {
  double equality = 1e-9;          // edge-length and symmetry residuals
  double nontrivial_relative = 1e-6;  // margin threshold, times the max edge length
};

struct VerificationReport {
  double max_edge_residual = 0.0;
  double max_symmetry_residual = 0.0;
  std::vector<double> min_pair_distance;  // per frame, over all vertex pairs
  double min_edge_length = 0.0;           // over all frames
  double max_edge_length = 0.0;           // in the first frame
  double nontriviality_margin = 0.0;

  bool edge_lengths_ok = false;
  bool symmetry_ok = false;
  bool framework_ok = false;  // adjacent vertices never coincide
  bool nontrivial_ok = false;

  bool passed() const { return edge_lengths_ok && symmetry_ok && framework_ok && nontrivial_ok; }
};

/// Needs at least two frames (PreconditionError otherwise).
VerificationReport verify_motion(const SymmetricGraph& g, std::span<const Placement> frames,
                                 const MotionTolerances& tolerances = {});

/// Number of frames in which two distinct vertices are closer than `threshold`.
std::size_t count_non_injective(std::span<const Placement> frames, double threshold);

struct ProperConditionViolation {
  int condition = 0;  // 1, 2 or 3
  std::string message;
  std::vector<Vertex> vertices;  // shared vertices, connecting path, or doubly covered vertices
};

struct ProperCheck {
  std::vector<ProperConditionViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// The sufficient conditions for a proper flexible placement:
///  1. |V(B) ∩ V(R)| <= 1 for every blue component B and red component R;
///  2. no two blue (red) partially invariant components are joined by a red (blue) path;
///  3. at most one vertex lies in both a red and a blue partially invariant component.
/// Throws PreconditionError if c is not a Cn-symmetric NAC-colouring.
ProperCheck check_proper_conditions(const SymmetricGraph& g, const EdgeColouring& c);

}  // namespace symflex

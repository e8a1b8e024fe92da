#include "symflex/motion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "symflex/errors.hpp"
#include "symflex/symmetric_nac.hpp"

namespace symflex {

Vec2 rotate(Vec2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

Vec2 symmetry_rotate(Vec2 p, int k, int n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return p;
  return rotate(p, 2.0 * std::numbers::pi * k / n);
}

bool base_points_generic(const BasePoints& bp, double tolerance) {
  double scale = 1.0;
  for (const auto& p : bp.a) scale = std::max(scale, p.norm());
  for (const auto& p : bp.b) scale = std::max(scale, p.norm());
  const double eps = tolerance * scale;

  for (const auto* set : {&bp.a, &bp.b}) {
    for (const auto& p : *set) {
      if (p.norm() <= eps) return false;
    }
    for (std::size_t j = 0; j < set->size(); ++j) {
      for (std::size_t jj = 0; jj < set->size(); ++jj) {
        if (j == jj) continue;
        for (int i = 0; i < bp.n; ++i) {
          if (distance((*set)[j], symmetry_rotate((*set)[jj], i, bp.n)) <= eps) return false;
        }
      }
    }
  }
  for (const auto& a : bp.a) {
    for (const auto& b : bp.b) {
      for (int i = 0; i < bp.n; ++i) {
        if (std::abs(cross(a, symmetry_rotate(b, i, bp.n))) <= tolerance * a.norm() * b.norm()) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

BasePoints sample_base_points(std::size_t m, std::size_t k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BasePoints bp;
    bp.n = n;
    for (std::size_t j = 0; j < m; ++j) bp.a.push_back(rotate({radius(rng), 0.0}, angle(rng)));
    for (std::size_t j = 0; j < k; ++j) bp.b.push_back(rotate({radius(rng), 0.0}, angle(rng)));
    if (base_points_generic(bp)) return bp;
  }
  throw std::runtime_error("no generic base points found after 1000 attempts");
}

}  // namespace

BasePoints choose_base_points(std::size_t m, std::size_t k, int n, std::optional<std::uint64_t> seed) {
  if (n < 2) throw PreconditionError("symmetry order must be at least 2");
  if (seed) return sample_base_points(m, k, n, *seed);
  BasePoints bp;
  bp.n = n;
  for (std::size_t j = 1; j <= m; ++j) {
    bp.a.push_back(rotate({static_cast<double>(j), 0.0}, static_cast<double>(j) / 7.0));
  }
  for (std::size_t j = 1; j <= k; ++j) {
    bp.b.push_back(rotate({static_cast<double>(m + j), 0.0}, static_cast<double>(j) / 7.0 + 1.0 / 14.0));
  }
  if (base_points_generic(bp)) return bp;
  return sample_base_points(m, k, n, 0);
}

namespace {

/// Orbits of non-partially-invariant components of one colour. For a vertex v
/// in component omega^i R_j: orbit[v] = j, step[v] = i. Vertices of partially
/// invariant components have orbit -1.
struct ComponentOrbits {
  std::vector<int> orbit;
  std::vector<int> step;
  std::size_t count = 0;
};

ComponentOrbits component_orbits(const SymmetricGraph& g, const EdgeColouring& c, Colour colour) {
  const auto flags = component_symmetry_flags(g, c, colour);
  const auto& comps = flags.components;
  ComponentOrbits out;
  out.orbit.assign(g.vertex_count(), -1);
  out.step.assign(g.vertex_count(), 0);
  std::vector<bool> done(comps.size(), false);
  // Components are numbered by smallest vertex, so the first component met in
  // an orbit holds the orbit's smallest vertex and becomes R^0_j.
  for (std::size_t h = 0; h < comps.size(); ++h) {
    if (done[h] || flags.symmetry[h].partially_invariant) continue;
    const int j = static_cast<int>(out.count++);
    const Vertex v0 = comps.classes[h].front();
    for (int i = 0; i < g.order(); ++i) {
      const auto hi = static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(g.act(v0, i))]);
      if (done[hi]) throw PreconditionError("component orbit is shorter than n; colouring is not orbit-constant");
      done[hi] = true;
      for (const Vertex v : comps.classes[hi]) {
        out.orbit[static_cast<std::size_t>(v)] = j;
        out.step[static_cast<std::size_t>(v)] = i;
      }
    }
  }
  return out;
}

std::vector<Vec2> grid_values(const ComponentOrbits& orbits, const std::vector<Vec2>& points, int n) {
  // One rotated copy per (j, i), so equal grid cells get bitwise-equal values.
  std::vector<std::vector<Vec2>> table(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int i = 0; i < n; ++i) table[j].push_back(symmetry_rotate(points[j], i, n));
  }
  std::vector<Vec2> out(orbits.orbit.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (orbits.orbit[v] < 0) continue;
    out[v] = table[static_cast<std::size_t>(orbits.orbit[v])][static_cast<std::size_t>(orbits.step[v])];
  }
  return out;
}

void require_symmetric_nac(const SymmetricGraph& g, const EdgeColouring& c, const char* what) {
  const auto check = is_cn_symmetric_nac(g, c);
  if (!check) {
    throw PreconditionError(fmt::format("{} requires a Cn-symmetric NAC-colouring: {}", what,
                                        describe(g, check)));
  }
}

}  // namespace

std::pair<std::size_t, std::size_t> component_orbit_counts(const SymmetricGraph& g,
                                                           const EdgeColouring& c) {
  return {component_orbits(g, c, Colour::red).count, component_orbits(g, c, Colour::blue).count};
}

ParametricMotion construct_motion(const SymmetricGraph& g, const EdgeColouring& c,
                                  const std::optional<BasePoints>& base) {
  require_valid(g);
  require_symmetric_nac(g, c, "motion construction");
  const auto red = component_orbits(g, c, Colour::red);
  const auto blue = component_orbits(g, c, Colour::blue);

  ParametricMotion motion;
  motion.n = g.order();
  if (base) {
    if (base->a.size() != red.count || base->b.size() != blue.count || base->n != g.order()) {
      throw PreconditionError(fmt::format(
          "base points do not match: need {} red and {} blue points for n = {}", red.count,
          blue.count, g.order()));
    }
    motion.base = *base;
  } else {
    motion.base = choose_base_points(red.count, blue.count, g.order());
  }
  motion.abar = grid_values(red, motion.base.a, motion.n);
  motion.bbar = grid_values(blue, motion.base.b, motion.n);
  return motion;
}

Placement sample_at(const ParametricMotion& motion, double t) {
  Placement p(motion.abar.size());
  const double c = std::cos(t);
  const double s = std::sin(t);
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto& a = motion.abar[v];
    p[v] = Vec2{c * a.x - s * a.y, s * a.x + c * a.y} + motion.bbar[v];
  }
  return p;
}

std::vector<Placement> sample_motion(const ParametricMotion& motion, std::span<const double> ts) {
  std::vector<Placement> frames;
  frames.reserve(ts.size());
  for (const double t : ts) frames.push_back(sample_at(motion, t));
  return frames;
}

std::vector<double> uniform_parameters(std::size_t count, double offset) {
  std::vector<double> ts(count);
  for (std::size_t i = 0; i < count; ++i) {
    ts[i] = offset + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
  }
  return ts;
}

VerificationReport verify_motion(const SymmetricGraph& g, std::span<const Placement> frames,
                                 const MotionTolerances& tolerances) {
  if (frames.size() < 2) throw PreconditionError("motion verification needs at least two frames");
  for (const auto& f : frames) {
    if (f.size() != g.vertex_count()) throw PreconditionError("frame does not place every vertex");
  }
  const auto nv = g.vertex_count();
  VerificationReport r;
  r.min_edge_length = std::numeric_limits<double>::infinity();

  const auto& first = frames.front();
  std::vector<double> rest(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    rest[i] = distance(first[static_cast<std::size_t>(e.u)], first[static_cast<std::size_t>(e.v)]);
    r.max_edge_length = std::max(r.max_edge_length, rest[i]);
  }

  std::vector<double> pair_min(nv * nv, std::numeric_limits<double>::infinity());
  std::vector<double> pair_max(nv * nv, 0.0);
  for (const auto& f : frames) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edge(i);
      const double len = distance(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)]);
      r.max_edge_residual = std::max(r.max_edge_residual, std::abs(len - rest[i]));
      r.min_edge_length = std::min(r.min_edge_length, len);
    }
    for (std::size_t v = 0; v < nv; ++v) {
      const auto w = static_cast<std::size_t>(g.omega(static_cast<Vertex>(v)));
      const double res = distance(f[w], symmetry_rotate(f[v], 1, g.order()));
      r.max_symmetry_residual = std::max(r.max_symmetry_residual, res);
    }
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < nv; ++u) {
      for (std::size_t v = u + 1; v < nv; ++v) {
        const double d = distance(f[u], f[v]);
        closest = std::min(closest, d);
        pair_min[u * nv + v] = std::min(pair_min[u * nv + v], d);
        pair_max[u * nv + v] = std::max(pair_max[u * nv + v], d);
      }
    }
    r.min_pair_distance.push_back(closest);
  }
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
      r.nontriviality_margin = std::max(r.nontriviality_margin, pair_max[u * nv + v] - pair_min[u * nv + v]);
    }
  }
  if (g.edge_count() == 0) r.min_edge_length = 0.0;

  r.edge_lengths_ok = r.max_edge_residual < tolerances.equality;
  r.symmetry_ok = r.max_symmetry_residual < tolerances.equality;
  r.framework_ok = g.edge_count() > 0 && r.min_edge_length > tolerances.equality * r.max_edge_length;
  r.nontrivial_ok = r.nontriviality_margin > tolerances.nontrivial_relative * r.max_edge_length;
  return r;
}

std::size_t count_non_injective(std::span<const Placement> frames, double threshold) {
  std::size_t bad = 0;
  for (const auto& f : frames) {
    bool coincide = false;
    for (std::size_t u = 0; u < f.size() && !coincide; ++u) {
      for (std::size_t v = u + 1; v < f.size(); ++v) {
        if (distance(f[u], f[v]) < threshold) {
          coincide = true;
          break;
        }
      }
    }
    bad += coincide ? 1 : 0;
  }
  return bad;
}

ProperCheck check_proper_conditions(const SymmetricGraph& g, const EdgeColouring& c) {
  require_valid(g);
  require_symmetric_nac(g, c, "proper-placement check");
  const auto red = component_symmetry_flags(g, c, Colour::red);
  const auto blue = component_symmetry_flags(g, c, Colour::blue);
  ProperCheck out;

  auto names = [&](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
    return s;
  };

  // 1. A blue and a red component share at most one vertex.
  std::map<std::pair<int, int>, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    cells[{red.components.component_of[static_cast<std::size_t>(v)],
           blue.components.component_of[static_cast<std::size_t>(v)]}]
        .push_back(v);
  }
  for (const auto& [key, vs] : cells) {
    if (vs.size() < 2) continue;
    out.violations.push_back({1,
                              fmt::format("red and blue components share {} vertices: {}",
                                          vs.size(), names(vs)),
                              vs});
  }

  // 2. Partially invariant components of one colour are not joined by a path
  //    of the other colour.
  for (const auto& [pi, other] : {std::pair{&blue, &red}, std::pair{&red, &blue}}) {
    for (const auto& cls : other->components.classes) {
      std::map<int, Vertex> touched;  // pi component -> a vertex of it inside cls
      for (const Vertex v : cls) {
        if (!pi->partially_invariant(v)) continue;
        touched.emplace(pi->components.component_of[static_cast<std::size_t>(v)], v);
      }
      if (touched.size() < 2) continue;
      const Vertex x = touched.begin()->second;
      const Vertex y = std::next(touched.begin())->second;
      const auto path = monochromatic_path(g, c, other->components.colour, x, y);
      out.violations.push_back(
          {2,
           fmt::format("partially invariant {} components joined by {} path {}",
                       to_string(pi->components.colour), to_string(other->components.colour),
                       names(path)),
           path});
    }
  }

  // 3. At most one vertex lies in a red and a blue partially invariant component.
  std::vector<Vertex> doubly;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (red.partially_invariant(v) && blue.partially_invariant(v)) doubly.push_back(v);
  }
  if (doubly.size() > 1) {
    out.violations.push_back(
        {3,
         fmt::format("{} vertices lie in both a red and a blue partially invariant component: {}",
                     doubly.size(), names(doubly)),
         doubly});
  }
  return out;
}

}  // namespace symflex

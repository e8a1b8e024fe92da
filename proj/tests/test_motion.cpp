#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "symflex/errors.hpp"
#include "symflex/motion.hpp"
#include "symflex/symmetric_nac.hpp"

using namespace symflex;

namespace {

constexpr double pi = std::numbers::pi;

// Direct check of the genericity conditions with explicit angles.
bool generic_by_angles(const BasePoints& bp) {
  auto rot = [&](Vec2 p, int i) {
    const double a = 2.0 * pi * i / bp.n;
    return Vec2{std::cos(a) * p.x - std::sin(a) * p.y, std::sin(a) * p.x + std::cos(a) * p.y};
  };
  for (const auto* s : {&bp.a, &bp.b}) {
    for (std::size_t j = 0; j < s->size(); ++j) {
      if (std::hypot((*s)[j].x, (*s)[j].y) < 1e-9) return false;
      for (std::size_t jj = 0; jj < s->size(); ++jj) {
        if (j == jj) continue;
        for (int i = 0; i < bp.n; ++i) {
          const auto q = rot((*s)[jj], i);
          if (std::hypot((*s)[j].x - q.x, (*s)[j].y - q.y) < 1e-9) return false;
        }
      }
    }
  }
  for (const auto& a : bp.a) {
    for (const auto& b : bp.b) {
      for (int i = 0; i < bp.n; ++i) {
        const auto q = rot(b, i);
        if (std::abs(a.x * q.y - a.y * q.x) < 1e-9) return false;
      }
    }
  }
  return true;
}

EdgeColouring fig4_colouring(const SymmetricGraph& g) {
  return io::colouring_from_json(g, io::read_json_file(oracle::fixture_path("fig4_c4_colouring")));
}

}  // namespace

TEST_CASE("rotations") {
  const auto p = rotate({1.0, 0.0}, pi / 2);
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(1.0));
  const auto q = symmetry_rotate({1.0, 0.0}, 1, 4);
  CHECK(q.x == doctest::Approx(0.0));
  CHECK(q.y == doctest::Approx(1.0));
  const auto r = symmetry_rotate({1.0, 2.0}, 3, 3);
  CHECK(r.x == doctest::Approx(1.0));
  CHECK(r.y == doctest::Approx(2.0));
}

TEST_CASE("base points") {
  SUBCASE("empty") {
    const auto bp = choose_base_points(0, 0, 4);
    CHECK(bp.a.empty());
    CHECK(bp.b.empty());
    CHECK(base_points_generic(bp));
  }
  SUBCASE("m = 1, k = 1, n = 4") {
    const auto bp = choose_base_points(1, 1, 4);
    REQUIRE(bp.a.size() == 1);
    REQUIRE(bp.b.size() == 1);
    CHECK(bp.a[0].norm() == doctest::Approx(1.0));
    CHECK(std::atan2(bp.a[0].y, bp.a[0].x) == doctest::Approx(1.0 / 7.0));
    CHECK(bp.b[0].norm() == doctest::Approx(2.0));
    CHECK(std::atan2(bp.b[0].y, bp.b[0].x) == doctest::Approx(1.0 / 7.0 + 1.0 / 14.0));
    CHECK(generic_by_angles(bp));
  }
  SUBCASE("m = 3, k = 2, n = 3") {
    const auto bp = choose_base_points(3, 2, 3);
    std::vector<double> radii;
    for (const auto& p : bp.a) radii.push_back(p.norm());
    for (const auto& p : bp.b) radii.push_back(p.norm());
    REQUIRE(radii.size() == 5);
    for (std::size_t i = 0; i < radii.size(); ++i)
      for (std::size_t j = i + 1; j < radii.size(); ++j) CHECK(std::abs(radii[i] - radii[j]) > 0.5);
    CHECK(generic_by_angles(bp));
  }
  SUBCASE("collinear points are rejected") {
    BasePoints bp{{{1.0, 0.0}}, {{-2.0, 0.0}}, 2};
    CHECK_FALSE(base_points_generic(bp));
    BasePoints same{{{1.0, 0.0}, {0.0, 1.0}}, {}, 4};
    CHECK_FALSE(base_points_generic(same));
  }
}

TEST_CASE("deterministic and seeded base points are generic for many sizes") {
  for (int n = 2; n <= 8; ++n) {
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t k = 0; k <= 5; ++k) {
        CHECK(generic_by_angles(choose_base_points(m, k, n)));
        const auto a = choose_base_points(m, k, n, 17);
        CHECK(generic_by_angles(a));
        const auto b = choose_base_points(m, k, n, 17);
        CHECK(a.a == b.a);
        CHECK(a.b == b.b);
      }
    }
  }
}

TEST_CASE("fig4_c4 motion") {
  const auto g = oracle::load_fixture("fig4_c4");
  const auto c = fig4_colouring(g);
  const auto motion = construct_motion(g, c);
  CHECK(motion.n == 4);

  SUBCASE("t = 0 is abar + bbar, and the motion is 2pi periodic") {
    const auto p0 = sample_at(motion, 0.0);
    const auto p2pi = sample_at(motion, 2.0 * pi);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(p0[v].x == doctest::Approx(motion.abar[v].x + motion.bbar[v].x));
      CHECK(p0[v].y == doctest::Approx(motion.abar[v].y + motion.bbar[v].y));
      CHECK(p2pi[v].x == doctest::Approx(p0[v].x));
      CHECK(p2pi[v].y == doctest::Approx(p0[v].y));
    }
  }
  SUBCASE("360 frames verify") {
    const auto frames = sample_motion(motion, uniform_parameters(360));
    const auto r = verify_motion(g, frames);
    CHECK(r.passed());
    CHECK(r.max_edge_residual < 1e-9);
    CHECK(r.max_symmetry_residual < 1e-9);
    CHECK(r.nontriviality_margin > 1e-3 * r.max_edge_length);
  }
  SUBCASE("generic frames have 12 distinct positions") {
    const auto p = sample_at(motion, 0.123);
    for (std::size_t u = 0; u < p.size(); ++u)
      for (std::size_t v = u + 1; v < p.size(); ++v) CHECK(distance(p[u], p[v]) > 1e-6);
  }
  SUBCASE("wrong base point sizes are rejected") {
    CHECK_THROWS(construct_motion(g, c, choose_base_points(9, 9, 4)));
  }
}

TEST_CASE("t = pi with n = 2 negates abar") {
  const auto g = oracle::load_fixture("c4_c2");
  const auto cs = enumerate_cn_symmetric_nac(g);
  REQUIRE_FALSE(cs.empty());
  for (const auto& c : cs) {
    const auto m = construct_motion(g, c);
    const auto p = sample_at(m, pi);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(p[v].x == doctest::Approx(-m.abar[v].x + m.bbar[v].x));
      CHECK(p[v].y == doctest::Approx(-m.abar[v].y + m.bbar[v].y));
    }
  }
}

TEST_CASE("invariant vertices stay at the origin") {
  for (const auto* name : {"wheel_c4", "bipyramid_c4", "star_c4"}) {
    CAPTURE(name);
    const auto g = oracle::load_fixture(name);
    for (const auto& c : enumerate_cn_symmetric_nac(g)) {
      const auto m = construct_motion(g, c);
      for (const double t : {0.0, 0.7, 2.0, 4.5}) {
        const auto p = sample_at(m, t);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          if (!g.is_invariant(static_cast<Vertex>(v))) continue;
          CHECK(p[v].x == 0.0);
          CHECK(p[v].y == 0.0);
        }
      }
    }
  }
}

TEST_CASE("m = k = 1 traces circles around bbar") {
  const auto g = oracle::load_fixture("c4_c2");
  for (const auto& c : enumerate_cn_symmetric_nac(g)) {
    if (component_orbit_counts(g, c) != std::pair<std::size_t, std::size_t>{1, 1}) continue;
    const auto m = construct_motion(g, c);
    for (const double t : {0.0, 1.0, 2.5}) {
      const auto p = sample_at(m, t);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        CHECK(distance(p[v], m.bbar[v]) == doctest::Approx(m.abar[v].norm()));
      }
    }
  }
}

TEST_CASE("construct_motion rejects colourings that are not Cn-symmetric NAC") {
  const auto g = oracle::load_fixture("c4_cycle");
  const auto c = oracle::red_edges(g, {{"1", "2"}});
  CHECK_THROWS_AS(construct_motion(g, c), PreconditionError);
  try {
    construct_motion(g, c);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("orbit") != std::string::npos);
  }
}

TEST_CASE("rigid rotations of one placement have zero margin") {
  const auto g = oracle::load_fixture("fig4_c4");
  const auto base = sample_at(construct_motion(g, fig4_colouring(g)), 0.4);
  std::vector<Placement> frames;
  for (int k = 0; k < 8; ++k) {
    Placement f;
    for (const auto& p : base) f.push_back(rotate(p, 0.3 * k));
    frames.push_back(f);
  }
  const auto r = verify_motion(g, frames);
  CHECK(r.nontriviality_margin < 1e-12);
  CHECK_FALSE(r.nontrivial_ok);
  CHECK(r.edge_lengths_ok);
  CHECK(r.symmetry_ok);
}

TEST_CASE("verification detects broken frames") {
  const auto g = oracle::load_fixture("fig4_c4");
  auto frames = sample_motion(construct_motion(g, fig4_colouring(g)), uniform_parameters(10));
  frames[3][0].x += 1e-3;
  const auto r = verify_motion(g, frames);
  CHECK_FALSE(r.edge_lengths_ok);
  CHECK_FALSE(r.symmetry_ok);
  CHECK_THROWS_AS(verify_motion(g, std::vector<Placement>{frames[0]}), PreconditionError);
}

TEST_CASE("count_non_injective") {
  std::vector<Placement> frames = {{{0, 0}, {1, 0}}, {{0, 0}, {0, 0}}, {{2, 2}, {2, 2.5}}};
  CHECK(count_non_injective(frames, 1e-9) == 1);
  CHECK(count_non_injective(frames, 0.6) == 2);
}

TEST_CASE("uniform parameters") {
  const auto ts = uniform_parameters(4, 0.5);
  REQUIRE(ts.size() == 4);
  CHECK(ts[0] == doctest::Approx(0.5));
  CHECK(ts[1] == doctest::Approx(0.5 + pi / 2));
}

TEST_CASE("proper conditions") {
  SUBCASE("condition 1 fails exactly when two vertices share a red and a blue component") {
    for (const auto& name : oracle::fixture_names()) {
      CAPTURE(name);
      const auto g = oracle::load_fixture(name);
      for (const auto& c : enumerate_cn_symmetric_nac(g)) {
        const auto red = monochromatic_components(g, c, Colour::red);
        const auto blue = monochromatic_components(g, c, Colour::blue);
        bool shared = false;
        for (Vertex u = 0; u < static_cast<Vertex>(g.vertex_count()); ++u)
          for (Vertex v = u + 1; v < static_cast<Vertex>(g.vertex_count()); ++v)
            shared = shared || (red.same(u, v) && blue.same(u, v));
        const auto check = check_proper_conditions(g, c);
        const bool cond1 = std::any_of(check.violations.begin(), check.violations.end(),
                                       [](const auto& x) { return x.condition == 1; });
        CHECK(cond1 == shared);
      }
    }
  }
  SUBCASE("rejects non-symmetric colourings") {
    const auto g = oracle::load_fixture("c4_cycle");
    CHECK_THROWS_AS(check_proper_conditions(g, oracle::red_edges(g, {{"1", "2"}})), PreconditionError);
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "symflex/errors.hpp"
#include "symflex/graph.hpp"

using namespace symflex;

TEST_CASE("graph construction sorts names and edges") {
  Graph g({"c", "a", "b"}, {{"c", "a"}, {"b", "a"}});
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(*g.edge_index(1, 0) == 0);
  CHECK(g.neighbours(0).size() == 2);
  CHECK(g.edge_label(g.edge(1)) == "a-c");
}

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph({"a", "a"}, std::vector<std::pair<std::string, std::string>>{}), StructuralError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "x"}}), StructuralError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "a"}}), StructuralError);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), StructuralError);
}

TEST_CASE("symmetric graph construction rejects bad omega and n") {
  CHECK_THROWS_AS(SymmetricGraph(1, {"a"}, {}, {}), StructuralError);
  CHECK_THROWS_AS(SymmetricGraph(2, {"a", "b"}, {}, {{"a", "b"}, {"b", "b"}}), StructuralError);
  CHECK_THROWS_AS(SymmetricGraph(2, {"a", "b"}, {}, {{"a", "z"}}), StructuralError);
}

TEST_CASE("omitted vertices are fixed by omega") {
  SymmetricGraph g(2, {"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, {{"a", "b"}, {"b", "a"}});
  CHECK(g.is_invariant(*g.find_vertex("c")));
  CHECK(validate_symmetric_graph(g).valid());
}

TEST_CASE("act reduces exponents modulo n") {
  const auto g = oracle::load_fixture("c4_cycle");
  CHECK(g.act(0, 1) == 1);
  CHECK(g.act(0, 4) == 0);
  CHECK(g.act(0, -1) == 3);
  CHECK(g.act(0, 9) == 1);
}

TEST_CASE("every shipped fixture is a valid symmetric graph") {
  for (const auto& name : oracle::fixture_names()) {
    CAPTURE(name);
    const auto g = oracle::load_fixture(name);
    CHECK(validate_symmetric_graph(g).valid());
    CHECK(permutation_order(g.omega()) == g.order());
  }
}

TEST_CASE("validation reports every violation") {
  SUBCASE("adjacent invariant vertices") {
    const auto g = io::graph_from_json(io::read_json_file(oracle::fixture_path("invalid/adjacent_invariant")));
    const auto r = validate_symmetric_graph(g);
    REQUIRE_FALSE(r.valid());
    const bool named = std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
      return v.kind == ViolationKind::adjacent_invariant_vertices && v.edge.has_value();
    });
    CHECK(named);
    CHECK_THROWS_AS(require_valid(g), PreconditionError);
  }
  SUBCASE("wrong order") {
    SymmetricGraph g(4, {"a", "b"}, {{"a", "b"}}, {{"a", "b"}, {"b", "a"}});
    const auto r = validate_symmetric_graph(g);
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front().kind == ViolationKind::wrong_order);
  }
  SUBCASE("not an automorphism") {
    SymmetricGraph g(2, {"a", "b", "c", "d"}, {{"a", "c"}}, {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}});
    const auto r = validate_symmetric_graph(g);
    REQUIRE_FALSE(r.valid());
    CHECK(r.violations.front().kind == ViolationKind::not_automorphism);
  }
  SUBCASE("partially invariant vertex") {
    // omega = (a b)(c d e f): order 4, and omega^2 fixes a and b.
    SymmetricGraph g(4, {"a", "b", "c", "d", "e", "f"}, {},
                     {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "c"}});
    const auto r = validate_symmetric_graph(g);
    REQUIRE_FALSE(r.valid());
    const auto count = std::count_if(r.violations.begin(), r.violations.end(), [](const Violation& v) {
      return v.kind == ViolationKind::partially_invariant_vertex;
    });
    CHECK(count == 2);
  }
}

TEST_CASE("permutation order is the lcm of cycle lengths") {
  CHECK(permutation_order(std::vector<Vertex>{0, 1, 2}) == 1);
  CHECK(permutation_order(std::vector<Vertex>{1, 0, 3, 4, 2}) == 6);
}

TEST_CASE("orbit partitions of the fig4_c4 graph") {
  const auto g = oracle::load_fixture("fig4_c4");
  const auto vo = vertex_orbits(g);
  CHECK(vo.size() == 3);
  for (const auto& c : vo.classes) CHECK(c.size() == 4);
  const auto eo = edge_orbits(g);
  CHECK(eo.size() == 6);
  for (const auto& c : eo.classes) CHECK(c.size() == 4);
}

TEST_CASE("orbit partitions of the smaller fixtures") {
  CHECK(edge_orbits(oracle::load_fixture("c6_cycle")).size() == 1);
  CHECK(edge_orbits(oracle::load_fixture("hexagon_triangles_c6")).size() == 2);
  CHECK(vertex_orbits(oracle::load_fixture("star_c4")).size() == 2);
}

TEST_CASE("orbit partition properties on every fixture") {
  for (const auto& name : oracle::fixture_names()) {
    CAPTURE(name);
    const auto g = oracle::load_fixture(name);
    for (const auto& part : {vertex_orbits(g), edge_orbits(g)}) {
      std::set<int> seen;
      int previous_rep = -1;
      for (std::size_t c = 0; c < part.size(); ++c) {
        const auto& cls = part.classes[c];
        CHECK(part.representative(c) == *std::min_element(cls.begin(), cls.end()));
        CHECK(part.representative(c) > previous_rep);
        previous_rep = part.representative(c);
        for (const int x : cls) {
          CHECK(seen.insert(x).second);
          CHECK(part.class_of[static_cast<std::size_t>(x)] == static_cast<int>(c));
        }
      }
    }
    // Edge orbits are closed under omega.
    const auto eo = edge_orbits(g);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto j = *g.edge_index(g.act(g.edge(i), 1).u, g.act(g.edge(i), 1).v);
      CHECK(eo.class_of[i] == eo.class_of[j]);
    }
  }
}

TEST_CASE("pair orbits are closed under omega") {
  const auto g = oracle::load_fixture("c6_cycle");
  const std::vector<Edge> pairs = {Edge{0, 2}, Edge{1, 3}, Edge{0, 3}};
  const auto orbits = pair_orbits(g, pairs);
  REQUIRE(orbits.size() == 2);
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.size();
  CHECK(total == 6 + 3);
}

TEST_CASE("with_added_edges keeps the action") {
  const auto g = oracle::load_fixture("c4_cycle");
  const std::vector<Edge> diag = {Edge{0, 2}, Edge{1, 3}};
  const auto h = g.with_added_edges(diag);
  CHECK(h.edge_count() == 6);
  CHECK(h.is_complete());
  CHECK(h.omega(0) == g.omega(0));
  CHECK(validate_symmetric_graph(h).valid());
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracle.hpp"
#include "symflex/errors.hpp"
#include "symflex/io.hpp"
#include "symflex/svg.hpp"

using namespace symflex;
namespace fs = std::filesystem;

TEST_CASE("round12") {
  CHECK(io::round12(0.1 + 0.2) == 0.3);
  CHECK(io::round12(1.0 / 3.0) == 0.333333333333);
  CHECK_FALSE(std::signbit(io::round12(-0.0)));
  CHECK_FALSE(std::signbit(io::round12(-1e-300 * 1e-300)));
  CHECK(io::round12(123456789012345.0) == 123456789012000.0);
}

TEST_CASE("graph round trip on every fixture") {
  for (const auto& name : oracle::fixture_names()) {
    CAPTURE(name);
    const auto j = io::read_json_file(oracle::fixture_path(name));
    const auto g = io::graph_from_json(j);
    const auto again = io::graph_from_json(io::to_json(g));
    CHECK(io::dump(io::to_json(again)) == io::dump(io::to_json(g)));
    CHECK(std::vector<std::string>(again.names().begin(), again.names().end()) ==
          std::vector<std::string>(g.names().begin(), g.names().end()));
    CHECK(std::vector<Edge>(again.edges().begin(), again.edges().end()) ==
          std::vector<Edge>(g.edges().begin(), g.edges().end()));
    CHECK(std::vector<Vertex>(again.omega().begin(), again.omega().end()) ==
          std::vector<Vertex>(g.omega().begin(), g.omega().end()));
    CHECK(again.order() == g.order());
  }
}

TEST_CASE("graph parsing errors") {
  CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"vertices": ["a"], "edges": []})")), ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::json::parse(R"({"n": 2, "vertices": ["a"], "edges": [["a"]]})")),
                  ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::read_json_file(oracle::fixture_path("invalid/unknown_endpoint"))),
                  StructuralError);
  CHECK_THROWS_AS(io::read_json_file(oracle::fixture_path("no_such_fixture")), IoError);
}

TEST_CASE("colouring round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(rng, 6, 12);
    const auto c = oracle::from_mask(g.edge_count(), rng() & ((std::uint64_t{1} << g.edge_count()) - 1));
    CHECK(io::colouring_from_json(g, io::to_json(g, c)) == c);
  }
}

TEST_CASE("colourings must cover the edge set exactly") {
  const auto g = oracle::load_fixture("c4_cycle");
  CHECK_THROWS_AS(io::colouring_from_json(g, io::json::parse(R"({"red": [["1","2"]], "blue": [["2","3"]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      io::colouring_from_json(
          g, io::json::parse(R"({"red": [["1","2"],["2","1"]], "blue": [["2","3"],["3","4"],["1","4"]]})")),
      ParseError);
  CHECK_THROWS_AS(
      io::colouring_from_json(
          g, io::json::parse(R"({"red": [["1","3"]], "blue": [["1","2"],["2","3"],["3","4"],["1","4"]]})")),
      ParseError);
}

TEST_CASE("motion round trip and determinism") {
  const auto g = oracle::load_fixture("fig4_c4");
  const auto c = io::colouring_from_json(g, io::read_json_file(oracle::fixture_path("fig4_c4_colouring")));
  const auto ts = uniform_parameters(12);
  const io::MotionSamples m{4, ts, sample_motion(construct_motion(g, c), ts)};
  const auto text = io::dump(io::to_json(g, m));
  const auto parsed = io::motion_from_json(g, io::json::parse(text));
  CHECK(io::dump(io::to_json(g, parsed)) == text);
  // Parsed values are already rounded, so a second trip is exact.
  const auto twice = io::motion_from_json(g, io::to_json(g, parsed));
  CHECK(twice.t == parsed.t);
  CHECK(twice.frames == parsed.frames);
  CHECK(twice.n == 4);

  const io::MotionSamples m2{4, ts, sample_motion(construct_motion(g, c), ts)};
  CHECK(io::dump(io::to_json(g, m2)) == text);
}

TEST_CASE("closure report round trip") {
  for (const auto* name : {"c6_cycle", "fig4_c4", "k3_c3", "bipyramid_c4", "k44_squares_c4"}) {
    CAPTURE(name);
    const auto g = oracle::load_fixture(name);
    const auto v = proper_flex_verdict(g);
    const auto report = io::make_closure_report(v);
    const auto j = io::to_json(v.closure.closure_graph, report);
    CHECK(io::closure_report_from_json(v.closure.closure_graph, j) == report);
    CHECK(j["verdict"] == std::string(to_string(v.verdict)));
  }
}

TEST_CASE("symmetric check report names the failed clause") {
  const auto g = oracle::load_fixture("hexagon_triangles_c6");
  const auto c = oracle::red_edges(g, {{"1", "3"}, {"3", "5"}, {"1", "5"}});
  const auto j = io::to_json(g, is_cn_symmetric_nac(g, c));
  CHECK(j["ok"] == false);
  CHECK(j["reason"] == "not_orbit_constant");
}

TEST_CASE("atomic write replaces the file") {
  const auto dir = fs::temp_directory_path() / "symflex_io_test";
  fs::create_directories(dir);
  const auto path = dir / "out.json";
  io::write_file_atomic(path, "first\n");
  io::write_file_atomic(path, "second\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  CHECK_FALSE(fs::exists(dir / "out.json.tmp"));
  fs::remove_all(dir);
}

TEST_CASE("svg frames are deterministic and share a viewBox") {
  const auto g = oracle::load_fixture("fig4_c4");
  const auto c = io::colouring_from_json(g, io::read_json_file(oracle::fixture_path("fig4_c4_colouring")));
  const auto frames = sample_motion(construct_motion(g, c), uniform_parameters(5));
  const auto a = render_svg_frames(g, frames, c);
  const auto b = render_svg_frames(g, frames, c);
  REQUIRE(a.size() == 5);
  CHECK(a == b);
  auto view = [](const std::string& s) { return s.substr(s.find("viewBox"), s.find("width") - s.find("viewBox")); };
  for (const auto& s : a) CHECK(view(s) == view(a[0]));
  CHECK(a[0].find("#d62728") != std::string::npos);
  CHECK(a[0].find("#1f77b4") != std::string::npos);
}

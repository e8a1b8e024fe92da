// symflex: command-line front end for symmetric NAC-colourings, motions and
// the constant distance closure.
//
// Exit codes: 0 success / property holds, 1 I/O or parse error, 2 the checked
// property fails or an operation rejected its input, 3 search bound exceeded.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "symflex/closure.hpp"
#include "symflex/errors.hpp"
#include "symflex/io.hpp"
#include "symflex/motion.hpp"
#include "symflex/nac.hpp"
#include "symflex/search.hpp"
#include "symflex/svg.hpp"
#include "symflex/symmetric_nac.hpp"

namespace fs = std::filesystem;
using namespace symflex;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kFailed = 2;
constexpr int kBoundExceeded = 3;

struct Workspace {
  std::string graph;
  std::string colouring;
  std::string frames;
  std::string out;
  double tolerance = 1e-9;
  std::size_t max_edges = 30;
  std::size_t max_orbits = 30;
  std::size_t frame_count = 360;
  std::optional<std::uint64_t> seed;
  std::vector<double> ts;
  bool up_to_conjugation = false;
  bool count_only = false;
  unsigned threads = 1;

  void require_inputs(std::initializer_list<const std::string*> paths) const {
    for (const auto* p : paths) {
      if (!p->empty() && !fs::exists(*p)) throw IoError(fmt::format("no such file '{}'", *p));
    }
    if (!out.empty()) {
      const auto parent = fs::absolute(out).parent_path();
      if (!fs::is_directory(parent)) throw IoError(fmt::format("output directory '{}' does not exist", parent.string()));
    }
  }

  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
    } else {
      io::write_file_atomic(out, text);
    }
  }
};

SymmetricGraph load_graph(const std::string& path) { return io::graph_from_json(io::read_json_file(path)); }

EdgeColouring load_colouring(const Graph& g, const std::string& path) {
  return io::colouring_from_json(g, io::read_json_file(path));
}

int emit_list(const Workspace& ws, const Graph& g, const std::vector<EdgeColouring>& cs) {
  if (ws.count_only) {
    ws.emit(std::to_string(cs.size()) + "\n");
  } else {
    json j;
    j["count"] = cs.size();
    j["colourings"] = io::to_json(g, cs);
    ws.emit(io::dump(j));
  }
  return kOk;
}

int cmd_validate(const Workspace& ws) {
  ws.require_inputs({&ws.graph});
  const auto g = load_graph(ws.graph);
  const auto report = validate_symmetric_graph(g);
  ws.emit(io::dump(io::to_json(g, report)));
  return report.valid() ? kOk : kFailed;
}

int cmd_nac_list(const Workspace& ws) {
  ws.require_inputs({&ws.graph});
  const auto g = load_graph(ws.graph);
  return emit_list(ws, g, enumerate_nac(g, {ws.up_to_conjugation, ws.max_edges, ws.threads}));
}

int cmd_nac_check(const Workspace& ws) {
  ws.require_inputs({&ws.graph, &ws.colouring});
  const auto g = load_graph(ws.graph);
  const auto c = load_colouring(g, ws.colouring);
  const auto check = is_nac(g, c);
  ws.emit(io::dump(io::to_json(g, check)));
  return check ? kOk : kFailed;
}

int cmd_symnac_list(const Workspace& ws) {
  ws.require_inputs({&ws.graph});
  const auto g = load_graph(ws.graph);
  return emit_list(ws, g, enumerate_cn_symmetric_nac(g, {ws.up_to_conjugation, ws.max_orbits, ws.threads}));
}

int cmd_symnac_check(const Workspace& ws) {
  ws.require_inputs({&ws.graph, &ws.colouring});
  const auto g = load_graph(ws.graph);
  require_valid(g);
  const auto c = load_colouring(g, ws.colouring);
  const auto check = is_cn_symmetric_nac(g, c);
  ws.emit(io::dump(io::to_json(g, check)));
  return check ? kOk : kFailed;
}

int emit_motion(const Workspace& ws, const std::vector<double>& ts) {
  ws.require_inputs({&ws.graph, &ws.colouring});
  const auto g = load_graph(ws.graph);
  const auto c = load_colouring(g, ws.colouring);
  std::optional<BasePoints> base;
  if (ws.seed) {
    const auto [m, k] = component_orbit_counts(g, c);
    base = choose_base_points(m, k, g.order(), ws.seed);
  }
  const auto motion = construct_motion(g, c, base);
  io::MotionSamples samples{g.order(), ts, sample_motion(motion, ts)};
  ws.emit(io::dump(io::to_json(g, samples)));
  return kOk;
}

int cmd_motion_verify(const Workspace& ws) {
  ws.require_inputs({&ws.graph, &ws.frames});
  const auto g = load_graph(ws.graph);
  require_valid(g);
  const auto samples = io::motion_from_json(g, io::read_json_file(ws.frames));
  if (samples.n != g.order()) {
    throw PreconditionError(fmt::format("motion has n = {} but the graph has n = {}", samples.n, g.order()));
  }
  const MotionTolerances tol{ws.tolerance, 1e-6};
  const auto report = verify_motion(g, samples.frames, tol);
  ws.emit(io::dump(io::to_json(report, tol)));
  return report.passed() ? kOk : kFailed;
}

int cmd_closure(const Workspace& ws) {
  ws.require_inputs({&ws.graph});
  const auto g = load_graph(ws.graph);
  const auto verdict = proper_flex_verdict(g, {ws.max_orbits, ws.threads});
  ws.emit(io::dump(io::to_json(verdict.closure.closure_graph, io::make_closure_report(verdict))));
  return kOk;
}

int cmd_proper(const Workspace& ws) {
  ws.require_inputs({&ws.graph, &ws.colouring});
  const auto g = load_graph(ws.graph);
  if (!ws.colouring.empty()) {
    const auto c = load_colouring(g, ws.colouring);
    const auto check = check_proper_conditions(g, c);
    ws.emit(io::dump(io::to_json(g, check)));
    return check.ok() ? kOk : kFailed;
  }
  const auto verdict = proper_flex_verdict(g, {ws.max_orbits, ws.threads});
  json j;
  j["verdict"] = std::string(to_string(verdict.verdict));
  if (verdict.certificate) {
    const auto& h = verdict.certificate_on_closure ? verdict.closure.closure_graph : g;
    j["certificate"] = io::to_json(h, *verdict.certificate);
    j["certificate_graph"] = verdict.certificate_on_closure ? "closure" : "input";
  } else {
    j["certificate"] = nullptr;
  }
  ws.emit(io::dump(j));
  return kOk;
}

int cmd_render(const Workspace& ws) {
  ws.require_inputs({&ws.graph, &ws.frames, &ws.colouring});
  if (ws.out.empty()) throw IoError("render needs --out DIR");
  const auto g = load_graph(ws.graph);
  const auto samples = io::motion_from_json(g, io::read_json_file(ws.frames));
  std::optional<EdgeColouring> c;
  if (!ws.colouring.empty()) c = load_colouring(g, ws.colouring);
  const auto svgs = render_svg_frames(g, samples.frames, c);
  fs::create_directories(ws.out);
  for (std::size_t i = 0; i < svgs.size(); ++i) {
    io::write_file_atomic(fs::path(ws.out) / fmt::format("frame_{:04d}.svg", i), svgs[i]);
  }
  std::cout << svgs.size() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rotationally symmetric flexible placements via NAC-colourings"};
  app.require_subcommand(1);
  Workspace ws;
  ws.threads = detail::default_thread_count();

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", ws.out, "Write output to this file"); };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", ws.graph, "Graph JSON")->required(); };

  int (*action)(const Workspace&) = nullptr;

  auto* validate = app.add_subcommand("validate", "Check the symmetry invariants of a graph");
  add_graph(validate);
  add_out(validate);
  validate->callback([&] { action = cmd_validate; });

  for (const bool symmetric : {false, true}) {
    auto* group = app.add_subcommand(symmetric ? "symnac" : "nac",
                                     symmetric ? "Cn-symmetric NAC-colourings" : "NAC-colourings");
    group->require_subcommand(1);
    auto* list = group->add_subcommand("list", "Enumerate colourings");
    add_graph(list);
    add_out(list);
    list->add_flag("--up-to-conjugation", ws.up_to_conjugation, "One colouring per conjugate pair");
    list->add_flag("--count-only", ws.count_only, "Print only the number of colourings");
    if (symmetric) {
      list->add_option("--max-orbits", ws.max_orbits, "Largest number of edge orbits searched");
    } else {
      list->add_option("--max-edges", ws.max_edges, "Largest number of edges searched");
    }
    list->callback([&, symmetric] { action = symmetric ? cmd_symnac_list : cmd_nac_list; });

    auto* check = group->add_subcommand("check", "Check one colouring");
    add_graph(check);
    check->add_option("colouring", ws.colouring, "Colouring JSON")->required();
    add_out(check);
    check->callback([&, symmetric] { action = symmetric ? cmd_symnac_check : cmd_nac_check; });
  }

  auto* motion = app.add_subcommand("motion", "Construct, sample and verify symmetric flexes");
  motion->require_subcommand(1);
  auto* build = motion->add_subcommand("build", "Build a flex and sample uniform frames");
  add_graph(build);
  build->add_option("colouring", ws.colouring, "Cn-symmetric NAC-colouring JSON")->required();
  build->add_option("--frames", ws.frame_count, "Number of frames on [0, 2pi)")->check(CLI::PositiveNumber);
  build->add_option("--seed", ws.seed, "Draw base points from this seed");
  add_out(build);
  build->callback([&] { action = [](const Workspace& w) { return emit_motion(w, uniform_parameters(w.frame_count)); }; });

  auto* sample = motion->add_subcommand("sample", "Build a flex and sample it at given parameters");
  add_graph(sample);
  sample->add_option("colouring", ws.colouring, "Cn-symmetric NAC-colouring JSON")->required();
  sample->add_option("--t", ws.ts, "Parameter values (radians)")->required();
  sample->add_option("--seed", ws.seed, "Draw base points from this seed");
  add_out(sample);
  sample->callback([&] { action = [](const Workspace& w) { return emit_motion(w, w.ts); }; });

  auto* verify = motion->add_subcommand("verify", "Check edge lengths, symmetry and non-triviality of frames");
  verify->add_option("frames", ws.frames, "Motion JSON")->required();
  verify->add_option("--graph", ws.graph, "Graph JSON")->required();
  verify->add_option("--tolerance", ws.tolerance, "Residual tolerance");
  add_out(verify);
  verify->callback([&] { action = cmd_motion_verify; });

  auto* closure = app.add_subcommand("closure", "Cn-symmetric constant distance closure");
  add_graph(closure);
  closure->add_option("--max-orbits", ws.max_orbits, "Largest number of edge orbits searched");
  add_out(closure);
  closure->callback([&] { action = cmd_closure; });

  auto* proper = app.add_subcommand("proper", "Proper-placement conditions (with a colouring) or verdict (without)");
  add_graph(proper);
  proper->add_option("colouring", ws.colouring, "Cn-symmetric NAC-colouring JSON");
  proper->add_option("--max-orbits", ws.max_orbits, "Largest number of edge orbits searched");
  add_out(proper);
  proper->callback([&] { action = cmd_proper; });

  auto* render = app.add_subcommand("render", "Write one SVG per motion frame");
  render->add_option("frames", ws.frames, "Motion JSON")->required();
  render->add_option("--graph", ws.graph, "Graph JSON")->required();
  render->add_option("--colouring", ws.colouring, "Colouring JSON for edge colours");
  render->add_option("--out", ws.out, "Output directory")->required();
  render->callback([&] { action = cmd_render; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return action(ws);
  } catch (const SearchBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const StructuralError& e) {
    std::cerr << "error: malformed graph: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}

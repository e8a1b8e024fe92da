#include "symflex/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace symflex::detail {

namespace {

/// Union-find without path compression so that merges can be undone in LIFO order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t cp) {
    while (history_.size() > cp) {
      const int b = history_.back();
      history_.pop_back();
      const int a = parent_[static_cast<std::size_t>(b)];
      size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
      parent_[static_cast<std::size_t>(b)] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

constexpr int kUnassigned = -1;

class GroupSearch {
 public:
  GroupSearch(const Graph& g, const std::vector<std::vector<std::size_t>>& groups,
              const std::function<bool(const EdgeColouring&)>& accept)
      : g_(g),
        groups_(groups),
        accept_(accept),
        uf_{RollbackUnionFind(g.vertex_count()), RollbackUnionFind(g.vertex_count())},
        assigned_(g.edge_count(), kUnassigned) {}

  /// Assigns the first groups according to the bits of `prefix` (bit i is
  /// group i, 1 = red). Returns false if that prefix already holds an almost-cycle.
  bool replay(unsigned long long prefix, std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      const auto colour = (prefix >> i) & 1ULL ? Colour::red : Colour::blue;
      if (!assign(i, colour)) return false;
    }
    return true;
  }

  void run(std::size_t depth, std::vector<EdgeColouring>& out) {
    if (depth == groups_.size()) {
      if (stack_[0].empty() || stack_[1].empty()) return;
      std::vector<Colour> colours(assigned_.size());
      for (std::size_t e = 0; e < assigned_.size(); ++e) colours[e] = static_cast<Colour>(assigned_[e]);
      EdgeColouring c(std::move(colours));
      if (accept_(c)) out.push_back(std::move(c));
      return;
    }
    for (const auto colour : {Colour::red, Colour::blue}) {
      if (depth == 0 && colour == Colour::blue) break;  // conjugates are added afterwards
      const auto saved = save();
      if (assign(depth, colour)) run(depth + 1, out);
      restore(saved);
    }
  }

 private:
  struct Saved {
    std::size_t uf[2];
    std::size_t stack[2];
  };

  Saved save() const {
    return {{uf_[0].checkpoint(), uf_[1].checkpoint()}, {stack_[0].size(), stack_[1].size()}};
  }

  void restore(const Saved& s) {
    for (int c = 0; c < 2; ++c) {
      uf_[c].rollback(s.uf[c]);
      while (stack_[c].size() > s.stack[c]) {
        assigned_[stack_[c].back()] = kUnassigned;
        stack_[c].pop_back();
      }
    }
  }

  // Assign colour to a whole group; false if an almost-cycle appears among
  // the assigned edges. State is left partially modified on failure.
  bool assign(std::size_t group, Colour colour) {
    const int c = static_cast<int>(colour);
    const int o = 1 - c;
    for (const auto e : groups_[group]) {
      const auto& edge = g_.edge(e);
      if (uf_[o].find(edge.u) == uf_[o].find(edge.v)) return false;
    }
    bool merged = false;
    for (const auto e : groups_[group]) {
      const auto& edge = g_.edge(e);
      merged |= uf_[c].unite(edge.u, edge.v);
      assigned_[e] = c;
      stack_[c].push_back(e);
    }
    if (merged) {
      for (const auto e : stack_[o]) {
        const auto& edge = g_.edge(e);
        if (uf_[c].find(edge.u) == uf_[c].find(edge.v)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const std::vector<std::vector<std::size_t>>& groups_;
  const std::function<bool(const EdgeColouring&)>& accept_;
  RollbackUnionFind uf_[2];
  std::vector<int> assigned_;
  std::vector<std::size_t> stack_[2];
};

}  // namespace

std::vector<std::size_t> spanning_tree_first_order(const Graph& g) {
  const auto nv = g.vertex_count();
  std::vector<Vertex> parent(nv, -1);
  std::vector<int> rank(nv, -1);
  std::vector<Vertex> order;
  order.reserve(nv);
  for (Vertex s = 0; s < static_cast<Vertex>(nv); ++s) {
    if (rank[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<Vertex> queue{s};
    rank[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
    order.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Vertex y : g.neighbours(x)) {
        if (rank[static_cast<std::size_t>(y)] >= 0) continue;
        rank[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        parent[static_cast<std::size_t>(y)] = x;
        order.push_back(y);
        queue.push_back(y);
      }
    }
  }

  std::vector<std::size_t> edges;
  edges.reserve(g.edge_count());
  for (const Vertex w : order) {
    const Vertex p = parent[static_cast<std::size_t>(w)];
    if (p >= 0) edges.push_back(*g.edge_index(p, w));
    std::vector<Vertex> back;
    for (const Vertex y : g.neighbours(w)) {
      if (y != p && rank[static_cast<std::size_t>(y)] < rank[static_cast<std::size_t>(w)]) back.push_back(y);
    }
    std::sort(back.begin(), back.end(), [&](Vertex a, Vertex b) {
      return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
    });
    for (const Vertex y : back) edges.push_back(*g.edge_index(y, w));
  }
  return edges;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("SYMFLEX_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<EdgeColouring> search_group_colourings(
    const Graph& g, const std::vector<std::vector<std::size_t>>& groups,
    const std::function<bool(const EdgeColouring&)>& accept, const GroupSearchOptions& options) {
  if (groups.empty()) return {};

  // Decide groups in the order their earliest edge appears in the tree-first order.
  std::vector<std::size_t> position(g.edge_count(), 0);
  const auto order = spanning_tree_first_order(g);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<std::vector<std::size_t>> ordered(groups);
  auto first_position = [&](const std::vector<std::size_t>& grp) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto e : grp) best = std::min(best, position[e]);
    return best;
  };
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    return first_position(a) < first_position(b);
  });

  std::vector<EdgeColouring> found;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || ordered.size() < 8) {
    GroupSearch search(g, ordered, accept);
    search.run(0, found);
  } else {
    // Split on a prefix of decisions; group 0 is always red.
    std::size_t depth = 1;
    while (depth < ordered.size() - 1 && (1ULL << (depth - 1)) < 8ULL * threads && depth < 16) ++depth;
    const unsigned long long prefixes = 1ULL << (depth - 1);
    std::atomic<unsigned long long> next{0};
    std::mutex merge;
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        std::vector<EdgeColouring> local;
        for (auto p = next++; p < prefixes; p = next++) {
          GroupSearch search(g, ordered, accept);
          if (search.replay((p << 1) | 1ULL, depth)) search.run(depth, local);
        }
        const std::lock_guard lock(merge);
        for (auto& c : local) found.push_back(std::move(c));
      });
    }
    for (auto& w : workers) w.join();
  }

  std::vector<EdgeColouring> out;
  out.reserve(options.up_to_conjugation ? found.size() : 2 * found.size());
  for (auto& c : found) {
    if (options.up_to_conjugation) {
      out.push_back(c[0] == Colour::red ? std::move(c) : conjugate(c));
    } else {
      out.push_back(conjugate(c));
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace symflex::detail

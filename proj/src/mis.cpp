#include "fraclat/mis.hpp"

#include <algorithm>
#include <chrono>

#include <nlohmann/json.hpp>

namespace fraclat {

namespace {

using Clock = std::chrono::steady_clock;

// Flat bitset over graph vertices.
struct VertexSet {
  std::vector<uint64_t> w;

  explicit VertexSet(int words = 0) : w(static_cast<size_t>(words), 0) {}

  bool test(int v) const { return (w[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1; }
  void set(int v) { w[static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63); }
  void reset(int v) { w[static_cast<size_t>(v) >> 6] &= ~(uint64_t(1) << (v & 63)); }
  bool empty() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  void and_with(const std::vector<uint64_t>& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o[i];
  }
  void and_not(const std::vector<uint64_t>& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o[i];
  }
  int first() const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i]) return int(i * 64 + static_cast<size_t>(__builtin_ctzll(w[i])));
    return -1;
  }
};

// Maximum independent set = maximum clique in the complement; the greedy
// clique cover of the residual graph (greedy coloring in the complement)
// bounds alpha from above.
class Solver {
 public:
  Solver(const ExplicitGraph& g, const MisBudget& budget)
      : g_(g), n_(g.order()), words_(g.words()), budget_(budget),
        start_(Clock::now()) {
    // Complement adjacency rows (no self-bit).
    comp_.resize(static_cast<size_t>(n_), std::vector<uint64_t>(static_cast<size_t>(words_), 0));
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < n_; ++u)
        if (u != v && !g.has_edge(u, v))
          comp_[static_cast<size_t>(v)][static_cast<size_t>(u) >> 6] |= uint64_t(1) << (u & 63);
    }
  }

  MisResult run() {
    greedy_incumbent();

    VertexSet all(words_);
    for (int v = 0; v < n_; ++v) all.set(v);
    std::vector<int> current;
    expand(all, current);

    MisResult res;
    res.size = int(best_.size());
    res.witness = best_;
    std::sort(res.witness.begin(), res.witness.end());
    res.optimal = !stopped_;
    res.nodes_explored = nodes_;
    res.budget_hit = stopped_;

    // Witness re-check against the original adjacency structure.
    for (size_t i = 0; i < res.witness.size(); ++i)
      for (size_t j = i + 1; j < res.witness.size(); ++j)
        if (g_.has_edge(res.witness[i], res.witness[j]))
          throw std::logic_error("mis: witness failed independence re-check");
    return res;
  }

 private:
  void greedy_incumbent() {
    // Repeatedly take a minimum-degree vertex of the residual graph.
    VertexSet left((words_));
    for (int v = 0; v < n_; ++v) left.set(v);
    std::vector<int> sol;
    while (!left.empty()) {
      int pick = -1, pick_deg = n_ + 1;
      for (int v = 0; v < n_; ++v) {
        if (!left.test(v)) continue;
        VertexSet nb = left;
        nb.and_with(g_.row(v));
        int deg = nb.count();
        if (deg < pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      }
      sol.push_back(pick);
      left.reset(pick);
      left.and_not(g_.row(pick));
    }
    best_ = sol;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 1023) == 0) {
      double secs = std::chrono::duration<double>(Clock::now() - start_).count();
      if (secs > budget_.max_seconds) return true;
    }
    return false;
  }

  // Greedy clique cover of P: order[i] gets bound[i] = index of its clique
  // (1-based), nondecreasing along order.
  void clique_cover(const VertexSet& p, std::vector<int>& order,
                    std::vector<int>& bound) {
    order.clear();
    bound.clear();
    VertexSet rest = p;
    int clique = 0;
    while (!rest.empty()) {
      ++clique;
      VertexSet candidates = rest;
      while (true) {
        int v = candidates.first();
        if (v < 0) break;
        order.push_back(v);
        bound.push_back(clique);
        rest.reset(v);
        candidates.reset(v);
        // Members of one clique must be mutually adjacent in g.
        candidates.and_with(g_.row(v));
      }
    }
  }

  void expand(const VertexSet& p, std::vector<int>& current) {
    ++nodes_;
    if (stopped_ || out_of_budget()) {
      stopped_ = true;
      return;
    }

    std::vector<int> order, bound;
    clique_cover(p, order, bound);

    VertexSet rest = p;
    for (int i = int(order.size()) - 1; i >= 0; --i) {
      if (int(current.size()) + bound[static_cast<size_t>(i)] <= int(best_.size())) return;
      int v = order[static_cast<size_t>(i)];
      current.push_back(v);
      VertexSet next = rest;
      next.reset(v);
      next.and_with(comp_[static_cast<size_t>(v)]);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
        if (stopped_) {
          current.pop_back();
          return;
        }
      }
      current.pop_back();
      rest.reset(v);
    }
  }

  const ExplicitGraph& g_;
  int n_;
  int words_;
  MisBudget budget_;
  Clock::time_point start_;
  std::vector<std::vector<uint64_t>> comp_;
  std::vector<int> best_;
  uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

MisResult solve(const ExplicitGraph& g, const MisBudget& budget) {
  return Solver(g, budget).run();
}

long long alpha_base(long long p, long long q) {
  if (p < 1 || q < 1) throw std::invalid_argument("alpha_base: p, q >= 1");
  return p / q;
}

nlohmann::json MisResult::to_json() const {
  return nlohmann::json{{"size", size},
                        {"optimal", optimal},
                        {"witness", witness},
                        {"nodes", nodes_explored},
                        {"budget_hit", budget_hit}};
}

}  // namespace fraclat

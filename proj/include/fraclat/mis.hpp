#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fraclat/graphs.hpp"

namespace fraclat {

struct MisBudget {
  uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
};

struct MisResult {
  int size = 0;
  std::vector<int> witness;
  bool optimal = false;
  uint64_t nodes_explored = 0;
  bool budget_hit = false;

  nlohmann::json to_json() const;
};

// Exact maximum independent set by branch and bound with a greedy clique
// cover upper bound. Within budget the result is optimal; otherwise the best
// incumbent is returned with optimal = false. The witness is re-verified
// against the adjacency structure before returning.
MisResult solve(const ExplicitGraph& g, const MisBudget& budget = {});

// alpha(E_{p/q}) = floor(p/q), used as a solver cross-check.
long long alpha_base(long long p, long long q);

}  // namespace fraclat

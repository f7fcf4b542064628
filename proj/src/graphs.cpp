#include "fraclat/graphs.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace fraclat {

long long circ_dist(long long x, long long y, long long p) {
  long long d = ((x - y) % p + p) % p;
  return std::min(d, p - d);
}

bool FractionGraphPower::adjacent(const std::vector<long long>& u,
                                  const std::vector<long long>& v) const {
  if (u == v) return false;
  for (int i = 0; i < n; ++i)
    if (circ_dist(u[static_cast<size_t>(i)], v[static_cast<size_t>(i)], p) >= q) return false;
  return true;
}

bool is_independent(const FractionGraphPower& g, const SubgroupSet& s) {
  if (s.modulus != g.p || s.dim != g.n)
    throw std::invalid_argument("subgroup lives in the wrong group");
  // Differences of subgroup elements stay in the subgroup, so it suffices
  // that every nonzero element has a coordinate at distance >= q.
  for (const auto& v : s.elements) {
    bool zero = true;
    bool far = false;
    for (long long x : v) {
      if (x != 0) zero = false;
      if (circ_dist(x, 0, g.p) >= g.q) far = true;
    }
    if (!zero && !far) return false;
  }
  return true;
}

bool is_independent_list(const FractionGraphPower& g,
                         const std::vector<std::vector<long long>>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

SubgroupSet map_up(const SubgroupSet& s, long long a, long long b,
                   long long p, long long q) {
  if (a < 2 * b || a * q > p * b)
    throw std::invalid_argument("map_up requires 2 <= a/b <= p/q");
  if (s.modulus != a)
    throw std::invalid_argument("map_up: subgroup modulus != a");

  // Multiplication by p maps Z/a into Z/ap; a nonedge of E_{a/b} maps to a
  // nonedge of E_{ap/aq} because pb >= aq.
  SubgroupSet out;
  out.modulus = a * p;
  out.dim = s.dim;
  for (const auto& g : s.generators) {
    std::vector<long long> h(g);
    for (auto& x : h) x = (((x % a) + a) % a) * p;
    out.generators.push_back(std::move(h));
  }
  for (const auto& v : s.elements) {
    std::vector<long long> w(v);
    for (auto& x : w) x *= p;
    out.elements.push_back(std::move(w));
  }
  std::sort(out.elements.begin(), out.elements.end());

  FractionGraphPower target{a * p, a * q, s.dim};
  if (!is_independent(target, out))
    throw std::runtime_error("map_up: image failed independence re-check");
  return out;
}

std::pair<long long, long long> round_to_fraction(long long big_n,
                                                  const Rat& x) {
  if (big_n < 2) throw std::invalid_argument("round_to_fraction: N >= 2");
  if (x < 2) throw std::invalid_argument("round_to_fraction: x >= 2");
  // ceil(N / x) = ceil(N * den / num)
  Int num = Int(static_cast<long>(big_n)) * x.get_den();
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
  return {big_n, q.get_si()};
}

ExplicitGraph::ExplicitGraph(int n)
    : n_(n), words_((n + 63) / 64),
      adj_(static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>((n + 63) / 64), 0)) {
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
}

void ExplicitGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("no self-loops");
  adj_[static_cast<size_t>(u)][static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63);
  adj_[static_cast<size_t>(v)][static_cast<size_t>(u) >> 6] |= uint64_t(1) << (u & 63);
}

int ExplicitGraph::degree(int v) const {
  int d = 0;
  for (uint64_t w : adj_[static_cast<size_t>(v)]) d += __builtin_popcountll(w);
  return d;
}

size_t ExplicitGraph::edge_count() const {
  size_t total = 0;
  for (int v = 0; v < n_; ++v) total += static_cast<size_t>(degree(v));
  return total / 2;
}

std::string ExplicitGraph::to_dimacs() const {
  std::ostringstream out;
  out << "p edges " << n_ << " " << edge_count() << "\n";
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

ExplicitGraph ExplicitGraph::from_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  long long m = 0, seen = 0;
  int lineno = 0;
  ExplicitGraph g(1);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || n < 1)
        throw parse_error("line " + std::to_string(lineno) +
                          ": bad problem line");
      g = ExplicitGraph(n);
    } else if (tag == "e") {
      int u, v;
      if (n < 0)
        throw parse_error("line " + std::to_string(lineno) +
                          ": edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw parse_error("line " + std::to_string(lineno) + ": bad edge");
      g.add_edge(u - 1, v - 1);
      ++seen;
    } else {
      throw parse_error("line " + std::to_string(lineno) +
                        ": unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw parse_error("missing problem line");
  return g;
}

std::vector<long long> vertex_from_index(long long idx, long long p, int n) {
  std::vector<long long> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] = idx % p;
    idx /= p;
  }
  return v;
}

long long index_from_vertex(const std::vector<long long>& v, long long p) {
  long long idx = 0;
  for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
  return idx;
}

namespace {

long long checked_power(long long p, int n, long long cap,
                        const char* what) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / p)
      throw capacity_error(std::string(what) + ": p^n exceeds cap " +
                           std::to_string(cap));
    total *= p;
  }
  return total;
}

}  // namespace

ExplicitGraph materialize(const FractionGraphPower& g, long long cap) {
  const long long total = checked_power(g.p, g.n, cap, "materialize");
  ExplicitGraph out(static_cast<int>(total));
  for (long long i = 0; i < total; ++i) {
    auto u = vertex_from_index(i, g.p, g.n);
    for (long long j = i + 1; j < total; ++j) {
      if (g.adjacent(u, vertex_from_index(j, g.p, g.n)))
        out.add_edge(int(i), int(j));
    }
  }
  return out;
}

CosetQuotient build_quotient(const FractionGraphPower& g,
                             const std::vector<std::vector<long long>>& gens,
                             long long cap) {
  SubgroupSet h = close_generators(g.p, g.n, gens, cap);
  if (!is_independent(g, h))
    throw std::invalid_argument("quotient subgroup is not independent");

  const long long total =
      checked_power(g.p, g.n, 100'000'000, "build_quotient");
  const long long ncosets =
      total / static_cast<long long>(h.elements.size());
  if (ncosets > cap)
    throw capacity_error("coset count " + std::to_string(ncosets) +
                         " exceeds cap " + std::to_string(cap));

  // Sweep vertices in lexicographic order (coordinate 0 most significant);
  // the first vertex seen in each coset is its lex-least representative.
  std::vector<int> coset_of(static_cast<size_t>(total), -1);
  std::vector<std::vector<long long>> reps;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<long long> v(static_cast<size_t>(g.n));
    long long rest = idx;
    for (int i = g.n; i-- > 0;) {
      v[static_cast<size_t>(i)] = rest % g.p;
      rest /= g.p;
    }
    if (coset_of[static_cast<size_t>(index_from_vertex(v, g.p))] >= 0) continue;
    int c = int(reps.size());
    reps.push_back(v);
    for (const auto& e : h.elements) {
      std::vector<long long> w(static_cast<size_t>(g.n));
      for (int i = 0; i < g.n; ++i) {
        w[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] + e[static_cast<size_t>(i)];
        if (w[static_cast<size_t>(i)] >= g.p) w[static_cast<size_t>(i)] -= g.p;
      }
      coset_of[static_cast<size_t>(index_from_vertex(w, g.p))] = c;
    }
  }

  // Cosets C1 != C2 are adjacent iff some difference rep1 - rep2 + h lies in
  // the connection set (all coordinates at circular distance < q).
  ExplicitGraph q(int(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i + 1; j < reps.size(); ++j) {
      bool adj = false;
      std::vector<long long> diff(static_cast<size_t>(g.n));
      for (const auto& e : h.elements) {
        for (int t = 0; t < g.n; ++t) {
          diff[static_cast<size_t>(t)] =
              reps[i][static_cast<size_t>(t)] - reps[j][static_cast<size_t>(t)] + e[static_cast<size_t>(t)];
        }
        bool close = true;
        for (int t = 0; t < g.n && close; ++t)
          close = circ_dist(diff[static_cast<size_t>(t)], 0, g.p) < g.q;
        if (close) {
          adj = true;
          break;
        }
      }
      if (adj) q.add_edge(int(i), int(j));
    }
  }

  return CosetQuotient{g, std::move(h), std::move(reps), std::move(q)};
}

LiftResult lift_bound(const CosetQuotient& q,
                      const std::vector<int>& coset_witness) {
  LiftResult out;
  out.bound = Int(static_cast<long>(q.subgroup.elements.size())) *
              Int(static_cast<long>(coset_witness.size()));
  for (int c : coset_witness) {
    if (c < 0 || c >= int(q.reps.size()))
      throw std::out_of_range("lift_bound: bad coset index");
    const auto& rep = q.reps[static_cast<size_t>(c)];
    for (const auto& e : q.subgroup.elements) {
      std::vector<long long> v(static_cast<size_t>(q.base.n));
      for (int i = 0; i < q.base.n; ++i) {
        v[static_cast<size_t>(i)] = rep[static_cast<size_t>(i)] + e[static_cast<size_t>(i)];
        if (v[static_cast<size_t>(i)] >= q.base.p) v[static_cast<size_t>(i)] -= q.base.p;
      }
      out.lifted.push_back(std::move(v));
    }
  }
  if (!is_independent_list(q.base, out.lifted))
    throw std::runtime_error(
        "lift_bound: lifted set failed direct independence check");
  return out;
}

long long alpha_grp_exhaustive(long long p, long long q, int n,
                               long long cap, int max_gens) {
  const long long total = checked_power(p, n, cap, "alpha_grp_exhaustive");
  FractionGraphPower g{p, q, n};

  // All cyclic subgroups first (deduplicated); joins of up to max_gens of
  // them cover all subgroups generated by max_gens elements.
  std::set<std::vector<std::vector<long long>>> seen;
  std::vector<SubgroupSet> cyclic;
  for (long long idx = 0; idx < total; ++idx) {
    auto v = vertex_from_index(idx, p, n);
    SubgroupSet s = close_generators(p, n, {v}, total);
    if (seen.insert(s.elements).second) cyclic.push_back(std::move(s));
  }

  long long best = 1;  // the trivial subgroup {0} is always independent
  auto consider = [&](const SubgroupSet& s) {
    if (static_cast<long long>(s.elements.size()) > best && is_independent(g, s))
      best = static_cast<long long>(s.elements.size());
  };
  for (const auto& s : cyclic) consider(s);
  if (max_gens >= 2) {
    std::set<std::vector<std::vector<long long>>> joined;
    for (size_t i = 0; i < cyclic.size(); ++i) {
      for (size_t j = i + 1; j < cyclic.size(); ++j) {
        std::vector<std::vector<long long>> gens = cyclic[i].generators;
        gens.insert(gens.end(), cyclic[j].generators.begin(),
                    cyclic[j].generators.end());
        SubgroupSet s = close_generators(p, n, gens, total);
        if (joined.insert(s.elements).second) consider(s);
      }
    }
  }
  return best;
}

}  // namespace fraclat

#include "tin/hierarchy.hpp"

#include <algorithm>
#include <random>

namespace tin {

namespace {

// Shallowest-failure search over paired individualization sequences on two
// copies of g. A failure at depth d is a pair of sequences of length d whose
// colored results are non-isomorphic; because canonical identifiers encode
// the whole refinement history, a failure persists under any extension, so
// the shallowest failure depth determines membership at every level at once.
struct OpSearch {
  const ColoredGraph& g;
  const HierarchyOptions& opts;
  int depth_limit;
  int best;  // shallowest failure depth found so far; depth_limit + 1 = none
  std::pair<std::vector<int>, std::vector<int>> witness;
  std::size_t nodes = 0;

  OpSearch(const ColoredGraph& graph, const HierarchyOptions& options, int limit)
      : g(graph), opts(options), depth_limit(limit), best(limit + 1) {}

  bool states_isomorphic(const StableColoring& pa, const StableColoring& pb) {
    if (pa.sorted_colors() != pb.sorted_colors()) return false;
    return exact_iso(with_colors(g, pa.assignment), with_colors(g, pb.assignment),
                     opts.limits)
        .has_value();
  }

  void dfs(const StableColoring& pa, const StableColoring& pb,
           std::vector<int>& ga, std::vector<int>& gb) {
    const int depth = static_cast<int>(ga.size());
    if (depth >= best) return;
    if (++nodes > opts.node_cap) throw Error("operational search node cap exceeded");
    if (!states_isomorphic(pa, pb)) {
      best = depth;
      witness = {ga, gb};
      return;
    }
    if (depth == depth_limit || pa.is_discrete()) return;

    std::vector<bool> u_allowed(g.n(), true);
    if (opts.orbit_prune) {
      auto orbits =
          orbit_partition(automorphisms(with_colors(g, pa.assignment), {}, opts.limits));
      std::fill(u_allowed.begin(), u_allowed.end(), false);
      for (const auto& orbit : orbits.classes) u_allowed[orbit.front()] = true;
    }
    const bool same_state = pa.assignment == pb.assignment;

    for (const auto& [color, mem_a] : pa.classes()) {
      if (mem_a.size() < 2) continue;
      std::vector<int> mem_b;
      for (int v = 0; v < g.n(); ++v) {
        if (pb.assignment[v] == color) mem_b.push_back(v);
      }
      for (int u : mem_a) {
        if (!u_allowed[u]) continue;
        for (int v : mem_b) {
          // With identical side states the (u,v) and (v,u) branches are
          // mirror images; explore one of each pair.
          if (same_state && v < u) continue;
          std::vector<Color> na = pa.assignment, nb = pb.assignment;
          na[u] = indiv_color(depth);
          nb[v] = indiv_color(depth);
          ga.push_back(u);
          gb.push_back(v);
          dfs(refine_from_state(g, std::move(na), pa.next_fresh, Engine::Fast),
              refine_from_state(g, std::move(nb), pb.next_fresh, Engine::Fast), ga, gb);
          ga.pop_back();
          gb.pop_back();
          if (best <= depth + 1) return;  // nothing below can be shallower
        }
      }
    }
  }

  // Returns the shallowest failure depth, or depth_limit + 1 when every
  // sequence pair of length <= depth_limit stays isomorphic.
  int run() {
    std::vector<int> ga, gb;
    dfs(refine(g), refine(g), ga, gb);
    return best;
  }
};

}  // namespace

HierarchyVerdict is_k_tinhofer_operational(const ColoredGraph& g, int k,
                                           const HierarchyOptions& opts) {
  if (k < 0 || k > g.n()) throw Error("k out of range");
  HierarchyVerdict v;
  v.k = k;
  v.method = "operational";
  if (k == 0) return v;
  OpSearch s(g, opts, k);
  const int fail = s.run();
  if (fail <= k) {
    v.member = false;
    v.witness = std::move(s.witness);
  }
  return v;
}

HierarchyVerdict is_k_tinhofer_algebraic(const ColoredGraph& g, int k,
                                         const HierarchyOptions& opts) {
  if (k < 0 || k > g.n()) throw Error("k out of range");
  HierarchyVerdict verdict;
  verdict.k = k;
  verdict.method = "algebraic";
  if (k == 0) return verdict;  // no subsets to check

  std::vector<int> subset;
  // Subsets in ascending size, lexicographic within a size; the first
  // failing subset yields the witness.
  auto check = [&](const std::vector<int>& s) -> bool {
    VertexSet vs(s);
    auto orbits = orbit_partition(automorphisms(g, vs, opts.limits)).classes;
    std::vector<std::vector<int>> stable;
    for (const auto& [color, members] : p_set(g, vs).classes()) stable.push_back(members);
    std::sort(orbits.begin(), orbits.end());
    std::sort(stable.begin(), stable.end());
    if (orbits == stable) return true;
    // Two vertices sharing a refined class but lying in different orbits.
    std::vector<int> orbit_of(g.n());
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      for (int v : orbits[i]) orbit_of[v] = static_cast<int>(i);
    }
    for (const auto& cls : stable) {
      for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          if (orbit_of[cls[i]] != orbit_of[cls[j]]) {
            std::vector<int> ga = s, gb = s;
            ga.push_back(cls[i]);
            gb.push_back(cls[j]);
            verdict.member = false;
            verdict.witness = {std::move(ga), std::move(gb)};
            return false;
          }
        }
      }
    }
    throw Error("partition mismatch without a separating vertex pair");
  };

  for (int size = 0; size <= k - 1; ++size) {
    std::vector<int> idx(size);
    // lexicographically ordered size-combinations of 0..n-1
    auto rec = [&](auto&& self, int pos, int from) -> bool {
      if (pos == size) {
        return check(idx);
      }
      for (int v = from; v < g.n(); ++v) {
        idx[pos] = v;
        if (!self(self, pos + 1, v + 1)) return false;
      }
      return true;
    };
    if (!rec(rec, 0, 0)) return verdict;
  }
  return verdict;
}

HierarchyVerdict is_k_tinhofer_irtree(const ColoredGraph& g, int k, SelectorRule sel,
                                      const HierarchyOptions& opts) {
  if (k < 1 || k > g.n()) throw Error("k out of range");
  HierarchyVerdict verdict;
  verdict.k = k;
  verdict.method = "irtree";

  std::mt19937_64 rng(0x7125a9d4c3e1bf02ULL);
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[i] = i;
  for (int i = g.n() - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<int>(rng() % (i + 1))]);
  }
  const ColoredGraph h = relabel(g, perm);

  IRTree tg = build_ir_tree(g, sel, k - 1, opts.node_cap);
  IRTree th = build_ir_tree(h, sel, k - 1, opts.node_cap);
  for (const auto& node : tg.nodes) {
    const auto d = node.gamma.size();
    bool matched = false;
    for (const auto& other : th.nodes) {
      if (other.gamma.size() == d && other.quot == node.quot) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      verdict.member = false;
      return verdict;
    }
  }
  return verdict;
}

int tinhofer_threshold(const ColoredGraph& g, const HierarchyOptions& opts) {
  OpSearch s(g, opts, g.n());
  const int fail = s.run();
  return fail > g.n() ? g.n() : fail - 1;
}

ClassificationReport classify(const ColoredGraph& g, const HierarchyOptions& opts) {
  ClassificationReport rep;
  rep.discrete = refine(g).is_discrete();
  rep.refinable = is_refinable(g, opts.limits);
  rep.threshold = tinhofer_threshold(g, opts);
  rep.tinhofer = rep.threshold == g.n();
  if (!rep.tinhofer) rep.deficiency = g.n() - 1 - rep.threshold;
  return rep;
}

}  // namespace tin

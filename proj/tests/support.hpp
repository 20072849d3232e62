#pragma once

// Shared helpers for the test suite: a seeded random-graph corpus and
// factorial-time oracles used to cross-check the search-based engines.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tin/graph.hpp"
#include "tin/groups.hpp"
#include "tin/refine.hpp"

namespace support {

// rng()%x rather than a distribution: distribution output is
// implementation-defined and the corpus must be identical everywhere.
inline tin::ColoredGraph random_graph(std::mt19937_64& rng, int n, int max_color = 2,
                                      int edge_pct = 40, bool multi = false) {
  tin::ColoredGraph g(n);
  for (int v = 0; v < n; ++v) g.set_color(v, rng() % (max_color + 1));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 100 < static_cast<unsigned>(edge_pct)) {
        long long mult = multi && rng() % 8 == 0 ? 2 : 1;
        g.add_edge(u, v, mult);
      }
    }
  }
  return g;
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(rng() % (i + 1))]);
  return p;
}

// Plain n! enumeration; only for n <= 8.
inline std::vector<tin::Permutation> brute_automorphisms(const tin::ColoredGraph& g) {
  std::vector<int> image(g.n());
  std::iota(image.begin(), image.end(), 0);
  std::vector<tin::Permutation> out;
  do {
    tin::Permutation p{image};
    if (tin::verify_bijection(g, g, p)) out.push_back(p);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

inline std::optional<tin::Permutation> brute_iso(const tin::ColoredGraph& g,
                                                 const tin::ColoredGraph& h) {
  if (g.n() != h.n()) return std::nullopt;
  std::vector<int> image(g.n());
  std::iota(image.begin(), image.end(), 0);
  do {
    tin::Permutation p{image};
    if (tin::verify_bijection(g, h, p)) return p;
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

inline tin::ColoredGraph colored(const tin::ColoredGraph& g, const tin::StableColoring& pi) {
  return tin::with_colors(g, pi.assignment);
}

}  // namespace support

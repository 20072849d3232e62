#include "tin/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tin {

namespace {

// Individualization-refinement search for color-preserving bijections
// a -> b. At each node one vertex of the smallest non-singleton cell on the
// a-side is pinned and every vertex of the matching b-side cell is tried in
// ascending order; refinement after each tentative assignment prunes
// mismatching branches. Complete: any bijection maps the pinned vertex into
// the matching cell, so its branch is always explored.
struct IsoSearch {
  const ColoredGraph& a;
  const ColoredGraph& b;
  const GroupLimits& limits;
  bool find_all;
  std::vector<Permutation> found;

  bool verify_and_record(const StableColoring& ca, const StableColoring& cb) {
    std::map<Color, int> where;
    for (int v = 0; v < b.n(); ++v) where[cb.assignment[v]] = v;
    Permutation p;
    p.image.resize(a.n());
    for (int v = 0; v < a.n(); ++v) p.image[v] = where.at(ca.assignment[v]);
    if (!verify_bijection(a, b, p)) return false;
    found.push_back(std::move(p));
    if (found.size() > limits.max_group) {
      throw Error("group size cap exceeded (" + std::to_string(limits.max_group) + ")");
    }
    return true;
  }

  // Returns true when the search may stop (first hit found and !find_all).
  bool run(const StableColoring& ca, const StableColoring& cb, int step) {
    if (ca.sorted_colors() != cb.sorted_colors()) return false;
    if (ca.is_discrete()) {
      bool ok = verify_and_record(ca, cb);
      return ok && !find_all;
    }
    // smallest non-singleton cell, ties by color
    auto classes_a = ca.classes();
    Color cell = 0;
    std::size_t best = 0;
    for (const auto& [color, members] : classes_a) {
      if (members.size() < 2) continue;
      if (best == 0 || members.size() < best) {
        best = members.size();
        cell = color;
      }
    }
    const auto& cell_a = classes_a.at(cell);
    std::vector<int> cell_b;
    for (int v = 0; v < b.n(); ++v) {
      if (cb.assignment[v] == cell) cell_b.push_back(v);
    }
    const int u = cell_a.front();
    for (int w : cell_b) {
      std::vector<Color> na = ca.assignment, nb = cb.assignment;
      na[u] = indiv_color(step);
      nb[w] = indiv_color(step);
      StableColoring ra = refine_from_state(a, std::move(na), ca.next_fresh, Engine::Fast);
      StableColoring rb = refine_from_state(b, std::move(nb), cb.next_fresh, Engine::Fast);
      if (run(ra, rb, step + 1)) return true;
    }
    return false;
  }
};

std::vector<Permutation> search(const ColoredGraph& a, const ColoredGraph& b,
                                const VertexSet& fixed, bool find_all,
                                const GroupLimits& limits) {
  if (a.n() > limits.max_n || b.n() > limits.max_n) {
    throw Error("graph exceeds enumeration bound (" + std::to_string(limits.max_n) + ")");
  }
  if (a.n() != b.n()) return {};
  std::vector<Color> ca = a.colors(), cb = b.colors();
  int step = 0;
  for (int v : fixed.members) {
    ca[v] = indiv_color(step);
    cb[v] = indiv_color(step);
    ++step;
  }
  Color base = 1;
  for (Color c : a.colors()) {
    if (c < kIndivBase && c + 1 > base) base = c + 1;
  }
  for (Color c : b.colors()) {
    if (c < kIndivBase && c + 1 > base) base = c + 1;
  }
  IsoSearch s{a, b, limits, find_all, {}};
  s.run(refine_from_state(a, std::move(ca), base, Engine::Fast),
        refine_from_state(b, std::move(cb), base, Engine::Fast), step);
  return std::move(s.found);
}

}  // namespace

bool verify_bijection(const ColoredGraph& g, const ColoredGraph& h, const Permutation& p) {
  if (g.n() != h.n() || static_cast<int>(p.image.size()) != g.n()) return false;
  std::vector<bool> hit(g.n(), false);
  for (int v = 0; v < g.n(); ++v) {
    int w = p.image[v];
    if (w < 0 || w >= g.n() || hit[w]) return false;
    hit[w] = true;
    if (g.color(v) != h.color(w)) return false;
  }
  for (int u = 0; u < g.n(); ++u) {
    if (g.neighbors(u).size() != h.neighbors(p.image[u]).size()) return false;
    for (const auto& [v, mult] : g.neighbors(u)) {
      if (h.multiplicity(p.image[u], p.image[v]) != mult) return false;
    }
  }
  return true;
}

AutomorphismSet automorphisms(const ColoredGraph& g, const VertexSet& fixed,
                              const GroupLimits& limits) {
  for (int v : fixed.members) {
    if (v < 0 || v >= g.n()) throw Error("fixed vertex out of range");
  }
  AutomorphismSet out;
  out.fixed = fixed;
  out.perms = search(g, g, fixed, /*find_all=*/true, limits);
  return out;
}

OrbitPartition orbit_partition(const AutomorphismSet& auts) {
  if (auts.perms.empty()) throw Error("automorphism set must contain the identity");
  const int n = static_cast<int>(auts.perms.front().image.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : auts.perms) {
    for (int v = 0; v < n; ++v) {
      int ra = find(v), rb = find(p.image[v]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  OrbitPartition out;
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  return out;
}

std::optional<Permutation> exact_iso(const ColoredGraph& g, const ColoredGraph& h,
                                     const GroupLimits& limits) {
  auto hits = search(g, h, {}, /*find_all=*/false, limits);
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

bool is_refinable(const ColoredGraph& g, const GroupLimits& limits) {
  auto orbits = orbit_partition(automorphisms(g, {}, limits)).classes;
  std::vector<std::vector<int>> stable;
  for (auto& [color, members] : refine(g).classes()) stable.push_back(members);
  std::sort(orbits.begin(), orbits.end());
  std::sort(stable.begin(), stable.end());
  return orbits == stable;
}

std::vector<FlipReport> flip_parity_report(const ColoredGraph& g,
                                           const std::vector<std::pair<int, int>>& pairs,
                                           const GroupLimits& limits) {
  for (auto [a, b] : pairs) {
    if (g.color(a) != g.color(b)) throw Error("listed pair is not monochromatic");
    int size = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (g.color(v) == g.color(a)) ++size;
    }
    if (size != 2) throw Error("listed pair is not a color class of size 2");
  }
  std::vector<FlipReport> out;
  for (const auto& p : automorphisms(g, {}, limits).perms) {
    FlipReport rep;
    rep.perm = p;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (p.image[a] == b && p.image[b] == a) {
        rep.flipped.push_back(static_cast<int>(i));
      } else if (p.image[a] != a || p.image[b] != b) {
        throw Error("pair " + std::to_string(i) + " is not fixed setwise by some automorphism");
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string to_cycles(const Permutation& p) {
  const int n = static_cast<int>(p.image.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int v = 0; v < n; ++v) {
    if (seen[v] || p.image[v] == v) continue;
    any = true;
    out << "(";
    int u = v;
    bool first = true;
    do {
      if (!first) out << " ";
      first = false;
      out << (u + 1);
      seen[u] = true;
      u = p.image[u];
    } while (u != v);
    out << ")";
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace tin

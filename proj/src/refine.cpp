#include "tin/refine.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace tin {

namespace {

using Sig = std::pair<Color, std::vector<std::pair<Color, long long>>>;

std::size_t count_classes(const std::vector<Color>& colors) {
  std::vector<Color> c = colors;
  std::sort(c.begin(), c.end());
  return std::unique(c.begin(), c.end()) - c.begin();
}

Color fresh_base(const std::vector<Color>& colors) {
  Color base = 1;
  for (Color c : colors) {
    if (c < kIndivBase && c + 1 > base) base = c + 1;
  }
  return base;
}

// Reference engine: one synchronous round via an ordered signature map.
// Returns false when the round produced no split (colors left untouched).
bool naive_round(const ColoredGraph& g, std::vector<Color>& colors, Color& next_fresh) {
  std::map<Sig, std::vector<int>> groups;
  for (int v = 0; v < g.n(); ++v) {
    Sig sig;
    sig.first = colors[v];
    for (const auto& [u, mult] : g.neighbors(v)) {
      sig.second.push_back({colors[u], mult});
    }
    std::sort(sig.second.begin(), sig.second.end());
    // merge equal neighbor colors into weighted counts
    std::vector<std::pair<Color, long long>> merged;
    for (const auto& [c, m] : sig.second) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second += m;
      } else {
        merged.push_back({c, m});
      }
    }
    sig.second = std::move(merged);
    groups[sig].push_back(v);
  }
  if (groups.size() == count_classes(colors)) return false;
  Color id = next_fresh;
  for (const auto& [sig, members] : groups) {
    for (int v : members) colors[v] = id;
    ++id;
  }
  next_fresh = id;
  return true;
}

// Same round semantics on flat buffers: per-vertex signatures live in one
// arena and vertices are sorted by signature instead of hashed into a map.
struct FastRoundBuffers {
  std::vector<std::pair<Color, long long>> arena;
  std::vector<std::pair<std::size_t, std::size_t>> span;  // per-vertex [begin,end)
  std::vector<int> order;
};

bool fast_round(const ColoredGraph& g, std::vector<Color>& colors, Color& next_fresh,
                FastRoundBuffers& buf) {
  const int n = g.n();
  buf.arena.clear();
  buf.span.resize(n);
  for (int v = 0; v < n; ++v) {
    std::size_t begin = buf.arena.size();
    for (const auto& [u, mult] : g.neighbors(v)) {
      buf.arena.push_back({colors[u], mult});
    }
    auto first = buf.arena.begin() + begin;
    std::sort(first, buf.arena.end());
    // in-place merge of equal neighbor colors
    std::size_t w = begin;
    for (std::size_t r = begin; r < buf.arena.size(); ++r) {
      if (w > begin && buf.arena[w - 1].first == buf.arena[r].first) {
        buf.arena[w - 1].second += buf.arena[r].second;
      } else {
        buf.arena[w++] = buf.arena[r];
      }
    }
    buf.arena.resize(w);
    buf.span[v] = {begin, w};
  }
  auto sig_less = [&](int a, int b) {
    if (colors[a] != colors[b]) return colors[a] < colors[b];
    auto [ab, ae] = buf.span[a];
    auto [bb, be] = buf.span[b];
    return std::lexicographical_compare(buf.arena.begin() + ab, buf.arena.begin() + ae,
                                        buf.arena.begin() + bb, buf.arena.begin() + be);
  };
  auto sig_equal = [&](int a, int b) {
    if (colors[a] != colors[b]) return false;
    auto [ab, ae] = buf.span[a];
    auto [bb, be] = buf.span[b];
    return std::equal(buf.arena.begin() + ab, buf.arena.begin() + ae,
                      buf.arena.begin() + bb, buf.arena.begin() + be);
  };
  buf.order.resize(n);
  for (int v = 0; v < n; ++v) buf.order[v] = v;
  std::sort(buf.order.begin(), buf.order.end(), sig_less);

  std::size_t distinct = n == 0 ? 0 : 1;
  for (int i = 1; i < n; ++i) {
    if (!sig_equal(buf.order[i - 1], buf.order[i])) ++distinct;
  }
  if (distinct == count_classes(colors)) return false;

  std::vector<Color> next(n);
  Color id = next_fresh;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && !sig_equal(buf.order[i - 1], buf.order[i])) ++id;
    next[buf.order[i]] = id;
  }
  colors = std::move(next);
  next_fresh = id + 1;
  return true;
}

}  // namespace

std::map<Color, std::vector<int>> StableColoring::classes() const {
  std::map<Color, std::vector<int>> out;
  for (int v = 0; v < static_cast<int>(assignment.size()); ++v) {
    out[assignment[v]].push_back(v);
  }
  return out;
}

std::vector<Color> StableColoring::sorted_colors() const {
  std::vector<Color> c = assignment;
  std::sort(c.begin(), c.end());
  return c;
}

bool StableColoring::is_discrete() const {
  auto c = sorted_colors();
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

StableColoring refine_from_state(const ColoredGraph& g, std::vector<Color> colors,
                                 Color next_fresh, Engine engine) {
  StableColoring out;
  FastRoundBuffers buf;
  int rounds = 0;
  for (;;) {
    ++rounds;
    bool split = engine == Engine::Fast ? fast_round(g, colors, next_fresh, buf)
                                        : naive_round(g, colors, next_fresh);
    if (!split) break;
  }
  out.assignment = std::move(colors);
  out.round_count = rounds;
  out.next_fresh = next_fresh;
  return out;
}

StableColoring refine(const ColoredGraph& g, const std::vector<Color>* start, Engine engine) {
  std::vector<Color> colors = start ? *start : g.colors();
  if (static_cast<int>(colors.size()) != g.n()) throw Error("start coloring size mismatch");
  return refine_from_state(g, colors, fresh_base(colors), engine);
}

StableColoring refine_seq(const ColoredGraph& g, const std::vector<int>& gamma, Engine engine) {
  std::set<int> seen;
  for (int v : gamma) {
    if (v < 0 || v >= g.n()) throw Error("individualization vertex out of range");
    if (!seen.insert(v).second) throw Error("repeated vertex in individualization sequence");
  }
  StableColoring pi = refine(g, nullptr, engine);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::vector<Color> colors = pi.assignment;
    colors[gamma[i]] = indiv_color(static_cast<int>(i));
    int prev_rounds = pi.round_count;
    pi = refine_from_state(g, std::move(colors), pi.next_fresh, engine);
    pi.round_count += prev_rounds;
  }
  return pi;
}

StableColoring p_set(const ColoredGraph& g, const VertexSet& s, Engine engine) {
  std::vector<Color> colors = g.colors();
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    int v = s.members[i];
    if (v < 0 || v >= g.n()) throw Error("vertex set member out of range");
    colors[v] = indiv_color(static_cast<int>(i));
  }
  return refine_from_state(g, colors, fresh_base(g.colors()), engine);
}

QuotientGraph quotient(const ColoredGraph& g, const StableColoring& pi) {
  if (static_cast<int>(pi.assignment.size()) != g.n()) {
    throw Error("coloring does not match graph");
  }
  auto classes = pi.classes();
  QuotientGraph q;
  for (const auto& [color, members] : classes) {
    q.nodes.push_back({color, static_cast<int>(members.size())});
  }
  for (const auto& [color, members] : classes) {
    std::map<Color, long long> counts;
    bool first = true;
    for (int v : members) {
      std::map<Color, long long> mine;
      for (const auto& [u, mult] : g.neighbors(v)) {
        mine[pi.assignment[u]] += mult;
      }
      if (first) {
        counts = std::move(mine);
        first = false;
      } else if (mine != counts) {
        throw Error("coloring is not stable for this graph");
      }
    }
    for (const auto& [to, cnt] : counts) {
      if (cnt != 0) q.arcs[{color, to}] = cnt;
    }
  }
  return q;
}

}  // namespace tin

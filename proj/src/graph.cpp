#include "tin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tin {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw Error("vertex index out of range: " + std::to_string(v + 1));
  }
}

}  // namespace

void ColoredGraph::set_color(int v, Color c) {
  check_vertex(v, n_);
  colors_[v] = c;
}

void ColoredGraph::add_edge(int u, int v, long long mult) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw Error("self-loop rejected at vertex " + std::to_string(u + 1));
  if (mult <= 0) throw Error("edge multiplicity must be positive");
  auto insert = [&](int a, int b) {
    auto& row = adj_[a];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(b, 0LL),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    if (it != row.end() && it->first == b) {
      throw Error("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
    row.insert(it, {b, mult});
  };
  insert(u, v);
  insert(v, u);
}

long long ColoredGraph::multiplicity(int u, int v) const {
  check_vertex(u, n_);
  check_vertex(v, n_);
  const auto& row = adj_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, 0LL),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
  if (it != row.end() && it->first == v) return it->second;
  return 0;
}

long long ColoredGraph::weighted_degree(int v) const {
  long long d = 0;
  for (const auto& [u, m] : adj_[v]) d += m;
  return d;
}

std::size_t ColoredGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& row : adj_) m += row.size();
  return m / 2;
}

VertexSet::VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : members(std::move(vs)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  int n = 0;
  long long m = 0, edge_lines = 0;
  ColoredGraph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "p") {
      std::string fmt;
      if (have_header) fail("duplicate header");
      if (!(ls >> fmt >> n >> m) || fmt != "cgraph" || n < 0 || m < 0) {
        fail("malformed header");
      }
      have_header = true;
      g = ColoredGraph(n);
    } else if (tag == "c") {
      if (!have_header) fail("color line before header");
      long long v;
      Color c;
      if (!(ls >> v >> c)) fail("malformed color line");
      if (v < 1 || v > n) fail("vertex index out of range");
      g.set_color(static_cast<int>(v - 1), c);
    } else if (tag == "e") {
      if (!have_header) fail("edge line before header");
      long long u, v, mult = 1;
      if (!(ls >> u >> v)) fail("malformed edge line");
      ls >> mult;
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex index out of range");
      if (u == v) fail("self-loop rejected");
      if (mult < 1) fail("multiplicity must be positive");
      try {
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), mult);
      } catch (const Error& e) {
        fail(e.what());
      }
      ++edge_lines;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw Error("missing 'p cgraph' header");
  if (edge_lines != m) {
    throw Error("header announces " + std::to_string(m) + " edge lines, found " +
                std::to_string(edge_lines));
  }
  return g;
}

std::string serialize(const ColoredGraph& g) {
  std::ostringstream out;
  out << "p cgraph " << g.n() << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.n(); ++v) {
    if (g.color(v) != 0) out << "c " << (v + 1) << " " << g.color(v) << "\n";
  }
  for (int u = 0; u < g.n(); ++u) {
    for (const auto& [v, mult] : g.neighbors(u)) {
      if (u < v) {
        out << "e " << (u + 1) << " " << (v + 1);
        if (mult > 1) out << " " << mult;
        out << "\n";
      }
    }
  }
  return out.str();
}

ColoredGraph builtin(const std::string& name, const std::vector<int>& params) {
  auto one_param = [&](int min) {
    if (params.size() != 1 || params[0] < min) {
      throw Error("invalid parameter for builtin '" + name + "'");
    }
    return params[0];
  };
  if (name == "cycle") {
    int len = one_param(3);
    ColoredGraph g(len);
    for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
    return g;
  }
  if (name == "path") {
    int len = one_param(1);
    ColoredGraph g(len);
    for (int i = 0; i + 1 < len; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "complete") {
    int n = one_param(1);
    ColoredGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }
  if (name == "frucht") {
    if (!params.empty()) throw Error("builtin 'frucht' takes no parameters");
    // 12-cycle plus chords, LCF [-5,-2,-4,2,5,-2,2,5,-2,-5,4,2].
    static const int lcf[12] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    ColoredGraph g(12);
    for (int i = 0; i < 12; ++i) g.add_edge(i, (i + 1) % 12);
    for (int i = 0; i < 12; ++i) {
      int j = ((i + lcf[i]) % 12 + 12) % 12;
      if (g.multiplicity(i, j) == 0) g.add_edge(i, j);
    }
    return g;
  }
  throw Error("unknown builtin graph '" + name + "'");
}

std::pair<ColoredGraph, int> disjoint_union(const ColoredGraph& g, const ColoredGraph& h) {
  const int offset = g.n();
  ColoredGraph out(g.n() + h.n());
  for (int v = 0; v < g.n(); ++v) out.set_color(v, g.color(v));
  for (int v = 0; v < h.n(); ++v) out.set_color(offset + v, h.color(v));
  for (int u = 0; u < g.n(); ++u)
    for (const auto& [v, mult] : g.neighbors(u))
      if (u < v) out.add_edge(u, v, mult);
  for (int u = 0; u < h.n(); ++u)
    for (const auto& [v, mult] : h.neighbors(u))
      if (u < v) out.add_edge(offset + u, offset + v, mult);
  return {std::move(out), offset};
}

ColoredGraph with_colors(const ColoredGraph& g, const std::vector<Color>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) {
    throw Error("color vector size mismatch");
  }
  ColoredGraph out(g.n());
  for (int v = 0; v < g.n(); ++v) out.set_color(v, colors[v]);
  for (int u = 0; u < g.n(); ++u)
    for (const auto& [v, mult] : g.neighbors(u))
      if (u < v) out.add_edge(u, v, mult);
  return out;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw Error("permutation size mismatch");
  ColoredGraph out(g.n());
  for (int v = 0; v < g.n(); ++v) out.set_color(perm[v], g.color(v));
  for (int u = 0; u < g.n(); ++u)
    for (const auto& [v, mult] : g.neighbors(u))
      if (u < v) out.add_edge(perm[u], perm[v], mult);
  return out;
}

}  // namespace tin

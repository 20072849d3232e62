#include "tin/tinhofer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tin {

namespace {

struct PolicyState {
  ChoicePolicy pol;
  std::mt19937_64 rng;
  std::size_t next = 0;

  explicit PolicyState(const ChoicePolicy& p) : pol(p), rng(p.seed) {}

  int pick(const std::vector<int>& cell) {
    switch (pol.kind) {
      case ChoicePolicy::Kind::FirstVertex:
        return cell.front();
      case ChoicePolicy::Kind::SeededRandom:
        return cell[static_cast<std::size_t>(rng() % cell.size())];
      case ChoicePolicy::Kind::Scripted: {
        if (next >= pol.script.size()) throw Error("scripted policy ran out of vertices");
        int v = pol.script[next++];
        if (!std::binary_search(cell.begin(), cell.end(), v)) {
          throw Error("scripted policy names vertex " + std::to_string(v + 1) +
                      " outside the selected cell");
        }
        return v;
      }
    }
    throw Error("unreachable");
  }
};

std::vector<int> class_sizes(const StableColoring& pi) {
  std::vector<int> sizes;
  for (const auto& [c, members] : pi.classes()) sizes.push_back(static_cast<int>(members.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

SelectorRule parse_selector(const std::string& name) {
  if (name == "min-color") return SelectorRule::MinColor;
  if (name == "max-size") return SelectorRule::MaxSize;
  if (name == "first") return SelectorRule::First;
  throw Error("unknown cell selector '" + name + "'");
}

std::optional<Color> select_cell(SelectorRule rule, const StableColoring& pi) {
  std::optional<Color> best;
  std::size_t best_size = 0;
  for (const auto& [color, members] : pi.classes()) {
    if (members.size() < 2) continue;
    switch (rule) {
      case SelectorRule::MinColor:
        if (!best) {
          best = color;
          best_size = members.size();
        }
        break;
      case SelectorRule::MaxSize:
        if (!best || members.size() > best_size) {
          best = color;
          best_size = members.size();
        }
        break;
      case SelectorRule::First:
        if (!best || members.size() < best_size) {
          best = color;
          best_size = members.size();
        }
        break;
    }
  }
  return best;
}

TinhoferResult tinhofer_iso(const ColoredGraph& g, const ColoredGraph& h,
                            SelectorRule sel, const ChoicePolicy& pol_g,
                            const ChoicePolicy& pol_h) {
  TinhoferResult res;
  if (g.n() != h.n()) {
    res.transcript.note = "vertex count mismatch";
    return res;
  }
  PolicyState pg(pol_g), ph(pol_h);
  StableColoring cg = refine(g), ch = refine(h);
  int step = 0;
  for (;;) {
    if (cg.sorted_colors() != ch.sorted_colors()) {
      res.transcript.note = "color multisets diverged";
      return res;
    }
    if (cg.is_discrete()) {
      std::map<Color, int> where;
      for (int v = 0; v < h.n(); ++v) where[ch.assignment[v]] = v;
      Permutation p;
      p.image.resize(g.n());
      for (int v = 0; v < g.n(); ++v) p.image[v] = where.at(cg.assignment[v]);
      if (verify_bijection(g, h, p)) {
        res.bijection = std::move(p);
        res.transcript.isomorphic = true;
      } else {
        res.transcript.note = "discrete colorings matched but the bijection check failed";
      }
      return res;
    }
    Color cell = *select_cell(sel, cg);
    std::vector<int> cell_g, cell_h;
    for (int v = 0; v < g.n(); ++v) {
      if (cg.assignment[v] == cell) cell_g.push_back(v);
    }
    for (int v = 0; v < h.n(); ++v) {
      if (ch.assignment[v] == cell) cell_h.push_back(v);
    }
    if (cell_g.size() != cell_h.size()) {
      res.transcript.note = "selected cell size mismatch";
      return res;
    }
    int u = pg.pick(cell_g);
    int v = ph.pick(cell_h);
    std::vector<Color> na = cg.assignment, nb = ch.assignment;
    na[u] = indiv_color(step);
    nb[v] = indiv_color(step);
    cg = refine_from_state(g, std::move(na), cg.next_fresh, Engine::Fast);
    ch = refine_from_state(h, std::move(nb), ch.next_fresh, Engine::Fast);
    res.transcript.steps.push_back({cell, u, v, class_sizes(cg)});
    ++step;
  }
}

std::vector<int> IRTree::at_depth(int depth) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (static_cast<int>(nodes[i].gamma.size()) == depth) out.push_back(i);
  }
  return out;
}

IRTree build_ir_tree(const ColoredGraph& g, SelectorRule sel, int depth,
                     std::size_t node_cap) {
  if (depth < 0) throw Error("depth must be nonnegative");
  IRTree t;
  IRNode root;
  root.coloring = refine(g);
  root.quot = quotient(g, root.coloring);
  t.nodes.push_back(std::move(root));
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const int d = static_cast<int>(t.nodes[i].gamma.size());
    if (d >= depth || t.nodes[i].coloring.is_discrete()) continue;
    auto cell = select_cell(sel, t.nodes[i].coloring);
    t.nodes[i].selected = cell;
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v) {
      if (t.nodes[i].coloring.assignment[v] == *cell) members.push_back(v);
    }
    for (int v : members) {
      if (t.nodes.size() >= node_cap) throw Error("IR-tree node cap exceeded");
      IRNode child;
      child.gamma = t.nodes[i].gamma;
      child.gamma.push_back(v);
      std::vector<Color> colors = t.nodes[i].coloring.assignment;
      colors[v] = indiv_color(d);
      child.coloring = refine_from_state(g, std::move(colors),
                                         t.nodes[i].coloring.next_fresh, Engine::Fast);
      child.quot = quotient(g, child.coloring);
      t.nodes[i].children.push_back(static_cast<int>(t.nodes.size()));
      t.nodes.push_back(std::move(child));
    }
  }
  return t;
}

std::string export_dot(const IRTree& t) {
  std::ostringstream out;
  out << "digraph irtree {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    out << "  n" << i << " [label=\"(";
    for (std::size_t j = 0; j < node.gamma.size(); ++j) {
      if (j) out << " ";
      out << (node.gamma[j] + 1);
    }
    out << ")\\n[";
    auto sizes = class_sizes(node.coloring);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      if (j) out << " ";
      out << sizes[j];
    }
    out << "]\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (int c : t.nodes[i].children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Exhaustive color-respecting completion over the remaining classes,
// verifying adjacency incrementally against already assigned vertices.
bool complete_mapping(const ColoredGraph& g, const ColoredGraph& h,
                      const std::vector<int>& order, std::size_t pos,
                      const std::vector<std::vector<int>>& candidates,
                      std::vector<int>& image, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  const int a = order[pos];
  for (int b : candidates[pos]) {
    if (used[b]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < pos && ok; ++q) {
      int u = order[q];
      ok = g.multiplicity(a, u) == h.multiplicity(b, image[u]);
    }
    if (!ok) continue;
    image[a] = b;
    used[b] = true;
    if (complete_mapping(g, h, order, pos + 1, candidates, image, used)) return true;
    used[b] = false;
    image[a] = -1;
  }
  return false;
}

}  // namespace

std::optional<Permutation> fpt_iso(const ColoredGraph& g, const ColoredGraph& h,
                                   int budget, SelectorRule sel) {
  if (budget < 0 || budget > g.n()) throw Error("budget out of range");
  if (g.n() != h.n()) return std::nullopt;
  StableColoring cg = refine(g), ch = refine(h);
  int step = 0;
  const int max_steps = g.n() - budget;
  while (step < max_steps) {
    if (cg.sorted_colors() != ch.sorted_colors()) return std::nullopt;
    auto cell = select_cell(sel, cg);
    if (!cell) break;  // discrete before the step quota
    std::vector<int> cell_g, cell_h;
    for (int v = 0; v < g.n(); ++v) {
      if (cg.assignment[v] == *cell) cell_g.push_back(v);
      if (ch.assignment[v] == *cell) cell_h.push_back(v);
    }
    if (cell_g.size() != cell_h.size() || cell_h.empty()) return std::nullopt;
    std::vector<Color> na = cg.assignment, nb = ch.assignment;
    na[cell_g.front()] = indiv_color(step);
    nb[cell_h.front()] = indiv_color(step);
    cg = refine_from_state(g, std::move(na), cg.next_fresh, Engine::Fast);
    ch = refine_from_state(h, std::move(nb), ch.next_fresh, Engine::Fast);
    ++step;
  }
  if (cg.sorted_colors() != ch.sorted_colors()) return std::nullopt;

  auto classes_g = cg.classes();
  std::map<Color, std::vector<int>> classes_h;
  for (int v = 0; v < h.n(); ++v) classes_h[ch.assignment[v]].push_back(v);
  std::vector<int> order;
  std::vector<std::vector<int>> candidates;
  for (const auto& [color, members] : classes_g) {
    for (int v : members) {
      order.push_back(v);
      candidates.push_back(classes_h.at(color));
    }
  }
  std::vector<int> image(g.n(), -1);
  std::vector<bool> used(g.n(), false);
  if (!complete_mapping(g, h, order, 0, candidates, image, used)) return std::nullopt;
  Permutation p;
  p.image = std::move(image);
  if (!verify_bijection(g, h, p)) return std::nullopt;
  return p;
}

}  // namespace tin

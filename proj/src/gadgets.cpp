#include "tin/gadgets.hpp"

#include <bit>
#include <sstream>

namespace tin {

namespace {

struct Builder {
  std::vector<Color> colors;
  std::vector<std::tuple<int, int, long long>> edges;

  int add_vertex(Color c) {
    colors.push_back(c);
    return static_cast<int>(colors.size()) - 1;
  }
  std::pair<int, int> add_pair(Color c) {
    int a = add_vertex(c);
    int b = add_vertex(c);
    return {a, b};
  }
  void add_edge(int u, int v, long long mult = 1) { edges.push_back({u, v, mult}); }

  ColoredGraph build() const {
    ColoredGraph g(static_cast<int>(colors.size()));
    for (int v = 0; v < g.n(); ++v) g.set_color(v, colors[v]);
    for (const auto& [u, v, m] : edges) g.add_edge(u, v, m);
    return g;
  }
};

// Adds the 2^(k-1) even-weight intermediates of a CFI gadget over the given
// pairs; intermediate s gets an edge to a_i when bit i of s is 0, to b_i
// otherwise.
std::vector<int> cfi_block(Builder& b, const std::vector<std::pair<int, int>>& pairs,
                           Color f_color) {
  const int k = static_cast<int>(pairs.size());
  std::vector<int> f;
  for (unsigned s = 0; s < (1u << k); ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    int v = b.add_vertex(f_color);
    f.push_back(v);
    for (int i = 0; i < k; ++i) {
      b.add_edge(v, (s >> i) & 1u ? pairs[i].second : pairs[i].first);
    }
  }
  return f;
}

}  // namespace

std::pair<int, int> PairMap::pair(const std::string& label) const {
  auto it = pairs.find(label);
  if (it == pairs.end()) throw Error("unknown pair label '" + label + "'");
  return it->second;
}

Gadget gen_cfi(int k) {
  if (k < 2) throw Error("gen_cfi requires k >= 2");
  Builder b;
  Gadget out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) {
    auto p = b.add_pair(static_cast<Color>(i - 1));
    pairs.push_back(p);
    out.labels.pairs["P" + std::to_string(i)] = p;
  }
  out.labels.sets["F"] = cfi_block(b, pairs, static_cast<Color>(k));
  out.graph = b.build();
  return out;
}

Gadget gen_imp(int k) {
  if (k < 2) throw Error("gen_imp requires k >= 2");
  Builder b;
  Gadget out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) {
    auto p = b.add_pair(static_cast<Color>(i - 1));
    pairs.push_back(p);
    out.labels.pairs["P" + std::to_string(i)] = p;
  }
  out.labels.sets["F"] = cfi_block(b, pairs, static_cast<Color>(k));
  auto p0 = b.add_pair(static_cast<Color>(k + 1));
  out.labels.pairs["P0"] = p0;
  b.add_edge(p0.first, pairs[0].first);
  b.add_edge(p0.first, pairs[1].first);
  b.add_edge(p0.second, pairs[0].second);
  b.add_edge(p0.second, pairs[1].second);
  out.graph = b.build();
  return out;
}

Gadget gen_separator(int k) {
  if (k < 1) throw Error("gen_separator requires k >= 1");
  Builder b;
  Gadget out;
  std::vector<std::pair<int, int>> pairs;  // P0..P_{k+2}, colored by index
  for (int i = 0; i <= k + 2; ++i) {
    auto p = b.add_pair(static_cast<Color>(i));
    pairs.push_back(p);
    out.labels.pairs["P" + std::to_string(i)] = p;
  }
  out.labels.sets["F"] =
      cfi_block(b, {pairs[1], pairs[2], pairs[0]}, static_cast<Color>(k + 3));
  std::vector<std::pair<int, int>> big = {pairs[1], pairs[2]};
  for (int i = 3; i <= k + 2; ++i) big.push_back(pairs[i]);
  out.labels.sets["F'"] = cfi_block(b, big, static_cast<Color>(k + 4));
  out.graph = b.build();
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Circuit c;
  std::map<long long, int> index_of;  // file id -> gate index
  long long last_id = 0;
  bool have_output = false;
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
    if (tag == "gate") {
      long long id;
      std::string kind;
      if (!(ls >> id >> kind)) fail("malformed gate line");
      if (id <= last_id) fail("gate ids must be positive and strictly increasing");
      last_id = id;
      Circuit::Gate gate;
      if (kind == "CONST0") {
        gate.kind = Circuit::Kind::Const0;
      } else if (kind == "CONST1") {
        gate.kind = Circuit::Kind::Const1;
      } else if (kind == "AND" || kind == "OR") {
        gate.kind = kind == "AND" ? Circuit::Kind::And : Circuit::Kind::Or;
        long long i, j;
        if (!(ls >> i >> j)) fail("malformed gate line");
        auto it1 = index_of.find(i), it2 = index_of.find(j);
        if (it1 == index_of.end() || it2 == index_of.end()) {
          fail("gate input references an undefined (forward?) gate");
        }
        gate.in1 = it1->second;
        gate.in2 = it2->second;
      } else {
        fail("unknown gate kind '" + kind + "' (monotone circuits only)");
      }
      index_of[id] = static_cast<int>(c.gates.size());
      c.gates.push_back(gate);
    } else if (tag == "output") {
      long long id;
      if (!(ls >> id)) fail("malformed output line");
      auto it = index_of.find(id);
      if (it == index_of.end()) fail("output references an undefined gate");
      c.output = it->second;
      have_output = true;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_output) throw Error("missing output line");
  return c;
}

bool eval_circuit(const Circuit& c) {
  if (c.output < 0 || c.output >= static_cast<int>(c.gates.size())) {
    throw Error("circuit has no valid output gate");
  }
  std::vector<bool> value(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    switch (g.kind) {
      case Circuit::Kind::Const0: value[i] = false; break;
      case Circuit::Kind::Const1: value[i] = true; break;
      case Circuit::Kind::And: value[i] = value[g.in1] && value[g.in2]; break;
      case Circuit::Kind::Or: value[i] = value[g.in1] || value[g.in2]; break;
    }
  }
  return value[c.output];
}

Gadget gen_hardness(const Circuit& c, int k, bool per_gate_pm) {
  if (k < 1) throw Error("gen_hardness requires k >= 1");
  bool has_op = false, has_const0 = false;
  for (const auto& g : c.gates) {
    if (g.kind == Circuit::Kind::And || g.kind == Circuit::Kind::Or) {
      has_op = true;
      if (g.in1 == g.in2) throw Error("gate with equal inputs is not supported by the gadget wiring");
    }
    if (g.kind == Circuit::Kind::Const0) has_const0 = true;
  }
  if (!has_op) throw Error("circuit must contain at least one AND/OR gate");
  if (!has_const0) throw Error("circuit must contain at least one CONST0 gate");

  Builder b;
  Gadget out;
  Color next_color = 0;
  Color const0_color = 0;
  bool const0_color_set = false;

  // gate pairs
  std::vector<std::pair<int, int>> gate_pair(c.gates.size());
  std::vector<int> const0_gates;
  for (std::size_t t = 0; t < c.gates.size(); ++t) {
    const auto& g = c.gates[t];
    std::pair<int, int> p;
    switch (g.kind) {
      case Circuit::Kind::Const0:
        if (!const0_color_set) {
          const0_color = next_color++;
          const0_color_set = true;
        }
        p = b.add_pair(const0_color);
        const0_gates.push_back(static_cast<int>(t));
        break;
      case Circuit::Kind::Const1:
        p.first = b.add_vertex(next_color++);
        p.second = b.add_vertex(next_color++);
        break;
      default:
        p = b.add_pair(next_color++);
        break;
    }
    gate_pair[t] = p;
    out.labels.pairs["P" + std::to_string(t + 1)] = p;
  }

  // gate gadgets
  for (std::size_t t = 0; t < c.gates.size(); ++t) {
    const auto& g = c.gates[t];
    const std::string tid = std::to_string(t + 1);
    if (g.kind == Circuit::Kind::And) {
      out.labels.sets["F" + tid] =
          cfi_block(b, {gate_pair[g.in1], gate_pair[g.in2], gate_pair[t]}, next_color++);
    } else if (g.kind == Circuit::Kind::Or) {
      // two IMP gadgets sharing the output pair, one per input
      const char* side_name[2] = {"L", "R"};
      int inputs[2] = {g.in1, g.in2};
      for (int s = 0; s < 2; ++s) {
        auto p1 = b.add_pair(next_color++);
        auto p2 = b.add_pair(next_color++);
        out.labels.pairs["P" + tid + "." + side_name[s] + "1"] = p1;
        out.labels.pairs["P" + tid + "." + side_name[s] + "2"] = p2;
        out.labels.sets["F" + tid + "." + side_name[s]] =
            cfi_block(b, {p1, p2, gate_pair[t]}, next_color++);
        auto in = gate_pair[inputs[s]];
        b.add_edge(p1.first, in.first);
        b.add_edge(p1.second, in.second);
        b.add_edge(p2.first, in.first);
        b.add_edge(p2.second, in.second);
      }
    }
  }

  // one Y_{k+4} + X3 assembly per AND/OR gate
  std::vector<std::pair<int, int>> pm_pairs;
  std::pair<int, int> shared_pm{-1, -1};
  for (std::size_t t = 0; t < c.gates.size(); ++t) {
    const auto& g = c.gates[t];
    if (g.kind != Circuit::Kind::And && g.kind != Circuit::Kind::Or) continue;
    const std::string y = "Y" + std::to_string(t + 1);
    auto p0 = b.add_pair(next_color++);
    out.labels.pairs[y + ".P0"] = p0;
    std::vector<std::pair<int, int>> yp;
    for (int i = 1; i <= k + 4; ++i) {
      auto p = b.add_pair(next_color++);
      yp.push_back(p);
      out.labels.pairs[y + ".P" + std::to_string(i)] = p;
    }
    out.labels.sets[y + ".F"] = cfi_block(b, yp, next_color++);
    b.add_edge(p0.first, yp[0].first);
    b.add_edge(p0.first, yp[1].first);
    b.add_edge(p0.second, yp[0].second);
    b.add_edge(p0.second, yp[1].second);
    b.add_edge(p0.first, gate_pair[t].first);
    b.add_edge(p0.second, gate_pair[t].second);

    std::pair<int, int> pm;
    if (per_gate_pm) {
      pm = b.add_pair(next_color++);
      out.labels.pairs["Pm" + std::to_string(t + 1)] = pm;
      pm_pairs.push_back(pm);
    } else {
      if (shared_pm.first < 0) {
        shared_pm = b.add_pair(next_color++);
        out.labels.pairs["Pm"] = shared_pm;
        pm_pairs.push_back(shared_pm);
      }
      pm = shared_pm;
    }
    out.labels.sets[y + ".FX"] = cfi_block(b, {yp[k + 2], yp[k + 3], pm}, next_color++);
  }

  // parallel edges from P_m to the constant-0 vertices, matched polarity
  for (auto pm : pm_pairs) {
    for (int z : const0_gates) {
      b.add_edge(pm.first, gate_pair[z].first, 2);
      b.add_edge(pm.second, gate_pair[z].second, 2);
    }
  }

  out.graph = b.build();
  return out;
}

}  // namespace tin

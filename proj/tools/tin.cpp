// Command-line front end. Exit codes: 0 = success with a positive verdict
// (isomorphic / member / discrete / value 1), 1 = success with a negative
// verdict, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tin/gadgets.hpp"
#include "tin/hierarchy.hpp"
#include "tin/tinhofer.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tin::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tin::ColoredGraph load_graph(const std::string& path) {
  return tin::parse_graph(slurp(path));
}

tin::Engine parse_engine(const std::string& name) {
  if (name == "fast") return tin::Engine::Fast;
  if (name == "naive") return tin::Engine::Naive;
  throw tin::Error("unknown engine '" + name + "'");
}

// "first", "random", or "scripted:<file>" with whitespace-separated 1-based
// vertices.
tin::ChoicePolicy parse_policy(const std::string& text, std::uint64_t seed) {
  if (text == "first") return tin::ChoicePolicy::first_vertex();
  if (text == "random") return tin::ChoicePolicy::seeded_random(seed);
  if (text.rfind("scripted:", 0) == 0) {
    std::istringstream in(slurp(text.substr(9)));
    std::vector<int> script;
    long long v;
    while (in >> v) script.push_back(static_cast<int>(v - 1));
    return tin::ChoicePolicy::scripted(std::move(script));
  }
  throw tin::Error("unknown policy '" + text + "'");
}

std::string seq_str(const std::vector<int>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(seq[i] + 1);
  }
  return out;
}

void print_coloring(const tin::StableColoring& pi) {
  for (std::size_t v = 0; v < pi.assignment.size(); ++v) {
    std::cout << "v " << (v + 1) << " " << pi.assignment[v] << "\n";
  }
}

void print_quotient(const tin::QuotientGraph& q) {
  for (const auto& [color, size] : q.nodes) std::cout << "q " << color << " " << size << "\n";
  for (const auto& [arc, count] : q.arcs) {
    std::cout << "a " << arc.first << " " << arc.second << " " << count << "\n";
  }
}

void print_transcript(const tin::RunTranscript& t) {
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    std::cout << "step " << i << " color " << s.cell_color << " g " << (s.u + 1)
              << " h " << (s.v + 1) << "\n";
  }
}

int print_bijection(const tin::Permutation& p) {
  for (std::size_t v = 0; v < p.image.size(); ++v) {
    std::cout << "b " << (v + 1) << " " << (p.image[v] + 1) << "\n";
  }
  return 0;
}

void write_labels(const std::string& path, const tin::PairMap& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tin::Error("cannot open '" + path + "'");
  for (const auto& [label, pr] : labels.pairs) {
    out << "pair " << label << " " << (pr.first + 1) << " " << (pr.second + 1) << "\n";
  }
  for (const auto& [label, members] : labels.sets) {
    out << "set " << label;
    for (int v : members) out << " " << (v + 1);
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"color refinement, Tinhofer hierarchy and gadget toolkit"};
  app.require_subcommand(1);
  std::ostringstream out;

  std::string graph_path, graph_path2, engine = "fast", selector = "min-color";
  std::string policy = "first", policy_g, policy_h, method, labels_path;
  std::uint64_t seed = 0;
  int k = 1, depth = 1, budget = 0;
  bool per_gate_pm = false, orbit_prune = false;
  std::vector<std::string> indiv;

  auto* c_refine = app.add_subcommand("refine", "stable coloring of a graph");
  c_refine->add_option("graph", graph_path)->required();
  c_refine->add_option("--engine", engine, "fast|naive");
  c_refine->add_option("--indiv", indiv, "1-based vertices to individualize in order");

  auto* c_quot = app.add_subcommand("quotient", "quotient graph of the stable coloring");
  c_quot->add_option("graph", graph_path)->required();
  c_quot->add_option("--engine", engine, "fast|naive");
  c_quot->add_option("--indiv", indiv, "1-based vertices to individualize in order");

  auto* c_iso = app.add_subcommand("iso", "isomorphism test");
  c_iso->add_option("graph", graph_path)->required();
  c_iso->add_option("graph2", graph_path2)->required();
  c_iso->add_option("--method", method, "tinhofer|fpt|exact")->required();
  c_iso->add_option("--selector", selector, "min-color|max-size|first");
  c_iso->add_option("--policy", policy, "first|random|scripted:<file>");
  c_iso->add_option("--policy-g", policy_g, "override for the first graph");
  c_iso->add_option("--policy-h", policy_h, "override for the second graph");
  c_iso->add_option("--seed", seed);
  c_iso->add_option("--budget", budget, "fpt completion budget");

  auto* c_aut = app.add_subcommand("aut", "color-preserving automorphisms");
  c_aut->add_option("graph", graph_path)->required();

  auto* c_orb = app.add_subcommand("orbits", "automorphism orbit partition");
  c_orb->add_option("graph", graph_path)->required();

  auto* c_ktin = app.add_subcommand("ktin", "k-Tinhofer membership");
  c_ktin->add_option("graph", graph_path)->required();
  c_ktin->add_option("--k", k)->required();
  c_ktin->add_option("--method", method, "op|alg|irtree")->required();
  c_ktin->add_option("--selector", selector, "irtree cell selector");
  c_ktin->add_flag("--orbit-prune", orbit_prune, "orbit pruning in the operational search");

  auto* c_cls = app.add_subcommand("classify", "full classification report");
  c_cls->add_option("graph", graph_path)->required();

  auto* c_def = app.add_subcommand("deficiency", "Tinhofer deficiency");
  c_def->add_option("graph", graph_path)->required();

  auto* c_irt = app.add_subcommand("irtree", "individualization-refinement tree as DOT");
  c_irt->add_option("graph", graph_path)->required();
  c_irt->add_option("--depth", depth)->required();
  c_irt->add_option("--selector", selector);

  auto* c_gen = app.add_subcommand("gen", "gadget and builtin generators");
  std::string family;
  std::vector<std::string> gen_args;
  c_gen->add_option("family", family, "cfi|imp|sep|hard|builtin")->required();
  c_gen->add_option("args", gen_args, "family parameters");
  c_gen->add_option("--labels", labels_path, "write pair/set labels to this file");
  c_gen->add_flag("--per-gate-pm", per_gate_pm, "per-gate Pm pairs in `hard`");

  auto* c_ceval = app.add_subcommand("circuit-eval", "evaluate a monotone circuit");
  c_ceval->add_option("circuit", graph_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::vector<int> gamma;
    for (const auto& s : indiv) gamma.push_back(std::stoi(s) - 1);

    if (c_refine->parsed()) {
      auto g = load_graph(graph_path);
      auto pi = gamma.empty() ? tin::refine(g, nullptr, parse_engine(engine))
                              : tin::refine_seq(g, gamma, parse_engine(engine));
      print_coloring(pi);
      return pi.is_discrete() ? 0 : 1;
    }
    if (c_quot->parsed()) {
      auto g = load_graph(graph_path);
      auto pi = gamma.empty() ? tin::refine(g, nullptr, parse_engine(engine))
                              : tin::refine_seq(g, gamma, parse_engine(engine));
      print_quotient(tin::quotient(g, pi));
      return 0;
    }
    if (c_iso->parsed()) {
      auto g = load_graph(graph_path);
      auto h = load_graph(graph_path2);
      if (method == "exact") {
        auto p = tin::exact_iso(g, h);
        std::cout << "verdict " << (p ? "isomorphic" : "not-isomorphic") << "\n";
        return p ? print_bijection(*p) : 1;
      }
      if (method == "fpt") {
        auto p = tin::fpt_iso(g, h, budget, tin::parse_selector(selector));
        std::cout << "verdict " << (p ? "isomorphic" : "not-isomorphic") << "\n";
        return p ? print_bijection(*p) : 1;
      }
      if (method == "tinhofer") {
        auto pg = parse_policy(policy_g.empty() ? policy : policy_g, seed);
        auto ph = parse_policy(policy_h.empty() ? policy : policy_h, seed + 1);
        auto res = tin::tinhofer_iso(g, h, tin::parse_selector(selector), pg, ph);
        print_transcript(res.transcript);
        std::cout << "verdict "
                  << (res.transcript.isomorphic ? "isomorphic" : "not-isomorphic") << "\n";
        if (!res.transcript.note.empty()) std::cerr << res.transcript.note << "\n";
        return res.bijection ? print_bijection(*res.bijection) : 1;
      }
      throw tin::Error("unknown method '" + method + "'");
    }
    if (c_aut->parsed()) {
      for (const auto& p : tin::automorphisms(load_graph(graph_path)).perms) {
        std::cout << tin::to_cycles(p) << "\n";
      }
      return 0;
    }
    if (c_orb->parsed()) {
      auto orbits = tin::orbit_partition(tin::automorphisms(load_graph(graph_path)));
      for (const auto& cls : orbits.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          std::cout << (i ? " " : "") << (cls[i] + 1);
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (c_ktin->parsed()) {
      auto g = load_graph(graph_path);
      tin::HierarchyOptions opts;
      opts.orbit_prune = orbit_prune;
      tin::HierarchyVerdict v;
      if (method == "op") {
        v = tin::is_k_tinhofer_operational(g, k, opts);
      } else if (method == "alg") {
        v = tin::is_k_tinhofer_algebraic(g, k, opts);
      } else if (method == "irtree") {
        v = tin::is_k_tinhofer_irtree(g, k, tin::parse_selector(selector), opts);
      } else {
        throw tin::Error("unknown method '" + method + "'");
      }
      std::cout << "member " << (v.member ? "true" : "false") << "\n";
      if (v.witness) {
        std::cout << "witness g=" << seq_str(v.witness->first)
                  << " h=" << seq_str(v.witness->second) << "\n";
      }
      return v.member ? 0 : 1;
    }
    if (c_cls->parsed()) {
      auto rep = tin::classify(load_graph(graph_path));
      std::cout << "discrete " << (rep.discrete ? "true" : "false") << "\n"
                << "refinable " << (rep.refinable ? "true" : "false") << "\n"
                << "threshold " << rep.threshold << "\n"
                << "deficiency "
                << (rep.deficiency ? std::to_string(*rep.deficiency) : "none") << "\n"
                << "tinhofer " << (rep.tinhofer ? "true" : "false") << "\n";
      return rep.tinhofer ? 0 : 1;
    }
    if (c_def->parsed()) {
      auto rep = tin::classify(load_graph(graph_path));
      std::cout << "deficiency "
                << (rep.deficiency ? std::to_string(*rep.deficiency) : "none") << "\n";
      return rep.deficiency ? 1 : 0;
    }
    if (c_irt->parsed()) {
      auto t = tin::build_ir_tree(load_graph(graph_path), tin::parse_selector(selector),
                                  depth);
      std::cout << tin::export_dot(t);
      return 0;
    }
    if (c_gen->parsed()) {
      tin::Gadget gadget;
      if (family == "cfi" || family == "imp" || family == "sep") {
        if (gen_args.size() != 1) throw tin::Error("expected: gen " + family + " <k>");
        int kk = std::stoi(gen_args[0]);
        gadget = family == "cfi"   ? tin::gen_cfi(kk)
                 : family == "imp" ? tin::gen_imp(kk)
                                   : tin::gen_separator(kk);
      } else if (family == "hard") {
        if (gen_args.size() != 2) throw tin::Error("expected: gen hard <circuit-file> <k>");
        gadget = tin::gen_hardness(tin::parse_circuit(slurp(gen_args[0])),
                                   std::stoi(gen_args[1]), per_gate_pm);
      } else if (family == "builtin") {
        if (gen_args.empty()) throw tin::Error("expected: gen builtin <name> [params...]");
        std::vector<int> params;
        for (std::size_t i = 1; i < gen_args.size(); ++i) params.push_back(std::stoi(gen_args[i]));
        gadget.graph = tin::builtin(gen_args[0], params);
      } else {
        throw tin::Error("unknown family '" + family + "'");
      }
      std::cout << tin::serialize(gadget.graph);
      if (!labels_path.empty()) write_labels(labels_path, gadget.labels);
      return 0;
    }
    if (c_ceval->parsed()) {
      bool value = tin::eval_circuit(tin::parse_circuit(slurp(graph_path)));
      std::cout << "value " << (value ? 1 : 0) << "\n";
      return value ? 0 : 1;
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

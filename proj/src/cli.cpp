#include "oddcut/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "oddcut/approx.hpp"
#include "oddcut/error.hpp"
#include "oddcut/io.hpp"
#include "oddcut/lp_cert.hpp"
#include "oddcut/reductions.hpp"
#include "oddcut/solver.hpp"
#include "oddcut/torso.hpp"

namespace oddcut {

namespace {

struct Exit {
  int code;
};

std::string load(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

std::pair<int, int> endpoints(const Instance& inst, int edge) {
  if (inst.directed()) return {inst.dag().edge(edge).tail, inst.dag().edge(edge).head};
  return {inst.undirected().edge(edge).u, inst.undirected().edge(edge).v};
}

std::string join(const NodeSet& s) {
  std::string out;
  for (NodeId v : s) out += " " + std::to_string(v);
  return out;
}

NodeSet parse_list(const std::string& text, int n) {
  NodeSet out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 0 || v >= n) fail(ErrorCode::BadNodeId, "node " + item + " out of range");
    out.push_back(v);
  }
  return normalized(out);
}

// --s / --t fall back to the smallest and largest terminal when |T| = 2.
std::pair<NodeId, NodeId> pick_st(const Instance& inst, std::optional<int> s,
                                  std::optional<int> t) {
  if (!s || !t) {
    if (inst.terminals.size() != 2) {
      fail(ErrorCode::InvalidArgument, "give --s and --t or exactly two terminals");
    }
    if (!s) s = inst.terminals.front();
    if (!t) t = inst.terminals.back();
  }
  if (*s < 0 || *s >= inst.node_count() || *t < 0 || *t >= inst.node_count()) {
    fail(ErrorCode::BadNodeId, "--s/--t out of range");
  }
  return {*s, *t};
}

void print_solution(const Instance& inst, const CutSolution& sol, std::ostream& out) {
  out << "SOLUTION size=" << sol.size << '\n';
  if (sol.kind == CutKind::Node) {
    for (int v : sol.elements) out << "node " << v << '\n';
    return;
  }
  std::vector<std::pair<int, int>> ends;
  for (int e : sol.elements) ends.push_back(endpoints(inst, e));
  std::sort(ends.begin(), ends.end());
  for (const auto& [u, v] : ends) out << "edge " << u << ' ' << v << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"odd multiway cut tools", "oddcut"};
  app.require_subcommand(1);

  std::string file, cert_path, z_list, m_list, gen_kind, strategy = "auto";
  std::optional<int> s_opt, t_opt, budget_opt;
  std::uint64_t seed = 0;
  bool exact = false, brute = false;
  int star_k = 0;

  auto* check = app.add_subcommand("check-odd-path", "decide whether an odd s->t path exists");
  check->add_option("file", file, "instance file or -")->required();
  check->add_option("--s", s_opt);
  check->add_option("--t", t_opt);

  auto* solve = app.add_subcommand("solve", "minimum odd multiway cut within the budget");
  solve->add_option("file", file, "instance file or -")->required();
  auto* exact_flag = solve->add_flag("--exact", exact);
  solve->add_flag("--brute", brute)->excludes(exact_flag);
  solve->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
  solve->add_option("--seed", seed);

  auto* approx = app.add_subcommand("approx2", "2-approximate s->t odd path edge blocker");
  approx->add_option("file", file, "instance file or -")->required();
  approx->add_option("--s", s_opt);
  approx->add_option("--t", t_opt);

  auto* torso_cmd = app.add_subcommand("torso", "parity-preserving torso of Z");
  torso_cmd->add_option("file", file, "instance file or -")->required();
  torso_cmd->add_option("--z", z_list, "comma-separated node ids")->required();

  auto* shadow_cmd = app.add_subcommand("shadow", "shadows of a deletion set M");
  shadow_cmd->add_option("file", file, "instance file or -")->required();
  shadow_cmd->add_option("--m", m_list, "comma-separated node ids")->required();

  auto* gen = app.add_subcommand("gen", "generate a gadget instance");
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"vc", "mwc", "star", "escher"}));
  gen->add_option("param", file, "graph file (vc, mwc) or k (star)");
  gen->add_option("--cert", cert_path, "certificate output path (escher)");
  gen->add_option("--budget", budget_opt);

  auto* verify = app.add_subcommand("verify-cert", "check an LP certificate");
  verify->add_option("file", file, "instance file or -")->required();
  verify->add_option("--cert", cert_path)->required();
  verify->add_option("--s", s_opt);
  verify->add_option("--t", t_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const Instance inst = parse_instance(load(file, in));
      const auto [s, t] = pick_st(inst, s_opt, t_opt);
      bool odd = false;
      if (inst.directed()) {
        odd = has_odd_path(inst.dag(), s, t);
      } else {
        if (s == t) fail(ErrorCode::SameNode, "s and t must differ");
        for (const Path& p : enumerate_paths(inst.undirected(), s, t)) odd = odd || p.odd();
      }
      out << "ODD-PATH: " << (odd ? "yes" : "no") << '\n';
      return 0;
    }

    if (*solve) {
      const Instance inst = parse_instance(load(file, in));
      const Method method =
          brute || (!exact && !inst.directed()) ? Method::Brute : Method::Exact;
      CoverOptions options = default_cover_options(inst, seed);
      if (strategy == "exhaustive") options.strategy = Strategy::Exhaustive;
      if (strategy == "random") options.strategy = Strategy::Randomized;
      const auto sol = solve_minimum(inst, method, options);
      if (!sol) {
        std::vector<int> free = inst.free_elements();
        out << "INFEASIBLE budget=" << inst.budget.value_or(inst.weight(free)) << '\n';
        return 1;
      }
      print_solution(inst, *sol, out);
      return 0;
    }

    if (*approx) {
      const Instance inst = parse_instance(load(file, in));
      if (!inst.directed()) fail(ErrorCode::NotADag, "approx2 needs a directed instance");
      const auto [s, t] = pick_st(inst, s_opt, t_opt);
      const auto edges = approx2_odd_blocker(inst.dag(), s, t, inst.protected_edges);
      if (!edges) {
        out << "INFEASIBLE\n";
        return 1;
      }
      std::vector<std::pair<int, int>> ends;
      for (int e : *edges) ends.push_back(endpoints(inst, e));
      std::sort(ends.begin(), ends.end());
      for (const auto& [u, v] : ends) out << "edge " << u << ' ' << v << '\n';
      out << "COST " << to_fraction_string(edge_set_cost(inst.dag(), *edges)) << '\n';
      return 0;
    }

    if (*torso_cmd) {
      const Instance inst = parse_instance(load(file, in));
      if (!inst.directed()) fail(ErrorCode::NotADag, "torso needs a directed instance");
      const TorsoResult r =
          torso(inst.dag(), inst.terminals, inst.protected_nodes, parse_list(z_list, inst.node_count()));
      std::vector<std::string> notes;
      for (std::size_t i = 0; i < r.origin.size(); ++i) {
        notes.push_back("new-node " + std::to_string(inst.node_count() + static_cast<int>(i)) +
                        " " + std::to_string(r.origin[i].first) + " " +
                        std::to_string(r.origin[i].second));
      }
      const Instance result = make_instance(r.graph, CutKind::Node, inst.terminals,
                                            r.protected_nodes, {}, inst.budget);
      out << format_instance(result, notes);
      return 0;
    }

    if (*shadow_cmd) {
      const Instance inst = parse_instance(load(file, in));
      if (!inst.directed()) fail(ErrorCode::NotADag, "shadow needs a directed instance");
      const NodeSet m = parse_list(m_list, inst.node_count());
      for (NodeId v : m) {
        if (contains(inst.terminals, v)) fail(ErrorCode::InvalidArgument, "M meets T");
      }
      const Dag& dag = inst.dag();
      out << "FORWARD-SHADOW" << join(forward_shadow(dag, inst.terminals, m)) << '\n';
      out << "REVERSE-SHADOW" << join(reverse_shadow(dag, inst.terminals, m)) << '\n';
      out << "SHADOW" << join(shadow(dag, inst.terminals, m)) << '\n';
      out << "THIN " << (is_thin(dag, inst.terminals, m) ? "yes" : "no") << '\n';
      return 0;
    }

    if (*gen) {
      std::vector<std::string> notes;
      Instance result;
      if (gen_kind == "vc" || gen_kind == "mwc") {
        if (file.empty()) fail(ErrorCode::InvalidArgument, "gen " + gen_kind + " needs a graph file");
        const Instance source = parse_instance(load(file, in));
        if (source.directed()) fail(ErrorCode::InvalidArgument, "gadget input must be undirected");
        if (gen_kind == "vc") {
          result = gen_vc_gadget(source.undirected());
        } else {
          result = gen_mwc_gadget(source.undirected(), source.terminals);
        }
        const int n = source.node_count();
        notes.push_back("s " + std::to_string(n) + " t " + std::to_string(n + 1));
      } else if (gen_kind == "star") {
        try {
          star_k = std::stoi(file);
        } catch (const std::exception&) {
          fail(ErrorCode::InvalidArgument, "gen star needs an integer k");
        }
        result = gen_star_gap(star_k).instance;
        notes.push_back("star with " + std::to_string(star_k) + " leaves, centre " +
                        std::to_string(star_k));
      } else {
        const EscherWall w = gen_escher_wall();
        result = w.instance;
        for (std::size_t v = 0; v < w.label.size(); ++v) {
          if (w.label[v] != 0) {
            notes.push_back("id " + std::to_string(v) + " label " + std::to_string(w.label[v]));
          }
        }
        if (!cert_path.empty()) {
          std::ofstream cert(cert_path);
          if (!cert) fail(ErrorCode::InvalidArgument, "cannot write " + cert_path);
          cert << format_certificate(w.certificate);
        }
      }
      if (budget_opt) result.budget = *budget_opt;
      out << format_instance(result, notes);
      return 0;
    }

    if (*verify) {
      const Instance inst = parse_instance(load(file, in));
      if (!inst.directed()) fail(ErrorCode::NotADag, "verify-cert needs a directed instance");
      const Dag& dag = inst.dag();
      const auto [s, t] = pick_st(inst, s_opt, t_opt);
      const CertificateBundle cert =
          parse_certificate(read_file(cert_path), variable_offsets(dag).back());
      const bool primal_ok = verify_primal_feasible(dag, s, t, cert.primal);
      bool dual_ok = false;
      try {
        dual_ok = verify_dual_feasible(dag, s, t, cert.dual);
      } catch (const OddcutError&) {
        dual_ok = false;
      }
      bool extreme = false;
      try {
        extreme = primal_ok && verify_extreme_point(dag, s, t, cert.primal, cert.tight_paths);
      } catch (const OddcutError&) {
        extreme = false;
      }
      out << "PRIMAL-FEASIBLE " << (primal_ok ? "yes" : "no") << '\n';
      out << "DUAL-FEASIBLE " << (dual_ok ? "yes" : "no") << '\n';
      out << "DUALITY-GAP "
          << to_fraction_string(primal_objective(dag, cert.primal) - dual_value(cert.dual))
          << '\n';
      out << "EXTREME-POINT " << (extreme ? "yes" : "no") << '\n';
      out << "HALF-INTEGRAL " << (is_half_integral(cert.primal) ? "yes" : "no") << '\n';
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const OddcutError& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace oddcut

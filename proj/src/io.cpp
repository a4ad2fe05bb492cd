#include "oddcut/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "oddcut/error.hpp"

namespace oddcut {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, int line, const char* what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

int node_arg(const std::string& tok, int line, std::optional<int> n) {
  if (!n) throw ParseError(line, "'nodes' must come first");
  const int v = to_int(tok, line, "node id");
  if (v < 0 || v >= *n) throw ParseError(line, "node id " + tok + " out of range");
  return v;
}

void expect_args(const std::vector<std::string>& t, std::size_t lo, std::size_t hi, int line) {
  if (t.size() < lo + 1 || t.size() > hi + 1) {
    throw ParseError(line, "wrong number of arguments for '" + t[0] + "'");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::optional<bool> directed;
  std::optional<int> n;
  std::optional<CutKind> kind;
  std::optional<int> budget;
  NodeSet terminals, guarded;
  std::vector<std::pair<std::pair<int, int>, int>> guarded_pairs;  // (u, v), line
  std::vector<Edge> edges;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const auto t = tokens(raw);
    if (t.empty()) continue;
    const std::string& word = t[0];
    if (word == "directed" || word == "undirected") {
      expect_args(t, 0, 0, line);
      if (directed) throw ParseError(line, "graph type given twice");
      directed = word == "directed";
    } else if (word == "nodes") {
      expect_args(t, 1, 1, line);
      if (n) throw ParseError(line, "'nodes' given twice");
      n = to_int(t[1], line, "node count");
      if (*n < 0) throw ParseError(line, "negative node count");
    } else if (word == "kind") {
      expect_args(t, 1, 1, line);
      if (t[1] == "node") {
        kind = CutKind::Node;
      } else if (t[1] == "edge") {
        kind = CutKind::Edge;
      } else {
        throw ParseError(line, "kind must be 'node' or 'edge'");
      }
    } else if (word == "edge") {
      expect_args(t, 2, 4, line);
      Edge e;
      e.tail = node_arg(t[1], line, n);
      e.head = node_arg(t[2], line, n);
      for (std::size_t i = 3; i < t.size(); ++i) {
        if (t[i][0] == 'x') {
          e.multiplicity = to_int(t[i].substr(1), line, "multiplicity");
          if (e.multiplicity < 1) throw ParseError(line, "multiplicity must be positive");
        } else {
          if (i != 3) throw ParseError(line, "cost must precede multiplicity");
          try {
            e.cost = parse_rational(t[i]);
          } catch (const std::invalid_argument&) {
            throw ParseError(line, "bad cost '" + t[i] + "'");
          }
          if (e.cost < 0) throw ParseError(line, "negative cost");
        }
      }
      if (e.tail == e.head) throw ParseError(line, "self-loop at node " + t[1]);
      edges.push_back(e);
    } else if (word == "terminal") {
      expect_args(t, 1, 1, line);
      terminals.push_back(node_arg(t[1], line, n));
    } else if (word == "protected-node") {
      expect_args(t, 1, 1, line);
      guarded.push_back(node_arg(t[1], line, n));
    } else if (word == "protected-edge") {
      expect_args(t, 2, 2, line);
      guarded_pairs.push_back({{node_arg(t[1], line, n), node_arg(t[2], line, n)}, line});
    } else if (word == "budget") {
      expect_args(t, 1, 1, line);
      if (budget) throw ParseError(line, "at most one budget line");
      budget = to_int(t[1], line, "budget");
      if (*budget < 0) throw ParseError(line, "negative budget");
    } else {
      throw ParseError(line, "unknown directive '" + word + "'");
    }
  }
  if (!directed) throw ParseError(line, "missing 'directed' or 'undirected'");
  if (!n) throw ParseError(line, "missing 'nodes'");

  const CutKind k =
      kind.value_or(!*directed || !guarded_pairs.empty() ? CutKind::Edge : CutKind::Node);
  if (k == CutKind::Node && !guarded_pairs.empty()) {
    throw ParseError(guarded_pairs.front().second, "protected-edge in a node-kind instance");
  }
  std::vector<int> guarded_edges;
  for (const auto& [pair, at] : guarded_pairs) {
    bool hit = false;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      const auto [u, v] = pair;
      const bool same = edges[e].tail == u && edges[e].head == v;
      const bool flipped = !*directed && edges[e].tail == v && edges[e].head == u;
      if (same || flipped) {
        guarded_edges.push_back(e);
        hit = true;
      }
    }
    if (!hit) throw ParseError(at, "protected-edge names no edge");
  }

  try {
    if (*directed) {
      return make_instance(Dag(*n, std::move(edges)), k, terminals, guarded, guarded_edges,
                           budget);
    }
    std::vector<UndirEdge> undirected;
    for (const Edge& e : edges) undirected.push_back({e.tail, e.head, e.cost, e.multiplicity});
    return make_instance(UndirGraph(*n, std::move(undirected)), k, terminals, guarded,
                         guarded_edges, budget);
  } catch (const ParseError&) {
    throw;
  } catch (const OddcutError& e) {
    throw ParseError(line, e.what());
  }
}

std::string format_instance(const Instance& instance, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << (instance.directed() ? "directed" : "undirected") << '\n';
  out << "nodes " << instance.node_count() << '\n';
  const CutKind inferred = !instance.directed() || !instance.protected_edges.empty()
                               ? CutKind::Edge
                               : CutKind::Node;
  if (instance.kind != inferred) {
    out << "kind " << (instance.kind == CutKind::Node ? "node" : "edge") << '\n';
  }
  std::vector<std::pair<int, int>> ends;
  std::visit(
      [&](const auto& g) {
        for (const auto& e : g.edges()) {
          int u, v;
          if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Edge>) {
            u = e.tail;
            v = e.head;
          } else {
            u = e.u;
            v = e.v;
          }
          ends.push_back({u, v});
          out << "edge " << u << ' ' << v;
          if (e.cost != 1 || e.multiplicity != 1) out << ' ' << to_compact_string(e.cost);
          if (e.multiplicity != 1) out << " x" << e.multiplicity;
          out << '\n';
        }
      },
      instance.graph);
  for (NodeId t : instance.terminals) out << "terminal " << t << '\n';
  for (NodeId v : instance.protected_nodes) {
    if (instance.kind == CutKind::Edge || !contains(instance.terminals, v)) {
      out << "protected-node " << v << '\n';
    }
  }
  std::set<std::pair<int, int>> written;
  for (int e : instance.protected_edges) {
    if (written.insert(ends[e]).second) {
      out << "protected-edge " << ends[e].first << ' ' << ends[e].second << '\n';
    }
  }
  if (instance.budget) out << "budget " << *instance.budget << '\n';
  return out.str();
}

CertificateBundle parse_certificate(std::string_view text, int variable_count) {
  CertificateBundle cert;
  cert.primal.x.assign(variable_count, Rational(0));
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  auto rational = [&](const std::string& tok) {
    try {
      return parse_rational(tok);
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "bad rational '" + tok + "'");
    }
  };
  auto path_from = [&](const std::vector<std::string>& t, std::size_t first) {
    Path p;
    for (std::size_t i = first; i < t.size(); ++i) p.nodes.push_back(to_int(t[i], line, "node id"));
    if (p.nodes.size() < 2) throw ParseError(line, "path needs two nodes");
    return p;
  };
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const auto t = tokens(raw);
    if (t.empty()) continue;
    if (t[0] == "primal") {
      expect_args(t, 2, 2, line);
      const int index = to_int(t[1], line, "variable index");
      if (index < 0 || index >= variable_count) {
        throw ParseError(line, "variable index " + t[1] + " out of range");
      }
      cert.primal.x[index] = rational(t[2]);
    } else if (t[0] == "flow") {
      if (t.size() < 4) throw ParseError(line, "flow needs an amount and a path");
      cert.dual.flows.push_back({path_from(t, 2), rational(t[1])});
    } else if (t[0] == "tight") {
      cert.tight_paths.push_back(path_from(t, 1));
    } else {
      throw ParseError(line, "unknown directive '" + t[0] + "'");
    }
  }
  return cert;
}

std::string format_certificate(const CertificateBundle& certificate) {
  std::ostringstream out;
  for (std::size_t i = 0; i < certificate.primal.x.size(); ++i) {
    if (certificate.primal.x[i] != 0) {
      out << "primal " << i << ' ' << to_fraction_string(certificate.primal.x[i]) << '\n';
    }
  }
  for (const auto& [path, amount] : certificate.dual.flows) {
    out << "flow " << to_fraction_string(amount);
    for (NodeId v : path.nodes) out << ' ' << v;
    out << '\n';
  }
  for (const Path& path : certificate.tight_paths) {
    out << "tight";
    for (NodeId v : path.nodes) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::uint64_t instance_hash(const Instance& instance) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_instance(instance)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oddcut

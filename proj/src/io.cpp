#include "vmc/io.hpp"

#include <fstream>
#include <sstream>

#include "vmc/errors.hpp"

namespace vmc {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

int parse_vertex(const std::string& tok, int n, int line) {
  int v;
  try {
    size_t pos;
    v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
  } catch (...) {
    fail(line, "expected a vertex id, got '" + tok + "'");
  }
  if (v < 1 || v > n) fail(line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
  ParsedInstance out;
  bool have_header = false;
  int n = 0;
  long m_declared = 0, p_declared = 0;
  long m_seen = 0, p_seen = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail(lineno, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> n >> m_declared >> p_declared) || fmt != "vmc")
        fail(lineno, "expected 'p vmc <n> <m> <p>'");
      if (n < 0) fail(lineno, "negative vertex count");
      out.graph = Graph(n);
      out.w_set = VertexSet(n);
      have_header = true;
      continue;
    }
    if (!have_header) fail(lineno, "'" + tag + "' line before header");
    if (tag == "e") {
      std::string a, b;
      if (!(ls >> a >> b)) fail(lineno, "expected 'e <u> <v>'");
      int u = parse_vertex(a, n, lineno), v = parse_vertex(b, n, lineno);
      if (u == v) fail(lineno, "self-loop");
      out.graph.add_edge(u, v);
      ++m_seen;
    } else if (tag == "t") {
      std::string a, b;
      if (!(ls >> a >> b)) fail(lineno, "expected 't <s> <t>'");
      int s = parse_vertex(a, n, lineno), t = parse_vertex(b, n, lineno);
      out.pairs.emplace_back(std::min(s, t), std::max(s, t));
      ++p_seen;
    } else if (tag == "w") {
      std::string a;
      if (!(ls >> a)) fail(lineno, "expected 'w <v>'");
      out.w_set.set(parse_vertex(a, n, lineno));
    } else if (tag == "k") {
      int k;
      if (!(ls >> k)) fail(lineno, "expected 'k <int>'");
      if (k < 0) fail(lineno, "negative k");
      out.k = k;
    } else {
      fail(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p vmc' header");
  if (m_seen != m_declared)
    throw ParseError("header declares " + std::to_string(m_declared) + " edges, file has " +
                     std::to_string(m_seen));
  if (p_seen != p_declared)
    throw ParseError("header declares " + std::to_string(p_declared) + " pairs, file has " +
                     std::to_string(p_seen));
  out.pairs = normalize_pairs(std::move(out.pairs));
  return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_instance(in);
}

MulticutInstance ParsedInstance::to_multicut(std::optional<int> k_override) const {
  std::optional<int> kk = k_override ? k_override : k;
  if (!kk) throw ParseError("no budget: file lacks a 'k' line and no --k given");
  return MulticutInstance{graph, pairs, *kk};
}

CompressionInstance ParsedInstance::to_compression(std::optional<int> k_override) const {
  std::optional<int> kk = k_override ? k_override : k;
  if (!kk) throw ParseError("no budget: file lacks a 'k' line and no --k given");
  return make_compression_instance(graph, pairs, w_set, *kk);
}

std::string serialize_instance(const Graph& g, const std::vector<VertexPair>& pairs,
                               const VertexSet& w_set, std::optional<int> k) {
  std::ostringstream os;
  os << "p vmc " << g.capacity() << ' ' << g.edge_count() << ' ' << pairs.size() << '\n';
  g.vertices().for_each([&](int v) {
    g.neighbors(v).for_each([&](int u) {
      if (u > v) os << "e " << v + 1 << ' ' << u + 1 << '\n';
    });
  });
  for (const auto& [s, t] : pairs) os << "t " << s + 1 << ' ' << t + 1 << '\n';
  w_set.for_each([&](int v) { os << "w " << v + 1 << '\n'; });
  if (k) os << "k " << *k << '\n';
  return os.str();
}

std::string serialize_instance(const MulticutInstance& inst) {
  return serialize_instance(inst.graph, inst.pairs, VertexSet(inst.graph.capacity()), inst.k);
}

std::string serialize_instance(const CompressionInstance& inst) {
  return serialize_instance(inst.graph, inst.pairs, inst.w_set, inst.k);
}

}  // namespace vmc

#include "vmc/instance.hpp"

#include <algorithm>
#include <sstream>

#include "vmc/errors.hpp"

namespace vmc {

std::vector<VertexPair> normalize_pairs(std::vector<VertexPair> pairs) {
  for (auto& p : pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::string CompressionInstance::encode() const {
  std::ostringstream os;
  os << graph.encode() << '|';
  for (const auto& [s, t] : pairs) os << s << ':' << t << ',';
  os << '|';
  w_set.for_each([&](int v) { os << v << ','; });
  os << '|' << k << '|' << infeasible;
  return os.str();
}

CompressionInstance make_compression_instance(Graph g, std::vector<VertexPair> pairs,
                                              VertexSet w_set, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  pairs = normalize_pairs(std::move(pairs));
  for (const auto& [s, t] : pairs) {
    if (s == t) throw PreconditionError("terminal pair with equal endpoints");
    if (!g.has_vertex(s) || !g.has_vertex(t))
      throw PreconditionError("terminal pair endpoint is not a vertex");
  }
  if (!w_set.is_subset_of(g.vertices()))
    throw PreconditionError("W contains a non-vertex");
  if (w_set.count() > k + 1) throw PreconditionError("|W| exceeds k+1");
  if (!is_multicut(g, pairs, w_set))
    throw PreconditionError("W is not a multicut of (G, T)");
  return CompressionInstance{std::move(g), std::move(pairs), std::move(w_set), k, false};
}

bool is_multicut(const Graph& g, const std::vector<VertexPair>& pairs, const VertexSet& x) {
  for (const auto& [s, t] : pairs) {
    if (x.test(s) || x.test(t)) continue;
    if (g.reachable(VertexSet::single(g.capacity(), s), x).test(t)) return false;
  }
  return true;
}

bool is_multiway_cut(const Graph& g, const VertexSet& w_set, const VertexSet& x) {
  if (x.intersects(w_set)) throw PreconditionError("cut intersects W");
  VertexSet seen(g.capacity());
  bool ok = true;
  w_set.for_each([&](int w) {
    if (!ok || !g.has_vertex(w)) return;
    if (seen.test(w)) {
      ok = false;
      return;
    }
    VertexSet comp = g.reachable(VertexSet::single(g.capacity(), w), x);
    if ((comp & w_set).count() > 1) ok = false;
    seen |= comp;
  });
  return ok;
}

bool is_compression_solution(const CompressionInstance& inst, const VertexSet& x) {
  if (inst.infeasible) return false;
  if (x.count() > inst.k) return false;
  if (x.intersects(inst.w_set)) return false;
  if (!x.is_subset_of(inst.graph.vertices())) return false;
  return is_multicut(inst.graph, inst.pairs, x) &&
         is_multiway_cut(inst.graph, inst.w_set, x);
}

CompressionInstance torso(const CompressionInstance& inst, const VertexSet& z) {
  if (z.intersects(inst.w_set)) throw PreconditionError("torso set intersects W");
  const Graph& g = inst.graph;
  int cap = g.capacity();
  VertexSet zz = z & g.vertices();

  CompressionInstance out;
  out.graph = g.torso(zz);
  out.w_set = inst.w_set;
  out.k = inst.k;
  out.infeasible = inst.infeasible;

  // phi(v) for v in z: survivors adjacent to v's z-component.
  std::vector<VertexSet> phi(cap);
  VertexSet outside = g.vertices() - zz;
  VertexSet todo = zz;
  while (todo.any()) {
    int v = todo.first();
    VertexSet comp = g.reachable(VertexSet::single(cap, v), outside);
    VertexSet nb(cap);
    comp.for_each([&](int u) { nb |= g.neighbors(u); });
    nb -= zz;
    comp.for_each([&](int u) { phi[u] = nb; });
    todo -= comp;
  }

  std::vector<VertexPair> np;
  for (const auto& [s, t] : inst.pairs) {
    VertexSet ps = zz.test(s) ? phi[s] : VertexSet::single(cap, s);
    VertexSet pt = zz.test(t) ? phi[t] : VertexSet::single(cap, t);
    if (ps.empty() || pt.empty()) continue;  // endpoint sealed inside z, pair stays cut
    bool collapsed = false;
    ps.for_each([&](int a) {
      pt.for_each([&](int b) {
        if (a == b)
          collapsed = true;
        else
          np.emplace_back(std::min(a, b), std::max(a, b));
      });
    });
    if (collapsed) out.infeasible = true;
  }
  out.pairs = normalize_pairs(std::move(np));
  return out;
}

CompressionInstance contract(const CompressionInstance& inst,
                             const std::vector<std::pair<int, int>>& mapping) {
  const Graph& g = inst.graph;
  int cap = g.capacity();
  std::vector<int> to(cap, -1);
  VertexSet domain(cap);
  for (const auto& [v, w] : mapping) {
    if (inst.w_set.test(v)) throw PreconditionError("contract domain intersects W");
    if (!inst.w_set.test(w)) throw PreconditionError("contract image outside W");
    if (!g.has_vertex(v) || !g.has_vertex(w))
      throw PreconditionError("contract endpoint is not a vertex");
    domain.set(v);
    to[v] = w;
  }
  auto fstar = [&](int v) { return to[v] >= 0 ? to[v] : v; };

  CompressionInstance out;
  out.graph = g;
  out.w_set = inst.w_set;
  out.k = inst.k;
  out.infeasible = inst.infeasible;

  domain.for_each([&](int v) {
    int w = to[v];
    g.neighbors(v).for_each([&](int u) {
      int fu = fstar(u);
      if (fu != w) out.graph.add_edge(w, fu);
    });
  });
  out.graph.remove_vertices(domain);

  std::vector<VertexPair> np;
  for (const auto& [s, t] : inst.pairs) {
    int a = fstar(s), b = fstar(t);
    if (a == b)
      out.infeasible = true;
    else
      np.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.pairs = normalize_pairs(std::move(np));
  return out;
}

CompressionInstance trivial_no_instance(int capacity) {
  CompressionInstance out;
  out.graph = Graph(capacity, false);
  out.w_set = VertexSet(capacity);
  out.k = -1;
  return out;
}

}  // namespace vmc

#include "goi/graph.hpp"

#include <algorithm>

namespace goi {

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& vs, VertexId v) {
  return std::binary_search(vs.begin(), vs.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_symmetric_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  return set_intersection(a, b).empty();
}

WeightedGraph make_graph(std::vector<VertexId> vertices,
                         std::vector<Edge> edges) {
  WeightedGraph g;
  g.vertices = make_vertex_set(std::move(vertices));
  for (const Edge& e : edges) {
    if (!contains(g.vertices, e.src) || !contains(g.vertices, e.tgt)) {
      throw InputError("edge endpoint outside the vertex set");
    }
    if (e.weight <= 0 || e.weight > 1) {
      throw InputError("edge weight outside (0, 1]: " + rat_string(e.weight));
    }
  }
  g.edges = std::move(edges);
  return g;
}

WeightedGraph empty_graph(VertexSet vertices) {
  WeightedGraph g;
  g.vertices = std::move(vertices);
  return g;
}

WeightedGraph union_graphs(const WeightedGraph& f, const WeightedGraph& g) {
  if (!disjoint(f.vertices, g.vertices)) {
    throw CarrierOverlap("union requires disjoint vertex sets");
  }
  WeightedGraph out;
  out.vertices = set_union(f.vertices, g.vertices);
  out.edges = f.edges;
  out.edges.insert(out.edges.end(), g.edges.begin(), g.edges.end());
  return out;
}

namespace {

std::vector<std::tuple<VertexId, VertexId, Rat>> edge_multiset(
    const WeightedGraph& g) {
  std::vector<std::tuple<VertexId, VertexId, Rat>> out;
  out.reserve(g.edges.size());
  for (const Edge& e : g.edges) out.emplace_back(e.src, e.tgt, e.weight);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool graphs_equal(const WeightedGraph& f, const WeightedGraph& g) {
  return f.vertices == g.vertices && edge_multiset(f) == edge_multiset(g);
}

VertexSet map_vertex_set(const VertexSet& vs, const VertexMap& phi) {
  std::vector<VertexId> image;
  image.reserve(vs.size());
  for (VertexId v : vs) {
    auto it = phi.find(v);
    if (it == phi.end()) {
      throw NotInjectiveOnCarrier("map undefined on vertex " +
                                  std::to_string(v));
    }
    image.push_back(it->second);
  }
  VertexSet out = make_vertex_set(image);
  if (out.size() != vs.size()) {
    throw NotInjectiveOnCarrier("map not injective on the carrier");
  }
  return out;
}

WeightedGraph delocate_graph(const WeightedGraph& g, const VertexMap& phi) {
  WeightedGraph out;
  out.vertices = map_vertex_set(g.vertices, phi);
  out.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    out.edges.push_back(Edge{phi.at(e.src), phi.at(e.tgt), e.weight});
  }
  return out;
}

VertexId path_source(const Plugging& pl, const Path& p) {
  return pl.src(p.front());
}

VertexId path_target(const Plugging& pl, const Path& p) {
  return pl.tgt(p.back());
}

Rat path_weight(const Plugging& pl, const Path& p) {
  Rat w(1);
  for (PluggedEdge e : p) w *= pl.edge(e).weight;
  return w;
}

bool path_consecutive(const Plugging& pl, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (pl.tgt(p[i]) != pl.src(p[i + 1])) return false;
  }
  return true;
}

bool path_alternating(const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i].color == p[i + 1].color) return false;
  }
  return true;
}

Path canonical_rotation(const Path& cycle) {
  const std::size_t n = cycle.size();
  Path best = cycle;
  Path cur = cycle;
  for (std::size_t r = 1; r < n; ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

long cycle_period(const Path& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t s = 1; s <= n; ++s) {
    if (n % s != 0) continue;
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) {
      fixed = cycle[i] == cycle[(i + s) % n];
    }
    if (fixed) return static_cast<long>(n / s);
  }
  return 1;
}

std::pair<Circuit, long> rotation_class(const Plugging& pl, const Path& cycle) {
  if (cycle.empty()) throw NotACycle("empty path");
  if (!path_consecutive(pl, cycle)) throw NotACycle("edges not consecutive");
  if (path_source(pl, cycle) != path_target(pl, cycle)) {
    throw NotACycle("path is not closed");
  }
  if (!path_alternating(cycle) ||
      cycle.front().color == cycle.back().color) {
    throw NotACycle("cycle does not alternate");
  }
  long k = cycle_period(cycle);
  return {Circuit{canonical_rotation(cycle), k}, k};
}

}  // namespace goi

#ifndef GOI_GRAPH_HPP
#define GOI_GRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "goi/errors.hpp"
#include "goi/rational.hpp"

namespace goi {

using VertexId = std::int64_t;
using VertexSet = std::vector<VertexId>;  // sorted, no duplicates
using VertexMap = std::map<VertexId, VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vs);
bool contains(const VertexSet& vs, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_symmetric_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

/// Edge of a directed weighted multigraph. Identity is positional: the edge's
/// index in its graph's edge sequence. Weights lie in (0, 1].
struct Edge {
  VertexId src;
  VertexId tgt;
  Rat weight;
};

struct WeightedGraph {
  VertexSet vertices;
  std::vector<Edge> edges;
};

/// Validates endpoints and weight range, sorts the vertex list.
WeightedGraph make_graph(std::vector<VertexId> vertices,
                         std::vector<Edge> edges);

WeightedGraph empty_graph(VertexSet vertices);

/// Disjoint-carrier union; throws CarrierOverlap otherwise.
WeightedGraph union_graphs(const WeightedGraph& f, const WeightedGraph& g);

/// Same vertex set and same edge multiset (src, tgt, weight).
bool graphs_equal(const WeightedGraph& f, const WeightedGraph& g);

/// Renames the vertices of g through phi, which must be defined and
/// injective on g's vertex set; throws NotInjectiveOnCarrier otherwise.
WeightedGraph delocate_graph(const WeightedGraph& g, const VertexMap& phi);

/// Image of a vertex set under a map (with the same definedness and
/// injectivity requirements).
VertexSet map_vertex_set(const VertexSet& vs, const VertexMap& phi);

/// An edge of the plugging F ⫶ G: color 0 for F-edges, 1 for G-edges.
/// The canonical total order on plugged edges is (color, index).
struct PluggedEdge {
  int color;
  int index;

  friend auto operator<=>(const PluggedEdge&, const PluggedEdge&) = default;
};

/// Nonempty sequence of plugged edges; alternation means consecutive colors
/// differ.
using Path = std::vector<PluggedEdge>;

/// View of two graphs as a 2-colored union, with edge lookups.
struct Plugging {
  const WeightedGraph& left;
  const WeightedGraph& right;

  const Edge& edge(PluggedEdge e) const {
    return e.color == 0 ? left.edges[e.index] : right.edges[e.index];
  }
  VertexId src(PluggedEdge e) const { return edge(e).src; }
  VertexId tgt(PluggedEdge e) const { return edge(e).tgt; }
};

VertexId path_source(const Plugging& pl, const Path& p);
VertexId path_target(const Plugging& pl, const Path& p);
Rat path_weight(const Plugging& pl, const Path& p);
bool path_consecutive(const Plugging& pl, const Path& p);
bool path_alternating(const Path& p);

/// Alternating cycle taken modulo rotation. `representative` is the
/// lexicographically minimal rotation in the (color, index) edge order;
/// `period` is the k with |rotation class| = length / k. 1-circuits have
/// period 1.
struct Circuit {
  Path representative;
  long period;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

Path canonical_rotation(const Path& cycle);

/// Smallest s > 0 with rotation-by-s fixing the sequence equals n/k.
long cycle_period(const Path& cycle);

/// Requires an alternating cycle in F ⫶ G (closed, consecutive, alternating
/// across the wrap); throws NotACycle otherwise. Returns the canonical
/// representative and the k with |rotation class| = n/k.
std::pair<Circuit, long> rotation_class(const Plugging& pl, const Path& cycle);

}  // namespace goi

#endif

#ifndef GOI_EXECUTION_HPP
#define GOI_EXECUTION_HPP

#include <optional>
#include <vector>

#include "goi/graph.hpp"

namespace goi {

/// Automaton tracking alternating traversal through the shared vertices of
/// two plugged graphs. A state is (junction vertex, color of the incoming
/// edge); transitions follow edges of the opposite color. Alternating cycles
/// of F ⫶ G correspond bijectively to cycles of this automaton, and the
/// alternating paths between carrier-symmetric-difference vertices are the
/// walks from an entry edge to an exit edge.
class JunctionAutomaton {
 public:
  JunctionAutomaton(const WeightedGraph& f, const WeightedGraph& g);

  const VertexSet& junctions() const { return junctions_; }
  const VertexSet& delta() const { return delta_; }
  int state_count() const { return static_cast<int>(2 * junctions_.size()); }

  // state = 2*junction_index + incoming_color
  int state_of(VertexId v, int incoming_color) const;
  VertexId state_vertex(int s) const { return junctions_[s / 2]; }
  int state_color(int s) const { return s % 2; }

  struct Transition {
    int to;
    PluggedEdge via;
  };

  const std::vector<Transition>& transitions(int s) const { return out_[s]; }

  /// Single edges running between two symmetric-difference vertices.
  const std::vector<PluggedEdge>& direct_edges() const { return direct_; }
  /// Entry edges: source in the symmetric difference, target a junction.
  const std::vector<PluggedEdge>& entry_edges() const { return entries_; }
  /// state -> edges leaving the junction into the symmetric difference.
  const std::vector<std::vector<PluggedEdge>>& exit_edges() const {
    return exits_;
  }

  int entry_state(PluggedEdge e) const;

  std::vector<char> reachable_states() const;
  std::vector<char> coreachable_states() const;

  /// A cycle among the allowed states, as its edge sequence, if one exists.
  std::optional<Path> find_cycle(const std::vector<char>& allowed) const;

 private:
  const WeightedGraph& f_;
  const WeightedGraph& g_;
  VertexSet junctions_;
  VertexSet delta_;
  std::vector<std::vector<Transition>> out_;
  std::vector<PluggedEdge> direct_;
  std::vector<PluggedEdge> entries_;
  std::vector<std::vector<PluggedEdge>> exits_;
};

/// True iff some alternating cycle of F ⫶ G exists at all.
bool has_alternating_cycle(const WeightedGraph& f, const WeightedGraph& g);

/// True iff the edge set of F::G is infinite: some alternating cycle lies on
/// an alternating path between two symmetric-difference vertices.
bool has_divergent_composition(const WeightedGraph& f, const WeightedGraph& g);

/// All alternating paths of F ⫶ G with source and target in the symmetric
/// difference, in deterministic order. Throws Divergent when infinite.
std::vector<Path> alternating_paths(const WeightedGraph& f,
                                    const WeightedGraph& g);

/// The execution F::G. Throws Divergent when the path set is infinite.
WeightedGraph execute(const WeightedGraph& f, const WeightedGraph& g);

struct CircuitEnumeration {
  std::vector<Circuit> circuits;  // alternating 1-circuits, length <= bound
  bool complete;  // true iff no 1-circuit of any length was left out
};

/// Enumerates the alternating 1-circuits of F ⫶ G of length at most
/// `max_length` (each once, by canonical representative). Completeness is
/// decided on the junction automaton: the 1-circuit set is finite iff every
/// strongly connected component is a single simple cycle, in which case the
/// 1-circuits are exactly those cycles.
CircuitEnumeration circuits_bounded(const WeightedGraph& f,
                                    const WeightedGraph& g, long max_length);

}  // namespace goi

#endif

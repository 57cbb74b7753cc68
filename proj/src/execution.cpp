#include "goi/execution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace goi {

namespace {

std::string describe_cycle(const Plugging& pl, const Path& cycle) {
  std::ostringstream out;
  out << "cycle";
  for (PluggedEdge e : cycle) {
    out << " [" << (e.color == 0 ? "L" : "R") << e.index << "] "
        << pl.src(e) << "->" << pl.tgt(e);
  }
  return out.str();
}

}  // namespace

JunctionAutomaton::JunctionAutomaton(const WeightedGraph& f,
                                     const WeightedGraph& g)
    : f_(f), g_(g) {
  junctions_ = set_intersection(f.vertices, g.vertices);
  delta_ = set_symmetric_difference(f.vertices, g.vertices);
  out_.resize(state_count());
  exits_.resize(state_count());

  auto classify = [&](const std::vector<Edge>& edges, int color) {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const Edge& e = edges[i];
      PluggedEdge pe{color, i};
      bool src_junction = contains(junctions_, e.src);
      bool tgt_junction = contains(junctions_, e.tgt);
      if (!src_junction && !tgt_junction) {
        direct_.push_back(pe);
      } else if (!src_junction) {
        entries_.push_back(pe);
      }
      if (src_junction) {
        // usable after arriving at src by an edge of the other color
        int from = state_of(e.src, 1 - color);
        if (tgt_junction) {
          out_[from].push_back({state_of(e.tgt, color), pe});
        } else {
          exits_[from].push_back(pe);
        }
      }
    }
  };
  classify(f.edges, 0);
  classify(g.edges, 1);
}

int JunctionAutomaton::state_of(VertexId v, int incoming_color) const {
  auto it = std::lower_bound(junctions_.begin(), junctions_.end(), v);
  return static_cast<int>(2 * (it - junctions_.begin())) + incoming_color;
}

int JunctionAutomaton::entry_state(PluggedEdge e) const {
  const Edge& edge = e.color == 0 ? f_.edges[e.index] : g_.edges[e.index];
  return state_of(edge.tgt, e.color);
}

std::vector<char> JunctionAutomaton::reachable_states() const {
  std::vector<char> seen(state_count(), 0);
  std::vector<int> stack;
  for (PluggedEdge e : entries_) {
    int s = entry_state(e);
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (const Transition& t : out_[s]) {
      if (!seen[t.to]) {
        seen[t.to] = 1;
        stack.push_back(t.to);
      }
    }
  }
  return seen;
}

std::vector<char> JunctionAutomaton::coreachable_states() const {
  std::vector<std::vector<int>> rev(state_count());
  for (int s = 0; s < state_count(); ++s) {
    for (const Transition& t : out_[s]) rev[t.to].push_back(s);
  }
  std::vector<char> seen(state_count(), 0);
  std::vector<int> stack;
  for (int s = 0; s < state_count(); ++s) {
    if (!exits_[s].empty() && !seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int p : rev[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

std::optional<Path> JunctionAutomaton::find_cycle(
    const std::vector<char>& allowed) const {
  // iterative DFS with colors: 0 unseen, 1 on stack, 2 done
  std::vector<char> mark(state_count(), 0);
  std::vector<int> parent(state_count(), -1);
  std::vector<PluggedEdge> parent_edge(state_count(), PluggedEdge{0, 0});
  for (int root = 0; root < state_count(); ++root) {
    if (!allowed[root] || mark[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [s, next] = stack.back();
      if (next < out_[s].size()) {
        const Transition& t = out_[s][next++];
        if (!allowed[t.to]) continue;
        if (mark[t.to] == 1) {
          // unwind the stack from s back to t.to
          Path cycle{t.via};
          int cur = s;
          while (cur != t.to) {
            cycle.push_back(parent_edge[cur]);
            cur = parent[cur];
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        if (mark[t.to] == 0) {
          mark[t.to] = 1;
          parent[t.to] = s;
          parent_edge[t.to] = t.via;
          stack.push_back({t.to, 0});
        }
      } else {
        mark[s] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool has_alternating_cycle(const WeightedGraph& f, const WeightedGraph& g) {
  JunctionAutomaton aut(f, g);
  std::vector<char> all(aut.state_count(), 1);
  return aut.find_cycle(all).has_value();
}

bool has_divergent_composition(const WeightedGraph& f,
                               const WeightedGraph& g) {
  JunctionAutomaton aut(f, g);
  std::vector<char> reach = aut.reachable_states();
  std::vector<char> coreach = aut.coreachable_states();
  std::vector<char> useful(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) useful[s] = reach[s] && coreach[s];
  return aut.find_cycle(useful).has_value();
}

std::vector<Path> alternating_paths(const WeightedGraph& f,
                                    const WeightedGraph& g) {
  JunctionAutomaton aut(f, g);
  Plugging pl{f, g};
  std::vector<char> reach = aut.reachable_states();
  std::vector<char> coreach = aut.coreachable_states();
  std::vector<char> useful(aut.state_count());
  for (int s = 0; s < aut.state_count(); ++s) useful[s] = reach[s] && coreach[s];
  if (auto cycle = aut.find_cycle(useful)) {
    throw Divergent("infinite path set: " + describe_cycle(pl, *cycle));
  }

  // Group starting edges by source vertex so the output is ordered by
  // (source vertex, then discovery order).
  std::vector<Path> result;
  std::map<VertexId, std::vector<PluggedEdge>> starts;
  for (PluggedEdge e : aut.direct_edges()) starts[pl.src(e)].push_back(e);
  for (PluggedEdge e : aut.entry_edges()) starts[pl.src(e)].push_back(e);
  for (auto& [v, edges] : starts) std::sort(edges.begin(), edges.end());

  Path current;
  // Depth-first over coreachable junction states; acyclic by the check above.
  auto extend = [&](auto&& self, int state) -> void {
    for (PluggedEdge e : aut.exit_edges()[state]) {
      current.push_back(e);
      result.push_back(current);
      current.pop_back();
    }
    for (const auto& t : aut.transitions(state)) {
      if (!coreach[t.to]) continue;
      current.push_back(t.via);
      self(self, t.to);
      current.pop_back();
    }
  };

  for (auto& [v, edges] : starts) {
    for (PluggedEdge e : edges) {
      current.assign(1, e);
      if (contains(aut.delta(), pl.tgt(e))) {
        result.push_back(current);
      } else {
        int s = aut.entry_state(e);
        if (coreach[s]) extend(extend, s);
      }
    }
  }
  return result;
}

WeightedGraph execute(const WeightedGraph& f, const WeightedGraph& g) {
  Plugging pl{f, g};
  std::vector<Path> paths = alternating_paths(f, g);
  WeightedGraph out;
  out.vertices = set_symmetric_difference(f.vertices, g.vertices);
  out.edges.reserve(paths.size());
  for (const Path& p : paths) {
    out.edges.push_back(
        Edge{path_source(pl, p), path_target(pl, p), path_weight(pl, p)});
  }
  return out;
}

namespace {

struct SccAnalysis {
  bool finitely_many_circuits;
  long longest_simple_cycle;  // 0 when none
};

// Tarjan over the junction automaton. A component supports finitely many
// 1-circuits iff it is a single simple cycle (edge count == state count);
// those cycles are then the only 1-circuits.
SccAnalysis analyse_sccs(const JunctionAutomaton& aut) {
  int n = aut.state_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int state;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& fr = call.back();
      const auto& ts = aut.transitions(fr.state);
      if (fr.child < ts.size()) {
        int to = ts[fr.child++].to;
        if (index[to] == -1) {
          index[to] = low[to] = next_index++;
          stack.push_back(to);
          on_stack[to] = 1;
          call.push_back({to, 0});
        } else if (on_stack[to]) {
          low[fr.state] = std::min(low[fr.state], index[to]);
        }
      } else {
        if (low[fr.state] == index[fr.state]) {
          while (true) {
            int v = stack.back();
            stack.pop_back();
            on_stack[v] = 0;
            comp[v] = comp_count;
            if (v == fr.state) break;
          }
          ++comp_count;
        }
        call.pop_back();
        if (!call.empty()) {
          low[call.back().state] =
              std::min(low[call.back().state], low[fr.state]);
        }
      }
    }
  }

  std::vector<long> states_in(comp_count, 0), edges_in(comp_count, 0);
  std::vector<char> has_loop(comp_count, 0);
  for (int s = 0; s < n; ++s) {
    ++states_in[comp[s]];
    for (const auto& t : aut.transitions(s)) {
      if (comp[t.to] == comp[s]) {
        ++edges_in[comp[s]];
        if (t.to == s) has_loop[comp[s]] = 1;
      }
    }
  }

  SccAnalysis res{true, 0};
  for (int c = 0; c < comp_count; ++c) {
    bool nontrivial = states_in[c] >= 2 || has_loop[c];
    if (!nontrivial) continue;
    if (edges_in[c] != states_in[c]) {
      res.finitely_many_circuits = false;
    } else {
      res.longest_simple_cycle =
          std::max(res.longest_simple_cycle, states_in[c]);
    }
  }
  return res;
}

}  // namespace

CircuitEnumeration circuits_bounded(const WeightedGraph& f,
                                    const WeightedGraph& g, long max_length) {
  if (max_length < 1) throw InputError("circuit length bound must be >= 1");
  Plugging pl{f, g};
  VertexSet junctions = set_intersection(f.vertices, g.vertices);

  // Circuit edges run between junctions only.
  std::vector<PluggedEdge> universe;
  auto collect = [&](const std::vector<Edge>& edges, int color) {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (contains(junctions, edges[i].src) &&
          contains(junctions, edges[i].tgt)) {
        universe.push_back(PluggedEdge{color, i});
      }
    }
  };
  collect(f.edges, 0);
  collect(g.edges, 1);
  std::sort(universe.begin(), universe.end());

  // out-adjacency over the restricted universe
  std::map<std::pair<VertexId, int>, std::vector<PluggedEdge>> out;
  for (PluggedEdge e : universe) out[{pl.src(e), e.color}].push_back(e);

  std::set<Path> found;
  Path walk;
  // Walks starting at the minimal edge of the cycle; every later edge must
  // compare >= the start in the (color, index) order.
  auto dfs = [&](auto&& self, PluggedEdge start, VertexId at,
                 int next_color) -> void {
    if (at == pl.src(start) && walk.size() % 2 == 0 &&
        walk.back().color != start.color) {
      if (cycle_period(walk) == 1) found.insert(canonical_rotation(walk));
    }
    if (static_cast<long>(walk.size()) >= max_length) return;
    auto it = out.find({at, next_color});
    if (it == out.end()) return;
    for (PluggedEdge e : it->second) {
      if (e < start) continue;
      walk.push_back(e);
      self(self, start, pl.tgt(e), 1 - next_color);
      walk.pop_back();
    }
  };

  for (PluggedEdge start : universe) {
    walk.assign(1, start);
    dfs(dfs, start, pl.tgt(start), 1 - start.color);
  }

  JunctionAutomaton aut(f, g);
  SccAnalysis scc = analyse_sccs(aut);
  bool complete =
      scc.finitely_many_circuits && scc.longest_simple_cycle <= max_length;

  CircuitEnumeration result;
  result.complete = complete;
  for (const Path& p : found) result.circuits.push_back(Circuit{p, 1});
  return result;
}

}  // namespace goi

#include "goi/matrix.hpp"

#include <algorithm>

#include "goi/execution.hpp"

namespace goi {

RatMatrix zero_matrix(VertexSet index) {
  RatMatrix m;
  m.index = std::move(index);
  m.a.assign(m.index.size() * m.index.size(), Rat(0));
  return m;
}

RatMatrix identity_matrix(VertexSet index) {
  RatMatrix m = zero_matrix(std::move(index));
  for (std::size_t i = 0; i < m.n(); ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  if (a.index != b.index) throw CarrierMismatch("matrix index mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += b.a[i];
  return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.index != b.index) throw CarrierMismatch("matrix index mismatch");
  std::size_t n = a.n();
  RatMatrix out = zero_matrix(a.index);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j) == 0) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix mat_scale(const Rat& c, const RatMatrix& a) {
  RatMatrix out = a;
  for (Rat& x : out.a) x *= c;
  return out;
}

RatMatrix embed(const RatMatrix& a, const VertexSet& index) {
  RatMatrix out = zero_matrix(index);
  std::vector<std::size_t> pos(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    auto it = std::lower_bound(index.begin(), index.end(), a.index[i]);
    if (it == index.end() || *it != a.index[i]) {
      throw CarrierMismatch("embedding index does not cover the matrix");
    }
    pos[i] = static_cast<std::size_t>(it - index.begin());
  }
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      out.at(pos[i], pos[j]) = a.at(i, j);
    }
  }
  return out;
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  std::size_t n = a.n();
  BoolMatrix out;
  out.index = a.index;
  out.a.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.at(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.at(k, j)) out.at(i, j) = 1;
      }
    }
  }
  return out;
}

RatMatrix aggregate(const WeightedGraph& g) {
  RatMatrix m = zero_matrix(g.vertices);
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(m.index.begin(), m.index.end(), v) - m.index.begin());
  };
  for (const Edge& e : g.edges) m.at(pos(e.src), pos(e.tgt)) += e.weight;
  return m;
}

BoolMatrix connectivity(const WeightedGraph& g) {
  BoolMatrix m;
  m.index = g.vertices;
  m.a.assign(m.n() * m.n(), 0);
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(m.index.begin(), m.index.end(), v) - m.index.begin());
  };
  for (const Edge& e : g.edges) m.at(pos(e.src), pos(e.tgt)) = 1;
  return m;
}

RatMatrix aggregate_sliced(const SlicedGraph& f) {
  RatMatrix out = zero_matrix(f.carrier);
  for (const Slice& s : f.slices) {
    out = mat_add(out, mat_scale(s.coeff, aggregate(s.graph)));
  }
  return out;
}

bool bool_nilpotent(const BoolMatrix& m) {
  std::size_t n = m.n();
  // nilpotent iff the digraph is acyclic
  std::vector<char> mark(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != 0) continue;
    stack.push_back({root, 0});
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [v, j] = stack.back();
      while (j < n && !m.at(v, j)) ++j;
      if (j == n) {
        mark[v] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t to = j++;
      if (mark[to] == 1) return false;
      if (mark[to] == 0) {
        mark[to] = 1;
        stack.push_back({to, 0});
      }
    }
  }
  return true;
}

bool star_nilpotent(const SlicedGraph& a, const SlicedGraph& b) {
  if (a.carrier != b.carrier) {
    throw CarrierMismatch("star product requires a common carrier");
  }
  for (const Slice& sa : a.slices) {
    BoolMatrix ca = connectivity(sa.graph);
    for (const Slice& sb : b.slices) {
      if (!bool_nilpotent(bool_mul(ca, connectivity(sb.graph)))) return false;
    }
  }
  return true;
}

Inversion invert(const RatMatrix& m) {
  std::size_t n = m.n();
  RatMatrix work = m;
  RatMatrix inv = identity_matrix(m.index);
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Inversion{true, Rat(0), {}};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
      d = -d;
    }
    Rat p = work.at(col, col);
    d *= p;
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.at(i, col) == 0) continue;
      Rat factor = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= factor * work.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return Inversion{false, d, inv};
}

Rat det(const RatMatrix& m) {
  std::size_t n = m.n();
  RatMatrix work = m;
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
      }
      d = -d;
    }
    Rat p = work.at(col, col);
    d *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work.at(i, col) == 0) continue;
      Rat factor = work.at(i, col) / p;
      for (std::size_t j = col; j < n; ++j) {
        work.at(i, j) -= factor * work.at(col, j);
      }
    }
  }
  return d;
}

namespace {

RatMatrix i_minus(const RatMatrix& m) {
  RatMatrix out = m;
  for (Rat& x : out.a) x = -x;
  for (std::size_t i = 0; i < out.n(); ++i) out.at(i, i) += 1;
  return out;
}

bool nonnegative(const RatMatrix& m) {
  for (const Rat& x : m.a) {
    if (x < 0) return false;
  }
  return true;
}

BoolMatrix support(const RatMatrix& m) {
  BoolMatrix b;
  b.index = m.index;
  b.a.assign(m.a.size(), 0);
  for (std::size_t i = 0; i < m.a.size(); ++i) b.a[i] = m.a[i] != 0;
  return b;
}

}  // namespace

bool neumann_converges(const RatMatrix& m) {
  if (bool_nilpotent(support(m))) return true;
  Inversion inv = invert(i_minus(m));
  return !inv.singular && nonnegative(inv.inv);
}

bool spectral_radius_below(const RatMatrix& m, const Rat& bound) {
  if (bound <= 0) return false;
  return neumann_converges(mat_scale(Rat(1) / bound, m));
}

ExtReal logdet_measure(const WeightedGraph& f, const WeightedGraph& g) {
  VertexSet all = set_union(f.vertices, g.vertices);
  RatMatrix m = mat_mul(embed(aggregate(f), all), embed(aggregate(g), all));
  if (bool_nilpotent(support(m))) {
    return ExtReal::neg_log(det(i_minus(m)));
  }
  Inversion inv = invert(i_minus(m));
  if (inv.singular || !nonnegative(inv.inv) || inv.det <= 0) {
    return ExtReal::inf();
  }
  return ExtReal::neg_log(inv.det);
}

RatMatrix execute_aggregated(const WeightedGraph& f, const WeightedGraph& g) {
  JunctionAutomaton aut(f, g);
  Plugging pl{f, g};
  const VertexSet& dv = aut.delta();
  auto dpos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(dv.begin(), dv.end(), v) - dv.begin());
  };

  RatMatrix result = zero_matrix(dv);
  for (PluggedEdge e : aut.direct_edges()) {
    result.at(dpos(pl.src(e)), dpos(pl.tgt(e))) += pl.edge(e).weight;
  }

  // Only states both entry-reachable and exit-coreachable can occur on a
  // completed path; restricting first keeps irrelevant junction cycles from
  // blocking the solve.
  std::vector<char> reach = aut.reachable_states();
  std::vector<char> coreach = aut.coreachable_states();
  std::vector<int> useful;
  std::vector<int> pos(aut.state_count(), -1);
  for (int s = 0; s < aut.state_count(); ++s) {
    if (reach[s] && coreach[s]) {
      pos[s] = static_cast<int>(useful.size());
      useful.push_back(s);
    }
  }
  std::size_t k = useful.size();
  if (k == 0) return result;

  std::vector<Rat> n_mat(k * k, Rat(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& t : aut.transitions(useful[i])) {
      if (pos[t.to] >= 0) {
        n_mat[i * k + pos[t.to]] += pl.edge(t.via).weight;
      }
    }
  }

  RatMatrix n;
  n.index.resize(k);
  for (std::size_t i = 0; i < k; ++i) n.index[i] = static_cast<VertexId>(i);
  n.a = std::move(n_mat);

  if (!neumann_converges(n)) {
    throw Divergent("aggregated execution diverges: junction series has "
                    "spectral radius >= 1");
  }
  Inversion inv = invert(i_minus(n));

  // entry[u][s] and exit[s][w] vectors
  std::vector<Rat> entry(dv.size() * k, Rat(0));
  for (PluggedEdge e : aut.entry_edges()) {
    int s = aut.entry_state(e);
    if (pos[s] >= 0) {
      entry[dpos(pl.src(e)) * k + pos[s]] += pl.edge(e).weight;
    }
  }
  std::vector<Rat> exit(k * dv.size(), Rat(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (PluggedEdge e : aut.exit_edges()[useful[i]]) {
      exit[i * dv.size() + dpos(pl.tgt(e))] += pl.edge(e).weight;
    }
  }

  for (std::size_t u = 0; u < dv.size(); ++u) {
    for (std::size_t i = 0; i < k; ++i) {
      if (entry[u * k + i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (inv.inv.at(i, j) == 0) continue;
        Rat through = entry[u * k + i] * inv.inv.at(i, j);
        for (std::size_t w = 0; w < dv.size(); ++w) {
          if (exit[j * dv.size() + w] == 0) continue;
          result.at(u, w) += through * exit[j * dv.size() + w];
        }
      }
    }
  }
  return result;
}

}  // namespace goi

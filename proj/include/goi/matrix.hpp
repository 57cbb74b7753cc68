#ifndef GOI_MATRIX_HPP
#define GOI_MATRIX_HPP

#include <optional>
#include <vector>

#include "goi/ext_real.hpp"
#include "goi/sliced.hpp"

namespace goi {

/// Square rational matrix indexed by a sorted vertex list.
struct RatMatrix {
  VertexSet index;
  std::vector<Rat> a;  // row-major, n*n

  std::size_t n() const { return index.size(); }
  Rat& at(std::size_t i, std::size_t j) { return a[i * n() + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * n() + j]; }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix zero_matrix(VertexSet index);
RatMatrix identity_matrix(VertexSet index);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const Rat& c, const RatMatrix& a);
/// Same entries re-indexed over a superset, zero elsewhere.
RatMatrix embed(const RatMatrix& a, const VertexSet& index);

struct BoolMatrix {
  VertexSet index;
  std::vector<char> a;

  std::size_t n() const { return index.size(); }
  char& at(std::size_t i, std::size_t j) { return a[i * n() + j]; }
  char at(std::size_t i, std::size_t j) const { return a[i * n() + j]; }
};

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);

/// Weight matrix of the aggregated simple graph: entry (v, w) sums the
/// weights of the parallel edges from v to w.
RatMatrix aggregate(const WeightedGraph& g);

/// Connectivity matrix [G]: entry true iff some edge runs from v to w.
BoolMatrix connectivity(const WeightedGraph& g);

/// Sum of coefficient-scaled aggregated slices.
RatMatrix aggregate_sliced(const SlicedGraph& f);

/// Nilpotency of a boolean matrix, decided as acyclicity of its digraph.
bool bool_nilpotent(const BoolMatrix& m);

/// [A] ⋆ [B] nilpotent: every slice-pair product [A_i][B_j] is nilpotent.
/// Requires a common carrier.
bool star_nilpotent(const SlicedGraph& a, const SlicedGraph& b);

struct Inversion {
  bool singular;
  Rat det;        // valid when !singular
  RatMatrix inv;  // valid when !singular
};

/// Exact Gauss-Jordan inversion with the determinant as a byproduct.
Inversion invert(const RatMatrix& m);

Rat det(const RatMatrix& m);

/// Decides rho(M) < 1 for entrywise-nonnegative M, exactly: I - M must be
/// invertible with entrywise-nonnegative inverse (the M-matrix criterion).
bool neumann_converges(const RatMatrix& m);

/// Decides rho(M) < bound for nonnegative M and positive rational bound.
bool spectral_radius_below(const RatMatrix& m, const Rat& bound);

/// -log det(I - M_F M_G) over the union vertex set when the series
/// converges, +∞ otherwise. Nilpotent products short-circuit to the exact
/// determinant.
ExtReal logdet_measure(const WeightedGraph& f, const WeightedGraph& g);

/// Aggregated execution: entry (u, v) sums the weights of all alternating
/// paths from u to v, computed by an exact linear solve on the junction
/// automaton (restricted to states that can occur on a completed path).
/// Covers the convergent-infinite case; throws Divergent when the path
/// weight series diverges.
RatMatrix execute_aggregated(const WeightedGraph& f, const WeightedGraph& g);

}  // namespace goi

#endif

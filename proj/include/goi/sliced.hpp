#ifndef GOI_SLICED_HPP
#define GOI_SLICED_HPP

#include <vector>

#include "goi/graph.hpp"

namespace goi {

/// One weighted graph inside a formal sum. Coefficients are arbitrary
/// rationals (zero and negative allowed); the slice graph's vertex set must
/// equal the carrier.
struct Slice {
  Rat coeff;
  WeightedGraph graph;
};

struct SlicedGraph {
  VertexSet carrier;
  std::vector<Slice> slices;  // empty family allowed
};

SlicedGraph make_sliced(VertexSet carrier, std::vector<Slice> slices);

/// Single slice with coefficient 1.
SlicedGraph single_slice(WeightedGraph g);

/// The empty family (unit value 0).
SlicedGraph empty_family(VertexSet carrier);

/// Sum of the slice coefficients, 1(F).
Rat unit_value(const SlicedGraph& f);

/// Slicewise execution with coefficient products. Disjoint carriers give the
/// sliced union. Throws Divergent if any slice pair diverges.
SlicedGraph execute_sliced(const SlicedGraph& f, const SlicedGraph& g);

/// Concatenation F + λ·G on a common carrier.
SlicedGraph combine_sliced(const SlicedGraph& f, const Rat& lambda,
                           const SlicedGraph& g);

SlicedGraph scale_sliced(const Rat& lambda, const SlicedGraph& f);

/// Carrier renaming; the map must be defined and injective on the carrier.
SlicedGraph delocate_sliced(const SlicedGraph& f, const VertexMap& phi);

}  // namespace goi

#endif

#include "goi/sliced.hpp"

#include "goi/execution.hpp"

namespace goi {

SlicedGraph make_sliced(VertexSet carrier, std::vector<Slice> slices) {
  for (const Slice& s : slices) {
    if (s.graph.vertices != carrier) {
      throw InputError("slice graph vertex set differs from the carrier");
    }
  }
  return SlicedGraph{std::move(carrier), std::move(slices)};
}

SlicedGraph single_slice(WeightedGraph g) {
  SlicedGraph out;
  out.carrier = g.vertices;
  out.slices.push_back(Slice{Rat(1), std::move(g)});
  return out;
}

SlicedGraph empty_family(VertexSet carrier) {
  return SlicedGraph{std::move(carrier), {}};
}

Rat unit_value(const SlicedGraph& f) {
  Rat sum(0);
  for (const Slice& s : f.slices) sum += s.coeff;
  return sum;
}

SlicedGraph execute_sliced(const SlicedGraph& f, const SlicedGraph& g) {
  SlicedGraph out;
  out.carrier = set_symmetric_difference(f.carrier, g.carrier);
  for (const Slice& fs : f.slices) {
    for (const Slice& gs : g.slices) {
      out.slices.push_back(
          Slice{fs.coeff * gs.coeff, execute(fs.graph, gs.graph)});
    }
  }
  return out;
}

SlicedGraph combine_sliced(const SlicedGraph& f, const Rat& lambda,
                           const SlicedGraph& g) {
  if (f.carrier != g.carrier) {
    throw CarrierMismatch("sliced sum requires a common carrier");
  }
  SlicedGraph out = f;
  for (const Slice& s : g.slices) {
    out.slices.push_back(Slice{lambda * s.coeff, s.graph});
  }
  return out;
}

SlicedGraph scale_sliced(const Rat& lambda, const SlicedGraph& f) {
  SlicedGraph out = f;
  for (Slice& s : out.slices) s.coeff *= lambda;
  return out;
}

SlicedGraph delocate_sliced(const SlicedGraph& f, const VertexMap& phi) {
  SlicedGraph out;
  out.carrier = map_vertex_set(f.carrier, phi);
  out.slices.reserve(f.slices.size());
  for (const Slice& s : f.slices) {
    out.slices.push_back(Slice{s.coeff, delocate_graph(s.graph, phi)});
  }
  return out;
}

}  // namespace goi

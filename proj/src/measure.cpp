#include "goi/measure.hpp"

#include "goi/execution.hpp"
#include "goi/matrix.hpp"

namespace goi {

namespace {

ExtReal apply_m(const MeasureParam& p, const Rat& weight) {
  if (p.table) {
    auto it = p.table->find(weight);
    if (it == p.table->end()) {
      throw InputError("measure table has no entry for weight " +
                       rat_string(weight));
    }
    return it->second;
  }
  // built-in -log(1-x); x = 1 gives ∞
  if (weight == 1) return ExtReal::inf();
  return ExtReal::neg_log(Rat(1) - weight);
}

}  // namespace

MeasureResult measure_graphs(const WeightedGraph& f, const WeightedGraph& g,
                             const MeasureParam& p) {
  switch (p.kind) {
    case MeasureParam::Kind::AlwaysInfinite:
      return {has_alternating_cycle(f, g) ? ExtReal::inf() : ExtReal(0), true};
    case MeasureParam::Kind::LogDet:
      return {logdet_measure(f, g), true};
    case MeasureParam::Kind::Truncated: {
      CircuitEnumeration cs = circuits_bounded(f, g, p.max_length);
      Plugging pl{f, g};
      ExtReal sum;
      for (const Circuit& c : cs.circuits) {
        sum += apply_m(p, path_weight(pl, c.representative));
        if (sum.is_inf()) break;
      }
      // A partial sum that already reached ∞ is final: the missing terms
      // are nonnegative.
      return {sum, cs.complete || sum.is_inf()};
    }
  }
  throw Error("unreachable");
}

MeasureResult measure_sliced(const SlicedGraph& f, const SlicedGraph& g,
                             const MeasureParam& p) {
  ExtReal total;
  bool exact = true;
  for (const Slice& fs : f.slices) {
    for (const Slice& gs : g.slices) {
      MeasureResult r = measure_graphs(fs.graph, gs.graph, p);
      if (r.value.is_inf()) return {ExtReal::inf(), true};
      if (!r.exact) exact = false;
      total += r.value.scaled(fs.coeff * gs.coeff);
    }
  }
  return {total, exact};
}

}  // namespace goi

#ifndef GOI_MEASURE_HPP
#define GOI_MEASURE_HPP

#include <map>
#include <optional>

#include "goi/ext_real.hpp"
#include "goi/sliced.hpp"

namespace goi {

/// Parameter m of the measurement ⟦F,G⟧ = Σ m(weight) over alternating
/// 1-circuits, with its evaluation strategy:
///   - LogDet: m(x) = -log(1-x), evaluated in closed form through
///     -log det(I - M_F M_G).
///   - AlwaysInfinite: m(x) = ∞; the measurement is 0 or ∞ by a cycle test.
///   - Truncated: explicit circuit enumeration up to `max_length`, applying
///     either the built-in -log(1-x) or a user table on ]0,1].
struct MeasureParam {
  enum class Kind { LogDet, AlwaysInfinite, Truncated };

  Kind kind = Kind::LogDet;
  long max_length = 0;
  std::optional<std::map<Rat, ExtReal>> table;  // Truncated only

  static MeasureParam logdet() { return {}; }
  static MeasureParam always_infinite() {
    MeasureParam p;
    p.kind = Kind::AlwaysInfinite;
    return p;
  }
  static MeasureParam truncated(long max_length) {
    MeasureParam p;
    p.kind = Kind::Truncated;
    p.max_length = max_length;
    return p;
  }
  static MeasureParam truncated_table(long max_length,
                                      std::map<Rat, ExtReal> table) {
    for (const auto& [w, v] : table) {
      if (!v.is_inf() &&
          (!v.is_rational() || v.rational_part() < 0)) {
        throw InputError("measure table values must be nonnegative or inf");
      }
    }
    MeasureParam p = truncated(max_length);
    p.table = std::move(table);
    return p;
  }
};

struct MeasureResult {
  ExtReal value;
  bool exact;  // false only for a truncated sum with incomplete enumeration
};

MeasureResult measure_graphs(const WeightedGraph& f, const WeightedGraph& g,
                             const MeasureParam& p);

/// Bilinear extension Σᵢⱼ αᵢβⱼ ⟦Fᵢ,Gⱼ⟧; any infinite component makes the
/// whole measurement ∞ regardless of coefficients.
MeasureResult measure_sliced(const SlicedGraph& f, const SlicedGraph& g,
                             const MeasureParam& p);

}  // namespace goi

#endif

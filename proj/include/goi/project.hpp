#ifndef GOI_PROJECT_HPP
#define GOI_PROJECT_HPP

#include "goi/measure.hpp"

namespace goi {

/// A wager together with a sliced graph. The wager lives in R ∪ {∞} with the
/// absorbing arithmetic of ExtReal (0·∞ = ∞).
struct Project {
  ExtReal wager;
  SlicedGraph body;

  const VertexSet& carrier() const { return body.carrier; }
};

Project make_project(ExtReal wager, SlicedGraph body);

/// 0_V = (0, one empty slice of coefficient 1 on V).
Project zero_project(VertexSet carrier);

/// The measurement ⟨a,b⟩ = a·1(B) + 1(A)·b + ⟦A,B⟧, defined for arbitrary
/// carriers. Throws InexactMeasure when the measure strategy cannot certify
/// the value.
ExtReal measurement(const Project& a, const Project& b, const MeasureParam& p);

/// Same-carrier measurement (the orthogonality pairing).
ExtReal pairing(const Project& a, const Project& b, const MeasureParam& p);

/// f::g = (⟨f,g⟩, F::G).
Project cut(const Project& f, const Project& g, const MeasureParam& p);

/// a⊗b = (a·1(B) + 1(A)·b, A ∪ B) on disjoint carriers.
Project tensor(const Project& a, const Project& b);

/// a + λ·b on a common carrier, λ ≠ 0.
Project linear_combine(const Project& a, const Rat& lambda, const Project& b);

/// λ·a = (λa, λA), λ ≠ 0.
Project scale_project(const Rat& lambda, const Project& a);

Project delocate(const Project& a, const VertexMap& phi);

/// Fax_φ: the weight-1 back-and-forth graph between a carrier and its
/// disjoint image, as a wager-free single-slice project.
Project fax(const VertexMap& phi);

/// a↑V = a ⊗ 0_V.
Project lift(const Project& a, const VertexSet& v);

/// ⟨a,b⟩ ∉ {0, ∞}.
bool orthogonal(const Project& a, const Project& b, const MeasureParam& p);

/// Orthogonality for m ≡ ∞: [A]⋆[B] nilpotent and 1(A)·b + 1(B)·a ∉ {0,∞}.
bool orth_nilpotency(const Project& a, const Project& b);

/// Equality used by tests: equal wagers and equal slice multisets, where a
/// slice is compared by (coefficient, aggregated weight matrix).
bool projects_equal_sliced(const Project& a, const Project& b);

/// Coarser equality: equal wagers and equal coefficient-weighted aggregated
/// bodies.
bool projects_equal_aggregated(const Project& a, const Project& b);

}  // namespace goi

#endif

#ifndef GOI_EXT_REAL_HPP
#define GOI_EXT_REAL_HPP

#include <map>
#include <string>

#include "goi/rational.hpp"

namespace goi {

/// An element of R ∪ {+∞} with exact arithmetic.
///
/// Finite values are kept in the form  q + Σ cᵢ·ln(bᵢ)  with q, cᵢ, bᵢ
/// rational and bᵢ > 0. Sums, differences and rational rescalings stay in
/// this form, so measured values built from -log determinants can be
/// compared exactly: the log part vanishes iff the cleared power product
/// Π bᵢ^{nᵢ} equals 1, and a nonzero rational never equals a combination
/// of logarithms of rationals.
///
/// Absorption rule: any sum and any product containing ∞ is ∞, including
/// 0·∞ = ∞.
class ExtReal {
 public:
  ExtReal() : rat_(0) {}
  ExtReal(const Rat& q) : rat_(q) {}
  ExtReal(long n) : rat_(n) {}

  static ExtReal inf() {
    ExtReal v;
    v.inf_ = true;
    return v;
  }

  /// coeff · ln(base); requires base > 0.
  static ExtReal log_term(const Rat& base, const Rat& coeff);

  /// -ln(x); the LogDet atom. Requires x > 0.
  static ExtReal neg_log(const Rat& x) { return log_term(x, Rat(-1)); }

  bool is_inf() const { return inf_; }
  bool is_zero() const;
  bool is_rational() const { return !inf_ && logs_.empty(); }
  const Rat& rational_part() const { return rat_; }
  const std::map<Rat, Rat>& log_part() const { return logs_; }

  ExtReal operator+(const ExtReal& o) const;
  ExtReal operator-(const ExtReal& o) const;
  ExtReal operator-() const;
  ExtReal& operator+=(const ExtReal& o) { return *this = *this + o; }

  /// Rational rescaling, with ∞ absorbing every coefficient (0·∞ = ∞).
  ExtReal scaled(const Rat& c) const;

  bool operator==(const ExtReal& o) const;
  bool operator!=(const ExtReal& o) const { return !(*this == o); }

  double to_double() const;
  std::string to_string() const;

 private:
  void put_log(const Rat& base, const Rat& coeff);

  bool inf_ = false;
  Rat rat_;
  std::map<Rat, Rat> logs_;  // base -> coefficient; base > 0, base != 1
};

inline ExtReal operator*(const Rat& c, const ExtReal& v) { return v.scaled(c); }
inline ExtReal operator*(const ExtReal& v, const Rat& c) { return v.scaled(c); }

}  // namespace goi

#endif

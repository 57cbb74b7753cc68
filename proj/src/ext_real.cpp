#include "goi/ext_real.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace goi {

namespace {

// Σ coeff·ln(base) = 0  iff  Π base^(coeff·L) = 1 for L clearing denominators.
bool log_combination_vanishes(const std::map<Rat, Rat>& terms) {
  if (terms.empty()) return true;
  Int lcm(1);
  for (const auto& [base, coeff] : terms) {
    Int l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
    lcm = l;
  }
  Rat product(1);
  for (const auto& [base, coeff] : terms) {
    Int e = coeff.get_num() * (lcm / coeff.get_den());
    if (!e.fits_slong_p()) {
      throw std::overflow_error("log-term exponent out of range");
    }
    product *= rat_pow(base, e.get_si());
  }
  return product == 1;
}

}  // namespace

ExtReal ExtReal::log_term(const Rat& base, const Rat& coeff) {
  if (base <= 0) throw std::domain_error("log of nonpositive rational");
  ExtReal v;
  v.put_log(base, coeff);
  return v;
}

void ExtReal::put_log(const Rat& base, const Rat& coeff) {
  if (base == 1 || coeff == 0) return;
  auto it = logs_.find(base);
  if (it == logs_.end()) {
    logs_.emplace(base, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) logs_.erase(it);
  }
}

bool ExtReal::is_zero() const {
  if (inf_) return false;
  if (rat_ != 0) return false;
  return log_combination_vanishes(logs_);
}

ExtReal ExtReal::operator+(const ExtReal& o) const {
  if (inf_ || o.inf_) return inf();
  ExtReal v;
  v.rat_ = rat_ + o.rat_;
  v.logs_ = logs_;
  for (const auto& [base, coeff] : o.logs_) v.put_log(base, coeff);
  return v;
}

ExtReal ExtReal::operator-() const {
  if (inf_) return inf();
  ExtReal v;
  v.rat_ = -rat_;
  for (const auto& [base, coeff] : logs_) v.logs_.emplace(base, -coeff);
  return v;
}

ExtReal ExtReal::operator-(const ExtReal& o) const { return *this + (-o); }

ExtReal ExtReal::scaled(const Rat& c) const {
  if (inf_) return inf();
  ExtReal v;
  v.rat_ = rat_ * c;
  if (c != 0) {
    for (const auto& [base, coeff] : logs_) v.logs_.emplace(base, coeff * c);
  }
  return v;
}

bool ExtReal::operator==(const ExtReal& o) const {
  if (inf_ != o.inf_) return false;
  if (inf_) return true;
  // A nonzero rational is never a rational combination of logs of rationals,
  // so the parts must match independently.
  if (rat_ != o.rat_) return false;
  std::map<Rat, Rat> diff = logs_;
  for (const auto& [base, coeff] : o.logs_) {
    auto it = diff.find(base);
    if (it == diff.end()) {
      diff.emplace(base, -coeff);
    } else {
      it->second -= coeff;
      if (it->second == 0) diff.erase(it);
    }
  }
  return log_combination_vanishes(diff);
}

double ExtReal::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  double v = rat_double(rat_);
  for (const auto& [base, coeff] : logs_) {
    v += rat_double(coeff) * std::log(rat_double(base));
  }
  return v;
}

std::string ExtReal::to_string() const {
  if (inf_) return "inf";
  std::ostringstream out;
  out << rat_string(rat_);
  for (const auto& [base, coeff] : logs_) {
    out << " + " << rat_string(coeff) << "*ln(" << rat_string(base) << ")";
  }
  return out.str();
}

}  // namespace goi

#include "goi/rational.hpp"

#include <stdexcept>

namespace goi {

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_double(const Rat& r) { return r.get_d(); }

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                            : static_cast<unsigned long>(-exp);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  if (exp < 0) std::swap(num, den);
  return make_rat(num, den);
}

}  // namespace goi

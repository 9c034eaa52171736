#pragma once

// Shared numeric kernel: arbitrary-precision integers and rationals on top of
// GMP, plus the Prob value type used by the chain tables. A Prob is either an
// exact rational or a double. Arithmetic stays exact while both operands are
// exact and degrades to double otherwise; a chain picks its mode once, from
// how its parameters were supplied ("3/4" stays rational, "0.75" goes float).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace bratteli {

using CountInt = mpz_class;
using Rat = mpq_class;

// Binomial coefficient with the zero convention outside 0 <= k <= n. The
// counting formulas rely on that convention instead of guarding call sites.
inline CountInt binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  CountInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline CountInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  CountInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

class Prob {
 public:
  Prob() : exact_(true) {}
  Prob(Rat r) : exact_(true), r_(std::move(r)) {}
  Prob(long num, long den) : exact_(true), r_(num, den) { r_.canonicalize(); }
  explicit Prob(double d) : exact_(false), d_(d) {}

  bool is_exact() const { return exact_; }
  const Rat& rat() const {
    if (!exact_) throw std::logic_error("rat() on a floating Prob");
    return r_;
  }
  double value() const { return exact_ ? r_.get_d() : d_; }
  bool is_zero() const { return exact_ ? r_ == 0 : d_ == 0.0; }

  friend Prob operator+(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return Prob(Rat(a.r_ + b.r_));
    return Prob(a.value() + b.value());
  }
  friend Prob operator-(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return Prob(Rat(a.r_ - b.r_));
    return Prob(a.value() - b.value());
  }
  friend Prob operator*(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return Prob(Rat(a.r_ * b.r_));
    return Prob(a.value() * b.value());
  }
  friend Prob operator/(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) {
      if (b.r_ == 0) throw std::domain_error("division by exact zero");
      return Prob(Rat(a.r_ / b.r_));
    }
    return Prob(a.value() / b.value());
  }
  friend bool operator==(const Prob& a, const Prob& b) {
    if (a.exact_ && b.exact_) return a.r_ == b.r_;
    return a.value() == b.value();
  }

  // Decimal-or-ratio rendering for tables and CSV: exact values print as
  // "num/den", floating values as shortest-roundtrip-ish %.17g.
  std::string str() const;

 private:
  bool exact_ = true;
  Rat r_;
  double d_ = 0.0;
};

// Parses a real-number command argument. "p/q" and plain integers give exact
// rationals; anything with a decimal point or exponent gives a double.
Prob parse_real(const std::string& s);

std::string rat_str(const Rat& r);

}  // namespace bratteli

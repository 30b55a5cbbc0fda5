#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qeuler/errors.hpp"

namespace qeuler {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.  Thin wrapper around GMP's mpq_class that adds
/// checked division, integer powers and the "num/den" text format used
/// throughout this project ("7" is accepted on input and normalised to
/// "7/1" on output).
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParameterError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "num/den" or a bare integer.  Whitespace is not accepted.
  static BigRational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Serialises as "num/den" in lowest terms, e.g. "-2/5", "7/1".
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }
  double to_double() const { return v_.get_d(); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw InvalidParameterError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline BigRational abs(const BigRational& r) {
  return r.sign() < 0 ? -r : r;
}

/// r^e for any integer e; e < 0 inverts first (r must be nonzero then).
BigRational pow(const BigRational& r, long e);

BigInt factorial(long n);

}  // namespace qeuler

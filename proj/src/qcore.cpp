#include "qeuler/qcore.hpp"

#include <ostream>

namespace qeuler {
namespace {

// strictly '-'? digit+ (mpz_set_str by itself would ignore whitespace)
bool plain_integer(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (const char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!plain_integer(num_part) || !plain_integer(den_part))
    throw InvalidParameterError("cannot parse rational: '" + std::string(text) +
                                "'");
  mpz_class num, den;
  mpz_set_str(num.get_mpz_t(), std::string(num_part).c_str(), 10);
  mpz_set_str(den.get_mpz_t(), std::string(den_part).c_str(), 10);
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
  return os << r.str();
}

BigRational pow(const BigRational& r, long e) {
  if (e == 0) return BigRational(1);
  if (e < 0) {
    if (r.is_zero()) throw InvalidParameterError("0 raised to a negative power");
    return pow(BigRational(r.den(), r.num()), -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(num, den);
}

BigInt factorial(long n) {
  if (n < 0) throw InvalidParameterError("factorial of a negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

EvalPoint EvalPoint::at_integer(const QValue& q, long n) {
  return EvalPoint(q, pow(q.value(), n));
}

BigRational q_bracket_int(long n, const QValue& q) {
  return (BigRational(1) - pow(q.value(), n)) / (BigRational(1) - q.value());
}

BigRational q_bracket_tau(const EvalPoint& pt) {
  return (BigRational(1) - pt.tau) / (BigRational(1) - pt.q.value());
}

BigRational q_shifted_factorial(const BigRational& a, const BigRational& base,
                                long n) {
  if (n < 0) throw InvalidParameterError("q-shifted factorial needs n >= 0");
  BigRational acc(1), ap(a);
  for (long i = 0; i < n; ++i) {
    acc *= BigRational(1) - ap;
    ap *= base;
  }
  return acc;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw InvalidParameterError("binomial needs n >= 0");
  if (k < 0 || k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::set<long> denominator_support(long m, long h, long k) {
  if (m < 0 || k < 0)
    throw InvalidParameterError("denominator_support needs m >= 0 and k >= 0");
  std::set<long> support;
  for (long l = 0; l <= m; ++l)
    for (long i = 0; i < k; ++i) support.insert(h + l - i);
  return support;
}

}  // namespace qeuler

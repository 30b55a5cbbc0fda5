#pragma once

#include <map>
#include <string>

#include "qeuler/qcore.hpp"

namespace qeuler {

/// Customisation point that lets the closed-form evaluators run over
/// different scalar types: exact rationals, plain doubles, and the
/// degree-tracking scalar used for identity certification.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRational> {
  static BigRational from_int(long n) { return BigRational(n); }
  static BigRational from_bigint(const BigInt& n) { return BigRational(n, BigInt(1)); }
  static BigRational from_rational(const BigRational& r) { return r; }
  static bool is_exact_zero(const BigRational& v) { return v.is_zero(); }
};

template <>
struct ScalarTraits<double> {
  static double from_int(long n) { return static_cast<double>(n); }
  static double from_bigint(const BigInt& n) { return n.get_d(); }
  static double from_rational(const BigRational& r) { return r.to_double(); }
  static bool is_exact_zero(double v) { return v == 0.0; }
};

/// s^e by repeated multiplication; e < 0 goes through 1/s.
template <class S>
S spow(const S& s, long e) {
  if (e < 0) return ScalarTraits<S>::from_int(1) / spow(s, -e);
  S acc = ScalarTraits<S>::from_int(1);
  S base = s;
  for (long bits = e; bits > 0; bits >>= 1) {
    if (bits & 1) acc = acc * base;
    if (bits > 1) base = base * base;
  }
  return acc;
}

/// Memoised powers q^e and denominator factors 1 + q^e for one base value.
/// Every formula in the family works with integer powers of a single q
/// (rebased arguments use (q^l)^e = q^{l e}), so one cache per grid value
/// serves an entire verification run.  one_plus() rejects a vanishing
/// factor, which for this scalar field can only happen through an invalid
/// base slipping past QValue.
template <class S>
class PowCache {
 public:
  explicit PowCache(S base) : base_(std::move(base)) {}

  const S& base() const { return base_; }

  const S& pow(long e) {
    auto it = pow_.find(e);
    if (it != pow_.end()) return it->second;
    return pow_.emplace(e, spow(base_, e)).first->second;
  }

  const S& one_plus(long e) {
    auto it = one_plus_.find(e);
    if (it != one_plus_.end()) return it->second;
    S v = ScalarTraits<S>::from_int(1) + pow(e);
    if (ScalarTraits<S>::is_exact_zero(v))
      throw PoleError("denominator factor 1 + q^e vanishes at e = " +
                          std::to_string(e),
                      e);
    return one_plus_.emplace(e, std::move(v)).first->second;
  }

 private:
  S base_;
  std::map<long, S> pow_;
  std::map<long, S> one_plus_;
};

/// The order-k closed form at base q^scale and argument tau:
///
///   (1 + q^s)^k / (1 - q^s)^m *
///       sum_{j=0}^{m} C(m,j) (-1)^j tau^j / prod_{i=0}^{k-1} (1 + q^{s(j+h-i)})
///
/// with s = scale.  k = 0 makes the product empty and the sum collapse to
/// the binomial expansion of ((1 - tau)/(1 - q^s))^m, i.e. the bare
/// bracket power, so the base case needs no special handling.
template <class S>
S euler_hk(PowCache<S>& q, long m, long h, long k, long scale, const S& tau) {
  if (m < 0 || k < 0)
    throw InvalidParameterError("closed form needs m >= 0 and k >= 0");
  const S one = ScalarTraits<S>::from_int(1);
  S sum = ScalarTraits<S>::from_int(0);
  S tau_j = one;
  for (long j = 0; j <= m; ++j) {
    S term = ScalarTraits<S>::from_bigint(binomial(m, j)) * tau_j;
    for (long i = 0; i < k; ++i) term = term / q.one_plus(scale * (j + h - i));
    sum = (j % 2 == 0) ? sum + term : sum - term;
    if (j < m) tau_j = tau_j * tau;
  }
  const S one_minus_qs = one - q.pow(scale);
  return spow(q.one_plus(scale), k) * sum / spow(one_minus_qs, m);
}

}  // namespace qeuler

#pragma once

#include <set>
#include <string>

#include "qeuler/rational.hpp"

namespace qeuler {

/// A rational deformation parameter with the values 0, 1 and -1 excluded:
/// 0 and 1 break the bracket [x]_q = (1-q^x)/(1-q), and -1 is the lone
/// rational value at which a factor 1 + q^e (e odd) can vanish.
class QValue {
 public:
  explicit QValue(BigRational q) : q_(std::move(q)) {
    if (q_.is_zero() || q_ == BigRational(1) || q_ == BigRational(-1))
      throw InvalidParameterError("q must avoid 0, 1 and -1, got " + q_.str());
  }
  const BigRational& value() const { return q_; }

 private:
  BigRational q_;
};

/// Evaluation point for the q-Euler family.  The argument x enters every
/// formula only through tau = q^x, so the point stores tau directly; this
/// keeps rational arguments exact (x = n integer <-> tau = q^n) and makes
/// shifted/rebased arguments a matter of multiplying tau by powers of q.
struct EvalPoint {
  QValue q;
  BigRational tau;

  EvalPoint(QValue q_in, BigRational tau_in)
      : q(std::move(q_in)), tau(std::move(tau_in)) {
    if (tau.is_zero())
      throw InvalidParameterError("evaluation point needs tau = q^x != 0");
  }

  /// The point with integer argument x = n, i.e. tau = q^n.
  static EvalPoint at_integer(const QValue& q, long n);
};

/// [n]_q = (1 - q^n)/(1 - q) for any integer n.
BigRational q_bracket_int(long n, const QValue& q);

/// [x]_q = (1 - tau)/(1 - q) with tau = q^x.
BigRational q_bracket_tau(const EvalPoint& pt);

/// (a; base)_n = prod_{i=0}^{n-1} (1 - a * base^i), empty product for n = 0.
BigRational q_shifted_factorial(const BigRational& a, const BigRational& base,
                                long n);

/// Binomial coefficient; 0 when k < 0 or k > n.  n must be >= 0.
BigInt binomial(long n, long k);

/// Exponents e for which a factor 1 + q^e appears in some denominator of
/// the order-k, weight-h family up to degree m: {h + l - i : 0 <= l <= m,
/// 0 <= i < k}.  Empty when k = 0.
std::set<long> denominator_support(long m, long h, long k);

}  // namespace qeuler

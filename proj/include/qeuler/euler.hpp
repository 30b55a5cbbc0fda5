#pragma once

#include <vector>

#include "qeuler/qcore.hpp"

namespace qeuler {

/// Index of the twisted order-k family: degree m >= 0, integer weight h
/// (any sign) and order k >= 0.  k = 0 is the empty-integral base case,
/// whose value at tau is just the bracket power ((1-tau)/(1-q))^m.
struct EulerIndex {
  long m = 0;
  long h = 0;
  long k = 1;
};

/// E^{(h,k)}_{m,q}(x) evaluated at pt (tau = q^x).  Exact in q and tau.
BigRational euler_poly_hk(const EulerIndex& idx, const EvalPoint& pt);

/// The number E^{(h,k)}_{m,q} = value at x = 0 (tau = 1).
BigRational euler_number_hk(const EulerIndex& idx, const QValue& q);

/// Order-1 fast path: [2]_q/(1-q)^m sum_j C(m,j)(-1)^j tau^j/(1+q^{j+h}).
BigRational euler_poly_h1(long m, long h, const EvalPoint& pt);
BigRational euler_number_h1(long m, long h, const QValue& q);

/// Weightless specialisation h = 0.
BigRational euler_poly_0k(long m, long k, const EvalPoint& pt);
BigRational euler_number_0k(long m, long k, const QValue& q);

/// Diagonal specialisation h = k.
BigRational euler_poly_k(long m, long k, const EvalPoint& pt);
BigRational euler_number_k(long m, long k, const QValue& q);

/// The point representing argument (x + offset)/l at base q^l, i.e.
/// (q^l, tau * q^offset).  l must be a positive odd integer so that the
/// alternating measure survives the rebasing.
EvalPoint rebase_point(const EvalPoint& pt, long l, long offset);

/// The point (q^{-1}, tau/q): base 1/q at argument 1 - x, used by the
/// reflection identities.
EvalPoint reflected_point(const EvalPoint& pt);

/// Classical Euler numbers E_0..E_n (E_0 = 1, E_1 = -1/2, E_2 = 0, ...)
/// from the recurrence sum_{j<=n} C(n,j) E_j + E_n = 2*[n == 0].
std::vector<BigRational> classical_euler_numbers(long n_max);
BigRational classical_euler_number(long n);

/// Classical Euler polynomial E_n(z) = sum_j C(n,j) E_j z^{n-j} ... with
/// the E_j above; satisfies E_n(1/2) = 2^{-n} * (integer Euler number).
BigRational classical_euler_poly(long n, const BigRational& z);

/// Coefficients m! [t^m] (2/(e^t+1))^k for m = 0..n_max, computed by exact
/// power-series inversion of ((e^t+1)/2)^k.
std::vector<BigRational> classical_euler_numbers_k(long k, long n_max);

}  // namespace qeuler

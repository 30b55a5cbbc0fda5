#include "qeuler/euler.hpp"

#include "qeuler/eval.hpp"

namespace qeuler {

BigRational euler_poly_hk(const EulerIndex& idx, const EvalPoint& pt) {
  PowCache<BigRational> cache(pt.q.value());
  return euler_hk(cache, idx.m, idx.h, idx.k, 1, pt.tau);
}

BigRational euler_number_hk(const EulerIndex& idx, const QValue& q) {
  PowCache<BigRational> cache(q.value());
  return euler_hk(cache, idx.m, idx.h, idx.k, 1, BigRational(1));
}

BigRational euler_poly_h1(long m, long h, const EvalPoint& pt) {
  if (m < 0) throw InvalidParameterError("degree m must be >= 0");
  const BigRational& q = pt.q.value();
  const BigRational one(1);
  BigRational sum(0), tau_j(1);
  for (long j = 0; j <= m; ++j) {
    BigRational term = BigRational(binomial(m, j), BigInt(1)) * tau_j /
                       (one + pow(q, j + h));
    sum += (j % 2 == 0) ? term : -term;
    if (j < m) tau_j *= pt.tau;
  }
  return (one + q) * sum / pow(one - q, m);
}

BigRational euler_number_h1(long m, long h, const QValue& q) {
  return euler_poly_h1(m, h, EvalPoint(q, BigRational(1)));
}

BigRational euler_poly_0k(long m, long k, const EvalPoint& pt) {
  return euler_poly_hk({m, 0, k}, pt);
}

BigRational euler_number_0k(long m, long k, const QValue& q) {
  return euler_number_hk({m, 0, k}, q);
}

BigRational euler_poly_k(long m, long k, const EvalPoint& pt) {
  return euler_poly_hk({m, k, k}, pt);
}

BigRational euler_number_k(long m, long k, const QValue& q) {
  return euler_number_hk({m, k, k}, q);
}

EvalPoint rebase_point(const EvalPoint& pt, long l, long offset) {
  if (l < 1 || l % 2 == 0)
    throw InvalidParameterError("rebase needs a positive odd l");
  return EvalPoint(QValue(pow(pt.q.value(), l)),
                   pt.tau * pow(pt.q.value(), offset));
}

EvalPoint reflected_point(const EvalPoint& pt) {
  const BigRational& q = pt.q.value();
  return EvalPoint(QValue(pow(q, -1)), pt.tau / q);
}

std::vector<BigRational> classical_euler_numbers(long n_max) {
  if (n_max < 0) throw InvalidParameterError("n_max must be >= 0");
  std::vector<BigRational> e;
  e.reserve(n_max + 1);
  e.push_back(BigRational(1));
  for (long n = 1; n <= n_max; ++n) {
    BigRational acc(0);
    for (long j = 0; j < n; ++j)
      acc += BigRational(binomial(n, j), BigInt(1)) * e[j];
    e.push_back(acc / BigRational(-2));
  }
  return e;
}

BigRational classical_euler_number(long n) {
  return classical_euler_numbers(n).back();
}

BigRational classical_euler_poly(long n, const BigRational& z) {
  const auto e = classical_euler_numbers(n);
  BigRational acc(0);
  for (long j = 0; j <= n; ++j)
    acc += BigRational(binomial(n, j), BigInt(1)) * e[j] * pow(z, n - j);
  return acc;
}

std::vector<BigRational> classical_euler_numbers_k(long k, long n_max) {
  if (k < 0 || n_max < 0)
    throw InvalidParameterError("order and n_max must be >= 0");
  // a(t) = ((e^t + 1)/2)^k as e.g.f. coefficients, then invert the series:
  // with a_0 = 1, the coefficients b of 1/a satisfy
  // b_n = -sum_{j=1}^{n} C(n,j) a_j b_{n-j}.
  if (k == 0) {
    std::vector<BigRational> unit(n_max + 1);
    unit[0] = BigRational(1);
    return unit;
  }
  std::vector<BigRational> base(n_max + 1);
  base[0] = BigRational(1);
  for (long n = 1; n <= n_max; ++n) base[n] = BigRational(1, 2);
  std::vector<BigRational> a = base;
  for (long rep = 1; rep < k; ++rep) {
    // a <- a * base (e.g.f. product), building ((e^t+1)/2)^{rep+1}.
    std::vector<BigRational> next(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
      BigRational acc(0);
      for (long j = 0; j <= n; ++j)
        acc += BigRational(binomial(n, j), BigInt(1)) * a[j] * base[n - j];
      next[n] = acc;
    }
    a = next;
  }
  std::vector<BigRational> b(n_max + 1);
  b[0] = BigRational(1);
  for (long n = 1; n <= n_max; ++n) {
    BigRational acc(0);
    for (long j = 1; j <= n; ++j)
      acc += BigRational(binomial(n, j), BigInt(1)) * a[j] * b[n - j];
    b[n] = -acc;
  }
  return b;
}

}  // namespace qeuler

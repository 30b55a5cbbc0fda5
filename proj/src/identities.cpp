#include "qeuler/identities.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "qeuler/degree.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/eval.hpp"

namespace qeuler::identities {
namespace {

// ---------------------------------------------------------------------------
// Kernels.  Every identity is written once, as a template over the scalar
// type: instantiated with BigRational it performs the exact check, with
// DegreeBound it computes the degree bounds used for certification.
// ---------------------------------------------------------------------------

struct Inst {
  long m = 0, h = 0, k = 1, l = 1, i = 0;
};

template <class S>
struct Ctx {
  PowCache<S>& Q;  // powers of the base q
  S tau;           // primary argument tau = q^x
  S ups;           // secondary argument of two-point identities
};

template <class S>
struct Sides {
  S lhs, rhs;
};

template <class S>
S sc(long n) { return ScalarTraits<S>::from_int(n); }

template <class S>
S bin(long n, long k) { return ScalarTraits<S>::from_bigint(binomial(n, k)); }

template <class S>
S sign(long j) { return sc<S>(j % 2 == 0 ? 1 : -1); }

// E^{(h,k)}_{m, q^scale}(arg).
template <class S>
S E(Ctx<S>& c, long m, long h, long k, long scale, const S& arg) {
  return euler_hk(c.Q, m, h, k, scale, arg);
}

// The number E^{(h,k)}_{m, q^scale}.
template <class S>
S En(Ctx<S>& c, long m, long h, long k, long scale = 1) {
  return euler_hk(c.Q, m, h, k, scale, sc<S>(1));
}

template <class S>
S q_minus_1(Ctx<S>& c) { return c.Q.pow(1) - sc<S>(1); }

template <class S>
S two_q(Ctx<S>& c) { return c.Q.one_plus(1); }  // [2]_q = 1 + q

// [n]_{q^scale} for integer n.
template <class S>
S br(Ctx<S>& c, long n, long scale = 1) {
  return (sc<S>(1) - c.Q.pow(scale * n)) / (sc<S>(1) - c.Q.pow(scale));
}

// [x]_q from tau.
template <class S>
S brt(Ctx<S>& c, const S& tau) {
  return (sc<S>(1) - tau) / (sc<S>(1) - c.Q.pow(1));
}

// [l]_{-q} = (1 + q^l)/(1 + q) for odd l.
template <class S>
S br_neg(Ctx<S>& c, long l) { return c.Q.one_plus(l) / c.Q.one_plus(1); }

// prod_{i=0}^{k-1} (1 + q^{e-i}).
template <class S>
S dprod(Ctx<S>& c, long e, long k) {
  S acc = sc<S>(1);
  for (long i = 0; i < k; ++i) acc = acc * c.Q.one_plus(e - i);
  return acc;
}

// --- expansions of the numbers ---------------------------------------------

template <class S>
Sides<S> k_P1a(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    lhs = lhs + bin<S>(t.m, j) * spow(q_minus_1(c), j) * En(c, j, 0, t.k + 1);
  S rhs = spow(two_q(c), t.k + 1) / dprod(c, t.m, t.k + 1);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E4(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    lhs = lhs + bin<S>(t.m, j) * spow(q_minus_1(c), j) * En(c, j, 0, t.k);
  return {lhs, spow(two_q(c), t.k) / dprod(c, t.m, t.k)};
}

template <class S>
Sides<S> k_MOM(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    lhs = lhs + bin<S>(t.m, j) * spow(q_minus_1(c), j) * En(c, j, t.h, 1);
  return {lhs, two_q(c) / c.Q.one_plus(t.m + t.h)};
}

template <class S>
Sides<S> k_E26(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long i = 0; i <= t.m; ++i)
    lhs = lhs + bin<S>(t.m, i) * spow(q_minus_1(c), i) * En(c, i, t.k, t.k);
  return {lhs, spow(two_q(c), t.k) / dprod(c, t.m + t.k, t.k)};
}

template <class S>
Sides<S> k_E33(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.h; ++j)
    rhs = rhs + bin<S>(t.h, j) * spow(q_minus_1(c), j) * En(c, t.m + j, 1, 1);
  return {En(c, t.m, t.h + 1, 1), rhs};
}

// --- recurrences in the weight ---------------------------------------------

template <class S>
Sides<S> k_HREC(const Inst& t, Ctx<S>& c) {
  S rhs = En(c, t.m, t.h - 1, t.k) + q_minus_1(c) * En(c, t.m + 1, t.h - 1, t.k);
  return {En(c, t.m, t.h, t.k), rhs};
}

template <class S>
Sides<S> k_MIX(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long j = 0; j <= t.i; ++j)
    lhs = lhs + bin<S>(t.i, j) * spow(q_minus_1(c), j) * En(c, t.m - t.i + j, t.h - 1, t.k);
  S rhs = sc<S>(0);
  for (long j = 0; j < t.i; ++j)
    rhs = rhs + bin<S>(t.i - 1, j) * spow(q_minus_1(c), j) * En(c, t.m + j - t.i, t.h, t.k);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E12(const Inst& t, Ctx<S>& c) {
  S lhs = c.tau * E(c, t.m, t.h, 1, 1, c.tau);
  S rhs = q_minus_1(c) * E(c, t.m + 1, t.h - 1, 1, 1, c.tau) + E(c, t.m, t.h - 1, 1, 1, c.tau);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E19(const Inst& t, Ctx<S>& c) {
  S lhs = c.tau * E(c, t.m, t.h + 1, t.k, 1, c.tau);
  S rhs = q_minus_1(c) * E(c, t.m + 1, t.h, t.k, 1, c.tau) + E(c, t.m, t.h, t.k, 1, c.tau);
  return {lhs, rhs};
}

// --- shift / complement functional equations --------------------------------

template <class S>
Sides<S> k_E13(const Inst& t, Ctx<S>& c) {
  S lhs = c.Q.pow(t.h) * E(c, t.m, t.h, 1, 1, c.tau * c.Q.pow(1)) + E(c, t.m, t.h, 1, 1, c.tau);
  return {lhs, two_q(c) * spow(brt(c, c.tau), t.m)};
}

template <class S>
Sides<S> k_E18(const Inst& t, Ctx<S>& c) {
  S lhs = c.Q.pow(t.h) * E(c, t.m, t.h, t.k, 1, c.tau * c.Q.pow(1)) + E(c, t.m, t.h, t.k, 1, c.tau);
  return {lhs, two_q(c) * E(c, t.m, t.h - 1, t.k - 1, 1, c.tau)};
}

template <class S>
Sides<S> k_E24(const Inst& t, Ctx<S>& c) {
  S lhs = c.Q.pow(t.k) * E(c, t.m, t.k, t.k, 1, c.tau * c.Q.pow(1)) + E(c, t.m, t.k, t.k, 1, c.tau);
  return {lhs, two_q(c) * E(c, t.m, t.k - 1, t.k - 1, 1, c.tau)};
}

template <class S>
Sides<S> k_E30(const Inst& t, Ctx<S>& c) {
  S lhs = c.Q.pow(t.h - t.k) * E(c, t.m, t.h, t.k + 1, 1, c.tau * c.Q.pow(1));
  S rhs = two_q(c) * E(c, t.m, t.h, t.k, 1, c.tau) - E(c, t.m, t.h, t.k + 1, 1, c.tau);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E14c(const Inst& t, Ctx<S>& c) {
  S sym = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    sym = sym + bin<S>(t.m, j) * c.Q.pow(j) * En(c, j, t.h, 1);
  S lhs = c.Q.pow(t.h) * sym + En(c, t.m, t.h, 1);
  return {lhs, t.m == 0 ? two_q(c) : sc<S>(0)};
}

template <class S>
Sides<S> k_E14lit(const Inst& t, Ctx<S>& c) {
  S lhs = k_E14c(t, c).lhs;
  return {lhs, sc<S>(t.m == 0 ? 1 : 0)};
}

template <class S>
Sides<S> k_E28(const Inst& t, Ctx<S>& c) {
  S sym = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    sym = sym + bin<S>(t.m, j) * c.Q.pow(j) * En(c, j, t.k, t.k);
  S lhs = c.Q.pow(t.k) * sym + En(c, t.m, t.k, t.k);
  return {lhs, two_q(c) * En(c, t.m, t.k - 1, t.k - 1)};
}

// --- reflections (base 1/q) -------------------------------------------------

template <class S>
Sides<S> k_T4(const Inst& t, Ctx<S>& c) {
  S lhs = E(c, t.m, t.h, 1, -1, c.tau / c.Q.pow(1));
  S rhs = sign<S>(t.m) * c.Q.pow(t.m + t.h - 1) * E(c, t.m, t.h, 1, 1, c.tau);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E16(const Inst& t, Ctx<S>& c) {
  S lhs = E(c, t.m, t.h, 1, -1, sc<S>(1));
  S rhs = sign<S>(t.m - 1) * c.Q.pow(t.m - 1) * En(c, t.m, t.h, 1);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E22(const Inst& t, Ctx<S>& c) {
  S lhs = E(c, t.m, t.k, t.k, -1, c.tau * c.Q.pow(-t.k));
  long half = t.k * (t.k - 1) / 2;
  S rhs = sign<S>(t.m) * c.Q.pow(t.m + half) * E(c, t.m, t.k, t.k, 1, c.tau);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E23(const Inst& t, Ctx<S>& c) {
  S lhs = E(c, t.m, t.k, t.k, -1, sc<S>(1));
  long half = t.k * (t.k - 1) / 2;
  S rhs = sign<S>(t.m) * c.Q.pow(t.m + half) * E(c, t.m, t.k, t.k, 1, c.Q.pow(t.k));
  return {lhs, rhs};
}

// --- addition / binomial expansions of the polynomials ----------------------

template <class S>
Sides<S> k_L2(const Inst& t, Ctx<S>& c) {
  S lhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    lhs = lhs + bin<S>(t.m, j) * spow(q_minus_1(c), j) * E(c, j, 0, t.k, 1, c.tau);
  S rhs = spow(c.tau, t.m) * spow(two_q(c), t.k) / dprod(c, t.m, t.k);
  return {lhs, rhs};
}

template <class S>
Sides<S> k_E9(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long i = 0; i <= t.m; ++i)
    rhs = rhs + bin<S>(t.m, i) * En(c, i, 0, t.k) * spow(brt(c, c.tau), t.m - i) * spow(c.tau, i);
  return {E(c, t.m, 0, t.k, 1, c.tau), rhs};
}

template <class S>
Sides<S> k_E10(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    rhs = rhs + bin<S>(t.m, j) * spow(brt(c, c.ups), t.m - j) * spow(c.ups, j) * E(c, j, 0, t.k, 1, c.tau);
  return {E(c, t.m, 0, t.k, 1, c.tau * c.ups), rhs};
}

template <class S>
Sides<S> k_E27(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    rhs = rhs + bin<S>(t.m, j) * spow(c.tau, j) * spow(brt(c, c.tau), t.m - j) * En(c, j, t.k, t.k);
  return {E(c, t.m, t.k, t.k, 1, c.tau), rhs};
}

// --- multiplication / distribution ------------------------------------------

// [l]^m/[l]_{-q}^k sum over i-vectors in [0,l)^k of
//   q^{h si - sum_{j>=2} (j-1) i_j} (-1)^{si} E^{(h,k)}_{m,q^l}(arg q^{si}).
template <class S>
S mult_sum(Ctx<S>& c, long m, long h, long k, long l, const S& arg) {
  std::vector<long> iv(k, 0);
  S acc = sc<S>(0);
  for (;;) {
    long si = 0, wexp = 0;
    for (long j = 0; j < k; ++j) {
      si += iv[j];
      wexp -= j * iv[j];  // -(j-1) i_j with 1-based j
    }
    wexp += h * si;
    S term = c.Q.pow(wexp) * E(c, m, h, k, l, arg * c.Q.pow(si));
    acc = acc + sign<S>(si) * term;
    long pos = 0;
    while (pos < k && ++iv[pos] == l) iv[pos++] = 0;
    if (pos == k) break;
  }
  return spow(br(c, l), m) / spow(br_neg(c, l), k) * acc;
}

template <class S>
Sides<S> k_T3a(const Inst& t, Ctx<S>& c) {
  return {E(c, t.m, 0, t.k, 1, c.tau), mult_sum(c, t.m, 0, t.k, t.l, c.tau)};
}

template <class S>
Sides<S> k_T3b(const Inst& t, Ctx<S>& c) {
  S tl = spow(c.tau, t.l);
  return {E(c, t.m, 0, t.k, 1, tl), mult_sum(c, t.m, 0, t.k, t.l, tl)};
}

template <class S>
Sides<S> k_T6(const Inst& t, Ctx<S>& c) {
  S tl = spow(c.tau, t.l);
  return {E(c, t.m, t.h, t.k, 1, tl), mult_sum(c, t.m, t.h, t.k, t.l, tl)};
}

template <class S>
S dist_sum_k1(Ctx<S>& c, long m, long h, long l, const S& arg) {
  S acc = sc<S>(0);
  for (long i = 0; i < l; ++i)
    acc = acc + sign<S>(i) * c.Q.pow(h * i) * E(c, m, h, 1, l, arg * c.Q.pow(i));
  return two_q(c) / c.Q.one_plus(l) * spow(br(c, l), m) * acc;
}

template <class S>
Sides<S> k_T5a(const Inst& t, Ctx<S>& c) {
  return {dist_sum_k1(c, t.m, t.h, t.l, c.tau), E(c, t.m, t.h, 1, 1, c.tau)};
}

template <class S>
Sides<S> k_T5b(const Inst& t, Ctx<S>& c) {
  S tl = spow(c.tau, t.l);
  return {dist_sum_k1(c, t.m, t.h, t.l, tl), E(c, t.m, t.h, 1, 1, tl)};
}

// --- convolutions -----------------------------------------------------------

template <class S>
Sides<S> k_E31(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    rhs = rhs + bin<S>(t.m, j) * spow(c.tau, j) * En(c, j, 1, 1) *
                    E(c, t.m - j, t.k + j, t.k - 1, 1, c.tau);
  return {E(c, t.m, t.k, t.k, 1, c.tau), rhs};
}

template <class S>
Sides<S> k_E32c(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    rhs = rhs + bin<S>(t.m, j) * En(c, j, 1, 1) * En(c, t.m - j, t.k + j, t.k - 1);
  return {En(c, t.m, t.k, t.k), rhs};
}

template <class S>
Sides<S> k_E34(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j) {
    S inner = sc<S>(0);
    for (long i = 0; i <= j + 1; ++i)
      inner = inner + bin<S>(j + 1, i) * spow(q_minus_1(c), i) * En(c, t.m - j + i, 1, 1);
    rhs = rhs + bin<S>(t.m, j) * En(c, j, 1, 1) * inner;
  }
  return {En(c, t.m, 2, 2), rhs};
}

template <class S>
Sides<S> k_T7(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    rhs = rhs + bin<S>(t.m, j) * spow(c.tau, j) * E(c, t.m - j, t.k + j, 1, 1, c.tau) *
                    En(c, j, t.k - 1, t.k - 1);
  return {E(c, t.m, t.k, t.k, 1, c.tau), rhs};
}

template <class S>
Sides<S> k_E36c(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j) {
    S inner = sc<S>(0);
    for (long i = 0; i <= t.k + j - 1; ++i)
      inner = inner + bin<S>(t.k + j - 1, i) * spow(q_minus_1(c), i) * En(c, t.m - j + i, 1, 1);
    rhs = rhs + bin<S>(t.m, j) * En(c, j, t.k - 1, t.k - 1) * inner;
  }
  return {En(c, t.m, t.k, t.k), rhs};
}

template <class S>
Sides<S> k_E36lit(const Inst& t, Ctx<S>& c) {
  S rhs = sc<S>(0);
  for (long j = 0; j <= t.m; ++j) {
    S inner = sc<S>(0);
    for (long i = 0; i <= t.k + j; ++i)
      inner = inner + bin<S>(t.k + j, i) * spow(q_minus_1(c), i) * En(c, t.m - j + i, 1, 1);
    rhs = rhs + bin<S>(t.m, j) * En(c, j, t.k - 1, t.k - 1) * inner;
  }
  return {En(c, t.m, t.k, t.k), rhs};
}

// --- generating function coefficients ---------------------------------------

template <class S>
Sides<S> k_GF29(const Inst& t, Ctx<S>& c) {
  // m! [t^m] of  [2]^k e^{t/(1-q)} sum_j (-1)^j tau^j t^j /
  //              ((1-q)^j j! prod_{i<k}(1+q^{j+h-i}))
  S inv1q = sc<S>(1) / (sc<S>(1) - c.Q.pow(1));
  S coeff = sc<S>(0);
  for (long j = 0; j <= t.m; ++j) {
    long a = t.m - j;
    S term = spow(inv1q, a) / ScalarTraits<S>::from_bigint(factorial(a)) *
             spow(two_q(c), t.k) * spow(c.tau, j) * spow(inv1q, j) /
             (dprod(c, t.h + j, t.k) * ScalarTraits<S>::from_bigint(factorial(j)));
    coeff = coeff + sign<S>(j) * term;
  }
  S lhs = ScalarTraits<S>::from_bigint(factorial(t.m)) * coeff;
  return {lhs, E(c, t.m, t.h, t.k, 1, c.tau)};
}

// --- uncorrected auxiliary-weight sign --------------------------------------

template <class S>
Sides<S> k_S3lit(const Inst& t, Ctx<S>& c) {
  // Flipping the auxiliary weight to q^{+sum_j j x_j} integrates to
  // denominator factors 1+q^{j+2}, ..., 1+q^{j+k+1} instead of the
  // weightless family's 1+q^{j}, ..., 1+q^{j-k+1}.
  S acc = sc<S>(0);
  for (long j = 0; j <= t.m; ++j) {
    S term = bin<S>(t.m, j) * spow(c.tau, j);
    for (long jj = 2; jj <= t.k + 1; ++jj) term = term / c.Q.one_plus(j + jj);
    acc = acc + sign<S>(j) * term;
  }
  S lhs = spow(two_q(c), t.k) * acc / spow(sc<S>(1) - c.Q.pow(1), t.m);
  return {lhs, E(c, t.m, 0, t.k, 1, c.tau)};
}

// --- classical limit convolution (no q) -------------------------------------

template <class S>
Sides<S> k_CL2(const Inst& t, Ctx<S>&) {
  const auto e1 = classical_euler_numbers(t.m);
  const auto e2 = classical_euler_numbers_k(2, t.m);
  S conv = sc<S>(0);
  for (long j = 0; j <= t.m; ++j)
    conv = conv + bin<S>(t.m, j) * ScalarTraits<S>::from_rational(e1[j]) *
                      ScalarTraits<S>::from_rational(e1[t.m - j]);
  return {ScalarTraits<S>::from_rational(e2[t.m]), conv};
}

// ---------------------------------------------------------------------------
// Registry table.
// ---------------------------------------------------------------------------

struct Shape {
  bool m = true, h = false, k = false, l = false, i = false;
  bool tau = false, ups = false, q = true;
};

struct Entry {
  std::string id;
  std::string summary;
  std::string erratum;  // empty if no catalog note
  bool literal = false;
  Shape shape;
  std::function<bool(const Inst&)> hyp;  // beyond the grid ranges
  Sides<BigRational> (*eval)(const Inst&, Ctx<BigRational>&);
  Sides<DegreeBound> (*deg)(const Inst&, Ctx<DegreeBound>&);
};

template <Sides<BigRational> (*F1)(const Inst&, Ctx<BigRational>&),
          Sides<DegreeBound> (*F2)(const Inst&, Ctx<DegreeBound>&)>
Entry make(std::string id, std::string summary, Shape shape,
           std::function<bool(const Inst&)> hyp = nullptr,
           std::string erratum = "", bool literal = false) {
  return Entry{std::move(id), std::move(summary), std::move(erratum), literal,
               shape, std::move(hyp), F1, F2};
}

#define KERNEL(fn) fn<BigRational>, fn<DegreeBound>

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> r;
    auto none = std::function<bool(const Inst&)>();
    // numbers: expansions and weight recurrences
    r.push_back(make<KERNEL(k_P1a)>("P1a",
        "sum_j C(m,j)(q-1)^j E(0,k+1)_j = [2]^{k+1} / prod_{i<=k}(1+q^{m-i})",
        {.k = true},
        none,
        "expansion index starts at j = 0"));
    r.push_back(make<KERNEL(k_E4)>("E4",
        "sum_j C(m,j)(q-1)^j E(0,k)_j = [2]^k / prod_{i<k}(1+q^{m-i})",
        {.k = true}));
    r.push_back(make<KERNEL(k_MOM)>("MOM",
        "sum_j C(m,j)(q-1)^j E(h,1)_j = [2] / (1+q^{m+h})",
        {.h = true}));
    r.push_back(make<KERNEL(k_HREC)>("HREC",
        "E(h,k)_m = E(h-1,k)_m + (q-1) E(h-1,k)_{m+1}",
        {.h = true, .k = true}));
    r.push_back(make<KERNEL(k_MIX)>("MIX",
        "sum_{j<=i} C(i,j)(q-1)^j E(h-1,k)_{m-i+j} = "
        "sum_{j<i} C(i-1,j)(q-1)^j E(h,k)_{m+j-i}",
        {.h = true, .k = true, .i = true},
        [](const Inst& t) { return t.i >= 1 && t.i <= t.m; }));
    r.push_back(make<KERNEL(k_E12)>("E12",
        "tau E(h,1)_m(x) = (q-1) E(h-1,1)_{m+1}(x) + E(h-1,1)_m(x)",
        {.h = true, .tau = true}));
    r.push_back(make<KERNEL(k_E13)>("E13",
        "q^h E(h,1)_m(x+1) + E(h,1)_m(x) = [2] [x]^m",
        {.h = true, .tau = true}));
    r.push_back(make<KERNEL(k_E14c)>("E14c",
        "q^h (qE+1)^m + E(h,1)_m = [2] delta_{m,0}  (symbolic power expanded)",
        {.h = true},
        none,
        "right side carries the factor [2] = 1+q; see E14-literal"));
    r.push_back(make<KERNEL(k_E14lit)>("E14-literal",
        "uncorrected E14: right side delta_{m,0} without the factor 1+q",
        {.h = true},
        none,
        "fails at every valid q when m = 0 since [2] != 1", true));
    // reflections
    r.push_back(make<KERNEL(k_T4)>("T4",
        "E(h,1)_{m,1/q}(1-x) = (-1)^m q^{m+h-1} E(h,1)_{m,q}(x)",
        {.h = true, .tau = true}));
    r.push_back(make<KERNEL(k_E16)>("E16",
        "E(h,1)_{m,1/q}(0) = (-1)^{m-1} q^{m-1} E(h,1)_{m,q}   (m >= 1)",
        {.h = true},
        [](const Inst& t) { return t.m >= 1; }));
    r.push_back(make<KERNEL(k_E22)>("E22",
        "E(k,k)_{m,1/q}(k-x) = (-1)^m q^{m+C(k,2)} E(k,k)_{m,q}(x)",
        {.k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E23)>("E23",
        "E(k,k)_{m,1/q}(0) = (-1)^m q^{m+C(k,2)} E(k,k)_{m,q}(k)",
        {.k = true}));
    // shifted arguments
    r.push_back(make<KERNEL(k_E18)>("E18",
        "q^h E(h,k)_m(x+1) + E(h,k)_m(x) = [2] E(h-1,k-1)_m(x)",
        {.h = true, .k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E19)>("E19",
        "tau E(h+1,k)_m(x) = (q-1) E(h,k)_{m+1}(x) + E(h,k)_m(x)",
        {.h = true, .k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E24)>("E24",
        "q^k E(k,k)_m(x+1) + E(k,k)_m(x) = [2] E(k-1,k-1)_m(x)",
        {.k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E28)>("E28",
        "q^k (qE+1)^m + E(k,k)_m = [2] E(k-1,k-1)_m  (symbolic power expanded)",
        {.k = true}));
    r.push_back(make<KERNEL(k_E30)>("E30",
        "q^{h-k} E(h,k+1)_m(x+1) = [2] E(h,k)_m(x) - E(h,k+1)_m(x)",
        {.h = true, .k = true, .tau = true}));
    // addition / binomial expansions
    r.push_back(make<KERNEL(k_L2)>("L2",
        "sum_j C(m,j)(q-1)^j E(0,k)_j(x) = tau^m [2]^k / prod_{i<k}(1+q^{m-i})",
        {.k = true, .tau = true},
        none,
        "auxiliary weight of the family is q^{-sum (j-1)x_j}; see S3-literal"));
    r.push_back(make<KERNEL(k_E9)>("E9",
        "E(0,k)_m(x) = sum_i C(m,i) E(0,k)_i [x]^{m-i} tau^i",
        {.k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E10)>("E10",
        "E(0,k)_m(x+y) = sum_j C(m,j) [y]^{m-j} upsilon^j E(0,k)_j(x)",
        {.k = true, .tau = true, .ups = true}));
    r.push_back(make<KERNEL(k_E27)>("E27",
        "E(k,k)_m(x) = sum_j C(m,j) tau^j [x]^{m-j} E(k,k)_j",
        {.k = true, .tau = true}));
    // multiplication / distribution
    r.push_back(make<KERNEL(k_T3a)>("T3a",
        "E(0,k)_{m,q}(x) = [l]^m/[l]_{-q}^k sum_{i-vec} "
        "q^{-sum(j-1)i_j}(-1)^{|i|} E(0,k)_{m,q^l}((x+|i|)/l)",
        {.k = true, .l = true, .tau = true}));
    r.push_back(make<KERNEL(k_T3b)>("T3b",
        "E(0,k)_{m,q}(lx) expanded over base q^l as in T3a",
        {.k = true, .l = true, .tau = true}));
    r.push_back(make<KERNEL(k_T5a)>("T5a",
        "[2]_q/[2]_{q^l} [l]^m sum_i q^{hi}(-1)^i E(h,1)_{m,q^l}((x+i)/l) = E(h,1)_{m,q}(x)",
        {.h = true, .l = true, .tau = true}));
    r.push_back(make<KERNEL(k_T5b)>("T5b",
        "the T5a expansion at argument lx",
        {.h = true, .l = true, .tau = true}));
    r.push_back(make<KERNEL(k_T6)>("T6",
        "E(h,k)_{m,q}(lx) = [l]^m/[l]_{-q}^k sum_{i-vec} "
        "q^{h|i|-sum(j-1)i_j}(-1)^{|i|} E(h,k)_{m,q^l}((lx+|i|)/l)",
        {.h = true, .k = true, .l = true, .tau = true}));
    // convolutions
    r.push_back(make<KERNEL(k_E31)>("E31",
        "E(k,k)_m(x) = sum_j C(m,j) tau^j E(1,1)_j E(k+j,k-1)_{m-j}(x)",
        {.k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E32c)>("E32c",
        "E(k,k)_m = sum_j C(m,j) E(1,1)_j E(k+j,k-1)_{m-j}",
        {.k = true},
        none,
        "inner index renamed: partner runs at weight k+j, order k-1"));
    r.push_back(make<KERNEL(k_E33)>("E33",
        "E(h+1,1)_m = sum_{j<=h} C(h,j)(q-1)^j E(1,1)_{m+j}   (h >= 0)",
        {.h = true},
        [](const Inst& t) { return t.h >= 0; }));
    r.push_back(make<KERNEL(k_E34)>("E34",
        "E(2,2)_m = sum_j C(m,j) E(1,1)_j sum_{i<=j+1} C(j+1,i)(q-1)^i E(1,1)_{m-j+i}",
        {}));
    r.push_back(make<KERNEL(k_T7)>("T7",
        "E(k,k)_m(x) = sum_j C(m,j) tau^j E(k+j,1)_{m-j}(x) E(k-1,k-1)_j",
        {.k = true, .tau = true}));
    r.push_back(make<KERNEL(k_E36c)>("E36c",
        "E(k,k)_m = sum_j C(m,j) E(k-1,k-1)_j sum_{i<=k+j-1} C(k+j-1,i)(q-1)^i E(1,1)_{m-j+i}",
        {.k = true},
        none,
        "inner truncation i <= k+j-1 with C(k+j-1,i); see E36-literal"));
    r.push_back(make<KERNEL(k_E36lit)>("E36-literal",
        "uncorrected E36: inner truncation i <= k+j with C(k+j,i)",
        {.k = true},
        none,
        "fails e.g. at m = 1, k = 2 for every grid q", true));
    // generating function coefficients
    r.push_back(make<KERNEL(k_GF29)>("GF29",
        "m! [t^m] of [2]^k e^{t/(1-q)} sum_j (-tau)^j t^j/((1-q)^j j! "
        "prod_{i<k}(1+q^{j+h-i})) = E(h,k)_m(x)",
        {.h = true, .k = true, .tau = true}));
    // uncorrected auxiliary-weight sign
    r.push_back(make<KERNEL(k_S3lit)>("S3-literal",
        "weightless family with the auxiliary weight sign flipped to "
        "q^{+sum j x_j}",
        {.k = true, .tau = true},
        none,
        "fails for every k >= 1, e.g. m = 0, k = 1", true));
    // classical limit
    r.push_back(make<KERNEL(k_CL2)>("CL2",
        "order-2 classical numbers m![t^m](2/(e^t+1))^2 = "
        "sum_j C(m,j) E_j E_{m-j}",
        {.q = false}));
    return r;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw UnknownIdentityError(id);
}

std::vector<Inst> enumerate(const Entry& e, const GridSpec& g) {
  std::vector<Inst> out;
  const std::vector<long> one{0};
  std::vector<long> hs, ks, ls, is;
  if (e.shape.h) for (long h = g.h_min; h <= g.h_max; ++h) hs.push_back(h);
  else hs = one;
  if (e.shape.k) for (long k = 1; k <= g.k_max; ++k) ks.push_back(k);
  else ks = one;
  ls = e.shape.l ? g.l_values : std::vector<long>{1};
  for (long m = 0; m <= g.m_max; ++m)
    for (long h : hs)
      for (long k : ks)
        for (long l : ls) {
          std::vector<long> iv = e.shape.i ? [&] {
            std::vector<long> v;
            for (long i = 1; i <= m; ++i) v.push_back(i);
            return v;
          }() : one;
          for (long i : iv) {
            Inst t{m, h, e.shape.k ? k : 1, l, i};
            if (e.hyp && !e.hyp(t)) continue;
            out.push_back(t);
          }
        }
  return out;
}

IdentityParams params_of(const Entry& e, const Inst& t) {
  IdentityParams p;
  p.m = t.m;
  if (e.shape.h) p.h = t.h;
  if (e.shape.k) p.k = t.k;
  if (e.shape.l) p.l = t.l;
  if (e.shape.i) p.i = t.i;
  return p;
}

// Total order on reports: disengaged fields sort first.
template <class T>
int cmp_opt(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return a.has_value() ? 1 : -1;
  if (!a.has_value()) return 0;
  if (*a < *b) return -1;
  if (*b < *a) return 1;
  return 0;
}

bool report_less(const IdentityReport& a, const IdentityReport& b) {
  if (a.id != b.id) return a.id < b.id;
  const auto& x = a.params;
  const auto& y = b.params;
  for (int c : {cmp_opt(x.m, y.m), cmp_opt(x.h, y.h), cmp_opt(x.k, y.k),
                cmp_opt(x.l, y.l), cmp_opt(x.i, y.i), cmp_opt(x.q, y.q),
                cmp_opt(x.tau, y.tau), cmp_opt(x.tau2, y.tau2)})
    if (c != 0) return c < 0;
  return false;
}

// Evaluates one entry instance over the (q, tau, ups) grid, appending
// reports.  Pole-hitting points are skipped.
void run_instance(const Entry& e, const Inst& t, const GridSpec& g,
                  std::vector<PowCache<BigRational>>& caches,
                  std::vector<IdentityReport>& out) {
  const IdentityParams base = params_of(e, t);
  if (!e.shape.q) {
    Ctx<BigRational> c{caches[0], BigRational(1), BigRational(1)};
    auto sides = e.eval(t, c);
    out.push_back({e.id, base, sides.lhs, sides.rhs,
                   sides.lhs == sides.rhs, e.erratum});
    return;
  }
  for (std::size_t qi = 0; qi < g.q_values.size(); ++qi) {
    auto& cache = caches[qi];
    const std::vector<long> tau_exps = e.shape.tau ? g.tau_exps : std::vector<long>{0};
    const std::vector<long> ups_exps = e.shape.ups ? g.upsilon_exps : std::vector<long>{0};
    for (long te : tau_exps) {
      for (long ue : ups_exps) {
        Ctx<BigRational> c{cache, cache.pow(te), cache.pow(ue)};
        IdentityParams p = base;
        p.q = g.q_values[qi];
        if (e.shape.tau) p.tau = c.tau;
        if (e.shape.ups) p.tau2 = c.ups;
        try {
          auto sides = e.eval(t, c);
          out.push_back({e.id, p, sides.lhs, sides.rhs,
                         sides.lhs == sides.rhs, e.erratum});
        } catch (const PoleError&) {
          // hypothesis violated at this grid point; not a reportable result
        }
      }
    }
  }
}

}  // namespace

GridSpec GridSpec::default_grid() {
  GridSpec g;
  g.q_values = {BigRational(2), BigRational(1, 2), BigRational(3, 5),
                BigRational(4), BigRational(5, 3)};
  return g;
}

GridSpec GridSpec::small_grid() {
  GridSpec g = default_grid();
  g.m_max = 3;
  g.k_max = 2;
  g.l_values = {1, 3};
  return g;
}

std::vector<std::string> registry_ids(bool include_literal) {
  std::vector<std::string> ids;
  for (const auto& e : registry())
    if (include_literal || !e.literal) ids.push_back(e.id);
  return ids;
}

bool is_literal_variant(const std::string& id) { return find_entry(id).literal; }

const std::string& identity_summary(const std::string& id) {
  return find_entry(id).summary;
}

std::vector<IdentityReport> run_registry(const GridSpec& grid,
                                         const std::vector<std::string>& filter,
                                         const RunOptions& opts) {
  if (grid.q_values.empty())
    throw InvalidParameterError("grid has no q values");
  for (const auto& q : grid.q_values) QValue{q};  // validate early
  std::vector<const Entry*> selected;
  if (filter.empty()) {
    for (const auto& e : registry())
      if (!e.literal) selected.push_back(&e);
  } else {
    for (const auto& id : filter) selected.push_back(&find_entry(id));
  }

  struct Task {
    const Entry* entry;
    Inst inst;
  };
  std::vector<Task> tasks;
  for (const Entry* e : selected)
    for (const Inst& t : enumerate(*e, grid)) tasks.push_back({e, t});

  const int workers = std::max(1, opts.workers);
  std::vector<std::vector<IdentityReport>> partial(workers);
  auto work = [&](int w) {
    std::vector<PowCache<BigRational>> caches;
    caches.reserve(grid.q_values.size() + 1);
    if (grid.q_values.empty()) caches.emplace_back(BigRational(2));
    for (const auto& q : grid.q_values) caches.emplace_back(q);
    for (std::size_t idx = w; idx < tasks.size(); idx += workers)
      run_instance(*tasks[idx].entry, tasks[idx].inst, grid, caches, partial[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::vector<IdentityReport> reports;
  for (auto& p : partial)
    for (auto& r : p) reports.push_back(std::move(r));
  std::sort(reports.begin(), reports.end(), report_less);

  // a selected identity with no applicable grid point indicates a
  // grid/hypothesis mismatch the caller should hear about
  for (const Entry* e : selected) {
    bool seen = false;
    for (const auto& r : reports)
      if (r.id == e->id) { seen = true; break; }
    if (!seen)
      throw InvalidParameterError("identity " + e->id +
                                  " has no applicable point on this grid");
  }
  return reports;
}

IdentityReport verify_one(const std::string& id, const IdentityParams& params) {
  const Entry& e = find_entry(id);
  Inst t;
  t.m = params.m.value_or(0);
  if (t.m < 0) throw InvalidParameterError("m must be >= 0");
  if (e.shape.h) t.h = params.h ? *params.h : throw InvalidParameterError("identity " + id + " needs h");
  if (e.shape.k) {
    t.k = params.k ? *params.k : throw InvalidParameterError("identity " + id + " needs k");
    if (t.k < 1) throw InvalidParameterError("k must be >= 1");
  }
  if (e.shape.l) {
    t.l = params.l ? *params.l : throw InvalidParameterError("identity " + id + " needs l");
    if (t.l < 1 || t.l % 2 == 0)
      throw InvalidParameterError("l must be a positive odd integer");
  }
  if (e.shape.i) {
    t.i = params.i ? *params.i : throw InvalidParameterError("identity " + id + " needs i");
  }
  if (e.hyp && !e.hyp(t))
    throw InvalidParameterError("identity " + id + " hypothesis violated");
  IdentityParams p = params_of(e, t);
  if (!e.shape.q) {
    PowCache<BigRational> cache(BigRational(2));
    Ctx<BigRational> c{cache, BigRational(1), BigRational(1)};
    auto sides = e.eval(t, c);
    return {e.id, p, sides.lhs, sides.rhs, sides.lhs == sides.rhs, e.erratum};
  }
  if (!params.q) throw InvalidParameterError("identity " + id + " needs q");
  QValue q{*params.q};
  PowCache<BigRational> cache(q.value());
  BigRational tau(1), ups(1);
  if (e.shape.tau) {
    if (!params.tau) throw InvalidParameterError("identity " + id + " needs tau");
    if (params.tau->is_zero()) throw InvalidParameterError("tau must be nonzero");
    tau = *params.tau;
    p.tau = tau;
  }
  if (e.shape.ups) {
    if (!params.tau2) throw InvalidParameterError("identity " + id + " needs tau2");
    if (params.tau2->is_zero()) throw InvalidParameterError("tau2 must be nonzero");
    ups = *params.tau2;
    p.tau2 = ups;
  }
  p.q = q.value();
  Ctx<BigRational> c{cache, tau, ups};
  auto sides = e.eval(t, c);
  return {e.id, p, sides.lhs, sides.rhs, sides.lhs == sides.rhs, e.erratum};
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.pass; });
}

std::string to_json_lines(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::ordered_json params;
    if (r.params.m) params["m"] = *r.params.m;
    if (r.params.h) params["h"] = *r.params.h;
    if (r.params.k) params["k"] = *r.params.k;
    if (r.params.l) params["l"] = *r.params.l;
    if (r.params.i) params["i"] = *r.params.i;
    if (r.params.q) params["q"] = r.params.q->str();
    if (r.params.tau) params["tau"] = r.params.tau->str();
    if (r.params.tau2) params["tau2"] = r.params.tau2->str();
    nlohmann::ordered_json line;
    line["id"] = r.id;
    line["params"] = std::move(params);
    line["lhs"] = r.lhs.str();
    line["rhs"] = r.rhs.str();
    line["pass"] = r.pass;
    if (r.erratum.empty())
      line["erratum"] = nullptr;
    else
      line["erratum"] = r.erratum;
    out += line.dump();
    out += '\n';
  }
  return out;
}

DegreeCertificate degree_bounds(const std::string& id, const IdentityParams& inst) {
  const Entry& e = find_entry(id);
  Inst t{inst.m.value_or(0), inst.h.value_or(0), inst.k.value_or(1),
         inst.l.value_or(1), inst.i.value_or(0)};
  if (e.hyp && !e.hyp(t))
    throw InvalidParameterError("identity " + id + " hypothesis violated");
  PowCache<DegreeBound> cache(DegreeBound::var_q());
  Ctx<DegreeBound> c{cache, DegreeBound::var_tau(), DegreeBound::var_upsilon()};
  auto sides = e.deg(t, c);
  DegreeBound diff = sides.lhs - sides.rhs;
  DegreeCertificate cert;
  cert.id = id;
  cert.inst = params_of(e, t);
  cert.q_degree = e.shape.q ? diff.nq : 0;
  cert.tau_degree = e.shape.tau ? diff.nt : 0;
  cert.upsilon_degree = e.shape.ups ? diff.nu : 0;
  return cert;
}

DegreeCertificate certify_instance(const std::string& id, const IdentityParams& inst) {
  DegreeCertificate cert = degree_bounds(id, inst);
  const Entry& e = find_entry(id);
  Inst t{inst.m.value_or(0), inst.h.value_or(0), inst.k.value_or(1),
         inst.l.value_or(1), inst.i.value_or(0)};
  // distinct pole-free coordinates: integer q from 2 up, integer tau/ups
  // from 1 up; one point beyond every degree bound
  for (long qi = 0; qi <= cert.q_degree; ++qi) {
    PowCache<BigRational> cache(BigRational(2 + qi));
    for (long ti = 0; ti <= cert.tau_degree; ++ti) {
      for (long ui = 0; ui <= cert.upsilon_degree; ++ui) {
        Ctx<BigRational> c{cache, BigRational(1 + ti), BigRational(1 + ui)};
        auto sides = e.eval(t, c);
        ++cert.points;
        if (!(sides.lhs == sides.rhs))
          throw std::logic_error("identity " + id +
                                 " failed during certification at q = " +
                                 BigRational(2 + qi).str());
      }
    }
  }
  cert.certified = true;
  return cert;
}

std::vector<DegreeCertificate> certify_battery() {
  // Representative instances per identity: the m = 0 edge and a mid-size
  // instance.  Sizes are chosen so the whole battery evaluates in seconds;
  // larger instances can be certified on demand via certify_instance.
  // Literal variants are not identities and are excluded.
  std::vector<DegreeCertificate> out;
  for (const auto& id : registry_ids(false)) {
    const Entry& e = find_entry(id);
    IdentityParams small, mid;
    small.m = 0;
    mid.m = 3;
    if (e.shape.h) { small.h = 1; mid.h = 2; }
    if (e.shape.k) { small.k = 1; mid.k = 2; }
    if (e.shape.l) { small.l = 1; mid.l = 3; }
    if (e.shape.i) { small.i = 0; mid.i = 2; }
    if (e.hyp) {
      Inst ts{0, small.h.value_or(0), small.k.value_or(1), small.l.value_or(1),
              small.i.value_or(0)};
      if (!e.hyp(ts)) small.m.reset();
    }
    if (small.m) out.push_back(certify_instance(id, small));
    out.push_back(certify_instance(id, mid));
  }
  return out;
}

}  // namespace qeuler::identities

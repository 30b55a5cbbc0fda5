#include <cmath>
#include <complex>

#include "doctest.h"
#include "qeuler/euler.hpp"
#include "qeuler/zeta.hpp"

using namespace qeuler;
using namespace qeuler::zeta;

TEST_CASE("value at s = 0 is [2]/(1+q^h), independent of x") {
  const Complex q(0.5, 0.0);
  for (long h = 1; h <= 2; ++h) {
    const double expected = 1.5 / (1.0 + std::pow(0.5, h));
    for (double x : {0.25, 0.7, 1.0}) {
      const auto r = zeta_eq(Complex(0, 0), x, q, h);
      CHECK(std::abs(r.value - Complex(expected, 0)) < 1e-12);
      CHECK(r.tail_bound < 1e-12);
      CHECK(r.n_terms > 1);
    }
  }
  // h = 1 makes it exactly 1
  CHECK(zeta_eq(Complex(0, 0), 1.0, q, 1).value.real() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("negative integers interpolate the closed forms") {
  const auto r = interpolation_check(2, BigRational(1), BigRational(1, 2), 1);
  CHECK(r.abs_diff < 1e-10);
  CHECK(r.closed_value ==
        doctest::Approx(euler_poly_h1(
                            2, 1, EvalPoint::at_integer(QValue{BigRational(1, 2)}, 1))
                            .to_double()));
  const auto r2 =
      interpolation_check(4, BigRational(1, 2), BigRational(3, 10), 2);
  CHECK(r2.abs_diff < 1e-10);

  CHECK_THROWS_AS(interpolation_check(-1, BigRational(1), BigRational(1, 2), 1),
                  InvalidParameterError);
  CHECK_THROWS_AS(interpolation_check(2, BigRational(0), BigRational(1, 2), 1),
                  InvalidParameterError);
  CHECK_THROWS_AS(interpolation_check(2, BigRational(3, 2), BigRational(1, 2), 1),
                  InvalidParameterError);
  CHECK_THROWS_AS(interpolation_check(2, BigRational(1), BigRational(2), 1),
                  InvalidParameterError);
}

TEST_CASE("the reported tail bound is honest") {
  SeriesConfig loose, tight;
  loose.eps = 1e-4;
  tight.eps = 1e-13;

  const auto a = zeta_eq(Complex(2.5, 0), 0.7, Complex(0.6, 0), 1, loose);
  const auto b = zeta_eq(Complex(2.5, 0), 0.7, Complex(0.6, 0), 1, tight);
  CHECK(std::abs(a.value - b.value) <= a.tail_bound + 1e-12);
  CHECK(a.n_terms < b.n_terms);

  // complex s and complex q take the argument-slack branch
  const auto c =
      zeta_eq(Complex(1.0, 2.0), 0.5, Complex(0.4, 0.2), 1, loose);
  const auto d =
      zeta_eq(Complex(1.0, 2.0), 0.5, Complex(0.4, 0.2), 1, tight);
  CHECK(std::abs(c.value - d.value) <= c.tail_bound + 1e-12);
}

TEST_CASE("series domain guards") {
  const SeriesConfig cfg;
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.0, Complex(1.2, 0), 1, cfg),
                  InvalidParameterError);
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.0, Complex(0, 0), 1, cfg),
                  InvalidParameterError);
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.0, Complex(0.5, 0), 0, cfg),
                  InvalidParameterError);
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 0.0, Complex(0.5, 0), 1, cfg),
                  InvalidParameterError);
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.5, Complex(0.5, 0), 1, cfg),
                  InvalidParameterError);
  SeriesConfig bad = cfg;
  bad.eps = 0.0;
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.0, Complex(0.5, 0), 1, bad),
                  InvalidParameterError);
  bad = cfg;
  bad.max_terms = 0;
  CHECK_THROWS_AS(zeta_eq(Complex(1, 0), 1.0, Complex(0.5, 0), 1, bad),
                  InvalidParameterError);
}

TEST_CASE("hitting the term limit reports the achieved bound") {
  SeriesConfig cfg;
  cfg.max_terms = 3;
  try {
    zeta_eq(Complex(2, 0), 1.0, Complex(0.9, 0), 1, cfg);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.achieved_bound() > 0.0);
  }
}

TEST_CASE("generating function evaluates and differentiates") {
  const Complex q(0.5, 0.0);
  const double x = 1.0;
  const long h = 1;

  const auto at0 = gen_fn(Complex(0, 0), x, q, h);
  const auto s0 = zeta_eq(Complex(0, 0), x, q, h);
  CHECK(std::abs(at0.value - s0.value) < 1e-12);

  // central differences recover the first coefficients
  const double step = 1e-3;
  const double fp = gen_fn(Complex(step, 0), x, q, h).value.real();
  const double fm = gen_fn(Complex(-step, 0), x, q, h).value.real();
  const double f0 = at0.value.real();
  const QValue qq{BigRational(1, 2)};
  const EvalPoint pt = EvalPoint::at_integer(qq, 1);
  CHECK(std::abs((fp - fm) / (2 * step) -
                 euler_poly_h1(1, h, pt).to_double()) < 1e-5);
  CHECK(std::abs((fp - 2 * f0 + fm) / (step * step) -
                 euler_poly_h1(2, h, pt).to_double()) < 1e-4);

  CHECK_THROWS_AS(gen_fn(Complex(1e6, 0), x, q, h), InvalidParameterError);
}

TEST_CASE("a degree running with the index matches no fixed degree") {
  // summing [n+x]^n instead of [n+x]^m converges here but is not any
  // member of the family
  const double q = 0.3, x = 1.0;
  const long h = 1;
  double acc = 0.0, qh_pow = 1.0;
  for (long n = 0; n < 200; ++n) {
    const double b = (1.0 - std::pow(q, n + x)) / (1.0 - q);
    acc += ((n % 2 == 0) ? 1.0 : -1.0) * qh_pow *
           std::pow(b, static_cast<double>(n));
    qh_pow *= q;
  }
  const double running = (1.0 + q) * acc;
  const QValue qq{BigRational(3, 10)};
  for (long m = 0; m <= 4; ++m) {
    const double fixed =
        euler_poly_h1(m, h, EvalPoint::at_integer(qq, 1)).to_double();
    CHECK(std::abs(running - fixed) > 1e-2);
  }
}

TEST_CASE("Mellin quadrature matches the series") {
  const auto r = mellin_check(1.5, 1.0, 0.4, 1);
  CHECK(r.abs_diff < 1e-6);
  CHECK(r.T > 0.0);
  CHECK_THROWS_AS(mellin_check(0.0, 1.0, 0.4, 1), InvalidParameterError);
  CHECK_THROWS_AS(mellin_check(1.0, 1.0, 1.4, 1), InvalidParameterError);
  CHECK_THROWS_AS(mellin_check(1.0, 0.0, 0.4, 1), InvalidParameterError);
}

TEST_CASE("principal powers refuse the cut") {
  CHECK_THROWS_AS(pow_off_cut(Complex(-1, 0), Complex(0.5, 0)),
                  InvalidParameterError);
  CHECK_THROWS_AS(pow_off_cut(Complex(0, 0), Complex(2, 0)),
                  InvalidParameterError);
  CHECK(std::abs(pow_off_cut(Complex(4, 0), Complex(0.5, 0)) -
                 Complex(2, 0)) < 1e-14);
  CHECK(std::abs(pow_off_cut(Complex(0, 1), Complex(2, 0)) -
                 Complex(-1, 0)) < 1e-14);
}

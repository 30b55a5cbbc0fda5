#include <vector>

#include "doctest.h"
#include "qeuler/euler.hpp"
#include "qeuler/qcore.hpp"

using namespace qeuler;

TEST_CASE("order-1 numbers at q = 1/2") {
  const QValue q{BigRational(1, 2)};
  const std::vector<BigRational> expected{
      BigRational(1),          BigRational(-2, 5),
      BigRational(-4, 15),     BigRational(-8, 85),
      BigRational(112, 935),   BigRational(13408, 36465),
      BigRational(325184, 522665)};
  for (long m = 0; m < static_cast<long>(expected.size()); ++m) {
    CHECK(euler_number_h1(m, 1, q) == expected[m]);
    CHECK(euler_number_hk({m, 1, 1}, q) == expected[m]);
  }
}

TEST_CASE("specialisations agree with the general closed form") {
  const QValue q{BigRational(3, 5)};
  const EvalPoint pt = EvalPoint::at_integer(q, 2);
  for (long m = 0; m <= 4; ++m) {
    for (long h = -1; h <= 2; ++h)
      CHECK(euler_poly_h1(m, h, pt) == euler_poly_hk({m, h, 1}, pt));
    for (long k = 1; k <= 3; ++k) {
      CHECK(euler_poly_0k(m, k, pt) == euler_poly_hk({m, 0, k}, pt));
      CHECK(euler_poly_k(m, k, pt) == euler_poly_hk({m, k, k}, pt));
      CHECK(euler_number_0k(m, k, q) == euler_number_hk({m, 0, k}, q));
      CHECK(euler_number_k(m, k, q) == euler_number_hk({m, k, k}, q));
    }
  }
}

TEST_CASE("order zero collapses to the bracket power") {
  const QValue q{BigRational(1, 2)};
  const EvalPoint pt = EvalPoint::at_integer(q, 2);
  const BigRational br = q_bracket_tau(pt);  // [2]_{1/2} = 3/2
  CHECK(br == BigRational(3, 2));
  for (long m = 0; m <= 5; ++m)
    CHECK(euler_poly_hk({m, 7, 0}, pt) == pow(br, m));
  CHECK(euler_number_hk({3, 0, 0}, q) == BigRational(0));  // [0]^3
}

TEST_CASE("degree must be nonnegative") {
  const QValue q{BigRational(2)};
  CHECK_THROWS_AS(euler_number_hk({-1, 1, 1}, q), InvalidParameterError);
  CHECK_THROWS_AS(euler_number_hk({2, 1, -1}, q), InvalidParameterError);
  CHECK_THROWS_AS(euler_poly_h1(-2, 1, EvalPoint::at_integer(q, 0)),
                  InvalidParameterError);
}

TEST_CASE("classical numbers and polynomials") {
  const auto e = classical_euler_numbers(5);
  const std::vector<BigRational> expected{BigRational(1), BigRational(-1, 2),
                                          BigRational(0), BigRational(1, 4),
                                          BigRational(0), BigRational(-1, 2)};
  REQUIRE(e.size() == expected.size());
  for (std::size_t n = 0; n < e.size(); ++n) CHECK(e[n] == expected[n]);
  CHECK(classical_euler_number(3) == BigRational(1, 4));

  // E_n(1/2) * 2^n is the integer Euler number sequence 1, 0, -1, 0, 5
  const std::vector<BigRational> integers{BigRational(1), BigRational(0),
                                          BigRational(-1), BigRational(0),
                                          BigRational(5)};
  for (long n = 0; n < static_cast<long>(integers.size()); ++n)
    CHECK(classical_euler_poly(n, BigRational(1, 2)) * pow(BigRational(2), n) ==
          integers[n]);
  CHECK(classical_euler_poly(1, BigRational(1)) == BigRational(1, 2));
}

TEST_CASE("higher-order classical numbers") {
  const auto e2 = classical_euler_numbers_k(2, 5);
  const std::vector<BigRational> expected{BigRational(1),     BigRational(-1),
                                          BigRational(1, 2),  BigRational(1, 2),
                                          BigRational(-1),    BigRational(-1)};
  REQUIRE(e2.size() == expected.size());
  for (std::size_t n = 0; n < e2.size(); ++n) CHECK(e2[n] == expected[n]);

  const auto e1 = classical_euler_numbers_k(1, 6);
  const auto e = classical_euler_numbers(6);
  for (std::size_t n = 0; n < e1.size(); ++n) CHECK(e1[n] == e[n]);

  const auto e0 = classical_euler_numbers_k(0, 3);
  CHECK(e0[0] == BigRational(1));
  for (std::size_t n = 1; n < e0.size(); ++n) CHECK(e0[n].is_zero());
  CHECK_THROWS_AS(classical_euler_numbers_k(-1, 3), InvalidParameterError);
}

TEST_CASE("rebasing and reflecting evaluation points") {
  const QValue q{BigRational(2)};
  const EvalPoint pt(q, BigRational(1));
  const EvalPoint re = rebase_point(pt, 3, 2);
  CHECK(re.q.value() == BigRational(8));
  CHECK(re.tau == BigRational(4));
  CHECK_THROWS_AS(rebase_point(pt, 2, 0), InvalidParameterError);
  CHECK_THROWS_AS(rebase_point(pt, -3, 0), InvalidParameterError);
  CHECK_THROWS_AS(rebase_point(pt, 0, 1), InvalidParameterError);

  const EvalPoint refl = reflected_point(EvalPoint(q, BigRational(4)));
  CHECK(refl.q.value() == BigRational(1, 2));
  CHECK(refl.tau == BigRational(2));
}

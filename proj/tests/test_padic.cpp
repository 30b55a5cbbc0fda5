#include <vector>

#include "doctest.h"
#include "qeuler/euler.hpp"
#include "qeuler/padic.hpp"

using namespace qeuler;
using namespace qeuler::padic;

namespace {

std::vector<std::string> val_strings(const std::vector<ConvergenceRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.val.str());
  return out;
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(valuation(BigRational(9, 2), 3) == Valuation::finite(2));
  CHECK(valuation(BigRational(0), 3).is_infinite());
  CHECK(valuation(BigRational(1, 3), 3) == Valuation::finite(-1));
  CHECK(valuation(BigRational(6), 3) == Valuation::finite(1));
  CHECK(valuation(BigRational(50, 49), 7) == Valuation::finite(-2));
  CHECK_THROWS_AS(valuation(BigRational(1), 1), InvalidParameterError);
  CHECK_THROWS_AS(Valuation::infinite().value(), InvalidParameterError);
  CHECK(Valuation::infinite().str() == "inf");
  CHECK(Valuation::finite(-3).str() == "-3");
  CHECK(Valuation::infinite().at_least(Valuation::finite(100)));
  CHECK_FALSE(Valuation::finite(100).at_least(Valuation::infinite()));
  CHECK(Valuation::finite(5).gained(Valuation::finite(3), 2));
  CHECK_FALSE(Valuation::finite(4).gained(Valuation::finite(3), 2));
}

TEST_CASE("admissibility of q") {
  CHECK(admissible_q(BigRational(4), 3));
  CHECK_FALSE(admissible_q(BigRational(2), 3));
  CHECK(admissible_q(BigRational(10), 3));
  CHECK(admissible_q(BigRational(1, 4), 3));  // v_3(-3/4) = 1
  CHECK_FALSE(admissible_q(BigRational(1, 3), 3));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(PadicContext(2, 1), InvalidParameterError);
  CHECK_THROWS_AS(PadicContext(4, 1), InvalidParameterError);
  CHECK_THROWS_AS(PadicContext(9, 1), InvalidParameterError);
  CHECK_THROWS_AS(PadicContext(3, 0), InvalidParameterError);
  CHECK_THROWS_AS(PadicContext(3, 1, 6), InvalidParameterError);
  CHECK_THROWS_AS(PadicContext(3, 1, 1, 0), InvalidParameterError);
  CHECK(PadicContext(3, 2, 5).points() == 45);
  CHECK(PadicContext(3, 2).with_level(4).points() == 81);
}

TEST_CASE("integrand validation") {
  IntegrandSpec s;
  s.k = 0;
  CHECK_THROWS_AS(s.validate(), InvalidParameterError);
  s = {};
  s.m = -1;
  CHECK_THROWS_AS(s.validate(), InvalidParameterError);
  s = {};
  s.shift = -1;
  CHECK_THROWS_AS(s.validate(), InvalidParameterError);
  s = {};
  s.pattern = WeightPattern::k1_weight;
  s.k = 2;
  CHECK_THROWS_AS(s.validate(), InvalidParameterError);
  s = {};
  s.pattern = WeightPattern::pure_power;
  s.m = 1;
  CHECK_THROWS_AS(s.validate(), InvalidParameterError);
}

TEST_CASE("measure weights sum to exact unit mass") {
  const QValue q{BigRational(4)};
  for (long N = 1; N <= 3; ++N) {
    const PadicContext ctx(3, N);
    BigRational fm(0), bm(0);
    for (long x = 0; x < static_cast<long>(ctx.points()); ++x) {
      fm += measure_weight(x, ctx, q, Measure::fermionic);
      bm += measure_weight(x, ctx, q, Measure::bosonic);
    }
    CHECK(fm == BigRational(1));
    CHECK(bm == BigRational(1));
  }
  CHECK_THROWS_AS(measure_weight(3, PadicContext(3, 1), q, Measure::fermionic),
                  InvalidParameterError);
  CHECK_THROWS_AS(measure_weight(-1, PadicContext(3, 1), q, Measure::fermionic),
                  InvalidParameterError);
}

TEST_CASE("level-1 sum has the expected exact value") {
  IntegrandSpec spec;
  spec.m = 1;
  spec.h = 1;
  spec.k = 1;
  const QValue q{BigRational(4)};
  // (1+q)/(1+q^3) * sum_{x<3} (-1)^x q^x [x] = (5/65) * (0 - 4 + 80)
  CHECK(riemann_sum(spec, PadicContext(3, 1), q) == BigRational(76, 13));
}

TEST_CASE("frozen convergence tables at p = 3, q = 4") {
  const QValue q{BigRational(4)};
  const PadicContext ctx(3, 1);

  IntegrandSpec spec;
  spec.h = 1;
  spec.k = 1;

  spec.m = 1;
  auto rows = convergence_table(spec, ctx, 1, 4, q,
                                euler_number_hk({1, 1, 1}, q));
  CHECK(val_strings(rows) == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(certify_convergence(rows));
  CHECK(rows[0].terms == 3);
  CHECK(rows[3].terms == 81);

  spec.m = 3;
  rows = convergence_table(spec, ctx, 1, 4, q, euler_number_hk({3, 1, 1}, q));
  CHECK(val_strings(rows) == std::vector<std::string>{"3", "5", "6", "7"});
  CHECK(certify_convergence(rows));

  spec.m = 0;
  spec.h = 2;
  CHECK(euler_number_hk({0, 2, 1}, q) == BigRational(5, 17));
  rows = convergence_table(spec, ctx, 1, 4, q, BigRational(5, 17));
  CHECK(val_strings(rows) == std::vector<std::string>{"2", "3", "4", "5"});

  // integer shift: the limit is the polynomial at tau = q^shift
  spec.m = 2;
  spec.h = 1;
  spec.shift = 2;
  const BigRational target =
      euler_poly_hk({2, 1, 1}, EvalPoint::at_integer(q, 2));
  rows = convergence_table(spec, ctx, 1, 4, q, target);
  CHECK(val_strings(rows) == std::vector<std::string>{"3", "3", "4", "5"});
  CHECK(certify_convergence(rows));
}

TEST_CASE("an exactly-met target certifies with infinite valuations") {
  IntegrandSpec spec;  // m = 0, h = 1, k = 1: the unit-mass family
  const QValue q{BigRational(4)};
  const auto rows =
      convergence_table(spec, PadicContext(3, 1), 1, 3, q, BigRational(1));
  for (const auto& r : rows) CHECK(r.val.is_infinite());
  CHECK(certify_convergence(rows));
}

TEST_CASE("a wrong target does not certify") {
  IntegrandSpec spec;
  spec.m = 1;
  spec.h = 1;
  const QValue q{BigRational(4)};
  const BigRational wrong = euler_number_hk({1, 1, 1}, q) + BigRational(1);
  const auto rows = convergence_table(spec, PadicContext(3, 1), 1, 3, q, wrong);
  CHECK(val_strings(rows) == std::vector<std::string>{"0", "0", "0"});
  CHECK_FALSE(certify_convergence(rows));
}

TEST_CASE("wider sample sets converge to the same limit") {
  IntegrandSpec spec;
  spec.m = 1;
  spec.h = 1;
  const QValue q{BigRational(4)};
  const BigRational target = euler_number_hk({1, 1, 1}, q);
  const auto rows =
      convergence_table(spec, PadicContext(3, 1, 5), 1, 2, q, target);
  CHECK(val_strings(rows) == std::vector<std::string>{"1", "2"});
  CHECK(rows[0].terms == 15);
  CHECK(certify_convergence(rows));
}

TEST_CASE("admissibility and parity guards") {
  IntegrandSpec spec;
  CHECK_THROWS_AS(riemann_sum(spec, PadicContext(3, 1), QValue{BigRational(2)}),
                  InvalidParameterError);
  CHECK_THROWS_AS(riemann_sum(spec, PadicContext(3, 1, 2), QValue{BigRational(4)}),
                  InvalidParameterError);  // fermionic needs odd d
  spec.mode = Measure::bosonic;
  const BigRational mass =
      riemann_sum(spec, PadicContext(3, 1, 2), QValue{BigRational(4)});
  CHECK(mass == BigRational(1));  // bosonic mass over an even-width set
}

TEST_CASE("budget limits the term count") {
  IntegrandSpec spec;
  spec.k = 3;
  const QValue q{BigRational(4)};
  spec.pattern = WeightPattern::h_minus_j;
  CHECK_THROWS_AS(riemann_sum(spec, PadicContext(3, 5), q), ResourceError);

  IntegrandSpec one;
  SumOptions tight;
  tight.budget = 26;
  CHECK_THROWS_AS(riemann_sum(one, PadicContext(3, 3), q, tight),
                  ResourceError);
  tight.budget = 27;
  CHECK(riemann_sum(one, PadicContext(3, 3), q, tight) == BigRational(1));
}

TEST_CASE("worker count does not change the exact sum") {
  IntegrandSpec spec;
  spec.m = 2;
  spec.h = 1;
  spec.k = 2;
  const QValue q{BigRational(4)};
  SumOptions a, b;
  a.workers = 1;
  b.workers = 4;
  const PadicContext ctx(3, 2);
  CHECK(riemann_sum(spec, ctx, q, a) == riemann_sum(spec, ctx, q, b));

  const BigRational target = euler_number_hk({2, 1, 2}, q);
  const auto rows1 = convergence_table(spec, ctx, 1, 3, q, target, a);
  const auto rows8 = convergence_table(spec, ctx, 1, 3, q, target, b);
  CHECK(to_csv(rows1, true) == to_csv(rows8, true));
}

TEST_CASE("csv layout") {
  IntegrandSpec spec;
  const QValue q{BigRational(4)};
  const auto rows =
      convergence_table(spec, PadicContext(3, 1), 1, 2, q, BigRational(1));
  const std::string stable = to_csv(rows, true);
  CHECK(stable == "N,terms,valuation\n1,3,inf\n2,9,inf\n");
  const std::string timed = to_csv(rows, false);
  CHECK(timed.substr(0, 28) == "N,terms,valuation,elapsed_ms");
}

TEST_CASE("residue display") {
  const auto r = to_residue(BigRational(5, 17), 3, 4);
  CHECK(r.residue == 67);
  CHECK(r.str() == "67 (mod 3^4)");
  CHECK(to_residue(BigRational(7), 5, 2).residue == 7);
  CHECK(to_residue(BigRational(-1), 3, 2).residue == 8);
  CHECK_THROWS_AS(to_residue(BigRational(1, 3), 3, 4), InvalidParameterError);
  CHECK_THROWS_AS(to_residue(BigRational(1, 2), 2, 3), InvalidParameterError);
  CHECK_THROWS_AS(to_residue(BigRational(1), 6, 2), InvalidParameterError);
}

TEST_CASE("table bounds validation") {
  IntegrandSpec spec;
  const QValue q{BigRational(4)};
  CHECK_THROWS_AS(
      convergence_table(spec, PadicContext(3, 1), 0, 2, q, BigRational(1)),
      InvalidParameterError);
  CHECK_THROWS_AS(
      convergence_table(spec, PadicContext(3, 1), 3, 2, q, BigRational(1)),
      InvalidParameterError);
}

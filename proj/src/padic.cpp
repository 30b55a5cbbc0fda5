#include "qeuler/padic.hpp"

#include <chrono>
#include <thread>

namespace qeuler::padic {
namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

unsigned long long checked_pow(long base, long exp) {
  unsigned long long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (r > (1ULL << 62) / static_cast<unsigned long long>(base))
      throw ResourceError("level size d*p^N overflows");
    r *= static_cast<unsigned long long>(base);
  }
  return r;
}

}  // namespace

Valuation valuation(const BigRational& r, long p) {
  if (p < 2) throw InvalidParameterError("valuation needs p >= 2");
  if (r.is_zero()) return Valuation::infinite();
  const mpz_class pz(p);
  mpz_class tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.num().get_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.den().get_mpz_t(), pz.get_mpz_t()));
  return Valuation::finite(vn - vd);
}

bool admissible_q(const BigRational& q, long p) {
  if (p < 2) throw InvalidParameterError("admissibility needs p >= 2");
  return valuation(q - BigRational(1), p).at_least(Valuation::finite(1));
}

PadicContext::PadicContext(long p_in, long N_in, long d_in, long M_in)
    : p(p_in), N(N_in), d(d_in), M(M_in) {
  if (!is_odd_prime(p))
    throw InvalidParameterError("p must be an odd prime, got " + std::to_string(p));
  if (N < 1) throw InvalidParameterError("level N must be >= 1");
  if (d < 1 || d % p == 0)
    throw InvalidParameterError("d must be >= 1 and coprime to p");
  if (M < 1) throw InvalidParameterError("residue precision M must be >= 1");
}

unsigned long long PadicContext::points() const {
  return static_cast<unsigned long long>(d) * checked_pow(p, N);
}

void IntegrandSpec::validate() const {
  if (m < 0) throw InvalidParameterError("integrand degree m must be >= 0");
  if (k < 1) throw InvalidParameterError("integrand order k must be >= 1");
  if (shift < 0) throw InvalidParameterError("integrand shift must be >= 0");
  if (pattern == WeightPattern::k1_weight && k != 1)
    throw InvalidParameterError("k1_weight pattern requires k = 1");
  if (pattern == WeightPattern::pure_power && m != 0)
    throw InvalidParameterError(
        "pure_power pattern is the bracket-free family: m must be 0");
}

BigRational measure_weight(long x, const PadicContext& ctx, const QValue& q,
                           Measure mode) {
  const unsigned long long P = ctx.points();
  if (x < 0 || static_cast<unsigned long long>(x) >= P)
    throw InvalidParameterError("x must lie in [0, d p^N)");
  const BigRational& qq = q.value();
  if (mode == Measure::bosonic) {
    BigRational denom = (BigRational(1) - pow(qq, static_cast<long>(P))) /
                        (BigRational(1) - qq);  // [d p^N]_q
    return pow(qq, x) / denom;
  }
  BigRational w = pow(qq, x) * (BigRational(1) + qq) /
                  (BigRational(1) + pow(qq, static_cast<long>(P)));
  return x % 2 == 0 ? w : -w;
}

namespace {

struct SumPlan {
  long P;                                    // points per coordinate
  long k;
  std::vector<std::vector<BigRational>> wt;  // wt[j][x] signed coordinate weight
  std::vector<BigRational> brp;              // [shift + s]^m for s = 0..k(P-1)
};

// Partial sum over outer coordinate values [lo, hi).
BigRational sum_range(const SumPlan& plan, long lo, long hi) {
  const long k = plan.k;
  std::vector<long> xs(k, 0);
  std::vector<BigRational> pp(k + 1, BigRational(1));  // pp[j] = prod_{t<j} wt
  BigRational acc(0);
  if (lo >= hi) return acc;
  xs[0] = lo;
  // weights with x_t = 0 are 1, so after resetting trailing coordinates the
  // prefix products stay valid
  pp[1] = plan.wt[0][xs[0]];
  for (long j = 1; j < k; ++j) pp[j + 1] = pp[j];
  for (;;) {
    long s = 0;
    for (long j = 0; j < k; ++j) s += xs[j];
    acc += pp[k] * plan.brp[s];
    long pos = k - 1;
    for (; pos >= 0; --pos) {
      ++xs[pos];
      if (pos == 0 ? xs[0] < hi : xs[pos] < plan.P) break;
      xs[pos] = 0;
    }
    if (pos < 0) break;
    pp[pos + 1] = pp[pos] * plan.wt[pos][xs[pos]];
    for (long j = pos + 1; j < k; ++j) pp[j + 1] = pp[j];
  }
  return acc;
}

}  // namespace

BigRational riemann_sum(const IntegrandSpec& spec, const PadicContext& ctx,
                        const QValue& q, const SumOptions& opts) {
  spec.validate();
  const BigRational& qq = q.value();
  if (!admissible_q(qq, ctx.p))
    throw InvalidParameterError("q = " + qq.str() +
                                " is not admissible for p = " +
                                std::to_string(ctx.p) + " (needs v_p(q-1) >= 1)");
  if (spec.mode == Measure::fermionic && ctx.d % 2 == 0)
    throw InvalidParameterError(
        "fermionic level sums need odd d: the alternating weight cancels "
        "over an even period");
  const unsigned long long P64 = ctx.points();
  unsigned long long total = 1;
  for (long j = 0; j < spec.k; ++j) {
    if (total > opts.budget / P64)
      throw ResourceError(
          "term count (d p^N)^k at level N = " + std::to_string(ctx.N) +
          " exceeds the budget of " + std::to_string(opts.budget));
    total *= P64;
  }
  const long P = static_cast<long>(P64);
  const bool fermionic = spec.mode == Measure::fermionic;

  // Coordinate j (0-based) carries q^{x(h-j-1)} from the integrand weight
  // and q^x from the measure, so its signed table is (+-1)^x q^{x(h-j)};
  // the bracket powers [shift + s]^m are shared across coordinates and
  // looked up by the coordinate total s.
  SumPlan plan;
  plan.P = P;
  plan.k = spec.k;
  for (long j = 0; j < spec.k; ++j) {
    std::vector<BigRational> tbl(P);
    const BigRational base = pow(qq, spec.h - j);
    BigRational cur(1);
    for (long x = 0; x < P; ++x) {
      tbl[x] = (fermionic && x % 2 == 1) ? -cur : cur;
      cur *= base;
    }
    plan.wt.push_back(std::move(tbl));
  }
  const long s_top = spec.k * (P - 1);
  plan.brp.assign(s_top + 1, BigRational(0));
  {
    BigRational qs = pow(qq, spec.shift);
    const BigRational inv1q = BigRational(1) / (BigRational(1) - qq);
    for (long s = 0; s <= s_top; ++s) {
      plan.brp[s] = pow((BigRational(1) - qs) * inv1q, spec.m);
      qs *= qq;
    }
  }

  if (spec.mode == Measure::bosonic) {
    const BigRational total_sum = sum_range(plan, 0, P);
    const BigRational norm = (BigRational(1) - qq) /
                             (BigRational(1) - pow(qq, P));  // 1/[P]_q
    return pow(norm, spec.k) * total_sum;
  }

  const int workers = std::max(1, opts.workers);
  BigRational total_sum(0);
  if (workers == 1 || P < 2 * workers) {
    total_sum = sum_range(plan, 0, P);
  } else {
    std::vector<BigRational> part(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const long lo = P * w / workers;
      const long hi = P * (w + 1) / workers;
      pool.emplace_back(
          [&plan, &part, w, lo, hi] { part[w] = sum_range(plan, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const auto& s : part) total_sum += s;
  }

  const BigRational norm = (BigRational(1) + qq) /
                           (BigRational(1) + pow(qq, P));
  return pow(norm, spec.k) * total_sum;
}

std::vector<ConvergenceRow> convergence_table(const IntegrandSpec& spec,
                                              const PadicContext& ctx,
                                              long N_min, long N_max,
                                              const QValue& q,
                                              const BigRational& target,
                                              const SumOptions& opts) {
  if (N_min < 1 || N_max < N_min)
    throw InvalidParameterError("need 1 <= N_min <= N_max");
  std::vector<ConvergenceRow> rows;
  for (long N = N_min; N <= N_max; ++N) {
    const PadicContext level = ctx.with_level(N);
    const auto start = std::chrono::steady_clock::now();
    const BigRational S = riemann_sum(spec, level, q, opts);
    const auto stop = std::chrono::steady_clock::now();
    ConvergenceRow row;
    row.N = N;
    unsigned long long terms = 1;
    for (long j = 0; j < spec.k; ++j) terms *= level.points();
    row.terms = terms;
    row.val = valuation(S - target, ctx.p);
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

bool certify_convergence(const std::vector<ConvergenceRow>& rows) {
  if (rows.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!rows[i + 1].val.at_least(rows[i].val)) return false;
  for (std::size_t i = 0; i + 2 < rows.size(); ++i)
    if (!rows[i + 2].val.gained(rows[i].val, 1)) return false;
  return true;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows, bool stable) {
  std::string out = stable ? "N,terms,valuation\n" : "N,terms,valuation,elapsed_ms\n";
  for (const auto& r : rows) {
    out += std::to_string(r.N) + "," + std::to_string(r.terms) + "," + r.val.str();
    if (!stable) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ",%.3f", r.elapsed_ms);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string PadicResidue::str() const {
  return residue.get_str() + " (mod " + std::to_string(p) + "^" +
         std::to_string(M) + ")";
}

PadicResidue to_residue(const BigRational& r, long p, long M) {
  if (!is_odd_prime(p) && p != 2)
    throw InvalidParameterError("residue needs a prime p");
  if (M < 1) throw InvalidParameterError("residue precision M must be >= 1");
  if (!valuation(r, p).at_least(Valuation::finite(0)))
    throw InvalidParameterError(
        "residue undefined: " + r.str() + " has negative valuation at p = " +
        std::to_string(p));
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(M));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), r.den().get_mpz_t(), mod.get_mpz_t()) == 0)
    throw InvalidParameterError("denominator not invertible mod p^M");
  mpz_class res = (r.num() * dinv) % mod;
  if (res < 0) res += mod;
  return PadicResidue{p, M, res};
}

}  // namespace qeuler::padic

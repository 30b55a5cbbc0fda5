#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qeuler/qcore.hpp"

namespace qeuler::padic {

/// p-adic valuation: v_p(num) - v_p(den), +infinity for 0.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw InvalidParameterError("valuation is +infinity");
    return v_;
  }
  /// this >= other with +infinity on top.
  bool at_least(const Valuation& other) const {
    if (infinite_) return true;
    if (other.infinite_) return false;
    return v_ >= other.v_;
  }
  /// this >= other + gain; +infinity absorbs any gain.
  bool gained(const Valuation& other, long gain) const {
    if (infinite_) return true;
    if (other.infinite_) return false;
    return v_ >= other.v_ + gain;
  }
  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }

 private:
  Valuation(bool inf, long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long v_;
};

Valuation valuation(const BigRational& r, long p);

/// q is p-adically admissible when |1 - q|_p < 1, i.e. v_p(q - 1) >= 1;
/// then q^{p^N} -> 1 and the level sums below converge.
bool admissible_q(const BigRational& q, long p);

/// Where the finite level sums live: residues modulo d * p^N.  p must be
/// an odd prime, N >= 1, gcd(d, p) = 1.  M is the residue precision used
/// for display (comparisons use exact valuations).
struct PadicContext {
  long p = 3;
  long N = 1;
  long d = 1;
  long M = 8;

  PadicContext(long p_in, long N_in, long d_in = 1, long M_in = 8);
  PadicContext with_level(long N_new) const { return {p, N_new, d, M}; }
  /// d * p^N, the number of sample points per coordinate.
  unsigned long long points() const;
};

enum class Measure { fermionic, bosonic };

/// Weight layout of the k-fold integrand family
///   [shift + x_1 + ... + x_k]^m * q^{sum_j (h-j) x_j}   (j = 1..k).
/// h_minus_j is that general family; k1_weight is its k = 1 member (order
/// checked); pure_power is the bracket-free moment family q^{sum (h-j)x_j}
/// alone, i.e. m = 0 enforced.
enum class WeightPattern { h_minus_j, k1_weight, pure_power };

struct IntegrandSpec {
  long m = 0;
  long h = 1;
  long k = 1;
  long shift = 0;
  Measure mode = Measure::fermionic;
  WeightPattern pattern = WeightPattern::h_minus_j;

  void validate() const;
};

/// Weight of the single point x in the level-N measure on Z_p (d = 1) or
/// X_d: (-1)^x q^x [2]_q/(1+q^{d p^N}) in the fermionic case, q^x/[d p^N]_q
/// in the bosonic one.  0 <= x < d p^N.
BigRational measure_weight(long x, const PadicContext& ctx, const QValue& q,
                           Measure mode);

struct SumOptions {
  unsigned long long budget = 10'000'000;  // admissible term count
  int workers = 1;
};

/// The exact level-N Riemann sum of the integrand family over k copies of
/// the sample set: normaliser^k * sum over x-vectors of
/// prod_j (-1)^{x_j} q^{x_j (h-j+1)} * [shift + sum x_j]^m (fermionic; the
/// extra q^{x_j} relative to the integrand weight is the measure's own).
/// Throws ResourceError when (d p^N)^k exceeds the budget, and
/// InvalidParameterError when q is not admissible for ctx.p or the
/// fermionic mode is asked to run on an even-d sample set (the alternating
/// weight needs odd d, as it needs odd p).
BigRational riemann_sum(const IntegrandSpec& spec, const PadicContext& ctx,
                        const QValue& q, const SumOptions& opts = {});

struct ConvergenceRow {
  long N = 0;
  unsigned long long terms = 0;
  Valuation val = Valuation::infinite();
  double elapsed_ms = 0.0;
};

/// Level sums N = N_min..N_max with the valuation of S_N - target.
std::vector<ConvergenceRow> convergence_table(const IntegrandSpec& spec,
                                              const PadicContext& ctx,
                                              long N_min, long N_max,
                                              const QValue& q,
                                              const BigRational& target,
                                              const SumOptions& opts = {});

/// Convergence certificate: valuations never decrease, and every window of
/// two levels gains at least one power of p (identically-infinite tails
/// certify trivially).
bool certify_convergence(const std::vector<ConvergenceRow>& rows);

/// CSV with header "N,terms,valuation,elapsed_ms"; stable mode drops the
/// timing column so output is byte-reproducible.
std::string to_csv(const std::vector<ConvergenceRow>& rows, bool stable);

/// Display form of a rational with nonnegative valuation: its residue
/// modulo p^M.
struct PadicResidue {
  long p = 3;
  long M = 8;
  BigInt residue;

  std::string str() const;
};

PadicResidue to_residue(const BigRational& r, long p, long M);

}  // namespace qeuler::padic

#pragma once

#include <algorithm>

#include "qeuler/eval.hpp"

namespace qeuler {

/// Interval-style degree bookkeeping for rational functions in the three
/// verification variables q, tau and upsilon (the second argument of the
/// two-point identities).  A value tracks upper bounds on the numerator
/// and denominator degrees in each variable; running an identity's
/// evaluator over this scalar instead of BigRational yields a rigorous
/// bound on the degrees of lhs - rhs.  Bounds only ever grow (subtraction
/// assumes no cancellation), which is exactly what certification needs:
/// if lhs - rhs has numerator degree at most (dq, dt, du) and vanishes on
/// a grid of (dq+1) x (dt+1) x (du+1) distinct coordinates, it vanishes
/// identically.
struct DegreeBound {
  long nq = 0, dq = 0;  // numerator / denominator degree in q
  long nt = 0, dt = 0;  // ... in tau
  long nu = 0, du = 0;  // ... in upsilon

  static DegreeBound constant() { return {}; }
  static DegreeBound var_q() { return {1, 0, 0, 0, 0, 0}; }
  static DegreeBound var_tau() { return {0, 0, 1, 0, 0, 0}; }
  static DegreeBound var_upsilon() { return {0, 0, 0, 0, 1, 0}; }

  friend DegreeBound operator+(const DegreeBound& a, const DegreeBound& b) {
    // (P1/Q1) +- (P2/Q2) = (P1 Q2 +- P2 Q1) / (Q1 Q2)
    return {std::max(a.nq + b.dq, b.nq + a.dq), a.dq + b.dq,
            std::max(a.nt + b.dt, b.nt + a.dt), a.dt + b.dt,
            std::max(a.nu + b.du, b.nu + a.du), a.du + b.du};
  }
  friend DegreeBound operator-(const DegreeBound& a, const DegreeBound& b) {
    return a + b;
  }
  friend DegreeBound operator*(const DegreeBound& a, const DegreeBound& b) {
    return {a.nq + b.nq, a.dq + b.dq, a.nt + b.nt,
            a.dt + b.dt, a.nu + b.nu, a.du + b.du};
  }
  friend DegreeBound operator/(const DegreeBound& a, const DegreeBound& b) {
    return {a.nq + b.dq, a.dq + b.nq, a.nt + b.dt,
            a.dt + b.nt, a.nu + b.du, a.du + b.nu};
  }
  DegreeBound operator-() const { return *this; }
};

template <>
struct ScalarTraits<DegreeBound> {
  static DegreeBound from_int(long) { return DegreeBound::constant(); }
  static DegreeBound from_bigint(const BigInt&) { return DegreeBound::constant(); }
  static DegreeBound from_rational(const BigRational&) { return DegreeBound::constant(); }
  static bool is_exact_zero(const DegreeBound&) { return false; }
};

}  // namespace qeuler

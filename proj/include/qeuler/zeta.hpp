#pragma once

#include <complex>

#include "qeuler/rational.hpp"

namespace qeuler::zeta {

using Complex = std::complex<double>;

struct SeriesConfig {
  double eps = 1e-12;      // absolute tail target
  long max_terms = 1000000;
};

struct SeriesResult {
  Complex value;
  long n_terms = 0;        // terms actually summed
  double tail_bound = 0.0; // proven bound on the truncation error
};

/// Principal power b^e that refuses bases on the closed negative real
/// axis, where the branch choice would be arbitrary.  (For |q| < 1 and
/// x > 0 no bracket can reach the cut; the guard protects the contract
/// rather than a reachable state.)
Complex pow_off_cut(Complex base, Complex expo);

/// The weighted alternating Dirichlet series
///   [2]_q sum_{n>=0} (-1)^n q^{nh} [n+x]_q^{-s}
/// for |q| < 1, integer h >= 1, 0 < x <= 1.  Convergence is geometric with
/// ratio |q|^h; the returned tail_bound is the proven remainder bound at
/// truncation.  At s = -m this interpolates the degree-m member of the
/// order-1 family, at s = 0 it is [2]_q/(1+q^h) independently of x.
SeriesResult zeta_eq(Complex s, double x, Complex q, long h,
                     const SeriesConfig& cfg = {});

struct InterpolationResult {
  double series_value = 0.0;
  double closed_value = 0.0;
  double abs_diff = 0.0;
  long n_terms = 0;
};

/// Compares the series at s = -m against the closed form evaluated at
/// tau = q^x.  x and q are exact rationals: an integer x keeps the closed
/// side exact (rounded only on output), otherwise tau is formed in
/// floating point as exp(x ln q).  Requires real q in (0, 1).
InterpolationResult interpolation_check(long m, const BigRational& x,
                                        const BigRational& q, long h,
                                        const SeriesConfig& cfg = {});

/// The generating function F(t, x) = [2]_q sum (-1)^n q^{hn} e^{[n+x]_q t};
/// F(0, x) recovers the series at s = 0.
SeriesResult gen_fn(Complex t, double x, Complex q, long h,
                    const SeriesConfig& cfg = {});

struct MellinResult {
  double quadrature_value = 0.0;
  double series_value = 0.0;
  double abs_diff = 0.0;
  double T = 0.0;  // truncation point of the integral
};

/// Checks (1/Gamma(s)) int_0^inf t^{s-1} F(-t, x) dt against the series,
/// for real s > 0, real q in (0, 1).  The integral is cut at a T chosen
/// from the exponential decay bound of F(-t, x) and evaluated by
/// deterministic adaptive Simpson quadrature; s < 1 integrates in the
/// substituted variable u = t^s to remove the endpoint singularity.
MellinResult mellin_check(double s, double x, double q, long h,
                          const SeriesConfig& cfg = {});

}  // namespace qeuler::zeta

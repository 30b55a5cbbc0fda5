#include "qeuler/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qeuler/euler.hpp"
#include "qeuler/eval.hpp"

namespace qeuler::zeta {
namespace {

void require_finite(const Complex& v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw InvalidParameterError(std::string(what) +
                                ": value overflowed the floating range");
}

void validate_common(double x, const Complex& q, long h) {
  if (h < 1)
    throw InvalidParameterError("the series needs integer h >= 1, got " +
                                std::to_string(h));
  const double aq = std::abs(q);
  if (!(aq > 0.0) || aq >= 1.0)
    throw InvalidParameterError("the series needs 0 < |q| < 1");
  if (!(x > 0.0) || x > 1.0)
    throw InvalidParameterError("the series needs 0 < x <= 1");
}

// [n+x]_q in the complex plane, principal branch of q^{n+x}.
Complex bracket(double y, const Complex& q) {
  return (1.0 - std::exp(y * std::log(q))) / (1.0 - q);
}

}  // namespace

Complex pow_off_cut(Complex base, Complex expo) {
  if (base == Complex(0.0, 0.0))
    throw InvalidParameterError("power base is zero");
  if (base.real() <= 0.0 &&
      std::abs(base.imag()) <= 1e-14 * std::abs(base.real()))
    throw InvalidParameterError(
        "power base touches the negative real axis: branch is ambiguous");
  return std::exp(expo * std::log(base));
}

SeriesResult zeta_eq(Complex s, double x, Complex q, long h,
                     const SeriesConfig& cfg) {
  validate_common(x, q, h);
  if (!(cfg.eps > 0.0) || cfg.max_terms < 1)
    throw InvalidParameterError("series config needs eps > 0, max_terms >= 1");
  const double aq = std::abs(q);
  const double sigma = s.real();
  // |b^{-s}| <= B for every bracket b = [n+x]_q: moduli lie between
  // c1 = (1-|q|^x)/|1-q| and c2 = (1+|q|^x)/|1-q|, and for real positive
  // q the brackets themselves are real in [[x]_q, 1/(1-q)).
  const bool real_q = q.imag() == 0.0 && q.real() > 0.0;
  double c1, c2, arg_slack;
  if (real_q) {
    c1 = (1.0 - std::pow(q.real(), x)) / (1.0 - q.real());
    c2 = 1.0 / (1.0 - q.real());
    arg_slack = 1.0;
  } else {
    c1 = (1.0 - std::pow(aq, x)) / std::abs(1.0 - q);
    c2 = (1.0 + std::pow(aq, x)) / std::abs(1.0 - q);
    arg_slack = std::exp(std::abs(s.imag()) * 3.14159265358979323846);
  }
  const double B =
      std::max(std::pow(c1, -sigma), std::pow(c2, -sigma)) * arg_slack;
  const double ratio = std::pow(aq, static_cast<double>(h));
  const double two_abs = std::abs(1.0 + q);

  Complex acc(0.0, 0.0);
  Complex qh_pow(1.0, 0.0);  // q^{nh}
  const Complex qh = std::pow(q, static_cast<double>(h));
  double bound = 0.0;
  for (long n = 0; n < cfg.max_terms; ++n) {
    const Complex b = bracket(n + x, q);
    const Complex term = qh_pow * pow_off_cut(b, -s);
    acc += (n % 2 == 0) ? term : -term;
    require_finite(acc, "series");
    qh_pow *= qh;
    bound = two_abs * std::pow(aq, static_cast<double>(h) * (n + 1)) * B /
            (1.0 - ratio);
    if (bound < cfg.eps) {
      Complex value = (1.0 + q) * acc;
      require_finite(value, "series");
      return {value, n + 1, bound};
    }
  }
  throw TruncationError("series did not meet eps = " + std::to_string(cfg.eps) +
                            " within " + std::to_string(cfg.max_terms) +
                            " terms",
                        bound);
}

InterpolationResult interpolation_check(long m, const BigRational& x,
                                        const BigRational& q, long h,
                                        const SeriesConfig& cfg) {
  if (m < 0) throw InvalidParameterError("interpolation degree m must be >= 0");
  if (!(q > BigRational(0)) || !(q < BigRational(1)))
    throw InvalidParameterError("interpolation check needs rational q in (0,1)");
  if (!(x > BigRational(0)) || x > BigRational(1))
    throw InvalidParameterError("interpolation check needs rational x in (0,1]");
  const double xd = x.to_double();
  const double qd = q.to_double();
  SeriesResult series =
      zeta_eq(Complex(-static_cast<double>(m), 0.0), xd, Complex(qd, 0.0), h, cfg);

  double closed;
  if (x.is_integer()) {
    // exact path: tau = q^x stays rational
    const long xi = static_cast<long>(x.num().get_si());
    EvalPoint pt = EvalPoint::at_integer(QValue(q), xi);
    closed = euler_poly_h1(m, h, pt).to_double();
  } else {
    // tau = exp(x ln q); the closed form then carries the float error of
    // tau^j for j <= m, a few ulps each
    PowCache<double> cache(qd);
    const double tau = std::exp(xd * std::log(qd));
    closed = euler_hk(cache, m, h, 1, 1, tau);
  }
  InterpolationResult out;
  out.series_value = series.value.real();
  out.closed_value = closed;
  out.abs_diff = std::abs(out.series_value - out.closed_value);
  out.n_terms = series.n_terms;
  return out;
}

SeriesResult gen_fn(Complex t, double x, Complex q, long h,
                    const SeriesConfig& cfg) {
  validate_common(x, q, h);
  const double aq = std::abs(q);
  // every bracket has |[n+x]| <= (1 + |q|^x)/|1-q|
  const double L = (1.0 + std::pow(aq, x)) / std::abs(1.0 - q);
  const double ratio = std::pow(aq, static_cast<double>(h));
  const double growth = std::exp(L * std::abs(t));
  if (!std::isfinite(growth))
    throw InvalidParameterError("gen_fn: |t| too large, e^{[.]t} overflows");
  Complex acc(0.0, 0.0);
  Complex qh_pow(1.0, 0.0);
  const Complex qh = std::pow(q, static_cast<double>(h));
  double bound = 0.0;
  for (long n = 0; n < cfg.max_terms; ++n) {
    const Complex b = bracket(n + x, q);
    const Complex term = qh_pow * std::exp(b * t);
    acc += (n % 2 == 0) ? term : -term;
    require_finite(acc, "gen_fn");
    qh_pow *= qh;
    bound = std::abs(1.0 + q) *
            std::pow(aq, static_cast<double>(h) * (n + 1)) * growth /
            (1.0 - ratio);
    if (bound < cfg.eps) {
      Complex value = (1.0 + q) * acc;
      require_finite(value, "gen_fn");
      return {value, n + 1, bound};
    }
  }
  throw TruncationError("gen_fn did not meet eps within max_terms", bound);
}

namespace {

// Deterministic adaptive Simpson on [a, b].
double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double eps,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0)
    throw TruncationError("quadrature depth exhausted", std::abs(delta));
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

MellinResult mellin_check(double s, double x, double q, long h,
                          const SeriesConfig& cfg) {
  if (!(s > 0.0))
    throw InvalidParameterError("Mellin check covers real s > 0");
  if (!(q > 0.0) || q >= 1.0)
    throw InvalidParameterError("Mellin check needs real q in (0,1)");
  validate_common(x, Complex(q, 0.0), h);

  SeriesConfig series_cfg = cfg;
  series_cfg.eps = std::min(cfg.eps, 1e-12);
  const SeriesResult series =
      zeta_eq(Complex(s, 0.0), x, Complex(q, 0.0), h, series_cfg);

  const double a = (1.0 - std::pow(q, x)) / (1.0 - q);  // [x]_q > 0
  const double ratio = std::pow(q, static_cast<double>(h));
  const double gamma_s = std::tgamma(s);
  // tail of the integral beyond T:
  //   int_T^inf t^{s-1}|F(-t)| dt <= (1+q)/(1-q^h) e^{-aT/2} (2/a)^s Gamma(s)
  const double quad_eps = 1e-10;
  const double pref = (1.0 + q) / (1.0 - ratio) * std::pow(2.0 / a, s);
  double T = 2.0 / a * (std::log(std::max(pref, 1.0)) - std::log(quad_eps));
  T = std::max(T, 4.0);

  // F(-t, x) with a generous fixed term cap; geometric in q^h
  auto F_neg = [&](double t) {
    double acc = 0.0;
    double qh_pow = 1.0;
    for (long n = 0;; ++n) {
      const double b = (1.0 - std::pow(q, n + x)) / (1.0 - q);
      acc += ((n % 2 == 0) ? 1.0 : -1.0) * qh_pow * std::exp(-b * t);
      qh_pow *= ratio;
      if (qh_pow * std::exp(-a * t) / (1.0 - ratio) < 1e-17) break;
    }
    return (1.0 + q) * acc;
  };

  double integral;
  if (s >= 1.0) {
    // t = u^2 so the endpoint weight becomes u^{2s-1} with exponent >= 1;
    // the bare t^{s-1} has a singular derivative at 0 for non-integer s and
    // defeats the bisection:
    //   int_0^T t^{s-1} F(-t) dt = 2 int_0^{sqrt(T)} u^{2s-1} F(-u^2) du
    auto f = [&](double u) {
      return std::pow(u, 2.0 * s - 1.0) * F_neg(u * u);
    };
    integral = 2.0 * integrate(f, 0.0, std::sqrt(T), quad_eps);
  } else {
    // t = u^{1/s}: int_0^T t^{s-1} F(-t) dt = (1/s) int_0^{T^s} F(-u^{1/s}) du
    auto f = [&](double u) { return F_neg(std::pow(u, 1.0 / s)); };
    integral = integrate(f, 0.0, std::pow(T, s), quad_eps) / s;
  }
  MellinResult out;
  out.quadrature_value = integral / gamma_s;
  out.series_value = series.value.real();
  out.abs_diff = std::abs(out.quadrature_value - out.series_value);
  out.T = T;
  return out;
}

}  // namespace qeuler::zeta

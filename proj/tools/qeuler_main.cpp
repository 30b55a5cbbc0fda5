#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qeuler/acceptance.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/identities.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/zeta.hpp"

namespace {

using qeuler::BigRational;
using qeuler::EulerIndex;
using qeuler::EvalPoint;
using qeuler::InvalidParameterError;
using qeuler::QValue;

/// Shortest decimal form that round-trips back to the same double.
std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct GlobalOpts {
  std::string output;
  int workers = 1;
  unsigned long long budget = 10'000'000ULL;
  bool stable = false;
};

/// Opens the selected output stream; an empty path means stdout.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw InvalidParameterError("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct NumbersArgs {
  long m_max = 6;
  long h = 1;
  long k = 1;
  std::string q = "1/2";
  std::string format = "csv";
};

int cmd_numbers(const NumbersArgs& a, const GlobalOpts& g) {
  if (a.m_max < 0) throw InvalidParameterError("--m-max must be >= 0");
  const QValue q{BigRational::parse(a.q)};
  OutputStream out(g.output);
  if (a.format == "csv") out.get() << "m,value\n";
  for (long m = 0; m <= a.m_max; ++m) {
    const BigRational v = qeuler::euler_number_hk({m, a.h, a.k}, q);
    if (a.format == "csv") {
      out.get() << m << "," << v.str() << "\n";
    } else {
      nlohmann::ordered_json row;
      row["m"] = m;
      row["h"] = a.h;
      row["k"] = a.k;
      row["q"] = q.value().str();
      row["value"] = v.str();
      out.get() << row.dump() << "\n";
    }
  }
  return 0;
}

struct PolyArgs {
  long m_max = 6;
  long h = 1;
  long k = 1;
  std::string q = "1/2";
  std::optional<std::string> tau;
  std::optional<long> x;
  std::string format = "csv";
};

int cmd_poly(const PolyArgs& a, const GlobalOpts& g) {
  if (a.m_max < 0) throw InvalidParameterError("--m-max must be >= 0");
  const QValue q{BigRational::parse(a.q)};
  const EvalPoint pt =
      a.tau ? EvalPoint(q, BigRational::parse(*a.tau))
            : EvalPoint::at_integer(q, a.x.value_or(0));
  OutputStream out(g.output);
  if (a.format == "csv") out.get() << "m,value\n";
  for (long m = 0; m <= a.m_max; ++m) {
    const BigRational v = qeuler::euler_poly_hk({m, a.h, a.k}, pt);
    if (a.format == "csv") {
      out.get() << m << "," << v.str() << "\n";
    } else {
      nlohmann::ordered_json row;
      row["m"] = m;
      row["h"] = a.h;
      row["k"] = a.k;
      row["q"] = q.value().str();
      row["tau"] = pt.tau.str();
      row["value"] = v.str();
      out.get() << row.dump() << "\n";
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string grid = "default";
  std::vector<std::string> ids;
  bool certify = false;
  long m = 3, h = 2, k = 2, l = 3, i = 2;
};

int cmd_verify(const VerifyArgs& a, const GlobalOpts& g) {
  namespace idn = qeuler::identities;
  OutputStream out(g.output);
  if (a.certify) {
    std::vector<idn::DegreeCertificate> certs;
    if (a.ids.empty()) {
      certs = idn::certify_battery();
    } else {
      idn::IdentityParams inst;
      inst.m = a.m;
      inst.h = a.h;
      inst.k = a.k;
      inst.l = a.l;
      inst.i = a.i;
      for (const auto& id : a.ids)
        certs.push_back(idn::certify_instance(id, inst));
    }
    out.get() << "id,m,h,k,l,i,q_degree,tau_degree,upsilon_degree,points,"
                 "certified\n";
    bool all = true;
    for (const auto& c : certs) {
      auto opt = [](const std::optional<long>& v) {
        return v ? std::to_string(*v) : std::string();
      };
      out.get() << c.id << "," << opt(c.inst.m) << "," << opt(c.inst.h) << ","
                << opt(c.inst.k) << "," << opt(c.inst.l) << ","
                << opt(c.inst.i) << "," << c.q_degree << "," << c.tau_degree
                << "," << c.upsilon_degree << "," << c.points << ","
                << (c.certified ? "true" : "false") << "\n";
      all = all && c.certified;
    }
    return all ? 0 : 1;
  }

  idn::GridSpec grid;
  if (a.grid == "default") {
    grid = idn::GridSpec::default_grid();
  } else if (a.grid == "small") {
    grid = idn::GridSpec::small_grid();
  } else {
    throw InvalidParameterError("--grid must be 'default' or 'small'");
  }
  idn::RunOptions opts;
  opts.workers = g.workers;
  const auto reports = idn::run_registry(grid, a.ids, opts);
  out.get() << idn::to_json_lines(reports);
  long fails = 0;
  for (const auto& r : reports)
    if (!r.pass) ++fails;
  std::cerr << reports.size() << " checks, " << fails << " failures\n";
  return fails == 0 ? 0 : 1;
}

struct IntegrateArgs {
  long m = 0;
  long h = 1;
  long k = 1;
  long shift = 0;
  long p = 3;
  long d = 1;
  long n_min = 1;
  long n_max = 4;
  long M = 8;
  std::string q = "4";
  std::string mode = "fermionic";
  std::string pattern = "general";
  std::string target = "auto";
};

int cmd_integrate(const IntegrateArgs& a, const GlobalOpts& g) {
  namespace pad = qeuler::padic;
  if (a.n_min < 1 || a.n_max < a.n_min)
    throw InvalidParameterError("need 1 <= --n-min <= --n-max");
  const QValue q{BigRational::parse(a.q)};
  pad::IntegrandSpec spec;
  spec.m = a.m;
  spec.h = a.h;
  spec.k = a.k;
  spec.shift = a.shift;
  spec.mode =
      a.mode == "bosonic" ? pad::Measure::bosonic : pad::Measure::fermionic;
  if (a.pattern == "k1") {
    spec.pattern = pad::WeightPattern::k1_weight;
  } else if (a.pattern == "pure") {
    spec.pattern = pad::WeightPattern::pure_power;
  } else {
    spec.pattern = pad::WeightPattern::h_minus_j;
  }
  spec.validate();

  BigRational target;
  if (a.target == "auto") {
    if (spec.mode != pad::Measure::fermionic)
      throw InvalidParameterError(
          "no automatic target for the bosonic measure; pass --target num/den");
    const EvalPoint pt(q, pow(q.value(), a.shift));
    target = qeuler::euler_poly_hk({spec.m, spec.h, spec.k}, pt);
  } else {
    target = BigRational::parse(a.target);
  }

  const pad::PadicContext ctx(a.p, a.n_min, a.d, a.M);
  pad::SumOptions opts;
  opts.budget = g.budget;
  opts.workers = g.workers;
  const auto rows =
      pad::convergence_table(spec, ctx, a.n_min, a.n_max, q, target, opts);
  OutputStream out(g.output);
  out.get() << pad::to_csv(rows, g.stable);
  return 0;
}

struct ZetaArgs {
  double s_re = 0.0;
  double s_im = 0.0;
  double x = 1.0;
  double q = 0.5;
  long h = 1;
  double eps = 1e-12;
  long max_terms = 1000000;
};

int cmd_zeta(const ZetaArgs& a, const GlobalOpts& g) {
  namespace zt = qeuler::zeta;
  zt::SeriesConfig cfg;
  cfg.eps = a.eps;
  cfg.max_terms = a.max_terms;
  const auto r = zt::zeta_eq(zt::Complex(a.s_re, a.s_im), a.x,
                             zt::Complex(a.q, 0.0), a.h, cfg);
  OutputStream out(g.output);
  out.get() << "s_re,s_im,x,q,h,value_re,value_im,n_terms,tail_bound\n"
            << fmt_double(a.s_re) << "," << fmt_double(a.s_im) << ","
            << fmt_double(a.x) << "," << fmt_double(a.q) << "," << a.h << ","
            << fmt_double(r.value.real()) << "," << fmt_double(r.value.imag())
            << "," << r.n_terms << "," << fmt_double(r.tail_bound) << "\n";
  return 0;
}

int cmd_selftest(const GlobalOpts& g) {
  OutputStream out(g.output);
  return qeuler::acceptance::run_all(out.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed Euler numbers, identity verification, "
               "p-adic level sums and the interpolating series"};
  // --h is a domain option on most subcommands, so the help flag must not
  // claim the short name -h.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("QEULER_BUDGET")) {
    const std::string s(env);
    unsigned long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0) {
      std::cerr << "error: QEULER_BUDGET must be a positive integer, got '"
                << s << "'\n";
      return 2;
    }
    g.budget = v;
  }
  app.add_option("-o,--output", g.output, "Write output to a file instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads for grid runs and level sums")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--budget", g.budget,
                 "Term budget for level sums (env QEULER_BUDGET)")
      ->capture_default_str();
  app.add_flag("--stable", g.stable,
               "Byte-reproducible output: drop timing columns");

  NumbersArgs na;
  auto* numbers = app.add_subcommand(
      "numbers", "Print the numbers of the order-k family at x = 0");
  numbers->set_help_flag("--help", "Print this help message and exit");
  numbers->fallthrough();
  numbers->add_option("--m-max", na.m_max, "Largest degree")->capture_default_str();
  numbers->add_option("--h", na.h, "Weight")->capture_default_str();
  numbers->add_option("--k", na.k, "Order (>= 0)")->capture_default_str();
  numbers->add_option("--q", na.q, "Base, as num/den or integer")->capture_default_str();
  numbers->add_option("--format", na.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  PolyArgs pa;
  auto* poly = app.add_subcommand(
      "poly", "Evaluate the polynomials at an argument tau = q^x");
  poly->set_help_flag("--help", "Print this help message and exit");
  poly->fallthrough();
  poly->add_option("--m-max", pa.m_max, "Largest degree")->capture_default_str();
  poly->add_option("--h", pa.h, "Weight")->capture_default_str();
  poly->add_option("--k", pa.k, "Order (>= 0)")->capture_default_str();
  poly->add_option("--q", pa.q, "Base, as num/den or integer")->capture_default_str();
  auto* tau_opt =
      poly->add_option("--tau", pa.tau, "Argument tau directly, as num/den");
  poly->add_option("--x", pa.x, "Integer argument x (tau = q^x)")
      ->excludes(tau_opt);
  poly->add_option("--format", pa.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify", "Run the identity registry; JSON report per check");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->fallthrough();
  verify->add_option("--grid", va.grid, "default or small")
      ->check(CLI::IsMember({"default", "small"}))
      ->capture_default_str();
  verify->add_option("--id", va.ids,
                     "Check only these ids (may repeat; literal variants "
                     "are only run when named here)");
  verify->add_flag("--certify", va.certify,
                   "Degree-certify instances instead of grid checking; "
                   "without --id runs the standard battery");
  verify->add_option("--m", va.m, "Instance degree for --certify")->capture_default_str();
  verify->add_option("--h", va.h, "Instance weight for --certify")->capture_default_str();
  verify->add_option("--k", va.k, "Instance order for --certify")->capture_default_str();
  verify->add_option("--l", va.l, "Instance modulus for --certify")->capture_default_str();
  verify->add_option("--i", va.i, "Instance depth for --certify")->capture_default_str();

  IntegrateArgs ia;
  auto* integrate = app.add_subcommand(
      "integrate", "Exact level sums with p-adic convergence report");
  integrate->set_help_flag("--help", "Print this help message and exit");
  integrate->fallthrough();
  integrate->add_option("--m", ia.m, "Bracket exponent")->capture_default_str();
  integrate->add_option("--h", ia.h, "Weight")->capture_default_str();
  integrate->add_option("--k", ia.k, "Fold count")->capture_default_str();
  integrate->add_option("--shift", ia.shift, "Integer shift inside the bracket")
      ->capture_default_str();
  integrate->add_option("--p", ia.p, "Odd prime")->capture_default_str();
  integrate->add_option("--d", ia.d, "Sample-set width, coprime to p")
      ->capture_default_str();
  integrate->add_option("--n-min", ia.n_min, "First level")->capture_default_str();
  integrate->add_option("--n-max", ia.n_max, "Last level")->capture_default_str();
  integrate->add_option("--q", ia.q, "Base, as num/den or integer; needs v_p(q-1) >= 1")
      ->capture_default_str();
  integrate->add_option("--mode", ia.mode, "fermionic or bosonic")
      ->check(CLI::IsMember({"fermionic", "bosonic"}))
      ->capture_default_str();
  integrate->add_option("--pattern", ia.pattern,
                        "Weight layout: general, k1 or pure")
      ->check(CLI::IsMember({"general", "k1", "pure"}))
      ->capture_default_str();
  integrate->add_option("--target", ia.target,
                        "Limit to compare against: auto or num/den")
      ->capture_default_str();

  ZetaArgs za;
  auto* zeta = app.add_subcommand(
      "zeta", "Evaluate the interpolating series at complex s");
  zeta->set_help_flag("--help", "Print this help message and exit");
  zeta->fallthrough();
  zeta->add_option("--s-re", za.s_re, "Re(s)")->capture_default_str();
  zeta->add_option("--s-im", za.s_im, "Im(s)")->capture_default_str();
  zeta->add_option("--x", za.x, "Argument in (0, 1]")->capture_default_str();
  zeta->add_option("--q", za.q, "Real base in (0, 1)")->capture_default_str();
  zeta->add_option("--h", za.h, "Weight >= 1")->capture_default_str();
  zeta->add_option("--eps", za.eps, "Tail target")->capture_default_str();
  zeta->add_option("--max-terms", za.max_terms, "Term limit")->capture_default_str();

  auto* selftest =
      app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->set_help_flag("--help", "Print this help message and exit");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (numbers->parsed()) return cmd_numbers(na, g);
    if (poly->parsed()) return cmd_poly(pa, g);
    if (verify->parsed()) return cmd_verify(va, g);
    if (integrate->parsed()) return cmd_integrate(ia, g);
    if (zeta->parsed()) return cmd_zeta(za, g);
    if (selftest->parsed()) return cmd_selftest(g);
  } catch (const qeuler::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qeuler::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // a certification run found a disagreeing point
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

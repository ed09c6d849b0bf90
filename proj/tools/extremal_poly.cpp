#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extremal/energy.hpp"
#include "extremal/lemniscate.hpp"
#include "extremal/serialize.hpp"
#include "extremal/verify.hpp"

using namespace extremal;

namespace {

struct Args {
  double a = 1.0;
  int d = 2;
  double disc = 1.0;
  double m = 2.0;
  double v = 0.0;
  std::vector<double> roots;
  bool bounds = false;
  bool deep = false;
  std::string what;
  int samples = 0;
};

RealRootedPoly<double> poly_of(const std::vector<double> &roots) {
  VectorXd r(Eigen::Index(roots.size()));
  for (std::size_t k = 0; k < roots.size(); ++k)
    r[Eigen::Index(k)] = roots[k];
  return RealRootedPoly<double>(r);
}

double tolerance_from_env() {
  const char *env = std::getenv("EXTREMAL_POLY_TOL");
  if (!env || !*env)
    return tol::oracle;
  char *end = nullptr;
  const double value = std::strtod(env, &end);
  if (*end != '\0' || !(value > 0) || !std::isfinite(value))
    throw InputError(std::string("EXTREMAL_POLY_TOL is not a positive number: ") + env);
  return value;
}

int cmd_lemniscate(const Args &args) {
  const auto p = poly_of(args.roots);
  Json j = to_json(largest_disk(p));
  if (args.bounds) {
    const auto disc = log_disc_from_roots(p);
    Json b;
    b["log_disc"] = log_disc_json(disc);
    if (disc.is_zero()) {
      b["radius_upper_bound"] = nullptr;
      b["radius_lower_bound"] = nullptr;
    } else {
      b["radius_upper_bound"] = std::exp(log_radius_upper_bound(p.degree(), disc.log_abs));
      const auto lower = radius_lower_bound_regime(p.degree(), disc.value());
      b["radius_lower_bound"] = lower ? Json(*lower) : Json(nullptr);
    }
    j["bounds"] = b;
  }
  std::cout << dump_json(j);
  return 0;
}

int cmd_emit_plot(const Args &args) {
  if (args.what == "lemniscate") {
    if (args.roots.empty())
      throw InputError("emit-plot --what lemniscate needs --roots");
    const auto p = poly_of(args.roots);
    const int n = args.samples > 0 ? args.samples : 64 * p.degree();
    if (n < 2)
      throw InputError("--samples must be at least 2");
    const double left = p.roots()[0] - 1.0, right = p.roots()[p.degree() - 1] + 1.0;
    std::string out = "x,halfwidth\n";
    for (int i = 0; i < n; ++i) {
      const double x = left + (right - left) * i / double(n - 1);
      out += format_real(x) + "," + format_real(vertical_halfwidth(p, x)) + "\n";
    }
    std::cout << out;
    return 0;
  }
  if (args.what == "cdf") {
    std::string out = "x,empirical,arctan\n";
    for (const auto &row : cdf_table(solve_equilibrium(args.a, args.d, args.v)))
      out += format_real(row.x) + "," + format_real(row.empirical) + "," + format_real(row.arctan) +
             "\n";
    std::cout << out;
    return 0;
  }
  throw InputError("--what must be lemniscate or cdf");
}

int cmd_verify(const Args &args) {
  const auto checks = run_verify({args.deep, tolerance_from_env()});
  std::cout << render_report(checks);
  if (all_passed(checks))
    return 0;
  for (const auto &c : checks)
    if (!c.pass)
      std::cerr << "failed: " << c.name << "\n";
  return 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Extremal real-rooted polynomials: |f(ai)| versus discriminant"};
  app.require_subcommand(1);
  Args args;

  auto *min = app.add_subcommand("solve-min", "least |f(ai)| at a prescribed discriminant");
  min->add_option("--a", args.a, "evaluation height")->required();
  min->add_option("--d", args.d, "degree")->required();
  min->add_option("--disc", args.disc, "discriminant D")->required();

  auto *disc = app.add_subcommand("solve-disc", "largest discriminant at a prescribed |f(ai)|");
  disc->add_option("--a", args.a, "evaluation height")->required();
  disc->add_option("--d", args.d, "degree")->required();
  disc->add_option("--m", args.m, "value of |f(ai)|")->required();

  auto *lem = app.add_subcommand("lemniscate", "largest disk inside {|f| <= 1}");
  lem->add_option("--roots", args.roots, "comma-separated real roots")->required()->delimiter(',');
  lem->add_flag("--bounds", args.bounds, "include the discriminant radius bounds");

  auto *energy = app.add_subcommand("energy", "minimum-energy charges with potential v at ai");
  energy->add_option("--a", args.a, "evaluation height")->required();
  energy->add_option("--d", args.d, "number of charges")->required();
  energy->add_option("--v", args.v, "potential at ai")->required();

  auto *verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_flag("--deep", args.deep, "degrees up to 8 and the numeric oracle");

  auto *plot = app.add_subcommand("emit-plot", "plot-ready CSV on stdout");
  plot->add_option("--what", args.what, "lemniscate or cdf")->required();
  plot->add_option("--roots", args.roots, "roots for the lemniscate profile")->delimiter(',');
  plot->add_option("--samples", args.samples, "grid points for the lemniscate profile");
  plot->add_option("--a", args.a, "evaluation height for the cdf");
  plot->add_option("--d", args.d, "number of charges for the cdf");
  plot->add_option("--v", args.v, "potential for the cdf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*min) {
      std::cout << dump_json(to_json(solve_min_abs(args.a, args.d, args.disc)));
    } else if (*disc) {
      std::cout << dump_json(to_json(solve_max_disc(args.a, args.d, args.m)));
    } else if (*lem) {
      return cmd_lemniscate(args);
    } else if (*energy) {
      std::cout << dump_json(to_json(solve_equilibrium(args.a, args.d, args.v)));
    } else if (*verify) {
      return cmd_verify(args);
    } else if (*plot) {
      return cmd_emit_plot(args);
    }
  } catch (const MonotonicityError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const StructureError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

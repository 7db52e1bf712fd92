#include "meanwidth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "meanwidth/asymptotics.hpp"
#include "meanwidth/errors.hpp"
#include "meanwidth/geom.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/records.hpp"
#include "meanwidth/specfn.hpp"
#include "meanwidth/verify.hpp"
#include "meanwidth/widths.hpp"

namespace meanwidth::cli {

namespace {

using widths::Family;
using widths::Provenance;
using widths::Source;

constexpr const char* kFormatHelp =
    "Output format.  json: array of records, reals in shortest round-trip form; "
    "csv: header quantity,value,error_estimate,method,provenance,n with 17 significant "
    "digits; pretty: aligned text with 12 significant digits.";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "pretty";
  double tol = 1e-12;
  int max_subdivisions = quad::QuadConfig{}.max_subdivisions;

  [[nodiscard]] quad::QuadConfig config() const {
    quad::QuadConfig cfg;
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
    cfg.max_subdivisions = max_subdivisions;
    return cfg;
  }

  [[nodiscard]] OutputFormat output_format() const {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    return OutputFormat::pretty;
  }
};

void add_common(CLI::App* cmd, Common& common, bool with_tol = true) {
  cmd->add_option("--format", common.format, kFormatHelp)
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  if (with_tol) {
    cmd->add_option("--tol", common.tol, "Absolute and relative quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-subdivisions", common.max_subdivisions,
                    "Interval budget per adaptive integral")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

OutputRecord record(std::string quantity, double value, std::string method,
                    Provenance provenance, std::optional<std::int64_t> n = std::nullopt,
                    std::optional<double> error = std::nullopt) {
  return OutputRecord{std::move(quantity), value, error, std::move(method),
                      std::string(widths::to_string(provenance)), n};
}

// --- width -------------------------------------------------------------------

struct WidthArgs {
  std::string family;
  int n = 0;
  std::string method;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = geom::kDefaultSeed;
  int workers = 0;
};

std::vector<OutputRecord> cmd_width(const WidthArgs& a, const Common& common) {
  const auto family = widths::parse_family(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'");
  std::string method = a.method;
  if (method.empty()) {
    switch (*family) {
      case Family::simplex:
        method = a.n <= widths::kMaxClosedSimplexN ? "closed" : "quadrature";
        break;
      case Family::cube: method = "closed"; break;
      case Family::crosspolytope: method = "quadrature"; break;
    }
  }
  const bool available =
      method == "mc" || (*family == Family::simplex) ||
      (*family == Family::cube && method == "closed") ||
      (*family == Family::crosspolytope && method == "quadrature");
  if (!available) {
    throw UsageError("method '" + method + "' is not available for " + a.family);
  }
  const auto cfg = common.config();
  const std::int64_t n = a.n;
  std::vector<OutputRecord> out;

  if (method == "mc") {
    if (a.samples < 1000) throw UsageError("--samples must be at least 1000");
    const auto est = geom::mc_width_moments(*family, a.n, a.samples, a.seed, a.workers);
    out.push_back(record("mean_width", est.width.mean, "mc", Provenance::monte_carlo, n,
                         est.width.std_error));
    out.push_back(record("mean_sq_width", est.width_sq.mean, "mc", Provenance::monte_carlo, n,
                         est.width_sq.std_error));
    return out;
  }

  const Source source = method == "closed" ? Source::closed : Source::quadrature;
  if (*family == Family::simplex && a.n + 1 > orderstats::kMaxQuadratureN) {
    throw DomainError("simplex quadrature needs n + 1 <= " +
                      std::to_string(orderstats::kMaxQuadratureN));
  }
  auto rep = widths::width_report(*family, a.n, source, cfg);
  if (method == "hz") {
    rep.mean_width = widths::simplex_mean_width_hz(a.n, cfg);
    rep.mean_width_circumscaled = rep.mean_width / rep.circumradius;
    rep.mean_width_inscaled = rep.mean_width / rep.inradius;
  }
  out.push_back(record("mean_width", rep.mean_width, method, Provenance::theorem, n));
  if (rep.mean_sq_width) {
    // hz has no mean-square counterpart; that value comes from the range route.
    const std::string sq_method = method == "hz" ? "quadrature" : method;
    out.push_back(record("mean_sq_width", *rep.mean_sq_width, sq_method,
                         rep.mean_sq_provenance, n));
  }
  out.push_back(record("circumradius", rep.circumradius, "closed", Provenance::theorem, n));
  out.push_back(record("inradius", rep.inradius, "closed", Provenance::theorem, n));
  out.push_back(record("mean_width_circumscaled", rep.mean_width_circumscaled, method,
                       Provenance::theorem, n));
  out.push_back(record("mean_width_inscaled", rep.mean_width_inscaled, method,
                       Provenance::theorem, n));
  return out;
}

// --- moments / constants / asymptotics -----------------------------------------

std::vector<OutputRecord> cmd_moments(int n, const Common& common) {
  const auto cfg = common.config();
  std::vector<OutputRecord> out;
  out.push_back(record("mu", orderstats::mu_quadrature(n, cfg), "quadrature",
                       Provenance::theorem, n));
  out.push_back(record("nu", orderstats::nu_quadrature(n, cfg), "quadrature",
                       Provenance::theorem, n));
  if (n >= 2 && n <= 7) {
    out.push_back(record("mu", orderstats::mu_closed(n), "closed", Provenance::theorem, n));
    out.push_back(record("nu", orderstats::nu_closed(n), "closed", Provenance::theorem, n));
  }
  return out;
}

std::vector<OutputRecord> cmd_constants(const Common& common) {
  const auto cfg = common.config();
  using namespace orderstats;
  return {
      record("S_1/2", s_constant(0.5), "closed", Provenance::theorem),
      record("S_2", s_constant(2.0), "closed", Provenance::theorem),
      record("S_3", s_constant(3.0), "closed", Provenance::theorem),
      record("T_2", t_constant(2.0, cfg), "quadrature", Provenance::theorem),
      record("T_3", t_constant(3.0, cfg), "quadrature", Provenance::theorem),
      record("U", u_constant(cfg), "quadrature", Provenance::theorem),
      record("V", v_constant(cfg), "quadrature", Provenance::theorem),
  };
}

std::vector<OutputRecord> cmd_asymptotics(std::int64_t n, const Common& common) {
  if (n < 3) throw DomainError("asymptotics: n must be >= 3");
  const auto cfg = common.config();
  const double x = static_cast<double>(n);
  const auto ev = asymptotics::evaluate(x);
  std::vector<OutputRecord> out;
  out.push_back(record("a_n", ev.a_n, "lambert_w", Provenance::theorem, n,
                       std::abs(asymptotics::a_n_residual(x, ev.a_n))));
  out.push_back(
      record("a_n_expansion", asymptotics::a_n_expansion(x), "asymptotic", Provenance::theorem, n));
  out.push_back(record("mu_asymptotic", ev.mu_approx, "asymptotic", Provenance::theorem, n));
  out.push_back(
      record("mean_width_asymptotic", ev.mean_width_approx, "asymptotic", Provenance::theorem, n));
  out.push_back(record("mean_width_inscaled_asymptotic", ev.inscaled_approx, "asymptotic",
                       Provenance::theorem, n));
  out.push_back(record("mean_width_inscaled_leading", asymptotics::inscaled_mean_width_leading(x),
                       "asymptotic", Provenance::theorem, n));
  if (n + 1 <= orderstats::kMaxQuadratureN) {
    out.push_back(record("mu", orderstats::mu_quadrature(static_cast<int>(n), cfg), "quadrature",
                         Provenance::theorem, n));
    out.push_back(record("mean_width",
                         widths::simplex_mean_width(static_cast<int>(n), Source::quadrature, cfg),
                         "quadrature", Provenance::theorem, n));
  }
  return out;
}

// --- octahedron / surface grid -----------------------------------------------

std::vector<OutputRecord> cmd_octahedron(const Common& common) {
  const auto cfg = common.config();
  const auto sector = geom::octa_sector_mean_sq(cfg);
  const double pi = specfn::kPi;
  return {
      record("mean_width", geom::octa_mean_width_exact(), "closed", Provenance::theorem, 3),
      record("mean_width", geom::octa_sphere_integral(1, cfg), "quadrature", Provenance::theorem,
             3),
      record("mean_width", widths::crosspolytope_mean_width(3, cfg), "crosspolytope_integral",
             Provenance::theorem, 3),
      record("mean_sq_width", geom::octa_mean_sq_width_exact(), "closed", Provenance::theorem, 3),
      record("mean_sq_width", geom::octa_sphere_integral(2, cfg), "quadrature",
             Provenance::theorem, 3),
      record("mean_sq_width", sector.mean_sq, "sector", Provenance::theorem, 3),
      record("sector_integral", sector.sector_integral, "quadrature", Provenance::theorem, 3),
      record("sector_symmetry_factor", sector.symmetry_factor, "empirical", Provenance::theorem,
             3),
      record("phi_boundary_0", geom::octa_phi_boundary(0.0), "closed", Provenance::theorem, 3),
      record("phi_boundary_pi_4", geom::octa_phi_boundary(pi / 4.0), "closed",
             Provenance::theorem, 3),
  };
}

void cmd_surface_grid(int theta_steps, int phi_steps, std::ostream& out) {
  const double pi = specfn::kPi;
  char buf[96];
  out << "theta,phi,value\n";
  for (int i = 0; i <= theta_steps; ++i) {
    const double theta = 2.0 * pi * i / theta_steps;
    for (int j = 0; j <= phi_steps; ++j) {
      const double phi = pi * j / phi_steps;
      const auto p = geom::spherical_point(theta, phi);
      const double value = std::sqrt(geom::octa_g(p[0], p[1], p[2]) / 2.0);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", theta, phi, value);
      out << buf;
    }
  }
}

// --- verify --------------------------------------------------------------------

int cmd_verify(std::int64_t samples, std::uint64_t seed, int workers, const Common& common,
               std::ostream& out, std::ostream& err) {
  const auto checks = verify::run_triangulation(samples, seed, workers);
  std::vector<OutputRecord> records;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed();
    err << (c.passed() ? "PASS " : "FAIL ") << c.name << "  deviation=" << c.deviation
        << "  tolerance=" << c.tolerance << (c.monte_carlo ? " (standard errors)" : "") << '\n';
    records.push_back(record(c.name, c.deviation, "verify",
                             c.monte_carlo ? Provenance::monte_carlo : Provenance::theorem,
                             std::nullopt, c.tolerance));
  }
  write_records(out, records, common.output_format());
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Mean widths of regular simplices, cubes and crosspolytopes, normal-sample range "
      "moments and their asymptotics.\n"
      "Exit codes: 0 ok, 1 verification failed, 2 usage, 3 domain error, 4 convergence "
      "failure.",
      "meanwidth"};
  app.require_subcommand(1);

  Common common;

  WidthArgs width_args;
  auto* width = app.add_subcommand("width", "Mean width and mean square width of a polytope");
  width->add_option("family", width_args.family, "simplex | cube | crosspolytope")->required();
  width->add_option("n", width_args.n, "Dimension")->required();
  width->add_option("--method", width_args.method,
                    "closed | quadrature | hz | mc (default: closed where available)")
      ->check(CLI::IsMember({"closed", "quadrature", "hz", "mc"}));
  width->add_option("--samples", width_args.samples, "Monte Carlo sample count")
      ->capture_default_str();
  width->add_option("--seed", width_args.seed, "Monte Carlo seed")->capture_default_str();
  width->add_option("--workers", width_args.workers, "Monte Carlo threads (0: all cores)")
      ->capture_default_str();
  add_common(width, common);

  int moments_n = 0;
  auto* moments = app.add_subcommand("moments", "Range moments mu_n, nu_n of n normal samples");
  moments->add_option("n", moments_n, "Sample size")->required();
  add_common(moments, common);

  auto* constants = app.add_subcommand("constants", "Auxiliary constants S, T, U, V");
  add_common(constants, common);

  std::int64_t asym_n = 0;
  auto* asym = app.add_subcommand("asymptotics", "Large-n expansions at a given n");
  asym->add_option("n", asym_n, "Sample size / dimension (>= 3)")->required();
  add_common(asym, common);

  std::int64_t verify_samples = 200'000;
  std::uint64_t verify_seed = geom::kDefaultSeed;
  int verify_workers = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all independent routes");
  verify_cmd->add_option("--samples", verify_samples, "Monte Carlo samples per body")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Monte Carlo seed")->capture_default_str();
  verify_cmd->add_option("--workers", verify_workers, "Monte Carlo threads (0: all cores)")
      ->capture_default_str();
  add_common(verify_cmd, common, false);

  auto* octa = app.add_subcommand("octahedron", "Regular octahedron: exact, quadrature, sector");
  add_common(octa, common);

  int theta_steps = 64;
  int phi_steps = 32;
  auto* grid = app.add_subcommand(
      "surface-grid",
      "CSV grid of sqrt(g/2) for the octahedron.  Header theta,phi,value; rows in "
      "row-major order in theta; theta = 2 pi i / theta-steps (i = 0..theta-steps), "
      "phi = pi j / phi-steps (j = 0..phi-steps).");
  grid->add_option("--theta-steps", theta_steps)->check(CLI::PositiveNumber)->capture_default_str();
  grid->add_option("--phi-steps", phi_steps)->check(CLI::PositiveNumber)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    std::vector<OutputRecord> records;
    if (*width) {
      records = cmd_width(width_args, common);
    } else if (*moments) {
      records = cmd_moments(moments_n, common);
    } else if (*constants) {
      records = cmd_constants(common);
    } else if (*asym) {
      records = cmd_asymptotics(asym_n, common);
    } else if (*verify_cmd) {
      return cmd_verify(verify_samples, verify_seed, verify_workers, common, out, err);
    } else if (*octa) {
      records = cmd_octahedron(common);
    } else if (*grid) {
      cmd_surface_grid(theta_steps, phi_steps, out);
      return kOk;
    }
    write_records(out, records, common.output_format());
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kConvergence;
  }
}

}  // namespace meanwidth::cli

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "meanwidth/asymptotics.hpp"
#include "meanwidth/errors.hpp"
#include "meanwidth/geom.hpp"
#include "meanwidth/orderstats.hpp"
#include "meanwidth/specfn.hpp"
#include "meanwidth/widths.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace meanwidth;

namespace {

quad::QuadConfig tolerance(double tol) {
  quad::QuadConfig cfg;
  cfg.abs_tol = tol;
  cfg.rel_tol = tol;
  return cfg;
}

widths::Family family_from(const std::string& name) {
  const auto f = widths::parse_family(name);
  if (!f) throw DomainError("unknown family '" + name + "'");
  return *f;
}

widths::Source source_from(const std::string& name) {
  if (name == "closed") return widths::Source::closed;
  if (name == "quadrature") return widths::Source::quadrature;
  throw DomainError("source must be 'closed' or 'quadrature', got '" + name + "'");
}

py::dict mc_dict(const geom::McEstimate& e) {
  return py::dict("mean"_a = e.mean, "stderr"_a = e.std_error, "samples"_a = e.samples,
                  "seed"_a = e.seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mean widths of regular polytopes and normal-sample range moments";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("normal_pdf", &specfn::normal_pdf, "x"_a);
  m.def("normal_cdf", &specfn::normal_cdf, "x"_a);
  m.def("arcsec", &specfn::arcsec, "x"_a);
  m.def("lambert_w0", &specfn::lambert_w0, "x"_a);
  m.def("bessel_k0", &specfn::bessel_k0, "x"_a);
  m.def("gamma_ratio_half", &specfn::gamma_ratio_half, "n"_a,
        "Gamma(n/2) / Gamma((n+1)/2)");
  m.def("chi_mean", &specfn::chi_mean, "n"_a);

  m.def("mu_quadrature", [](int n, double tol) { return orderstats::mu_quadrature(n, tolerance(tol)); },
        "n"_a, "tol"_a = 1e-12, "Expected range of n standard normal samples");
  m.def("nu_quadrature", [](int n, double tol) { return orderstats::nu_quadrature(n, tolerance(tol)); },
        "n"_a, "tol"_a = 1e-12, "Expected squared range of n standard normal samples");
  m.def("mu_closed", &orderstats::mu_closed, "n"_a);
  m.def("nu_closed", &orderstats::nu_closed, "n"_a);
  m.def("s_constant", &orderstats::s_constant, "k"_a);
  m.def("t_constant", [](double k, double tol) { return orderstats::t_constant(k, tolerance(tol)); },
        "k"_a, "tol"_a = 1e-12);
  m.def("u_constant", [](double tol) { return orderstats::u_constant(tolerance(tol)); },
        "tol"_a = 1e-12);
  m.def("v_constant", [](double tol) { return orderstats::v_constant(tolerance(tol)); },
        "tol"_a = 1e-12);

  m.def("simplex_mean_width",
        [](int n, const std::string& source, double tol) {
          return widths::simplex_mean_width(n, source_from(source), tolerance(tol));
        },
        "n"_a, "source"_a = "quadrature", "tol"_a = 1e-12);
  m.def("simplex_mean_width_hz",
        [](int n, double tol) { return widths::simplex_mean_width_hz(n, tolerance(tol)); },
        "n"_a, "tol"_a = 1e-12);
  m.def("simplex_mean_sq_width",
        [](int n, const std::string& source, double tol) {
          return widths::simplex_mean_sq_width(n, source_from(source), tolerance(tol));
        },
        "n"_a, "source"_a = "quadrature", "tol"_a = 1e-12);
  m.def("cube_mean_width", &widths::cube_mean_width, "n"_a);
  m.def("cube_mean_sq_width", &widths::cube_mean_sq_width, "n"_a);
  m.def("crosspolytope_mean_width",
        [](int n, double tol) { return widths::crosspolytope_mean_width(n, tolerance(tol)); },
        "n"_a, "tol"_a = 1e-12);
  m.def("width_report",
        [](const std::string& family, int n, const std::string& source, double tol) {
          const auto r =
              widths::width_report(family_from(family), n, source_from(source), tolerance(tol));
          py::dict d("family"_a = std::string(widths::to_string(r.family)), "n"_a = r.n,
                     "mean_width"_a = r.mean_width, "circumradius"_a = r.circumradius,
                     "inradius"_a = r.inradius,
                     "mean_width_circumscaled"_a = r.mean_width_circumscaled,
                     "mean_width_inscaled"_a = r.mean_width_inscaled);
          d["mean_sq_width"] = r.mean_sq_width ? py::cast(*r.mean_sq_width) : py::none();
          d["mean_sq_provenance"] = std::string(widths::to_string(r.mean_sq_provenance));
          return d;
        },
        "family"_a, "n"_a, "source"_a = "quadrature", "tol"_a = 1e-12);

  m.def("a_n", &asymptotics::a_n, "n"_a);
  m.def("a_n_expansion", &asymptotics::a_n_expansion, "n"_a);
  m.def("limit_range_density", &asymptotics::limit_range_density, "y"_a);
  m.def("mu_asymptotic", &asymptotics::mu_asymptotic, "n"_a);
  m.def("simplex_mean_width_asymptotic", &asymptotics::simplex_mean_width_asymptotic, "n"_a);
  m.def("inscaled_mean_width_asymptotic", &asymptotics::inscaled_mean_width_asymptotic, "n"_a);

  m.def("mc_width_moments",
        [](const std::string& family, int n, std::int64_t samples, std::uint64_t seed,
           int workers) {
          geom::McWidthMoments r;
          {
            py::gil_scoped_release release;
            r = geom::mc_width_moments(family_from(family), n, samples, seed, workers);
          }
          return py::dict("width"_a = mc_dict(r.width), "width_sq"_a = mc_dict(r.width_sq));
        },
        "family"_a, "n"_a, "samples"_a = 1'000'000, "seed"_a = geom::kDefaultSeed,
        "workers"_a = 0);
  m.def("octa_g", &geom::octa_g, "a"_a, "b"_a, "c"_a);
  m.def("octa_mean_width_exact", &geom::octa_mean_width_exact);
  m.def("octa_mean_sq_width_exact", &geom::octa_mean_sq_width_exact);
  m.def("octa_sphere_integral",
        [](int power, double tol) { return geom::octa_sphere_integral(power, tolerance(tol)); },
        "power"_a, "tol"_a = 1e-12);
  m.def("octa_phi_boundary", &geom::octa_phi_boundary, "theta"_a);
  m.def("octa_sector_mean_sq", []() {
    const auto r = geom::octa_sector_mean_sq();
    return py::dict("sector_integral"_a = r.sector_integral,
                    "symmetry_factor"_a = r.symmetry_factor, "mean_sq"_a = r.mean_sq);
  });
}

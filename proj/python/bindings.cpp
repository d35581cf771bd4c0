#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "sinrmc/analytic.hpp"
#include "sinrmc/error.hpp"
#include "sinrmc/estimate.hpp"
#include "sinrmc/harness.hpp"
#include "sinrmc/oracle.hpp"
#include "sinrmc/ppp.hpp"
#include "sinrmc/sinr.hpp"
#include "sinrmc/tilt.hpp"

namespace py = pybind11;
using namespace sinrmc;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<Point2> to_points(const Array& a) {
  if (a.size() == 0) return {};
  if (a.ndim() != 2 || a.shape(1) != 2) throw ParameterError("points must have shape (n, 2)");
  auto v = a.unchecked<2>();
  std::vector<Point2> out(static_cast<std::size_t>(v.shape(0)));
  for (py::ssize_t i = 0; i < v.shape(0); ++i) out[i] = {v(i, 0), v(i, 1)};
  return out;
}

Array to_array(const std::vector<Point2>& pts) {
  Array out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{2}});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    v(i, 0) = pts[i].x;
    v(i, 1) = pts[i].y;
  }
  return out;
}

py::dict report_dict(const EstimatorReport& r) {
  py::dict d;
  d["n_runs"] = r.n_runs;
  d["estimate"] = r.estimate;
  d["variance"] = r.single_run_variance;
  d["std_error"] = r.std_error;
  d["hits"] = r.hits;
  d["seed"] = r.master_seed;
  d["wall_s"] = r.wall_seconds;
  return d;
}

FunctionalKind functional_of(const std::string& name) {
  if (name == "avg_connect_count") return FunctionalKind::kAvgConnectCount;
  if (name == "isolated_density") return FunctionalKind::kIsolatedDensity;
  throw ParameterError("functional must be 'avg_connect_count' or 'isolated_density'");
}

}  // namespace

PYBIND11_MODULE(_sinrmc, m) {
  m.doc() = "SINR network Monte Carlo core";

  auto base_value = py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<NoHitsError>(m, "NoHitsError", PyExc_RuntimeError);
  py::register_exception<WeightError>(m, "WeightError", PyExc_RuntimeError);
  (void)base_value;

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double alpha, double w, double t, double lambda_R, double lambda_T,
                       double trunc_b, bool tail_compensation) {
             ModelParams p{alpha, w, t, lambda_R, lambda_T, trunc_b, tail_compensation};
             p.validate();
             return p;
           }),
           py::arg("alpha") = 4.0, py::arg("w") = 1.0, py::arg("t") = 1.0, py::arg("lambda_R") = 1.0,
           py::arg("lambda_T") = 1.0, py::arg("trunc_b") = 20.0, py::arg("tail_compensation") = true)
      .def_readwrite("alpha", &ModelParams::alpha)
      .def_readwrite("w", &ModelParams::w)
      .def_readwrite("t", &ModelParams::t)
      .def_readwrite("lambda_R", &ModelParams::lambda_R)
      .def_readwrite("lambda_T", &ModelParams::lambda_T)
      .def_readwrite("trunc_b", &ModelParams::trunc_b)
      .def_readwrite("tail_compensation", &ModelParams::tail_compensation)
      .def("connection_radius", &ModelParams::connection_radius)
      .def("tail_mean", &ModelParams::tail_mean)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream s;
        s << "ModelParams(alpha=" << p.alpha << ", w=" << p.w << ", t=" << p.t << ", lambda_R=" << p.lambda_R
          << ", lambda_T=" << p.lambda_T << ", trunc_b=" << p.trunc_b
          << ", tail_compensation=" << (p.tail_compensation ? "True" : "False") << ")";
        return s.str();
      });

  // Random streams and point processes.
  m.def("derive_replicate_seed", [](std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
    return derive_replicate_seed({master, tag}, index);
  }, py::arg("master_seed"), py::arg("stream_tag"), py::arg("index"));
  m.def("sample_square", [](double side, double intensity, std::uint64_t seed) {
    return to_array(sample_homogeneous(Window::square(side), intensity, seed).points);
  }, py::arg("side"), py::arg("intensity"), py::arg("seed"),
        "Homogeneous Poisson points on the origin-centred square.");
  m.def("sample_disk", [](double radius, double intensity, std::uint64_t seed) {
    return to_array(sample_homogeneous(Window::disk(radius), intensity, seed).points);
  }, py::arg("radius"), py::arg("intensity"), py::arg("seed"),
        "Homogeneous Poisson points on the origin-centred disk.");

  // Closed forms.
  m.def("erfc", &sinrmc::erfc, py::arg("x"));
  m.def("erfcx", &sinrmc::erfcx, py::arg("x"));
  m.def("interference_cdf", &interference_cdf, py::arg("x"), py::arg("mu_T"));
  m.def("connect_prob", &connect_prob, py::arg("r"), py::arg("mu_T"));
  m.def("expected_connect_count", &expected_connect_count, py::arg("mu_R"), py::arg("mu_T"));
  m.def("expected_connect_count_quad", &expected_connect_count_quad, py::arg("mu_R"), py::arg("mu_T"),
        py::arg("abs_tol") = 1e-10);
  m.def("expected_average_count", &expected_average_count, py::arg("mu_R"), py::arg("mu_T"));
  m.def("poisson_entropy", &poisson_entropy, py::arg("mu"));
  m.def("isolation_objective", &isolation_objective, py::arg("r"), py::arg("lam"));
  m.def("stationarity_residual", &stationarity_residual, py::arg("r"), py::arg("lam"));

  // Tilts.
  m.def("optimal_pair", [](double a) {
    const IntensityPair p = optimal_pair(a);
    return py::make_tuple(p.mu_R, p.mu_T);
  }, py::arg("a"), "Entropy-minimal (mu_R, mu_T) with expected average count a.");
  m.def("solve_lambda_opt", &solve_lambda_opt, py::arg("r"), py::arg("tol") = 1e-12);
  m.def("lambda_profile", [](std::size_t points, double tol) {
    const RadialIntensity p = tabulate_lambda_profile(points, tol);
    const auto g = p.grid();
    const auto v = p.values();
    return py::make_tuple(py::array_t<double>(g.size(), g.data()), py::array_t<double>(v.size(), v.data()));
  }, py::arg("points") = 200, py::arg("tol") = 1e-12, "Returns (r, lambda) arrays.");

  // Geometry core.
  m.def("total_field", [](std::pair<double, double> y, const Array& tx, const ModelParams& p) {
    return total_field({y.first, y.second}, to_points(tx), p);
  }, py::arg("y"), py::arg("transmitters"), py::arg("params"));
  m.def("sinr", [](std::size_t serving, std::pair<double, double> y, const Array& tx, const ModelParams& p) {
    return sinr(serving, {y.first, y.second}, to_points(tx), p);
  }, py::arg("serving"), py::arg("y"), py::arg("transmitters"), py::arg("params"));
  m.def("connectable_receivers", [](std::size_t serving, const Array& tx, const Array& rx, const ModelParams& p) {
    return connectable_receivers(serving, to_points(tx), to_points(rx), p);
  }, py::arg("serving"), py::arg("transmitters"), py::arg("receivers"), py::arg("params"));
  m.def("evaluate_functional", [](const Array& tx, const Array& rx, double side, const ModelParams& p,
                                  const std::string& functional) {
    return evaluate_functional(to_points(tx), to_points(rx), Window::square(side), p, functional_of(functional));
  }, py::arg("transmitters"), py::arg("receivers"), py::arg("side"), py::arg("params"),
        py::arg("functional") = "avg_connect_count",
        "Per-area statistic over transmitters in the origin-centred square of the given side.");
  m.def("good_region_area", [](const Array& tx, const ModelParams& p, double grid_h) {
    return good_region_area(to_points(tx), p, grid_h);
  }, py::arg("transmitters"), py::arg("params"), py::arg("grid_h") = 0.05);

  // Estimators. The GIL is released while replicates run.
  m.def("estimate_event", [](const ModelParams& p, double n, double a, std::size_t runs, std::uint64_t seed,
                             std::optional<std::pair<double, double>> tilt, std::optional<double> margin,
                             int workers) {
    const EventSpec event{FunctionalKind::kAvgConnectCount, Comparison::kLess, a};
    TiltSpec spec = NoTilt{};
    if (tilt) spec = PairTilt{tilt->first, tilt->second};
    EventOptions options;
    options.margin = margin;
    options.workers = workers;
    EstimatorReport r;
    {
      py::gil_scoped_release release;
      r = estimate_event(event, p, n, spec, runs, seed, options);
    }
    return report_dict(r);
  }, py::arg("params"), py::arg("n"), py::arg("a"), py::arg("runs"), py::arg("seed"),
        py::arg("tilt") = py::none(), py::arg("margin") = py::none(), py::arg("workers") = 1,
        "P(average connect count < a) on the side-n window; tilt is (mu_R, mu_T).");
  m.def("estimate_isolation", [](const ModelParams& p, std::size_t runs, double grid_h, std::uint64_t seed,
                                 bool radial, std::size_t points, double r_out, int workers) {
    IsolationOptions options;
    options.outer_radius = r_out;
    options.workers = workers;
    TiltSpec spec = NoTilt{};
    if (radial) spec = RadialTilt{tabulate_lambda_profile(points)};
    EstimatorReport r;
    {
      py::gil_scoped_release release;
      r = estimate_isolation(p, spec, runs, grid_h, seed, options);
    }
    return report_dict(r);
  }, py::arg("params"), py::arg("runs"), py::arg("grid_h") = 0.05, py::arg("seed") = 42,
        py::arg("radial") = false, py::arg("points") = 200, py::arg("r_out") = 35.0, py::arg("workers") = 1);

  // Oracles and the experiment driver.
  m.def("run_validation", [](std::size_t samples, std::uint64_t seed, int workers) {
    oracle::ValidationOptions o;
    o.interference_samples = o.count_samples = samples;
    o.seed = seed;
    o.workers = workers;
    std::vector<oracle::CheckResult> results;
    {
      py::gil_scoped_release release;
      results = oracle::run_validation(o);
    }
    py::list out;
    for (const auto& c : results) {
      out.append(py::dict(py::arg("name") = c.name, py::arg("statistic") = c.statistic,
                          py::arg("bound") = c.bound, py::arg("passed") = c.pass));
    }
    return out;
  }, py::arg("samples") = 100000, py::arg("seed") = 20240601, py::arg("workers") = 1);
  m.def("run", [](const std::string& config_text) {
    const harness::RunConfig c = harness::parse_config_text(config_text);
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = harness::run(c, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("config"), "Runs a `key = value` configuration; returns (exit_code, stdout, stderr).");
  m.def("preset", [](const std::string& name) { return harness::to_config_text(harness::preset(name)); },
        py::arg("name"), "Configuration text of a named preset.");
  m.attr("preset_names") = harness::preset_names();
}

// Command-line front end: simulation, verification reports, spectra,
// coherent-state kernels and finite representation matrices, all emitted as
// deterministic JSON/CSV.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "toda/coherent.hpp"
#include "toda/core.hpp"
#include "toda/dynamics.hpp"
#include "toda/finrep.hpp"
#include "toda/json_io.hpp"
#include "toda/orbit.hpp"
#include "toda/quantization.hpp"
#include "toda/rng.hpp"
#include "toda/spectral.hpp"
#include "toda/verify.hpp"

namespace {

using toda::Json;

struct CommonOpts {
  int n = 3;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  std::string output;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--n", c.n, "lattice size")->check(CLI::Range(2, 64));
  cmd->add_option("--seed", c.seed, "random seed recorded in every artifact");
  cmd->add_option("--tol-scale", c.tol_scale, "multiplier on check tolerances")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", c.output, "output path (stdout when omitted)");
  cmd->add_option("--config", c.config_path, "JSON file whose keys mirror the flags");
}

// Values from --config fill any option the command line left untouched; the
// flag names are the JSON keys.
class ConfigFile {
 public:
  ConfigFile(CLI::App* cmd, const std::string& path) : cmd_(cmd) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    data_ = Json::parse(in);
  }

  template <typename T>
  void apply(const std::string& key, T& var) const {
    if (!data_.contains(key)) return;
    CLI::Option* opt = cmd_->get_option_no_throw("--" + key);
    if (opt != nullptr && opt->count() > 0) return;  // the flag wins
    var = data_.at(key).get<T>();
  }

 private:
  CLI::App* cmd_;
  Json data_ = Json::object();
};

Json config_json(const CommonOpts& c, const std::string& subcommand) {
  Json j;
  j["subcommand"] = subcommand;
  j["n"] = c.n;
  j["seed"] = c.seed;
  j["tol_scale"] = c.tol_scale;
  return j;
}

Json wrap_report(const CommonOpts& c, const std::string& subcommand, Json body) {
  body["artifact_version"] = TODAORBIT_VERSION;
  body["config"] = config_json(c, subcommand);
  return body;
}

void emit(const Json& j, const std::string& output) {
  if (output.empty())
    std::cout << toda::dump_deterministic(j);
  else
    toda::write_json_file(j, output);
}

Json suites_to_json(const std::vector<toda::SuiteReport>& suites, double tol_scale,
                    bool& all_pass) {
  Json arr = Json::array();
  all_pass = true;
  for (const auto& suite : suites) {
    Json js;
    js["suite"] = suite.suite;
    Json checks = Json::array();
    bool suite_pass = true;
    for (const auto& c : suite.checks) {
      const double tol = c.tolerance * tol_scale;
      const bool pass = c.value <= tol;
      suite_pass = suite_pass && pass;
      Json jc;
      jc["name"] = c.name;
      jc["value"] = c.value;
      jc["tolerance"] = tol;
      jc["pass"] = pass;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    js["pass"] = suite_pass;
    all_pass = all_pass && suite_pass;
    arr.push_back(js);
  }
  return arr;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto sep = text.find(':');
  if (sep == std::string::npos)
    throw CLI::ValidationError("--box", "expected lo:hi, got " + text);
  return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
}

int run_simulate(const CommonOpts& c, double t_end, double dt, const std::string& csv_path) {
  toda::Rng rng(c.seed);
  const toda::TodaPhasePoint s0 = toda::random_state(c.n, rng);
  const toda::CanonicalPoint c0 = toda::to_canonical(s0);
  const toda::Trajectory tr = toda::integrate(c0, s0.trace_c(), t_end, dt);
  const toda::ConservationReport rep = toda::conservation_report(tr);

  Json body;
  body["t_end"] = t_end;
  body["dt"] = dt;
  body["integrator"] = tr.integrator_name;
  body["truncated"] = tr.truncated;
  body["initial_state"] = toda::state_to_json(s0);
  Json drifts;
  drifts["trace_power"] = Json::array();
  for (double d : rep.trace_power_drift) drifts["trace_power"].push_back(d);
  drifts["jacobi_trace_power"] = Json::array();
  for (double d : rep.jacobi_trace_power_drift) drifts["jacobi_trace_power"].push_back(d);
  drifts["eigenvalue"] = rep.eigenvalue_drift;
  drifts["energy"] = rep.energy_drift;
  body["conservation"] = drifts;
  const Json out = wrap_report(c, "simulate", std::move(body));

  if (!csv_path.empty()) {
    Json meta = config_json(c, "simulate");
    meta["artifact_version"] = TODAORBIT_VERSION;
    toda::write_trajectory_csv(tr, csv_path, meta.dump());
  }
  emit(out, c.output);
  return tr.truncated ? 1 : 0;
}

int run_verify(const CommonOpts& c, const std::string& subcommand) {
  std::vector<toda::SuiteReport> suites;
  if (subcommand == "verify-orbit")
    suites.push_back(toda::verify_orbit_suite(c.n, c.seed));
  else
    suites = toda::verify_all(c.n, c.seed);
  bool all_pass = false;
  Json body;
  body["suites"] = suites_to_json(suites, c.tol_scale, all_pass);
  body["pass"] = all_pass;
  emit(wrap_report(c, subcommand, std::move(body)), c.output);
  return all_pass ? 0 : 1;
}

int run_spectrum(const CommonOpts& c, const std::string& chart,
                 std::vector<std::string> boxes, std::vector<int> grids, int k,
                 const std::string& eigenfunctions_path) {
  toda::SpectralProblem pb;
  pb.n = c.n;
  pb.chart = (chart == "z") ? toda::Chart::Z : toda::Chart::Q;
  const int axes = c.n - 1;
  if (boxes.empty()) boxes.push_back("-12:4");
  if (grids.empty()) grids.push_back(500);
  if (static_cast<int>(boxes.size()) == 1) boxes.resize(axes, boxes[0]);
  if (static_cast<int>(grids.size()) == 1) grids.resize(axes, grids[0]);
  if (static_cast<int>(boxes.size()) != axes || static_cast<int>(grids.size()) != axes)
    throw CLI::ValidationError("--box/--grid", "need one value or one per axis");
  for (const auto& b : boxes) pb.box.push_back(parse_range(b));
  pb.grid = grids;

  const toda::SparseMatrix M = toda::build_hamiltonian(pb);
  const toda::EigenResult res = toda::eigen_solve(M, k);

  Json body;
  body["chart"] = chart;
  Json jbox = Json::array(), jgrid = Json::array();
  for (int a = 0; a < axes; ++a) {
    jbox.push_back(Json::array({pb.box[a].first, pb.box[a].second}));
    jgrid.push_back(pb.grid[a]);
  }
  body["box"] = jbox;
  body["grid"] = jgrid;
  body["eigenvalues"] = toda::vector_to_json(res.values);
  body["residuals"] = toda::vector_to_json(res.residuals);
  emit(wrap_report(c, "quantize-spectrum", std::move(body)), c.output);

  if (!eigenfunctions_path.empty()) {
    toda::CsvWriter csv(eigenfunctions_path);
    Json meta = config_json(c, "quantize-spectrum");
    meta["artifact_version"] = TODAORBIT_VERSION;
    csv.comment(meta.dump());
    std::vector<std::string> header;
    for (int a = 0; a < axes; ++a) header.push_back("x_" + std::to_string(a + 1));
    for (int j = 0; j < k; ++j) header.push_back("psi_" + std::to_string(j + 1));
    csv.header(header);
    std::vector<std::vector<double>> ax(axes);
    for (int a = 0; a < axes; ++a) ax[a] = toda::grid_axis(pb, a);
    std::vector<int> idx(axes, 0);
    long row = 0;
    while (true) {
      std::vector<double> line;
      for (int a = 0; a < axes; ++a) line.push_back(ax[a][idx[a]]);
      for (int j = 0; j < k; ++j) line.push_back(res.vectors(row, j));
      csv.row(line);
      ++row;
      int a = 0;
      for (; a < axes; ++a) {
        if (++idx[a] < pb.grid[a]) break;
        idx[a] = 0;
      }
      if (a == axes) break;
    }
  }
  return 0;
}

int run_kernel(const CommonOpts& c, int degree, int grid, double a_lo, double a_hi,
               const std::string& report_path) {
  const toda::BasisSpec spec{c.n, degree};
  toda::Rng rng(c.seed);
  const int d = c.n - 1;

  // Kernel samples on a log-uniform grid in the leading axis, other axes
  // pinned at 1.
  if (!c.output.empty()) {
    toda::CsvWriter csv(c.output);
    Json meta = config_json(c, "coherent-kernel");
    meta["artifact_version"] = TODAORBIT_VERSION;
    meta["degree"] = degree;
    csv.comment(meta.dump());
    csv.header({"x", "y", "K"});
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        toda::Vector x = toda::Vector::Ones(d), y = toda::Vector::Ones(d);
        x[0] = a_lo * std::pow(a_hi / a_lo, i / (grid - 1.0));
        y[0] = a_lo * std::pow(a_hi / a_lo, j / (grid - 1.0));
        csv.row({x[0], y[0], toda::kernel(spec, x, y)});
      }
  }

  // Reproducing-property report on seeded sample points.
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    toda::Vector x(d);
    for (int i = 0; i < d; ++i) x[i] = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
    const toda::CoherentVector fx = toda::coherent_vector(spec, x);
    toda::Vector coeffs(spec.dimension());
    for (long i = 0; i < coeffs.size(); ++i) coeffs[i] = rng.uniform(-1.0, 1.0);
    const toda::Section s = toda::section_from_coefficients(spec, coeffs);
    worst = std::max(worst, std::abs(fx.coeffs.dot(coeffs) - s(x)));
  }
  const bool pass = worst <= 1e-8 * c.tol_scale;
  Json body;
  body["degree"] = degree;
  body["dimension"] = spec.dimension();
  body["reproducing_residual"] = worst;
  body["pass"] = pass;
  emit(wrap_report(c, "coherent-kernel", std::move(body)), report_path);
  return pass ? 0 : 1;
}

int run_rep_matrix(const CommonOpts& c, int degree, bool homogeneous) {
  const toda::FinRepSpace space(c.n, degree, homogeneous);
  toda::Rng rng(c.seed);
  const toda::GroupElement g = toda::GroupElement::random(c.n, rng, 0.6, 1.8);
  const toda::RepMatrix rho = toda::rep_matrix(g, space);

  double hom = 0.0;
  for (int t = 0; t < 100; ++t)
    hom = std::max(hom, toda::homomorphism_check(toda::GroupElement::random(c.n, rng, 0.6, 1.8),
                                                 toda::GroupElement::random(c.n, rng, 0.6, 1.8),
                                                 space));
  Json body;
  body["degree"] = degree;
  body["homogeneous_only"] = homogeneous;
  body["dimension"] = space.dimension();
  Json jg = Json::array();
  for (int i = 0; i < c.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < c.n; ++j) row.push_back(g.matrix()(i, j));
    jg.push_back(row);
  }
  body["group_element"] = jg;
  body["rho_diagonal"] = toda::vector_to_json(rho.diagonal);
  Json exps = Json::array();
  for (const auto& e : space.exponents()) {
    Json je = Json::array();
    for (int v : e) je.push_back(v);
    exps.push_back(je);
  }
  body["exponents"] = exps;
  body["homomorphism_residual"] = hom;
  const bool hom_ok = hom <= 1e-12 * c.tol_scale;

  const toda::NonUnitarityWitness w = toda::nonunitarity_witness(space);
  Json jw;
  jw["diagonal_entry"] = w.g.matrix()(0, 0);
  jw["basis_index"] = w.basis_index;
  jw["ratio"] = w.ratio;
  body["nonunitarity_witness"] = jw;
  const bool witness_ok = std::abs(w.ratio - 1.0) > 0.1;
  body["pass"] = hom_ok && witness_ok;
  emit(wrap_report(c, "rep-matrix", std::move(body)), c.output);
  return (hom_ok && witness_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open Toda lattice as a coadjoint orbit: simulation, orbit/quantization checks, box-regularized spectra"};
  app.require_subcommand(1);

  CommonOpts c;

  auto* simulate = app.add_subcommand("simulate", "integrate the flow and report conservation");
  double t_end = 10.0, dt = 1e-3;
  std::string csv_path;
  add_common(simulate, c);
  simulate->add_option("--t-end", t_end)->check(CLI::PositiveNumber);
  simulate->add_option("--dt", dt)->check(CLI::PositiveNumber);
  simulate->add_option("--csv", csv_path, "trajectory CSV path");

  auto* verify_orbit = app.add_subcommand("verify-orbit", "orbit invariant checks");
  add_common(verify_orbit, c);

  auto* verify_all = app.add_subcommand("verify-all", "every invariant suite");
  add_common(verify_all, c);

  auto* spectrum = app.add_subcommand("quantize-spectrum", "box-regularized spectrum");
  std::string chart = "q";
  std::vector<std::string> boxes;
  std::vector<int> grids;
  int k = 5;
  std::string eigenfunctions_path;
  add_common(spectrum, c);
  spectrum->add_option("--chart", chart)->check(CLI::IsMember({"q", "z"}));
  spectrum->add_option("--box", boxes, "per-axis lo:hi (one value broadcasts)");
  spectrum->add_option("--grid", grids, "per-axis interior point count");
  spectrum->add_option("--k", k, "number of eigenpairs")->check(CLI::PositiveNumber);
  spectrum->add_option("--eigenfunctions", eigenfunctions_path, "CSV sample path");

  auto* kernel = app.add_subcommand("coherent-kernel", "reproducing kernel samples");
  int degree = 12, kgrid = 60;
  double a_lo = 0.2, a_hi = 5.0;
  std::string report_path;
  add_common(kernel, c);
  kernel->add_option("--degree", degree)->check(CLI::Range(1, 64));
  kernel->add_option("--kernel-grid", kgrid)->check(CLI::Range(2, 2000));
  kernel->add_option("--a-min", a_lo)->check(CLI::PositiveNumber);
  kernel->add_option("--a-max", a_hi)->check(CLI::PositiveNumber);
  kernel->add_option("--report", report_path, "JSON report path (stdout when omitted)");

  auto* rep = app.add_subcommand("rep-matrix", "finite representation matrices");
  int rep_degree = 3;
  bool homogeneous = false;
  add_common(rep, c);
  rep->add_option("--degree", rep_degree)->check(CLI::Range(0, 32));
  rep->add_flag("--homogeneous", homogeneous, "restrict to |alpha| == degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    const ConfigFile cfg(active, c.config_path);
    cfg.apply("n", c.n);
    cfg.apply("seed", c.seed);
    cfg.apply("tol-scale", c.tol_scale);
    cfg.apply("output", c.output);

    if (active == simulate) {
      cfg.apply("t-end", t_end);
      cfg.apply("dt", dt);
      cfg.apply("csv", csv_path);
      return run_simulate(c, t_end, dt, csv_path);
    }
    if (active == verify_orbit) return run_verify(c, "verify-orbit");
    if (active == verify_all) return run_verify(c, "verify-all");
    if (active == spectrum) {
      cfg.apply("chart", chart);
      cfg.apply("box", boxes);
      cfg.apply("grid", grids);
      cfg.apply("k", k);
      cfg.apply("eigenfunctions", eigenfunctions_path);
      return run_spectrum(c, chart, boxes, grids, k, eigenfunctions_path);
    }
    if (active == kernel) {
      cfg.apply("degree", degree);
      cfg.apply("kernel-grid", kgrid);
      cfg.apply("a-min", a_lo);
      cfg.apply("a-max", a_hi);
      cfg.apply("report", report_path);
      return run_kernel(c, degree, kgrid, a_lo, a_hi, report_path);
    }
    if (active == rep) {
      cfg.apply("degree", rep_degree);
      cfg.apply("homogeneous", homogeneous);
      return run_rep_matrix(c, rep_degree, homogeneous);
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}

// deltabound: bound states of two electrons in delta wells with a contact
// repulsion. Solves the analytic model's secular equation, sweeps it over
// separations, cross-checks against a finite-difference grid solution of the
// full two-electron problem, and renders the sweep curves.
//
// Exit codes: 0 success, 1 usage/validation error, 2 convergence failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltabound/csv.hpp"
#include "deltabound/errors.hpp"
#include "deltabound/format.hpp"
#include "deltabound/oracle.hpp"
#include "deltabound/oracle_io.hpp"
#include "deltabound/secular.hpp"
#include "deltabound/svg.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConvergence = 2;

/// Stream that is either stdout or an owned file.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path, bool binary = false) {
    if (path.empty()) return;
    file_.open(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
    if (!file_)
      throw std::invalid_argument("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps == 1) {
    if (lo != hi)
      throw std::invalid_argument(
          "steps = 1 cannot include both endpoints unless x-min equals x-max");
    return {lo};
  }
  std::vector<double> xs(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    xs[static_cast<std::size_t>(i)] =
        lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(steps - 1);
  return xs;
}

struct SolveOptions {
  double x = 0.0;
  double tol = 1e-12;
};

struct SweepOptions {
  double x_min = 0.0;
  double x_max = 0.0;
  int steps = 0;
  double tol = 1e-12;
  std::string out;
};

struct OracleOptions {
  int dim = 0;
  double alpha = 1.0;
  double lambda = 1.0;
  long grid_n = 161;
  double box = 12.0;
  double tol = 1e-8;
  std::string out;
  std::string dump_psi;
};

struct CompareOptions {
  double x_min = 1.0;
  double x_max = 10.0;
  int steps = 10;
  long grid_n = 161;
  double box = 12.0;
  double tol = 1e-8;
  double model_tol = 1e-12;
  std::string out;
};

struct PlotOptions {
  std::string input;
  std::string column;
  std::string out;
  std::string format = "svg";
};

int run_solve(const SolveOptions& opt) {
  const deltabound::ModelSolution s = deltabound::solve_k(opt.x, opt.tol);
  std::cout << "x,k,energy\n"
            << deltabound::format_fixed(s.x) << ','
            << deltabound::format_fixed(s.k) << ','
            << deltabound::format_fixed(s.energy) << '\n';
  return 0;
}

int run_sweep(const SweepOptions& opt) {
  if (!(opt.x_min > 0.0) || !(opt.x_max >= opt.x_min))
    throw std::invalid_argument("sweep requires 0 < x-min <= x-max");
  if (opt.steps < 1) throw std::invalid_argument("sweep requires steps >= 1");
  const std::vector<deltabound::ModelSolution> rows =
      deltabound::sweep(linspace(opt.x_min, opt.x_max, opt.steps), opt.tol);
  OutputTarget target(opt.out);
  deltabound::write_sweep_csv(target.stream(), rows);
  return 0;
}

int run_oracle(const OracleOptions& opt) {
  deltabound::PhysicalParams params;
  params.alpha = opt.alpha;
  params.lambda = opt.lambda;
  params.validate();

  const deltabound::Grid grid =
      opt.dim == 1 ? deltabound::Grid::make_1d(opt.grid_n, opt.box)
                   : deltabound::Grid::make_2d(opt.grid_n, opt.box);
  const deltabound::SymmetricSparseMatrixd hamiltonian =
      opt.dim == 1 ? deltabound::hamiltonian_1d(grid, params)
                   : deltabound::hamiltonian_2d(grid, params);
  const deltabound::OracleResult result =
      deltabound::ground_state(hamiltonian, grid, params, opt.tol);

  OutputTarget target(opt.out);
  deltabound::write_oracle_json(target.stream(), result);
  if (!opt.dump_psi.empty()) {
    OutputTarget dump(opt.dump_psi, /*binary=*/true);
    deltabound::write_wavefunction_binary(dump.stream(), result);
  }
  return 0;
}

int run_compare(const CompareOptions& opt) {
  if (!(opt.x_min > 0.0) || !(opt.x_max >= opt.x_min))
    throw std::invalid_argument("compare requires 0 < x-min <= x-max");
  if (opt.steps < 1) throw std::invalid_argument("compare requires steps >= 1");
  const deltabound::Grid grid = deltabound::Grid::make_2d(opt.grid_n, opt.box);
  const deltabound::ModelOracleComparison report =
      deltabound::compare_model_oracle(linspace(opt.x_min, opt.x_max, opt.steps),
                                       grid, opt.tol, opt.model_tol);
  OutputTarget target(opt.out);
  deltabound::write_comparison_csv(target.stream(), report);
  return 0;
}

int run_plot(const PlotOptions& opt) {
  std::ifstream in(opt.input);
  if (!in) throw std::invalid_argument("cannot open input CSV: " + opt.input);
  const deltabound::Series series = deltabound::read_sweep_column(in, opt.column);

  const std::string y_label =
      opt.column == "k" ? "k (1/bohr)" : "energy (hartree)";
  if (opt.format == "svg") {
    OutputTarget target(opt.out);
    deltabound::write_svg_line_chart(target.stream(), series, "x (bohr)",
                                     y_label, opt.column + " vs x");
  } else {
    if (opt.out.empty())
      throw std::invalid_argument("--format gnuplot requires --out");
    OutputTarget target(opt.out);
    deltabound::write_gnuplot_data(target.stream(), series);
    OutputTarget script(opt.out + ".gp");
    deltabound::write_gnuplot_script(script.stream(), opt.out, "x (bohr)",
                                     y_label);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "deltabound: two-electron delta-well bound states - analytic secular "
      "solver and finite-difference grid oracle"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the secular equation at one separation; prints x,k,energy");
  solve->add_option("--x", solve_opt.x, "separation parameter x (bohr), > 0")
      ->required();
  solve->add_option("--tol", solve_opt.tol,
                    "root tolerance on bracket width and |f(k)| (dimensionless)");

  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Solve over an inclusive range of separations; writes CSV");
  sweep->add_option("--x-min", sweep_opt.x_min, "first separation (bohr), > 0")
      ->required();
  sweep->add_option("--x-max", sweep_opt.x_max, "last separation (bohr), >= x-min")
      ->required();
  sweep->add_option("--steps", sweep_opt.steps, "number of rows, >= 1")->required();
  sweep->add_option("--tol", sweep_opt.tol, "root tolerance (dimensionless)");
  sweep->add_option("--out", sweep_opt.out, "output CSV path (default stdout)");

  OracleOptions oracle_opt;
  CLI::App* oracle = app.add_subcommand(
      "oracle",
      "Finite-difference ground state of the full problem; writes JSON");
  oracle->add_option("--dim", oracle_opt.dim, "grid dimension: 1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  oracle->add_option("--alpha", oracle_opt.alpha, "well strength (hartree*bohr), > 0");
  oracle->add_option("--lambda", oracle_opt.lambda,
                     "contact repulsion strength (hartree*bohr), >= 0");
  oracle->add_option("--grid-n", oracle_opt.grid_n,
                     "nodes per axis, odd, >= 31");
  oracle->add_option("--box", oracle_opt.box, "half box length L (bohr), > 0");
  oracle->add_option("--tol", oracle_opt.tol,
                     "eigenvector residual tolerance (hartree)");
  oracle->add_option("--out", oracle_opt.out, "output JSON path (default stdout)");
  oracle->add_option("--dump-psi", oracle_opt.dump_psi,
                     "optional binary wavefunction dump path");

  CompareOptions compare_opt;
  CLI::App* compare = app.add_subcommand(
      "compare", "Model sweep against the grid oracle at lambda 0 and 1; CSV");
  compare->add_option("--x-min", compare_opt.x_min, "first separation (bohr), > 0");
  compare->add_option("--x-max", compare_opt.x_max, "last separation (bohr)");
  compare->add_option("--steps", compare_opt.steps, "model rows, >= 1");
  compare->add_option("--grid-n", compare_opt.grid_n, "nodes per axis, odd, >= 31");
  compare->add_option("--box", compare_opt.box, "half box length L (bohr), > 0");
  compare->add_option("--tol", compare_opt.tol, "oracle residual tolerance (hartree)");
  compare->add_option("--model-tol", compare_opt.model_tol,
                      "model root tolerance (dimensionless)");
  compare->add_option("--out", compare_opt.out, "output CSV path (default stdout)");

  PlotOptions plot_opt;
  CLI::App* plot = app.add_subcommand(
      "plot", "Render a sweep CSV column as SVG or gnuplot data");
  plot->add_option("--input", plot_opt.input, "sweep CSV path (schema x,k,energy)")
      ->required();
  plot->add_option("--column", plot_opt.column, "column to plot: k or energy")
      ->required()
      ->check(CLI::IsMember({"k", "energy"}));
  plot->add_option("--out", plot_opt.out,
                   "output path (default stdout for svg; required for gnuplot)");
  plot->add_option("--format", plot_opt.format, "output format: svg or gnuplot")
      ->check(CLI::IsMember({"svg", "gnuplot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_opt);
    if (*sweep) return run_sweep(sweep_opt);
    if (*oracle) return run_oracle(oracle_opt);
    if (*compare) return run_compare(compare_opt);
    if (*plot) return run_plot(plot_opt);
  } catch (const deltabound::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const deltabound::MatrixError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const deltabound::ShiftError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const deltabound::GridError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
  return 0;
}

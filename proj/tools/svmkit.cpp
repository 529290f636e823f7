#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "svmkit/data.hpp"
#include "svmkit/eval.hpp"
#include "svmkit/kernel.hpp"
#include "svmkit/srm.hpp"
#include "svmkit/svm.hpp"

namespace {

using namespace svmkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSolver = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  return out;
}

Dataset load_by_format(const std::string& path, const std::string& format, bool header) {
  auto in = open_input(path);
  if (format == "wbc") return load_wisconsin(in);
  if (format == "mushroom") return load_mushroom(in);
  if (format == "csv") return load_csv(in, header);
  throw DataError("unknown format '" + format + "'");
}

Model load_model_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return load_model(in);
  } catch (const std::invalid_argument& ex) {
    throw DataError(std::string(ex.what()) + " in '" + path + "'");
  }
}

struct CommonDataFlags {
  std::string data_path;
  std::string format = "csv";
  bool header = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--data", data_path, "input data file")->required();
    cmd->add_option("--format", format, "data format: wbc, mushroom or csv")
        ->check(CLI::IsMember({"wbc", "mushroom", "csv"}));
    cmd->add_flag("--header", header, "skip a header row (csv only)");
  }

  Dataset load() const { return load_by_format(data_path, format, header); }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"svmkit - kernel SVM training, evaluation and model selection"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a labeled 2D dataset");
  std::string regime;
  std::size_t synth_n = 0;
  std::uint64_t synth_seed = 0;
  std::string synth_out;
  bool synth_noise = false;
  synth->add_option("--regime", regime, "separable, nonseparable or hard")
      ->required()
      ->check(CLI::IsMember({"separable", "nonseparable", "hard"}));
  synth->add_option("--n", synth_n, "number of points (even)")->required();
  synth->add_option("--seed", synth_seed, "generator seed");
  synth->add_option("--out", synth_out, "output CSV path")->required();
  synth->add_flag("--noise", synth_noise, "flip a seeded 5% of labels (hard regime only)");

  // train
  auto* train_cmd = app.add_subcommand("train", "train a model");
  CommonDataFlags train_data;
  train_data.attach(train_cmd);
  std::string kernel_token = "linear";
  double c_value = 1.0;
  std::string model_out, trace_path;
  double kkt_tol = 1e-3;
  int max_passes = 100;
  std::uint64_t solver_seed = 0;
  bool strict = false;
  train_cmd->add_option("--kernel", kernel_token, "kernel token, e.g. linear, poly:p=3, rbf:sigma=10");
  train_cmd->add_option("--c", c_value, "soft-margin parameter C");
  train_cmd->add_option("--model-out", model_out, "model file path")->required();
  train_cmd->add_option("--trace", trace_path, "write per-pass solver trace to this file");
  train_cmd->add_option("--kkt-tol", kkt_tol, "solver optimality tolerance");
  train_cmd->add_option("--max-passes", max_passes, "stalled sweeps before giving up");
  train_cmd->add_option("--seed", solver_seed, "solver randomization seed");
  train_cmd->add_flag("--strict", strict, "exit 3 when the solver does not converge");

  // predict
  auto* predict = app.add_subcommand("predict", "label inputs with a stored model");
  CommonDataFlags predict_data;
  predict_data.attach(predict);
  std::string predict_model, predict_out;
  predict->add_option("--model", predict_model, "model file")->required();
  predict->add_option("--out", predict_out, "output path, one 'label f(x)' line per input")->required();

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "error rate of a stored model on a dataset");
  CommonDataFlags eval_data;
  eval_data.attach(eval_cmd);
  std::string eval_model;
  eval_cmd->add_option("--model", eval_model, "model file")->required();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "training-size sweep");
  CommonDataFlags sweep_data;
  sweep_data.attach(sweep_cmd);
  std::string sweep_kernel = "linear";
  double sweep_c = 1.0;
  std::string sizes_csv = "100,200,300,400,500";
  int repeats = 10;
  std::uint64_t sweep_seed = 0;
  std::size_t max_test = 0;
  bool sweep_strict = false;
  sweep_cmd->add_option("--kernel", sweep_kernel, "kernel token");
  sweep_cmd->add_option("--c", sweep_c, "soft-margin parameter C");
  sweep_cmd->add_option("--sizes", sizes_csv, "comma-separated training sizes");
  sweep_cmd->add_option("--repeats", repeats, "runs per size");
  sweep_cmd->add_option("--seed", sweep_seed, "base seed");
  sweep_cmd->add_option("--max-test", max_test, "cap on test-partition size (0 = all)");
  sweep_cmd->add_flag("--strict", sweep_strict, "exit 3 when any run does not converge");

  // srm
  auto* srm_cmd = app.add_subcommand("srm", "select a polynomial degree by risk bound");
  CommonDataFlags srm_data;
  srm_data.attach(srm_cmd);
  std::string degrees_csv = "1,2,3,4";
  double srm_c = 1.0;
  double eta = 0.05;
  bool srm_strict = false;
  srm_cmd->add_option("--degrees", degrees_csv, "comma-separated polynomial degrees");
  srm_cmd->add_option("--c", srm_c, "soft-margin parameter C");
  srm_cmd->add_option("--eta", eta, "risk-bound confidence parameter");
  srm_cmd->add_flag("--strict", srm_strict, "exit 3 when no degree converges");

  // grid
  auto* grid = app.add_subcommand("grid", "decision values on a 2D lattice");
  std::string grid_model, grid_out;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::size_t steps = 50;
  grid->add_option("--model", grid_model, "model file (2D models only)")->required();
  grid->add_option("--xmin", xmin)->required();
  grid->add_option("--xmax", xmax)->required();
  grid->add_option("--ymin", ymin)->required();
  grid->add_option("--ymax", ymax)->required();
  grid->add_option("--steps", steps, "lattice points per axis (>= 2)");
  grid->add_option("--out", grid_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error:usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (synth->parsed()) {
      Dataset data;
      if (regime == "separable")
        data = synth_separable(synth_n, synth_seed);
      else if (regime == "nonseparable")
        data = synth_nonseparable(synth_n, synth_seed);
      else
        data = synth_hard(synth_n, synth_seed, synth_noise);
      auto out = open_output(synth_out);
      write_csv(data, out);
      return kExitOk;
    }

    if (train_cmd->parsed()) {
      const auto data = train_data.load();
      const auto kernel = KernelSpec::parse(kernel_token);
      SolverConfig cfg;
      cfg.C = c_value;
      cfg.kkt_tol = kkt_tol;
      cfg.max_passes = max_passes;
      cfg.seed = solver_seed;

      std::optional<std::ofstream> trace;
      if (!trace_path.empty()) trace.emplace(open_output(trace_path));
      const Model model = train(data, kernel, cfg, trace ? &*trace : nullptr);

      auto out = open_output(model_out);
      save_model(model, out);
      if (!model.meta.converged) {
        std::cerr << (strict ? "error:solver: " : "warning: ")
                  << "solver did not converge within the pass budget\n";
        if (strict) return kExitSolver;
      }
      return kExitOk;
    }

    if (predict->parsed()) {
      const Model model = load_model_file(predict_model);
      const auto data = predict_data.load();
      auto out = open_output(predict_out);
      for (const auto& s : data) {
        const double f = decision_value(model, s.x);
        out << (f >= 0.0 ? "+1 " : "-1 ") << fmt17(f) << "\n";
      }
      return kExitOk;
    }

    if (eval_cmd->parsed()) {
      const Model model = load_model_file(eval_model);
      const auto data = eval_data.load();
      const double err = empirical_risk(model, data);
      std::cout << "size=" << data.size() << " error=" << fmt17(err) << " n_sv=" << model.n_sv()
                << "\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const auto data = sweep_data.load();
      SweepSpec spec;
      spec.sizes.clear();
      for (const auto& tok : CLI::detail::split(sizes_csv, ','))
        spec.sizes.push_back(std::stoul(tok));
      spec.repeats = repeats;
      spec.base_seed = sweep_seed;
      spec.kernel = KernelSpec::parse(sweep_kernel);
      spec.C = sweep_c;
      spec.max_test = max_test;
      const auto reports = sweep(data, spec, SolverConfig{});
      write_sweep_tsv(reports, std::cout);
      if (sweep_strict) {
        for (const auto& r : reports) {
          if (!r.converged) {
            std::cerr << "error:solver: a sweep run did not converge\n";
            return kExitSolver;
          }
        }
      }
      return kExitOk;
    }

    if (srm_cmd->parsed()) {
      const auto data = srm_data.load();
      std::vector<int> degrees;
      for (const auto& tok : CLI::detail::split(degrees_csv, ','))
        degrees.push_back(std::stoi(tok));
      SolverConfig cfg;
      cfg.C = srm_c;
      try {
        const auto report = srm_select(data, degrees, cfg, eta);
        write_srm_tsv(report, std::cout);
      } catch (const SrmError& ex) {
        std::cerr << "error:solver: " << ex.what() << "\n";
        return kExitSolver;
      }
      return kExitOk;
    }

    if (grid->parsed()) {
      const Model model = load_model_file(grid_model);
      if (model.dim != 2) throw DataError("grid needs a 2D model, this one has dim " + std::to_string(model.dim));
      if (steps < 2) throw DataError("grid needs --steps >= 2");
      auto out = open_output(grid_out);
      out << "# model=" << grid_model << " steps=" << steps << "\n";
      for (std::size_t i = 0; i < steps; ++i) {
        const double x = xmin + (xmax - xmin) * static_cast<double>(i) / static_cast<double>(steps - 1);
        for (std::size_t j = 0; j < steps; ++j) {
          const double y = ymin + (ymax - ymin) * static_cast<double>(j) / static_cast<double>(steps - 1);
          const double f = decision_value(model, std::vector<double>{x, y});
          out << fmt17(x) << " " << fmt17(y) << " " << fmt17(f) << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error:data: " << ex.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }

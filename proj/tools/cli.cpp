#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include <fmt/format.h>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "ectopsis/bounds_sampler.hpp"
#include "ectopsis/pipeline.hpp"
#include "ectopsis/problem_io.hpp"
#include "ectopsis/report_io.hpp"
#include "ectopsis/svg_charts.hpp"
#include "ectopsis/topsis.hpp"

namespace ectopsis::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format;
  std::vector<std::string> custom;
  bool no_entropy = false;
  bool no_critic = false;
};

void add_input_options(CLI::App& cmd, InputOptions& in, bool with_weight_sets) {
  cmd.add_option("input", in.path, "Problem file (.csv or .json)")->required();
  cmd.add_option("--format", in.format, "Input format: csv or json (default: from extension)");
  if (with_weight_sets) {
    cmd.add_option("--custom", in.custom, "Extra custom weight set w1,...,wn (repeatable)")->take_all();
    cmd.add_flag("--no-entropy", in.no_entropy, "Leave Entropy weights out of the bounds");
    cmd.add_flag("--no-critic", in.no_critic, "Leave CRITIC weights out of the bounds");
  }
}

Problem load(const InputOptions& in) {
  std::optional<InputFormat> format;
  if (!in.format.empty()) {
    format = parse_input_format(in.format);
    if (!format) throw InputError(fmt::format("unknown format '{}' (expected csv or json)", in.format));
  }
  Problem p = parse_problem_file(in.path, format);
  for (const auto& set : in.custom) p.config.custom_sets.push_back(parse_weight_list(set));
  p.config.use_entropy = !in.no_entropy;
  p.config.use_critic = !in.no_critic;
  return p;
}

std::string weight_table(const WeightStage& stage, const DecisionMatrix& matrix) {
  std::size_t name_width = 6;
  for (const auto& s : stage.weight_sets) name_width = std::max(name_width, s.name().size());
  std::size_t col_width = 6;
  for (const auto& c : matrix.criteria) col_width = std::max(col_width, c.id.size() + 1);

  std::string out = fmt::format("{:<{}}", "weight", name_width);
  for (const auto& c : matrix.criteria) out += fmt::format(" {:>{}}", c.id, col_width);
  out += '\n';
  const auto row = [&](const std::string& name, const std::vector<double>& values) {
    out += fmt::format("{:<{}}", name, name_width);
    for (double v : values) out += fmt::format(" {:>{}.3f}", v, col_width);
    out += '\n';
  };
  for (const auto& s : stage.weight_sets) row(s.name(), s.weights);
  row("Lower", stage.bounds.lower);
  row("Upper", stage.bounds.upper);
  return out;
}

int cmd_weights(const InputOptions& in, std::ostream& out) {
  const Problem p = load(in);
  const WeightStage stage = compute_weight_stage(p);
  out << weight_table(stage, p.matrix);
  return kExitOk;
}

struct RunOptions {
  std::optional<std::size_t> iterations;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "ectopsis-out";
  unsigned threads = 0;
  bool no_charts = false;
};

int cmd_run(const InputOptions& in, const RunOptions& run, std::ostream& out) {
  Problem p = load(in);
  if (run.iterations) p.config.iterations = *run.iterations;
  if (run.seed) p.config.seed = *run.seed;

  PipelineOptions options;
  options.threads = run.threads;
  const RunReport report = run_pipeline(p, options);

  const std::filesystem::path dir(run.out_dir);
  emit_tables(report, dir);
  if (!run.no_charts) emit_charts(chart_data(report), dir);

  out << fmt::format("final ranking (mode over {} iterations, seed {}):\n", report.config.iterations,
                     report.config.seed);
  for (std::size_t i = 0; i < report.matrix.alternatives.size(); ++i) {
    out << fmt::format("{}: [{}]\n", report.matrix.alternatives[i], report.final.outcomes[i].position);
  }
  out << fmt::format("outputs written to {}\n", dir.string());
  return kExitOk;
}

int cmd_plot(const std::string& source, const std::string& out_dir, std::ostream& out) {
  const std::filesystem::path src(source);
  if (!std::filesystem::exists(src)) throw InputError(fmt::format("cannot open {}", source));
  const ChartData data = load_chart_data(src);
  std::filesystem::path dir = out_dir.empty()
                                  ? (std::filesystem::is_directory(src) ? src : src.parent_path())
                                  : std::filesystem::path(out_dir);
  if (dir.empty()) dir = ".";
  emit_charts(data, dir);
  out << fmt::format("charts written to {}\n", dir.string());
  return kExitOk;
}

int cmd_topsis(const InputOptions& in, const std::string& weights, std::ostream& out) {
  const Problem p = load(in);
  const std::vector<double> w = parse_weight_list(weights);
  const TopsisResult r = topsis_run(p.matrix, w);
  out << "alternative,closeness,rank\n";
  for (std::size_t i = 0; i < p.matrix.alternatives.size(); ++i) {
    out << fmt::format("{},{:.6f},{}\n", p.matrix.alternatives[i], r.closeness[i], r.ranks[i]);
  }
  std::vector<std::size_t> order(r.ranks.size());
  for (std::size_t i = 0; i < r.ranks.size(); ++i) order[static_cast<std::size_t>(r.ranks[i] - 1)] = i;
  out << "order:";
  for (std::size_t idx : order) out << ' ' << p.matrix.alternatives[idx];
  out << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomized-weight TOPSIS ranking with Entropy/CRITIC weight ranges", "ectopsis"};
  app.require_subcommand(1);

  InputOptions weights_in;
  auto* weights_cmd = app.add_subcommand("weights", "Print Entropy/CRITIC/custom weights and their bounds");
  add_input_options(*weights_cmd, weights_in, true);

  InputOptions run_in;
  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run the full pipeline and write tables and charts");
  add_input_options(*run_cmd, run_in, true);
  run_cmd->add_option("--iterations,-t", run_opts.iterations, "Number of sampled weight vectors (default 10000)")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_opts.seed, fmt::format("RNG seed (default {})", kDefaultSeed));
  run_cmd->add_option("--out", run_opts.out_dir, "Output directory")->capture_default_str();
  run_cmd->add_option("--threads", run_opts.threads, "Worker threads, 0 = all cores");
  run_cmd->add_flag("--no-charts", run_opts.no_charts, "Skip the SVG charts");

  std::string plot_source;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Render charts from a previous run");
  plot_cmd->add_option("source", plot_source, "Output directory of `run`, or its summary.json")->required();
  plot_cmd->add_option("--out", plot_out, "Chart directory (default: the run directory)");

  InputOptions topsis_in;
  std::string topsis_weights;
  auto* topsis_cmd = app.add_subcommand("topsis", "Rank once with a fixed weight vector");
  add_input_options(*topsis_cmd, topsis_in, false);
  topsis_cmd->add_option("--weights", topsis_weights, "w1,...,wn")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*weights_cmd) return cmd_weights(weights_in, out);
    if (*run_cmd) return cmd_run(run_in, run_opts, out);
    if (*plot_cmd) return cmd_plot(plot_source, plot_out, out);
    if (*topsis_cmd) return cmd_topsis(topsis_in, topsis_weights, out);
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ectopsis::cli

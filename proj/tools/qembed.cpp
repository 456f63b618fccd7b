#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qembed/bench/config.hpp"
#include "qembed/bench/grid.hpp"
#include "qembed/bench/pipeline.hpp"
#include "qembed/bench/report.hpp"
#include "qembed/bench/synthetic.hpp"
#include "qembed/encoders/displacement.hpp"
#include "qembed/encoders/iqp.hpp"
#include "qembed/encoders/squeezing.hpp"
#include "qembed/error.hpp"
#include "qembed/fock/quadrature.hpp"
#include "qembed/tabular/churn_csv.hpp"
#include "qembed/tabular/preprocess.hpp"
#include "qembed/tabular/sampling.hpp"
#include "qembed/tabular/stats.hpp"

namespace {

using namespace qembed;

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string join(const std::vector<double>& v, int places) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fixed(v[i], places);
  return out;
}

std::filesystem::path resolve_data(const std::string& flag, const std::filesystem::path& from_config = {}) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  if (const char* env = std::getenv("QEMBED_DATA"); env && *env) return env;
  throw ConfigError("no data file given; pass --data or set QEMBED_DATA");
}

tabular::BlankPolicy parse_blank(const std::string& s) {
  return s == "mean" ? tabular::BlankPolicy::MeanImpute : tabular::BlankPolicy::DropRows;
}

struct RunArgs {
  std::string config;
  std::string data;
  std::string out;
  std::size_t workers = 0;
  std::optional<std::uint64_t> seed;
  bool no_timings = false;
};

int cmd_run(const RunArgs& a) {
  auto cfg = bench::load_config(a.config);
  if (!a.data.empty()) cfg.data_path = a.data;
  if (cfg.data_path.empty()) cfg.data_path = resolve_data("");
  if (!a.out.empty()) cfg.output_dir = a.out;
  if (a.workers) cfg.workers = a.workers;
  if (a.seed) cfg.seeds = {*a.seed};
  if (a.no_timings) cfg.record_timings = false;
  cfg.validate();

  std::cerr << "running " << cfg.cell_count() << " cells on " << cfg.data_path.string() << '\n';
  const auto result = bench::run_grid(cfg);
  const auto files = bench::write_report(result, cfg.output_dir);
  std::cout << bench::grouped_table(result);
  std::cout << '\n';
  for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
  return 0;
}

int cmd_inspect(const std::string& data, const std::string& blank, std::uint64_t seed) {
  const auto path = resolve_data(data);
  tabular::LoadReport load;
  const auto raw = tabular::load_churn_csv(path, {parse_blank(blank)}, &load);
  std::cout << "rows read: " << load.rows_read << "\nrows dropped (blank TotalCharges): " << load.rows_dropped
            << "\ncells imputed: " << load.cells_imputed << "\nrows kept: " << raw.row_count()
            << "\nclass balance: churn=1 " << raw.count_label(1) << ", churn=0 " << raw.count_label(0) << "\n\n";

  std::vector<tabular::Column> numeric;
  for (auto name : tabular::kTelcoNumericColumns) numeric.push_back(raw.column(std::string(name)));
  const auto x = tabular::LabeledDataset(numeric, raw.labels()).features();
  const auto corr = tabular::pearson_corr(x);
  std::cout << "correlation (numeric columns)\n";
  for (std::size_t i = 0; i < x.cols(); ++i)
    for (std::size_t j = i + 1; j < x.cols(); ++j)
      std::cout << "  " << x.names()[i] << " ~ " << x.names()[j] << ": " << fixed(corr.matrix(i, j), 4) << '\n';
  const auto vif = tabular::vif_scores(x);
  std::cout << "VIF (numeric columns)\n";
  for (std::size_t i = 0; i < x.cols(); ++i)
    std::cout << "  " << x.names()[i] << ": " << fixed(vif.scores[i], 3) << (vif.degenerate[i] ? " (constant)" : "")
              << '\n';

  const auto drops = tabular::default_drop_profile();
  std::vector<std::string> categorical;
  for (const auto& c : tabular::telco_categorical_columns())
    if (std::find(drops.begin(), drops.end(), c) == drops.end()) categorical.push_back(c);
  tabular::OneHotReport oh;
  const auto encoded = tabular::one_hot(raw.drop_columns(drops), categorical, &oh);
  std::cout << "\ndropped columns:";
  for (const auto& d : drops) std::cout << ' ' << d;
  std::cout << "\none-hot width: " << encoded.column_count() << '\n';
  for (const auto& [col, levels] : oh.levels) {
    std::cout << "  " << col << ':';
    for (const auto& l : levels) std::cout << " [" << l << ']';
    std::cout << '\n';
  }
  const auto balanced = tabular::undersample(encoded, seed);
  std::cout << "balanced rows (seed " << seed << "): " << balanced.row_count() << " (" << balanced.count_label(1)
            << " + " << balanced.count_label(0) << ")\n";
  return 0;
}

struct EncodeArgs {
  std::string method;
  std::vector<double> values;
  std::size_t dim = 0;
  std::size_t count = 5;
  double phi = 0.0;
};

int cmd_encode(const EncodeArgs& a) {
  const auto method = encoders::parse_method(a.method);
  if (a.values.empty()) throw ConfigError("encode: give --value or --values");
  switch (method) {
    case encoders::EncodingMethod::Displacement: {
      const std::size_t dim = a.dim ? a.dim : encoders::kDefaultDisplacementDim;
      const auto state = encoders::displace_vacuum({a.values.front()}, dim);
      std::cout << "alpha = " << a.values.front() << ", dim = " << dim << '\n';
      std::cout << "P(0.." << a.count - 1 << ") = " << join(state.probabilities(a.count), 4) << '\n';
      return 0;
    }
    case encoders::EncodingMethod::Squeezing: {
      const std::size_t dim = a.dim ? a.dim : encoders::kDefaultSqueezeDim;
      const auto state = encoders::squeeze_vacuum({a.values.front(), a.phi}, dim);
      const auto q = fock::quadrature_variances(state);
      std::cout << "r = " << a.values.front() << ", phi = " << a.phi << ", dim = " << dim << '\n';
      std::cout << "P(0.." << a.count - 1 << ") = " << join(state.probabilities(a.count), 4) << '\n';
      std::cout << "Var(x) = " << fixed(q.var_x, 6) << ", Var(p) = " << fixed(q.var_p, 6) << '\n';
      return 0;
    }
    case encoders::EncodingMethod::Iqp: {
      const auto phases = encoders::iqp_phases(a.values, a.values.size());
      const auto state = encoders::iqp_encode(phases);
      std::vector<double> ph(phases.phases.begin(), phases.phases.end());
      std::cout << "phases = " << join(ph, 4) << '\n';
      const auto probs = state.probabilities();
      for (std::size_t z = 0; z < probs.size(); ++z) {
        std::string bits;
        for (std::size_t q = 0; q < phases.qubits; ++q) bits += ((z >> (phases.qubits - 1 - q)) & 1) ? '1' : '0';
        std::cout << "P(" << bits << ") = " << fixed(probs[z], 4) << '\n';
      }
      return 0;
    }
    case encoders::EncodingMethod::ClassicalPassthrough:
      std::cout << join(a.values, 4) << '\n';
      return 0;
  }
  return 0;
}

int cmd_elbow(const std::string& config, const std::string& data, const std::string& blank, std::uint64_t seed) {
  bench::ExperimentConfig cfg;
  if (!config.empty()) {
    cfg = bench::load_config(config);
  } else {
    cfg.drop_columns = tabular::default_drop_profile();
    cfg.blank_policy = parse_blank(blank);
  }
  cfg.data_path = resolve_data(data, cfg.data_path);
  const auto prepared = bench::prepare_dataset(cfg);
  const auto seed_data = bench::prepare_seed(prepared.encoded, cfg.split, seed);
  const auto& ratios = seed_data.pca.full_spectrum_ratio;
  std::cout << bench::variance_curve_csv(ratios);
  const auto elbow = tabular::elbow_index(ratios);
  std::cout << "elbow index: " << elbow << " (" << elbow + 1 << " components, cumulative "
            << fixed(tabular::cumulative(ratios)[elbow], 4) << ")\n";
  return 0;
}

int cmd_synth(std::size_t rows, std::uint64_t seed, const std::string& out) {
  const auto text = bench::synthetic_telco_csv(rows, seed);
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot write " + out);
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-inspired feature embeddings for tabular churn data"};
  app.require_subcommand(1);

  RunArgs run;
  std::uint64_t run_seed = 0;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment grid from a config file");
  run_cmd->add_option("--config", run.config, "Grid config file")->required();
  run_cmd->add_option("--data", run.data, "Telco CSV (overrides the config)");
  run_cmd->add_option("--out", run.out, "Output directory (overrides the config)");
  run_cmd->add_option("--workers", run.workers, "Parallel grid workers")->check(CLI::PositiveNumber);
  auto* seed_opt = run_cmd->add_option("--seed", run_seed, "Run a single seed instead of the config's list");
  run_cmd->add_flag("--no-timings", run.no_timings, "Write zero timings so outputs are byte-stable");

  std::string data, blank = "drop";
  std::uint64_t seed = 0;
  auto* inspect_cmd = app.add_subcommand("inspect-data", "Print the preprocessing report for a Telco CSV");
  inspect_cmd->add_option("--data", data, "Telco CSV");
  inspect_cmd->add_option("--blank", blank, "Blank TotalCharges handling")->check(CLI::IsMember({"drop", "mean"}));
  inspect_cmd->add_option("--seed", seed, "Undersampling seed");

  EncodeArgs enc;
  double value = 0.0;
  auto* encode_cmd = app.add_subcommand("encode", "Encode one value or row and print measurement probabilities");
  encode_cmd->add_option("--method", enc.method, "classical, iqp, displacement or squeezing")->required();
  auto* value_opt = encode_cmd->add_option("--value", value, "Single feature value");
  encode_cmd->add_option("--values", enc.values, "Comma-separated feature row")->delimiter(',')->excludes(value_opt);
  encode_cmd->add_option("--dim", enc.dim, "Fock truncation dimension");
  encode_cmd->add_option("--count", enc.count, "Number of photon-number probabilities to print")
      ->check(CLI::PositiveNumber);
  encode_cmd->add_option("--phi", enc.phi, "Squeezing angle in radians");

  std::string elbow_config;
  auto* elbow_cmd = app.add_subcommand("elbow", "Print the explained-variance curve and its elbow");
  elbow_cmd->add_option("--config", elbow_config, "Grid config (for drops and split)");
  elbow_cmd->add_option("--data", data, "Telco CSV");
  elbow_cmd->add_option("--blank", blank, "Blank TotalCharges handling")->check(CLI::IsMember({"drop", "mean"}));
  elbow_cmd->add_option("--seed", seed, "Balancing and split seed");

  std::size_t synth_rows = 500;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth-data", "Write a synthetic Telco-schema CSV");
  synth_cmd->add_option("--rows", synth_rows, "Row count")->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", seed, "Generator seed");
  synth_cmd->add_option("--out", synth_out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run_cmd) {
      if (*seed_opt) run.seed = run_seed;
      return cmd_run(run);
    }
    if (*inspect_cmd) return cmd_inspect(data, blank, seed);
    if (*encode_cmd) {
      if (*value_opt) enc.values = {value};
      return cmd_encode(enc);
    }
    if (*elbow_cmd) return cmd_elbow(elbow_config, data, blank, seed);
    if (*synth_cmd) return cmd_synth(synth_rows, seed, synth_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

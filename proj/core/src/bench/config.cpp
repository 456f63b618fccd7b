#include "qembed/bench/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/tabular/preprocess.hpp"

namespace qembed::bench {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected a number, got '" + s + "'");
  return v;
}

std::uint64_t to_uint(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected a non-negative integer, got '" + s + "'");
  return v;
}

bool to_bool(const std::string& s, std::size_t line) {
  if (s == "true" || s == "on" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "off" || s == "no" || s == "0") return false;
  fail(line, "expected true/false, got '" + s + "'");
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// "name key=value key=value" -> name, params.
std::pair<std::string, std::map<std::string, std::string>> entry(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::string name;
  in >> name;
  std::map<std::string, std::string> params;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) fail(lineno, "expected key=value, got '" + tok + "'");
    params[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return {name, params};
}

EncodingSpec parse_encoding(const std::string& line, std::size_t lineno) {
  auto [name, params] = entry(line, lineno);
  EncodingSpec spec;
  try {
    spec.config = encoders::EncoderConfig::defaults(encoders::parse_method(name));
  } catch (const ConfigError& e) {
    fail(lineno, e.what());
  }
  spec.label = name;
  for (const auto& [key, value] : params) {
    if (key == "label") spec.label = value;
    else if (key == "dim") spec.config.fock_dim = to_uint(value, lineno);
    else if (key == "K" || key == "k") spec.config.probs_per_mode = to_uint(value, lineno);
    else if (key == "block") spec.config.iqp_block = to_uint(value, lineno);
    else if (key == "alpha_clamp") spec.config.alpha_clamp = to_double(value, lineno);
    else if (key == "r_clamp") spec.config.squeeze_clamp = to_double(value, lineno);
    else if (key == "scaling") {
      if (value == "minmax") spec.config.input_scaling = encoders::InputScaling::MinMaxTrain;
      else if (value == "none") spec.config.input_scaling = encoders::InputScaling::None;
      else fail(lineno, "scaling must be minmax or none");
    } else {
      fail(lineno, "unknown encoding parameter '" + key + "'");
    }
  }
  try {
    spec.config.validate();
  } catch (const ConfigError& e) {
    fail(lineno, e.what());
  }
  return spec;
}

enum class Section { Top, Drop, Categorical, Seeds, PcaDims, Encodings, Models };

}  // namespace

bool is_unsupported_model(std::string_view name) { return name == "lightgbm" || name == "catboost"; }

void ExperimentConfig::validate() const {
  if (encodings.empty()) throw ConfigError("config: no encodings listed");
  if (models.empty()) throw ConfigError("config: no models listed");
  if (pca_dims.empty()) throw ConfigError("config: no pca_dims listed");
  if (seeds.empty()) throw ConfigError("config: no seeds listed");
  if (workers == 0) throw ConfigError("config: workers must be >= 1");
  for (auto d : pca_dims)
    if (d == 0) throw ConfigError("config: pca dimensions must be positive");
  for (const auto& e : encodings) e.config.validate();
  split.validate();
}

std::size_t ExperimentConfig::cell_count() const {
  return encodings.size() * models.size() * pca_dims.size() * seeds.size();
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  cfg.drop_columns = tabular::default_drop_profile();
  bool drop_section_seen = false;
  Section section = Section::Top;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "drop") {
        section = Section::Drop;
        if (!drop_section_seen) cfg.drop_columns.clear();
        drop_section_seen = true;
      } else if (name == "categorical") section = Section::Categorical;
      else if (name == "seeds") section = Section::Seeds;
      else if (name == "pca_dims") section = Section::PcaDims;
      else if (name == "encodings") section = Section::Encodings;
      else if (name == "models") section = Section::Models;
      else fail(lineno, "unknown section [" + name + "]");
      continue;
    }
    switch (section) {
      case Section::Top: {
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "data") cfg.data_path = value;
        else if (key == "out") cfg.output_dir = value;
        else if (key == "workers") cfg.workers = to_uint(value, lineno);
        else if (key == "train_fraction") cfg.split.train_fraction = to_double(value, lineno);
        else if (key == "stratified") cfg.split.stratified = to_bool(value, lineno);
        else if (key == "record_timings") cfg.record_timings = to_bool(value, lineno);
        else if (key == "blank_total_charges") {
          if (value == "drop") cfg.blank_policy = tabular::BlankPolicy::DropRows;
          else if (value == "mean") cfg.blank_policy = tabular::BlankPolicy::MeanImpute;
          else fail(lineno, "blank_total_charges must be drop or mean");
        } else if (key == "drop_profile") {
          if (value == "default") cfg.drop_columns = tabular::default_drop_profile();
          else if (value == "none") cfg.drop_columns.clear();
          else fail(lineno, "drop_profile must be default or none");
        } else {
          fail(lineno, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::Drop:
        for (auto& t : tokens(line)) cfg.drop_columns.push_back(t);
        break;
      case Section::Categorical:
        for (auto& t : tokens(line)) cfg.categorical_columns.push_back(t);
        break;
      case Section::Seeds:
        for (auto& t : tokens(line)) cfg.seeds.push_back(to_uint(t, lineno));
        break;
      case Section::PcaDims:
        for (auto& t : tokens(line)) cfg.pca_dims.push_back(to_uint(t, lineno));
        break;
      case Section::Encodings:
        cfg.encodings.push_back(parse_encoding(line, lineno));
        break;
      case Section::Models: {
        auto [name, params] = entry(line, lineno);
        if (is_unsupported_model(name)) {
          if (!params.empty()) fail(lineno, name + " is unsupported; parameters are not accepted");
          cfg.unsupported_models.push_back(name);
          break;
        }
        std::map<std::string, double> hyper;
        for (const auto& [key, value] : params) hyper[key] = to_double(value, lineno);
        try {
          cfg.models.emplace_back(learners::parse_kind(name), hyper);
        } catch (const ConfigError& e) {
          fail(lineno, e.what());
        }
        break;
      }
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config file not found: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace qembed::bench

#include "qembed/tabular/churn_csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qembed/error.hpp"

namespace qembed::tabular {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool is_numeric_column(std::string_view name) {
  return std::find(kTelcoNumericColumns.begin(), kTelcoNumericColumns.end(), name) !=
         kTelcoNumericColumns.end();
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (ch != '\r' && ch != '\n') {
      current.push_back(ch);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

LabeledDataset read_churn_csv(std::istream& in, const LoadOptions& options, LoadReport* report) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("churn csv: empty input, expected a header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  auto header = split_csv_line(line);
  for (auto& h : header) h = trim(h);

  std::vector<std::string> missing;
  for (auto expected : kTelcoColumns)
    if (std::find(header.begin(), header.end(), expected) == header.end()) missing.emplace_back(expected);
  std::vector<std::string> unexpected;
  for (const auto& h : header)
    if (std::find(kTelcoColumns.begin(), kTelcoColumns.end(), h) == kTelcoColumns.end()) unexpected.push_back(h);
  if (!missing.empty() || !unexpected.empty()) {
    std::ostringstream msg;
    msg << "churn csv: header does not match the Telco schema;";
    if (!missing.empty()) {
      msg << " missing columns:";
      for (const auto& m : missing) msg << " " << m;
      msg << ";";
    }
    if (!unexpected.empty()) {
      msg << " unexpected columns:";
      for (const auto& u : unexpected) msg << " " << u;
    }
    throw SchemaError(msg.str());
  }

  const std::size_t width = header.size();
  std::vector<std::vector<std::string>> raw(width);
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++data_row;
    auto fields = split_csv_line(line);
    if (fields.size() != width) {
      std::ostringstream msg;
      msg << "churn csv: data row " << data_row << " has " << fields.size() << " fields, expected " << width;
      throw DataError(msg.str());
    }
    for (std::size_t c = 0; c < width; ++c) raw[c].push_back(trim(fields[c]));
  }

  auto index_of = [&](std::string_view name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };

  Labels labels(data_row);
  {
    const auto& churn = raw[index_of("Churn")];
    for (std::size_t r = 0; r < data_row; ++r) {
      if (churn[r] == "Yes") labels[r] = 1;
      else if (churn[r] == "No") labels[r] = 0;
      else throw DataError("churn csv: data row " + std::to_string(r + 1) + ": Churn must be Yes or No, got '" + churn[r] + "'");
    }
  }

  // Parse numerics; only TotalCharges may be blank.
  std::vector<std::vector<double>> numeric(kTelcoNumericColumns.size(), std::vector<double>(data_row));
  std::vector<bool> blank_total(data_row, false);
  for (std::size_t k = 0; k < kTelcoNumericColumns.size(); ++k) {
    const auto name = kTelcoNumericColumns[k];
    const auto& cells = raw[index_of(name)];
    for (std::size_t r = 0; r < data_row; ++r) {
      if (cells[r].empty() && name == "TotalCharges") {
        blank_total[r] = true;
        continue;
      }
      if (!parse_double(cells[r], numeric[k][r])) {
        std::ostringstream msg;
        msg << "churn csv: data row " << r + 1 << ": column " << name << " is not a number: '" << cells[r] << "'";
        throw DataError(msg.str());
      }
    }
  }

  LoadReport local;
  local.rows_read = data_row;
  std::vector<std::size_t> keep;
  keep.reserve(data_row);
  const std::size_t total_idx = 2;  // TotalCharges in kTelcoNumericColumns
  if (options.blank_total_charges == BlankPolicy::MeanImpute) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t r = 0; r < data_row; ++r)
      if (!blank_total[r]) {
        sum += numeric[total_idx][r];
        ++count;
      }
    const double mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
    for (std::size_t r = 0; r < data_row; ++r) {
      if (blank_total[r]) {
        numeric[total_idx][r] = mean;
        ++local.cells_imputed;
      }
      keep.push_back(r);
    }
  } else {
    for (std::size_t r = 0; r < data_row; ++r) {
      if (blank_total[r]) ++local.rows_dropped;
      else keep.push_back(r);
    }
  }

  std::vector<Column> columns;
  for (std::size_t c = 0; c < width; ++c) {
    const auto& name = header[c];
    if (name == "customerID" || name == "Churn") continue;
    if (is_numeric_column(name)) {
      const auto k = static_cast<std::size_t>(
          std::find(kTelcoNumericColumns.begin(), kTelcoNumericColumns.end(), name) - kTelcoNumericColumns.begin());
      std::vector<double> values;
      values.reserve(keep.size());
      for (auto r : keep) values.push_back(numeric[k][r]);
      columns.push_back(Column::make_numeric(name, std::move(values)));
    } else {
      std::vector<std::string> values;
      values.reserve(keep.size());
      for (auto r : keep) values.push_back(raw[c][r]);
      columns.push_back(Column::make_categorical(name, std::move(values)));
    }
  }
  Labels kept_labels;
  kept_labels.reserve(keep.size());
  for (auto r : keep) kept_labels.push_back(labels[r]);

  if (report) *report = local;
  return LabeledDataset(std::move(columns), std::move(kept_labels));
}

LabeledDataset load_churn_csv(const std::filesystem::path& path, const LoadOptions& options, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open data file '" + path.string() + "'");
  return read_churn_csv(in, options, report);
}

}  // namespace qembed::tabular

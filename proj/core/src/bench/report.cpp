#include "qembed/bench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/tabular/pca.hpp"

namespace qembed::bench {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct Stat {
  double mean = 0.0;
  double std = 0.0;
};

Stat stat(const std::vector<double>& v) {
  Stat s;
  if (v.empty()) return s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

// Records sharing (encoding, model, pca_dim), in first-appearance order.
struct Cell {
  std::string encoding;
  std::string model;
  std::size_t pca_dim = 0;
  std::vector<const ExperimentRecord*> records;
};

std::vector<Cell> cells(const std::vector<ExperimentRecord>& records) {
  std::vector<Cell> out;
  std::map<std::tuple<std::string, std::string, std::size_t>, std::size_t> index;
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.encoding, r.model, r.pca_dim);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      out.push_back({r.encoding, r.model, r.pca_dim, {}});
    }
    out[it->second].records.push_back(&r);
  }
  return out;
}

template <class T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

std::string results_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kResultsHeader << '\n';
  for (const auto& r : records) {
    const auto& m = r.metrics;
    out << csv_field(r.encoding) << ',' << csv_field(r.model) << ',' << r.pca_dim << ',' << r.seed << ','
        << fmt("%.6f", m.accuracy) << ',' << fmt("%.6f", m.precision) << ',' << fmt("%.6f", m.sensitivity) << ','
        << fmt("%.6f", m.f1) << ',' << fmt("%.6f", m.roc_auc) << ',' << fmt("%.6f", m.cohen_kappa) << ','
        << fmt("%.3f", r.encode_ms) << ',' << fmt("%.3f", r.train_ms) << ',' << fmt("%.3f", r.predict_ms) << ','
        << csv_field(r.ok() ? "ok" : "error: " + r.error) << '\n';
  }
  return out.str();
}

std::string summary_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "encoding,model,pca_dim,runs,failed,accuracy_mean,accuracy_std,precision_mean,sensitivity_mean,f1_mean,"
         "roc_auc_mean,kappa_mean,encode_ms_mean,train_ms_mean,predict_ms_mean\n";
  for (const auto& cell : cells(records)) {
    std::vector<double> acc, prec, sens, f1, auc, kappa, enc, train, pred;
    std::size_t failed = 0;
    for (const auto* r : cell.records) {
      if (!r->ok()) {
        ++failed;
        continue;
      }
      acc.push_back(r->metrics.accuracy);
      prec.push_back(r->metrics.precision);
      sens.push_back(r->metrics.sensitivity);
      f1.push_back(r->metrics.f1);
      auc.push_back(r->metrics.roc_auc);
      kappa.push_back(r->metrics.cohen_kappa);
      enc.push_back(r->encode_ms);
      train.push_back(r->train_ms);
      pred.push_back(r->predict_ms);
    }
    const auto a = stat(acc);
    out << csv_field(cell.encoding) << ',' << csv_field(cell.model) << ',' << cell.pca_dim << ','
        << cell.records.size() << ',' << failed << ',' << fmt("%.6f", a.mean) << ',' << fmt("%.6f", a.std) << ','
        << fmt("%.6f", stat(prec).mean) << ',' << fmt("%.6f", stat(sens).mean) << ','
        << fmt("%.6f", stat(f1).mean) << ',' << fmt("%.6f", stat(auc).mean) << ','
        << fmt("%.6f", stat(kappa).mean) << ',' << fmt("%.3f", stat(enc).mean) << ','
        << fmt("%.3f", stat(train).mean) << ',' << fmt("%.3f", stat(pred).mean) << '\n';
  }
  return out.str();
}

std::string grouped_table(const GridResult& result) {
  std::vector<std::string> models, encodings;
  std::vector<std::size_t> dims;
  for (const auto& r : result.records) {
    push_unique(models, r.model);
    push_unique(encodings, r.encoding);
    push_unique(dims, r.pca_dim);
  }
  std::map<std::tuple<std::string, std::string, std::size_t>, std::vector<double>> acc;
  std::map<std::tuple<std::string, std::string, std::size_t>, std::size_t> failed;
  for (const auto& r : result.records) {
    const auto key = std::make_tuple(r.model, r.encoding, r.pca_dim);
    if (r.ok())
      acc[key].push_back(100.0 * r.metrics.accuracy);
    else
      ++failed[key];
  }

  std::ostringstream out;
  out << "Test accuracy (%), mean +- std over seeds\n";
  out << "rows loaded: " << result.rows_loaded << ", balanced: " << result.rows_balanced
      << ", feature columns: " << result.feature_columns << ", elbow index: " << result.elbow << "\n";
  constexpr int kDimWidth = 8;
  constexpr int kCellWidth = 20;
  for (const auto& model : models) {
    out << '\n' << model << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", kDimWidth, "pca");
    out << buf;
    for (const auto& e : encodings) {
      std::snprintf(buf, sizeof buf, "%*s", kCellWidth, e.c_str());
      out << buf;
    }
    out << '\n';
    for (auto d : dims) {
      std::snprintf(buf, sizeof buf, "%-*zu", kDimWidth, d);
      out << buf;
      for (const auto& e : encodings) {
        const auto key = std::make_tuple(model, e, d);
        std::string cell = "-";
        if (auto it = acc.find(key); it != acc.end()) {
          const auto s = stat(it->second);
          cell = fmt("%.2f", s.mean) + " +- " + fmt("%.2f", s.std);
        }
        if (failed.count(key)) cell += " (" + std::to_string(failed[key]) + " failed)";
        std::snprintf(buf, sizeof buf, "%*s", kCellWidth, cell.c_str());
        out << buf;
      }
      out << '\n';
    }
  }
  if (!result.unsupported_models.empty()) {
    out << "\nunsupported (not run):";
    for (const auto& m : result.unsupported_models) out << ' ' << m;
    out << '\n';
  }
  bool any_error = false;
  for (const auto& r : result.records) {
    if (r.ok()) continue;
    if (!any_error) out << "\nfailed cells:\n";
    any_error = true;
    out << "  " << r.encoding << ' ' << r.model << " pca=" << r.pca_dim << " seed=" << r.seed << ": " << r.error
        << '\n';
  }
  return out.str();
}

std::string variance_curve_csv(const std::vector<double>& ratios) {
  const auto cum = tabular::cumulative(ratios);
  std::ostringstream out;
  out << "component,ratio,cumulative\n";
  for (std::size_t i = 0; i < ratios.size(); ++i)
    out << i + 1 << ',' << fmt("%.17g", ratios[i]) << ',' << fmt("%.17g", cum[i]) << '\n';
  return out.str();
}

std::vector<std::filesystem::path> write_report(const GridResult& result, const std::filesystem::path& dir) {
  if (result.records.empty()) throw DataError("write_report: no records");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  const std::vector<std::pair<std::string, std::string>> files = {
      {"results.csv", results_csv(result.records)},
      {"summary.csv", summary_csv(result.records)},
      {"report.txt", grouped_table(result)},
      {"explained_variance.csv", variance_curve_csv(result.variance_ratios)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, text] : files) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace qembed::bench

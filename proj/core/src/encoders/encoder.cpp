#include "qembed/encoders/encoder.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "qembed/encoders/displacement.hpp"
#include "qembed/encoders/iqp.hpp"
#include "qembed/encoders/squeezing.hpp"
#include "qembed/error.hpp"

namespace qembed::encoders {

std::string_view method_name(EncodingMethod m) {
  switch (m) {
    case EncodingMethod::ClassicalPassthrough: return "classical";
    case EncodingMethod::Iqp: return "iqp";
    case EncodingMethod::Displacement: return "displacement";
    case EncodingMethod::Squeezing: return "squeezing";
  }
  return "unknown";
}

EncodingMethod parse_method(std::string_view name) {
  if (name == "classical" || name == "classical-passthrough") return EncodingMethod::ClassicalPassthrough;
  if (name == "iqp") return EncodingMethod::Iqp;
  if (name == "displacement") return EncodingMethod::Displacement;
  if (name == "squeezing") return EncodingMethod::Squeezing;
  throw ConfigError("unknown encoding method '" + std::string(name) + "'");
}

EncoderConfig EncoderConfig::defaults(EncodingMethod method) {
  EncoderConfig cfg;
  cfg.method = method;
  cfg.fock_dim = method == EncodingMethod::Squeezing ? kDefaultSqueezeDim : kDefaultDisplacementDim;
  cfg.input_scaling =
      method == EncodingMethod::ClassicalPassthrough ? InputScaling::None : InputScaling::MinMaxTrain;
  return cfg;
}

void EncoderConfig::validate() const {
  if (fock_dim < 2) throw ConfigError("encoder: fock_dim must be >= 2");
  if (probs_per_mode < 1 || probs_per_mode > fock_dim)
    throw ConfigError("encoder: probs_per_mode must be in [1, fock_dim]");
  if (iqp_block < 1 || iqp_block > kMaxIqpQubits) throw ConfigError("encoder: iqp_block must be in [1, 10]");
  if (!(alpha_clamp > 0.0) || !(squeeze_clamp > 0.0)) throw ConfigError("encoder: clamps must be positive");
}

std::size_t EncoderConfig::output_width(std::size_t input_width) const {
  switch (method) {
    case EncodingMethod::ClassicalPassthrough: return input_width;
    case EncodingMethod::Displacement:
    case EncodingMethod::Squeezing: return probs_per_mode * input_width;
    case EncodingMethod::Iqp: {
      const std::size_t blocks = (input_width + iqp_block - 1) / iqp_block;
      return blocks * (std::size_t{1} << iqp_block);
    }
  }
  return 0;
}

std::vector<std::string> EncoderConfig::output_names(const std::vector<std::string>& input_names,
                                                     std::size_t input_width) const {
  auto feature = [&](std::size_t i) {
    return i < input_names.size() ? input_names[i] : "x" + std::to_string(i);
  };
  std::vector<std::string> names;
  names.reserve(output_width(input_width));
  switch (method) {
    case EncodingMethod::ClassicalPassthrough:
      for (std::size_t i = 0; i < input_width; ++i) names.push_back(feature(i));
      break;
    case EncodingMethod::Displacement:
    case EncodingMethod::Squeezing:
      for (std::size_t i = 0; i < input_width; ++i)
        for (std::size_t n = 0; n < probs_per_mode; ++n) names.push_back(feature(i) + "_p" + std::to_string(n));
      break;
    case EncodingMethod::Iqp: {
      const std::size_t blocks = (input_width + iqp_block - 1) / iqp_block;
      const std::size_t states = std::size_t{1} << iqp_block;
      for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t z = 0; z < states; ++z) {
          std::string bits(iqp_block, '0');
          for (std::size_t q = 0; q < iqp_block; ++q)
            if ((z >> (iqp_block - 1 - q)) & 1U) bits[q] = '1';
          names.push_back("block" + std::to_string(b) + "_" + bits);
        }
      }
      break;
    }
  }
  return names;
}

struct RowEncoder::Cache {
  std::optional<SqueezedVacuumBasis> squeeze;
};

RowEncoder::RowEncoder(EncoderConfig cfg) : cfg_(cfg), cache_(std::make_unique<Cache>()) {
  cfg_.validate();
  if (cfg_.method == EncodingMethod::Squeezing) cache_->squeeze.emplace(cfg_.fock_dim);
}

RowEncoder::~RowEncoder() = default;
RowEncoder::RowEncoder(RowEncoder&&) noexcept = default;
RowEncoder& RowEncoder::operator=(RowEncoder&&) noexcept = default;

std::vector<double> RowEncoder::encode(std::span<const double> x) const {
  std::vector<double> out(cfg_.output_width(x.size()));
  encode_into(x, out);
  return out;
}

void RowEncoder::encode_into(std::span<const double> x, std::span<double> out) const {
  if (out.size() != cfg_.output_width(x.size())) throw ShapeError("encode: output buffer width");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw DataError("encode: non-finite feature at column " + std::to_string(i));
    }
  }
  const std::size_t k = cfg_.probs_per_mode;
  switch (cfg_.method) {
    case EncodingMethod::ClassicalPassthrough:
      std::copy(x.begin(), x.end(), out.begin());
      return;
    case EncodingMethod::Displacement:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto state = displace_vacuum({x[i], cfg_.alpha_clamp}, cfg_.fock_dim);
        for (std::size_t n = 0; n < k; ++n) out[i * k + n] = state.probability(n);
      }
      return;
    case EncodingMethod::Squeezing:
      for (std::size_t i = 0; i < x.size(); ++i) {
        const auto state = cache_->squeeze->state({x[i], 0.0, cfg_.squeeze_clamp});
        for (std::size_t n = 0; n < k; ++n) out[i * k + n] = state.probability(n);
      }
      return;
    case EncodingMethod::Iqp: {
      const std::size_t b = cfg_.iqp_block;
      const std::size_t states = std::size_t{1} << b;
      std::vector<double> block(b);
      for (std::size_t start = 0, blk = 0; start < x.size(); start += b, ++blk) {
        for (std::size_t q = 0; q < b; ++q) block[q] = start + q < x.size() ? x[start + q] : 0.0;
        const auto probs = iqp_encode(block, b).probabilities();
        std::copy(probs.begin(), probs.end(), out.begin() + static_cast<std::ptrdiff_t>(blk * states));
      }
      return;
    }
  }
}

std::vector<double> encode_row(std::span<const double> x, const EncoderConfig& cfg) {
  return RowEncoder(cfg).encode(x);
}

namespace {

template <class E>
[[noreturn]] void rethrow_with_row(const E& e, std::size_t row) {
  throw E("row " + std::to_string(row) + ": " + e.what());
}

void encode_range(const RowEncoder& enc, const FeatureMatrix& x, FeatureMatrix& out, std::size_t begin,
                  std::size_t end) {
  for (std::size_t r = begin; r < end; ++r) {
    try {
      enc.encode_into(x.row(r), out.row(r));
    } catch (const DomainError& e) {
      rethrow_with_row(e, r);
    } catch (const DataError& e) {
      rethrow_with_row(e, r);
    }
  }
}

}  // namespace

FeatureMatrix encode_matrix(const FeatureMatrix& x, const EncoderConfig& cfg, std::size_t workers) {
  const RowEncoder enc(cfg);
  FeatureMatrix out(x.rows(), cfg.output_width(x.cols()));
  out.set_names(cfg.output_names(x.names(), x.cols()));
  workers = std::max<std::size_t>(1, std::min(workers, x.rows()));
  if (workers == 1) {
    encode_range(enc, x, out, 0, x.rows());
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (x.rows() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(x.rows(), w * chunk);
    const std::size_t end = std::min(x.rows(), begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        encode_range(enc, x, out, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace qembed::encoders

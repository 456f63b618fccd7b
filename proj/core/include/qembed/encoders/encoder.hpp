#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::encoders {

enum class EncodingMethod { ClassicalPassthrough, Iqp, Displacement, Squeezing };

// How raw (post-PCA) features are mapped into the encoder's domain before
// encoding. MinMaxTrain fits per-column [0, 1] scaling on the training split
// only and clips transformed test values into [0, 1].
enum class InputScaling { None, MinMaxTrain };

std::string_view method_name(EncodingMethod m);
EncodingMethod parse_method(std::string_view name);

struct EncoderConfig {
  EncodingMethod method = EncodingMethod::ClassicalPassthrough;
  std::size_t fock_dim = 30;
  std::size_t probs_per_mode = 5;
  std::size_t iqp_block = 2;
  InputScaling input_scaling = InputScaling::None;
  double alpha_clamp = 1.5;
  double squeeze_clamp = 1.0;

  // Defaults per method: displacement dim 30, squeezing dim 60, min-max
  // scaling for every quantum method.
  static EncoderConfig defaults(EncodingMethod method);

  void validate() const;
  std::size_t output_width(std::size_t input_width) const;
  std::vector<std::string> output_names(const std::vector<std::string>& input_names,
                                        std::size_t input_width) const;
};

// Maps a feature row to measurement probabilities (or passes it through).
// Holds per-config precomputation; immutable and safe to share across threads.
class RowEncoder {
 public:
  explicit RowEncoder(EncoderConfig cfg);
  ~RowEncoder();
  RowEncoder(RowEncoder&&) noexcept;
  RowEncoder& operator=(RowEncoder&&) noexcept;

  const EncoderConfig& config() const noexcept { return cfg_; }
  std::vector<double> encode(std::span<const double> x) const;
  void encode_into(std::span<const double> x, std::span<double> out) const;

 private:
  struct Cache;
  EncoderConfig cfg_;
  std::unique_ptr<Cache> cache_;
};

std::vector<double> encode_row(std::span<const double> x, const EncoderConfig& cfg);

// Row-wise encoding; workers > 1 splits rows across threads with results
// identical to the sequential pass.
FeatureMatrix encode_matrix(const FeatureMatrix& x, const EncoderConfig& cfg, std::size_t workers = 1);

}  // namespace qembed::encoders

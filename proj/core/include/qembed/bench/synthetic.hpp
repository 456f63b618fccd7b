#pragma once

#include <cstdint>
#include <string>

namespace qembed::bench {

// Telco-schema CSV with churn driven by tenure, contract, internet service
// and payment method. Rows with tenure 0 get a blank TotalCharges, as in the
// public file. For tests and demos when the real data is unavailable.
std::string synthetic_telco_csv(std::size_t rows, std::uint64_t seed);

}  // namespace qembed::bench

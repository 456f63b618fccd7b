#include "qembed/bench/synthetic.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

#include "qembed/learners/model.hpp"
#include "qembed/random.hpp"
#include "qembed/tabular/churn_csv.hpp"

namespace qembed::bench {

namespace {

template <std::size_t N>
std::string_view pick(Rng& rng, const std::array<std::string_view, N>& options) {
  return options[rng.index(N)];
}

std::string money(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string synthetic_telco_csv(std::size_t rows, std::uint64_t seed) {
  static constexpr std::array<std::string_view, 2> kYesNo = {"Yes", "No"};
  static constexpr std::array<std::string_view, 2> kGender = {"Female", "Male"};
  static constexpr std::array<std::string_view, 3> kInternet = {"DSL", "Fiber optic", "No"};
  static constexpr std::array<std::string_view, 3> kContract = {"Month-to-month", "One year", "Two year"};
  static constexpr std::array<std::string_view, 4> kPayment = {"Electronic check", "Mailed check",
                                                               "Bank transfer (automatic)",
                                                               "Credit card (automatic)"};

  Rng rng(seed);
  std::ostringstream out;
  for (std::size_t i = 0; i < tabular::kTelcoColumns.size(); ++i)
    out << (i ? "," : "") << tabular::kTelcoColumns[i];
  out << '\n';

  for (std::size_t r = 0; r < rows; ++r) {
    const auto tenure = static_cast<int>(rng.index(73));
    const bool senior = rng.uniform() < 0.16;
    const bool phone = rng.uniform() < 0.9;
    const auto internet = pick(rng, kInternet);
    const auto contract = pick(rng, kContract);
    const auto payment = pick(rng, kPayment);
    const bool has_internet = internet != "No";

    auto addon = [&] { return has_internet ? pick(rng, kYesNo) : std::string_view("No internet service"); };
    const std::string lines = phone ? std::string(pick(rng, kYesNo)) : "No phone service";
    const std::array<std::string_view, 6> addons = {addon(), addon(), addon(), addon(), addon(), addon()};

    double monthly = 20.0 + (phone ? 5.0 : 0.0);
    if (internet == "DSL") monthly += 25.0;
    if (internet == "Fiber optic") monthly += 50.0;
    for (auto a : addons)
      if (a == "Yes") monthly += 5.0;
    monthly += 2.0 * rng.normal();

    double z = 1.2 - 0.05 * tenure;
    if (contract == "Month-to-month") z += 1.3;
    if (contract == "Two year") z -= 1.5;
    if (internet == "Fiber optic") z += 0.8;
    if (payment == "Electronic check") z += 0.6;
    if (senior) z += 0.3;
    const bool churn = rng.uniform() < learners::logistic(2.0 * (z - 0.6));

    out << "C" << 10000 + r << ',' << pick(rng, kGender) << ',' << (senior ? 1 : 0) << ','
        << pick(rng, kYesNo) << ',' << pick(rng, kYesNo) << ',' << tenure << ',' << (phone ? "Yes" : "No") << ','
        << lines << ',' << internet;
    for (auto a : addons) out << ',' << a;
    out << ',' << contract << ',' << pick(rng, kYesNo) << ",\"" << payment << "\"," << money(monthly) << ','
        << (tenure == 0 ? std::string(" ") : money(monthly * tenure)) << ',' << (churn ? "Yes" : "No") << '\n';
  }
  return out.str();
}

}  // namespace qembed::bench

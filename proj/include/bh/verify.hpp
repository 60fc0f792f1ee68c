#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bh/fixtures.hpp"
#include "bh/weights.hpp"

namespace bh {

// Power of (t - 1) relating phi_f to the monodromy polynomial, fixed by calibration.
inline constexpr long kCalibratedShiftExponent = 1;

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::Inapplicable;
  std::string detail;
};

struct RowReport {
  std::string name;
  std::vector<CheckResult> checks;
  nlohmann::ordered_json artifacts;

  const CheckResult& check(const std::string& id) const;
  bool passed() const;
};

struct VerificationReport {
  std::vector<RowReport> rows;
  CheckResult uniform_shift;

  bool passed() const;
  std::size_t count(Verdict v) const;
};

// Rows are verified concurrently; the report keeps the order of `names`.
// `all` supplies dual rows for the Gabrielov/Dolgachev duality check.
VerificationReport verify_rows(const std::vector<FixtureRow>& all, const std::vector<std::string>& names);
VerificationReport verify_all(const std::vector<FixtureRow>& all);
RowReport verify_row(const FixtureRow& row, const std::vector<FixtureRow>& all);

nlohmann::ordered_json report_json(const VerificationReport& report);
std::string report_table(const VerificationReport& report);

}  // namespace bh

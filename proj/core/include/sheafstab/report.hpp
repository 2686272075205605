#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sheafstab/rational.hpp"
#include "sheafstab/scene.hpp"
#include "sheafstab/unipoly.hpp"

namespace sheafstab {

using ReportValue = std::variant<bool, Rational, UniPoly, std::string,
                                 std::vector<std::size_t>, std::vector<Rational>>;

std::string render_value(const ReportValue& v);

struct CheckRecord {
  std::string kind;
  std::string subject;
  std::vector<std::pair<std::string, ReportValue>> values;
  std::vector<std::string> failures;     // expectation mismatches
  std::optional<std::string> error;      // input-level error while running
  bool has_expectations = false;

  bool passed() const { return failures.empty() && !error; }
};

struct Report {
  std::string scene_name;
  std::string variety_desc;
  std::vector<CheckRecord> checks;

  // A run fails iff any check missed a declared expectation or errored.
  std::size_t failed_checks() const;
  bool all_passed() const { return failed_checks() == 0; }
};

// Executes every check in scene order with exact arithmetic. Input-level
// errors inside one check are recorded on its record; internal_error
// propagates.
Report run_checks(const Scene& scene);

std::string to_plain(const Report& r);
std::string to_tap(const Report& r);
std::string to_json(const Report& r);

}  // namespace sheafstab

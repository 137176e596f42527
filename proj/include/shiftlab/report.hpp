#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace shiftlab {

/// One verification outcome. `comparison` is "<=" for upper bounds (the
/// usual case) and ">=" for detector checks that must exceed a threshold;
/// `pass` always equals the comparison of `value` against `tolerance`.
struct CheckRecord {
  std::string check_name;
  std::string anchor;  ///< the statement being exercised
  std::string inputs_digest;
  double value = 0.0;
  double tolerance = 0.0;
  std::string comparison = "<=";
  bool pass = false;
  std::string detail;
};

class Report {
 public:
  void add_upper(std::string name, std::string anchor, std::string digest, double value, double tolerance,
                 std::string detail = {});
  void add_lower(std::string name, std::string anchor, std::string digest, double value, double tolerance,
                 std::string detail = {});
  /// A yes/no check, recorded as value 0 (holds) or 1 (fails) against tolerance 0.
  void add_flag(std::string name, std::string anchor, std::string digest, bool holds, std::string detail = {});
  void merge(const Report& other);
  /// Prefix every record's detail, e.g. with the corpus item it belongs to.
  void tag(const std::string& prefix);

  const std::vector<CheckRecord>& records() const noexcept { return records_; }
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  nlohmann::json to_json() const;

 private:
  std::vector<CheckRecord> records_;
};

/// Short stable digest (FNV-1a, hex) of a JSON value's compact dump.
std::string digest(const nlohmann::json& j);

}  // namespace shiftlab

#include "shiftlab/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace shiftlab {
namespace {

// JSON has no representation for non-finite numbers.
nlohmann::json finite_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

void Report::add_upper(std::string name, std::string anchor, std::string digest, double value, double tolerance,
                       std::string detail) {
  records_.push_back({std::move(name), std::move(anchor), std::move(digest), value, tolerance, "<=",
                      value <= tolerance, std::move(detail)});
}

void Report::add_lower(std::string name, std::string anchor, std::string digest, double value, double tolerance,
                       std::string detail) {
  records_.push_back({std::move(name), std::move(anchor), std::move(digest), value, tolerance, ">=",
                      value >= tolerance, std::move(detail)});
}

void Report::add_flag(std::string name, std::string anchor, std::string digest, bool holds, std::string detail) {
  add_upper(std::move(name), std::move(anchor), std::move(digest), holds ? 0.0 : 1.0, 0.0, std::move(detail));
}

void Report::merge(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

void Report::tag(const std::string& prefix) {
  for (auto& r : records_) r.detail = r.detail.empty() ? prefix : prefix + ": " + r.detail;
}

int Report::passed() const {
  int n = 0;
  for (const auto& r : records_) n += r.pass;
  return n;
}

int Report::failed() const { return static_cast<int>(records_.size()) - passed(); }

nlohmann::json Report::to_json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : records_)
    records.push_back({{"check_name", r.check_name},
                       {"anchor", r.anchor},
                       {"inputs_digest", r.inputs_digest},
                       {"value", finite_or_null(r.value)},
                       {"tolerance", r.tolerance},
                       {"comparison", r.comparison},
                       {"pass", r.pass},
                       {"detail", r.detail}});
  return {{"records", std::move(records)},
          {"summary", {{"total", records_.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::string digest(const nlohmann::json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace shiftlab

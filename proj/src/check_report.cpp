#include "alia/check_report.hpp"

#include <algorithm>
#include <utility>

namespace alia {

CheckReport::CheckReport(std::string name, std::size_t cap)
    : name_(std::move(name)), cap_(std::max<std::size_t>(cap, 1)) {}

void CheckReport::mark_checked(const std::string& identity) {
  if (std::find(checked_.begin(), checked_.end(), identity) == checked_.end()) {
    checked_.push_back(identity);
    per_identity_.emplace_back(identity, 0);
  }
}

void CheckReport::add(Violation v) {
  mark_checked(v.identity);
  for (auto& [id, n] : per_identity_)
    if (id == v.identity) ++n;
  ++violation_count_;
  if (violations_.size() < cap_) violations_.push_back(std::move(v));
}

void CheckReport::fail(const std::string& identity, std::vector<std::size_t> indices) {
  add(Violation{identity, std::move(indices), {}});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& id : other.checked_) mark_checked(id);
  for (const auto& [id, n] : other.per_identity_)
    for (auto& [mine, m] : per_identity_)
      if (mine == id) m += n;
  violation_count_ += other.violation_count_;
  for (const auto& v : other.violations_) {
    if (violations_.size() >= cap_) break;
    violations_.push_back(v);
  }
}

std::size_t CheckReport::count(const std::string& identity) const {
  for (const auto& [id, n] : per_identity_)
    if (id == identity) return n;
  return 0;
}

}  // namespace alia

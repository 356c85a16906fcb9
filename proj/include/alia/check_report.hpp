#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alia/matrix.hpp"

namespace alia {

/// One failing instance of an identity: the basis indices it was evaluated on
/// and the nonzero residual (flattened, row-major for matrix/tensor residuals).
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector residual;
};

/// Outcome of a brute-force identity check. `violations` keeps at most
/// `cap` witnesses in lexicographic index order; `violation_count` counts all.
class CheckReport {
 public:
  static constexpr std::size_t default_cap = 16;

  explicit CheckReport(std::string name = {}, std::size_t cap = default_cap);

  const std::string& name() const { return name_; }
  bool passed() const { return violation_count_ == 0; }
  std::size_t violation_count() const { return violation_count_; }
  const std::vector<Violation>& violations() const { return violations_; }
  /// Identity names evaluated by this report, in evaluation order.
  const std::vector<std::string>& checked() const { return checked_; }
  std::size_t cap() const { return cap_; }

  void mark_checked(const std::string& identity);
  void add(Violation v);
  /// Records a failed side condition (symmetry, nondegeneracy, ...) that has
  /// no natural index tuple.
  void fail(const std::string& identity, std::vector<std::size_t> indices = {});
  /// Appends another report's identities and violations.
  void merge(const CheckReport& other);

  /// Count of recorded violations for one identity name.
  std::size_t count(const std::string& identity) const;
  bool passed(const std::string& identity) const { return count(identity) == 0; }

 private:
  std::string name_;
  std::size_t cap_;
  std::size_t violation_count_ = 0;
  std::vector<Violation> violations_;
  std::vector<std::string> checked_;
  std::vector<std::pair<std::string, std::size_t>> per_identity_;
};

}  // namespace alia

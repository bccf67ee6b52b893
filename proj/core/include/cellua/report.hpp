#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cellua {

struct CheckEntry {
  std::string id;      // what is being checked, e.g. "cell-relation"
  std::string labels;  // which instance, e.g. "l3" or "(l3,1)->(l4,0)"
  bool pass = true;
  std::string detail;  // witness text on failure
};

/// Result of a verification batch: one entry per checked identity.
class CheckReport {
public:
  void add(const std::string& id, const std::string& labels, bool pass,
           const std::string& detail = "");
  void pass(const std::string& id, const std::string& labels) {
    add(id, labels, true);
  }
  void fail(const std::string& id, const std::string& labels,
            const std::string& detail) {
    add(id, labels, false, detail);
  }
  void merge(const CheckReport& other);

  bool ok() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<CheckEntry>& entries() const { return entries_; }

  /// One line per entry: CHECK <id> <labels> PASS|FAIL [detail].
  void print(std::ostream& os, bool failures_only = false) const;

private:
  std::vector<CheckEntry> entries_;
  std::size_t failures_ = 0;
};

} // namespace cellua

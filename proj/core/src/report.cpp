#include "cellua/report.hpp"

namespace cellua {

void CheckReport::add(const std::string& id, const std::string& labels,
                      bool pass, const std::string& detail) {
  entries_.push_back({id, labels, pass, detail});
  if (!pass) ++failures_;
}

void CheckReport::merge(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  failures_ += other.failures_;
}

void CheckReport::print(std::ostream& os, bool failures_only) const {
  for (const auto& e : entries_) {
    if (failures_only && e.pass) continue;
    os << "CHECK " << e.id << ' ' << (e.labels.empty() ? "-" : e.labels) << ' '
       << (e.pass ? "PASS" : "FAIL");
    if (!e.pass && !e.detail.empty()) os << ' ' << e.detail;
    os << '\n';
  }
}

} // namespace cellua

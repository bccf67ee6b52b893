#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellua/error.hpp"

namespace cellua {

/// Finite strict poset over opaque string labels. The relation is closed
/// transitively at construction and checked irreflexive (which also rules
/// out antisymmetry violations).
class Poset {
public:
  Poset() = default;
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& greater_pairs);

  std::size_t size() const { return elems_.size(); }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& label(std::size_t i) const { return elems_[i]; }
  std::optional<std::size_t> index(const std::string& label) const;
  std::size_t index_or_fail(const std::string& label) const;

  bool greater(std::size_t a, std::size_t b) const { return gt_[a][b]; }
  bool geq(std::size_t a, std::size_t b) const { return a == b || gt_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const {
    return a == b || gt_[a][b] || gt_[b][a];
  }

  /// All strict pairs (a > b), in row-major index order.
  std::vector<std::pair<std::string, std::string>> strict_pairs() const;

  /// The covering pairs only (no c with a > c > b); loading them and
  /// closing transitively recovers the relation.
  std::vector<std::pair<std::string, std::string>> covering_pairs() const;

  /// Indices ordered so larger elements come first; ties keep input order.
  std::vector<std::size_t> topo_desc() const;

  /// Sub-poset on the given labels (restricted order), keeping their order.
  Poset restrict(const std::vector<std::string>& labels) const;

private:
  std::vector<std::string> elems_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> gt_;
};

} // namespace cellua

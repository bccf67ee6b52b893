#include "cellua/poset.hpp"

namespace cellua {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& greater_pairs)
    : elems_(std::move(elements)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (index_.count(elems_[i]))
      fail(ErrorKind::Poset, "duplicate poset element: " + elems_[i]);
    index_[elems_[i]] = i;
  }
  const std::size_t n = elems_.size();
  gt_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : greater_pairs) {
    const auto ia = index(a), ib = index(b);
    if (!ia || !ib)
      fail(ErrorKind::Poset, "order pair uses unknown element: " + a + " > " + b);
    if (*ia == *ib)
      fail(ErrorKind::Poset, "reflexive order pair: " + a + " > " + b);
    gt_[*ia][*ib] = true;
  }
  // Transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!gt_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (gt_[k][j]) gt_[i][j] = true;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (gt_[i][i])
      fail(ErrorKind::Poset, "order contains a cycle through " + elems_[i]);
}

std::optional<std::size_t> Poset::index(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_or_fail(const std::string& label) const {
  const auto i = index(label);
  if (!i) fail(ErrorKind::Poset, "unknown poset element: " + label);
  return *i;
}

std::vector<std::pair<std::string, std::string>> Poset::strict_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (gt_[i][j]) out.emplace_back(elems_[i], elems_[j]);
  return out;
}

std::vector<std::pair<std::string, std::string>> Poset::covering_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!gt_[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < size() && covering; ++k)
        if (gt_[i][k] && gt_[k][j]) covering = false;
      if (covering) out.emplace_back(elems_[i], elems_[j]);
    }
  return out;
}

std::vector<std::size_t> Poset::topo_desc() const {
  const std::size_t n = size();
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> out;
  out.reserve(n);
  while (out.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool blocked = false;
      for (std::size_t j = 0; j < n; ++j)
        if (!placed[j] && gt_[j][i]) { blocked = true; break; }
      if (!blocked) {
        placed[i] = true;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Poset Poset::restrict(const std::vector<std::string>& labels) const {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& a : labels)
    for (const auto& b : labels) {
      const auto ia = index(a), ib = index(b);
      if (!ia || !ib)
        fail(ErrorKind::Poset, "restrict: unknown element " + (ia ? b : a));
      if (gt_[*ia][*ib]) pairs.emplace_back(a, b);
    }
  return Poset(labels, pairs);
}

} // namespace cellua

#pragma once

#include "cellua/matrix.hpp"

namespace cellua {

/// Subspace of row vectors, stored as a canonical reduced-echelon basis.
/// Canonical form makes equality and containment checks exact and
/// deterministic.
class RowSpace {
public:
  RowSpace() : ambient_(0) {}
  RowSpace(const Field& f, std::size_t ambient)
      : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

  static RowSpace span(const ExactMatrix& rows);
  static RowSpace span(const Field& f, std::size_t ambient,
                       const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const RowSpace& o) const;
  bool operator==(const RowSpace& o) const { return basis_ == o.basis_; }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

  /// Coordinates of v in the echelon basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  RowSpace sum(const RowSpace& o) const;
  RowSpace intersect(const RowSpace& o) const;

  /// Ambient coordinate indices e_i that extend this space to the full
  /// ambient space, chosen greedily in ascending index order.
  std::vector<std::size_t> complement_coords() const;

private:
  Field field_;
  std::size_t ambient_;
  ExactMatrix basis_;
};

} // namespace cellua

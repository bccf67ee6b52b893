#pragma once

#include <string>
#include <vector>

#include "cellua/matrix.hpp"
#include "cellua/poset.hpp"
#include "cellua/report.hpp"

namespace cellua {

/// Sparse vector over basis positions: sorted by position, no zero terms.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_normalize(SparseVec terms);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_sub(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scaled(const SparseVec& a, const Scalar& c);
bool sparse_equal(const SparseVec& a, const SparseVec& b);
Vec sparse_to_dense(const Field& f, std::size_t dim, const SparseVec& a);
SparseVec dense_to_sparse(const Vec& v);
std::string sparse_str(const SparseVec& a, const std::vector<std::string>& names);

/// Finite-dimensional associative algebra given by structure constants on a
/// fixed basis, with the unit's basis expansion supplied explicitly.
struct AssocAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;  // size dim
  std::vector<SparseVec> mult;           // dim*dim entries, (i,j) -> product
  SparseVec unit;

  const SparseVec& basis_product(std::size_t i, std::size_t j) const {
    return mult[i * dim + j];
  }
  SparseVec& basis_product(std::size_t i, std::size_t j) {
    return mult[i * dim + j];
  }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  /// Left-multiplication matrix of basis element i, column convention:
  /// column j holds the coordinates of c_i * c_j.
  ExactMatrix left_regular(std::size_t i) const;
  ExactMatrix left_regular_elem(const SparseVec& a) const;

  /// nullopt when associative; otherwise a witness triple (i,j,k).
  std::optional<std::array<std::size_t, 3>> associativity_witness() const;
  /// nullopt when unit * c = c * unit = c for every basis element.
  std::optional<std::size_t> unit_witness() const;
};

/// Where basis position p sits in the cellular datum.
struct CellIndex {
  std::size_t lambda;  // index into lambda_plus elements
  std::size_t s, t;    // indices into t_set(lambda)
};

/// Poset, index sets and the (lambda, s, t) <-> basis position bijection.
/// Basis positions follow the topological order of lambda_plus (larger
/// first, input order breaking ties) and run row-major over T x T.
struct CellularDatum {
  Poset lambda_plus;
  std::vector<std::vector<std::string>> t_sets;  // by lambda index

  std::vector<std::size_t> topo;       // lambda indices, larger first
  std::vector<std::size_t> offset;     // by lambda index, basis offset
  std::vector<CellIndex> cell;         // by basis position
  std::size_t dim = 0;

  static CellularDatum build(Poset lambda_plus,
                             std::vector<std::vector<std::string>> t_sets);

  std::size_t position(std::size_t lambda, std::size_t s, std::size_t t) const {
    return offset[lambda] + s * t_sets[lambda].size() + t;
  }
  std::size_t t_size(std::size_t lambda) const { return t_sets[lambda].size(); }
  const std::string& t_label(std::size_t lambda, std::size_t k) const {
    return t_sets[lambda][k];
  }
};

/// Cellular algebra: the algebra plus its cellular datum; the involution is
/// the index swap c^l_{st} -> c^l_{ts}, stored as a basis permutation.
struct CellularAlgebra {
  AssocAlgebra A;
  CellularDatum datum;
  std::vector<std::size_t> star;  // basis permutation

  static CellularAlgebra assemble(AssocAlgebra a, CellularDatum d);

  const Field& field() const { return A.field; }
  std::size_t dim() const { return A.dim; }
  std::size_t lambda_count() const { return datum.lambda_plus.size(); }
  const std::string& lambda_label(std::size_t l) const {
    return datum.lambda_plus.label(l);
  }

  SparseVec apply_star(const SparseVec& a) const;

  /// Basis positions of all cells with lambda' strictly above lambda.
  std::vector<std::size_t> ideal_above(std::size_t lambda) const;
  /// True when the sparse vector is supported on cells above lambda.
  bool supported_above(const SparseVec& a, std::size_t lambda) const;

  /// Coefficients r_v in c^l_{st} * a = sum_v r_v c^l_{sv} modulo higher
  /// cells, computed from the first s and verified identical for all s.
  Vec cell_coefficients(std::size_t lambda, std::size_t t,
                        const SparseVec& a) const;
  /// Same, from a single fixed s; remainder must sit above lambda.
  std::optional<Vec> cell_coefficients_at(std::size_t lambda, std::size_t s,
                                          std::size_t t, const SparseVec& a) const;

  /// Exhaustive check of the defining axioms: associativity, the unit
  /// expansion, the anti-automorphism, one-sided triangular multiplication
  /// with s-independent coefficients, and ideality of each span above
  /// lambda. Failures become report entries with witnesses.
  CheckReport verify_cellular() const;

  std::string cell_name(std::size_t pos) const;
};

} // namespace cellua

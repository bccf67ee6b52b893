#pragma once

#include "cellua/algebra.hpp"
#include "cellua/subspace.hpp"

namespace cellua {

enum class Side { Right, Left };

/// Module over an AssocAlgebra, one action matrix per algebra basis element.
/// Right modules act on row vectors (x -> x * act[i]); left modules act on
/// column vectors (x -> act[i] * x). In both conventions act(ab) is
/// act(a) * act(b).
struct CellModule {
  std::string label;
  Side side = Side::Right;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<ExactMatrix> act;  // by algebra basis position

  /// Action matrix in row convention (transposed for left modules); all
  /// subspace machinery operates on this view.
  ExactMatrix row_act(std::size_t i) const {
    return side == Side::Right ? act[i] : act[i].transpose();
  }
  ExactMatrix row_act_elem(const Field& f, const SparseVec& a) const;

  /// nullopt when act is a representation of the algebra; otherwise a
  /// witness pair (i, j) with act(i)*act(j) != act(i*j).
  std::optional<std::pair<std::size_t, std::size_t>>
  representation_witness(const AssocAlgebra& A) const;
};

/// Direct sum, with m's coordinates first.
CellModule direct_sum(const CellModule& m, const CellModule& n,
                      const std::string& label);

/// Smallest submodule (in row view) containing the given rows.
RowSpace spin(const CellModule& m, const std::vector<Vec>& seed);

bool is_invariant(const CellModule& m, const RowSpace& s);

/// Quotient of m by the invariant subspace s. Quotient coordinates are the
/// lexicographically first coordinate set completing s, in ascending order.
struct QuotientModule {
  CellModule mod;
  std::vector<std::size_t> coords;  // ambient coordinates representing Q
  RowSpace killed;
  /// Image of an ambient row vector in quotient coordinates.
  Vec project(const Vec& v) const;
};
QuotientModule quotient_module(const CellModule& m, const RowSpace& s,
                               const std::string& label);

/// Submodule of m spanned by s, in the echelon basis of s (row view).
CellModule submodule(const CellModule& m, const RowSpace& s,
                     const std::string& label);

/// Gram matrix of the bilinear form on a standard module.
struct GramForm {
  std::string lambda;
  ExactMatrix matrix;
};

/// Right or left standard module of a cellular algebra at lambda; the
/// representation property is verified.
CellModule standard_module(const CellularAlgebra& ca, std::size_t lambda,
                           Side side);

/// Entry (s,t) satisfies <c_s,c_t> c_{uv} = c_{us} c_{tv} modulo higher
/// cells, computed at u = v = first index and cross-checked over all (u,v).
GramForm gram(const CellularAlgebra& ca, std::size_t lambda);
/// Same matrix read off the starred products; equals gram by symmetry.
GramForm left_gram(const CellularAlgebra& ca, std::size_t lambda);

/// Radical of the form on the standard module, as a row-view subspace.
RowSpace gram_radical(const CellularAlgebra& ca, const GramForm& g,
                      const CellModule& w);

std::size_t simple_dimension(const CellularAlgebra& ca, std::size_t lambda);
/// Labels lambda with nonzero simple quotient, in basis order.
std::vector<std::string> lambda_plus_zero(const CellularAlgebra& ca);

/// Simple quotient L = W / rad W; requires a nonzero Gram rank.
CellModule simple_module(const CellularAlgebra& ca, std::size_t lambda,
                         Side side);

/// Verifies that c_t -> c_{st} + higher cells is injective and equivariant
/// for the first s in T(lambda).
CheckReport embed_standard(const CellularAlgebra& ca, std::size_t lambda);

/// Upward-closed subset of lambda_plus labels.
struct SaturatedSubset {
  std::vector<std::string> labels;
};

struct QuotientCellular {
  CellularAlgebra alg;
  /// Parent basis position per quotient basis position.
  std::vector<std::size_t> parent_pos;
  /// Quotient position per parent position (dim of parent), or npos.
  std::vector<std::size_t> image_pos;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Quotient by the span of the cells in an upward-closed subset; the subset
/// is verified saturated and the result verified cellular. The empty subset
/// returns a copy; the full set is rejected.
QuotientCellular quotient_cellular(const CellularAlgebra& ca,
                                   const SaturatedSubset& s);

} // namespace cellua

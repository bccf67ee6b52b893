#pragma once

#include "cellua/modules.hpp"

namespace cellua {

/// Jacobson radical of the algebra: kernel of the trace form of the regular
/// representation (valid over the rationals or F_p with p > dim).
struct Radical {
  RowSpace space;                   // elements as coordinate rows
  std::vector<SparseVec> elements;  // echelon basis, sparse form
  std::size_t nilpotency = 0;       // smallest k with J^k = 0
};

Radical jacobson_radical(const AssocAlgebra& A);

/// Quotient algebra A / I by a two-sided ideal given as a row space.
struct QuotientAlgebra {
  AssocAlgebra alg;
  std::vector<std::size_t> coords;  // parent coordinates kept
};
QuotientAlgebra quotient_algebra(const AssocAlgebra& A, const RowSpace& ideal);

/// Layers M > MJ > MJ^2 > ... (right) or M > JM > ... (left); each layer is
/// a semisimple module, returned top first. Zero modules give no layers.
std::vector<CellModule> radical_filtration(const AssocAlgebra& A,
                                           const CellModule& m,
                                           const Radical& j);

/// Dimension of the space of module homomorphisms m -> n (same side).
std::size_t hom_dimension(const AssocAlgebra& A, const CellModule& m,
                          const CellModule& n);

/// Multiplicity of each simple in a composition series of m, computed as a
/// sum of hom dimensions over the radical layers. Checks the dimension
/// bookkeeping sum(mult * dim simple) == dim m.
std::vector<long long> composition_multiplicities(
    const AssocAlgebra& A, const CellModule& m,
    const std::vector<CellModule>& simples, const Radical& j);

struct DecompositionMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<long long>> entries;

  long long at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  /// Entry by labels; missing rows or columns count as zero.
  long long get(const std::string& row, const std::string& col) const;
  bool has_row(const std::string& row) const;
  void to_csv(std::ostream& os) const;
  bool operator==(const DecompositionMatrix& o) const;
};

/// Generic engine: multiplicity of each simple in each standard module.
/// Asserts hom(L, L) = 1 for every simple (split check). Rows are computed
/// in parallel.
DecompositionMatrix decomposition_table(const AssocAlgebra& A,
                                        const std::vector<CellModule>& standards,
                                        const std::vector<std::string>& row_labels,
                                        const std::vector<CellModule>& simples,
                                        const std::vector<std::string>& col_labels,
                                        const Radical& j);

/// Decomposition matrix of a cellular algebra: rows = standard modules in
/// basis order, columns = labels with nonzero simple quotient.
DecompositionMatrix decomposition_matrix(const CellularAlgebra& ca, Side side);

struct LinkagePartition {
  /// Blocks of row labels; each block sorted by first appearance, blocks
  /// ordered by their smallest row index.
  std::vector<std::vector<std::string>> blocks;
  bool same_block(const std::string& a, const std::string& b) const;
};

/// Connected components of row labels under "some column is nonzero in both
/// rows", closed transitively.
LinkagePartition linkage_partition(const DecompositionMatrix& d);

/// Entry (x, y) = sum over rows of left(row, x) * right(row, y); the
/// multiplicity of the simple y in the projective cover of x.
DecompositionMatrix cartan_via_formula(const DecompositionMatrix& left,
                                       const DecompositionMatrix& right);

} // namespace cellua

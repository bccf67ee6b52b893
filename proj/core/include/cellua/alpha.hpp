#pragma once

#include "cellua/repth.hpp"

namespace cellua {

/// Idempotent decomposition of the unit plus an order-compatible map into a
/// target poset; drives the Levi, parabolic and quotient constructions.
struct AlphaDatum {
  Poset lambda_tilde;                    // contains the cell poset labels
  std::vector<std::string> lambda;       // labels carrying idempotents
  std::vector<SparseVec> idempotents;    // aligned with lambda
  Poset x;                               // target poset
  std::map<std::string, std::string> alpha;  // lambda_tilde label -> x label
};

/// Omega pair label, e.g. "(l3,1)".
std::string omega_label(const std::string& lambda, int eps);

/// Checks the idempotent-decomposition axioms, the cell support of each
/// idempotent, the unique column/row fixing, and order compatibility of the
/// map. Failures are report entries with witnesses.
CheckReport verify_assumptions(const CellularAlgebra& ca, const AlphaDatum& ad);

/// For every (lambda, t) the unique mu whose idempotent fixes the column,
/// and the split of each T(lambda) by comparing map values.
struct TableauPartition {
  std::vector<std::vector<std::size_t>> mu_of;    // [lambda][t] -> lambda index in ad
  std::vector<std::vector<std::size_t>> t_plus;   // [lambda] -> indices into T
  std::vector<std::vector<std::size_t>> t_minus;
};
TableauPartition tableau_partition(const CellularAlgebra& ca,
                                   const AlphaDatum& ad);

/// The doubled index poset: pairs (lambda, eps) with nonempty index set,
/// ordered by eps first and the cell order second.
struct OmegaData {
  struct Entry {
    std::size_t lambda;  // cell poset index
    int eps;             // 0 = same map value, 1 = strictly smaller
    std::vector<std::size_t> members;  // indices into T(lambda)
    std::string label;
  };
  std::vector<Entry> entries;            // lambda-major, eps ascending
  Poset poset;                           // on entry labels
  std::vector<std::size_t> hat;          // entry indices with eps == 1
  std::vector<std::string> lambda_bar;   // labels with nonempty plus part

  std::optional<std::size_t> find(std::size_t lambda, int eps) const;
};
OmegaData omega(const CellularAlgebra& ca, const TableauPartition& tp);

/// Subalgebra of the ambient algebra spanned by a subset of its basis.
struct SpannedSubalgebra {
  AssocAlgebra alg;
  std::vector<std::size_t> parent_pos;   // subalgebra basis -> ambient basis
  std::vector<std::size_t> image_pos;    // ambient basis -> subalgebra or npos
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Levi subalgebra: the span of the cells with both indices in the same
/// eps part, cellular over the doubled poset.
struct Levi {
  SpannedSubalgebra sub;
  CellularAlgebra cell;  // same algebra with the Omega cellular datum
  /// Levi basis position of ambient cell (lambda, s, t), by cell position.
};
Levi build_levi(const CellularAlgebra& ca, const TableauPartition& tp,
                const OmegaData& om, CheckReport& rep);

/// Parabolic subalgebra: rows in the eps part, columns relaxed. Standardly
/// based rather than cellular; kept as a plain algebra plus index data.
struct Parabolic {
  SpannedSubalgebra sub;
  bool starred = false;  // true for the image under the involution
  // Per omega entry: row and column index sets (indices into T(lambda)).
  std::vector<std::vector<std::size_t>> rows;  // I~
  std::vector<std::vector<std::size_t>> cols;  // J~
};
Parabolic build_parabolic(const CellularAlgebra& ca, const OmegaData& om,
                          bool starred, CheckReport& rep);

/// Right standard module of the parabolic at an omega entry (basis J~), or
/// the left one (basis I~), with triangularity verified.
CellModule sba_standard_module(const CellularAlgebra& ca, const Parabolic& pa,
                               const OmegaData& om, std::size_t entry, Side side);

/// Bilinear pairing of the left and right standard modules: rows I~,
/// columns J~; the auxiliary pair independence is verified.
ExactMatrix sba_beta(const CellularAlgebra& ca, const Parabolic& pa,
                     const OmegaData& om, std::size_t entry);

/// Everything the theorem suite needs, built once per (algebra, datum).
struct AlphaWorkspace {
  const CellularAlgebra* ca = nullptr;
  AlphaDatum ad;
  TableauPartition tp;
  OmegaData om;
  Levi levi;
  Parabolic para;       // the parabolic
  Parabolic para_star;  // its image under the involution
  QuotientCellular quot;  // quotient of the Levi by the eps=1 part

  CheckReport construction_report;

  // Decomposition data.
  DecompositionMatrix d_ambient, d_ambient_left;
  DecompositionMatrix d_levi, d_levi_left;
  DecompositionMatrix d_quot, d_quot_left;
  DecompositionMatrix d_para_right, d_para_left;

  std::vector<std::string> lambda_plus_zero;   // of the ambient algebra
  std::vector<std::string> omega_zero;         // entries with nonzero form
  std::vector<std::string> omega_zero_tilde;   // entries with nonzero beta
  std::vector<std::string> lambda_bar_zero;    // of the quotient

  std::string alpha_of_cell(std::size_t lambda) const;
};

/// Builds the Levi, parabolic and quotient with their verification report;
/// throws on assumption failure.
AlphaWorkspace build_alpha_workspace(const CellularAlgebra& ca,
                                     const AlphaDatum& ad);

/// Adds the decomposition matrices of all four algebras to the workspace.
void compute_decomposition_data(AlphaWorkspace& w);

/// Bilinear-form relations: restriction agreement, block diagonality of the
/// ambient Gram across the split, the pairing blocks, and the equality of
/// the two nonzero-label sets.
CheckReport check_form_relations(const AlphaWorkspace& w);

/// Explicit basis-labelled module isomorphisms, each verified equivariant
/// under every algebra basis element, plus the radical correspondences.
CheckReport check_module_relations(const AlphaWorkspace& w);

/// Entrywise identities between the decomposition matrices of the four
/// algebras, including the left/right equalities.
CheckReport check_decomposition_relations(const AlphaWorkspace& w);

/// The label-set inclusion and nonvanishing-of-idempotents condition. A
/// determination, not an assertion: when it holds, the consequences (every
/// nonzero simple survives on the plus part) are verified as checks.
struct ConditionC {
  bool holds = false;
  std::string witness;       // set when the condition fails
  CheckReport consequences;  // populated only when the condition holds
};
ConditionC check_condition_c(const AlphaWorkspace& w);

/// Linkage partitions of the four algebras and their comparisons, plus the
/// symmetry of the Cartan matrices computed by the projective formula.
struct BlockData {
  LinkagePartition ambient;      // on cell labels
  LinkagePartition levi;         // on omega labels (reported, not compared)
  LinkagePartition para;         // on omega labels, right standard modules
  LinkagePartition para_left;    // left standard modules (reported)
  LinkagePartition para_on_lambda;  // para projected to cell labels
  LinkagePartition quot;         // on the surviving cell labels
  DecompositionMatrix cartan;       // for the parabolic
  DecompositionMatrix cartan_sharp; // opposite-side formula
};
BlockData compute_block_data(const AlphaWorkspace& w);
CheckReport check_block_relations(const AlphaWorkspace& w, const BlockData& bd);

/// Full verification battery, in a deterministic order.
CheckReport run_full_report(AlphaWorkspace& w);

} // namespace cellua

#pragma once

#include "cellua/algebra.hpp"

namespace cellua {

/// Quiver with linear relations between composable paths.
struct QuiverPresentation {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    std::size_t from, to;
  };
  std::vector<Arrow> arrows;

  /// Path as an arrow-index word; length 0 carries only the vertex.
  struct Word {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;
  };
  struct Relation {
    std::vector<std::pair<Word, Scalar>> terms;
  };
  std::vector<Relation> relations;

  std::size_t word_target(const Word& w) const {
    return w.arrows.empty() ? w.source : arrows[w.arrows.back()].to;
  }
  bool word_composable(const Word& w) const;
  std::string word_name(const Word& w) const;
};

/// Basis of the quotient of the path algebra by the relation ideal, within
/// the path-length cap, together with the closed multiplication table.
struct PathAlgebraResult {
  AssocAlgebra alg;
  std::vector<QuiverPresentation::Word> basis_words;  // normal forms
  std::vector<std::size_t> vertex_idempotent;         // basis pos of e_v
};

/// Orients each relation so its largest path (longer first, then
/// lexicographic by arrow declaration order) rewrites to the rest, closes
/// the rule set under overlaps, and spans the irreducible words up to the
/// cap. Errors with CapExceeded when closure is not reached within the cap.
PathAlgebraResult build_path_algebra(const QuiverPresentation& q,
                                     const Field& f, std::size_t cap);

} // namespace cellua

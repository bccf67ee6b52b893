#pragma once

#include "cellua/alpha.hpp"
#include "cellua/quiver.hpp"

namespace cellua {

struct BuiltinAlgebra {
  CellularAlgebra alg;
  std::optional<AlphaDatum> alpha;
};

/// n x n matrix algebra on the elementary-matrix basis, with one cell of
/// size n. With b (1 < b <= n) comes the diagonal idempotent family and the
/// two-valued map splitting the indices at b.
BuiltinAlgebra build_matrix_algebra(const Field& f, std::size_t n,
                                    std::optional<std::size_t> b);

/// The five-vertex quiver with zero and commutation relations, its
/// 18-dimensional quotient, the six-cell structure, the vertex idempotents,
/// and the three-valued map. Built through the rewriting engine.
BuiltinAlgebra build_path_example(const Field& f);

/// The quiver presentation underlying build_path_example, for tests that
/// exercise the rewriting engine directly.
QuiverPresentation path_example_quiver(const Field& f);

/// Parses "path-example" or "matrix:n=<n>[,b=<b>]".
BuiltinAlgebra build_builtin(const std::string& spec, const Field& f);

} // namespace cellua

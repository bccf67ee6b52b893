#pragma once

#include "cellua/repth.hpp"

namespace cellua::testing {

/// Independent composition-series search: recursively splits a module along
/// any proper nonzero submodule found by spinning basis and seeded random
/// vectors, then certifies each leaf against the given simples by an
/// explicit nonzero homomorphism with matching dimension. The randomness
/// only affects whether a splitting is found; certified results are exact.
/// Throws when a leaf cannot be certified within the try budget.
std::vector<long long> oracle_multiplicities(
    const AssocAlgebra& a, const CellModule& m,
    const std::vector<CellModule>& simples, std::uint64_t seed = 0x5eed);

} // namespace cellua::testing

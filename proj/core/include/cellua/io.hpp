#pragma once

#include "cellua/builtins.hpp"

namespace cellua {

/// Parses a .cell.json document; structural problems raise Schema errors
/// with the offending field in the message, poset problems raise Poset
/// errors, and the unit expansion is re-verified. A field override
/// reinterprets the stored coefficients in that field (integer literals
/// reduce mod p).
BuiltinAlgebra parse_cell_json(const std::string& text,
                               std::optional<Field> field_override = {});

/// Canonical serialization; parse(serialize(x)) reproduces x exactly and
/// serialize(parse(bytes)) is stable byte for byte.
std::string serialize_cell_json(const CellularAlgebra& alg,
                                const std::optional<AlphaDatum>& alpha,
                                const std::string& name = "");

/// Parses a .quiver.json document.
QuiverPresentation parse_quiver_json(const std::string& text, const Field& f);

/// Reads a whole file; Input error when missing.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace cellua

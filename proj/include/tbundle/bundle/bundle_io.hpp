#pragma once

#include "tbundle/bundle/torus_bundle.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tbundle {

/// Parses the bundle document
///
///   {"genus": 2, "monodromy": [[[1,0],[0,1]], ...], "euler": [m, n]}
///
/// Integers may be arbitrarily large. Throws ParseError on malformed text and
/// ValidationError (naming the field) on a bad genus, arity, determinant, a
/// tuple violating the surface relation, or unknown/missing keys.
TorusBundle parse_bundle(std::string_view text);

TorusBundle load_bundle(const std::filesystem::path& path);

/// Inverse of parse_bundle; single line, no insignificant whitespace.
std::string serialize_bundle(const TorusBundle& bundle);

}  // namespace tbundle

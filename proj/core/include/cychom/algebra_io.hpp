#pragma once

#include <optional>
#include <string>

#include "cychom/hochschild.hpp"

namespace cychom {

/// Parses the line-based algebra format:
///
///   # comment
///   ring: F2
///   dim: 2
///   basis: 1 x
///   unit: 1 0
///   mul: x x -> 0
///   mul: x y -> 2*x - y + 1/2*z
///
/// Products not listed are zero, except that when the unit is a single basis
/// element its products default to the unit law. `ring` overrides the ring
/// named in the text. Throws ParseError (with the line) on malformed input and
/// AlgebraError naming the failing triple when the result is not associative
/// or not unital.
AlgebraPresentation parse_algebra(const std::string& text, std::optional<RingSpec> ring = std::nullopt);
AlgebraPresentation parse_algebra_file(const std::string& path, std::optional<RingSpec> ring = std::nullopt);

/// Writes an algebra in the same format; parse_algebra(format_algebra(a))
/// reproduces a.
std::string format_algebra(const AlgebraPresentation& a);

}  // namespace cychom

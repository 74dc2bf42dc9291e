#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynirr/closure.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr {

struct ParsedPolySet {
  DISetInstance instance;
  /// True when d > 1 and the header omitted the modulus.
  bool modulus_defaulted = false;
  std::vector<std::string> diagnostics;
};

/// Parses the line format
///
///   p=<int> d=<int> [modulus=<c0>:...:<cd>]
///   # comment
///   b=<elem> c=<elem>
///
/// Blank lines and '#' comments may appear anywhere. Repeated polynomials are
/// dropped with a diagnostic. Throws dynirr::ParseError carrying the line
/// number and one of ParseError, CoefficientOutOfRange, BadModulus,
/// InvalidField.
ParsedPolySet parse_poly_set(std::string_view text);

/// "b=<elem> c=<elem>".
std::string format_quad(const MonicQuad& f);

/// Header, optional comment lines, then one line per polynomial.
std::string emit_poly_set(const DISetInstance& inst, std::span<const std::string> comments = {});

}  // namespace dynirr

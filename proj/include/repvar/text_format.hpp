#pragma once

// Plain-text quiver, module and cochain files.
//
//   quiver square
//   vertex 1
//   arrow alpha 1 2
//   relation beta.alpha - delta.gamma
//   bound 3
//
//   module M over GF 101 on square
//   dim 1=1 2=1 3=1 4=1
//   mat alpha = [[1]]
//
// A module file may carry the quiver block it refers to; otherwise the name
// must be a builtin (kronecker, square, canonical:2,2,2, ...). Truncated
// families use "over GF P / t^N" with entries such as 1+2*t^2. Rows may also
// be written flat: [1, 0; 0, 1]. Arrows without a mat line act by zero.
// '#' starts a comment.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repvar/homology.hpp"

namespace repvar {

// "Q", "GF 101", "gf101", "GF(101)"; an optional "/ t^N" sets the order.
std::pair<Field, std::size_t> parse_field(const std::string& text);
std::string field_spec(Field f, std::size_t order = 1);

// kronecker, square, canonical:P1,P2,... (lambda_i = 1, 2, ...) and the
// canonical_P1,P2,... names produced by canonical_bound_quiver.
std::optional<BoundQuiver> builtin_quiver(const std::string& name);

// Throws ParseError with the line and column of the offending token.
std::vector<BoundQuiver> parse_quivers(const std::string& text);
BoundQuiver parse_quiver(const std::string& text);
std::string emit_quiver(const BoundQuiver& bq);

struct ModuleFile {
  std::string name;
  AlgebraPtr algebra;
  std::size_t order = 1;               // > 1 for a family over k[t]/(t^order)
  Representation module;               // order == 1
  TruncatedRepresentation family;      // order > 1
  bool truncated() const { return order > 1; }
};
// `known` supplies quivers defined elsewhere (e.g. a separate quiver file).
ModuleFile parse_module(const std::string& text, const std::vector<BoundQuiver>& known = {});
// The quiver block is always embedded so the file stands alone.
std::string emit_module(const Representation& m, const std::string& name);
std::string emit_module(const TruncatedRepresentation& m, const std::string& name);

// "mat ARROW = MATRIX" lines (the keyword is optional, ';' may separate
// entries on one line). Shapes follow Z_a : N_{sa} -> M_{ta}.
Cochain parse_cochain(const std::string& text, const Representation& n, const Representation& m);
std::string emit_cochain(const Cochain& z, const Quiver& q);

}  // namespace repvar

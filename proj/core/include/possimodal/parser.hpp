#pragma once

#include "formula.hpp"

#include <string>
#include <string_view>

namespace possimodal
{

// Grammar (ASCII):
//   variables  [a-z][a-zA-Z0-9_]*        constants  0 (⊥), 1 / top (⊤)
//   unary      ~  []  <>                 binary     &  |  ->  <->
// Precedence from tightest: unary, &, |, ->, <->. `->` associates to the
// right, the others to the left. Derived connectives are expanded into
// primitives while parsing. Throws parse_error.
[[nodiscard]] formula parse( std::string_view text );

// Like parse, but also accepts metavariables spelled [A-Z][a-zA-Z0-9_]*.
[[nodiscard]] formula parse_scheme( std::string_view text );

// Precedence-minimal rendering; parse( render( f ) ) == f.
[[nodiscard]] std::string render( const formula& f );

[[nodiscard]] bool is_metavariable( std::string_view name );

} // namespace possimodal

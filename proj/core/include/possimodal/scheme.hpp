#pragma once

#include "formula.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace possimodal
{

enum class logic_id
{
    k45,
    kd45,
    s5,
};

[[nodiscard]] std::string_view to_string( logic_id logic );
[[nodiscard]] logic_id parse_logic( std::string_view text ); // "k45" | "kd45" | "s5"

// Axiom or theorem schema whose template ranges over metavariables
// (uppercase identifiers).
struct named_scheme
{
    std::string name;
    formula pattern;
    logic_id source_logic;
};

using substitution = std::map< std::string, formula >;

// Simultaneous uniform substitution of metavariables. Object variables are
// left untouched. Throws substitution_error on an unbound metavariable.
[[nodiscard]] formula instantiate( const formula& pattern, const substitution& subst );
[[nodiscard]] inline formula instantiate( const named_scheme& scheme, const substitution& subst )
{
    return instantiate( scheme.pattern, subst );
}

// Schemes belonging to a logic, including those inherited from weaker logics.
[[nodiscard]] const std::vector< named_scheme >& schemes( logic_id logic );
[[nodiscard]] const named_scheme& scheme_by_name( std::string_view name );

// Schemes of the logic instantiated with X ↦ p, Y ↦ q.
[[nodiscard]] std::vector< std::pair< std::string, formula > > corpus( logic_id logic );

} // namespace possimodal

#include "possimodal/scheme.hpp"

#include "possimodal/errors.hpp"
#include "possimodal/parser.hpp"

#include <array>

namespace possimodal
{

std::string_view to_string( logic_id logic )
{
    switch ( logic )
    {
    case logic_id::k45:
        return "k45";
    case logic_id::kd45:
        return "kd45";
    case logic_id::s5:
        return "s5";
    }
    return "?";
}

logic_id parse_logic( std::string_view text )
{
    if ( text == "k45" || text == "K45" )
        return logic_id::k45;
    if ( text == "kd45" || text == "KD45" )
        return logic_id::kd45;
    if ( text == "s5" || text == "S5" )
        return logic_id::s5;
    throw error{ "unknown logic '" + std::string{ text } + "'" };
}

formula instantiate( const formula& pattern, const substitution& subst )
{
    switch ( pattern.kind() )
    {
    case connective::bot:
        return pattern;
    case connective::var:
    {
        if ( !is_metavariable( pattern.name() ) )
            return pattern;
        auto it = subst.find( pattern.name() );
        if ( it == subst.end() )
            throw substitution_error{ "no binding for metavariable " + pattern.name() };
        return it->second;
    }
    case connective::conj:
        return formula::conj( instantiate( pattern.left(), subst ), instantiate( pattern.right(), subst ) );
    case connective::impl:
        return formula::impl( instantiate( pattern.left(), subst ), instantiate( pattern.right(), subst ) );
    case connective::box:
        return formula::box( instantiate( pattern.body(), subst ) );
    case connective::dia:
        return formula::dia( instantiate( pattern.body(), subst ) );
    }
    return pattern;
}

namespace
{

struct scheme_source
{
    const char* name;
    const char* pattern;
    logic_id logic;
};

// K(G) axioms and theorems, the K45 axioms and derived schemes, D / D' for
// KD45 and the T axioms for S5.
constexpr std::array scheme_table{
    scheme_source{ "K_box", "[](X -> Y) -> ([]X -> []Y)", logic_id::k45 },
    scheme_source{ "K_dia", "<>(X | Y) -> (<>X | <>Y)", logic_id::k45 },
    scheme_source{ "F_box", "[]top", logic_id::k45 },
    scheme_source{ "P", "[](X -> Y) -> (<>X -> <>Y)", logic_id::k45 },
    scheme_source{ "FS2", "(<>X -> []Y) -> [](X -> Y)", logic_id::k45 },
    scheme_source{ "T1", "~<>X <-> []~X", logic_id::k45 },
    scheme_source{ "T2", "~~[]X -> []~~X", logic_id::k45 },
    scheme_source{ "T3", "<>~~X -> ~~<>X", logic_id::k45 },
    scheme_source{ "T4", "([]X -> <>Y) | []((X -> Y) -> Y)", logic_id::k45 },
    scheme_source{ "T5", "<>(X -> Y) -> ([]X -> <>Y)", logic_id::k45 },
    scheme_source{ "4_box", "[]X -> [][]X", logic_id::k45 },
    scheme_source{ "4_dia", "<><>X -> <>X", logic_id::k45 },
    scheme_source{ "5_box", "<>[]X -> []X", logic_id::k45 },
    scheme_source{ "5_dia", "<>X -> []<>X", logic_id::k45 },
    scheme_source{ "F_dia_box", "<>[]top <-> <>top", logic_id::k45 },
    scheme_source{ "G45", "([]X -> <>Y) -> []([]X -> <>Y)", logic_id::k45 },
    scheme_source{ "U_dia", "<><>X <-> <>X", logic_id::k45 },
    scheme_source{ "U_box", "[][]X <-> []X", logic_id::k45 },
    scheme_source{ "T4_box", "([]X -> <>[]X) | []X", logic_id::k45 },
    scheme_source{ "T4_dia", "([]<>X -> <>X) | []<>X", logic_id::k45 },
    scheme_source{ "Sk_dia", "(<>top -> <>X) <-> []<>X", logic_id::k45 },
    scheme_source{ "T4'_dia", "([]<>X -> <>X) | (<>top -> <>X)", logic_id::k45 },
    scheme_source{ "D", "<>top", logic_id::kd45 },
    scheme_source{ "D'", "[]X -> <>X", logic_id::kd45 },
    scheme_source{ "T_box", "[]X -> X", logic_id::s5 },
    scheme_source{ "T_dia", "X -> <>X", logic_id::s5 },
};

int strength( logic_id logic )
{
    switch ( logic )
    {
    case logic_id::k45:
        return 0;
    case logic_id::kd45:
        return 1;
    case logic_id::s5:
        return 2;
    }
    return 0;
}

std::vector< named_scheme > build( logic_id logic )
{
    std::vector< named_scheme > out;
    for ( const auto& src : scheme_table )
        if ( strength( src.logic ) <= strength( logic ) )
            out.push_back( { src.name, parse_scheme( src.pattern ), src.logic } );
    return out;
}

} // namespace

const std::vector< named_scheme >& schemes( logic_id logic )
{
    static const std::array< std::vector< named_scheme >, 3 > all{ build( logic_id::k45 ), build( logic_id::kd45 ),
                                                                  build( logic_id::s5 ) };
    return all[ static_cast< std::size_t >( strength( logic ) ) ];
}

const named_scheme& scheme_by_name( std::string_view name )
{
    for ( const auto& s : schemes( logic_id::s5 ) )
        if ( s.name == name )
            return s;
    throw error{ "unknown scheme '" + std::string{ name } + "'" };
}

std::vector< std::pair< std::string, formula > > corpus( logic_id logic )
{
    const substitution at_atoms{ { "X", formula::var( "p" ) }, { "Y", formula::var( "q" ) } };
    std::vector< std::pair< std::string, formula > > out;
    for ( const auto& s : schemes( logic ) )
        out.emplace_back( s.name, instantiate( s, at_atoms ) );
    return out;
}

} // namespace possimodal

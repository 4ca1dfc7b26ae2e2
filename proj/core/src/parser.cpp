#include "possimodal/parser.hpp"

#include "possimodal/errors.hpp"

#include <cctype>
#include <vector>

namespace possimodal
{

namespace
{

enum class token_kind
{
    ident,
    zero,
    one,
    neg,
    box,
    dia,
    conj,
    disj,
    impl,
    equiv,
    lparen,
    rparen,
    end,
};

struct token
{
    token_kind kind;
    std::string text;
    std::size_t pos;
};

bool ident_char( char c )
{
    return std::isalnum( static_cast< unsigned char >( c ) ) || c == '_';
}

std::vector< token > tokenize( std::string_view text, bool allow_meta )
{
    std::vector< token > out;
    std::size_t i = 0;
    while ( i < text.size() )
    {
        const char c = text[ i ];
        if ( std::isspace( static_cast< unsigned char >( c ) ) )
        {
            ++i;
            continue;
        }

        const auto rest = text.substr( i );
        auto push = [ & ]( token_kind k, std::size_t len ) {
            out.push_back( { k, std::string{ rest.substr( 0, len ) }, i } );
            i += len;
        };

        if ( rest.starts_with( "<->" ) )
            push( token_kind::equiv, 3 );
        else if ( rest.starts_with( "<>" ) )
            push( token_kind::dia, 2 );
        else if ( rest.starts_with( "[]" ) )
            push( token_kind::box, 2 );
        else if ( rest.starts_with( "->" ) )
            push( token_kind::impl, 2 );
        else if ( c == '~' )
            push( token_kind::neg, 1 );
        else if ( c == '&' )
            push( token_kind::conj, 1 );
        else if ( c == '|' )
            push( token_kind::disj, 1 );
        else if ( c == '(' )
            push( token_kind::lparen, 1 );
        else if ( c == ')' )
            push( token_kind::rparen, 1 );
        else if ( c == '0' || c == '1' )
        {
            if ( i + 1 < text.size() && ident_char( text[ i + 1 ] ) )
                throw parse_error{ "malformed constant", i };
            push( c == '0' ? token_kind::zero : token_kind::one, 1 );
        }
        else if ( std::islower( static_cast< unsigned char >( c ) ) ||
                  ( allow_meta && std::isupper( static_cast< unsigned char >( c ) ) ) )
        {
            std::size_t len = 1;
            while ( len < rest.size() && ident_char( rest[ len ] ) )
                ++len;
            if ( rest.substr( 0, len ) == "top" )
                push( token_kind::one, len );
            else
                push( token_kind::ident, len );
        }
        else
        {
            throw parse_error{ std::string{ "unexpected character '" } + c + "'", i };
        }
    }
    out.push_back( { token_kind::end, {}, text.size() } );
    return out;
}

class parser
{
    std::vector< token > _tokens;
    std::size_t _next = 0;

    const token& peek() const { return _tokens[ _next ]; }

    bool accept( token_kind k )
    {
        if ( peek().kind != k )
            return false;
        ++_next;
        return true;
    }

    [[noreturn]] void fail( const std::string& what ) const
    {
        const auto& t = peek();
        if ( t.kind == token_kind::end )
            throw parse_error{ what + ", found end of input", t.pos };
        throw parse_error{ what + ", found '" + t.text + "'", t.pos };
    }

    // equiv := impl ( '<->' impl )*
    formula parse_equiv()
    {
        formula lhs = parse_impl();
        while ( accept( token_kind::equiv ) )
            lhs = formula::equiv( lhs, parse_impl() );
        return lhs;
    }

    // impl := disj ( '->' impl )?
    formula parse_impl()
    {
        formula lhs = parse_disj();
        if ( accept( token_kind::impl ) )
            return formula::impl( lhs, parse_impl() );
        return lhs;
    }

    formula parse_disj()
    {
        formula lhs = parse_conj();
        while ( accept( token_kind::disj ) )
            lhs = formula::disj( lhs, parse_conj() );
        return lhs;
    }

    formula parse_conj()
    {
        formula lhs = parse_unary();
        while ( accept( token_kind::conj ) )
            lhs = formula::conj( lhs, parse_unary() );
        return lhs;
    }

    formula parse_unary()
    {
        if ( accept( token_kind::neg ) )
            return formula::neg( parse_unary() );
        if ( accept( token_kind::box ) )
            return formula::box( parse_unary() );
        if ( accept( token_kind::dia ) )
            return formula::dia( parse_unary() );
        return parse_atom();
    }

    formula parse_atom()
    {
        const token& t = peek();
        switch ( t.kind )
        {
        case token_kind::ident:
            ++_next;
            return formula::var( t.text );
        case token_kind::zero:
            ++_next;
            return formula::bot();
        case token_kind::one:
            ++_next;
            return formula::top();
        case token_kind::lparen:
        {
            ++_next;
            formula inner = parse_equiv();
            if ( !accept( token_kind::rparen ) )
                fail( "expected ')'" );
            return inner;
        }
        default:
            fail( "expected a formula" );
        }
    }

public:
    explicit parser( std::vector< token > tokens ) : _tokens{ std::move( tokens ) } {}

    formula run()
    {
        formula f = parse_equiv();
        if ( peek().kind != token_kind::end )
            fail( "expected end of input" );
        return f;
    }
};

// Binding strength of the top-level connective as rendered.
enum class level
{
    impl = 0,
    conj = 1,
    unary = 2,
};

level level_of( const formula& f )
{
    switch ( f.kind() )
    {
    case connective::impl:
        return level::impl;
    case connective::conj:
        return level::conj;
    default:
        return level::unary;
    }
}

void render_into( const formula& f, std::string& out );

void render_operand( const formula& f, level min_level, std::string& out )
{
    if ( level_of( f ) < min_level )
    {
        out += '(';
        render_into( f, out );
        out += ')';
    }
    else
    {
        render_into( f, out );
    }
}

void render_into( const formula& f, std::string& out )
{
    switch ( f.kind() )
    {
    case connective::bot:
        out += '0';
        break;
    case connective::var:
        out += f.name();
        break;
    case connective::conj:
        render_operand( f.left(), level::conj, out );
        out += " & ";
        render_operand( f.right(), level::unary, out ); // '&' associates to the left
        break;
    case connective::impl:
        render_operand( f.left(), level::conj, out );
        out += " -> ";
        render_operand( f.right(), level::impl, out );
        break;
    case connective::box:
        out += "[]";
        render_operand( f.body(), level::unary, out );
        break;
    case connective::dia:
        out += "<>";
        render_operand( f.body(), level::unary, out );
        break;
    }
}

} // namespace

formula parse( std::string_view text ) { return parser{ tokenize( text, false ) }.run(); }

formula parse_scheme( std::string_view text ) { return parser{ tokenize( text, true ) }.run(); }

std::string render( const formula& f )
{
    std::string out;
    render_into( f, out );
    return out;
}

bool is_metavariable( std::string_view name )
{
    return !name.empty() && std::isupper( static_cast< unsigned char >( name.front() ) );
}

} // namespace possimodal

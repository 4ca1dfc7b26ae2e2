#include "possimodal/fragment.hpp"

#include "possimodal/errors.hpp"
#include "possimodal/parser.hpp"

#include <algorithm>

namespace possimodal
{

void fragment::add_closure( const formula& f )
{
    if ( _index.contains( f ) )
        return;
    switch ( f.kind() )
    {
    case connective::bot:
    case connective::var:
        break;
    case connective::conj:
    case connective::impl:
        add_closure( f.left() );
        add_closure( f.right() );
        break;
    case connective::box:
    case connective::dia:
        add_closure( f.body() );
        break;
    }
    _index.emplace( f, _members.size() );
    _members.push_back( f );
}

fragment fragment::of( const formula& f ) { return of( std::span< const formula >{ &f, 1 } ); }

fragment fragment::of( std::span< const formula > roots )
{
    fragment out;
    out.add_closure( formula::bot() );
    for ( const auto& f : roots )
        out.add_closure( f );
    return out;
}

fragment fragment::from_members( std::span< const formula > members )
{
    std::unordered_map< formula, std::size_t > given;
    for ( const auto& f : members )
        given.emplace( f, given.size() );

    if ( !given.contains( formula::bot() ) )
        throw non_closed_fragment{ "fragment does not contain 0" };
    for ( const auto& f : members )
    {
        auto require = [ & ]( const formula& sub ) {
            if ( !given.contains( sub ) )
                throw non_closed_fragment{ "fragment contains '" + render( f ) + "' but not its subformula '" +
                                           render( sub ) + "'" };
        };
        if ( f.is_binary() )
        {
            require( f.left() );
            require( f.right() );
        }
        else if ( f.is_modal() )
        {
            require( f.body() );
        }
    }
    return of( members );
}

std::optional< std::size_t > fragment::index_of( const formula& f ) const
{
    auto it = _index.find( f );
    if ( it == _index.end() )
        return std::nullopt;
    return it->second;
}

std::size_t fragment::modal_count() const
{
    return static_cast< std::size_t >(
        std::count_if( _members.begin(), _members.end(), []( const formula& f ) { return f.is_modal(); } ) );
}

std::size_t complexity_ell( const formula& f ) { return subformulas( f ).size(); }

} // namespace possimodal

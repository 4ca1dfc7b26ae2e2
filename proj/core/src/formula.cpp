#include "possimodal/formula.hpp"

#include <algorithm>
#include <cassert>

namespace possimodal
{

struct formula::node
{
    connective kind;
    std::string name;
    formula left;
    formula right;
    std::size_t hash;
    std::size_t size;
    std::size_t depth;
};

namespace
{

std::size_t mix( std::size_t seed, std::size_t value )
{
    return seed ^ ( value + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 ) );
}

} // namespace

formula::formula() : formula{ bot() } {}

formula formula::bot()
{
    static const formula instance{ std::shared_ptr< const node >{
        new node{ connective::bot, {}, formula{ nullptr }, formula{ nullptr }, 0x5bd1e995, 1, 1 } } };
    return instance;
}

formula formula::var( std::string name )
{
    const auto h = mix( static_cast< std::size_t >( connective::var ), std::hash< std::string >{}( name ) );
    return formula{ std::make_shared< const node >(
        node{ connective::var, std::move( name ), formula{ nullptr }, formula{ nullptr }, h, 1, 1 } ) };
}


formula formula::conj( formula left, formula right )
{
    const auto h = mix( mix( static_cast< std::size_t >( connective::conj ), left.hash() ), right.hash() );
    const auto size = left.node_count() + right.node_count() + 1;
    const auto depth = std::max( left.depth(), right.depth() ) + 1;
    return formula{ std::make_shared< const node >(
        node{ connective::conj, {}, std::move( left ), std::move( right ), h, size, depth } ) };
}

formula formula::impl( formula left, formula right )
{
    const auto h = mix( mix( static_cast< std::size_t >( connective::impl ), left.hash() ), right.hash() );
    const auto size = left.node_count() + right.node_count() + 1;
    const auto depth = std::max( left.depth(), right.depth() ) + 1;
    return formula{ std::make_shared< const node >(
        node{ connective::impl, {}, std::move( left ), std::move( right ), h, size, depth } ) };
}

formula formula::box( formula body )
{
    const auto h = mix( static_cast< std::size_t >( connective::box ), body.hash() );
    const auto size = body.node_count() + 1;
    const auto depth = body.depth() + 1;
    return formula{ std::make_shared< const node >(
        node{ connective::box, {}, std::move( body ), formula{ nullptr }, h, size, depth } ) };
}

formula formula::dia( formula body )
{
    const auto h = mix( static_cast< std::size_t >( connective::dia ), body.hash() );
    const auto size = body.node_count() + 1;
    const auto depth = body.depth() + 1;
    return formula{ std::make_shared< const node >(
        node{ connective::dia, {}, std::move( body ), formula{ nullptr }, h, size, depth } ) };
}

formula formula::top() { return impl( bot(), bot() ); }

formula formula::neg( formula f ) { return impl( std::move( f ), bot() ); }

// φ ∨ ψ := ((φ → ψ) → ψ) ∧ ((ψ → φ) → φ)
formula formula::disj( formula left, formula right )
{
    auto l = impl( impl( left, right ), right );
    auto r = impl( impl( right, left ), left );
    return conj( std::move( l ), std::move( r ) );
}

// φ ≡ ψ := (φ → ψ) ∧ (ψ → φ)
formula formula::equiv( formula left, formula right )
{
    auto l = impl( left, right );
    auto r = impl( right, left );
    return conj( std::move( l ), std::move( r ) );
}

connective formula::kind() const { return _node->kind; }

const std::string& formula::name() const
{
    assert( kind() == connective::var );
    return _node->name;
}

const formula& formula::left() const
{
    assert( _node->left._node );
    return _node->left;
}

const formula& formula::right() const
{
    assert( is_binary() );
    return _node->right;
}

const formula& formula::body() const
{
    assert( is_modal() );
    return _node->left;
}

std::size_t formula::hash() const { return _node->hash; }
std::size_t formula::node_count() const { return _node->size; }
std::size_t formula::depth() const { return _node->depth; }

std::set< std::string > formula::variables() const
{
    std::set< std::string > out;
    std::vector< const formula* > stack{ this };
    while ( !stack.empty() )
    {
        const formula* f = stack.back();
        stack.pop_back();
        switch ( f->kind() )
        {
        case connective::bot:
            break;
        case connective::var:
            out.insert( f->name() );
            break;
        case connective::conj:
        case connective::impl:
            stack.push_back( &f->left() );
            stack.push_back( &f->right() );
            break;
        case connective::box:
        case connective::dia:
            stack.push_back( &f->body() );
            break;
        }
    }
    return out;
}

bool operator==( const formula& a, const formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( a.hash() != b.hash() || a.kind() != b.kind() || a.node_count() != b.node_count() )
        return false;
    switch ( a.kind() )
    {
    case connective::bot:
        return true;
    case connective::var:
        return a.name() == b.name();
    case connective::conj:
    case connective::impl:
        return a.left() == b.left() && a.right() == b.right();
    case connective::box:
    case connective::dia:
        return a.body() == b.body();
    }
    return false;
}

std::strong_ordering operator<=>( const formula& a, const formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = a.node_count() <=> b.node_count(); c != 0 )
        return c;
    if ( auto c = a.kind() <=> b.kind(); c != 0 )
        return c;
    switch ( a.kind() )
    {
    case connective::bot:
        return std::strong_ordering::equal;
    case connective::var:
        return a.name() <=> b.name();
    case connective::conj:
    case connective::impl:
        if ( auto c = a.left() <=> b.left(); c != 0 )
            return c;
        return a.right() <=> b.right();
    case connective::box:
    case connective::dia:
        return a.body() <=> b.body();
    }
    return std::strong_ordering::equal;
}

} // namespace possimodal

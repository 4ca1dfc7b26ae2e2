#include "possimodal/truth_set.hpp"

#include "possimodal/errors.hpp"

#include <algorithm>

namespace possimodal
{

truth_set::truth_set() : _values{ truth_value::zero(), truth_value::one() } {}

truth_set::truth_set( std::vector< truth_value > values ) : _values{ std::move( values ) }
{
    _values.push_back( truth_value::zero() );
    _values.push_back( truth_value::one() );
    std::sort( _values.begin(), _values.end() );
    _values.erase( std::unique( _values.begin(), _values.end() ), _values.end() );
}

bool truth_set::contains( const truth_value& v ) const { return std::binary_search( _values.begin(), _values.end(), v ); }

const truth_value& truth_set::round_down( const truth_value& v ) const
{
    // first element > v, then step back; 0 ∈ T keeps this in range
    auto it = std::upper_bound( _values.begin(), _values.end(), v );
    return *std::prev( it );
}

const truth_value& truth_set::round_up( const truth_value& v ) const
{
    return *std::lower_bound( _values.begin(), _values.end(), v );
}

truth_set canonical_grid( std::size_t k )
{
    if ( k == 0 )
        throw model_error{ "grid size must be positive" };
    std::vector< truth_value > values;
    values.reserve( k + 1 );
    for ( std::size_t i = 0; i <= k; ++i )
        values.emplace_back( static_cast< long >( i ), static_cast< unsigned long >( k ) );
    return truth_set{ std::move( values ) };
}

order_embedding::order_embedding()
    : _breakpoints{ { truth_value::zero(), truth_value::zero() }, { truth_value::one(), truth_value::one() } }
{
}

order_embedding::order_embedding( std::vector< std::pair< truth_value, truth_value > > breakpoints )
    : _breakpoints{ std::move( breakpoints ) }
{
    std::sort( _breakpoints.begin(), _breakpoints.end() );
    if ( _breakpoints.empty() || !_breakpoints.front().first.is_zero() )
        _breakpoints.insert( _breakpoints.begin(), { truth_value::zero(), truth_value::zero() } );
    if ( !_breakpoints.back().first.is_one() )
        _breakpoints.emplace_back( truth_value::one(), truth_value::one() );

    if ( !_breakpoints.front().second.is_zero() || !_breakpoints.back().second.is_one() )
        throw model_error{ "order embedding must map 0 to 0 and 1 to 1" };
    for ( std::size_t i = 1; i < _breakpoints.size(); ++i )
    {
        if ( !( _breakpoints[ i - 1 ].first < _breakpoints[ i ].first ) ||
             !( _breakpoints[ i - 1 ].second < _breakpoints[ i ].second ) )
            throw model_error{ "order embedding breakpoints must be strictly increasing" };
    }
}

truth_value order_embedding::operator()( const truth_value& v ) const
{
    auto hi = std::lower_bound( _breakpoints.begin(), _breakpoints.end(), v,
                                []( const auto& bp, const truth_value& x ) { return bp.first < x; } );
    if ( hi->first == v )
        return hi->second;
    auto lo = std::prev( hi );

    const mpq_class& x0 = lo->first.rational();
    const mpq_class& y0 = lo->second.rational();
    const mpq_class& x1 = hi->first.rational();
    const mpq_class& y1 = hi->second.rational();
    mpq_class out = y0 + ( v.rational() - x0 ) * ( y1 - y0 ) / ( x1 - x0 );
    return truth_value{ std::move( out ) };
}

bool order_embedding::fixes( const truth_set& t ) const
{
    return std::all_of( t.values().begin(), t.values().end(), [ this ]( const truth_value& v ) { return ( *this )( v ) == v; } );
}

} // namespace possimodal

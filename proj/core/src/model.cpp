#include "possimodal/model.hpp"

#include "possimodal/errors.hpp"

#include <algorithm>
#include <set>

namespace possimodal
{

world_set::world_set( std::vector< world_id > worlds, std::vector< world_valuation > valuation )
    : _worlds{ std::move( worlds ) }, _valuation{ std::move( valuation ) }
{
    if ( _worlds.empty() )
        throw model_error{ "a model needs at least one world" };
    if ( _valuation.size() != _worlds.size() )
        throw model_error{ "valuation must list every world" };
    std::set< std::string_view > seen;
    for ( const auto& w : _worlds )
        if ( !seen.insert( w ).second )
            throw model_error{ "duplicate world '" + w + "'" };
}

std::size_t world_set::index_of( std::string_view world ) const
{
    auto it = std::find( _worlds.begin(), _worlds.end(), world );
    if ( it == _worlds.end() )
        throw unknown_world{ std::string{ world } };
    return static_cast< std::size_t >( it - _worlds.begin() );
}

truth_value world_set::value( std::size_t w, const std::string& var ) const
{
    const auto& row = _valuation.at( w );
    auto it = row.find( var );
    return it == row.end() ? truth_value::zero() : it->second;
}

pig_model::pig_model( std::vector< world_id > worlds, std::vector< truth_value > pi,
                      std::vector< world_valuation > valuation )
    : pig_model{ world_set{ std::move( worlds ), std::move( valuation ) }, std::move( pi ) }
{
}

pig_model::pig_model( world_set worlds, std::vector< truth_value > pi )
    : _worlds{ std::move( worlds ) }, _pi{ std::move( pi ) }
{
    if ( _pi.size() != _worlds.size() )
        throw model_error{ "possibility distribution must cover every world" };
}

relational_model::relational_model( world_set worlds, std::vector< std::vector< truth_value > > access )
    : _worlds{ std::move( worlds ) }, _access{ std::move( access ) }
{
    if ( _access.size() != _worlds.size() ||
         std::any_of( _access.begin(), _access.end(), [ & ]( const auto& row ) { return row.size() != _worlds.size(); } ) )
        throw model_error{ "accessibility relation must be total on world pairs" };
}

const truth_value& max_pi( const pig_model& m ) { return *std::max_element( m.pi().begin(), m.pi().end() ); }

truth_value inconsistency_degree( const pig_model& m ) { return truth_value{ 1 - max_pi( m ).rational() }; }

world_id default_world_name( std::size_t index )
{
    if ( index < 26 )
        return std::string( 1, static_cast< char >( 'a' + index ) );
    return "w" + std::to_string( index );
}

} // namespace possimodal

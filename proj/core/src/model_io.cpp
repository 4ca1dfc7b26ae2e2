#include "possimodal/model_io.hpp"

#include "possimodal/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace possimodal
{

namespace
{

using json = nlohmann::ordered_json;

truth_value read_value( const json& j, const std::string& where )
{
    if ( !j.is_string() )
        throw model_error{ where + ": truth values must be strings such as \"1/2\"" };
    return truth_value::parse( j.get< std::string >() );
}

const json& require( const json& doc, const char* key )
{
    auto it = doc.find( key );
    if ( it == doc.end() )
        throw model_error{ std::string{ "model is missing \"" } + key + "\"" };
    return *it;
}

world_set read_worlds( const json& doc )
{
    const json& worlds = require( doc, "worlds" );
    if ( !worlds.is_array() )
        throw model_error{ "\"worlds\" must be an array of world names" };

    std::vector< world_id > ids;
    for ( const auto& w : worlds )
    {
        if ( !w.is_string() )
            throw model_error{ "world names must be strings" };
        ids.push_back( w.get< std::string >() );
    }

    std::vector< world_valuation > valuation( ids.size() );
    if ( auto it = doc.find( "valuation" ); it != doc.end() )
    {
        if ( !it->is_object() )
            throw model_error{ "\"valuation\" must be an object" };
        for ( const auto& [ world, row ] : it->items() )
        {
            auto pos = std::find( ids.begin(), ids.end(), world );
            if ( pos == ids.end() )
                throw model_error{ "valuation mentions unknown world '" + world + "'" };
            if ( !row.is_object() )
                throw model_error{ "valuation of '" + world + "' must be an object" };
            auto& out = valuation[ static_cast< std::size_t >( pos - ids.begin() ) ];
            for ( const auto& [ var, v ] : row.items() )
                out.insert_or_assign( var, read_value( v, "valuation of '" + world + "'" ) );
        }
    }
    return world_set{ std::move( ids ), std::move( valuation ) };
}

std::vector< truth_value > read_pi( const json& doc, const world_set& worlds )
{
    const json& pi = require( doc, "pi" );
    if ( !pi.is_object() )
        throw model_error{ "\"pi\" must be an object" };
    std::vector< truth_value > out( worlds.size() );
    std::vector< bool > seen( worlds.size(), false );
    for ( const auto& [ world, v ] : pi.items() )
    {
        auto pos = std::find( worlds.ids().begin(), worlds.ids().end(), world );
        if ( pos == worlds.ids().end() )
            throw model_error{ "\"pi\" mentions unknown world '" + world + "'" };
        const auto w = static_cast< std::size_t >( pos - worlds.ids().begin() );
        out[ w ] = read_value( v, "pi" );
        seen[ w ] = true;
    }
    for ( std::size_t w = 0; w < worlds.size(); ++w )
        if ( !seen[ w ] )
            throw model_error{ "\"pi\" has no value for world '" + worlds.id( w ) + "'" };
    return out;
}

std::vector< std::vector< truth_value > > read_access( const json& doc, const world_set& worlds )
{
    const json& r = require( doc, "R" );
    if ( !r.is_object() )
        throw model_error{ "\"R\" must be an object" };
    std::vector< std::vector< truth_value > > out( worlds.size(), std::vector< truth_value >( worlds.size() ) );
    for ( const auto& [ from, row ] : r.items() )
    {
        const auto v = worlds.index_of( from );
        if ( !row.is_object() )
            throw model_error{ "\"R\" row of '" + from + "' must be an object" };
        for ( const auto& [ to, value ] : row.items() )
            out[ v ][ worlds.index_of( to ) ] = read_value( value, "R" );
    }
    return out;
}


json write_valuation( const world_set& ws )
{
    json val = json::object();
    for ( std::size_t w = 0; w < ws.size(); ++w )
    {
        json row = json::object();
        for ( const auto& [ var, v ] : ws.valuation( w ) )
            row[ var ] = v.to_string();
        val[ ws.id( w ) ] = std::move( row );
    }
    return val;
}

json pig_json( const pig_model& m )
{
    json doc = json::object();
    doc[ "worlds" ] = m.worlds().ids();
    json pi = json::object();
    for ( std::size_t w = 0; w < m.size(); ++w )
        pi[ m.worlds().id( w ) ] = m.pi( w ).to_string();
    doc[ "pi" ] = std::move( pi );
    doc[ "valuation" ] = write_valuation( m.worlds() );
    return doc;
}

} // namespace

model_document parse_model( std::string_view text )
{
    json doc;
    try
    {
        doc = json::parse( text );
    }
    catch ( const json::parse_error& e )
    {
        throw model_error{ std::string{ "malformed model file: " } + e.what() };
    }
    if ( !doc.is_object() )
        throw model_error{ "model file must hold a JSON object" };

    try
    {
        world_set worlds = read_worlds( doc );
        if ( doc.contains( "R" ) )
        {
            if ( doc.contains( "pi" ) || doc.contains( "truth_set" ) )
                throw model_error{ "a relational model has \"R\" but no \"pi\" or \"truth_set\"" };
            auto access = read_access( doc, worlds );
            return relational_model{ std::move( worlds ), std::move( access ) };
        }

        auto pi = read_pi( doc, worlds );
        pig_model base{ std::move( worlds ), std::move( pi ) };
        auto ts = doc.find( "truth_set" );
        if ( ts == doc.end() )
            return base;
        if ( !ts->is_array() )
            throw model_error{ "\"truth_set\" must be an array" };
        std::vector< truth_value > values;
        for ( const auto& v : *ts )
            values.push_back( read_value( v, "truth_set" ) );
        const bool has_zero = std::any_of( values.begin(), values.end(), []( const auto& v ) { return v.is_zero(); } );
        const bool has_one = std::any_of( values.begin(), values.end(), []( const auto& v ) { return v.is_one(); } );
        if ( !has_zero || !has_one )
            throw model_error{ "\"truth_set\" must contain 0 and 1" };
        return pigf_model{ std::move( base ), truth_set{ std::move( values ) } };
    }
    catch ( const unknown_world& e )
    {
        throw model_error{ e.what() };
    }
    catch ( const json::exception& e )
    {
        throw model_error{ std::string{ "malformed model file: " } + e.what() };
    }
}

std::string to_json( const pig_model& m ) { return pig_json( m ).dump(); }

std::string to_json( const pigf_model& m )
{
    json doc = pig_json( m.base() );
    json ts = json::array();
    for ( const auto& v : m.truth().values() )
        ts.push_back( v.to_string() );
    doc[ "truth_set" ] = std::move( ts );
    return doc.dump();
}

std::string to_json( const relational_model& m )
{
    json doc = json::object();
    doc[ "worlds" ] = m.worlds().ids();
    json r = json::object();
    for ( std::size_t v = 0; v < m.size(); ++v )
    {
        json row = json::object();
        for ( std::size_t w = 0; w < m.size(); ++w )
            row[ m.worlds().id( w ) ] = m.access( v, w ).to_string();
        r[ m.worlds().id( v ) ] = std::move( row );
    }
    doc[ "R" ] = std::move( r );
    doc[ "valuation" ] = write_valuation( m.worlds() );
    return doc.dump();
}

std::string to_json( const model_document& m )
{
    return std::visit( []( const auto& model ) { return to_json( model ); }, m );
}

} // namespace possimodal

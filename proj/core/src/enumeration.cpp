#include "possimodal/enumeration.hpp"

#include "possimodal/errors.hpp"

namespace possimodal
{

namespace
{

class rank_enumerator
{
    std::size_t _n;
    std::size_t _m;
    std::size_t _nv;
    std::size_t _width;
    std::size_t _slots;
    logic_id _logic;
    int _levels;
    const rank_visitor& _visit;

    rank_model _rm;
    std::vector< int > _flat;      // slot values, world-major
    std::vector< int > _use_count; // per interior level
    int _unused = 0;

    void take( int v )
    {
        if ( v > 0 && v < _rm.top && _use_count[ static_cast< std::size_t >( v ) ]++ == 0 )
            --_unused;
    }

    void release( int v )
    {
        if ( v > 0 && v < _rm.top && --_use_count[ static_cast< std::size_t >( v ) ] == 0 )
            ++_unused;
    }

    void store( std::size_t s, int v )
    {
        _flat[ s ] = v;
        const std::size_t w = s / _width;
        const std::size_t j = s % _width;
        if ( j == 0 )
            _rm.pi[ w ] = v;
        else
            _rm.valuation[ w * _nv + j - 1 ] = v;
    }

    // Returns false once the visitor asks to stop.
    bool fill( std::size_t s, bool tied )
    {
        if ( s == _slots )
            return _unused != 0 || _visit( _rm );

        const std::size_t w = s / _width;
        const std::size_t j = s % _width;
        if ( j == 0 )
            tied = w > 0;

        int lo = tied ? _flat[ s - _width ] : 0;
        const int hi = _rm.top;
        if ( j == 0 && ( _logic == logic_id::s5 || ( _logic == logic_id::kd45 && w + 1 == _n ) ) )
            lo = _rm.top; // worlds are sorted by π, so the last one carries max π

        const auto remaining = static_cast< int >( _slots - s - 1 );
        for ( int v = lo; v <= hi; ++v )
        {
            take( v );
            if ( _unused <= remaining )
            {
                store( s, v );
                if ( !fill( s + 1, tied && v == _flat[ s - _width ] ) )
                {
                    release( v );
                    return false;
                }
            }
            release( v );
        }
        return true;
    }

    bool choose_truth( std::size_t idx, int min_level )
    {
        const std::size_t interior = _m - 2;
        if ( idx == interior )
            return fill( 0, false );
        const int last = _levels - static_cast< int >( interior - idx - 1 );
        for ( int lvl = min_level; lvl <= last; ++lvl )
        {
            _rm.truth[ idx + 1 ] = lvl;
            take( lvl );
            const bool go_on = choose_truth( idx + 1, lvl + 1 );
            release( lvl );
            if ( !go_on )
                return false;
        }
        return true;
    }

public:
    rank_enumerator( std::size_t n, std::size_t m, std::size_t nv, logic_id logic, int levels, const rank_visitor& visit )
        : _n{ n }, _m{ m }, _nv{ nv }, _width{ nv + 1 }, _slots{ n * ( nv + 1 ) }, _logic{ logic }, _levels{ levels },
          _visit{ visit }
    {
        _rm.top = levels + 1;
        _rm.n_worlds = n;
        _rm.n_vars = nv;
        _rm.truth.assign( m, 0 );
        _rm.truth.back() = _rm.top;
        _rm.pi.assign( n, 0 );
        _rm.valuation.assign( n * nv, 0 );
        _flat.assign( _slots, 0 );
        _use_count.assign( static_cast< std::size_t >( levels ) + 1, 0 );
        _unused = levels;
    }

    bool run()
    {
        if ( _levels < static_cast< int >( _m ) - 2 )
            return true;
        return choose_truth( 0, 1 );
    }
};

void check_shape( std::size_t n_worlds, std::size_t n_truth )
{
    if ( n_worlds < 1 )
        throw error{ "enumeration needs at least one world" };
    if ( n_truth < 2 )
        throw error{ "a truth set has at least two elements" };
}

} // namespace

int max_interior_levels( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic )
{
    std::size_t free_pi = n_worlds;
    if ( logic == logic_id::s5 )
        free_pi = 0;
    else if ( logic == logic_id::kd45 )
        free_pi = n_worlds - 1;
    return static_cast< int >( free_pi + n_worlds * n_vars + ( n_truth - 2 ) );
}

bool for_each_rank_model_with_levels( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic,
                                      int interior_levels, const rank_visitor& visit )
{
    check_shape( n_worlds, n_truth );
    return rank_enumerator{ n_worlds, n_truth, n_vars, logic, interior_levels, visit }.run();
}

bool for_each_rank_model( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic,
                          const rank_visitor& visit )
{
    check_shape( n_worlds, n_truth );
    const int max_levels = max_interior_levels( n_worlds, n_truth, n_vars, logic );
    for ( int levels = 0; levels <= max_levels; ++levels )
        if ( !for_each_rank_model_with_levels( n_worlds, n_truth, n_vars, logic, levels, visit ) )
            return false;
    return true;
}

std::size_t grid_size( std::size_t n_worlds, std::size_t n_vars, std::size_t n_truth )
{
    return n_worlds * ( n_vars + 1 ) + n_truth;
}

pigf_model to_model( const rank_model& rm, const std::vector< std::string >& vars, std::size_t denominator )
{
    if ( static_cast< std::size_t >( rm.top ) > denominator )
        throw error{ "grid too coarse for rank model" };
    auto value = [ & ]( int r ) {
        return r == rm.top ? truth_value::one() : truth_value{ r, static_cast< unsigned long >( denominator ) };
    };

    std::vector< world_id > ids;
    std::vector< truth_value > pi;
    std::vector< world_valuation > valuation;
    for ( std::size_t w = 0; w < rm.n_worlds; ++w )
    {
        ids.push_back( default_world_name( w ) );
        pi.push_back( value( rm.pi[ w ] ) );
        world_valuation row;
        for ( std::size_t v = 0; v < vars.size(); ++v )
            row.emplace( vars[ v ], value( rm.atom( w, v ) ) );
        valuation.push_back( std::move( row ) );
    }

    std::vector< truth_value > truth;
    for ( int r : rm.truth )
        truth.push_back( value( r ) );
    return pigf_model{ pig_model{ std::move( ids ), std::move( pi ), std::move( valuation ) },
                       truth_set{ std::move( truth ) } };
}

std::vector< pigf_model > enumerate_canonical( std::size_t n_worlds, std::size_t n_truth,
                                               const std::set< std::string >& vars, logic_id logic )
{
    const std::vector< std::string > names( vars.begin(), vars.end() );
    const std::size_t denominator = grid_size( n_worlds, names.size(), n_truth );
    std::vector< pigf_model > out;
    for_each_rank_model( n_worlds, n_truth, names.size(), logic, [ & ]( const rank_model& rm ) {
        out.push_back( to_model( rm, names, denominator ) );
        return true;
    } );
    return out;
}

std::uint64_t count_canonical( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic )
{
    std::uint64_t count = 0;
    for_each_rank_model( n_worlds, n_truth, n_vars, logic, [ & ]( const rank_model& ) {
        ++count;
        return true;
    } );
    return count;
}

} // namespace possimodal

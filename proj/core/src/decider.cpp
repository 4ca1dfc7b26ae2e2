#include "possimodal/decider.hpp"

#include "possimodal/compiled.hpp"
#include "possimodal/enumeration.hpp"
#include "possimodal/errors.hpp"
#include "possimodal/evaluator.hpp"
#include "possimodal/fragment.hpp"
#include "possimodal/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <random>

namespace possimodal
{

namespace
{

constexpr std::uint64_t default_hybrid_exhaustive_limit = 5'000'000;

// Gödel operations on integer ranks 0..top with truth-set rounding tables.
class rank_algebra
{
    const rank_model& _rm;
    std::vector< int > _down;
    std::vector< int > _up;
    bool _rounding;

public:
    rank_algebra( const rank_model& rm, bool rounding ) : _rm{ rm }, _rounding{ rounding }
    {
        if ( !rounding )
            return;
        _down.resize( static_cast< std::size_t >( rm.top ) + 1 );
        _up.resize( static_cast< std::size_t >( rm.top ) + 1 );
        std::size_t i = 0;
        for ( int r = 0; r <= rm.top; ++r )
        {
            while ( i + 1 < rm.truth.size() && rm.truth[ i + 1 ] <= r )
                ++i;
            _down[ static_cast< std::size_t >( r ) ] = rm.truth[ i ];
            _up[ static_cast< std::size_t >( r ) ] = rm.truth[ i ] == r ? r : rm.truth[ i + 1 ];
        }
    }

    int bottom() const { return 0; }
    int top() const { return _rm.top; }
    int pi( std::size_t w ) const { return _rm.pi[ w ]; }
    int atom( std::size_t w, int var ) const { return _rm.atom( w, static_cast< std::size_t >( var ) ); }
    int round_box( int v ) const { return _rounding ? _down[ static_cast< std::size_t >( v ) ] : v; }
    int round_dia( int v ) const { return _rounding ? _up[ static_cast< std::size_t >( v ) ] : v; }
};

// First world (index) at which the compiled root is below top, or -1.
int refuting_world( const compiled_formula& cf, const rank_model& rm, bool rounding, std::vector< int >& table )
{
    const rank_algebra alg{ rm, rounding };
    evaluate_table< int >( cf, rm.n_worlds, alg, table );
    const int* row = table.data() + static_cast< std::size_t >( cf.root() ) * rm.n_worlds;
    for ( std::size_t w = 0; w < rm.n_worlds; ++w )
        if ( row[ w ] < rm.top )
            return static_cast< int >( w );
    return -1;
}

refutation make_refutation( const formula& f, const compiled_formula& cf, const rank_model& rm, std::size_t denominator )
{
    pigf_model model = to_model( rm, cf.variables(), denominator );
    const auto values = eval_pigf_all( model, f );
    for ( std::size_t w = 0; w < values.size(); ++w )
        if ( !values[ w ].is_one() )
            return refutation{ model, model.worlds().id( w ), values[ w ] };
    throw std::logic_error{ "rank evaluation and exact evaluation disagree" };
}

struct level_outcome
{
    std::uint64_t count = 0; // models visited, including the hit
    std::optional< rank_model > hit;
    bool aborted = false;
};

level_outcome sweep_level( const compiled_formula& cf, std::size_t n, std::size_t m, logic_id logic, int levels,
                           std::optional< std::uint64_t > cap )
{
    level_outcome out;
    std::vector< int > table;
    for_each_rank_model_with_levels( n, m, cf.variables().size(), logic, levels, [ & ]( const rank_model& rm ) {
        if ( cap && out.count >= *cap )
        {
            out.aborted = true;
            return false;
        }
        ++out.count;
        if ( refuting_world( cf, rm, true, table ) >= 0 )
        {
            out.hit = rm;
            return false;
        }
        return true;
    } );
    return out;
}

verdict exhaustive( const formula& f, logic_id logic, const search_config& cfg, std::optional< std::uint64_t > limit )
{
    const compiled_formula cf{ f };
    const std::size_t bound = bound_for( f );
    const auto caps = filtration_caps( f );
    const std::size_t max_w = cfg.max_worlds.value_or( caps.worlds );
    const std::size_t max_t = cfg.max_truth.value_or( caps.truth );
    const std::size_t workers = std::max< std::size_t >( cfg.workers, 1 );

    std::uint64_t checked = 0;
    for ( std::size_t total = 3; total <= bound; ++total )
    {
        for ( std::size_t n = 1; n + 2 <= total; ++n )
        {
            const std::size_t m = total - n;
            if ( n > max_w || m > max_t )
                continue;

            const int max_levels = max_interior_levels( n, m, cf.variables().size(), logic );

            // Levels are swept in canonical order; with several workers each
            // level runs on its own and the least level with a hit wins.
            for ( int first = 0; first <= max_levels; first += static_cast< int >( workers ) )
            {
                const int last = std::min( max_levels, first + static_cast< int >( workers ) - 1 );
                std::optional< std::uint64_t > cap;
                if ( limit )
                    cap = *limit - std::min( *limit, checked );
                std::vector< level_outcome > outcomes;
                if ( workers == 1 )
                {
                    outcomes.push_back( sweep_level( cf, n, m, logic, first, cap ) );
                }
                else
                {
                    std::vector< std::future< level_outcome > > futures;
                    for ( int lv = first; lv <= last; ++lv )
                        futures.push_back( std::async( std::launch::async, sweep_level, std::cref( cf ), n, m, logic, lv, cap ) );
                    for ( auto& fut : futures )
                        outcomes.push_back( fut.get() );
                }

                for ( auto& o : outcomes )
                {
                    if ( limit && ( o.aborted || checked + o.count > *limit ) )
                        return unknown_result{ "exhaustive sweep stopped after " + std::to_string( *limit ) + " models", *limit };
                    checked += o.count;
                    if ( o.hit )
                        return make_refutation( f, cf, *o.hit, grid_size( n, cf.variables().size(), m ) );
                }
            }
        }
    }
    return valid_certificate{ bound, checked };
}

class sampler
{
    std::mt19937_64 _rng;

public:
    explicit sampler( std::uint64_t seed ) : _rng{ seed ^ 0x2545f4914f6cdd1dULL } {}

    // Uniform in [0, n); plain modulo keeps the stream identical across standard libraries.
    std::size_t below( std::size_t n ) { return static_cast< std::size_t >( _rng() % n ); }
};

// Samples a rank model on the grid 0..denominator.
rank_model sample_model( sampler& rng, std::size_t n, std::size_t m, std::size_t nv, logic_id logic )
{
    const int top = static_cast< int >( grid_size( n, nv, m ) );
    rank_model rm;
    rm.top = top;
    rm.n_worlds = n;
    rm.n_vars = nv;

    std::vector< int > interior;
    for ( int r = 1; r < top; ++r )
        interior.push_back( r );
    for ( std::size_t i = 0; i + 2 < m; ++i )
        std::swap( interior[ i ], interior[ i + rng.below( interior.size() - i ) ] );
    rm.truth.assign( interior.begin(), interior.begin() + static_cast< std::ptrdiff_t >( m - 2 ) );
    rm.truth.push_back( 0 );
    rm.truth.push_back( top );
    std::sort( rm.truth.begin(), rm.truth.end() );

    auto draw = [ & ]() -> int {
        switch ( rng.below( 8 ) )
        {
        case 0:
            return 0;
        case 1:
            return top;
        case 2:
        case 3:
            return rm.truth[ rng.below( rm.truth.size() ) ];
        default:
            return static_cast< int >( rng.below( static_cast< std::size_t >( top ) + 1 ) );
        }
    };

    rm.pi.resize( n );
    for ( auto& p : rm.pi )
        p = logic == logic_id::s5 ? top : draw();
    if ( logic == logic_id::kd45 )
        rm.pi[ rng.below( n ) ] = top;
    rm.valuation.resize( n * nv );
    for ( auto& v : rm.valuation )
        v = draw();
    return rm;
}

std::pair< std::size_t, std::size_t > sample_shape( sampler& rng, std::size_t max_w, std::size_t max_t, std::size_t bound )
{
    max_w = std::max< std::size_t >( 1, std::min( max_w, bound - 2 ) );
    const std::size_t n = 1 + rng.below( max_w );
    const std::size_t t_cap = std::max< std::size_t >( 2, std::min( max_t, bound - n ) );
    const std::size_t m = 2 + rng.below( t_cap - 1 );
    return { n, m };
}

} // namespace

std::string_view to_string( search_mode mode )
{
    switch ( mode )
    {
    case search_mode::exhaustive:
        return "exhaustive";
    case search_mode::random:
        return "random";
    case search_mode::hybrid:
        return "hybrid";
    }
    return "?";
}

search_mode parse_search_mode( std::string_view text )
{
    if ( text == "exhaustive" )
        return search_mode::exhaustive;
    if ( text == "random" )
        return search_mode::random;
    if ( text == "hybrid" )
        return search_mode::hybrid;
    throw error{ "unknown search mode '" + std::string{ text } + "'" };
}

std::size_t bound_for( const formula& f ) { return 2 * ( complexity_ell( f ) + 2 ); }

size_caps filtration_caps( const formula& f )
{
    const std::size_t k = subformulas( f ).modal_count();
    return { k + 1, k + 2 };
}

bool satisfies_logic( const pig_model& m, logic_id logic )
{
    switch ( logic )
    {
    case logic_id::k45:
        return true;
    case logic_id::kd45:
        return is_normalized( m );
    case logic_id::s5:
        return std::all_of( m.pi().begin(), m.pi().end(), []( const truth_value& p ) { return p.is_one(); } );
    }
    return false;
}

std::optional< refutation > random_search( const formula& f, logic_id logic, const search_config& cfg )
{
    const compiled_formula cf{ f };
    const std::size_t nv = cf.variables().size();
    const std::size_t bound = bound_for( f );
    const auto caps = filtration_caps( f );
    sampler rng{ cfg.seed };
    std::vector< int > table;

    for ( std::uint64_t i = 0; i < cfg.budget; ++i )
    {
        const auto [ n, m ] = sample_shape( rng, cfg.max_worlds.value_or( caps.worlds ), cfg.max_truth.value_or( caps.truth ), bound );
        const rank_model rm = sample_model( rng, n, m, nv, logic );
        if ( refuting_world( cf, rm, true, table ) >= 0 )
            return make_refutation( f, cf, rm, static_cast< std::size_t >( rm.top ) );
    }
    return std::nullopt;
}

std::optional< pig_refutation > random_search_pig( const formula& f, logic_id logic, const search_config& cfg )
{
    const compiled_formula cf{ f };
    const std::size_t nv = cf.variables().size();
    const auto caps = filtration_caps( f );
    const std::size_t max_w = cfg.max_worlds.value_or( caps.worlds + 2 );
    sampler rng{ cfg.seed };
    std::vector< int > table;

    for ( std::uint64_t i = 0; i < cfg.budget; ++i )
    {
        const std::size_t n = 1 + rng.below( max_w );
        const rank_model rm = sample_model( rng, n, 2, nv, logic );
        if ( refuting_world( cf, rm, false, table ) < 0 )
            continue;

        const pigf_model as_pigf = to_model( rm, cf.variables(), static_cast< std::size_t >( rm.top ) );
        const pig_model& model = as_pigf.base();
        const auto values = eval_pig_all( model, f );
        for ( std::size_t w = 0; w < values.size(); ++w )
            if ( !values[ w ].is_one() )
                return pig_refutation{ model, model.worlds().id( w ), values[ w ] };
        throw std::logic_error{ "rank evaluation and exact evaluation disagree" };
    }
    return std::nullopt;
}

verdict decide( const formula& f, logic_id logic, const search_config& cfg )
{
    switch ( cfg.mode )
    {
    case search_mode::exhaustive:
        return exhaustive( f, logic, cfg, cfg.exhaustive_limit );
    case search_mode::random:
        if ( auto r = random_search( f, logic, cfg ) )
            return *r;
        return unknown_result{ "random search sampled " + std::to_string( cfg.budget ) + " models", cfg.budget };
    case search_mode::hybrid:
        if ( auto r = random_search( f, logic, cfg ) )
            return *r;
        return exhaustive( f, logic, cfg, cfg.exhaustive_limit.value_or( default_hybrid_exhaustive_limit ) );
    }
    throw std::logic_error{ "unhandled search mode" };
}

std::string to_json( const verdict& v )
{
    using json = nlohmann::ordered_json;
    json out = json::object();
    std::visit(
        [ & ]( const auto& r ) {
            using T = std::decay_t< decltype( r ) >;
            if constexpr ( std::is_same_v< T, refutation > )
            {
                out[ "verdict" ] = "refuted";
                out[ "model" ] = json::parse( to_json( r.countermodel ) );
                out[ "world" ] = r.world;
                out[ "value" ] = r.value.to_string();
            }
            else if constexpr ( std::is_same_v< T, valid_certificate > )
            {
                out[ "verdict" ] = "valid";
                out[ "bound" ] = r.bound_used;
                out[ "models_checked" ] = r.models_checked;
            }
            else
            {
                out[ "verdict" ] = "unknown";
                out[ "budget" ] = r.budget;
            }
        },
        v );
    return out.dump();
}

} // namespace possimodal

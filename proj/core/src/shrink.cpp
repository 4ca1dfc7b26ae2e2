#include "possimodal/decider.hpp"

#include "possimodal/compiled.hpp"
#include "possimodal/errors.hpp"
#include "possimodal/evaluator.hpp"

#include <algorithm>
#include <set>

namespace possimodal
{

namespace
{

// Simplest rational (least denominator, then least numerator) in the open
// interval (lo, hi), 0 ≤ lo < hi; hi == nullopt stands for +∞.
mpq_class simplest_between( const mpq_class& lo, const std::optional< mpq_class >& hi )
{
    mpz_class whole;
    mpz_fdiv_q( whole.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t() );
    const mpq_class next{ whole + 1 };
    if ( !hi || next < *hi )
        return next;

    // lo and hi share the integer part: recurse on reciprocals of the fractional parts
    const mpq_class frac_lo = lo - mpq_class{ whole };
    const mpq_class frac_hi = *hi - mpq_class{ whole };
    std::optional< mpq_class > inv_hi;
    if ( sgn( frac_lo ) != 0 )
        inv_hi = mpq_class{ 1 / frac_lo };
    const mpq_class inv = simplest_between( mpq_class{ 1 / frac_hi }, inv_hi );
    mpq_class out = mpq_class{ whole } + 1 / inv;
    out.canonicalize();
    return out;
}

struct complexity
{
    std::size_t worlds;
    std::size_t truth;
    mpz_class denominators;
    mpz_class numerators;

    friend bool operator<( const complexity& a, const complexity& b )
    {
        if ( a.worlds != b.worlds )
            return a.worlds < b.worlds;
        if ( a.truth != b.truth )
            return a.truth < b.truth;
        if ( a.denominators != b.denominators )
            return a.denominators < b.denominators;
        return a.numerators < b.numerators;
    }
};

complexity measure( const pigf_model& m )
{
    complexity c{ m.size(), m.truth().size(), 0, 0 };
    auto add = [ & ]( const truth_value& v ) {
        c.denominators += v.rational().get_den();
        c.numerators += v.rational().get_num();
    };
    for ( std::size_t w = 0; w < m.size(); ++w )
    {
        add( m.pi( w ) );
        for ( const auto& [ var, v ] : m.worlds().valuation( w ) )
            add( v );
    }
    for ( const auto& t : m.truth().values() )
        add( t );
    return c;
}

// Mutable copy of a model used to build candidates.
struct draft
{
    std::vector< world_id > ids;
    std::vector< truth_value > pi;
    std::vector< world_valuation > valuation;
    std::vector< truth_value > truth;

    explicit draft( const pigf_model& m )
        : ids{ m.worlds().ids() }, pi{ m.pi() }, truth{ m.truth().values() }
    {
        for ( std::size_t w = 0; w < m.size(); ++w )
            valuation.push_back( m.worlds().valuation( w ) );
    }

    [[nodiscard]] pigf_model build() const
    {
        return pigf_model{ pig_model{ ids, pi, valuation }, truth_set{ truth } };
    }
};

class shrinker
{
    const formula& _f;
    logic_id _logic;
    pigf_model _current;
    world_id _world;

    // Refuting world of a candidate, preferring the current one.
    std::optional< world_id > refutes( const pigf_model& m ) const
    {
        if ( !satisfies_logic( m.base(), _logic ) )
            return std::nullopt;
        const auto values = eval_pigf_all( m, _f );
        if ( auto it = std::find( m.worlds().ids().begin(), m.worlds().ids().end(), _world ); it != m.worlds().ids().end() )
            if ( !values[ static_cast< std::size_t >( it - m.worlds().ids().begin() ) ].is_one() )
                return _world;
        for ( std::size_t w = 0; w < values.size(); ++w )
            if ( !values[ w ].is_one() )
                return m.worlds().id( w );
        return std::nullopt;
    }

    bool try_accept( const pigf_model& candidate )
    {
        if ( !( measure( candidate ) < measure( _current ) ) )
            return false;
        auto w = refutes( candidate );
        if ( !w )
            return false;
        _current = candidate;
        _world = *w;
        return true;
    }

    bool drop_world()
    {
        if ( _current.size() < 2 )
            return false;
        for ( std::size_t w = 0; w < _current.size(); ++w )
        {
            draft d{ _current };
            d.ids.erase( d.ids.begin() + static_cast< std::ptrdiff_t >( w ) );
            d.pi.erase( d.pi.begin() + static_cast< std::ptrdiff_t >( w ) );
            d.valuation.erase( d.valuation.begin() + static_cast< std::ptrdiff_t >( w ) );
            if ( try_accept( d.build() ) )
                return true;
        }
        return false;
    }

    bool coarsen_truth()
    {
        const auto& values = _current.truth().values();
        for ( std::size_t i = 1; i + 1 < values.size(); ++i )
        {
            draft d{ _current };
            d.truth.erase( d.truth.begin() + static_cast< std::ptrdiff_t >( i ) );
            if ( try_accept( d.build() ) )
                return true;
        }
        return false;
    }

    // Candidates for replacing v: 0, 1 and the simplest rational strictly
    // between v's nearest distinct neighbours among the model's values.
    std::vector< truth_value > snaps( const truth_value& v, bool allow_extremes ) const
    {
        std::set< truth_value > all{ truth_value::zero(), truth_value::one() };
        for ( std::size_t w = 0; w < _current.size(); ++w )
        {
            all.insert( _current.pi( w ) );
            for ( const auto& [ var, x ] : _current.worlds().valuation( w ) )
                all.insert( x );
        }
        all.insert( _current.truth().values().begin(), _current.truth().values().end() );

        std::vector< truth_value > out;
        if ( allow_extremes )
        {
            out.push_back( truth_value::zero() );
            out.push_back( truth_value::one() );
        }
        auto above = all.upper_bound( v );
        auto below = all.lower_bound( v );
        if ( above != all.end() && below != all.begin() )
        {
            --below;
            out.emplace_back( simplest_between( below->rational(), above->rational() ) );
        }
        return out;
    }

    bool snap_values()
    {
        for ( std::size_t w = 0; w < _current.size(); ++w )
        {
            for ( const auto& cand : snaps( _current.pi( w ), true ) )
            {
                draft d{ _current };
                d.pi[ w ] = cand;
                if ( try_accept( d.build() ) )
                    return true;
            }
            for ( const auto& [ var, v ] : _current.worlds().valuation( w ) )
            {
                for ( const auto& cand : snaps( v, true ) )
                {
                    draft d{ _current };
                    d.valuation[ w ][ var ] = cand;
                    if ( try_accept( d.build() ) )
                        return true;
                }
            }
        }
        const auto& truth = _current.truth().values();
        for ( std::size_t i = 1; i + 1 < truth.size(); ++i )
        {
            for ( const auto& cand : snaps( truth[ i ], false ) )
            {
                draft d{ _current };
                d.truth[ i ] = cand;
                if ( try_accept( d.build() ) )
                    return true;
            }
        }
        return false;
    }

    void drop_unused_variables()
    {
        const auto used = _f.variables();
        draft d{ _current };
        bool changed = false;
        for ( auto& row : d.valuation )
            changed |= std::erase_if( row, [ & ]( const auto& kv ) { return !used.contains( kv.first ); } ) > 0;
        if ( changed )
            _current = d.build();
    }

public:
    shrinker( const formula& f, logic_id logic, pigf_model start, world_id world )
        : _f{ f }, _logic{ logic }, _current{ std::move( start ) }, _world{ std::move( world ) } {}

    shrunk_countermodel run()
    {
        drop_unused_variables();
        while ( drop_world() || coarsen_truth() || snap_values() )
        {
        }
        return { _current, _world };
    }
};

} // namespace

shrunk_countermodel shrink( const pigf_model& cm, std::string_view world, const formula& f, logic_id logic )
{
    const auto w = cm.worlds().index_of( world );
    if ( !satisfies_logic( cm.base(), logic ) )
        throw not_a_countermodel{ "model violates the constraint of " + std::string{ to_string( logic ) } };
    if ( eval_pigf_all( cm, f )[ w ].is_one() )
        throw not_a_countermodel{ "formula evaluates to 1 at world '" + std::string{ world } + "'" };
    return shrinker{ f, logic, cm, std::string{ world } }.run();
}

} // namespace possimodal

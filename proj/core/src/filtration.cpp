#include "possimodal/filtration.hpp"

#include "possimodal/compiled.hpp"
#include "possimodal/errors.hpp"
#include "possimodal/evaluator.hpp"

#include <algorithm>

namespace possimodal
{

pigf_model filtrate( const pig_model& m, const fragment& sigma, std::string_view world )
{
    const std::size_t x = m.worlds().index_of( world );
    const std::size_t n = m.size();
    const compiled_formula cf{ sigma, formula::bot() };
    const auto table = eval_table( m, nullptr, cf );
    const auto& nodes = cf.nodes();
    auto value = [ & ]( int node, std::size_t w ) -> const truth_value& {
        return table[ static_cast< std::size_t >( node ) * n + w ];
    };

    std::vector< truth_value > alphas{ truth_value::zero(), truth_value::one() };
    for ( std::size_t i = 0; i < nodes.size(); ++i )
        if ( nodes[ i ].kind == connective::box || nodes[ i ].kind == connective::dia )
            alphas.push_back( value( static_cast< int >( i ), x ) );
    const truth_set t_hat{ alphas };
    const auto& levels = t_hat.values();

    std::vector< bool > keep( n, false );
    keep[ x ] = true;

    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
        const auto& nd = nodes[ i ];
        const auto& a = value( static_cast< int >( i ), x );
        const auto pos = static_cast< std::size_t >( std::lower_bound( levels.begin(), levels.end(), a ) - levels.begin() );

        if ( nd.kind == connective::box && !a.is_one() )
        {
            // some y with π(y) ⇒ e(ψ, y) below the next level
            const auto& next = levels[ pos + 1 ];
            for ( std::size_t y = 0; y < n; ++y )
            {
                if ( godel_implies( m.pi( y ), value( nd.left, y ) ) < next )
                {
                    keep[ y ] = true;
                    break;
                }
            }
        }
        else if ( nd.kind == connective::dia && !a.is_zero() )
        {
            // some y with min(π(y), e(ψ, y)) above the previous level
            const auto& prev = levels[ pos - 1 ];
            for ( std::size_t y = 0; y < n; ++y )
            {
                if ( prev < godel_and( m.pi( y ), value( nd.left, y ) ) )
                {
                    keep[ y ] = true;
                    break;
                }
            }
        }
    }

    std::vector< world_id > ids;
    std::vector< truth_value > pi;
    std::vector< world_valuation > valuation;
    for ( std::size_t w = 0; w < n; ++w )
    {
        if ( !keep[ w ] )
            continue;
        ids.push_back( m.worlds().id( w ) );
        pi.push_back( m.pi( w ) );
        valuation.push_back( m.worlds().valuation( w ) );
    }
    return pigf_model{ pig_model{ std::move( ids ), std::move( pi ), std::move( valuation ) }, t_hat };
}

pigf_model filtrate( const pig_model& m, std::span< const formula > sigma, std::string_view world )
{
    return filtrate( m, fragment::from_members( sigma ), world );
}

pigf_model transport( const pigf_model& m, const order_embedding& h )
{
    if ( !h.fixes( m.truth() ) )
        throw embedding_error{ "order embedding moves an element of the truth set" };

    std::vector< truth_value > pi;
    std::vector< world_valuation > valuation;
    for ( std::size_t w = 0; w < m.size(); ++w )
    {
        pi.push_back( h( m.pi( w ) ) );
        world_valuation row;
        for ( const auto& [ var, v ] : m.worlds().valuation( w ) )
            row.emplace( var, h( v ) );
        valuation.push_back( std::move( row ) );
    }
    return pigf_model{ pig_model{ m.worlds().ids(), std::move( pi ), std::move( valuation ) }, m.truth() };
}

} // namespace possimodal

#include "possimodal/evaluator.hpp"

#include "possimodal/errors.hpp"

#include <algorithm>
#include <set>

namespace possimodal
{

compiled_formula::compiled_formula( const formula& f ) : compiled_formula{ fragment::of( f ), f } {}

compiled_formula::compiled_formula( const fragment& sigma, const formula& root )
{
    std::set< std::string > names;
    for ( const auto& f : sigma.members() )
        if ( f.kind() == connective::var )
            names.insert( f.name() );
    _variables.assign( names.begin(), names.end() );

    auto index = [ & ]( const formula& f ) { return static_cast< int >( *sigma.index_of( f ) ); };

    _nodes.reserve( sigma.size() );
    for ( const auto& f : sigma.members() )
    {
        node n{ f.kind() };
        switch ( f.kind() )
        {
        case connective::bot:
            break;
        case connective::var:
            n.var = static_cast< int >(
                std::lower_bound( _variables.begin(), _variables.end(), f.name() ) - _variables.begin() );
            break;
        case connective::conj:
        case connective::impl:
            n.left = index( f.left() );
            n.right = index( f.right() );
            break;
        case connective::box:
        case connective::dia:
            n.left = index( f.body() );
            break;
        }
        _nodes.push_back( n );
    }

    auto r = sigma.index_of( root );
    if ( !r )
        throw non_closed_fragment{ "root formula is not a member of the fragment" };
    _root = static_cast< int >( *r );
}

namespace
{

// Values of π and the compiled variables, with optional truth-set rounding.
class rational_algebra
{
    const pig_model& _model;
    const truth_set* _truth;
    std::vector< truth_value > _atoms; // [w * n_vars + v]
    std::size_t _n_vars;
    truth_value _zero = truth_value::zero();
    truth_value _one = truth_value::one();

public:
    rational_algebra( const pig_model& m, const truth_set* truth, const compiled_formula& cf )
        : _model{ m }, _truth{ truth }, _n_vars{ cf.variables().size() }
    {
        _atoms.reserve( m.size() * _n_vars );
        for ( std::size_t w = 0; w < m.size(); ++w )
            for ( const auto& v : cf.variables() )
                _atoms.push_back( m.worlds().value( w, v ) );
    }

    const truth_value& bottom() const { return _zero; }
    const truth_value& top() const { return _one; }
    const truth_value& pi( std::size_t w ) const { return _model.pi( w ); }
    const truth_value& atom( std::size_t w, int var ) const { return _atoms[ w * _n_vars + static_cast< std::size_t >( var ) ]; }
    truth_value round_box( const truth_value& v ) const { return _truth ? _truth->round_down( v ) : v; }
    truth_value round_dia( const truth_value& v ) const { return _truth ? _truth->round_up( v ) : v; }
};

std::vector< truth_value > root_row( const std::vector< truth_value >& table, const compiled_formula& cf, std::size_t n )
{
    const auto first = table.begin() + static_cast< std::ptrdiff_t >( static_cast< std::size_t >( cf.root() ) * n );
    return { first, first + static_cast< std::ptrdiff_t >( n ) };
}

} // namespace

std::vector< truth_value > eval_table( const pig_model& m, const truth_set* truth, const compiled_formula& cf )
{
    rational_algebra alg{ m, truth, cf };
    std::vector< truth_value > table;
    evaluate_table< truth_value >( cf, m.size(), alg, table );
    return table;
}

std::vector< truth_value > eval_pig_all( const pig_model& m, const formula& f )
{
    compiled_formula cf{ f };
    return root_row( eval_table( m, nullptr, cf ), cf, m.size() );
}

truth_value eval_pig( const pig_model& m, std::string_view world, const formula& f )
{
    const auto w = m.worlds().index_of( world );
    return eval_pig_all( m, f )[ w ];
}

std::vector< truth_value > eval_pigf_all( const pigf_model& m, const formula& f )
{
    compiled_formula cf{ f };
    return root_row( eval_table( m.base(), &m.truth(), cf ), cf, m.size() );
}

truth_value eval_pigf( const pigf_model& m, std::string_view world, const formula& f )
{
    const auto w = m.worlds().index_of( world );
    return eval_pigf_all( m, f )[ w ];
}

std::vector< truth_value > eval_rel_all( const relational_model& m, const formula& f )
{
    const compiled_formula cf{ f };
    const std::size_t n = m.size();
    const auto& nodes = cf.nodes();
    std::vector< truth_value > table( nodes.size() * n );

    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
        const auto& nd = nodes[ i ];
        auto at = [ & ]( int node, std::size_t w ) -> const truth_value& {
            return table[ static_cast< std::size_t >( node ) * n + w ];
        };
        for ( std::size_t v = 0; v < n; ++v )
        {
            truth_value& out = table[ i * n + v ];
            switch ( nd.kind )
            {
            case connective::bot:
                out = truth_value::zero();
                break;
            case connective::var:
                out = m.worlds().value( v, cf.variables()[ static_cast< std::size_t >( nd.var ) ] );
                break;
            case connective::conj:
                out = godel_and( at( nd.left, v ), at( nd.right, v ) );
                break;
            case connective::impl:
                out = godel_implies( at( nd.left, v ), at( nd.right, v ) );
                break;
            case connective::box:
            {
                truth_value acc = truth_value::one();
                for ( std::size_t w = 0; w < n; ++w )
                    acc = godel_and( acc, godel_implies( m.access( v, w ), at( nd.left, w ) ) );
                out = acc;
                break;
            }
            case connective::dia:
            {
                truth_value acc = truth_value::zero();
                for ( std::size_t w = 0; w < n; ++w )
                    acc = godel_or( acc, godel_and( m.access( v, w ), at( nd.left, w ) ) );
                out = acc;
                break;
            }
            }
        }
    }

    const auto first = table.begin() + static_cast< std::ptrdiff_t >( static_cast< std::size_t >( cf.root() ) * n );
    return { first, first + static_cast< std::ptrdiff_t >( n ) };
}

truth_value eval_rel( const relational_model& m, std::string_view world, const formula& f )
{
    const auto w = m.worlds().index_of( world );
    return eval_rel_all( m, f )[ w ];
}

} // namespace possimodal

#pragma once

#include "formula.hpp"
#include "fragment.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace possimodal
{

// A fragment flattened into an array: children precede parents, shared
// subformulas appear once. Evaluators fill one row per node.
class compiled_formula
{
public:
    struct node
    {
        connective kind;
        int left = -1;  // conj/impl left operand, box/dia body
        int right = -1; // conj/impl right operand
        int var = -1;   // index into variables()
    };

private:
    std::vector< node > _nodes;
    std::vector< std::string > _variables;
    int _root = 0;

public:
    explicit compiled_formula( const formula& f );
    explicit compiled_formula( const fragment& sigma, const formula& root );

    [[nodiscard]] const std::vector< node >& nodes() const { return _nodes; }
    [[nodiscard]] const std::vector< std::string >& variables() const { return _variables; }
    [[nodiscard]] int root() const { return _root; }
};

// Evaluates every node at every world into table[node * n_worlds + w].
//
// Only order comparisons are used, so V may be any totally ordered type:
// exact rationals for the public evaluators, integer ranks for enumeration.
// The algebra supplies bottom(), top(), pi(w), atom(w, var) and the modal
// rounding hooks round_box / round_dia (identity for plain ΠG semantics).
template< class V, class Algebra >
void evaluate_table( const compiled_formula& cf, std::size_t n_worlds, const Algebra& alg, std::vector< V >& table )
{
    const auto& nodes = cf.nodes();
    table.resize( nodes.size() * n_worlds );

    for ( std::size_t i = 0; i < nodes.size(); ++i )
    {
        const auto& nd = nodes[ i ];
        V* row = table.data() + i * n_worlds;
        const V* lhs = nd.left >= 0 ? table.data() + static_cast< std::size_t >( nd.left ) * n_worlds : nullptr;
        const V* rhs = nd.right >= 0 ? table.data() + static_cast< std::size_t >( nd.right ) * n_worlds : nullptr;

        switch ( nd.kind )
        {
        case connective::bot:
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = alg.bottom();
            break;
        case connective::var:
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = alg.atom( w, nd.var );
            break;
        case connective::conj:
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = rhs[ w ] < lhs[ w ] ? rhs[ w ] : lhs[ w ];
            break;
        case connective::impl:
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = lhs[ w ] <= rhs[ w ] ? alg.top() : rhs[ w ];
            break;
        case connective::box:
        {
            // inf_w π(w) ⇒ e(w, ψ); world-independent
            V acc = alg.top();
            for ( std::size_t w = 0; w < n_worlds; ++w )
            {
                const auto& p = alg.pi( w );
                if ( !( p <= lhs[ w ] ) && lhs[ w ] < acc )
                    acc = lhs[ w ];
            }
            acc = alg.round_box( acc );
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = acc;
            break;
        }
        case connective::dia:
        {
            // sup_w min(π(w), e(w, ψ))
            V acc = alg.bottom();
            for ( std::size_t w = 0; w < n_worlds; ++w )
            {
                const auto& p = alg.pi( w );
                const auto& m = lhs[ w ] < p ? lhs[ w ] : p;
                if ( acc < m )
                    acc = m;
            }
            acc = alg.round_dia( acc );
            for ( std::size_t w = 0; w < n_worlds; ++w )
                row[ w ] = acc;
            break;
        }
        }
    }
}

} // namespace possimodal

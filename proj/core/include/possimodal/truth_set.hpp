#pragma once

#include "truth_value.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace possimodal
{

// Finite set of truth values containing 0 and 1, kept strictly increasing.
class truth_set
{
    std::vector< truth_value > _values;

public:
    truth_set(); // {0, 1}

    // Sorts and deduplicates; adds 0 and 1 if missing.
    explicit truth_set( std::vector< truth_value > values );

    [[nodiscard]] const std::vector< truth_value >& values() const { return _values; }
    [[nodiscard]] std::size_t size() const { return _values.size(); }
    [[nodiscard]] bool contains( const truth_value& v ) const;

    // Greatest member ≤ v, resp. least member ≥ v.
    [[nodiscard]] const truth_value& round_down( const truth_value& v ) const;
    [[nodiscard]] const truth_value& round_up( const truth_value& v ) const;

    friend bool operator==( const truth_set&, const truth_set& ) = default;
};

[[nodiscard]] inline const truth_value& round_down( const truth_set& t, const truth_value& v ) { return t.round_down( v ); }
[[nodiscard]] inline const truth_value& round_up( const truth_set& t, const truth_value& v ) { return t.round_up( v ); }

// {0, 1/k, 2/k, ..., 1}; k ≥ 1.
[[nodiscard]] truth_set canonical_grid( std::size_t k );

// Strictly increasing piecewise-linear self-map of [0,1] fixing 0 and 1.
class order_embedding
{
    std::vector< std::pair< truth_value, truth_value > > _breakpoints;

public:
    order_embedding(); // identity

    // Breakpoints (0,0) and (1,1) are added when absent. Throws model_error
    // unless inputs and outputs are both strictly increasing.
    explicit order_embedding( std::vector< std::pair< truth_value, truth_value > > breakpoints );

    [[nodiscard]] const std::vector< std::pair< truth_value, truth_value > >& breakpoints() const { return _breakpoints; }

    [[nodiscard]] truth_value operator()( const truth_value& v ) const;

    [[nodiscard]] bool fixes( const truth_set& t ) const;
};

[[nodiscard]] inline truth_value apply_embedding( const order_embedding& h, const truth_value& v ) { return h( v ); }

} // namespace possimodal

#pragma once

#include "truth_set.hpp"
#include "truth_value.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace possimodal
{

using world_id = std::string;
using world_valuation = std::map< std::string, truth_value >; // variable → value; absent means 0

// Worlds with their valuations; shared by every model class.
class world_set
{
    std::vector< world_id > _worlds;
    std::vector< world_valuation > _valuation;

public:
    // Throws model_error on an empty or duplicated world list or a size mismatch.
    world_set( std::vector< world_id > worlds, std::vector< world_valuation > valuation );

    [[nodiscard]] std::size_t size() const { return _worlds.size(); }
    [[nodiscard]] const std::vector< world_id >& ids() const { return _worlds; }
    [[nodiscard]] const world_id& id( std::size_t w ) const { return _worlds.at( w ); }
    [[nodiscard]] std::size_t index_of( std::string_view world ) const; // throws unknown_world

    [[nodiscard]] const world_valuation& valuation( std::size_t w ) const { return _valuation.at( w ); }
    [[nodiscard]] truth_value value( std::size_t w, const std::string& var ) const;

    friend bool operator==( const world_set&, const world_set& ) = default;
};

// Possibilistic Gödel Kripke model ⟨W, π, e⟩.
class pig_model
{
    world_set _worlds;
    std::vector< truth_value > _pi;

public:
    pig_model( std::vector< world_id > worlds, std::vector< truth_value > pi, std::vector< world_valuation > valuation );
    pig_model( world_set worlds, std::vector< truth_value > pi );

    [[nodiscard]] const world_set& worlds() const { return _worlds; }
    [[nodiscard]] std::size_t size() const { return _worlds.size(); }
    [[nodiscard]] const std::vector< truth_value >& pi() const { return _pi; }
    [[nodiscard]] const truth_value& pi( std::size_t w ) const { return _pi.at( w ); }

    friend bool operator==( const pig_model&, const pig_model& ) = default;
};

// ΠG model with a finite truth set T ⊇ {0,1} into which modal values are rounded.
class pigf_model
{
    pig_model _base;
    truth_set _truth;

public:
    pigf_model( pig_model base, truth_set truth ) : _base{ std::move( base ) }, _truth{ std::move( truth ) } {}

    [[nodiscard]] const pig_model& base() const { return _base; }
    [[nodiscard]] const truth_set& truth() const { return _truth; }
    [[nodiscard]] const world_set& worlds() const { return _base.worlds(); }
    [[nodiscard]] std::size_t size() const { return _base.size(); }
    [[nodiscard]] const std::vector< truth_value >& pi() const { return _base.pi(); }
    [[nodiscard]] const truth_value& pi( std::size_t w ) const { return _base.pi( w ); }

    friend bool operator==( const pigf_model&, const pigf_model& ) = default;
};

// Gödel-Kripke model ⟨W, R, e⟩ with [0,1]-valued accessibility.
class relational_model
{
    world_set _worlds;
    std::vector< std::vector< truth_value > > _access; // _access[v][w] = R(v, w)

public:
    relational_model( world_set worlds, std::vector< std::vector< truth_value > > access );

    [[nodiscard]] const world_set& worlds() const { return _worlds; }
    [[nodiscard]] std::size_t size() const { return _worlds.size(); }
    [[nodiscard]] const truth_value& access( std::size_t from, std::size_t to ) const { return _access.at( from ).at( to ); }

    friend bool operator==( const relational_model&, const relational_model& ) = default;
};

[[nodiscard]] const truth_value& max_pi( const pig_model& m );
[[nodiscard]] inline bool is_normalized( const pig_model& m ) { return max_pi( m ).is_one(); }

// inc(W) = 1 − max π.
[[nodiscard]] truth_value inconsistency_degree( const pig_model& m );

// "a", "b", ..., "z", then "w26", "w27", ...
[[nodiscard]] world_id default_world_name( std::size_t index );

} // namespace possimodal

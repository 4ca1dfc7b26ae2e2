#pragma once

#include "formula.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace possimodal
{

// Finite set of formulas closed under immediate subformulas and containing ⊥.
// Members are kept in a deterministic order in which every formula comes
// after its subformulas; ⊥ is always first.
class fragment
{
    std::vector< formula > _members;
    std::unordered_map< formula, std::size_t > _index;

    fragment() = default;
    void add_closure( const formula& f );

public:
    // Smallest fragment containing f.
    static fragment of( const formula& f );
    static fragment of( std::span< const formula > roots );

    // Checks closure instead of computing it; throws non_closed_fragment.
    static fragment from_members( std::span< const formula > members );

    [[nodiscard]] const std::vector< formula >& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] bool contains( const formula& f ) const { return _index.contains( f ); }
    [[nodiscard]] std::optional< std::size_t > index_of( const formula& f ) const;

    // Number of members of the form □ψ or ◇ψ.
    [[nodiscard]] std::size_t modal_count() const;
};

[[nodiscard]] inline fragment subformulas( const formula& f ) { return fragment::of( f ); }

// ℓ(φ) := |Sub(φ)|, counting ⊥.
[[nodiscard]] std::size_t complexity_ell( const formula& f );

} // namespace possimodal

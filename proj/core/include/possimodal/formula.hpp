#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>

namespace possimodal
{

enum class connective : std::uint8_t
{
    bot,
    var,
    conj,
    impl,
    box,
    dia,
};

// Immutable formula of the bimodal Gödel language over {⊥, ∧, →, □, ◇}.
// Derived connectives (⊤, ¬, ∨, ≡) only exist as builders that expand into
// primitives. Copies share structure.
class formula
{
    struct node;
    std::shared_ptr< const node > _node;

    explicit formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

public:
    formula(); // ⊥

    static formula bot();
    static formula var( std::string name );
    static formula conj( formula left, formula right );
    static formula impl( formula left, formula right );
    static formula box( formula body );
    static formula dia( formula body );

    static formula top();
    static formula neg( formula f );
    static formula disj( formula left, formula right );
    static formula equiv( formula left, formula right );

    [[nodiscard]] connective kind() const;
    [[nodiscard]] bool is_modal() const { return kind() == connective::box || kind() == connective::dia; }
    [[nodiscard]] bool is_binary() const { return kind() == connective::conj || kind() == connective::impl; }

    // Only valid for the matching kind.
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] const formula& left() const;
    [[nodiscard]] const formula& right() const;
    [[nodiscard]] const formula& body() const;

    [[nodiscard]] std::size_t hash() const;
    [[nodiscard]] std::size_t node_count() const;
    [[nodiscard]] std::size_t depth() const;

    // Names of all variables occurring in the formula.
    [[nodiscard]] std::set< std::string > variables() const;

    friend bool operator==( const formula& a, const formula& b );
    friend std::strong_ordering operator<=>( const formula& a, const formula& b );
};

} // namespace possimodal

template<>
struct std::hash< possimodal::formula >
{
    std::size_t operator()( const possimodal::formula& f ) const noexcept { return f.hash(); }
};

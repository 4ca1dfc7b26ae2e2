#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace possimodal
{

// Exact rational in [0,1].
class truth_value
{
    mpq_class _value;

public:
    truth_value() : _value{ 0 } {}
    truth_value( long numerator, unsigned long denominator );
    explicit truth_value( mpq_class value );

    static truth_value zero() { return truth_value{}; }
    static truth_value one() { return truth_value{ 1, 1 }; }

    // Accepts "n/d", "n", "0", "1". Throws model_error if malformed or
    // outside [0,1].
    static truth_value parse( std::string_view text );

    [[nodiscard]] const mpq_class& rational() const { return _value; }
    [[nodiscard]] std::string to_string() const; // "n/d" in lowest terms, "0" and "1" bare

    [[nodiscard]] bool is_zero() const { return sgn( _value ) == 0; }
    [[nodiscard]] bool is_one() const { return _value == 1; }

    friend bool operator==( const truth_value& a, const truth_value& b ) { return a._value == b._value; }
    friend std::strong_ordering operator<=>( const truth_value& a, const truth_value& b )
    {
        const int c = cmp( a._value, b._value );
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
};

// Gödel algebra operations on [0,1].
[[nodiscard]] inline const truth_value& godel_and( const truth_value& x, const truth_value& y ) { return y < x ? y : x; }
[[nodiscard]] inline const truth_value& godel_or( const truth_value& x, const truth_value& y ) { return x < y ? y : x; }
[[nodiscard]] truth_value godel_implies( const truth_value& x, const truth_value& y );
[[nodiscard]] truth_value godel_neg( const truth_value& x );

} // namespace possimodal

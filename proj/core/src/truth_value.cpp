#include "possimodal/truth_value.hpp"

#include "possimodal/errors.hpp"

#include <cctype>

namespace possimodal
{

namespace
{

void check_unit( const mpq_class& v )
{
    if ( sgn( v ) < 0 || v > 1 )
        throw model_error{ "truth value " + v.get_str() + " outside [0,1]" };
}

bool all_digits( std::string_view s )
{
    if ( s.empty() )
        return false;
    for ( char c : s )
        if ( !std::isdigit( static_cast< unsigned char >( c ) ) )
            return false;
    return true;
}

} // namespace

truth_value::truth_value( long numerator, unsigned long denominator )
{
    if ( denominator == 0 )
        throw model_error{ "zero denominator" };
    _value = mpq_class{ numerator, denominator };
    _value.canonicalize();
    check_unit( _value );
}

truth_value::truth_value( mpq_class value ) : _value{ std::move( value ) }
{
    _value.canonicalize();
    check_unit( _value );
}

truth_value truth_value::parse( std::string_view text )
{
    const auto slash = text.find( '/' );
    const auto num = text.substr( 0, slash );
    const auto den = slash == std::string_view::npos ? std::string_view{ "1" } : text.substr( slash + 1 );
    if ( !all_digits( num ) || !all_digits( den ) )
        throw model_error{ "malformed rational '" + std::string{ text } + "'" };

    mpz_class n{ std::string{ num } };
    mpz_class d{ std::string{ den } };
    if ( d == 0 )
        throw model_error{ "zero denominator in '" + std::string{ text } + "'" };
    return truth_value{ mpq_class{ n, d } };
}

std::string truth_value::to_string() const { return _value.get_str(); }

truth_value godel_implies( const truth_value& x, const truth_value& y )
{
    return x <= y ? truth_value::one() : y;
}

truth_value godel_neg( const truth_value& x ) { return x.is_zero() ? truth_value::one() : truth_value::zero(); }

} // namespace possimodal

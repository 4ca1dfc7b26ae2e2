#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace possimodal
{

// Root of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error
{
    std::size_t _position;

public:
    parse_error( const std::string& message, std::size_t position )
        : error{ message + " at position " + std::to_string( position ) }, _position{ position } {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

class unknown_world : public error
{
public:
    explicit unknown_world( const std::string& world ) : error{ "unknown world '" + world + "'" } {}
};

// Structurally invalid model, truth set, embedding or value.
class model_error : public error
{
public:
    using error::error;
};

class substitution_error : public error
{
public:
    using error::error;
};

class non_closed_fragment : public error
{
public:
    using error::error;
};

// An order embedding moved an element of the truth set.
class embedding_error : public error
{
public:
    using error::error;
};

class not_a_countermodel : public error
{
public:
    using error::error;
};

} // namespace possimodal

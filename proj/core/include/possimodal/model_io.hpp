#pragma once

#include "model.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace possimodal
{

using model_document = std::variant< pig_model, pigf_model, relational_model >;

// Model file format:
//   {"worlds": ["a","b"], "pi": {"a":"1","b":"1/2"},
//    "valuation": {"a":{"p":"1/4"},"b":{"p":"3/4"}}, "truth_set": ["0","1/2","1"]}
// "truth_set" is optional (absent: ΠG model). A relational model replaces
// "pi" by "R": {"a":{"a":"0","b":"1"}, ...}; absent R entries are 0.
// Throws model_error on malformed input.
[[nodiscard]] model_document parse_model( std::string_view text );

[[nodiscard]] std::string to_json( const pig_model& m );
[[nodiscard]] std::string to_json( const pigf_model& m );
[[nodiscard]] std::string to_json( const relational_model& m );
[[nodiscard]] std::string to_json( const model_document& m );

} // namespace possimodal

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace possimodal::cli
{

// Exit codes of the command-line tool.
enum exit_code : int
{
    ok = 0,        // valid / evaluation succeeded
    refuted = 1,   // countermodel found
    unknown = 2,   // search budget exhausted
    bad_input = 3, // usage, formula or model file error
};

// Runs one invocation. args excludes the program name. Results go to out,
// diagnostics to err; a missing formula argument (or "-") is read from in.
int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace possimodal::cli

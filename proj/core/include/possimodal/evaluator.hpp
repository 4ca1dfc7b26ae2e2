#pragma once

#include "compiled.hpp"
#include "formula.hpp"
#include "model.hpp"
#include "truth_value.hpp"

#include <string_view>
#include <vector>

namespace possimodal
{

// e(w, □φ) = inf π(w') ⇒ e(w', φ),  e(w, ◇φ) = sup min(π(w'), e(w', φ)).
[[nodiscard]] truth_value eval_pig( const pig_model& m, std::string_view world, const formula& f );
[[nodiscard]] std::vector< truth_value > eval_pig_all( const pig_model& m, const formula& f );

// As eval_pig, with □ rounded down and ◇ rounded up into the truth set.
[[nodiscard]] truth_value eval_pigf( const pigf_model& m, std::string_view world, const formula& f );
[[nodiscard]] std::vector< truth_value > eval_pigf_all( const pigf_model& m, const formula& f );

// e(v, □φ) = inf R(v,w) ⇒ e(w, φ),  e(v, ◇φ) = sup min(R(v,w), e(w, φ)).
[[nodiscard]] truth_value eval_rel( const relational_model& m, std::string_view world, const formula& f );
[[nodiscard]] std::vector< truth_value > eval_rel_all( const relational_model& m, const formula& f );

// Value of every member of a compiled fragment at every world, laid out as
// table[node * |W| + w]. With truth == nullptr the plain ΠG clauses apply.
[[nodiscard]] std::vector< truth_value > eval_table( const pig_model& m, const truth_set* truth, const compiled_formula& cf );

} // namespace possimodal

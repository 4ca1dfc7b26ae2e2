#pragma once

#include "formula.hpp"
#include "fragment.hpp"
#include "model.hpp"
#include "truth_set.hpp"

#include <span>
#include <string_view>

namespace possimodal
{

// Extracts from a ΠG model a ΠGF model over a subset of its worlds that
// agrees with it at `world` on every member of sigma. The truth set holds the
// values at `world` of the modal members of sigma, plus 0 and 1. For each
// modal member with a non-extremal value one witness world is kept: the
// first world, in stored order, that keeps the value inside its gap of the
// truth set. |W| + |T| ≤ 2|sigma| whenever sigma contains a formula other
// than ⊥ that is not modal.
[[nodiscard]] pigf_model filtrate( const pig_model& m, const fragment& sigma, std::string_view world );

// Same, validating that `sigma` is subformula-closed and contains ⊥.
[[nodiscard]] pigf_model filtrate( const pig_model& m, std::span< const formula > sigma, std::string_view world );

// Pushes π and the valuation through h. h must fix every element of the
// truth set (throws embedding_error otherwise); then every formula value
// becomes h of its old value.
[[nodiscard]] pigf_model transport( const pigf_model& m, const order_embedding& h );

} // namespace possimodal

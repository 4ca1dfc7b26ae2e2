#pragma once

#include "model.hpp"
#include "scheme.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace possimodal
{

// A ΠGF model whose values are integer ranks 0..top, with 0 and top standing
// for the truth values 0 and 1. Interior ranks 1..top-1 are all occupied, so
// the ranks encode exactly the relative order of the model's values.
struct rank_model
{
    int top = 1;
    std::size_t n_worlds = 0;
    std::size_t n_vars = 0;
    std::vector< int > truth;     // strictly increasing, starts at 0, ends at top
    std::vector< int > pi;        // per world
    std::vector< int > valuation; // valuation[w * n_vars + v]

    [[nodiscard]] int atom( std::size_t w, std::size_t v ) const { return valuation[ w * n_vars + v ]; }
};

// Realizes the ranks on canonical_grid(denominator): rank r ↦ r/denominator,
// top ↦ 1. Requires top ≤ denominator.
[[nodiscard]] pigf_model to_model( const rank_model& rm, const std::vector< std::string >& vars, std::size_t denominator );

// Grid size used for n worlds, |vars| variables and a truth set of size m:
// n·(|vars|+1) + m.
[[nodiscard]] std::size_t grid_size( std::size_t n_worlds, std::size_t n_vars, std::size_t n_truth );

// Visits one representative per isomorphism class of ΠGF models with
// exactly n_worlds worlds and n_truth truth values over n_vars variables.
// Two models are isomorphic when a renaming of worlds together with an
// order-isomorphism of [0,1] fixing 0 and 1 maps one onto the other
// (truth set included). The logic constrains π: KD45 requires max π = 1,
// S5 requires π ≡ 1.
//
// Order: number of interior levels ascending, then truth-set levels, then
// world tuples (π, valuation...) lexicographically; worlds within a model
// are sorted. The visitor returns false to stop; the function returns false
// iff it was stopped. interior_levels restricts the sweep to one level count.
using rank_visitor = std::function< bool( const rank_model& ) >;
bool for_each_rank_model( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic,
                          const rank_visitor& visit );
bool for_each_rank_model_with_levels( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars,
                                      logic_id logic, int interior_levels, const rank_visitor& visit );

// Largest interior level count that can occur for the given shape.
[[nodiscard]] int max_interior_levels( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars, logic_id logic );

// The same sweep realized as rational models on canonical_grid(grid_size(...)).
[[nodiscard]] std::vector< pigf_model > enumerate_canonical( std::size_t n_worlds, std::size_t n_truth,
                                                             const std::set< std::string >& vars, logic_id logic );

[[nodiscard]] std::uint64_t count_canonical( std::size_t n_worlds, std::size_t n_truth, std::size_t n_vars,
                                             logic_id logic );

} // namespace possimodal

#pragma once

#include "formula.hpp"
#include "model.hpp"
#include "scheme.hpp"
#include "truth_value.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace possimodal
{

enum class search_mode
{
    exhaustive,
    random,
    hybrid,
};

[[nodiscard]] std::string_view to_string( search_mode mode );
[[nodiscard]] search_mode parse_search_mode( std::string_view text );

struct search_config
{
    search_mode mode = search_mode::hybrid;
    std::uint64_t budget = 10'000; // models sampled in random mode
    std::uint64_t seed = 0;
    // Size limits of the search space; when unset, filtration_caps(f).
    std::optional< std::size_t > max_worlds;
    std::optional< std::size_t > max_truth;
    // Stop an exhaustive sweep after this many models and answer unknown.
    std::optional< std::uint64_t > exhaustive_limit;
    // Threads used by exhaustive sweeps; results do not depend on it.
    std::size_t workers = 1;
};

struct valid_certificate
{
    std::size_t bound_used = 0;
    std::uint64_t models_checked = 0;
};

struct refutation
{
    pigf_model countermodel;
    world_id world;
    truth_value value;
};

struct unknown_result
{
    std::string budget_exhausted;
    std::uint64_t budget = 0;
};

using verdict = std::variant< valid_certificate, refutation, unknown_result >;

// 2·(ℓ(φ) + 2).
[[nodiscard]] std::size_t bound_for( const formula& f );

// Size caps any countermodel can be filtrated down to: with k modal
// subformulas, at most k + 1 worlds and k + 2 truth values.
struct size_caps
{
    std::size_t worlds;
    std::size_t truth;
};
[[nodiscard]] size_caps filtration_caps( const formula& f );

[[nodiscard]] verdict decide( const formula& f, logic_id logic, const search_config& cfg );

// Seeded sampling of cfg.budget ΠGF models from the bounded space. Any result
// refutes f exactly and satisfies the logic's constraint on π.
[[nodiscard]] std::optional< refutation > random_search( const formula& f, logic_id logic, const search_config& cfg );

struct pig_refutation
{
    pig_model countermodel;
    world_id world;
    truth_value value;
};

// Same sampling over plain ΠG models (no truth-set rounding).
[[nodiscard]] std::optional< pig_refutation > random_search_pig( const formula& f, logic_id logic,
                                                                 const search_config& cfg );

// Greedy minimization of a countermodel: drops worlds, coarsens the truth set
// and snaps values to simpler rationals while f stays refuted and the logic's
// constraint holds. Throws not_a_countermodel.
struct shrunk_countermodel
{
    pigf_model model;
    world_id world;
};
[[nodiscard]] shrunk_countermodel shrink( const pigf_model& cm, std::string_view world, const formula& f,
                                          logic_id logic );

[[nodiscard]] bool satisfies_logic( const pig_model& m, logic_id logic );

// {"verdict":"refuted","model":{...},"world":"a","value":"0"} and friends.
[[nodiscard]] std::string to_json( const verdict& v );

} // namespace possimodal

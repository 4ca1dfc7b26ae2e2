#pragma once

#include "model.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace possimodal
{

struct frame_report
{
    bool transitive = true;
    bool euclidean = true;
    bool serial = true;

    // World-index triples (w, w', w'') violating
    //   transitivity: min(R(w,w'), R(w',w'')) ≤ R(w,w'')
    //   euclideanity: min(R(w,w'), R(w,w'')) ≤ R(w',w'')
    std::vector< std::array< std::size_t, 3 > > transitivity_witnesses;
    std::vector< std::array< std::size_t, 3 > > euclidean_witnesses;
    // Worlds whose outgoing accessibility never reaches 1.
    std::vector< std::size_t > seriality_witnesses;
};

[[nodiscard]] frame_report check_frame( const relational_model& m );

// R(w, w') := π(w') for every w.
[[nodiscard]] relational_model embed_pig( const pig_model& m );

} // namespace possimodal

#include "possimodal/frames.hpp"

namespace possimodal
{

frame_report check_frame( const relational_model& m )
{
    frame_report report;
    const std::size_t n = m.size();

    for ( std::size_t a = 0; a < n; ++a )
    {
        bool reaches_one = false;
        for ( std::size_t b = 0; b < n; ++b )
        {
            const auto& ab = m.access( a, b );
            reaches_one = reaches_one || ab.is_one();
            for ( std::size_t c = 0; c < n; ++c )
            {
                if ( m.access( a, c ) < godel_and( ab, m.access( b, c ) ) )
                    report.transitivity_witnesses.push_back( { a, b, c } );
                if ( m.access( b, c ) < godel_and( ab, m.access( a, c ) ) )
                    report.euclidean_witnesses.push_back( { a, b, c } );
            }
        }
        if ( !reaches_one )
            report.seriality_witnesses.push_back( a );
    }

    report.transitive = report.transitivity_witnesses.empty();
    report.euclidean = report.euclidean_witnesses.empty();
    report.serial = report.seriality_witnesses.empty();
    return report;
}

relational_model embed_pig( const pig_model& m )
{
    std::vector< std::vector< truth_value > > access( m.size(), m.pi() );
    return relational_model{ m.worlds(), std::move( access ) };
}

} // namespace possimodal

#include "support/oracles.hpp"

#include <possimodal/errors.hpp>
#include <possimodal/evaluator.hpp>
#include <possimodal/filtration.hpp>
#include <possimodal/fragment.hpp>
#include <possimodal/frames.hpp>
#include <possimodal/model_io.hpp>
#include <possimodal/parser.hpp>
#include <possimodal/scheme.hpp>

#include <gtest/gtest.h>

using namespace possimodal;

namespace
{

truth_value tv( const char* s ) { return truth_value::parse( s ); }

pig_model pig( std::string_view json ) { return std::get< pig_model >( parse_model( json ) ); }
pigf_model pigf( std::string_view json ) { return std::get< pigf_model >( parse_model( json ) ); }
relational_model rel( std::string_view json ) { return std::get< relational_model >( parse_model( json ) ); }

const char* const two_worlds = R"({"worlds":["a","b"],"pi":{"a":"1","b":"1/2"},
    "valuation":{"a":{"p":"1/4"},"b":{"p":"3/4"}}})";
const char* const m0 = R"({"worlds":["a"],"pi":{"a":"1"},"valuation":{"a":{"p":"1/2"}},"truth_set":["0","1"]})";

const std::vector< std::string > pq{ "p", "q" };

} // namespace

TEST( EvalPig, HandComputedValues )
{
    const pig_model m = pig( two_worlds );
    EXPECT_EQ( eval_pig( m, "a", parse( "[]p" ) ), tv( "1/4" ) );
    EXPECT_EQ( eval_pig( m, "a", parse( "<>p" ) ), tv( "1/2" ) );
    EXPECT_EQ( eval_pig( m, "b", parse( "0" ) ), truth_value::zero() );
    EXPECT_EQ( eval_pig( m, "a", parse( "q" ) ), truth_value::zero() );
    EXPECT_THROW( (void)eval_pig( m, "c", parse( "p" ) ), unknown_world );
}

TEST( EvalPigf, CountermodelValues )
{
    const pigf_model m = pigf( m0 );
    EXPECT_EQ( eval_pigf( m, "a", parse( "[]p" ) ), truth_value::zero() );
    EXPECT_EQ( eval_pigf( m, "a", parse( "[]~~p" ) ), truth_value::one() );
    EXPECT_EQ( eval_pigf( m, "a", parse( "~~[]p" ) ), truth_value::zero() );
    EXPECT_EQ( eval_pigf( m, "a", parse( "[]~~p -> ~~[]p" ) ), truth_value::zero() );
    // Without rounding the same formula holds.
    EXPECT_EQ( eval_pig( m.base(), "a", parse( "[]~~p -> ~~[]p" ) ), truth_value::one() );
}

TEST( EvalRel, HandComputedValues )
{
    const relational_model m = rel( R"({"worlds":["a","b"],"R":{"a":{"b":"1"}},
        "valuation":{"a":{},"b":{"p":"1/3"}}})" );
    EXPECT_EQ( eval_rel( m, "a", parse( "<>p" ) ), tv( "1/3" ) );
    EXPECT_EQ( eval_rel( m, "b", parse( "[]p" ) ), truth_value::one() );
    EXPECT_EQ( eval_rel( m, "a", parse( "top" ) ), truth_value::one() );
    EXPECT_EQ( eval_rel( m, "b", parse( "top" ) ), truth_value::one() );
}

TEST( Evaluators, AgreeWithRecursiveOracle )
{
    oracle::generator gen{ 31 };
    for ( int i = 0; i < 400; ++i )
    {
        const std::size_t n = 1 + gen.below( 4 );
        const pigf_model m = gen.pigf( n, 2 + gen.below( 3 ), pq );
        const relational_model r = gen.relational( n, pq );
        const auto truth = oracle::truth_values( m.truth() );
        const formula f = gen.formula_of_size( gen.below( 10 ), pq );
        const auto plain = eval_pig_all( m.base(), f );
        const auto rounded = eval_pigf_all( m, f );
        const auto relational = eval_rel_all( r, f );
        for ( std::size_t w = 0; w < n; ++w )
        {
            EXPECT_EQ( plain[ w ].rational(), oracle::eval_pig( m.base(), w, f ) );
            EXPECT_EQ( rounded[ w ].rational(), oracle::eval_pig( m.base(), w, f, &truth ) );
            EXPECT_EQ( relational[ w ].rational(), oracle::eval_rel( r, w, f ) );
        }
    }
}

TEST( EvalPig, ModalValuesAreWorldIndependent )
{
    oracle::generator gen{ 32 };
    for ( int i = 0; i < 300; ++i )
    {
        const pig_model m = gen.pig( 2 + gen.below( 3 ), pq );
        const formula f = gen.formula_of_size( gen.below( 8 ), pq );
        for ( const formula& g : { formula::box( f ), formula::dia( f ) } )
        {
            const auto vals = eval_pig_all( m, g );
            for ( const auto& v : vals )
                EXPECT_EQ( v, vals.front() );
        }
    }
}

TEST( EvalPig, DiamondBoundAndEmptyZone )
{
    oracle::generator gen{ 33 };
    const formula dia_top = parse( "<>top" );
    for ( int i = 0; i < 300; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 4 ), pq );
        const formula f = gen.formula_of_size( gen.below( 8 ), pq );
        const truth_value ceiling = eval_pig( m, "a", dia_top );
        EXPECT_EQ( ceiling, max_pi( m ) );
        EXPECT_LE( eval_pig( m, "a", formula::dia( f ) ), ceiling );
        for ( const formula& g : { formula::box( f ), formula::dia( f ) } )
        {
            const truth_value v = eval_pig( m, "a", g );
            EXPECT_FALSE( ceiling < v && !v.is_one() );
        }
    }
}

TEST( EvalPig, CorpusHoldsOnMatchingModels )
{
    oracle::generator gen{ 34 };
    for ( int i = 0; i < 200; ++i )
    {
        const std::size_t n = 1 + gen.below( 4 );
        pig_model any = gen.pig( n, pq );
        std::vector< truth_value > pi = any.pi();
        pi[ gen.below( n ) ] = truth_value::one();
        const pig_model normalized{ any.worlds(), pi };
        const pig_model universal{ any.worlds(), std::vector< truth_value >( n, truth_value::one() ) };
        for ( const auto& [ models, logic ] : std::vector< std::pair< const pig_model*, logic_id > >{
                  { &any, logic_id::k45 }, { &normalized, logic_id::kd45 }, { &universal, logic_id::s5 } } )
            for ( const auto& [ name, f ] : corpus( logic ) )
                for ( const auto& v : eval_pig_all( *models, f ) )
                    EXPECT_TRUE( v.is_one() ) << name;
    }
}

TEST( EvalPig, CrispModelsCollapseToClassicalK45 )
{
    oracle::generator gen{ 35 };
    for ( int i = 0; i < 300; ++i )
    {
        const std::size_t n = 1 + gen.below( 4 );
        const pig_model m = gen.crisp_normalized_pig( n, pq );
        std::vector< bool > in_e;
        std::vector< std::map< std::string, bool > > val( n );
        for ( std::size_t w = 0; w < n; ++w )
        {
            in_e.push_back( m.pi( w ).is_one() );
            for ( const auto& [ k, v ] : m.worlds().valuation( w ) )
                val[ w ][ k ] = v.is_one();
        }
        const formula f = gen.formula_of_size( gen.below( 10 ), pq );
        const auto fuzzy = eval_pig_all( m, f );
        for ( std::size_t w = 0; w < n; ++w )
            EXPECT_EQ( fuzzy[ w ].is_one(), oracle::eval_classical( in_e, val, w, f ) );
    }
}

TEST( EvalPigf, FullTruthSetMatchesPlainSemantics )
{
    oracle::generator gen{ 36 };
    for ( int i = 0; i < 200; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 3 ), pq, 6 );
        const formula f = gen.formula_of_size( gen.below( 8 ), pq );
        // Every value reachable from the model lies in the grid of the lcm.
        const pigf_model full{ m, canonical_grid( 60 ) };
        EXPECT_EQ( eval_pigf_all( full, f ), eval_pig_all( m, f ) );
    }
}

TEST( Frames, EmbeddedPossibilisticModels )
{
    const pig_model single{ { "a" }, { tv( "1/2" ) }, { {} } };
    EXPECT_EQ( embed_pig( single ).access( 0, 0 ), tv( "1/2" ) );

    oracle::generator gen{ 37 };
    for ( int i = 0; i < 300; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 4 ), pq );
        const relational_model r = embed_pig( m );
        const frame_report rep = check_frame( r );
        EXPECT_TRUE( rep.transitive );
        EXPECT_TRUE( rep.euclidean );
        EXPECT_EQ( rep.serial, is_normalized( m ) );
        const formula f = gen.formula_of_size( gen.below( 8 ), pq );
        EXPECT_EQ( eval_rel_all( r, f ), eval_pig_all( m, f ) );
    }
}

TEST( Frames, HandChecked )
{
    const frame_report full = check_frame(
        rel( R"({"worlds":["a","b"],"R":{"a":{"a":"1","b":"1"},"b":{"a":"1","b":"1"}},"valuation":{}})" ) );
    EXPECT_TRUE( full.transitive && full.euclidean && full.serial );

    const frame_report one_edge = check_frame( rel( R"({"worlds":["a","b"],"R":{"a":{"b":"1"}},"valuation":{}})" ) );
    EXPECT_FALSE( one_edge.euclidean );
    EXPECT_TRUE( one_edge.transitive );
    const std::array< std::size_t, 3 > witness{ 0, 1, 1 };
    EXPECT_NE( std::find( one_edge.euclidean_witnesses.begin(), one_edge.euclidean_witnesses.end(), witness ),
               one_edge.euclidean_witnesses.end() );
    EXPECT_FALSE( one_edge.serial );

    const frame_report empty = check_frame( rel( R"({"worlds":["a","b"],"R":{},"valuation":{}})" ) );
    EXPECT_FALSE( empty.serial );
    EXPECT_EQ( empty.seriality_witnesses, ( std::vector< std::size_t >{ 0, 1 } ) );
}

TEST( Frames, ReportsAgreeWithBruteForce )
{
    oracle::generator gen{ 38 };
    for ( int i = 0; i < 300; ++i )
    {
        const relational_model r = gen.relational( 1 + gen.below( 3 ), {}, 3 );
        const std::size_t n = r.size();
        bool trans = true;
        bool eucl = true;
        bool serial = true;
        for ( std::size_t a = 0; a < n; ++a )
        {
            bool reaches = false;
            for ( std::size_t b = 0; b < n; ++b )
            {
                reaches = reaches || r.access( a, b ).is_one();
                for ( std::size_t c = 0; c < n; ++c )
                {
                    trans = trans && std::min( r.access( a, b ), r.access( b, c ) ) <= r.access( a, c );
                    eucl = eucl && std::min( r.access( a, b ), r.access( a, c ) ) <= r.access( b, c );
                }
            }
            serial = serial && reaches;
        }
        const frame_report rep = check_frame( r );
        EXPECT_EQ( rep.transitive, trans );
        EXPECT_EQ( rep.euclidean, eucl );
        EXPECT_EQ( rep.serial, serial );
        EXPECT_EQ( rep.transitivity_witnesses.empty(), trans );
        EXPECT_EQ( rep.euclidean_witnesses.empty(), eucl );
    }
}

TEST( Model, InconsistencyAndNormalization )
{
    EXPECT_EQ( inconsistency_degree( pig_model{ { "a" }, { tv( "1" ) }, { {} } } ), truth_value::zero() );
    EXPECT_EQ( inconsistency_degree( pig_model{ { "a" }, { tv( "3/5" ) }, { {} } } ), tv( "2/5" ) );
    EXPECT_EQ( inconsistency_degree( pig_model{ { "a", "b" }, { tv( "0" ), tv( "0" ) }, { {}, {} } } ),
               truth_value::one() );
    EXPECT_TRUE( is_normalized( pig( two_worlds ) ) );
    EXPECT_FALSE( is_normalized( pig_model{ { "a" }, { tv( "1/2" ) }, { {} } } ) );
    EXPECT_TRUE( is_normalized( pig_model{ { "a", "b" }, { tv( "1" ), tv( "1" ) }, { {}, {} } } ) );
}

TEST( Model, RejectsBadShapes )
{
    EXPECT_THROW( ( pig_model{ {}, {}, {} } ), model_error );
    EXPECT_THROW( ( pig_model{ { "a", "a" }, { tv( "1" ), tv( "1" ) }, { {}, {} } } ), model_error );
    EXPECT_THROW( ( pig_model{ { "a" }, { tv( "1" ), tv( "1" ) }, { {} } } ), model_error );
}

TEST( ModelIo, RoundTripsRandomModels )
{
    oracle::generator gen{ 39 };
    for ( int i = 0; i < 100; ++i )
    {
        const pigf_model m = gen.pigf( 1 + gen.below( 4 ), 2 + gen.below( 3 ), pq );
        EXPECT_EQ( std::get< pigf_model >( parse_model( to_json( m ) ) ), m );
        EXPECT_EQ( std::get< pig_model >( parse_model( to_json( m.base() ) ) ), m.base() );
        const relational_model r = gen.relational( 1 + gen.below( 3 ), pq );
        EXPECT_EQ( std::get< relational_model >( parse_model( to_json( r ) ) ), r );
    }
}

TEST( ModelIo, RejectsMalformedFiles )
{
    for ( const char* bad : {
              "",
              "[]",
              R"({"worlds":["a"]})",
              R"({"worlds":["a"],"pi":{"a":"2"},"valuation":{}})",
              R"({"worlds":["a"],"pi":{"b":"1"},"valuation":{}})",
              R"({"worlds":["a"],"pi":{"a":"1"},"valuation":{"a":{"p":"x"}}})",
              R"({"worlds":["a"],"pi":{"a":"1"},"valuation":{},"truth_set":["1/2","1/2x"]})",
              R"({"worlds":["a"],"pi":{"a":"1"},"R":{},"valuation":{}})",
          } )
        EXPECT_THROW( (void)parse_model( bad ), model_error ) << bad;
}

TEST( Filtration, SingleWorld )
{
    const pig_model m{ { "x" }, { tv( "1/3" ) }, { { { "p", tv( "2/3" ) } } } };
    const pigf_model f = filtrate( m, subformulas( parse( "p" ) ), "x" );
    EXPECT_EQ( f.worlds().ids(), std::vector< world_id >{ "x" } );
    EXPECT_EQ( f.truth(), truth_set{} );
    EXPECT_EQ( eval_pigf( f, "x", parse( "p" ) ), tv( "2/3" ) );
}

TEST( Filtration, TwoWorldBoxExample )
{
    const pig_model m = pig( two_worlds );
    const pigf_model f = filtrate( m, subformulas( parse( "[]p" ) ), "a" );
    EXPECT_EQ( f.truth(), truth_set{ { tv( "1/4" ) } } );
    EXPECT_EQ( f.worlds().ids(), std::vector< world_id >{ "a" } );
    EXPECT_EQ( eval_pigf( f, "a", parse( "[]p" ) ), tv( "1/4" ) );
    EXPECT_EQ( eval_pig( m, "a", parse( "[]p" ) ), tv( "1/4" ) );
}

TEST( Filtration, BottomOnlyFragmentExceedsTwiceItsSize )
{
    // Σ = {⊥}: the designated world plus T̂ = {0,1} gives 3 > 2|Σ| = 2.
    const pig_model m = pig( two_worlds );
    const std::vector< formula > sigma{ formula::bot() };
    const pigf_model f = filtrate( m, sigma, "b" );
    EXPECT_EQ( f.size() + f.truth().size(), 3u );
    EXPECT_EQ( eval_pigf( f, "b", formula::bot() ), truth_value::zero() );
}

TEST( Filtration, RejectsUnclosedFragment )
{
    const std::vector< formula > sigma{ formula::bot(), parse( "[]p" ) };
    EXPECT_THROW( (void)filtrate( pig( two_worlds ), sigma, "a" ), non_closed_fragment );
    EXPECT_THROW( (void)filtrate( pig( two_worlds ), subformulas( parse( "p" ) ), "z" ), unknown_world );
}

TEST( Filtration, AgreesAndStaysSmallOnRandomModels )
{
    oracle::generator gen{ 40 };
    for ( int i = 0; i < 400; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 6 ), pq );
        const formula phi = gen.formula_with_ell( 10, pq );
        const fragment sigma = subformulas( phi );
        const std::size_t x = gen.below( m.size() );
        const pigf_model f = filtrate( m, sigma, m.worlds().id( x ) );
        EXPECT_LE( f.size() + f.truth().size(), 2 * sigma.size() );
        EXPECT_LE( f.size(), sigma.modal_count() + 1 );
        const std::size_t fx = f.worlds().index_of( m.worlds().id( x ) );
        const auto truth = oracle::truth_values( f.truth() );
        for ( const auto& g : sigma.members() )
            EXPECT_EQ( oracle::eval_pig( f.base(), fx, g, &truth ), oracle::eval_pig( m, x, g ) ) << render( g );
    }
}

TEST( Transport, IdentityAndExample )
{
    const pigf_model m = pigf( m0 );
    EXPECT_EQ( transport( m, order_embedding{} ), m );

    const order_embedding h{ { { tv( "1/2" ), tv( "3/4" ) } } };
    const pigf_model moved = transport( m, h );
    EXPECT_EQ( eval_pigf( moved, "a", parse( "p" ) ), tv( "3/4" ) );
    EXPECT_EQ( eval_pigf( moved, "a", parse( "[]p" ) ), truth_value::zero() );
}

TEST( Transport, RejectsEmbeddingMovingTruthSet )
{
    const pigf_model m = pigf( R"({"worlds":["a"],"pi":{"a":"1"},"valuation":{},"truth_set":["0","1/2","1"]})" );
    EXPECT_THROW( (void)transport( m, order_embedding{ { { tv( "1/2" ), tv( "3/4" ) } } } ), embedding_error );
}

TEST( Transport, CommutesWithEvaluation )
{
    oracle::generator gen{ 41 };
    for ( int i = 0; i < 300; ++i )
    {
        const pigf_model m = gen.pigf( 1 + gen.below( 4 ), 2 + gen.below( 3 ), pq );
        const order_embedding h = gen.embedding_fixing( m.truth() );
        const pigf_model moved = transport( m, h );
        const formula f = gen.formula_of_size( gen.below( 10 ), pq );
        const auto before = eval_pigf_all( m, f );
        const auto after = eval_pigf_all( moved, f );
        for ( std::size_t w = 0; w < m.size(); ++w )
            EXPECT_EQ( after[ w ], h( before[ w ] ) );
    }
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "../support/oracles.hpp"
#include "cli.hpp"

#include <possimodal/decider.hpp>
#include <possimodal/evaluator.hpp>
#include <possimodal/filtration.hpp>
#include <possimodal/fragment.hpp>
#include <possimodal/frames.hpp>
#include <possimodal/model_io.hpp>
#include <possimodal/parser.hpp>
#include <possimodal/scheme.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace possimodal;

namespace
{

struct outcome
{
    bool pass;
    std::string detail;
};

struct criterion
{
    int id;
    const char* title;
    double limit_seconds;
    std::function< outcome() > body;
};

const formula& dn_box()
{
    static const formula f = parse( "[]~~p -> ~~[]p" );
    return f;
}

search_config random_cfg( std::uint64_t budget, std::uint64_t seed )
{
    search_config cfg;
    cfg.mode = search_mode::random;
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

outcome m0_values()
{
    const char* json = R"({"worlds":["a"],"pi":{"a":"1"},"valuation":{"a":{"p":"1/2"}},"truth_set":["0","1"]})";
    const auto path = std::filesystem::temp_directory_path() / "possimodal_acceptance_m0.json";
    std::ofstream{ path } << json;
    const pigf_model m = std::get< pigf_model >( parse_model( json ) );

    const std::vector< std::pair< const char*, const char* > > expected{
        { "[]~~p", "1" }, { "[]p", "0" }, { "~~[]p", "0" }, { "[]~~p -> ~~[]p", "0" } };
    std::string detail;
    bool ok = true;
    for ( const auto& [ f, want ] : expected )
    {
        std::istringstream in;
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run( { "eval", "--model", path.string(), "--world", "a", f }, in, out, err );
        const truth_value lib = eval_pigf( m, "a", parse( f ) );
        const bool good = code == cli::ok && out.str() == std::string{ want } + "\n" && lib == truth_value::parse( want );
        ok = ok && good;
        detail += std::string{ f } + "=" + lib.to_string() + " ";
    }
    std::filesystem::remove( path );
    return { ok, detail };
}

outcome hybrid_refutation_and_shrink()
{
    const verdict v = decide( dn_box(), logic_id::k45, search_config{} );
    const auto* r = std::get_if< refutation >( &v );
    if ( !r )
        return { false, "hybrid search did not refute" };
    if ( !( eval_pigf( r->countermodel, r->world, dn_box() ) < truth_value::one() ) )
        return { false, "reported countermodel does not refute" };

    // Shrink the hybrid result and countermodels from several random seeds.
    std::vector< refutation > found{ *r };
    for ( std::uint64_t seed = 1; seed <= 20; ++seed )
        if ( auto more = random_search( dn_box(), logic_id::k45, random_cfg( 10'000, seed ) ) )
            found.push_back( *more );
    for ( const auto& cm : found )
    {
        const shrunk_countermodel s = shrink( cm.countermodel, cm.world, dn_box(), logic_id::k45 );
        if ( s.model.size() != 1 || s.model.truth().size() != 2 ||
             !( eval_pigf( s.model, s.world, dn_box() ) < truth_value::one() ) )
            return { false, "shrink left " + std::to_string( s.model.size() ) + " worlds, |T|=" +
                                std::to_string( s.model.truth().size() ) };
    }
    return { true, std::to_string( found.size() ) + " countermodels shrunk to |W|=1, |T|=2" };
}

outcome finite_pig_validity()
{
    const auto r = random_search_pig( dn_box(), logic_id::k45, random_cfg( 10'000, 2024 ) );
    if ( r )
        return { false, "ΠG countermodel found: " + to_json( r->countermodel ) };
    return { true, "10000 ΠG models, none refutes" };
}

outcome corpus_sweep()
{
    if ( corpus( logic_id::k45 ).size() < 20 )
        return { false, "K45 corpus has fewer than 20 schemes" };
    std::size_t checked = 0;
    for ( logic_id l : { logic_id::k45, logic_id::kd45, logic_id::s5 } )
        for ( const auto& [ name, f ] : corpus( l ) )
        {
            ++checked;
            if ( auto r = random_search( f, l, random_cfg( 10'000, 7 ) ) )
                return { false, std::string{ to_string( l ) } + " " + name + " refuted by " + to_json( r->countermodel ) };
        }
    return { true, std::to_string( checked ) + " corpus formulas survive 10000 models each" };
}

outcome axiom_d()
{
    search_config cfg;
    cfg.mode = search_mode::exhaustive;
    const formula d = parse( "<>top" );
    const verdict k = decide( d, logic_id::k45, cfg );
    const auto* r = std::get_if< refutation >( &k );
    if ( !r || r->countermodel.size() != 1 || !r->countermodel.pi( 0 ).is_zero() || !r->value.is_zero() )
        return { false, "K45 verdict " + to_json( k ) };
    const verdict kd = decide( d, logic_id::kd45, cfg );
    if ( !std::holds_alternative< valid_certificate >( kd ) )
        return { false, "KD45 verdict " + to_json( kd ) };
    return { true, "K45 refuted by pi(a)=0, KD45 valid" };
}

outcome axiom_t()
{
    search_config cfg;
    cfg.mode = search_mode::exhaustive;
    const formula t = parse( "[]p -> p" );
    const verdict kd = decide( t, logic_id::kd45, cfg );
    const auto* r = std::get_if< refutation >( &kd );
    if ( !r || !is_normalized( r->countermodel.base() ) )
        return { false, "KD45 verdict " + to_json( kd ) };
    const pig_model hand{ { "a", "b" },
                          { truth_value::one(), truth_value::zero() },
                          { { { "p", truth_value::one() } }, { { "p", truth_value::zero() } } } };
    if ( !eval_pig( hand, "b", t ).is_zero() )
        return { false, "two-world model does not refute" };
    if ( auto s5 = random_search( t, logic_id::s5, random_cfg( 10'000, 7 ) ) )
        return { false, "S5 countermodel " + to_json( s5->countermodel ) };
    return { true, "KD45 refuted with " + std::to_string( r->countermodel.size() ) + " worlds, S5 survives 10000" };
}

const std::vector< std::string > pq{ "p", "q" };

outcome filtration()
{
    oracle::generator gen{ 7007 };
    for ( int i = 0; i < 1000; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 6 ), pq );
        const formula phi = gen.formula_with_ell( 8, pq );
        const fragment sigma = subformulas( phi );
        const std::size_t x = gen.below( m.size() );
        const pigf_model f = filtrate( m, sigma, m.worlds().id( x ) );
        if ( f.size() + f.truth().size() > 2 * sigma.size() )
            return { false, "size bound broken for " + render( phi ) };
        const auto ours = eval_pigf_all( f, phi );
        const std::size_t fx = f.worlds().index_of( m.worlds().id( x ) );
        for ( const auto& g : sigma.members() )
            if ( eval_pigf( f, f.worlds().id( fx ), g ) != eval_pig( m, m.worlds().id( x ), g ) ||
                 eval_pig( m, m.worlds().id( x ), g ).rational() != oracle::eval_pig( m, x, g ) )
                return { false, "disagreement on " + render( g ) };
    }
    return { true, "1000 models: bound and agreement hold" };
}

outcome transport_property()
{
    oracle::generator gen{ 8008 };
    for ( int i = 0; i < 1000; ++i )
    {
        const pigf_model m = gen.pigf( 1 + gen.below( 5 ), 2 + gen.below( 4 ), pq );
        const order_embedding h = gen.embedding_fixing( m.truth() );
        const pigf_model moved = transport( m, h );
        const formula f = gen.formula_of_size( gen.below( 12 ), pq );
        const auto before = eval_pigf_all( m, f );
        const auto after = eval_pigf_all( moved, f );
        for ( std::size_t w = 0; w < m.size(); ++w )
            if ( after[ w ] != h( before[ w ] ) )
                return { false, "mismatch on " + render( f ) };
    }
    return { true, "1000 triples commute exactly" };
}

outcome frames()
{
    oracle::generator gen{ 9009 };
    for ( int i = 0; i < 1000; ++i )
    {
        const pig_model m = gen.pig( 1 + gen.below( 6 ), {} );
        const frame_report rep = check_frame( embed_pig( m ) );
        if ( !rep.transitive || !rep.euclidean || rep.serial != is_normalized( m ) )
            return { false, "frame property broken on " + to_json( m ) };
    }
    return { true, "1000 models: transitive, euclidean, serial iff normalized" };
}

outcome crisp_collapse()
{
    oracle::generator gen{ 1010 };
    for ( int i = 0; i < 500; ++i )
    {
        const std::size_t n = 1 + gen.below( 5 );
        const pig_model m = gen.crisp_normalized_pig( n, pq );
        const formula f = gen.formula_with_ell( 8, pq );
        std::vector< bool > in_e;
        std::vector< std::map< std::string, bool > > val( n );
        for ( std::size_t w = 0; w < n; ++w )
        {
            in_e.push_back( m.pi( w ).is_one() );
            for ( const auto& [ k, v ] : m.worlds().valuation( w ) )
                val[ w ][ k ] = v.is_one();
        }
        const auto fuzzy = eval_pig_all( m, f );
        for ( std::size_t w = 0; w < n; ++w )
        {
            const bool classical = oracle::eval_classical( in_e, val, w, f );
            if ( fuzzy[ w ] != ( classical ? truth_value::one() : truth_value::zero() ) )
                return { false, "disagreement on " + render( f ) };
        }
    }
    return { true, "500 crisp models agree with the classical evaluator" };
}

outcome grid_restriction()
{
    oracle::generator gen{ 1111 };
    int agreed = 0;
    int samples = 0;
    while ( samples < 1000 )
    {
        const bool two_vars = gen.below( 4 ) == 0;
        const std::vector< std::string > vars = two_vars ? pq : std::vector< std::string >{ "p" };
        const std::size_t n = 1 + gen.below( two_vars ? 2 : 3 );
        const std::size_t m = 2 + gen.below( 2 );
        const formula f = gen.formula_with_ell( 8, vars );
        if ( n + m > bound_for( f ) )
            continue;
        const pigf_model model = gen.pigf( n, m, vars, 20 );
        const auto vals = eval_pigf_all( model, f );
        if ( std::all_of( vals.begin(), vals.end(), []( const truth_value& v ) { return v.is_one(); } ) )
            continue;
        ++samples;
        search_config cfg;
        cfg.mode = search_mode::exhaustive;
        cfg.max_worlds = n;
        cfg.max_truth = m;
        const verdict v = decide( f, logic_id::k45, cfg );
        if ( const auto* r = std::get_if< refutation >( &v ) )
        {
            if ( r->countermodel.size() <= n && r->countermodel.truth().size() <= m &&
                 eval_pigf( r->countermodel, r->world, f ) < truth_value::one() )
                ++agreed;
        }
        else
            return { false, "decide missed the countermodel " + to_json( model ) + " for " + render( f ) };
    }
    return { agreed == samples, std::to_string( agreed ) + "/" + std::to_string( samples ) + " refutations reproduced" };
}

} // namespace

int main()
{
    const std::vector< criterion > criteria{
        { 1, "countermodel values by eval", 1, m0_values },
        { 2, "hybrid refutation and shrink", 10, hybrid_refutation_and_shrink },
        { 3, "finite possibilistic validity", 60, finite_pig_validity },
        { 4, "corpus soundness sweep", 300, corpus_sweep },
        { 5, "axiom D separation", 10, axiom_d },
        { 6, "axiom T separation", 60, axiom_t },
        { 7, "filtration size and agreement", 120, filtration },
        { 8, "transport by order embeddings", 120, transport_property },
        { 9, "frame properties of embedded models", 30, frames },
        { 10, "crisp collapse to classical K45", 60, crisp_collapse },
        { 11, "grid restriction", 300, grid_restriction },
    };

    int failures = 0;
    for ( const auto& c : criteria )
    {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try
        {
            o = c.body();
        }
        catch ( const std::exception& e )
        {
            o = { false, std::string{ "exception: " } + e.what() };
        }
        const double secs = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf( "%s criterion %2d  %-38s %8.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                     c.limit_seconds, o.detail.c_str(), in_time ? "" : "  [too slow]" );
        std::fflush( stdout );
    }
    return failures == 0 ? 0 : 1;
}

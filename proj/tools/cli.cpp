#include "cli.hpp"

#include <possimodal/decider.hpp>
#include <possimodal/errors.hpp>
#include <possimodal/evaluator.hpp>
#include <possimodal/frames.hpp>
#include <possimodal/model_io.hpp>
#include <possimodal/parser.hpp>
#include <possimodal/scheme.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace possimodal::cli
{

namespace
{

struct search_flags
{
    std::string logic = "k45";
    std::string mode = "hybrid";
    std::uint64_t budget = 10'000;
    std::uint64_t seed = 0;
    std::optional< std::size_t > max_worlds;
    std::optional< std::size_t > max_truth;
    std::string formula;
};

void add_search_flags( CLI::App& cmd, search_flags& flags )
{
    cmd.add_option( "--logic", flags.logic, "k45, kd45 or s5" )->check( CLI::IsMember( { "k45", "kd45", "s5" } ) );
    cmd.add_option( "--mode", flags.mode, "exhaustive, random or hybrid" )
        ->check( CLI::IsMember( { "exhaustive", "random", "hybrid" } ) );
    cmd.add_option( "--budget", flags.budget, "models sampled by random search" );
    cmd.add_option( "--seed", flags.seed, "random search seed" );
    cmd.add_option( "--max-worlds", flags.max_worlds, "cap on the number of worlds" );
    cmd.add_option( "--max-truth", flags.max_truth, "cap on the size of the truth set" );
    cmd.add_option( "formula", flags.formula, "formula to check ('-' or absent: read stdin)" );
}

search_config to_config( const search_flags& flags )
{
    search_config cfg;
    cfg.mode = parse_search_mode( flags.mode );
    cfg.budget = flags.budget;
    cfg.seed = flags.seed;
    cfg.max_worlds = flags.max_worlds;
    cfg.max_truth = flags.max_truth;
    return cfg;
}

formula read_formula( const std::string& arg, std::istream& in )
{
    if ( !arg.empty() && arg != "-" )
        return parse( arg );
    std::string text{ std::istreambuf_iterator< char >{ in }, std::istreambuf_iterator< char >{} };
    return parse( text );
}

model_document read_model( const std::string& path )
{
    std::ifstream file{ path };
    if ( !file )
        throw model_error{ "cannot read model file '" + path + "'" };
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_model( buffer.str() );
}

int verdict_code( const verdict& v )
{
    if ( std::holds_alternative< refutation >( v ) )
        return refuted;
    if ( std::holds_alternative< unknown_result >( v ) )
        return unknown;
    return ok;
}

int run_check( const search_flags& flags, bool minimize, std::istream& in, std::ostream& out, std::ostream& err )
{
    const formula f = read_formula( flags.formula, in );
    const logic_id logic = parse_logic( flags.logic );
    const verdict v = decide( f, logic, to_config( flags ) );

    if ( minimize )
    {
        if ( const auto* r = std::get_if< refutation >( &v ) )
        {
            const auto small = shrink( r->countermodel, r->world, f, logic );
            const auto value = eval_pigf( small.model, small.world, f );
            out << to_json( small.model ) << '\n';
            err << "refuted at world " << small.world << " with value " << value.to_string() << '\n';
            return refuted;
        }
    }
    out << to_json( v ) << '\n';
    return verdict_code( v );
}

int run_eval( const std::string& model_path, const std::optional< std::string >& world, const std::string& text,
              std::istream& in, std::ostream& out )
{
    const formula f = read_formula( text, in );
    const model_document doc = read_model( model_path );

    const auto [ ids, values ] = std::visit(
        [ & ]( const auto& m ) -> std::pair< std::vector< world_id >, std::vector< truth_value > > {
            using T = std::decay_t< decltype( m ) >;
            if constexpr ( std::is_same_v< T, pig_model > )
                return { m.worlds().ids(), eval_pig_all( m, f ) };
            else if constexpr ( std::is_same_v< T, pigf_model > )
                return { m.worlds().ids(), eval_pigf_all( m, f ) };
            else
                return { m.worlds().ids(), eval_rel_all( m, f ) };
        },
        doc );

    if ( world )
    {
        auto it = std::find( ids.begin(), ids.end(), *world );
        if ( it == ids.end() )
            throw unknown_world{ *world };
        out << values[ static_cast< std::size_t >( it - ids.begin() ) ].to_string() << '\n';
        return ok;
    }
    for ( std::size_t w = 0; w < ids.size(); ++w )
        out << ids[ w ] << '\t' << values[ w ].to_string() << '\n';
    return ok;
}

int run_corpus( const std::string& logic_name, std::uint64_t budget, std::uint64_t seed, std::ostream& out )
{
    const logic_id logic = parse_logic( logic_name );
    search_config cfg;
    cfg.mode = search_mode::random;
    cfg.budget = budget;
    cfg.seed = seed;

    int code = ok;
    for ( const auto& [ name, f ] : corpus( logic ) )
    {
        if ( auto r = random_search( f, logic, cfg ) )
        {
            out << name << "\trefuted\t" << to_json( verdict{ *r } ) << '\n';
            code = refuted;
        }
        else
        {
            out << name << "\tok\t" << render( f ) << '\n';
        }
    }
    return code;
}

int run_frame( const std::string& model_path, std::ostream& out )
{
    const model_document doc = read_model( model_path );
    const relational_model rel = std::visit(
        []( const auto& m ) -> relational_model {
            using T = std::decay_t< decltype( m ) >;
            if constexpr ( std::is_same_v< T, pig_model > )
                return embed_pig( m );
            else if constexpr ( std::is_same_v< T, pigf_model > )
                return embed_pig( m.base() );
            else
                return m;
        },
        doc );

    const frame_report report = check_frame( rel );
    const auto& ids = rel.worlds().ids();
    auto triples = [ & ]( const auto& list ) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for ( const auto& t : list )
            arr.push_back( { ids[ t[ 0 ] ], ids[ t[ 1 ] ], ids[ t[ 2 ] ] } );
        return arr;
    };

    nlohmann::ordered_json j;
    j[ "transitive" ] = report.transitive;
    j[ "euclidean" ] = report.euclidean;
    j[ "serial" ] = report.serial;
    j[ "witnesses" ][ "transitive" ] = triples( report.transitivity_witnesses );
    j[ "witnesses" ][ "euclidean" ] = triples( report.euclidean_witnesses );
    j[ "witnesses" ][ "serial" ] = nlohmann::ordered_json::array();
    for ( auto w : report.seriality_witnesses )
        j[ "witnesses" ][ "serial" ].push_back( ids[ w ] );
    out << j.dump() << '\n';
    return ok;
}

} // namespace

int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Possibilistic Gödel modal logic toolkit (K45, KD45, S5)", "possimodal" };
    app.require_subcommand( 1 );

    search_flags check_flags;
    auto* check = app.add_subcommand( "check", "decide validity of a formula" );
    add_search_flags( *check, check_flags );

    search_flags cm_flags;
    auto* countermodel = app.add_subcommand( "countermodel", "like check, but print a minimized countermodel" );
    add_search_flags( *countermodel, cm_flags );

    std::string eval_model;
    std::optional< std::string > eval_world;
    std::string eval_formula;
    auto* eval = app.add_subcommand( "eval", "evaluate a formula in a model file" );
    eval->add_option( "--model", eval_model, "model file" )->required();
    eval->add_option( "--world", eval_world, "world to evaluate at (default: all)" );
    eval->add_option( "formula", eval_formula, "formula ('-' or absent: read stdin)" );

    std::string corpus_logic = "k45";
    std::uint64_t corpus_budget = 10'000;
    std::uint64_t corpus_seed = 0;
    auto* corpus_cmd = app.add_subcommand( "corpus", "search countermodels to every axiom and listed theorem" );
    corpus_cmd->add_option( "--logic", corpus_logic, "k45, kd45 or s5" )->check( CLI::IsMember( { "k45", "kd45", "s5" } ) );
    corpus_cmd->add_option( "--budget", corpus_budget, "models sampled per formula" );
    corpus_cmd->add_option( "--seed", corpus_seed, "random search seed" );

    std::string frame_model;
    auto* frame = app.add_subcommand( "frame", "report transitivity, euclideanity and seriality of a model" );
    frame->add_option( "--model", frame_model, "model file" )->required();

    try
    {
        std::vector< const char* > argv{ "possimodal" };
        for ( const auto& a : args )
            argv.push_back( a.c_str() );
        app.parse( static_cast< int >( argv.size() ), argv.data() );
    }
    catch ( const CLI::CallForHelp& e )
    {
        app.exit( e, out, err );
        return ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }

    try
    {
        if ( *check )
            return run_check( check_flags, false, in, out, err );
        if ( *countermodel )
            return run_check( cm_flags, true, in, out, err );
        if ( *eval )
            return run_eval( eval_model, eval_world, eval_formula, in, out );
        if ( *corpus_cmd )
            return run_corpus( corpus_logic, corpus_budget, corpus_seed, out );
        if ( *frame )
            return run_frame( frame_model, out );
    }
    catch ( const possimodal::error& e )
    {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

} // namespace possimodal::cli

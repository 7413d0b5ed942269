/*
 * Copyright 2026 The geu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <sstream>

#include <geu/cli.hpp>

#include "support.hpp"

using namespace geu;
using namespace geu::testing;

namespace {

	struct Run {
		int code;
		std::string out;
		std::string err;
	};

	Run run( std::vector< std::string > args ) {
		args.insert( args.begin(), "geu" );
		std::vector< const char * > argv;
		for( const auto &a : args ) {
			argv.push_back( a.c_str() );
		}
		std::ostringstream out, err;
		const int code = run_cli( static_cast< int >( argv.size() ), argv.data(), out, err );
		return { code, out.str(), err.str() };
	}

	Error parse_failure( const std::string &text ) {
		try {
			load_problem( parse_document_text( text ) );
		} catch( const Error &e ) {
			return e;
		}
		ADD_FAILURE() << "no error for " << text;
		return Error( ErrorKind::unsupported, "none" );
	}

	const char *samples[] = { "F1.json", "F1-three-acts.json", "F2.json", "F2-min.json", "belief.json",
		"possibility.json", "cyclic.json", "reflexive-only.json" };

} // end namespace

TEST( Document, F1Fixture ) {
	const auto lp = load_sample( "F1.json" );
	EXPECT_EQ( lp.situation->n_states(), 2u );
	EXPECT_EQ( lp.situation->n_consequences(), 2u );
	EXPECT_EQ( lp.situation->n_acts(), 4u );
	ASSERT_TRUE( lp.problem );
	EXPECT_EQ( geu::geu( *lp.problem, lp.situation->act( *lp.situation->find_name( "aL" ) ).map ), rv( 3, 10 ) );
}

TEST( Document, WeightsNotSummingToOne ) {
	try {
		load_sample( "bad-weights.json" );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::validation );
		bool named = false;
		for( const auto &d : e.details() ) {
			named = named || d.find( "9/10" ) != std::string::npos;
		}
		EXPECT_TRUE( named );
	}
}

TEST( Document, UnknownStateReference ) {
	try {
		load_sample( "unknown-state.json" );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::validation );
		EXPECT_NE( std::string( e.what() ).find( "s3" ), std::string::npos );
		EXPECT_NE( std::string( e.what() ).find( "/acts/a/s3" ), std::string::npos );
	}
}

TEST( Document, ParseErrorsCarryLocations ) {
	EXPECT_EQ( parse_failure( "[1,2]" ).kind(), ErrorKind::parse );
	EXPECT_EQ( parse_failure( "{not json" ).kind(), ErrorKind::parse );
	const auto missing = parse_failure( R"({"states":["s1"],"consequences":["c"],"acts":"all"})" );
	EXPECT_EQ( missing.kind(), ErrorKind::parse );
	EXPECT_NE( std::string( missing.what() ).find( "domain" ), std::string::npos );
	const auto bad_rational = parse_failure( R"({"states":["s1"],"consequences":["c"],"acts":"all",
		"domain":{"type":"standard"},"utility":{"c":"x/2"},"plausibility":{"type":"probability","weights":{"s1":"1"}}})" );
	EXPECT_EQ( bad_rational.kind(), ErrorKind::parse );
	EXPECT_NE( std::string( bad_rational.what() ).find( "/utility/c" ), std::string::npos );
	const auto bad_domain = parse_failure( R"({"states":["s1"],"consequences":["c"],"acts":"all",
		"domain":{"type":"complex"}})" );
	EXPECT_NE( std::string( bad_domain.what() ).find( "complex" ), std::string::npos );
	const auto bad_pref = parse_failure( R"({"states":["s1"],"consequences":["c"],"acts":{"a":{"s1":"c"}},
		"domain":{"type":"canonical"},"preference":[["a","b"]]})" );
	EXPECT_EQ( bad_pref.kind(), ErrorKind::validation );
}

TEST( Document, ParseEmitParseIsStable ) {
	for( const char *name : samples ) {
		const auto doc = read_document( sample_path( name ) );
		const Json emitted = emit_document( doc );
		const auto again = parse_document( emitted );
		EXPECT_EQ( again, doc ) << name;
		EXPECT_EQ( emit_document( again ).dump(), emitted.dump() ) << name;
	}
}

TEST( Document, DigestIsFnv1a ) {
	EXPECT_EQ( digest( "" ), "cbf29ce484222325" );
	EXPECT_EQ( digest( "a" ), "af63dc4c8601ec8c" );
}

TEST( Cli, EvalPrintsValue ) {
	const auto r = run( { "eval", sample_path( "F1.json" ), "--act", "aL" } );
	EXPECT_EQ( r.code, 0 );
	EXPECT_EQ( r.out, "3/10\n" );
	const auto restricted = run( { "eval", sample_path( "F1.json" ), "--act", "aN", "--restrict", "s2" } );
	EXPECT_EQ( restricted.out, "7/10\n" );
	const auto pair = run( { "eval", sample_path( "F2.json" ), "--act", "(c1,c1,c1)" } );
	EXPECT_EQ( pair.code, 0 );
	EXPECT_EQ( pair.out, "(5,5)\n" );
}

TEST( Cli, TotalityViolationExitsOne ) {
	const auto r = run( { "check", sample_path( "reflexive-only.json" ), "--postulates", "1a" } );
	EXPECT_EQ( r.code, 1 );
	EXPECT_NE( r.out.find( "P1a [general]: FAILS at a1=" ), std::string::npos );
	const auto j = run( { "--format", "json", "check", sample_path( "reflexive-only.json" ), "--postulates", "1a" } );
	const Json doc = Json::parse( j.out );
	ASSERT_EQ( doc[ "records" ].size(), 1u );
	EXPECT_FALSE( doc[ "records" ][ 0 ][ "holds" ].get< bool >() );
	EXPECT_TRUE( doc[ "records" ][ 0 ][ "witness" ].contains( "a1" ) );
	EXPECT_TRUE( doc[ "records" ][ 0 ][ "witness" ].contains( "a2" ) );
}

TEST( Cli, VerifyF1SevenRecords ) {
	const auto r = run( { "--format", "json", "verify", sample_path( "F1.json" ), "--set", "1a,1b,2,3,4,5,6" } );
	EXPECT_EQ( r.code, 0 );
	const Json doc = Json::parse( r.out );
	ASSERT_EQ( doc[ "records" ].size(), 7u );
	for( const auto &rec : doc[ "records" ] ) {
		EXPECT_TRUE( rec[ "holds" ].get< bool >() ) << rec[ "name" ];
	}
	EXPECT_EQ( doc[ "records" ][ 6 ][ "name" ], "A6<=>P6" );
	EXPECT_TRUE( doc[ "result" ][ "conjunction_agrees" ].get< bool >() );
}

TEST( Cli, ExitCodes ) {
	EXPECT_EQ( run( { "validate", sample_path( "F1.json" ) } ).code, 0 );
	EXPECT_EQ( run( { "check", sample_path( "F1.json" ), "--postulates", "1a,2,5" } ).code, 0 );
	EXPECT_EQ( run( { "check", sample_path( "F1.json" ), "--axioms", "all" } ).code, 1 );
	const auto bad = run( { "validate", sample_path( "bad-weights.json" ) } );
	EXPECT_EQ( bad.code, 2 );
	EXPECT_NE( bad.err.find( "9/10" ), std::string::npos );
	EXPECT_EQ( run( { "validate", sample_path( "unknown-state.json" ) } ).code, 2 );
	EXPECT_EQ( run( { "validate", sample_path( "no-such-file.json" ) } ).code, 2 );
	EXPECT_EQ( run( { "eval", sample_path( "F1.json" ), "--act", "zz" } ).code, 2 );
	EXPECT_EQ( run( { "frobnicate" } ).code, 2 );
	EXPECT_EQ( run( { "check", sample_path( "F1-three-acts.json" ), "--postulates", "2", "--version", "special" } ).code, 2 );
	EXPECT_EQ( run( { "check", sample_path( "belief.json" ), "--axioms", "2" } ).code, 2 );
	EXPECT_EQ( run( { "--budget-partitions", "1", "check", sample_path( "F1.json" ), "--postulates", "6" } ).code, 3 );
	EXPECT_EQ( run( { "--budget-acts", "3", "acts", sample_path( "F1.json" ), "--enumerate" } ).code, 3 );
}

TEST( Cli, ReportsAreDeterministic ) {
	for( const char *name : samples ) {
		for( const char *format : { "text", "json" } ) {
			const std::vector< std::string > args{ "--format", format, "verify", sample_path( name ), "--set", "1a,1b,5" };
			const auto a = run( args );
			const auto b = run( args );
			EXPECT_EQ( a.out, b.out ) << name;
			EXPECT_EQ( a.code, b.code ) << name;
			EXPECT_EQ( a.out.find( "elapsed" ), std::string::npos );
		}
	}
	const auto timed = run( { "--timing", "validate", sample_path( "F1.json" ) } );
	EXPECT_NE( timed.out.find( "elapsed_ms" ), std::string::npos );
}

TEST( Cli, SynthesizeRoundTrip ) {
	for( const char *construction : { "thm1", "corollary", "fixed" } ) {
		const auto r = run( { "--format", "json", "synthesize", sample_path( "cyclic.json" ), "--construction", construction } );
		ASSERT_EQ( r.code, 0 ) << r.err;
		const Json doc = Json::parse( r.out );
		const auto lp = load_problem( parse_document( doc[ "result" ][ "document" ] ) );
		const auto original = load_sample( "cyclic.json" );
		EXPECT_EQ( induced_preference( *lp.problem ), *original.preference ) << construction;
	}
}

TEST( Cli, PrefsAndActs ) {
	const auto p = run( { "prefs", sample_path( "F1-three-acts.json" ) } );
	EXPECT_EQ( p.code, 0 );
	EXPECT_NE( p.out.find( "aM <= aL" ), std::string::npos );
	EXPECT_EQ( p.out.find( "aK <= aL" ), std::string::npos );
	const auto a = run( { "--format", "json", "acts", sample_path( "F1-three-acts.json" ), "--enumerate" } );
	const Json doc = Json::parse( a.out );
	EXPECT_EQ( doc[ "result" ][ "acts" ].size(), 4u );
}

TEST( Cli, CyclicPreferenceViolatesTransitivity ) {
	const auto r = run( { "check", sample_path( "cyclic.json" ), "--postulates", "1b" } );
	EXPECT_EQ( r.code, 1 );
	EXPECT_NE( r.out.find( "P1b [general]: FAILS at a1=" ), std::string::npos );
}

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

#include "support.hpp"

using namespace geu;
using namespace geu::testing;

namespace {

	const Act aK{ 0, 0 }, aL{ 0, 1 }, aN{ 1, 0 }, aM{ 1, 1 };

	DecisionProblem belief_problem() {
		return DecisionProblem( f1_situation(), standard_domain(), { rv( 1 ), rv( 0 ) },
			table_measure( 2, { { 0b00, rv( 0 ) }, { 0b01, rv( 0 ) }, { 0b10, rv( 0 ) }, { 0b11, rv( 1 ) } },
				std::make_shared< const ProbabilityOrder >() ) );
	}

	DecisionProblem canonical_problem( const SituationPtr &sit, const PreferenceRelation &pref ) {
		return canonical_representation( sit, pref ).problem;
	}

} // end namespace

TEST( Geu, F1MatchesClassicalExpectedUtility ) {
	const auto d = f1_problem();
	EXPECT_EQ( geu::geu( d, aK ), rv( 1 ) );
	EXPECT_EQ( geu::geu( d, aL ), rv( 3, 10 ) );
	EXPECT_EQ( geu::geu( d, aN ), rv( 7, 10 ) );
	EXPECT_EQ( geu::geu( d, aM ), rv( 0 ) );
}

TEST( Geu, RestrictedToEvents ) {
	const auto d = f1_problem();
	EXPECT_EQ( geu_restricted( d, aL, 0b01 ), rv( 3, 10 ) );
	EXPECT_EQ( geu_restricted( d, aL, 0b10 ), rv( 0 ) );
	for( const Act &a : { aK, aL, aN, aM } ) {
		EXPECT_EQ( geu_restricted( d, a, 0b11 ), geu::geu( d, a ) );
	}
	EXPECT_THROW( geu_restricted( d, aL, 0 ), Error );
}

TEST( Geu, RandomProbabilityProblemsAgreeWithOracle ) {
	std::mt19937_64 rng( 21 );
	for( int trial = 0; trial < 30; ++trial ) {
		const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 3;
		const auto sit = full_situation( n, m );
		const auto w = random_weights( rng, n );
		const auto u = random_utilities( rng, m );
		std::vector< Rational > ur;
		for( const auto &v : u ) ur.push_back( std::get< Rational >( v ) );
		const DecisionProblem d( sit, standard_domain(), u, probability_measure( w ) );
		for( const auto &a : sit->acts() ) {
			ASSERT_EQ( geu::geu( d, a.map ), Value( classical_eu( w.weights(), ur, a.map ) ) );
		}
	}
}

TEST( Geu, StatewiseEqualsGeuWhenAdditive ) {
	const auto d = f1_problem();
	EXPECT_EQ( geu_statewise( d, aL ), rv( 3, 10 ) );
	const auto t = decomposition_identities( d );
	EXPECT_EQ( t.violations, 0u ) << t.first;
}

TEST( Geu, BeliefMeasureBreaksStatewiseForm ) {
	const auto d = belief_problem();
	EXPECT_EQ( geu::geu( d, aK ), rv( 1 ) );
	EXPECT_EQ( geu_statewise( d, aK ), rv( 0 ) );
	const auto r = is_additive( d );
	ASSERT_FALSE( r.holds );
	EXPECT_EQ( r.get< ConsequenceBinding >( "c" ).id, 0u );
	EXPECT_EQ( r.get< EventBinding >( "X" ).mask, 0b01u );
	EXPECT_EQ( r.get< EventBinding >( "Y" ).mask, 0b10u );
	EXPECT_TRUE( witness_is_violation( r, context_of( d ) ) );
}

TEST( Geu, ConstantActLawOnFixtures ) {
	for( const char *name : { "F1.json", "F1-three-acts.json", "F2.json", "F2-min.json", "belief.json",
		"possibility.json", "cyclic.json", "reflexive-only.json" } )
	{
		const auto lp = load_sample( name );
		ASSERT_TRUE( lp.problem ) << name;
		const auto t = constant_act_law( *lp.problem );
		EXPECT_EQ( t.violations, 0u ) << name << " " << t.first;
	}
}

TEST( Geu, CanonicalActIsItsOwnValue ) {
	std::mt19937_64 rng( 5 );
	const auto sit = random_situation( rng, 3, 2, 6 );
	const auto d = canonical_problem( sit, random_preference( rng, 6 ) );
	for( const auto &a : sit->acts() ) {
		EXPECT_EQ( geu::geu( d, a.map ), Value( act_graph( a.map ) ) );
	}
}

TEST( Additive, ProbabilityAndCanonicalProblems ) {
	EXPECT_TRUE( is_additive( f1_problem() ).holds );
	std::mt19937_64 rng( 8 );
	for( int trial = 0; trial < 10; ++trial ) {
		const auto sit = random_situation( rng, 1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 8 );
		const auto d = canonical_problem( sit, random_preference( rng, sit->n_acts() ) );
		EXPECT_TRUE( is_additive( d ).holds );
		EXPECT_TRUE( is_whole( d ).holds );
		const auto t = decomposition_identities( d );
		EXPECT_EQ( t.violations, 0u ) << t.first;
	}
}

TEST( Preference, F1ThreeActsTotalPreorder ) {
	const auto sit = f1_situation( { "aK", "aL", "aM" } );
	const auto r = induced_preference( f1_problem( sit ) );
	// aM ≾ aL ≾ aK, all strict
	EXPECT_TRUE( r.strict( 2, 1 ) );
	EXPECT_TRUE( r.strict( 1, 0 ) );
	EXPECT_TRUE( r.strict( 2, 0 ) );
	for( std::size_t i = 0; i < 3; ++i ) {
		for( std::size_t j = 0; j < 3; ++j ) {
			EXPECT_TRUE( r( i, j ) || r( j, i ) );
		}
	}
}

TEST( Preference, CanonicalRoundTrip ) {
	const auto sit = f1_situation( { "aK", "aL" } );
	const auto pref = preference_from_names( *sit, { { "aK", "aL" } } );
	EXPECT_EQ( induced_preference( canonical_problem( sit, pref ) ), pref );
}

TEST( Preference, PairMinWorstCase ) {
	// utility 0 on c1, 6 on c2; two measures disagree on s1
	const auto sit = f1_situation( { "aL", "aN" } );
	const DecisionProblem d( sit, pair_min_domain(), { rv( 0 ), rv( 6 ) },
		pair_measure( ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ), ProbabilityWeights( { q( 1, 6 ), q( 5, 6 ) } ) ) );
	// aL = (c1,c2): (3, 5); aN = (c2,c1): (3, 1)
	EXPECT_EQ( geu::geu( d, aL ), pv( 3, 5 ) );
	EXPECT_EQ( geu::geu( d, aN ), pv( 3, 1 ) );
	const auto r = induced_preference( d );
	EXPECT_TRUE( r.strict( 1, 0 ) );
	const auto plain = induced_preference( DecisionProblem( sit, pair_domain(), d.utility(), d.plausibility() ) );
	EXPECT_TRUE( plain.strict( 1, 0 ) );
}

TEST( Whole, Examples ) {
	EXPECT_TRUE( is_whole( f1_problem() ).holds );
	EXPECT_TRUE( is_whole( f1_problem( f1_situation( { "aK", "aL" } ) ) ).holds );
	// equal weights make aN tie with aL, so leaving aN out breaks wholeness
	const auto sit = f1_situation( { "aK", "aL" } );
	const DecisionProblem d( sit, standard_domain(), { rv( 1 ), rv( 0 ) },
		probability_measure( ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ) ) );
	const auto r = is_whole( d );
	ASSERT_FALSE( r.holds );
	EXPECT_EQ( r.get< ActBinding >( "a" ).map, aN );
	EXPECT_TRUE( witness_is_violation( r, context_of( d ) ) );
}

TEST( EvSet, Examples ) {
	const auto d = f1_problem( f1_situation( { "aK", "aL", "aM" } ) );
	EXPECT_EQ( ev_set( d, 0b01 ), ( std::vector< Value >{ rv( 0 ), rv( 3, 10 ) } ) );
	EXPECT_EQ( ev_set( d, 0b11 ), ( std::vector< Value >{ rv( 0 ), rv( 3, 10 ), rv( 1 ) } ) );
	EXPECT_EQ( ev_set( f1_problem( f1_situation( { "aN" } ) ), 0b11 ).size(), 1u );
}

TEST( Ulotto, ExamplesAndSpliceLaw ) {
	const auto d = f1_problem();
	EXPECT_EQ( ulotto( d, rv( 1 ), 0b01, rv( 0 ) ), rv( 3, 10 ) );
	EXPECT_EQ( ulotto( d, rv( 1 ), 0b11, rv( 0 ) ), rv( 1 ) );
	EXPECT_EQ( ulotto( d, rv( 1 ), 0b00, rv( 0 ) ), rv( 0 ) );
	for( const char *name : { "F1.json", "F2.json", "belief.json", "possibility.json", "cyclic.json" } ) {
		const auto lp = load_sample( name );
		const auto &p = *lp.problem;
		const std::size_t n = p.situation().n_states();
		for( ConsequenceId c = 0; c < p.situation().n_consequences(); ++c ) {
			for( ConsequenceId e = 0; e < p.situation().n_consequences(); ++e ) {
				if( p.utility( c ) == p.utility( e ) ) {
					continue;
				}
				for( const Subset x : subsets_lex( n ) ) {
					const Act a = splice( constant_act( c, n ), x, constant_act( e, n ) );
					EXPECT_EQ( geu::geu( p, a ), ulotto( p, p.utility( c ), x, p.utility( e ) ) ) << name;
				}
			}
		}
	}
}

TEST( Ulotto, EqualUtilitiesNeedAdditivity ) {
	// a splice of c with itself is constant; the lottery form only collapses to u(c) when Pl is additive
	EXPECT_EQ( ulotto( f1_problem(), rv( 1 ), 0b01, rv( 1 ) ), rv( 1 ) );
	const auto d = belief_problem();
	EXPECT_EQ( geu::geu( d, aK ), rv( 1 ) );
	EXPECT_EQ( ulotto( d, rv( 1 ), 0b01, rv( 1 ) ), rv( 0 ) );
}

TEST( Problem, RejectsInvalidPieces ) {
	const auto sit = f1_situation();
	const auto pl = probability_measure( ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ) );
	EXPECT_THROW( DecisionProblem( sit, standard_domain(), { rv( 1 ) }, pl ), Error );
	EXPECT_THROW( DecisionProblem( sit, standard_domain(), { rv( 1 ), pv( 0, 0 ) }, pl ), Error );
	EXPECT_THROW( DecisionProblem( sit, standard_domain(), { rv( 1 ), rv( 0 ) }, identity_measure( 2 ) ), Error );
	EXPECT_THROW( DecisionProblem( sit, standard_domain(), { rv( 1 ), rv( 0 ) }, identity_measure( 3 ) ), Error );
}

TEST( PairDomain, GeuIsPairOfExpectations ) {
	const auto lp = load_sample( "F2.json" );
	const auto &d = *lp.problem;
	const std::vector< Rational > w1{ q( 1, 2 ), q( 1, 4 ), q( 1, 4 ) }, w2{ q( 1, 8 ), q( 3, 8 ), q( 1, 2 ) };
	const std::vector< Rational > u{ q( 5 ), q( 2 ), q( -1 ) };
	for( const auto &a : d.situation().acts() ) {
		EXPECT_EQ( geu::geu( d, a.map ), pv( classical_eu( w1, u, a.map ), classical_eu( w2, u, a.map ) ) ) << a.name;
	}
	const auto t = decomposition_identities( d );
	EXPECT_EQ( t.violations, 0u ) << t.first;
}

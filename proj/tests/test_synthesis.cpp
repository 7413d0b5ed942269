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

	WitnessContext minimality_context( const SynthesizedProblem &canon, const DecisionProblem &other ) {
		WitnessContext ctx = context_of( other );
		ctx.canon = &canon;
		return ctx;
	}

} // end namespace

TEST( Canonical, RoundTripOnRandomRelations ) {
	std::mt19937_64 rng( 1 );
	for( int trial = 0; trial < 60; ++trial ) {
		const auto sit = random_situation( rng, 1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 10 );
		const auto pref = random_preference( rng, sit->n_acts(), 0.1 + 0.8 * ( trial % 5 ) / 4.0 );
		const auto s = canonical_representation( sit, pref );
		EXPECT_EQ( s.construction, Construction::thm1 );
		ASSERT_EQ( induced_preference( s.problem ), pref );
	}
}

TEST( Canonical, AdditiveWithEmptyIdentity ) {
	std::mt19937_64 rng( 2 );
	const auto sit = random_situation( rng, 2, 2, 3 );
	const auto s = canonical_representation( sit, random_preference( rng, 3 ) );
	EXPECT_TRUE( is_additive( s.problem ).holds );
	const auto id = has_oplus_identity( s.problem.domain() );
	EXPECT_TRUE( id.holds );
	EXPECT_EQ( *id.element, Value( PairSet() ) );
}

TEST( Canonical, ReflexiveOnlyValuesUnrelated ) {
	const auto sit = f1_situation( { "aK", "aL" } );
	const auto s = canonical_representation( sit, PreferenceRelation::reflexive( 2 ) );
	const auto values = geu_all( s.problem );
	EXPECT_FALSE( s.problem.domain().leq_v( values[ 0 ], values[ 1 ] ) );
	EXPECT_FALSE( s.problem.domain().leq_v( values[ 1 ], values[ 0 ] ) );
	EXPECT_TRUE( s.problem.domain().leq_v( values[ 0 ], values[ 0 ] ) );
}

TEST( Canonical, DuplicateActObstruction ) {
	const auto sit = std::make_shared< const DecisionSituation >( std::vector< std::string >{ "s1" },
		std::vector< std::string >{ "c1", "c2" },
		std::vector< NamedAct >{ { "a", { 0 } }, { "b", { 0 } }, { "c", { 1 } } }, true );
	// a and b denote the same function but only a is below c
	const auto bad = preference_from_names( *sit, { { "a", "c" } } );
	try {
		canonical_representation( sit, bad );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::duplicate_act );
	}
	const auto ok = preference_from_names( *sit, { { "a", "c" }, { "b", "c" }, { "a", "b" }, { "b", "a" } } );
	EXPECT_EQ( induced_preference( canonical_representation( sit, ok ).problem ), ok );
}

TEST( Monotone, RoundTripAndLaws ) {
	std::mt19937_64 rng( 4 );
	for( int trial = 0; trial < 50; ++trial ) {
		const auto sit = random_situation( rng, 1 + rng() % 3, 1 + rng() % 2, 1 + rng() % 8 );
		const auto pref = random_preference( rng, sit->n_acts() );
		const auto s = monotonic_representation( sit, pref );
		EXPECT_EQ( s.construction, Construction::corollary );
		ASSERT_EQ( induced_preference( s.problem ), pref );
		EXPECT_TRUE( is_additive( s.problem ).holds );
		const auto id = has_oplus_identity( s.problem.domain() );
		ASSERT_TRUE( id.holds );
		EXPECT_EQ( *id.element, Value( PairSet() ) );
		const auto m = is_monotonic( s.problem.domain(), monotonicity_probes( s.problem.domain(), 3000, trial ) );
		EXPECT_TRUE( m.holds );
	}
}

TEST( Fixed, SharedDomainRoundTripsEveryPreference ) {
	std::mt19937_64 rng( 6 );
	const auto sit = f1_situation();
	const auto fixed = fixed_domain( sit );
	const std::string fp = fixed.fingerprint();
	for( int trial = 0; trial < 20; ++trial ) {
		const auto pref = random_preference( rng, 4 );
		const auto s = fixed_representation( fixed, pref );
		ASSERT_EQ( induced_preference( s.problem ), pref );
		EXPECT_EQ( s.problem.domain_ptr(), fixed.domain );
		EXPECT_EQ( fixed.fingerprint(), fp );
	}
	EXPECT_EQ( fixed_domain( sit ).fingerprint(), fp );
}

TEST( Fixed, UtilitiesCarryTheInternedTag ) {
	const auto sit = f1_situation( { "aK", "aL" } );
	const auto fixed = fixed_domain( sit );
	const auto r1 = PreferenceRelation::reflexive( 2 );
	const auto r2 = preference_from_names( *sit, { { "aL", "aK" } } );
	std::uint32_t id1 = 0, id2 = 0;
	const auto u1 = utility_for( fixed, r1, &id1 );
	const auto u2 = utility_for( fixed, r2, &id2 );
	EXPECT_NE( id1, id2 );
	EXPECT_EQ( u1[ 0 ], Value( Tagged( PairSet::product( 0b11, 0 ), { id1 } ) ) );
	EXPECT_EQ( u2[ 1 ], Value( Tagged( PairSet::product( 0b11, 1 ), { id2 } ) ) );
	std::uint32_t again = 99;
	utility_for( fixed, r1, &again );
	EXPECT_EQ( again, id1 );
	EXPECT_TRUE( is_additive( fixed_representation( fixed, r2 ).problem ).holds );
}

TEST( Minimality, AgainstItselfAndProbability ) {
	const auto sit = f1_situation();
	const auto eu = f1_problem( sit );
	const auto pref = induced_preference( eu );
	const auto canon = canonical_representation( sit, pref );
	EXPECT_TRUE( minimality_check( canon, canon.problem ).holds );
	EXPECT_TRUE( minimality_check( canon, eu, 2 ).holds );
	// the probability measure relates {s1} below {s2}, which the canonical one leaves open
	EXPECT_TRUE( minimality_check( canon, eu, 3 ).holds );
}

TEST( Minimality, NonAdditiveRepresentationFails ) {
	const auto lp = load_sample( "belief.json" );
	const auto &belief = *lp.problem;
	const auto pref = induced_preference( belief );
	const auto canon = canonical_representation( lp.situation, pref );
	const auto r = minimality_check( canon, belief );
	ASSERT_FALSE( r.holds );
	EXPECT_TRUE( witness_is_violation( r, minimality_context( canon, belief ) ) );
}

TEST( Minimality, RejectsNonRepresentations ) {
	const auto sit = f1_situation();
	const auto canon = canonical_representation( sit, PreferenceRelation::reflexive( 4 ) );
	try {
		minimality_check( canon, f1_problem( sit ) );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::not_a_representation );
	}
}

TEST( SynthesizedDocument, RoundTripsThroughLoader ) {
	std::mt19937_64 rng( 9 );
	const auto sit = random_situation( rng, 2, 2, 4 );
	const auto pref = random_preference( rng, 4 );
	for( const auto &s : { canonical_representation( sit, pref ), monotonic_representation( sit, pref ) } ) {
		const auto doc = synthesized_document( s );
		const auto lp = load_problem( parse_document( emit_document( doc ) ) );
		ASSERT_TRUE( lp.problem );
		EXPECT_EQ( induced_preference( *lp.problem ), pref );
		EXPECT_EQ( lp.problem->domain().fingerprint(), s.problem.domain().fingerprint() );
	}
	const auto fixed = fixed_representation( fixed_domain( sit ), pref );
	const auto lp = load_problem( parse_document( emit_document( synthesized_document( fixed ) ) ) );
	EXPECT_EQ( induced_preference( *lp.problem ), pref );
}

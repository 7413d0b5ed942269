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

	/** Every failing postulate witness on (d's situation, pref) must re-evaluate to a violation. */
	void expect_postulate_witnesses( const DecisionSituation &sit, const PreferenceRelation &pref, const Version v ) {
		WitnessContext ctx;
		ctx.situation = &sit;
		ctx.preference = &pref;
		for( const Index i : all_indices() ) {
			const auto r = check_P( sit, pref, i, v );
			if( !r.holds ) {
				EXPECT_TRUE( witness_is_violation( r, ctx ) ) << r.name;
			}
		}
	}

	void expect_axiom_witnesses( const DecisionProblem &d ) {
		const AxiomFrame f( d );
		for( const Index i : all_indices() ) {
			const auto r = check_A( f, i );
			if( !r.holds ) {
				EXPECT_TRUE( witness_is_violation( r, context_of( d ) ) ) << r.name;
			}
		}
	}

	/** Strong P2: a's and b's range over all simple acts, only the four splices must lie in A. */
	bool strong_p2( const DecisionSituation &sit, const PreferenceRelation &pref ) {
		const auto acts = enumerate_simple_acts( sit, 1u << 12 );
		for( const Subset x : subsets_lex( sit.n_states() ) ) {
			for( const Act &a1 : acts ) {
				for( const Act &a2 : acts ) {
					for( const Act &b1 : acts ) {
						for( const Act &b2 : acts ) {
							const auto s11 = sit.find( splice( a1, x, b1 ) );
							const auto s21 = sit.find( splice( a2, x, b1 ) );
							const auto s12 = sit.find( splice( a1, x, b2 ) );
							const auto s22 = sit.find( splice( a2, x, b2 ) );
							if( s11 && s21 && s12 && s22 && pref( *s11, *s21 ) != pref( *s12, *s22 ) ) {
								return false;
							}
						}
					}
				}
			}
		}
		return true;
	}

	DecisionProblem eu_problem( const SituationPtr &sit, const ProbabilityWeights &w, std::vector< Value > u ) {
		return DecisionProblem( sit, standard_domain(), std::move( u ), probability_measure( w ) );
	}

} // end namespace

TEST( Postulates, ReflexiveOnlyFailsTotality ) {
	const auto lp = load_sample( "reflexive-only.json" );
	const auto r = check_P( *lp.situation, *lp.preference, Index::i1a );
	ASSERT_FALSE( r.holds );
	const Act a1 = r.get< ActBinding >( "a1" ).map;
	const Act a2 = r.get< ActBinding >( "a2" ).map;
	EXPECT_NE( a1, a2 );
	EXPECT_EQ( std::set< Act >( { a1, a2 } ), std::set< Act >( { Act{ 0, 0 }, Act{ 0, 1 } } ) );
	expect_postulate_witnesses( *lp.situation, *lp.preference, Version::general );
}

TEST( Postulates, F1ExpectedUtilityHoldsExceptFineness ) {
	const auto d = f1_problem();
	const auto pref = induced_preference( d );
	for( const Index i : { Index::i1a, Index::i1b, Index::i2, Index::i3, Index::i4, Index::i5 } ) {
		EXPECT_TRUE( check_P( d.situation(), pref, i ).holds ) << index_name( i );
		EXPECT_TRUE( check_P( d.situation(), pref, i, Version::special ).holds ) << index_name( i );
	}
	// With two states no partition is fine enough: aL ≺ aK, and putting c1 on the cell {s2} turns aL into aK.
	const auto p6 = check_P( d.situation(), pref, Index::i6 );
	ASSERT_FALSE( p6.holds );
	EXPECT_EQ( p6.get< ActBinding >( "a" ).map, ( Act{ 0, 1 } ) );
	EXPECT_EQ( p6.get< ActBinding >( "b" ).map, ( Act{ 0, 0 } ) );
	EXPECT_EQ( p6.get< ConsequenceBinding >( "c" ).id, 0u );
	expect_postulate_witnesses( d.situation(), pref, Version::general );
}

TEST( Postulates, SpecialVersionNeedsAllSimpleActs ) {
	const auto sit = f1_situation( { "aK", "aL", "aM" } );
	const auto pref = induced_preference( f1_problem( sit ) );
	try {
		check_P( *sit, pref, Index::i2, Version::special );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::special_version_mismatch );
	}
}

TEST( Postulates, NoConstantActsFailsP5 ) {
	const auto sit = f1_situation( { "aL", "aN" } );
	const auto r = check_P( *sit, induced_preference( f1_problem( sit ) ), Index::i5 );
	EXPECT_FALSE( r.holds );
	EXPECT_TRUE( r.witness.empty() );
}

TEST( Postulates, SpecialAndGeneralCollapseOnAllSimpleActs ) {
	std::mt19937_64 rng( 12 );
	for( int trial = 0; trial < 40; ++trial ) {
		const auto sit = full_situation( 1 + rng() % 2, 1 + rng() % 3 );
		const auto pref = trial % 2 ? random_preference( rng, sit->n_acts() ) :
			induced_preference( eu_problem( sit, random_weights( rng, sit->n_states() ),
				random_utilities( rng, sit->n_consequences() ) ) );
		for( const Index i : all_indices() ) {
			const auto g = check_P( *sit, pref, i, Version::general );
			const auto s = check_P( *sit, pref, i, Version::special );
			EXPECT_EQ( g.holds, s.holds ) << index_name( i );
			EXPECT_EQ( g.witness.empty(), s.witness.empty() ) << index_name( i );
		}
		expect_postulate_witnesses( *sit, pref, Version::general );
	}
}

TEST( Postulates, StrongP2MatchesGeneralP2 ) {
	std::mt19937_64 rng( 13 );
	int failing = 0;
	for( int trial = 0; trial < 120; ++trial ) {
		const auto sit = random_situation( rng, 2, 2 + trial % 2, 2 + rng() % 6 );
		PreferenceRelation pref = random_preference( rng, sit->n_acts(), 0.7 );
		if( trial % 3 == 0 ) {
			pref = induced_preference( eu_problem( sit, random_weights( rng, 2 ), random_utilities( rng, sit->n_consequences() ) ) );
		}
		const bool general = check_P( *sit, pref, Index::i2 ).holds;
		EXPECT_EQ( strong_p2( *sit, pref ), general );
		failing += general ? 0 : 1;
	}
	EXPECT_GT( failing, 0 );
}

TEST( Conditional, BoundaryEvents ) {
	std::mt19937_64 rng( 14 );
	const auto sit = full_situation( 2, 2 );
	const auto pref = random_preference( rng, 4 );
	EXPECT_EQ( conditional_preference( *sit, pref, sit->full() ), pref );
	const auto empty = conditional_preference( *sit, pref, 0 );
	for( std::size_t i = 0; i < 4; ++i ) {
		for( std::size_t j = 0; j < 4; ++j ) {
			EXPECT_TRUE( empty( i, j ) );
		}
	}
}

TEST( Conditional, AgreeingActsAreEquivalent ) {
	const auto d = f1_problem();
	const auto cp = conditional_preference( d.situation(), induced_preference( d ), 0b01 );
	// aK and aL agree on s1
	EXPECT_TRUE( cp.equivalent( 0, 1 ) );
	EXPECT_TRUE( cp.strict( 3, 0 ) );
}

TEST( Conditional, NotTotalWithoutP2 ) {
	// a total preorder that breaks P2 can leave the conditional relation partial
	std::mt19937_64 rng( 15 );
	bool found = false;
	for( int trial = 0; trial < 400 && !found; ++trial ) {
		const auto sit = full_situation( 2, 2 );
		std::vector< int > rank( 4 );
		for( auto &r : rank ) r = static_cast< int >( rng() % 3 );
		PreferenceRelation pref( 4 );
		for( std::size_t i = 0; i < 4; ++i ) {
			for( std::size_t j = 0; j < 4; ++j ) {
				pref.set( i, j, rank[ i ] <= rank[ j ] );
			}
		}
		ASSERT_TRUE( check_P( *sit, pref, Index::i1a ).holds );
		if( check_P( *sit, pref, Index::i2 ).holds ) {
			continue;
		}
		for( const Subset x : subsets_lex( 2 ) ) {
			const auto cp = conditional_preference( *sit, pref, x );
			for( std::size_t i = 0; i < 4; ++i ) {
				for( std::size_t j = 0; j < 4; ++j ) {
					found = found || ( !cp( i, j ) && !cp( j, i ) );
				}
			}
		}
	}
	EXPECT_TRUE( found );
}

TEST( Null, Examples ) {
	const auto d = f1_problem();
	const auto pref = induced_preference( d );
	EXPECT_TRUE( is_null( d.situation(), pref, 0 ).holds );
	const auto r = is_null( d.situation(), pref, 0b01 );
	ASSERT_FALSE( r.holds );
	WitnessContext ctx;
	ctx.situation = &d.situation();
	ctx.preference = &pref;
	EXPECT_TRUE( witness_is_violation( r, ctx ) );
	const auto sit = full_situation( 3, 2 );
	const auto z = eu_problem( sit, ProbabilityWeights( { q( 0 ), q( 1, 3 ), q( 2, 3 ) } ), { rv( 1 ), rv( 0 ) } );
	const auto zp = induced_preference( z );
	EXPECT_TRUE( is_null( *sit, zp, 0b001 ).holds );
	EXPECT_TRUE( is_null( *sit, zp, 0b001, Version::special ).holds );
	EXPECT_FALSE( is_null( *sit, zp, 0b011 ).holds );
}

TEST( Likelihood, AgreesWithProbabilityOrder ) {
	std::mt19937_64 rng( 16 );
	for( int trial = 0; trial < 30; ++trial ) {
		const std::size_t n = 1 + rng() % 3;
		const auto sit = full_situation( n, 2 );
		const auto w = random_weights( rng, n );
		const auto rel = likelihood_relation( *sit, induced_preference( eu_problem( sit, w, { rv( 2 ), rv( -1 ) } ) ) );
		for( const Subset x : subsets_lex( n ) ) {
			for( const Subset y : subsets_lex( n ) ) {
				EXPECT_EQ( rel( x, y ), w.of( x ) <= w.of( y ) );
			}
			EXPECT_TRUE( rel( 0, x ) );
		}
	}
}

TEST( Likelihood, VacuousWithoutStrictConsequences ) {
	const auto sit = full_situation( 2, 2 );
	const auto rel = likelihood_relation( *sit, induced_preference( eu_problem( sit,
		ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ), { rv( 1 ), rv( 1 ) } ) ) );
	for( Subset x = 0; x < 4; ++x ) {
		for( Subset y = 0; y < 4; ++y ) {
			EXPECT_TRUE( rel( x, y ) );
		}
	}
}

TEST( Axioms, F1HoldsExceptFineness ) {
	const auto d = f1_problem();
	for( const Index i : { Index::i1a, Index::i1b, Index::i2, Index::i3, Index::i4, Index::i5 } ) {
		EXPECT_TRUE( check_A( d, i ).holds ) << index_name( i );
	}
	EXPECT_FALSE( check_A( d, Index::i6 ).holds );
	expect_axiom_witnesses( d );
}

TEST( Axioms, IncomparableValuesFailA1a ) {
	const auto sit = f1_situation( { "aL", "aN" } );
	const DecisionProblem d( sit, pair_domain(), { rv( 1 ), rv( 0 ) },
		pair_measure( ProbabilityWeights( { q( 1 ), q( 0 ) } ), ProbabilityWeights( { q( 0 ), q( 1 ) } ) ) );
	const auto r = check_A( d, Index::i1a );
	ASSERT_FALSE( r.holds );
	const auto &x = r.get< Value >( "x" );
	const auto &y = r.get< Value >( "y" );
	EXPECT_EQ( std::set< Value >( { x, y } ), std::set< Value >( { pv( 1, 0 ), pv( 0, 1 ) } ) );
	EXPECT_TRUE( witness_is_violation( r, context_of( d ) ) );
}

TEST( Axioms, ConstantUtilityFailsA5 ) {
	const auto sit = full_situation( 2, 2 );
	const auto d = eu_problem( sit, ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ), { rv( 4 ), rv( 4 ) } );
	EXPECT_FALSE( check_A( d, Index::i5 ).holds );
	EXPECT_FALSE( check_P( *sit, induced_preference( d ), Index::i5 ).holds );
}

TEST( Axioms, RequiredClassesEnforced ) {
	const auto lp = load_sample( "belief.json" );
	try {
		check_A( *lp.problem, Index::i2 );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::precondition );
	}
	EXPECT_NO_THROW( check_A( *lp.problem, Index::i1a ) );
}

TEST( Pi, Membership ) {
	const auto p = pi_membership( f1_problem() );
	EXPECT_TRUE( p.all && p.additive && p.zero );
	for( const Index i : all_indices() ) {
		EXPECT_TRUE( p.admits( i ) );
	}
	std::mt19937_64 rng( 17 );
	const auto sit = random_situation( rng, 2, 3, 4 );
	const auto c = pi_membership( canonical_representation( sit, random_preference( rng, 4 ) ).problem );
	EXPECT_TRUE( c.additive && c.zero );
	const auto b = pi_membership( *load_sample( "belief.json" ).problem );
	EXPECT_FALSE( b.additive );
	EXPECT_FALSE( b.admits( Index::i2 ) );
	EXPECT_TRUE( b.admits( Index::i4 ) );
	EXPECT_TRUE( b.admits( Index::i1a ) );
	PiMembership only_zero{ true, false, true };
	EXPECT_TRUE( only_zero.admits( Index::i4 ) );
	EXPECT_FALSE( only_zero.admits( Index::i6 ) );
}

TEST( Verify, F1AllIndicesAgree ) {
	const auto report = verify_representation( f1_problem(), all_indices() );
	ASSERT_EQ( report.entries.size(), 7u );
	EXPECT_TRUE( report.all_agree() );
	EXPECT_FALSE( report.axioms_hold );
	EXPECT_FALSE( report.postulates_hold );
}

TEST( Verify, NonTotalCanonicalFailsBothSides ) {
	const auto sit = f1_situation( { "aK", "aL", "aM" } );
	const auto pref = preference_from_names( *sit, { { "aM", "aL" } } );
	const auto report = verify_representation( canonical_representation( sit, pref ).problem, { Index::i1a } );
	ASSERT_EQ( report.entries.size(), 1u );
	EXPECT_FALSE( report.entries[ 0 ].axiom.holds );
	EXPECT_FALSE( report.entries[ 0 ].postulate.holds );
	EXPECT_TRUE( report.all_agree() );
}

TEST( Verify, PiViolationIsAnError ) {
	const auto lp = load_sample( "belief.json" );
	try {
		verify_representation( *lp.problem, { Index::i2 } );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::precondition );
		EXPECT_EQ( std::string( e.what() ), "pi-violation" );
	}
}

TEST( Verify, AxiomFivePostulateFiveDivergeWithoutConstantActs ) {
	// u = 0,1,2,3 and only the mixed acts (c1,c3), (c2,c4): the expected values 1 and 2 are
	// utilities, so the axiom finds a strict pair, but no constant act is available to the postulate
	const auto sit = std::make_shared< const DecisionSituation >( std::vector< std::string >{ "s1", "s2" },
		std::vector< std::string >{ "c1", "c2", "c3", "c4" },
		std::vector< NamedAct >{ { "a", { 0, 2 } }, { "b", { 1, 3 } } } );
	const auto d = eu_problem( sit, ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ), { rv( 0 ), rv( 1 ), rv( 2 ), rv( 3 ) } );
	EXPECT_EQ( geu::geu( d, sit->act( 0 ).map ), rv( 1 ) );
	EXPECT_EQ( geu::geu( d, sit->act( 1 ).map ), rv( 2 ) );
	const auto report = verify_representation( d, { Index::i5 } );
	EXPECT_TRUE( report.entries[ 0 ].axiom.holds );
	EXPECT_FALSE( report.entries[ 0 ].postulate.holds );
	EXPECT_FALSE( report.all_agree() );
	// adding the constant acts restores the equivalence
	const auto full = full_situation( 2, 4 );
	const auto dd = eu_problem( full, ProbabilityWeights( { q( 1, 2 ), q( 1, 2 ) } ), { rv( 0 ), rv( 1 ), rv( 2 ), rv( 3 ) } );
	EXPECT_TRUE( verify_representation( dd, { Index::i5 } ).all_agree() );
}

TEST( Verify, RandomCorpusWitnessesAreGenuine ) {
	std::mt19937_64 rng( 18 );
	for( int trial = 0; trial < 25; ++trial ) {
		const auto sit = random_situation( rng, 1 + rng() % 3, 1 + rng() % 2, 1 + rng() % 6 );
		const auto s = canonical_representation( sit, random_preference( rng, sit->n_acts() ) );
		const auto report = verify_representation( s.problem, all_indices() );
		EXPECT_TRUE( report.all_agree() );
		expect_axiom_witnesses( s.problem );
		expect_postulate_witnesses( *sit, s.provenance, Version::general );
	}
}

TEST( Budget, PartitionLimit ) {
	const auto sit = full_situation( 4, 1 );
	Budgets b;
	b.partitions = 10;
	try {
		check_P( *sit, PreferenceRelation::reflexive( 1 ), Index::i6, Version::general, b );
		FAIL();
	} catch( const Error &e ) {
		EXPECT_EQ( e.kind(), ErrorKind::budget );
	}
}

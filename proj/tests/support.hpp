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

// Fixtures and generators shared by the unit tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <geu/geu.hpp>
#include <geu/io.hpp>

namespace geu::testing {

	inline Rational q( const long n, const long d = 1 ) { return Rational( n ) / Rational( d ); }

	inline Value rv( const long n, const long d = 1 ) { return Value( q( n, d ) ); }

	inline Value pv( const Rational &a, const Rational &b ) { return Value( RationalPair{ a, b } ); }

	inline std::string sample_path( const std::string &name ) { return std::string( GEU_SAMPLES_DIR ) + "/" + name; }

	inline LoadedProblem load_sample( const std::string &name, const Budgets &b = {} ) {
		return load_problem( read_document( sample_path( name ) ), b );
	}

	/** F1 acts: aK=(c1,c1), aL=(c1,c2), aN=(c2,c1), aM=(c2,c2). */
	inline NamedAct f1_act( const std::string &name ) {
		if( name == "aK" ) return NamedAct{ "aK", { 0, 0 } };
		if( name == "aL" ) return NamedAct{ "aL", { 0, 1 } };
		if( name == "aN" ) return NamedAct{ "aN", { 1, 0 } };
		return NamedAct{ "aM", { 1, 1 } };
	}

	inline SituationPtr f1_situation( const std::vector< std::string > &names = { "aK", "aL", "aN", "aM" } ) {
		std::vector< NamedAct > acts;
		for( const auto &n : names ) {
			acts.push_back( f1_act( n ) );
		}
		return std::make_shared< const DecisionSituation >( std::vector< std::string >{ "s1", "s2" },
			std::vector< std::string >{ "c1", "c2" }, std::move( acts ) );
	}

	inline DecisionProblem f1_problem( const SituationPtr &sit ) {
		return DecisionProblem( sit, standard_domain(), { rv( 1 ), rv( 0 ) },
			probability_measure( ProbabilityWeights( { q( 3, 10 ), q( 7, 10 ) } ) ) );
	}

	inline DecisionProblem f1_problem() { return f1_problem( f1_situation() ); }

	inline std::vector< std::string > ids( const std::string &prefix, const std::size_t n ) {
		std::vector< std::string > out;
		for( std::size_t i = 1; i <= n; ++i ) {
			out.push_back( prefix + std::to_string( i ) );
		}
		return out;
	}

	inline SituationPtr full_situation( const std::size_t n, const std::size_t m ) {
		const auto s = ids( "s", n );
		const auto c = ids( "c", m );
		return std::make_shared< const DecisionSituation >( s, c, all_simple_acts( s, c, 1u << 20 ) );
	}

	/** A situation with k distinct acts drawn from C^S (k is clipped to |C|^|S|). */
	inline SituationPtr random_situation( std::mt19937_64 &rng, const std::size_t n, const std::size_t m, std::size_t k ) {
		const auto s = ids( "s", n );
		const auto c = ids( "c", m );
		auto acts = all_simple_acts( s, c, 1u << 20 );
		std::shuffle( acts.begin(), acts.end(), rng );
		k = std::min( k, acts.size() );
		acts.resize( k );
		for( std::size_t i = 0; i < acts.size(); ++i ) {
			acts[ i ].name = "a" + std::to_string( i + 1 );
		}
		return std::make_shared< const DecisionSituation >( s, c, std::move( acts ) );
	}

	/** A reflexive relation with each off-diagonal pair present with probability density. */
	inline PreferenceRelation random_preference( std::mt19937_64 &rng, const std::size_t n, const double density = 0.5 ) {
		std::bernoulli_distribution coin( density );
		PreferenceRelation r = PreferenceRelation::reflexive( n );
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t j = 0; j < n; ++j ) {
				if( i != j && coin( rng ) ) {
					r.set( i, j );
				}
			}
		}
		return r;
	}

	/** Random small-denominator weights summing to 1. */
	inline ProbabilityWeights random_weights( std::mt19937_64 &rng, const std::size_t n ) {
		std::uniform_int_distribution< int > d( 0, 6 );
		std::vector< Rational > w( n );
		Rational total = 0;
		for( auto &x : w ) {
			x = d( rng );
			total += x;
		}
		if( total == 0 ) {
			w[ 0 ] = 1;
			total = 1;
		}
		for( auto &x : w ) {
			x /= total;
		}
		return ProbabilityWeights( w );
	}

	inline std::vector< Value > random_utilities( std::mt19937_64 &rng, const std::size_t m ) {
		std::uniform_int_distribution< int > d( -3, 3 );
		std::vector< Value > u;
		for( std::size_t c = 0; c < m; ++c ) {
			u.emplace_back( Rational( d( rng ) ) );
		}
		return u;
	}

	/** Witness context over a problem; postulate witnesses also need pref. */
	inline WitnessContext context_of( const DecisionProblem &d, const PreferenceRelation *pref = nullptr ) {
		WitnessContext ctx;
		ctx.situation = &d.situation();
		ctx.preference = pref;
		ctx.problem = &d;
		ctx.domain = &d.domain();
		ctx.measure = &d.plausibility();
		return ctx;
	}

	struct Tally {
		std::size_t checked = 0;
		std::size_t violations = 0;
		std::string first;

		void record( const bool ok, const std::string &what ) {
			++checked;
			if( !ok && violations++ == 0 ) {
				first = what;
			}
		}
	};

	/**
	 * For every simple act: restriction/complement split, partition folds,
	 * splice decomposition and the statewise form. Meant for additive problems.
	 */
	inline Tally decomposition_identities( const DecisionProblem &d ) {
		Tally t;
		const auto &e = d.domain();
		const auto &sit = d.situation();
		const std::size_t n = sit.n_states();
		const Subset full = sit.full();
		const auto acts = enumerate_simple_acts( sit, 1u << 16 );
		const auto partitions = partitions_of( full );
		for( const Act &a : acts ) {
			const Value whole = geu( d, a );
			const std::string label = sit.act_label( a );
			t.record( geu_statewise( d, a ) == whole, "statewise " + label );
			for( const Subset x : subsets_lex( n ) ) {
				if( x == 0 || x == full ) {
					continue;
				}
				const Subset xc = complement( x, n );
				t.record( e.oplus( geu_restricted( d, a, x ), geu_restricted( d, a, xc ) ) == whole,
					"split " + label + " on " + render_subset( x ) );
				for( const Act &b : acts ) {
					t.record( geu( d, splice( a, x, b ) ) ==
						e.oplus( geu_restricted( d, a, x ), geu_restricted( d, b, xc ) ),
						"splice " + label + " " + render_subset( x ) + " " + sit.act_label( b ) );
				}
			}
			for( const Partition &p : partitions ) {
				std::vector< Value > parts;
				for( const Subset cell : p ) {
					parts.push_back( geu_restricted( d, a, cell ) );
				}
				t.record( fold_sum( e, parts ) == whole, "partition fold " + label );
			}
		}
		return t;
	}

	/** geu of each constant act equals the embedded utility of its consequence. */
	inline Tally constant_act_law( const DecisionProblem &d ) {
		Tally t;
		const auto &sit = d.situation();
		for( ConsequenceId c = 0; c < sit.n_consequences(); ++c ) {
			t.record( geu( d, constant_act( c, sit.n_states() ) ) == d.domain().embed( d.utility( c ) ),
				"constant " + sit.consequences()[ c ] );
		}
		return t;
	}

	/** Σ_s w(s)·u(a(s)), computed without the library's fold. */
	inline Rational classical_eu( const std::vector< Rational > &w, const std::vector< Rational > &u, const Act &a ) {
		Rational total = 0;
		for( std::size_t s = 0; s < a.size(); ++s ) {
			total += w[ s ] * u[ a[ s ] ];
		}
		return total;
	}

} // end namespace geu::testing

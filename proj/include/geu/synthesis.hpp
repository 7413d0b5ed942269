/*
 *   Copyright 2026 The geu Authors
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

/**
 * @file synthesis.hpp
 *
 * Constructions of decision problems whose induced preference is a given
 * reflexive relation: acts as their own values, the monotonic variant, and
 * a single tagged domain shared by every preference on a situation.
 */

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "decision.hpp"
#include "domain.hpp"
#include "measures.hpp"

namespace geu {

	enum class Construction { thm1, corollary, fixed_domain };

	inline const char * construction_name( const Construction c ) noexcept {
		switch( c ) {
			case Construction::thm1: return "thm1";
			case Construction::corollary: return "corollary";
			case Construction::fixed_domain: return "fixed";
		}
		return "unknown";
	}

	struct SynthesizedProblem {
		DecisionProblem problem;
		Construction construction;
		PreferenceRelation provenance;
		/** Interned id of the preference for the tagged construction. */
		std::optional< std::uint32_t > preference_id;
	};

	/**
	 * Rejects preferences that treat two extensionally equal acts differently;
	 * such preferences have no GEU representation.
	 */
	inline void check_duplicate_obstruction( const DecisionSituation &sit, const PreferenceRelation &pref ) {
		if( pref.size() != sit.n_acts() ) {
			throw Error( ErrorKind::invalid_argument, "preference carrier differs from the act set" );
		}
		if( !sit.has_duplicates() ) {
			return;
		}
		std::vector< std::string > issues;
		const std::size_t n = sit.n_acts();
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t j = i + 1; j < n; ++j ) {
				if( sit.act( i ).map != sit.act( j ).map ) {
					continue;
				}
				for( std::size_t k = 0; k < n; ++k ) {
					if( pref( i, k ) != pref( j, k ) || pref( k, i ) != pref( k, j ) ) {
						issues.push_back( "acts " + sit.act( i ).name + " and " + sit.act( j ).name +
							" denote the same function but are ranked differently against " + sit.act( k ).name );
						break;
					}
				}
			}
		}
		if( !issues.empty() ) {
			throw Error( ErrorKind::duplicate_act, "preference separates extensionally equal acts", issues );
		}
	}

	namespace internal {

		inline std::vector< Value > consequence_utilities( const DecisionSituation &sit ) {
			std::vector< Value > u;
			for( ConsequenceId c = 0; c < sit.n_consequences(); ++c ) {
				u.emplace_back( PairSet::product( sit.full(), c ) );
			}
			return u;
		}

		inline SynthesizedProblem act_value_representation( const SituationPtr &sit, const PreferenceRelation &pref,
			const bool monotonic )
		{
			check_duplicate_obstruction( *sit, pref );
			DecisionProblem d( sit, canonical_domain( sit, pref, monotonic ), consequence_utilities( *sit ),
				identity_measure( *sit ) );
			return SynthesizedProblem{ std::move( d ), monotonic ? Construction::corollary : Construction::thm1, pref,
				std::nullopt };
		}

	} // end namespace internal

	/** Each act is its own value; V is ordered by the preference itself. */
	inline SynthesizedProblem canonical_representation( const SituationPtr &sit, const PreferenceRelation &pref ) {
		return internal::act_value_representation( sit, pref, false );
	}

	/** As canonical_representation, with the valuation order closed under common unions. */
	inline SynthesizedProblem monotonic_representation( const SituationPtr &sit, const PreferenceRelation &pref ) {
		return internal::act_value_representation( sit, pref, true );
	}

	/** The preference-independent part of the tagged construction. */
	struct FixedDomain {
		SituationPtr situation;
		std::shared_ptr< PreferenceRegistry > registry;
		DomainPtr domain;
		PlausibilityMeasure plausibility;

		/** Structural identity of (E, Pl). */
		std::string fingerprint() const { return domain->fingerprint() + "|" + plausibility.fingerprint(); }
	};

	inline FixedDomain fixed_domain( const SituationPtr &sit, std::shared_ptr< PreferenceRegistry > registry = nullptr ) {
		if( !registry ) {
			registry = std::make_shared< PreferenceRegistry >();
		}
		DomainPtr d = tagged_domain( sit, registry );
		return FixedDomain{ sit, std::move( registry ), std::move( d ), identity_measure( *sit ) };
	}

	/** u(c) = (S×{c}, {id}) where id is the interned preference. */
	inline std::vector< Value > utility_for( const FixedDomain &fixed, const PreferenceRelation &pref,
		std::uint32_t *id_out = nullptr )
	{
		check_duplicate_obstruction( *fixed.situation, pref );
		const std::uint32_t id = fixed.registry->intern( pref );
		if( id_out != nullptr ) {
			*id_out = id;
		}
		std::vector< Value > u;
		for( ConsequenceId c = 0; c < fixed.situation->n_consequences(); ++c ) {
			u.emplace_back( Tagged( PairSet::product( fixed.situation->full(), c ), { id } ) );
		}
		return u;
	}

	inline SynthesizedProblem fixed_representation( const FixedDomain &fixed, const PreferenceRelation &pref ) {
		std::uint32_t id = 0;
		auto u = utility_for( fixed, pref, &id );
		DecisionProblem d( fixed.situation, fixed.domain, std::move( u ), fixed.plausibility );
		return SynthesizedProblem{ std::move( d ), Construction::fixed_domain, pref, id };
	}

	/** One term Pl(X) ⊗ u(c) of a mixed expression. */
	struct ExpressionTerm {
		Subset event;
		ConsequenceId consequence;
	};

	namespace internal {

		/** Term lists of length 1..k over pairwise disjoint nonempty events, ascending term index. */
		inline std::vector< std::vector< ExpressionTerm > > disjoint_expressions( const std::size_t n_states,
			const std::size_t n_consequences, const unsigned k )
		{
			std::vector< ExpressionTerm > terms;
			for( const Subset x : subsets_lex( n_states ) ) {
				if( x == 0 ) {
					continue;
				}
				for( ConsequenceId c = 0; c < n_consequences; ++c ) {
					terms.push_back( { x, c } );
				}
			}
			std::vector< std::vector< ExpressionTerm > > out;
			std::vector< ExpressionTerm > cur;
			std::function< void( std::size_t, Subset ) > grow = [ & ]( const std::size_t from, const Subset used ) {
				if( !cur.empty() ) {
					out.push_back( cur );
				}
				if( cur.size() == k ) {
					return;
				}
				for( std::size_t i = from; i < terms.size(); ++i ) {
					if( ( terms[ i ].event & used ) != 0 ) {
						continue;
					}
					cur.push_back( terms[ i ] );
					grow( i + 1, used | terms[ i ].event );
					cur.pop_back();
				}
			};
			grow( 0, 0 );
			return out;
		}

		inline Value evaluate_expression( const DecisionProblem &d, const std::vector< ExpressionTerm > &terms ) {
			std::vector< Value > parts;
			for( const auto &t : terms ) {
				parts.push_back( d.domain().otimes( d.plausibility()( t.event ), d.utility( t.consequence ) ) );
			}
			return fold_sum( d.domain(), parts );
		}

		inline std::vector< Binding > expression_bindings( const std::string &prefix,
			const std::vector< ExpressionTerm > &terms )
		{
			std::vector< Binding > out;
			for( std::size_t i = 0; i < terms.size(); ++i ) {
				out.push_back( { prefix + "X" + std::to_string( i + 1 ), EventBinding{ terms[ i ].event } } );
				out.push_back( { prefix + "c" + std::to_string( i + 1 ), ConsequenceBinding{ terms[ i ].consequence } } );
			}
			return out;
		}

		inline std::vector< ExpressionTerm > expression_from( const CheckResult &r, const std::string &prefix ) {
			std::vector< ExpressionTerm > out;
			for( std::size_t i = 1;; ++i ) {
				const auto *x = r.find( prefix + "X" + std::to_string( i ) );
				const auto *c = r.find( prefix + "c" + std::to_string( i ) );
				if( x == nullptr || c == nullptr ) {
					break;
				}
				out.push_back( { std::get< EventBinding >( *x ).mask, std::get< ConsequenceBinding >( *c ).id } );
			}
			return out;
		}

	} // end namespace internal

	/**
	 * Compares a synthesized act-as-value problem with another representation
	 * of the same preference: plausibility and utility orders, and mixed
	 * expressions ⊕ Pl(X_i)⊗u(c_i) over pairwise disjoint nonempty events
	 * with at most k terms. Every relation of the synthesized problem must
	 * hold in the other one.
	 */
	inline CheckResult minimality_check( const SynthesizedProblem &canon, const DecisionProblem &other, const unsigned k = 3,
		const std::uint64_t budget = std::uint64_t( 1 ) << 22 )
	{
		const DecisionProblem &c = canon.problem;
		const DecisionSituation &sit = c.situation();
		if( other.situation().n_states() != sit.n_states() || other.situation().n_consequences() != sit.n_consequences() ||
			other.situation().n_acts() != sit.n_acts() )
		{
			throw Error( ErrorKind::not_a_representation, "the other problem ranges over a different situation" );
		}
		for( std::size_t i = 0; i < sit.n_acts(); ++i ) {
			if( other.situation().act( i ).map != sit.act( i ).map ) {
				throw Error( ErrorKind::not_a_representation, "the other problem has different acts" );
			}
		}
		if( !( induced_preference( other ) == canon.provenance ) ) {
			throw Error( ErrorKind::not_a_representation, "the other problem does not induce the same preference" );
		}
		CheckResult r{ "minimality" };
		const std::size_t n = sit.n_states();
		const auto order = subsets_lex( n );
		for( const Subset x : order ) {
			for( const Subset y : order ) {
				if( c.domain().leq_p( c.plausibility()( x ), c.plausibility()( y ) ) &&
					!other.domain().leq_p( other.plausibility()( x ), other.plausibility()( y ) ) )
				{
					fail( r, { { "X", EventBinding{ x } }, { "Y", EventBinding{ y } } } );
					return r;
				}
			}
		}
		for( ConsequenceId a = 0; a < sit.n_consequences(); ++a ) {
			for( ConsequenceId b = 0; b < sit.n_consequences(); ++b ) {
				if( c.domain().leq_u( c.utility( a ), c.utility( b ) ) &&
					!other.domain().leq_u( other.utility( a ), other.utility( b ) ) )
				{
					fail( r, { { "c", ConsequenceBinding{ a } }, { "d", ConsequenceBinding{ b } } } );
					return r;
				}
			}
		}
		const auto exprs = internal::disjoint_expressions( n, sit.n_consequences(), k );
		const std::uint64_t pairs = std::uint64_t( exprs.size() ) * exprs.size();
		if( pairs > budget ) {
			throw BudgetExceeded( "mixed-expression comparison", pairs, budget );
		}
		std::vector< Value > canon_values;
		std::vector< Value > other_values;
		for( const auto &e : exprs ) {
			canon_values.push_back( internal::evaluate_expression( c, e ) );
			other_values.push_back( internal::evaluate_expression( other, e ) );
		}
		for( std::size_t i = 0; i < exprs.size(); ++i ) {
			for( std::size_t j = 0; j < exprs.size(); ++j ) {
				if( c.domain().leq_v( canon_values[ i ], canon_values[ j ] ) &&
					!other.domain().leq_v( other_values[ i ], other_values[ j ] ) )
				{
					auto w = internal::expression_bindings( "lhs.", exprs[ i ] );
					const auto rhs = internal::expression_bindings( "rhs.", exprs[ j ] );
					w.insert( w.end(), rhs.begin(), rhs.end() );
					fail( r, std::move( w ) );
					return r;
				}
			}
		}
		r.note = std::to_string( exprs.size() ) + " expressions with at most " + std::to_string( k ) + " terms";
		return r;
	}

} // end namespace geu

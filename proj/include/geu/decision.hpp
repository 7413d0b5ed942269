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
 * @file decision.hpp
 *
 * Decision problems and generalized expected utility.
 */

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "check.hpp"
#include "domain.hpp"
#include "measures.hpp"
#include "situation.hpp"

namespace geu {

	/**
	 * A situation bound to a domain, a utility per consequence and a
	 * plausibility measure. Construction validates the utility values, the
	 * measure against the domain's plausibility order, and (for uncertified
	 * table domains) the domain laws.
	 */
	class DecisionProblem {

		public:

			DecisionProblem( SituationPtr situation, DomainPtr domain, std::vector< Value > utility,
				PlausibilityMeasure plausibility, const std::uint64_t probe_budget = Budgets{}.probes ) :
				sit_( std::move( situation ) ), dom_( std::move( domain ) ), utility_( std::move( utility ) ),
				pl_( std::move( plausibility ) )
			{
				std::vector< std::string > issues;
				if( !sit_ || !dom_ ) {
					throw Error( ErrorKind::invalid_argument, "decision problem needs a situation and a domain" );
				}
				const Naming names = sit_->naming();
				if( utility_.size() != sit_->n_consequences() ) {
					issues.push_back( "utility must assign a value to each of the " +
						std::to_string( sit_->n_consequences() ) + " consequences" );
				} else {
					for( std::size_t c = 0; c < utility_.size(); ++c ) {
						if( !dom_->in_u( utility_[ c ] ) ) {
							issues.push_back( "utility of " + names.consequence( static_cast< ConsequenceId >( c ) ) +
								" is not a utility value: " + render( utility_[ c ], names ) );
						}
					}
				}
				if( pl_.n_states() != sit_->n_states() ) {
					issues.push_back( "plausibility measure ranges over a different state set" );
				} else {
					const DomainPlausibilityOrder against( dom_ );
					for( const auto &c : validate_measure( pl_, &against ).checks ) {
						if( !c.holds ) {
							std::string w;
							for( const auto &b : c.witness ) {
								if( const auto *ev = std::get_if< EventBinding >( &b.value ) ) {
									w += " " + b.var + "=" + render_subset( ev->mask, names );
								} else if( const auto *v = std::get_if< Value >( &b.value ) ) {
									w += " " + b.var + "=" + render( *v, names );
								}
							}
							issues.push_back( "plausibility measure fails " + c.name + ":" + w );
						}
					}
				}
				if( !dom_->flags().laws_certified ) {
					for( const auto &c : validate_domain( *dom_, probe_budget ).checks ) {
						if( !c.holds ) {
							issues.push_back( "domain fails " + c.name );
						}
					}
				}
				if( !issues.empty() ) {
					throw Error( ErrorKind::validation, "invalid decision problem", issues );
				}
			}

			const DecisionSituation &situation() const noexcept { return *sit_; }
			const SituationPtr &situation_ptr() const noexcept { return sit_; }
			const ExpectationDomain &domain() const noexcept { return *dom_; }
			const DomainPtr &domain_ptr() const noexcept { return dom_; }
			const std::vector< Value > &utility() const noexcept { return utility_; }
			const Value &utility( const ConsequenceId c ) const { return utility_.at( c ); }
			const PlausibilityMeasure &plausibility() const noexcept { return pl_; }

			Naming naming() const {
				Naming n = dom_->naming();
				n.states = sit_->states();
				n.consequences = sit_->consequences();
				return n;
			}

		private:

			SituationPtr sit_;
			DomainPtr dom_;
			std::vector< Value > utility_;
			PlausibilityMeasure pl_;

	};

	/** u_a(s) = u(a(s)). */
	inline std::vector< Value > utility_rv( const DecisionProblem &d, const Act &a ) {
		std::vector< Value > out;
		out.reserve( a.size() );
		for( const ConsequenceId c : a ) {
			if( c >= d.utility().size() ) {
				throw Error( ErrorKind::invalid_argument, "act reaches a consequence without a utility" );
			}
			out.push_back( d.utility( c ) );
		}
		return out;
	}

	/**
	 * ⊕ over x in u_a(Z) of Pl(u_a⁻¹(x) ∩ Z) ⊗ x, folding in ascending value
	 * order.
	 */
	inline Value geu_restricted( const DecisionProblem &d, const Act &a, const Subset z ) {
		if( z == 0 ) {
			throw Error( ErrorKind::invalid_argument, "restriction to the empty event" );
		}
		if( a.size() != d.situation().n_states() ) {
			throw Error( ErrorKind::invalid_argument, "act is not total on the states" );
		}
		const auto rv = utility_rv( d, a );
		std::map< Value, Subset > preimage;
		for( const StateId s : members( z ) ) {
			preimage[ rv[ s ] ] |= Subset( 1 ) << s;
		}
		std::vector< Value > terms;
		terms.reserve( preimage.size() );
		for( const auto &[ x, cell ] : preimage ) {
			terms.push_back( d.domain().otimes( d.plausibility()( cell ), x ) );
		}
		return fold_sum( d.domain(), terms );
	}

	inline Value geu( const DecisionProblem &d, const Act &a ) {
		return geu_restricted( d, a, d.situation().full() );
	}

	/** ⊕ over states of Pl({s}) ⊗ u_a(s), in state order. */
	inline Value geu_statewise( const DecisionProblem &d, const Act &a ) {
		const auto rv = utility_rv( d, a );
		std::vector< Value > terms;
		for( std::size_t s = 0; s < rv.size(); ++s ) {
			terms.push_back( d.domain().otimes( d.plausibility()( Subset( 1 ) << s ), rv[ s ] ) );
		}
		return fold_sum( d.domain(), terms );
	}

	/** Instance of the additivity law; true when it holds. */
	inline bool additive_instance( const DecisionProblem &d, const ConsequenceId c, const Subset x, const Subset y ) {
		const auto &e = d.domain();
		const auto &pl = d.plausibility();
		const Value &u = d.utility( c );
		return e.otimes( pl( x | y ), u ) == e.oplus( e.otimes( pl( x ), u ), e.otimes( pl( y ), u ) );
	}

	/** Pl(X∪Y)⊗u(c) = Pl(X)⊗u(c) ⊕ Pl(Y)⊗u(c) for all c and disjoint nonempty X, Y. */
	inline CheckResult is_additive( const DecisionProblem &d ) {
		CheckResult r{ "additive" };
		const std::size_t n = d.situation().n_states();
		const auto order = subsets_lex( n );
		for( ConsequenceId c = 0; c < d.situation().n_consequences(); ++c ) {
			for( const Subset x : order ) {
				if( x == 0 ) {
					continue;
				}
				for( const Subset y : order ) {
					if( y == 0 || ( x & y ) != 0 ) {
						continue;
					}
					if( !additive_instance( d, c, x, y ) ) {
						fail( r, { { "c", ConsequenceBinding{ c } }, { "X", EventBinding{ x } }, { "Y", EventBinding{ y } } } );
						return r;
					}
				}
			}
		}
		return r;
	}

	/** GEU values of all acts in A, in act order. */
	inline std::vector< Value > geu_all( const DecisionProblem &d ) {
		std::vector< Value > out;
		for( const auto &a : d.situation().acts() ) {
			out.push_back( geu( d, a.map ) );
		}
		return out;
	}

	/** a1 ≾ a2 iff geu(a1) ≾_V geu(a2). */
	inline PreferenceRelation induced_preference( const DecisionProblem &d ) {
		const auto values = geu_all( d );
		const std::size_t n = values.size();
		PreferenceRelation r( n );
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t j = 0; j < n; ++j ) {
				r.set( i, j, d.domain().leq_v( values[ i ], values[ j ] ) );
			}
		}
		return r;
	}

	/** {geu_restricted(a, X) : a ∈ A}, sorted and structurally deduplicated. */
	inline std::vector< Value > ev_set( const DecisionProblem &d, const Subset x ) {
		std::set< Value > out;
		for( const auto &a : d.situation().acts() ) {
			out.insert( geu_restricted( d, a.map, x ) );
		}
		return { out.begin(), out.end() };
	}

	/** Every simple act whose GEU lies in E(S) belongs to A. */
	inline CheckResult is_whole( const DecisionProblem &d, const std::uint64_t budget = Budgets{}.acts ) {
		CheckResult r{ "whole" };
		const auto acts = enumerate_simple_acts( d.situation(), budget );
		const auto es = ev_set( d, d.situation().full() );
		const std::set< Value > attained( es.begin(), es.end() );
		for( const Act &a : acts ) {
			if( !d.situation().contains( a ) && attained.count( geu( d, a ) ) != 0 ) {
				fail( r, { { "a", ActBinding{ a } } } );
				break;
			}
		}
		return r;
	}

	/** u on S, v on ∅, Pl(X)⊗u ⊕ Pl(X^c)⊗v otherwise; the result lies in V. */
	inline Value ulotto( const DecisionProblem &d, const Value &u, const Subset x, const Value &v ) {
		const Subset full = d.situation().full();
		const auto &e = d.domain();
		if( x == full ) {
			return e.embed( u );
		}
		if( x == 0 ) {
			return e.embed( v );
		}
		const auto &pl = d.plausibility();
		return e.oplus( e.otimes( pl( x ), u ), e.otimes( pl( complement( x, d.situation().n_states() ) ), v ) );
	}

} // end namespace geu

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
 * @file algebra.hpp
 *
 * Law checking for expectation domains and the ⊕-fold.
 *
 * Finite carriers are checked exhaustively when the instance count fits the
 * probe budget. Otherwise a domain with analytically certified laws is
 * sampled, and an uncertified (table) domain raises BudgetExceeded.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "check.hpp"
#include "domain.hpp"
#include "errors.hpp"

namespace geu {

	/** Left fold by ⊕. An empty sequence yields the certified identity, if any. */
	inline Value fold_sum( const ExpectationDomain &e, const std::vector< Value > &terms ) {
		if( terms.empty() ) {
			if( const auto id = e.certified_identity() ) {
				return *id;
			}
			throw Error( ErrorKind::empty_fold, "fold over an empty sequence in a domain without a certified identity" );
		}
		Value acc = terms.front();
		for( std::size_t i = 1; i < terms.size(); ++i ) {
			acc = e.oplus( acc, terms[ i ] );
		}
		return acc;
	}

	namespace internal {

		inline std::uint64_t saturating_pow( const std::uint64_t base, const unsigned exp ) {
			std::uint64_t out = 1;
			for( unsigned i = 0; i < exp; ++i ) {
				if( base != 0 && out > UINT64_MAX / base ) {
					return UINT64_MAX;
				}
				out *= base;
			}
			return out;
		}

		/**
		 * Probe tuples of arity k drawn from one carrier: every tuple when the
		 * carrier is listable and |carrier|^k ≤ budget, otherwise budget random
		 * tuples. Sets exhaustive accordingly; throws for uncertified domains
		 * that cannot be checked exhaustively.
		 */
		template< typename Enumerate, typename Sample >
		std::vector< std::vector< Value > > probe_tuples( const ExpectationDomain &e, const unsigned k,
			const std::uint64_t budget, Enumerate &&enumerate, Sample &&sample, Rng &rng, bool &exhaustive,
			const char *what )
		{
			std::vector< std::vector< Value > > out;
			const std::optional< std::vector< Value > > carrier = enumerate( budget );
			if( carrier && !carrier->empty() ) {
				const std::uint64_t count = saturating_pow( carrier->size(), k );
				if( count <= budget ) {
					exhaustive = true;
					std::vector< std::size_t > idx( k, 0 );
					for( std::uint64_t n = 0; n < count; ++n ) {
						std::vector< Value > t;
						for( const std::size_t i : idx ) {
							t.push_back( ( *carrier )[ i ] );
						}
						out.push_back( std::move( t ) );
						for( std::size_t pos = k; pos-- > 0; ) {
							if( ++idx[ pos ] < carrier->size() ) {
								break;
							}
							idx[ pos ] = 0;
						}
					}
					return out;
				}
				if( !e.flags().laws_certified ) {
					throw BudgetExceeded( std::string( "exhaustive check of " ) + what, count, budget );
				}
			} else if( !e.flags().laws_certified ) {
				throw Error( ErrorKind::unsupported, std::string( "cannot enumerate carrier for " ) + what );
			}
			exhaustive = false;
			for( std::uint64_t n = 0; n < budget; ++n ) {
				std::vector< Value > t;
				for( unsigned i = 0; i < k; ++i ) {
					t.push_back( sample( rng ) );
				}
				out.push_back( std::move( t ) );
			}
			return out;
		}

		inline std::string probe_note( const ExpectationDomain &e, const bool exhaustive, const std::size_t n ) {
			if( exhaustive ) {
				return "exhaustive over " + std::to_string( n ) + " instances";
			}
			return std::string( e.flags().laws_certified ? "certified" : "uncertified" ) + " " +
				domain_kind_name( e.kind() ) + " law; " + std::to_string( n ) + " sampled probes";
		}

		struct Probes {
			const ExpectationDomain &e;
			std::uint64_t budget;
			Rng &rng;

			std::vector< std::vector< Value > > v( const unsigned k, bool &exh ) const {
				return probe_tuples( e, k, budget,
					[ & ]( std::uint64_t lim ) { return e.enumerate_v( lim ); },
					[ & ]( Rng &r ) { return e.sample_v( r ); }, rng, exh, "the valuation carrier" );
			}
			std::vector< std::vector< Value > > u( const unsigned k, bool &exh ) const {
				return probe_tuples( e, k, budget,
					[ & ]( std::uint64_t lim ) { return e.enumerate_u( lim ); },
					[ & ]( Rng &r ) { return e.sample_u( r ); }, rng, exh, "the utility carrier" );
			}
			std::vector< std::vector< Value > > p( const unsigned k, bool &exh ) const {
				return probe_tuples( e, k, budget,
					[ & ]( std::uint64_t lim ) { return e.enumerate_p( lim ); },
					[ & ]( Rng &r ) { return e.sample_p( r ); }, rng, exh, "the plausibility carrier" );
			}
		};

		/** (p, u, x) probes mixing two carriers. */
		inline std::vector< std::pair< Value, Value > > mixed_probes( const std::vector< std::vector< Value > > &left,
			const std::vector< std::vector< Value > > &right, const std::uint64_t budget, Rng &rng, bool &exhaustive )
		{
			std::vector< std::pair< Value, Value > > out;
			if( exhaustive && left.size() * right.size() <= budget ) {
				for( const auto &a : left ) {
					for( const auto &b : right ) {
						out.emplace_back( a[ 0 ], b[ 0 ] );
					}
				}
				return out;
			}
			exhaustive = false;
			for( std::uint64_t n = 0; n < budget && !left.empty() && !right.empty(); ++n ) {
				out.emplace_back( left[ rng() % left.size() ][ 0 ], right[ rng() % right.size() ][ 0 ] );
			}
			return out;
		}

	} // end namespace internal

	/**
	 * E1–E4, closure of the operations, reflexivity of the U and V orders,
	 * the partial-order structure of P and its bounds.
	 */
	inline ValidationReport validate_domain( const ExpectationDomain &e, const std::uint64_t probe_budget = Budgets{}.probes,
		const std::uint64_t seed = 0x5eed )
	{
		Rng rng( seed );
		const internal::Probes probes{ e, probe_budget, rng };
		ValidationReport report;
		bool exh = false;

		{
			CheckResult r{ "E1" };
			const auto t = probes.v( 3, exh );
			for( const auto &x : t ) {
				if( !( e.oplus( e.oplus( x[ 0 ], x[ 1 ] ), x[ 2 ] ) == e.oplus( x[ 0 ], e.oplus( x[ 1 ], x[ 2 ] ) ) ) ) {
					fail( r, { { "x", x[ 0 ] }, { "y", x[ 1 ] }, { "z", x[ 2 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, exh, t.size() );
			report.checks.push_back( r );
		}
		{
			CheckResult r{ "E2" };
			const auto t = probes.v( 2, exh );
			for( const auto &x : t ) {
				if( !( e.oplus( x[ 0 ], x[ 1 ] ) == e.oplus( x[ 1 ], x[ 0 ] ) ) ) {
					fail( r, { { "x", x[ 0 ] }, { "y", x[ 1 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, exh, t.size() );
			report.checks.push_back( r );
		}
		const auto us = probes.u( 1, exh );
		const bool u_exhaustive = exh;
		{
			CheckResult r{ "E3" };
			for( const auto &u : us ) {
				if( !( e.otimes( e.top(), u[ 0 ] ) == e.embed( u[ 0 ] ) ) ) {
					fail( r, { { "u", u[ 0 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, u_exhaustive, us.size() );
			report.checks.push_back( r );
		}
		{
			CheckResult r{ "E4" };
			const auto t = probes.u( 2, exh );
			for( const auto &x : t ) {
				if( !e.in_v( e.embed( x[ 0 ] ) ) ) {
					fail( r, { { "u1", x[ 0 ] } } );
					break;
				}
				if( e.leq_u( x[ 0 ], x[ 1 ] ) != e.leq_v( e.embed( x[ 0 ] ), e.embed( x[ 1 ] ) ) ) {
					fail( r, { { "u1", x[ 0 ] }, { "u2", x[ 1 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, exh, t.size() );
			report.checks.push_back( r );
		}
		{
			CheckResult r{ "U-reflexive" };
			for( const auto &u : us ) {
				if( !e.leq_u( u[ 0 ], u[ 0 ] ) ) {
					fail( r, { { "u", u[ 0 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, u_exhaustive, us.size() );
			report.checks.push_back( r );
		}
		const auto vs = probes.v( 1, exh );
		const bool v_exhaustive = exh;
		{
			CheckResult r{ "V-reflexive" };
			for( const auto &v : vs ) {
				if( !e.leq_v( v[ 0 ], v[ 0 ] ) ) {
					fail( r, { { "x", v[ 0 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, v_exhaustive, vs.size() );
			report.checks.push_back( r );
		}
		const auto ps = probes.p( 1, exh );
		const bool p_exhaustive = exh;
		{
			CheckResult r{ "P-partial-order" };
			const auto t = probes.p( 3, exh );
			for( const auto &x : t ) {
				const bool ab = e.leq_p( x[ 0 ], x[ 1 ] );
				const bool ba = e.leq_p( x[ 1 ], x[ 0 ] );
				if( !e.leq_p( x[ 0 ], x[ 0 ] ) ) {
					fail( r, { { "p", x[ 0 ] } } );
					break;
				}
				if( ab && ba && !( x[ 0 ] == x[ 1 ] ) ) {
					fail( r, { { "p", x[ 0 ] }, { "q", x[ 1 ] } } );
					break;
				}
				if( ab && e.leq_p( x[ 1 ], x[ 2 ] ) && !e.leq_p( x[ 0 ], x[ 2 ] ) ) {
					fail( r, { { "p", x[ 0 ] }, { "q", x[ 1 ] }, { "r", x[ 2 ] } } );
					break;
				}
			}
			r.note = internal::probe_note( e, exh, t.size() );
			report.checks.push_back( r );
		}
		{
			CheckResult r{ "P-bounds" };
			if( !e.in_p( e.bottom() ) ) {
				fail( r, { { "bottom", e.bottom() } } );
			} else if( !e.in_p( e.top() ) ) {
				fail( r, { { "top", e.top() } } );
			} else {
				for( const auto &p : ps ) {
					if( !e.leq_p( e.bottom(), p[ 0 ] ) || !e.leq_p( p[ 0 ], e.top() ) ) {
						fail( r, { { "p", p[ 0 ] } } );
						break;
					}
				}
			}
			r.note = internal::probe_note( e, p_exhaustive, ps.size() );
			report.checks.push_back( r );
		}
		{
			CheckResult r{ "closure" };
			bool mexh = p_exhaustive && u_exhaustive;
			const auto pu = internal::mixed_probes( ps, us, probe_budget, rng, mexh );
			for( const auto &[ p, u ] : pu ) {
				if( !e.in_v( e.otimes( p, u ) ) ) {
					fail( r, { { "p", p }, { "u", u } } );
					break;
				}
			}
			if( r.holds ) {
				const auto t = probes.v( 2, exh );
				for( const auto &x : t ) {
					if( !e.in_v( e.oplus( x[ 0 ], x[ 1 ] ) ) ) {
						fail( r, { { "x", x[ 0 ] }, { "y", x[ 1 ] } } );
						break;
					}
				}
				mexh = mexh && exh;
			}
			r.note = internal::probe_note( e, mexh, pu.size() );
			report.checks.push_back( r );
		}
		return report;
	}

	/** Whether x ≾ y implies x⊕z ≾ y⊕z on every given triple. */
	inline CheckResult is_monotonic( const ExpectationDomain &e, const std::vector< std::array< Value, 3 > > &probe_set ) {
		CheckResult r{ "monotonic" };
		for( const auto &t : probe_set ) {
			if( e.leq_v( t[ 0 ], t[ 1 ] ) && !e.leq_v( e.oplus( t[ 0 ], t[ 2 ] ), e.oplus( t[ 1 ], t[ 2 ] ) ) ) {
				fail( r, { { "x", t[ 0 ] }, { "y", t[ 1 ] }, { "z", t[ 2 ] } } );
				break;
			}
		}
		r.note = std::to_string( probe_set.size() ) + " probed triples";
		return r;
	}

	/** Triples over V: all of them when they fit the budget, otherwise sampled. */
	inline std::vector< std::array< Value, 3 > > monotonicity_probes( const ExpectationDomain &e,
		const std::uint64_t budget = Budgets{}.probes, const std::uint64_t seed = 0x5eed )
	{
		Rng rng( seed );
		bool exh = false;
		const auto t = internal::Probes{ e, budget, rng }.v( 3, exh );
		std::vector< std::array< Value, 3 > > out;
		out.reserve( t.size() );
		for( const auto &x : t ) {
			out.push_back( { x[ 0 ], x[ 1 ], x[ 2 ] } );
		}
		return out;
	}

	/**
	 * Whether (⊥⊗u)⊕x = x for all probed u and x. On success the identity
	 * element is reported.
	 */
	inline CheckResult has_oplus_identity( const ExpectationDomain &e, const std::uint64_t budget = Budgets{}.probes,
		const std::uint64_t seed = 0x5eed )
	{
		Rng rng( seed );
		const internal::Probes probes{ e, budget, rng };
		CheckResult r{ "oplus-identity" };
		bool uexh = false;
		bool vexh = false;
		const auto us = probes.u( 1, uexh );
		const auto vs = probes.v( 1, vexh );
		bool exh = uexh && vexh;
		const auto pairs = internal::mixed_probes( us, vs, budget, rng, exh );
		for( const auto &[ u, x ] : pairs ) {
			if( !( e.oplus( e.otimes( e.bottom(), u ), x ) == x ) ) {
				fail( r, { { "u", u }, { "x", x } } );
				break;
			}
		}
		if( r.holds && !us.empty() ) {
			r.element = e.otimes( e.bottom(), us.front()[ 0 ] );
		}
		r.note = internal::probe_note( e, exh, pairs.size() );
		return r;
	}

	/**
	 * p⊗(u1⊕u2) = (p⊗u1)⊕(p⊗u2), evaluated only where u1⊕u2 lies in U;
	 * other probes count as vacuous.
	 */
	inline CheckResult check_distributivity( const ExpectationDomain &e, const std::uint64_t budget = Budgets{}.probes,
		const std::uint64_t seed = 0x5eed )
	{
		Rng rng( seed );
		const internal::Probes probes{ e, budget, rng };
		CheckResult r{ "distributivity" };
		bool uexh = false;
		bool pexh = false;
		const auto uu = probes.u( 2, uexh );
		const auto ps = probes.p( 1, pexh );
		std::size_t count = 0;
		for( const auto &u : uu ) {
			const Value w = e.oplus( e.embed( u[ 0 ] ), e.embed( u[ 1 ] ) );
			const auto uw = e.as_utility( w );
			if( !uw ) {
				++r.vacuous;
				continue;
			}
			const auto check = [ & ]( const Value &p ) {
				++count;
				return e.otimes( p, *uw ) == e.oplus( e.otimes( p, u[ 0 ] ), e.otimes( p, u[ 1 ] ) );
			};
			bool ok = true;
			if( pexh && uexh ) {
				for( const auto &p : ps ) {
					if( !check( p[ 0 ] ) ) {
						fail( r, { { "p", p[ 0 ] }, { "u1", u[ 0 ] }, { "u2", u[ 1 ] } } );
						ok = false;
						break;
					}
				}
			} else {
				const Value &p = ps[ rng() % ps.size() ][ 0 ];
				if( !check( p ) ) {
					fail( r, { { "p", p }, { "u1", u[ 0 ] }, { "u2", u[ 1 ] } } );
					ok = false;
				}
			}
			if( !ok ) {
				break;
			}
		}
		r.note = internal::probe_note( e, pexh && uexh, count ) + "; " + std::to_string( r.vacuous ) +
			" utility pairs skipped (sum outside U)";
		return r;
	}

} // end namespace geu

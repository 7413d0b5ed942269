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
 * @file witness.hpp
 *
 * Re-evaluation of failed checks. A witness is substituted back into the
 * formula it claims to violate and the formula is evaluated afresh, sharing
 * only the instance predicates with the checker.
 */

#pragma once

#include <algorithm>
#include <string>

#include "algebra.hpp"
#include "check.hpp"
#include "decision.hpp"
#include "measures.hpp"
#include "savage.hpp"
#include "synthesis.hpp"

namespace geu {

	/** Whatever a witness may refer to. Unused members stay null. */
	struct WitnessContext {
		const DecisionSituation *situation = nullptr;
		const PreferenceRelation *preference = nullptr;
		const DecisionProblem *problem = nullptr;
		const ExpectationDomain *domain = nullptr;
		const PlausibilityMeasure *measure = nullptr;
		/** Order a measure was validated against; the measure's own order if null. */
		const PlausibilityOrder *plausibility_order = nullptr;
		/** The synthesized side of a minimality comparison; problem is the other side. */
		const SynthesizedProblem *canon = nullptr;
	};

	namespace internal {

		template< typename T >
		const T &need( const T *p, const std::string &what ) {
			if( p == nullptr ) {
				throw Error( ErrorKind::invalid_argument, "witness context lacks " + what );
			}
			return *p;
		}

		/** Index in A of an act binding, or -1. */
		inline long act_index( const DecisionSituation &sit, const CheckResult &r, const std::string &var ) {
			const auto i = sit.find( r.get< ActBinding >( var ).map );
			return i ? static_cast< long >( *i ) : -1;
		}

		inline bool contains_value( const std::vector< Value > &set, const Value &v ) {
			return std::binary_search( set.begin(), set.end(), v );
		}

		inline bool postulate_violation( const CheckResult &r, const WitnessContext &ctx ) {
			const auto &sit = need( ctx.situation, "a situation" );
			const PostulateFrame f( sit, need( ctx.preference, "a preference" ) );
			const auto idx = parse_index( r.name.substr( 1 ) );
			const auto ev = [ & ]( const std::string &v ) { return r.get< EventBinding >( v ).mask; };
			const auto cons = [ & ]( const std::string &v ) { return r.get< ConsequenceBinding >( v ).id; };
			const auto act = [ & ]( const std::string &v ) { return act_index( sit, r, v ); };
			switch( *idx ) {
				case Index::i1a: {
					const long a1 = act( "a1" ), a2 = act( "a2" );
					return a1 >= 0 && a2 >= 0 && f.p1a( a1, a2 ) == Instance::fails;
				}
				case Index::i1b: {
					const long a1 = act( "a1" ), a2 = act( "a2" ), a3 = act( "a3" );
					return a1 >= 0 && a2 >= 0 && a3 >= 0 && f.p1b( a1, a2, a3 ) == Instance::fails;
				}
				case Index::i2: {
					const long a1 = act( "a1" ), a2 = act( "a2" ), b1 = act( "b1" ), b2 = act( "b2" );
					return a1 >= 0 && a2 >= 0 && b1 >= 0 && b2 >= 0 &&
						f.p2( ev( "X" ), a1, a2, b1, b2 ) == Instance::fails;
				}
				case Index::i3: {
					const long a1 = act( "a1" ), a2 = act( "a2" );
					return a1 >= 0 && a2 >= 0 && f.p3_antecedent( ev( "X" ), a1, a2 ) &&
						f.p3_consequent( ev( "X" ), cons( "c1" ), cons( "c2" ) ) == Instance::fails;
				}
				case Index::i4:
					return f.p4( ev( "X1" ), ev( "X2" ), cons( "c1" ), cons( "d1" ), cons( "c2" ), cons( "d2" ) ) ==
						Instance::fails;
				case Index::i5:
					for( ConsequenceId c1 = 0; c1 < sit.n_consequences(); ++c1 ) {
						for( ConsequenceId c2 = 0; c2 < sit.n_consequences(); ++c2 ) {
							if( f.p5_pair( c1, c2 ) ) {
								return false;
							}
						}
					}
					return true;
				case Index::i6: {
					const long a = act( "a" ), b = act( "b" );
					return a >= 0 && b >= 0 && f.p6( a, b, cons( "c" ) ) == Instance::fails;
				}
			}
			return false;
		}

		inline bool axiom_violation( const CheckResult &r, const WitnessContext &ctx ) {
			const auto &d = need( ctx.problem, "a decision problem" );
			const AxiomFrame f( d );
			const auto idx = parse_index( r.name.substr( 1 ) );
			const auto val = [ & ]( const std::string &v ) -> const Value & { return r.get< Value >( v ); };
			const auto ev = [ & ]( const std::string &v ) { return r.get< EventBinding >( v ).mask; };
			const auto in_es = [ & ]( const std::string &v ) { return f.in_es( val( v ) ); };
			const auto in_ran = [ & ]( const std::string &v ) { return contains_value( f.ran(), val( v ) ); };
			const auto proper = [ & ]( const Subset x ) { return x != 0 && x != f.full(); };
			switch( *idx ) {
				case Index::i1a:
					return in_es( "x" ) && in_es( "y" ) && f.a1a( val( "x" ), val( "y" ) ) == Instance::fails;
				case Index::i1b:
					return in_es( "x" ) && in_es( "y" ) && in_es( "z" ) &&
						f.a1b( val( "x" ), val( "y" ), val( "z" ) ) == Instance::fails;
				case Index::i2: {
					const Subset x = ev( "X" );
					if( !proper( x ) ) {
						return false;
					}
					const auto &ex = f.ev( x );
					const auto &ey = f.ev( f.comp( x ) );
					return contains_value( ex, val( "x1" ) ) && contains_value( ex, val( "x2" ) ) &&
						contains_value( ey, val( "y1" ) ) && contains_value( ey, val( "y2" ) ) &&
						f.a2( val( "x1" ), val( "x2" ), val( "y1" ), val( "y2" ) ) == Instance::fails;
				}
				case Index::i3: {
					const Subset x = ev( "X" );
					if( !proper( x ) ) {
						return false;
					}
					const auto &ex = f.ev( x );
					return contains_value( ex, val( "x1" ) ) && contains_value( ex, val( "x2" ) ) &&
						in_ran( "u1" ) && in_ran( "u2" ) && f.a3_antecedent( x, val( "x1" ), val( "x2" ) ) &&
						f.a3_consequent( x, val( "u1" ), val( "u2" ) ) == Instance::fails;
				}
				case Index::i4:
					return in_ran( "u1" ) && in_ran( "v1" ) && in_ran( "u2" ) && in_ran( "v2" ) &&
						f.a4( ev( "X1" ), ev( "X2" ), val( "u1" ), val( "v1" ), val( "u2" ), val( "v2" ) ) == Instance::fails;
				case Index::i5:
					for( const Value &u1 : f.ran() ) {
						for( const Value &u2 : f.ran() ) {
							if( f.a5_pair( u1, u2 ) ) {
								return false;
							}
						}
					}
					return true;
				case Index::i6: {
					const long a = act_index( d.situation(), r, "a" );
					const long b = act_index( d.situation(), r, "b" );
					const ConsequenceId c = r.get< ConsequenceBinding >( "c" ).id;
					return a >= 0 && b >= 0 && d.utility( c ) == val( "u" ) && f.value( a, f.full() ) == val( "x" ) &&
						f.value( b, f.full() ) == val( "y" ) && f.a6( a, b, val( "u" ) ) == Instance::fails;
				}
			}
			return false;
		}

		inline bool domain_violation( const CheckResult &r, const ExpectationDomain &e ) {
			const auto val = [ & ]( const std::string &v ) -> const Value & { return r.get< Value >( v ); };
			const auto has = [ & ]( const std::string &v ) { return r.find( v ) != nullptr; };
			const std::string &n = r.name;
			if( n == "E1" ) {
				const Value &x = val( "x" ), &y = val( "y" ), &z = val( "z" );
				return !( e.oplus( e.oplus( x, y ), z ) == e.oplus( x, e.oplus( y, z ) ) );
			}
			if( n == "E2" ) {
				return !( e.oplus( val( "x" ), val( "y" ) ) == e.oplus( val( "y" ), val( "x" ) ) );
			}
			if( n == "E3" ) {
				return !( e.otimes( e.top(), val( "u" ) ) == e.embed( val( "u" ) ) );
			}
			if( n == "E4" ) {
				if( !has( "u2" ) ) {
					return !e.in_v( e.embed( val( "u1" ) ) );
				}
				return e.leq_u( val( "u1" ), val( "u2" ) ) != e.leq_v( e.embed( val( "u1" ) ), e.embed( val( "u2" ) ) );
			}
			if( n == "U-reflexive" ) {
				return !e.leq_u( val( "u" ), val( "u" ) );
			}
			if( n == "V-reflexive" ) {
				return !e.leq_v( val( "x" ), val( "x" ) );
			}
			if( n == "P-partial-order" ) {
				if( has( "r" ) ) {
					return e.leq_p( val( "p" ), val( "q" ) ) && e.leq_p( val( "q" ), val( "r" ) ) &&
						!e.leq_p( val( "p" ), val( "r" ) );
				}
				if( has( "q" ) ) {
					return e.leq_p( val( "p" ), val( "q" ) ) && e.leq_p( val( "q" ), val( "p" ) ) && !( val( "p" ) == val( "q" ) );
				}
				return !e.leq_p( val( "p" ), val( "p" ) );
			}
			if( n == "P-bounds" ) {
				if( has( "bottom" ) ) {
					return !e.in_p( val( "bottom" ) );
				}
				if( has( "top" ) ) {
					return !e.in_p( val( "top" ) );
				}
				return !e.leq_p( e.bottom(), val( "p" ) ) || !e.leq_p( val( "p" ), e.top() );
			}
			if( n == "closure" ) {
				if( has( "p" ) ) {
					return !e.in_v( e.otimes( val( "p" ), val( "u" ) ) );
				}
				return !e.in_v( e.oplus( val( "x" ), val( "y" ) ) );
			}
			if( n == "monotonic" ) {
				const Value &x = val( "x" ), &y = val( "y" ), &z = val( "z" );
				return e.leq_v( x, y ) && !e.leq_v( e.oplus( x, z ), e.oplus( y, z ) );
			}
			if( n == "oplus-identity" ) {
				return !( e.oplus( e.otimes( e.bottom(), val( "u" ) ), val( "x" ) ) == val( "x" ) );
			}
			if( n == "distributivity" ) {
				const auto w = e.as_utility( e.oplus( e.embed( val( "u1" ) ), e.embed( val( "u2" ) ) ) );
				return w && !( e.otimes( val( "p" ), *w ) ==
					e.oplus( e.otimes( val( "p" ), val( "u1" ) ), e.otimes( val( "p" ), val( "u2" ) ) ) );
			}
			throw Error( ErrorKind::unsupported, "no re-evaluation for check " + n );
		}

		inline bool measure_violation( const CheckResult &r, const WitnessContext &ctx ) {
			const auto &pl = need( ctx.measure, "a plausibility measure" );
			const PlausibilityOrder &ord = ctx.plausibility_order ? *ctx.plausibility_order : pl.order();
			const Subset x = r.get< EventBinding >( "X" ).mask;
			if( r.name == "Pl-carrier" ) {
				return !ord.contains( pl( x ) );
			}
			if( r.name == "Pl1" ) {
				return x == 0 && !( pl( 0 ) == ord.bottom() );
			}
			if( r.name == "Pl2" ) {
				return x == full_subset( pl.n_states() ) && !( pl( x ) == ord.top() );
			}
			const Subset y = r.get< EventBinding >( "Y" ).mask;
			return is_subset( x, y ) && !ord.leq( pl( x ), pl( y ) );
		}

		inline bool minimality_violation( const CheckResult &r, const WitnessContext &ctx ) {
			const auto &c = need( ctx.canon, "the synthesized problem" ).problem;
			const auto &o = need( ctx.problem, "the other representation" );
			if( r.find( "Y" ) != nullptr ) {
				const Subset x = r.get< EventBinding >( "X" ).mask;
				const Subset y = r.get< EventBinding >( "Y" ).mask;
				return c.domain().leq_p( c.plausibility()( x ), c.plausibility()( y ) ) &&
					!o.domain().leq_p( o.plausibility()( x ), o.plausibility()( y ) );
			}
			if( r.find( "d" ) != nullptr ) {
				const ConsequenceId a = r.get< ConsequenceBinding >( "c" ).id;
				const ConsequenceId b = r.get< ConsequenceBinding >( "d" ).id;
				return c.domain().leq_u( c.utility( a ), c.utility( b ) ) && !o.domain().leq_u( o.utility( a ), o.utility( b ) );
			}
			const auto lhs = expression_from( r, "lhs." );
			const auto rhs = expression_from( r, "rhs." );
			Subset used = 0;
			for( const auto &t : lhs ) {
				if( t.event == 0 || ( used & t.event ) != 0 ) {
					return false;
				}
				used |= t.event;
			}
			used = 0;
			for( const auto &t : rhs ) {
				if( t.event == 0 || ( used & t.event ) != 0 ) {
					return false;
				}
				used |= t.event;
			}
			return !lhs.empty() && !rhs.empty() &&
				c.domain().leq_v( evaluate_expression( c, lhs ), evaluate_expression( c, rhs ) ) &&
				!o.domain().leq_v( evaluate_expression( o, lhs ), evaluate_expression( o, rhs ) );
		}

	} // end namespace internal

	/**
	 * Whether the witness of a failed check, substituted back into the formula
	 * named by the check, evaluates to false. Holding results have no witness
	 * and yield false.
	 */
	inline bool witness_is_violation( const CheckResult &r, const WitnessContext &ctx ) {
		if( r.holds ) {
			return false;
		}
		const std::string &n = r.name;
		if( n.size() >= 2 && ( n[ 0 ] == 'P' || n[ 0 ] == 'A' ) && parse_index( n.substr( 1 ) ) ) {
			if( n[ 0 ] == 'P' ) {
				return internal::postulate_violation( r, ctx );
			}
			return internal::axiom_violation( r, ctx );
		}
		if( n == "Pl-carrier" || n == "Pl1" || n == "Pl2" || n == "Pl3" ) {
			return internal::measure_violation( r, ctx );
		}
		if( n == "additive" ) {
			const auto &d = internal::need( ctx.problem, "a decision problem" );
			const Subset x = r.get< EventBinding >( "X" ).mask;
			const Subset y = r.get< EventBinding >( "Y" ).mask;
			return x != 0 && y != 0 && ( x & y ) == 0 &&
				!additive_instance( d, r.get< ConsequenceBinding >( "c" ).id, x, y );
		}
		if( n == "whole" ) {
			const auto &d = internal::need( ctx.problem, "a decision problem" );
			const Act &a = r.get< ActBinding >( "a" ).map;
			return !d.situation().contains( a ) && internal::contains_value( ev_set( d, d.situation().full() ), geu( d, a ) );
		}
		if( n == "null" ) {
			const auto &sit = internal::need( ctx.situation, "a situation" );
			const auto cp = conditional_preference( sit, internal::need( ctx.preference, "a preference" ),
				r.get< EventBinding >( "X" ).mask );
			const long a1 = internal::act_index( sit, r, "a1" );
			const long a2 = internal::act_index( sit, r, "a2" );
			if( a1 < 0 || a2 < 0 ) {
				return false;
			}
			return r.version == Version::special ? !cp( a1, a2 ) : cp( a1, a2 ) != cp( a2, a1 );
		}
		if( n == "minimality" ) {
			return internal::minimality_violation( r, ctx );
		}
		const ExpectationDomain *e = ctx.domain;
		if( e == nullptr && ctx.problem != nullptr ) {
			e = &ctx.problem->domain();
		}
		return internal::domain_violation( r, internal::need( e, "an expectation domain" ) );
	}

} // end namespace geu

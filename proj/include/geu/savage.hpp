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
 * @file savage.hpp
 *
 * Decision procedures for Savage's postulates P1–P6 on a situation with a
 * preference, and for their counterparts A1–A6 on decision problems.
 *
 * Every postulate and axiom is evaluated in its guarded form: membership
 * conditions such as "if the splice lies in A" are checked explicitly and an
 * instance whose guard fails is skipped and counted as vacuous. When A is the
 * set of all simple acts the guards always hold, so the special version is
 * the guarded evaluator run after asserting A = C^S.
 *
 * Each formula is split into an outer quantifier loop and an instance
 * predicate. The predicates are public so that a witness can be substituted
 * back and re-evaluated.
 */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "check.hpp"
#include "decision.hpp"
#include "errors.hpp"
#include "situation.hpp"
#include "subset.hpp"

namespace geu {

	/** Postulate/axiom index shared by P_i and A_i. */
	enum class Index { i1a, i1b, i2, i3, i4, i5, i6 };

	inline const std::vector< Index > &all_indices() {
		static const std::vector< Index > all{ Index::i1a, Index::i1b, Index::i2, Index::i3, Index::i4, Index::i5, Index::i6 };
		return all;
	}

	inline const char * index_name( const Index i ) noexcept {
		switch( i ) {
			case Index::i1a: return "1a";
			case Index::i1b: return "1b";
			case Index::i2: return "2";
			case Index::i3: return "3";
			case Index::i4: return "4";
			case Index::i5: return "5";
			case Index::i6: return "6";
		}
		return "?";
	}

	inline std::optional< Index > parse_index( const std::string &s ) {
		for( const Index i : all_indices() ) {
			if( s == index_name( i ) || s == std::string( "P" ) + index_name( i ) ||
				s == std::string( "A" ) + index_name( i ) )
			{
				return i;
			}
		}
		return std::nullopt;
	}

	/** Outcome of one quantifier instance. */
	enum class Instance { holds, fails, vacuous };

	/**
	 * A situation with a preference on A, plus splice lookup.
	 * Act operands are indices into A; constant acts are addressed by
	 * consequence and may lie outside A.
	 */
	class PostulateFrame {

		public:

			static constexpr long absent = -1;

			PostulateFrame( const DecisionSituation &sit, const PreferenceRelation &pref ) :
				sit_( sit ), pref_( pref ), n_( sit.n_states() ), full_( sit.full() ), order_( subsets_lex( n_ ) )
			{
				if( pref_.size() != sit_.n_acts() ) {
					throw Error( ErrorKind::invalid_argument, "preference carrier differs from the act set" );
				}
				for( ConsequenceId c = 0; c < sit_.n_consequences(); ++c ) {
					const auto i = sit_.find( constant_act( c, n_ ) );
					constants_.push_back( i ? static_cast< long >( *i ) : absent );
				}
				const std::uint64_t m = sit_.n_acts();
				if( n_ < 24 && ( std::uint64_t( 1 ) << n_ ) * m * m <= ( std::uint64_t( 1 ) << 22 ) ) {
					cache_.assign( ( std::size_t( 1 ) << n_ ) * m * m, unknown );
				}
			}

			const DecisionSituation &situation() const noexcept { return sit_; }
			const PreferenceRelation &preference() const noexcept { return pref_; }
			std::size_t n_acts() const noexcept { return sit_.n_acts(); }
			std::size_t n_consequences() const noexcept { return sit_.n_consequences(); }
			Subset full() const noexcept { return full_; }
			/** All subsets of S in canonical order. */
			const std::vector< Subset > &subsets() const noexcept { return order_; }

			const Act &act( const std::size_t i ) const { return sit_.act( i ).map; }

			/** Index in A of the constant act on c, or absent. */
			long constant( const ConsequenceId c ) const { return constants_[ c ]; }

			long find( const Act &a ) const {
				const auto i = sit_.find( a );
				return i ? static_cast< long >( *i ) : absent;
			}

			/** Index in A of (a_i, X, a_j), or absent. */
			long splice_index( const std::size_t i, const Subset x, const std::size_t j ) const {
				if( cache_.empty() ) {
					return find( splice( act( i ), x, act( j ) ) );
				}
				const std::size_t m = sit_.n_acts();
				long &slot = cache_[ ( static_cast< std::size_t >( x ) * m + i ) * m + j ];
				if( slot == unknown ) {
					slot = find( splice( act( i ), x, act( j ) ) );
				}
				return slot;
			}

			/** Index in A of (c, X, a_j) for a constant act on c. */
			long splice_constant( const ConsequenceId c, const Subset x, const std::size_t j ) const {
				return find( splice( constant_act( c, n_ ), x, act( j ) ) );
			}

			bool leq( const long i, const long j ) const { return pref_( i, j ); }
			bool strict( const long i, const long j ) const { return pref_.strict( i, j ); }

			// ---- instance predicates, one per formula --------------------------------

			Instance p1a( const std::size_t a1, const std::size_t a2 ) const {
				return leq( a1, a2 ) || leq( a2, a1 ) ? Instance::holds : Instance::fails;
			}

			Instance p1b( const std::size_t a1, const std::size_t a2, const std::size_t a3 ) const {
				return !( leq( a1, a2 ) && leq( a2, a3 ) ) || leq( a1, a3 ) ? Instance::holds : Instance::fails;
			}

			Instance p2( const Subset x, const std::size_t a1, const std::size_t a2, const std::size_t b1,
				const std::size_t b2 ) const
			{
				const long s11 = splice_index( a1, x, b1 );
				const long s21 = splice_index( a2, x, b1 );
				const long s12 = splice_index( a1, x, b2 );
				const long s22 = splice_index( a2, x, b2 );
				if( s11 == absent || s21 == absent || s12 == absent || s22 == absent ) {
					return Instance::vacuous;
				}
				return leq( s11, s21 ) == leq( s12, s22 ) ? Instance::holds : Instance::fails;
			}

			/** Antecedent of P3 at X for the pair (a1, a2). */
			bool p3_antecedent( const Subset x, const std::size_t a1, const std::size_t a2 ) const {
				bool some_b0 = false;
				for( std::size_t b = 0; b < n_acts(); ++b ) {
					const long s1 = splice_index( a1, x, b );
					const long s2 = splice_index( a2, x, b );
					if( s1 == absent || s2 == absent ) {
						continue;
					}
					some_b0 = true;
					if( !strict( s1, s2 ) ) {
						return false;
					}
				}
				return some_b0;
			}

			/** First (a1, a2) satisfying the P3 antecedent at X. */
			std::optional< std::pair< std::size_t, std::size_t > > p3_antecedent_witness( const Subset x ) const {
				for( std::size_t a1 = 0; a1 < n_acts(); ++a1 ) {
					for( std::size_t a2 = 0; a2 < n_acts(); ++a2 ) {
						if( p3_antecedent( x, a1, a2 ) ) {
							return std::make_pair( a1, a2 );
						}
					}
				}
				return std::nullopt;
			}

			/** Consequent of P3 at X for consequences (c1, c2). */
			Instance p3_consequent( const Subset x, const ConsequenceId c1, const ConsequenceId c2 ) const {
				const long k1 = constant( c1 );
				const long k2 = constant( c2 );
				if( k1 == absent || k2 == absent ) {
					return Instance::vacuous;
				}
				const bool lhs = leq( k1, k2 );
				bool some_b0 = false;
				bool all = true;
				for( std::size_t b = 0; b < n_acts(); ++b ) {
					const long s1 = splice_index( static_cast< std::size_t >( k1 ), x, b );
					const long s2 = splice_index( static_cast< std::size_t >( k2 ), x, b );
					if( s1 == absent || s2 == absent ) {
						continue;
					}
					some_b0 = true;
					if( !leq( s1, s2 ) ) {
						all = false;
						break;
					}
				}
				return lhs == ( some_b0 && all ) ? Instance::holds : Instance::fails;
			}

			Instance p4( const Subset x1, const Subset x2, const ConsequenceId c1, const ConsequenceId d1,
				const ConsequenceId c2, const ConsequenceId d2 ) const
			{
				const long kc1 = constant( c1 );
				const long kd1 = constant( d1 );
				const long kc2 = constant( c2 );
				const long kd2 = constant( d2 );
				if( kc1 == absent || kd1 == absent || kc2 == absent || kd2 == absent ) {
					return Instance::vacuous;
				}
				if( !( strict( kd1, kc1 ) && strict( kd2, kc2 ) ) ) {
					return Instance::holds;
				}
				const auto sp = [ & ]( const long c, const Subset x, const long d ) {
					return splice_index( static_cast< std::size_t >( c ), x, static_cast< std::size_t >( d ) );
				};
				const long s11 = sp( kc1, x1, kd1 );
				const long s12 = sp( kc1, x2, kd1 );
				const long s21 = sp( kc2, x1, kd2 );
				const long s22 = sp( kc2, x2, kd2 );
				if( s11 == absent || s12 == absent || s21 == absent || s22 == absent ) {
					return Instance::vacuous;
				}
				return leq( s11, s12 ) == leq( s21, s22 ) ? Instance::holds : Instance::fails;
			}

			/** The existential body of P5 for one pair. */
			bool p5_pair( const ConsequenceId c1, const ConsequenceId c2 ) const {
				const long k1 = constant( c1 );
				const long k2 = constant( c2 );
				return k1 != absent && k2 != absent && strict( k1, k2 );
			}

			/** The condition a P6 partition must meet on one cell Z. */
			bool p6_cell( const std::size_t a, const std::size_t b, const ConsequenceId c, const Subset z ) const {
				const long sa = splice_constant( c, z, a );
				const long sb = splice_constant( c, z, b );
				return ( sa == absent || strict( sa, static_cast< long >( b ) ) ) &&
					( sb == absent || strict( static_cast< long >( a ), sb ) );
			}

			bool p6_partition( const std::size_t a, const std::size_t b, const ConsequenceId c, const Partition &z ) const {
				for( const Subset cell : z ) {
					if( !p6_cell( a, b, c, cell ) ) {
						return false;
					}
				}
				return true;
			}

			/** P6 at (a, b, c): if a ≺ b, some partition qualifies. */
			Instance p6( const std::size_t a, const std::size_t b, const ConsequenceId c ) const {
				if( !strict( a, b ) ) {
					return Instance::holds;
				}
				std::map< Subset, bool > good;
				const bool none = for_each_partition( full_, [ & ]( const Partition &z ) {
					for( const Subset cell : z ) {
						auto it = good.find( cell );
						if( it == good.end() ) {
							it = good.emplace( cell, p6_cell( a, b, c, cell ) ).first;
						}
						if( !it->second ) {
							return true;
						}
					}
					return false;
				} );
				return none ? Instance::fails : Instance::holds;
			}

		private:

			static constexpr long unknown = -2;

			const DecisionSituation &sit_;
			const PreferenceRelation &pref_;
			std::size_t n_;
			Subset full_;
			std::vector< Subset > order_;
			std::vector< long > constants_;
			mutable std::vector< long > cache_;

	};

	namespace internal {

		inline ActBinding act_binding( const PostulateFrame &f, const std::size_t i ) { return ActBinding{ f.act( i ) }; }

		inline void require_special( const DecisionSituation &sit, const Version v ) {
			if( v == Version::special && !sit.has_all_simple_acts() ) {
				throw Error( ErrorKind::special_version_mismatch,
					"the special version requires A to be the set of all simple acts" );
			}
		}

		inline void require_partition_budget( const std::size_t n, const Budgets &b ) {
			const std::uint64_t bell = bell_number( n );
			if( bell > b.partitions ) {
				throw BudgetExceeded( "partition enumeration", bell, b.partitions );
			}
		}

	} // end namespace internal

	/** Savage's postulate P_which on (A, ≾). */
	inline CheckResult check_P( const DecisionSituation &sit, const PreferenceRelation &pref, const Index which,
		const Version version = Version::general, const Budgets &budgets = {} )
	{
		internal::require_special( sit, version );
		const PostulateFrame f( sit, pref );
		CheckResult r{ std::string( "P" ) + index_name( which ), version };
		const std::size_t m = f.n_acts();
		const std::size_t k = f.n_consequences();
		const auto ab = [ & ]( const std::size_t i ) { return internal::act_binding( f, i ); };

		switch( which ) {
			case Index::i1a:
				for( std::size_t a1 = 0; a1 < m; ++a1 ) {
					for( std::size_t a2 = 0; a2 < m; ++a2 ) {
						if( f.p1a( a1, a2 ) == Instance::fails ) {
							fail( r, { { "a1", ab( a1 ) }, { "a2", ab( a2 ) } } );
							return r;
						}
					}
				}
				return r;
			case Index::i1b:
				for( std::size_t a1 = 0; a1 < m; ++a1 ) {
					for( std::size_t a2 = 0; a2 < m; ++a2 ) {
						for( std::size_t a3 = 0; a3 < m; ++a3 ) {
							if( f.p1b( a1, a2, a3 ) == Instance::fails ) {
								fail( r, { { "a1", ab( a1 ) }, { "a2", ab( a2 ) }, { "a3", ab( a3 ) } } );
								return r;
							}
						}
					}
				}
				return r;
			case Index::i2:
				for( const Subset x : f.subsets() ) {
					for( std::size_t a1 = 0; a1 < m; ++a1 ) {
						for( std::size_t a2 = 0; a2 < m; ++a2 ) {
							for( std::size_t b1 = 0; b1 < m; ++b1 ) {
								for( std::size_t b2 = 0; b2 < m; ++b2 ) {
									const Instance in = f.p2( x, a1, a2, b1, b2 );
									if( in == Instance::vacuous ) {
										++r.vacuous;
									} else if( in == Instance::fails ) {
										fail( r, { { "X", EventBinding{ x } }, { "a1", ab( a1 ) }, { "a2", ab( a2 ) },
											{ "b1", ab( b1 ) }, { "b2", ab( b2 ) } } );
										return r;
									}
								}
							}
						}
					}
				}
				return r;
			case Index::i3:
				for( const Subset x : f.subsets() ) {
					const auto ante = f.p3_antecedent_witness( x );
					if( !ante ) {
						continue;
					}
					for( ConsequenceId c1 = 0; c1 < k; ++c1 ) {
						for( ConsequenceId c2 = 0; c2 < k; ++c2 ) {
							const Instance in = f.p3_consequent( x, c1, c2 );
							if( in == Instance::vacuous ) {
								++r.vacuous;
							} else if( in == Instance::fails ) {
								fail( r, { { "X", EventBinding{ x } }, { "a1", ab( ante->first ) }, { "a2", ab( ante->second ) },
									{ "c1", ConsequenceBinding{ c1 } }, { "c2", ConsequenceBinding{ c2 } } } );
								return r;
							}
						}
					}
				}
				return r;
			case Index::i4:
				for( const Subset x1 : f.subsets() ) {
					for( const Subset x2 : f.subsets() ) {
						for( ConsequenceId c1 = 0; c1 < k; ++c1 ) {
							for( ConsequenceId d1 = 0; d1 < k; ++d1 ) {
								for( ConsequenceId c2 = 0; c2 < k; ++c2 ) {
									for( ConsequenceId d2 = 0; d2 < k; ++d2 ) {
										const Instance in = f.p4( x1, x2, c1, d1, c2, d2 );
										if( in == Instance::vacuous ) {
											++r.vacuous;
										} else if( in == Instance::fails ) {
											fail( r, { { "X1", EventBinding{ x1 } }, { "X2", EventBinding{ x2 } },
												{ "c1", ConsequenceBinding{ c1 } }, { "d1", ConsequenceBinding{ d1 } },
												{ "c2", ConsequenceBinding{ c2 } }, { "d2", ConsequenceBinding{ d2 } } } );
											return r;
										}
									}
								}
							}
						}
					}
				}
				return r;
			case Index::i5:
				for( ConsequenceId c1 = 0; c1 < k; ++c1 ) {
					for( ConsequenceId c2 = 0; c2 < k; ++c2 ) {
						if( f.p5_pair( c1, c2 ) ) {
							return r;
						}
					}
				}
				// an existential has no violating instance; the empty witness records that
				fail( r, {} );
				return r;
			case Index::i6:
				internal::require_partition_budget( sit.n_states(), budgets );
				for( std::size_t a = 0; a < m; ++a ) {
					for( std::size_t b = 0; b < m; ++b ) {
						if( !f.strict( a, b ) ) {
							continue;
						}
						for( ConsequenceId c = 0; c < k; ++c ) {
							if( f.p6( a, b, c ) == Instance::fails ) {
								fail( r, { { "a", ab( a ) }, { "b", ab( b ) }, { "c", ConsequenceBinding{ c } } } );
								return r;
							}
						}
					}
				}
				return r;
		}
		return r;
	}

	/**
	 * a1 ≾^X a2 iff some a ∈ A has both splices (a_i, X, a) in A, and every
	 * such a gives (a1, X, a) ≾ (a2, X, a).
	 */
	inline PreferenceRelation conditional_preference( const DecisionSituation &sit, const PreferenceRelation &pref,
		const Subset x )
	{
		const PostulateFrame f( sit, pref );
		const std::size_t m = f.n_acts();
		PreferenceRelation out( m );
		for( std::size_t a1 = 0; a1 < m; ++a1 ) {
			for( std::size_t a2 = 0; a2 < m; ++a2 ) {
				bool some = false;
				bool all = true;
				for( std::size_t a = 0; a < m && all; ++a ) {
					const long s1 = f.splice_index( a1, x, a );
					const long s2 = f.splice_index( a2, x, a );
					if( s1 == PostulateFrame::absent || s2 == PostulateFrame::absent ) {
						continue;
					}
					some = true;
					all = f.leq( s1, s2 );
				}
				out.set( a1, a2, some && all );
			}
		}
		return out;
	}

	/**
	 * Whether X is null. The general version asks that ≾^X be symmetric,
	 * the special version that it relate every pair.
	 */
	inline CheckResult is_null( const DecisionSituation &sit, const PreferenceRelation &pref, const Subset x,
		const Version version = Version::general )
	{
		const PreferenceRelation cp = conditional_preference( sit, pref, x );
		CheckResult r{ "null", version };
		for( std::size_t a1 = 0; a1 < cp.size(); ++a1 ) {
			for( std::size_t a2 = 0; a2 < cp.size(); ++a2 ) {
				const bool ok = version == Version::general ? cp( a1, a2 ) == cp( a2, a1 ) : cp( a1, a2 );
				if( !ok ) {
					fail( r, { { "X", EventBinding{ x } }, { "a1", ActBinding{ sit.act( a1 ).map } },
						{ "a2", ActBinding{ sit.act( a2 ).map } } } );
					return r;
				}
			}
		}
		return r;
	}

	/**
	 * X ≾_S Y iff for all c, d with a_c, a_d ∈ A, a_d ≺ a_c and both splices
	 * (c, X, d), (c, Y, d) in A: (c, X, d) ≾ (c, Y, d). Indexed by subset mask.
	 */
	inline BinaryRelation likelihood_relation( const DecisionSituation &sit, const PreferenceRelation &pref ) {
		const PostulateFrame f( sit, pref );
		const std::size_t size = std::size_t( 1 ) << sit.n_states();
		BinaryRelation out( size );
		for( Subset x = 0; x < size; ++x ) {
			for( Subset y = 0; y < size; ++y ) {
				bool ok = true;
				for( ConsequenceId c = 0; c < f.n_consequences() && ok; ++c ) {
					for( ConsequenceId d = 0; d < f.n_consequences() && ok; ++d ) {
						const long kc = f.constant( c );
						const long kd = f.constant( d );
						if( kc == PostulateFrame::absent || kd == PostulateFrame::absent || !f.strict( kd, kc ) ) {
							continue;
						}
						const long sx = f.splice_index( kc, x, kd );
						const long sy = f.splice_index( kc, y, kd );
						if( sx == PostulateFrame::absent || sy == PostulateFrame::absent ) {
							continue;
						}
						ok = f.leq( sx, sy );
					}
				}
				out.set( x, y, ok );
			}
		}
		return out;
	}

	/**
	 * A decision problem with its restricted values E(X) materialized:
	 * value(i, X) = GEU of act i restricted to X, for every nonempty X.
	 */
	class AxiomFrame {

		public:

			explicit AxiomFrame( const DecisionProblem &d ) :
				d_( d ), e_( d.domain() ), n_( d.situation().n_states() ), full_( d.situation().full() ),
				order_( subsets_lex( n_ ) )
			{
				const std::size_t m = d.situation().n_acts();
				const std::size_t size = std::size_t( 1 ) << n_;
				values_.assign( m, std::vector< Value >( size ) );
				ev_.assign( size, {} );
				for( std::size_t i = 0; i < m; ++i ) {
					for( Subset x = 1; x < size; ++x ) {
						values_[ i ][ x ] = geu_restricted( d, d.situation().act( i ).map, x );
					}
				}
				for( Subset x = 1; x < size; ++x ) {
					std::set< Value > s;
					for( std::size_t i = 0; i < m; ++i ) {
						s.insert( values_[ i ][ x ] );
					}
					ev_[ x ].assign( s.begin(), s.end() );
				}
				es_.insert( ev_[ full_ ].begin(), ev_[ full_ ].end() );
				std::set< Value > ran( d.utility().begin(), d.utility().end() );
				ran_.assign( ran.begin(), ran.end() );
				for( const Value &u : ran_ ) {
					embedded_.push_back( e_.embed( u ) );
				}
			}

			const DecisionProblem &problem() const noexcept { return d_; }
			const ExpectationDomain &domain() const noexcept { return e_; }
			Subset full() const noexcept { return full_; }
			std::size_t n_states() const noexcept { return n_; }
			const std::vector< Subset > &subsets() const noexcept { return order_; }

			/** E(X) for nonempty X, sorted. */
			const std::vector< Value > &ev( const Subset x ) const { return ev_[ x ]; }
			const std::vector< Value > &es() const { return ev_[ full_ ]; }
			bool in_es( const Value &v ) const { return es_.count( v ) != 0; }

			/** ran(u), sorted and deduplicated. */
			const std::vector< Value > &ran() const noexcept { return ran_; }

			/** GEU of act i restricted to nonempty x. */
			const Value &value( const std::size_t i, const Subset x ) const { return values_[ i ][ x ]; }

			Subset comp( const Subset x ) const noexcept { return complement( x, n_ ); }

			bool leq( const Value &a, const Value &b ) const { return e_.leq_v( a, b ); }
			bool strict( const Value &a, const Value &b ) const { return e_.strict_v( a, b ); }
			Value plus( const Value &a, const Value &b ) const { return e_.oplus( a, b ); }
			Value embed( const Value &u ) const { return e_.embed( u ); }

			// ---- instance predicates ---------------------------------------------------

			Instance a1a( const Value &x, const Value &y ) const {
				return leq( x, y ) || leq( y, x ) ? Instance::holds : Instance::fails;
			}

			Instance a1b( const Value &x, const Value &y, const Value &z ) const {
				return !( leq( x, y ) && leq( y, z ) ) || leq( x, z ) ? Instance::holds : Instance::fails;
			}

			Instance a2( const Value &x1, const Value &x2, const Value &y1, const Value &y2 ) const {
				const Value s11 = plus( x1, y1 );
				const Value s21 = plus( x2, y1 );
				const Value s12 = plus( x1, y2 );
				const Value s22 = plus( x2, y2 );
				if( !in_es( s11 ) || !in_es( s21 ) || !in_es( s12 ) || !in_es( s22 ) ) {
					return Instance::vacuous;
				}
				return leq( s11, s21 ) == leq( s12, s22 ) ? Instance::holds : Instance::fails;
			}

			/** Antecedent of A3 at X for (x1, x2) drawn from E(X). */
			bool a3_antecedent( const Subset x, const Value &x1, const Value &x2 ) const {
				bool some_y0 = false;
				for( const Value &y : ev( comp( x ) ) ) {
					const Value s1 = plus( x1, y );
					const Value s2 = plus( x2, y );
					if( !in_es( s1 ) || !in_es( s2 ) ) {
						continue;
					}
					some_y0 = true;
					if( !strict( s1, s2 ) ) {
						return false;
					}
				}
				return some_y0;
			}

			std::optional< std::pair< Value, Value > > a3_antecedent_witness( const Subset x ) const {
				for( const Value &x1 : ev( x ) ) {
					for( const Value &x2 : ev( x ) ) {
						if( a3_antecedent( x, x1, x2 ) ) {
							return std::make_pair( x1, x2 );
						}
					}
				}
				return std::nullopt;
			}

			/** Consequent of A3 at X for utility values (u1, u2). */
			Instance a3_consequent( const Subset x, const Value &u1, const Value &u2 ) const {
				const Value e1 = embed( u1 );
				const Value e2 = embed( u2 );
				if( !in_es( e1 ) || !in_es( e2 ) ) {
					return Instance::vacuous;
				}
				const bool lhs = leq( e1, e2 );
				const Value pl = d_.plausibility()( x );
				const Value t1 = e_.otimes( pl, u1 );
				const Value t2 = e_.otimes( pl, u2 );
				bool some_y0 = false;
				bool all = true;
				for( const Value &y : ev( comp( x ) ) ) {
					const Value s1 = plus( t1, y );
					const Value s2 = plus( t2, y );
					if( !in_es( s1 ) || !in_es( s2 ) ) {
						continue;
					}
					some_y0 = true;
					if( !leq( s1, s2 ) ) {
						all = false;
						break;
					}
				}
				return lhs == ( some_y0 && all ) ? Instance::holds : Instance::fails;
			}

			Instance a4( const Subset x1, const Subset x2, const Value &u1, const Value &v1, const Value &u2,
				const Value &v2 ) const
			{
				if( !in_es( embed( u1 ) ) || !in_es( embed( v1 ) ) || !in_es( embed( u2 ) ) || !in_es( embed( v2 ) ) ) {
					return Instance::vacuous;
				}
				if( !( strict( embed( v1 ), embed( u1 ) ) && strict( embed( v2 ), embed( u2 ) ) ) ) {
					return Instance::holds;
				}
				const Value l11 = ulotto( d_, u1, x1, v1 );
				const Value l12 = ulotto( d_, u1, x2, v1 );
				const Value l21 = ulotto( d_, u2, x1, v2 );
				const Value l22 = ulotto( d_, u2, x2, v2 );
				if( !in_es( l11 ) || !in_es( l12 ) || !in_es( l21 ) || !in_es( l22 ) ) {
					return Instance::vacuous;
				}
				return leq( l11, l12 ) == leq( l21, l22 ) ? Instance::holds : Instance::fails;
			}

			bool a5_pair( const Value &u1, const Value &u2 ) const {
				const Value e1 = embed( u1 );
				const Value e2 = embed( u2 );
				return in_es( e1 ) && in_es( e2 ) && strict( e1, e2 );
			}

			/**
			 * Whether partition z meets the A6 body for acts a, b (values x, y)
			 * and utility u.
			 */
			bool a6_partition( const std::size_t a, const std::size_t b, const Value &u, const Partition &z ) const {
				const Value &x = value( a, full_ );
				const Value &y = value( b, full_ );
				std::vector< Value > xs;
				std::vector< Value > ys;
				for( const Subset cell : z ) {
					xs.push_back( value( a, cell ) );
					ys.push_back( value( b, cell ) );
				}
				if( !( fold_sum( e_, xs ) == x ) || !( fold_sum( e_, ys ) == y ) ) {
					return false;
				}
				for( std::size_t k = 0; k < z.size(); ++k ) {
					const Value head = e_.otimes( d_.plausibility()( z[ k ] ), u );
					std::vector< Value > lx{ head };
					std::vector< Value > ly{ head };
					for( std::size_t i = 0; i < z.size(); ++i ) {
						if( i != k ) {
							lx.push_back( xs[ i ] );
							ly.push_back( ys[ i ] );
						}
					}
					const Value wx = fold_sum( e_, lx );
					const Value wy = fold_sum( e_, ly );
					if( in_es( wx ) && !strict( wx, y ) ) {
						return false;
					}
					if( in_es( wy ) && !strict( x, wy ) ) {
						return false;
					}
				}
				return true;
			}

			/** A6 at acts (a, b) and utility u: if x ≺ y, some partition qualifies. */
			Instance a6( const std::size_t a, const std::size_t b, const Value &u ) const {
				if( !strict( value( a, full_ ), value( b, full_ ) ) ) {
					return Instance::holds;
				}
				const bool none = for_each_partition( full_, [ & ]( const Partition &z ) {
					return !a6_partition( a, b, u, z );
				} );
				return none ? Instance::fails : Instance::holds;
			}

		private:

			const DecisionProblem &d_;
			const ExpectationDomain &e_;
			std::size_t n_;
			Subset full_;
			std::vector< Subset > order_;
			std::vector< std::vector< Value > > values_;
			std::vector< std::vector< Value > > ev_;
			std::set< Value > es_;
			std::vector< Value > ran_;
			std::vector< Value > embedded_;

	};

	struct PiMembership {
		bool all = true;
		bool additive = false;
		bool zero = false;

		/** Whether the problem lies in the class required for index i. */
		bool admits( const Index i ) const {
			switch( i ) {
				case Index::i1a:
				case Index::i1b:
				case Index::i5:
					return all;
				case Index::i4:
					return zero;
				case Index::i2:
				case Index::i3:
				case Index::i6:
					return additive && zero;
			}
			return false;
		}

		/** Name of the class required for index i. */
		static const char * required( const Index i ) {
			switch( i ) {
				case Index::i1a:
				case Index::i1b:
				case Index::i5:
					return "Pi_all";
				case Index::i4:
					return "Pi_0";
				default:
					return "Pi_add and Pi_0";
			}
		}
	};

	/** Π_add is additivity; Π_0 is A = C^S or wholeness. */
	inline PiMembership pi_membership( const DecisionProblem &d, const Budgets &budgets = {} ) {
		PiMembership p;
		p.additive = is_additive( d ).holds;
		p.zero = d.situation().has_all_simple_acts() || is_whole( d, budgets.acts ).holds;
		return p;
	}

	namespace internal {

		inline void require_axiom_classes( const DecisionProblem &d, const Index which, const Version version ) {
			require_special( d.situation(), version );
			const bool needs_add = which == Index::i2 || which == Index::i3 || which == Index::i6;
			const bool needs_zero = needs_add || which == Index::i4;
			if( needs_add && !is_additive( d ).holds ) {
				throw Error( ErrorKind::precondition, std::string( "A" ) + index_name( which ) +
					" requires an additive problem (Pi_add)" );
			}
			if( needs_zero && version == Version::general && !d.situation().has_all_simple_acts() &&
				!is_whole( d ).holds )
			{
				throw Error( ErrorKind::precondition, std::string( "A" ) + index_name( which ) +
					" requires a whole problem or A = C^S (Pi_0)" );
			}
		}

	} // end namespace internal

	/** Axiom A_which on the problem, evaluated on a prepared frame. */
	inline CheckResult check_A( const AxiomFrame &f, const Index which, const Version version = Version::general,
		const Budgets &budgets = {} )
	{
		CheckResult r{ std::string( "A" ) + index_name( which ), version };
		const auto &es = f.es();
		const auto &ran = f.ran();
		const auto &d = f.problem();

		switch( which ) {
			case Index::i1a:
				for( const Value &x : es ) {
					for( const Value &y : es ) {
						if( f.a1a( x, y ) == Instance::fails ) {
							fail( r, { { "x", x }, { "y", y } } );
							return r;
						}
					}
				}
				return r;
			case Index::i1b:
				for( const Value &x : es ) {
					for( const Value &y : es ) {
						for( const Value &z : es ) {
							if( f.a1b( x, y, z ) == Instance::fails ) {
								fail( r, { { "x", x }, { "y", y }, { "z", z } } );
								return r;
							}
						}
					}
				}
				return r;
			case Index::i2:
				for( const Subset x : f.subsets() ) {
					if( x == 0 || x == f.full() ) {
						continue;
					}
					const auto &ex = f.ev( x );
					const auto &ey = f.ev( f.comp( x ) );
					for( const Value &x1 : ex ) {
						for( const Value &x2 : ex ) {
							for( const Value &y1 : ey ) {
								for( const Value &y2 : ey ) {
									const Instance in = f.a2( x1, x2, y1, y2 );
									if( in == Instance::vacuous ) {
										++r.vacuous;
									} else if( in == Instance::fails ) {
										fail( r, { { "X", EventBinding{ x } }, { "x1", x1 }, { "x2", x2 }, { "y1", y1 },
											{ "y2", y2 } } );
										return r;
									}
								}
							}
						}
					}
				}
				return r;
			case Index::i3:
				for( const Subset x : f.subsets() ) {
					if( x == 0 || x == f.full() ) {
						continue;
					}
					const auto ante = f.a3_antecedent_witness( x );
					if( !ante ) {
						continue;
					}
					for( const Value &u1 : ran ) {
						for( const Value &u2 : ran ) {
							const Instance in = f.a3_consequent( x, u1, u2 );
							if( in == Instance::vacuous ) {
								++r.vacuous;
							} else if( in == Instance::fails ) {
								fail( r, { { "X", EventBinding{ x } }, { "x1", ante->first }, { "x2", ante->second },
									{ "u1", u1 }, { "u2", u2 } } );
								return r;
							}
						}
					}
				}
				return r;
			case Index::i4:
				for( const Subset x1 : f.subsets() ) {
					for( const Subset x2 : f.subsets() ) {
						for( const Value &u1 : ran ) {
							for( const Value &v1 : ran ) {
								for( const Value &u2 : ran ) {
									for( const Value &v2 : ran ) {
										const Instance in = f.a4( x1, x2, u1, v1, u2, v2 );
										if( in == Instance::vacuous ) {
											++r.vacuous;
										} else if( in == Instance::fails ) {
											fail( r, { { "X1", EventBinding{ x1 } }, { "X2", EventBinding{ x2 } },
												{ "u1", u1 }, { "v1", v1 }, { "u2", u2 }, { "v2", v2 } } );
											return r;
										}
									}
								}
							}
						}
					}
				}
				return r;
			case Index::i5:
				for( const Value &u1 : ran ) {
					for( const Value &u2 : ran ) {
						if( f.a5_pair( u1, u2 ) ) {
							return r;
						}
					}
				}
				fail( r, {} );
				return r;
			case Index::i6: {
				internal::require_partition_budget( f.n_states(), budgets );
				const std::size_t m = d.situation().n_acts();
				// x, y range over E(S) in value order; a, b over the acts attaining them
				std::map< Value, std::vector< std::size_t > > attaining;
				for( std::size_t i = 0; i < m; ++i ) {
					attaining[ f.value( i, f.full() ) ].push_back( i );
				}
				for( const Value &x : es ) {
					for( const Value &y : es ) {
						if( !f.strict( x, y ) ) {
							continue;
						}
						for( const Value &u : ran ) {
							ConsequenceId c = 0;
							while( !( d.utility( c ) == u ) ) {
								++c;
							}
							for( const std::size_t a : attaining[ x ] ) {
								for( const std::size_t b : attaining[ y ] ) {
									if( f.a6( a, b, u ) == Instance::fails ) {
										fail( r, { { "x", x }, { "y", y }, { "u", u },
											{ "a", ActBinding{ d.situation().act( a ).map } },
											{ "b", ActBinding{ d.situation().act( b ).map } }, { "c", ConsequenceBinding{ c } } } );
										return r;
									}
								}
							}
						}
					}
				}
				return r;
			}
		}
		return r;
	}

	/** Axiom A_which on D, after checking the class it is stated for. */
	inline CheckResult check_A( const DecisionProblem &d, const Index which, const Version version = Version::general,
		const Budgets &budgets = {} )
	{
		internal::require_axiom_classes( d, which, version );
		const AxiomFrame f( d );
		return check_A( f, which, version, budgets );
	}

	struct VerificationEntry {
		Index index;
		CheckResult axiom;
		CheckResult postulate;

		bool agrees() const { return axiom.holds == postulate.holds; }
	};

	struct VerificationReport {
		PiMembership pi;
		std::vector< VerificationEntry > entries;
		bool axioms_hold = true;
		bool postulates_hold = true;

		bool conjunction_agrees() const { return axioms_hold == postulates_hold; }

		bool all_agree() const {
			for( const auto &e : entries ) {
				if( !e.agrees() ) {
					return false;
				}
			}
			return conjunction_agrees();
		}
	};

	/**
	 * Evaluates A_i on D and P_i on its induced preference for each i in the
	 * set, and compares them individually and as conjunctions.
	 */
	inline VerificationReport verify_representation( const DecisionProblem &d, const std::vector< Index > &set,
		const Budgets &budgets = {} )
	{
		VerificationReport report;
		report.pi = pi_membership( d, budgets );
		std::vector< std::string > issues;
		for( const Index i : set ) {
			if( !report.pi.admits( i ) ) {
				issues.push_back( std::string( "index " ) + index_name( i ) + " requires " + PiMembership::required( i ) );
			}
		}
		if( !issues.empty() ) {
			throw Error( ErrorKind::precondition, "pi-violation", issues );
		}
		const PreferenceRelation pref = induced_preference( d );
		const AxiomFrame frame( d );
		for( const Index i : set ) {
			VerificationEntry entry{ i, check_A( frame, i, Version::general, budgets ),
				check_P( d.situation(), pref, i, Version::general, budgets ) };
			report.axioms_hold = report.axioms_hold && entry.axiom.holds;
			report.postulates_hold = report.postulates_hold && entry.postulate.holds;
			report.entries.push_back( std::move( entry ) );
		}
		return report;
	}

} // end namespace geu

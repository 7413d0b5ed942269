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
 * @file domain.hpp
 *
 * Expectation domains (U, P, V, ⊕, ⊗) and the built-in instances: the
 * standard rational domain, the two pair domains, explicit tables, the
 * act-as-value domain synthesized from a preference, and the tagged domain
 * shared by all preferences on a situation.
 */

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "relation.hpp"
#include "situation.hpp"
#include "value.hpp"

namespace geu {

	using Rng = std::mt19937_64;

	enum class DomainKind { standard, pair, pair_min, table, canonical, tagged };

	inline const char * domain_kind_name( const DomainKind k ) noexcept {
		switch( k ) {
			case DomainKind::standard: return "standard";
			case DomainKind::pair: return "pair";
			case DomainKind::pair_min: return "pair-min";
			case DomainKind::table: return "table";
			case DomainKind::canonical: return "canonical";
			case DomainKind::tagged: return "tagged";
		}
		return "unknown";
	}

	/** Laws a built-in satisfies analytically. */
	struct DomainFlags {
		bool laws_certified = false;
		bool monotonic_certified = false;
		bool identity_certified = false;
		bool additive_compatible = false;
	};

	/**
	 * Abstract expectation domain. U embeds in V through embed(); P, U and V
	 * carriers are decided by membership predicates. Implementations are
	 * immutable after construction.
	 */
	class ExpectationDomain {

		public:

			virtual ~ExpectationDomain() = default;

			virtual DomainKind kind() const noexcept = 0;
			virtual DomainFlags flags() const noexcept = 0;

			virtual bool in_u( const Value &v ) const = 0;
			virtual bool in_p( const Value &v ) const = 0;
			virtual bool in_v( const Value &v ) const = 0;

			virtual bool leq_u( const Value &a, const Value &b ) const = 0;
			virtual bool leq_p( const Value &a, const Value &b ) const = 0;
			virtual bool leq_v( const Value &a, const Value &b ) const = 0;

			virtual Value oplus( const Value &x, const Value &y ) const = 0;
			virtual Value otimes( const Value &p, const Value &u ) const = 0;

			/** The image of a utility value in V. */
			virtual Value embed( const Value &u ) const = 0;

			/** The utility value embedding to v, if any. */
			virtual std::optional< Value > as_utility( const Value &v ) const = 0;

			virtual Value bottom() const = 0;
			virtual Value top() const = 0;

			/** The ⊕-identity when it is known analytically. */
			virtual std::optional< Value > certified_identity() const { return std::nullopt; }

			/** Full carrier listings, or nullopt when infinite or larger than limit. */
			virtual std::optional< std::vector< Value > > enumerate_u( std::uint64_t ) const { return std::nullopt; }
			virtual std::optional< std::vector< Value > > enumerate_p( std::uint64_t ) const { return std::nullopt; }
			virtual std::optional< std::vector< Value > > enumerate_v( std::uint64_t ) const { return std::nullopt; }

			virtual Value sample_u( Rng &rng ) const = 0;
			virtual Value sample_p( Rng &rng ) const = 0;
			virtual Value sample_v( Rng &rng ) const = 0;

			/** Names used for rendering ids inside values. */
			virtual Naming naming() const { return {}; }

			/** Stable structural description; equal fingerprints mean equal domains. */
			virtual std::string fingerprint() const = 0;

			bool strict_v( const Value &a, const Value &b ) const { return leq_v( a, b ) && !leq_v( b, a ); }

	};

	using DomainPtr = std::shared_ptr< const ExpectationDomain >;

	namespace internal {

		inline const Rational & as_rational( const Value &v, const char *where ) {
			if( const auto *r = std::get_if< Rational >( &v ) ) {
				return *r;
			}
			throw Error( ErrorKind::invalid_argument, std::string( where ) + ": expected a rational, got " + render( v ) );
		}

		inline const RationalPair & as_pair( const Value &v, const char *where ) {
			if( const auto *r = std::get_if< RationalPair >( &v ) ) {
				return *r;
			}
			throw Error( ErrorKind::invalid_argument, std::string( where ) + ": expected a rational pair, got " + render( v ) );
		}

		inline const PairSet & as_pairset( const Value &v, const char *where ) {
			if( const auto *r = std::get_if< PairSet >( &v ) ) {
				return *r;
			}
			throw Error( ErrorKind::invalid_argument, std::string( where ) + ": expected a pair set, got " + render( v ) );
		}

		inline const Tagged & as_tagged( const Value &v, const char *where ) {
			if( const auto *r = std::get_if< Tagged >( &v ) ) {
				return *r;
			}
			throw Error( ErrorKind::invalid_argument, std::string( where ) + ": expected a tagged value, got " + render( v ) );
		}

		inline Subset as_stateset( const Value &v, const char *where ) {
			if( const auto *r = std::get_if< StateSet >( &v ) ) {
				return r->mask;
			}
			throw Error( ErrorKind::invalid_argument, std::string( where ) + ": expected a state set, got " + render( v ) );
		}

		inline bool unit_interval( const Rational &r ) { return r >= 0 && r <= 1; }

		inline Rational sample_rational( Rng &rng, const int lo, const int hi ) {
			std::uniform_int_distribution< int > num( lo, hi );
			std::uniform_int_distribution< int > den( 1, 12 );
			return Rational( num( rng ), den( rng ) );
		}

		inline Rational sample_probability( Rng &rng ) {
			std::uniform_int_distribution< int > den( 1, 12 );
			const int d = den( rng );
			std::uniform_int_distribution< int > num( 0, d );
			return Rational( num( rng ), d );
		}

		inline Subset sample_subset( Rng &rng, const std::size_t n ) {
			return rng() & full_subset( n );
		}

		inline PairSet sample_pairset( Rng &rng, const std::size_t n, const std::size_t m ) {
			std::vector< PairSet::Pair > items;
			for( StateId s = 0; s < n; ++s ) {
				for( ConsequenceId c = 0; c < m; ++c ) {
					if( rng() & 1 ) {
						items.emplace_back( s, c );
					}
				}
			}
			return PairSet( std::move( items ) );
		}

		/** All subsets of S × C when 2^(nm) ≤ limit. */
		inline std::optional< std::vector< PairSet > > all_pairsets( const std::size_t n, const std::size_t m,
			const std::uint64_t limit )
		{
			const std::size_t bits = n * m;
			if( bits >= 63 || ( std::uint64_t( 1 ) << bits ) > limit ) {
				return std::nullopt;
			}
			std::vector< PairSet > out;
			for( std::uint64_t mask = 0; mask < ( std::uint64_t( 1 ) << bits ); ++mask ) {
				std::vector< PairSet::Pair > items;
				for( std::size_t b = 0; b < bits; ++b ) {
					if( ( mask >> b ) & 1 ) {
						items.emplace_back( static_cast< StateId >( b / m ), static_cast< ConsequenceId >( b % m ) );
					}
				}
				out.emplace_back( std::move( items ) );
			}
			return out;
		}

		inline std::optional< std::vector< Value > > all_statesets( const std::size_t n, const std::uint64_t limit ) {
			if( n >= 63 || ( std::uint64_t( 1 ) << n ) > limit ) {
				return std::nullopt;
			}
			std::vector< Value > out;
			for( const Subset x : subsets_lex( n ) ) {
				out.emplace_back( StateSet{ x } );
			}
			return out;
		}

		inline bool pairs_in_range( const PairSet &p, const std::size_t n, const std::size_t m ) {
			for( const auto &[ s, c ] : p.items() ) {
				if( s >= n || c >= m ) {
					return false;
				}
			}
			return true;
		}

		/** Consequence c with p = S × {c}, if p has that shape. */
		inline std::optional< ConsequenceId > constant_consequence( const PairSet &p, const std::size_t n ) {
			if( p.size() != n || n == 0 ) {
				return std::nullopt;
			}
			const ConsequenceId c = p.items().front().second;
			for( std::size_t s = 0; s < n; ++s ) {
				if( p.items()[ s ] != PairSet::Pair( static_cast< StateId >( s ), c ) ) {
					return std::nullopt;
				}
			}
			return c;
		}

		/**
		 * Whether x = a ∪ z and y = b ∪ z for some z. The candidate
		 * z = (x∖a) ∪ (y∖b) works whenever any z does.
		 */
		inline bool common_extension( const PairSet &x, const PairSet &a, const PairSet &y, const PairSet &b ) {
			return x.includes( a ) && y.includes( b ) && y.includes( x.minus( a ) ) && x.includes( y.minus( b ) );
		}

		/** Acts of a situation as pair sets, with the index of the first act denoting each. */
		struct ActGraphs {
			std::vector< PairSet > graphs;
			std::map< PairSet, std::size_t > index;

			explicit ActGraphs( const DecisionSituation &sit ) {
				for( std::size_t i = 0; i < sit.n_acts(); ++i ) {
					graphs.push_back( act_graph( sit.act( i ).map ) );
					index.emplace( graphs.back(), i );
				}
			}

			std::optional< std::size_t > find( const PairSet &p ) const {
				const auto it = index.find( p );
				if( it == index.end() ) {
					return std::nullopt;
				}
				return it->second;
			}
		};

		/** x ≾ y under the act-as-value order induced by pref, optionally closed under common unions. */
		inline bool act_value_leq( const ActGraphs &acts, const PreferenceRelation &pref, const bool monotonic,
			const PairSet &x, const PairSet &y )
		{
			if( x == y ) {
				return true;
			}
			const auto ix = acts.find( x );
			const auto iy = acts.find( y );
			if( ix && iy && pref( *ix, *iy ) ) {
				return true;
			}
			if( !monotonic ) {
				return false;
			}
			const std::size_t n = pref.size();
			for( std::size_t i = 0; i < n; ++i ) {
				if( !x.includes( acts.graphs[ i ] ) ) {
					continue;
				}
				for( std::size_t j = 0; j < n; ++j ) {
					if( pref( i, j ) && common_extension( x, acts.graphs[ i ], y, acts.graphs[ j ] ) ) {
						return true;
					}
				}
			}
			return false;
		}

	} // end namespace internal

	/** Rationals with +, ×, ≤; P is [0,1]. */
	class StandardDomain final : public ExpectationDomain {

		public:

			DomainKind kind() const noexcept override { return DomainKind::standard; }

			DomainFlags flags() const noexcept override { return { true, true, true, true }; }

			bool in_u( const Value &v ) const override { return std::holds_alternative< Rational >( v ); }
			bool in_p( const Value &v ) const override {
				const auto *r = std::get_if< Rational >( &v );
				return r != nullptr && internal::unit_interval( *r );
			}
			bool in_v( const Value &v ) const override { return std::holds_alternative< Rational >( v ); }

			bool leq_u( const Value &a, const Value &b ) const override { return leq_v( a, b ); }
			bool leq_p( const Value &a, const Value &b ) const override { return leq_v( a, b ); }
			bool leq_v( const Value &a, const Value &b ) const override {
				return internal::as_rational( a, "leq" ) <= internal::as_rational( b, "leq" );
			}

			Value oplus( const Value &x, const Value &y ) const override {
				return Rational( internal::as_rational( x, "oplus" ) + internal::as_rational( y, "oplus" ) );
			}
			Value otimes( const Value &p, const Value &u ) const override {
				return Rational( internal::as_rational( p, "otimes" ) * internal::as_rational( u, "otimes" ) );
			}

			Value embed( const Value &u ) const override { return u; }
			std::optional< Value > as_utility( const Value &v ) const override {
				return in_u( v ) ? std::optional< Value >( v ) : std::nullopt;
			}

			Value bottom() const override { return Rational( 0 ); }
			Value top() const override { return Rational( 1 ); }
			std::optional< Value > certified_identity() const override { return Value( Rational( 0 ) ); }

			Value sample_u( Rng &rng ) const override { return internal::sample_rational( rng, -20, 20 ); }
			Value sample_p( Rng &rng ) const override { return internal::sample_probability( rng ); }
			Value sample_v( Rng &rng ) const override { return internal::sample_rational( rng, -40, 40 ); }

			std::string fingerprint() const override { return "standard"; }

	};

	/**
	 * Pairs of rationals with pointwise ⊕ and (p1,p2)⊗u = (p1·u, p2·u);
	 * u is identified with (u,u). The valuation order is componentwise, or
	 * compares minimum components when min_order is set.
	 */
	class PairDomain final : public ExpectationDomain {

		public:

			explicit PairDomain( const bool min_order ) : min_order_( min_order ) {}

			DomainKind kind() const noexcept override { return min_order_ ? DomainKind::pair_min : DomainKind::pair; }

			DomainFlags flags() const noexcept override { return { true, true, true, true }; }

			bool in_u( const Value &v ) const override { return std::holds_alternative< Rational >( v ); }
			bool in_p( const Value &v ) const override {
				const auto *p = std::get_if< RationalPair >( &v );
				return p != nullptr && internal::unit_interval( p->first ) && internal::unit_interval( p->second );
			}
			bool in_v( const Value &v ) const override { return std::holds_alternative< RationalPair >( v ); }

			bool leq_u( const Value &a, const Value &b ) const override {
				return internal::as_rational( a, "leq_u" ) <= internal::as_rational( b, "leq_u" );
			}
			bool leq_p( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_pair( a, "leq_p" );
				const auto &y = internal::as_pair( b, "leq_p" );
				return x.first <= y.first && x.second <= y.second;
			}
			bool leq_v( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_pair( a, "leq_v" );
				const auto &y = internal::as_pair( b, "leq_v" );
				if( min_order_ ) {
					return std::min( x.first, x.second ) <= std::min( y.first, y.second );
				}
				return x.first <= y.first && x.second <= y.second;
			}

			Value oplus( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_pair( a, "oplus" );
				const auto &y = internal::as_pair( b, "oplus" );
				return RationalPair{ x.first + y.first, x.second + y.second };
			}
			Value otimes( const Value &p, const Value &u ) const override {
				const auto &w = internal::as_pair( p, "otimes" );
				const Rational &r = internal::as_rational( u, "otimes" );
				return RationalPair{ w.first * r, w.second * r };
			}

			Value embed( const Value &u ) const override {
				const Rational &r = internal::as_rational( u, "embed" );
				return RationalPair{ r, r };
			}
			std::optional< Value > as_utility( const Value &v ) const override {
				const auto *p = std::get_if< RationalPair >( &v );
				if( p == nullptr || p->first != p->second ) {
					return std::nullopt;
				}
				return Value( p->first );
			}

			Value bottom() const override { return RationalPair{ 0, 0 }; }
			Value top() const override { return RationalPair{ 1, 1 }; }
			std::optional< Value > certified_identity() const override { return Value( RationalPair{ 0, 0 } ); }

			Value sample_u( Rng &rng ) const override { return internal::sample_rational( rng, -20, 20 ); }
			Value sample_p( Rng &rng ) const override {
				return RationalPair{ internal::sample_probability( rng ), internal::sample_probability( rng ) };
			}
			Value sample_v( Rng &rng ) const override {
				// occasionally diagonal so probes hit the embedded utilities
				const Rational a = internal::sample_rational( rng, -40, 40 );
				if( rng() % 4 == 0 ) {
					return RationalPair{ a, a };
				}
				return RationalPair{ a, internal::sample_rational( rng, -40, 40 ) };
			}

			std::string fingerprint() const override { return min_order_ ? "pair-min" : "pair"; }

		private:

			bool min_order_;

	};

	/** Operation tables and order pair lists of a finite domain, by symbol. */
	struct TableSpec {
		std::vector< std::string > utility;
		std::vector< std::string > plausibility;
		std::vector< std::string > valuation;
		std::string bottom;
		std::string top;
		/** (x, y, x⊕y) */
		std::vector< std::array< std::string, 3 > > oplus;
		/** (p, u, p⊗u) */
		std::vector< std::array< std::string, 3 > > otimes;
		std::vector< std::pair< std::string, std::string > > utility_order;
		std::vector< std::pair< std::string, std::string > > plausibility_order;
		std::vector< std::pair< std::string, std::string > > valuation_order;

		friend bool operator==( const TableSpec &, const TableSpec & ) = default;
	};

	/**
	 * Explicit finite domain. U must be a subset of V (the embedding is the
	 * identity on symbols). Construction rejects structural defects only; the
	 * algebraic laws are checked by validate_domain.
	 */
	class TableDomain final : public ExpectationDomain {

		public:

			explicit TableDomain( TableSpec spec ) : spec_( std::move( spec ) ) {
				std::vector< std::string > issues;
				const auto carrier = []( const std::vector< std::string > &syms ) {
					std::vector< Value > out;
					for( const auto &s : syms ) {
						out.emplace_back( TableElem{ s } );
					}
					return out;
				};
				const auto pairs = []( const std::vector< std::pair< std::string, std::string > > &ps ) {
					std::vector< std::pair< Value, Value > > out;
					for( const auto &[ a, b ] : ps ) {
						out.emplace_back( TableElem{ a }, TableElem{ b } );
					}
					return out;
				};
				const auto build = [ & ]( ValueRelation &rel, const std::vector< std::string > &syms,
					const std::vector< std::pair< std::string, std::string > > &ps, const char *what )
				{
					try {
						rel = ValueRelation( carrier( syms ), pairs( ps ) );
					} catch( const Error &e ) {
						issues.push_back( std::string( what ) + ": " + e.what() );
					}
				};
				build( u_, spec_.utility, spec_.utility_order, "utility order" );
				build( p_, spec_.plausibility, spec_.plausibility_order, "plausibility order" );
				build( v_, spec_.valuation, spec_.valuation_order, "valuation order" );
				if( !issues.empty() ) {
					throw Error( ErrorKind::validation, "inconsistent table domain", issues );
				}
				if( spec_.utility.empty() || spec_.plausibility.empty() || spec_.valuation.empty() ) {
					issues.push_back( "carriers must be nonempty" );
				}
				for( const auto &u : spec_.utility ) {
					if( !v_.contains( TableElem{ u } ) ) {
						issues.push_back( "utility element " + u + " is not a valuation element" );
					}
				}
				if( !p_.contains( TableElem{ spec_.bottom } ) ) {
					issues.push_back( "bottom " + spec_.bottom + " is not a plausibility element" );
				}
				if( !p_.contains( TableElem{ spec_.top } ) ) {
					issues.push_back( "top " + spec_.top + " is not a plausibility element" );
				}
				fill( spec_.oplus, v_, v_, oplus_, "oplus", issues );
				fill( spec_.otimes, p_, u_, otimes_, "otimes", issues );
				if( !issues.empty() ) {
					throw Error( ErrorKind::validation, "inconsistent table domain", issues );
				}
			}

			const TableSpec &spec() const noexcept { return spec_; }

			DomainKind kind() const noexcept override { return DomainKind::table; }
			DomainFlags flags() const noexcept override { return {}; }

			bool in_u( const Value &v ) const override { return u_.contains( v ); }
			bool in_p( const Value &v ) const override { return p_.contains( v ); }
			bool in_v( const Value &v ) const override { return v_.contains( v ); }

			bool leq_u( const Value &a, const Value &b ) const override { return u_( a, b ); }
			bool leq_p( const Value &a, const Value &b ) const override { return p_( a, b ); }
			bool leq_v( const Value &a, const Value &b ) const override { return v_( a, b ); }

			Value oplus( const Value &x, const Value &y ) const override {
				return lookup( oplus_, v_, v_, x, y, "oplus" );
			}
			Value otimes( const Value &p, const Value &u ) const override {
				return lookup( otimes_, p_, u_, p, u, "otimes" );
			}

			Value embed( const Value &u ) const override { return u; }
			std::optional< Value > as_utility( const Value &v ) const override {
				return in_u( v ) ? std::optional< Value >( v ) : std::nullopt;
			}

			Value bottom() const override { return TableElem{ spec_.bottom }; }
			Value top() const override { return TableElem{ spec_.top }; }

			std::optional< std::vector< Value > > enumerate_u( std::uint64_t ) const override { return u_.carrier(); }
			std::optional< std::vector< Value > > enumerate_p( std::uint64_t ) const override { return p_.carrier(); }
			std::optional< std::vector< Value > > enumerate_v( std::uint64_t ) const override { return v_.carrier(); }

			Value sample_u( Rng &rng ) const override { return pick( u_.carrier(), rng ); }
			Value sample_p( Rng &rng ) const override { return pick( p_.carrier(), rng ); }
			Value sample_v( Rng &rng ) const override { return pick( v_.carrier(), rng ); }

			std::string fingerprint() const override {
				std::string out = "table;U=";
				for( const auto &s : spec_.utility ) out += s + ",";
				out += ";P=";
				for( const auto &s : spec_.plausibility ) out += s + ",";
				out += ";V=";
				for( const auto &s : spec_.valuation ) out += s + ",";
				out += ";b=" + spec_.bottom + ";t=" + spec_.top + ";+";
				for( const auto &r : spec_.oplus ) out += r[ 0 ] + " " + r[ 1 ] + " " + r[ 2 ] + ",";
				out += ";*";
				for( const auto &r : spec_.otimes ) out += r[ 0 ] + " " + r[ 1 ] + " " + r[ 2 ] + ",";
				const auto rel = [ & ]( const ValueRelation &r ) {
					std::string s;
					for( const auto &[ i, j ] : r.matrix().pairs() ) s += std::to_string( i ) + "<" + std::to_string( j ) + ",";
					return s;
				};
				return out + ";u" + rel( u_ ) + ";p" + rel( p_ ) + ";v" + rel( v_ );
			}

		private:

			using Table = std::map< std::pair< std::size_t, std::size_t >, std::size_t >;

			static Value pick( const std::vector< Value > &c, Rng &rng ) {
				return c[ rng() % c.size() ];
			}

			void fill( const std::vector< std::array< std::string, 3 > > &rows, const ValueRelation &left,
				const ValueRelation &right, Table &table, const char *what, std::vector< std::string > &issues )
			{
				for( const auto &row : rows ) {
					const auto a = left.index_of( TableElem{ row[ 0 ] } );
					const auto b = right.index_of( TableElem{ row[ 1 ] } );
					const auto c = v_.index_of( TableElem{ row[ 2 ] } );
					if( !a || !b ) {
						issues.push_back( std::string( what ) + " entry (" + row[ 0 ] + "," + row[ 1 ] + ") has an operand outside its carrier" );
						continue;
					}
					if( !c ) {
						issues.push_back( std::string( what ) + " is not closed: " + row[ 0 ] + "," + row[ 1 ] + " -> " + row[ 2 ] );
						continue;
					}
					const auto [ it, fresh ] = table.emplace( std::make_pair( *a, *b ), *c );
					if( !fresh && it->second != *c ) {
						issues.push_back( std::string( what ) + " has conflicting entries for (" + row[ 0 ] + "," + row[ 1 ] + ")" );
					}
				}
				for( std::size_t i = 0; i < left.carrier().size(); ++i ) {
					for( std::size_t j = 0; j < right.carrier().size(); ++j ) {
						if( table.count( { i, j } ) == 0 ) {
							issues.push_back( std::string( what ) + " is missing the entry for (" +
								render( left.carrier()[ i ] ) + "," + render( right.carrier()[ j ] ) + ")" );
						}
					}
				}
			}

			Value lookup( const Table &table, const ValueRelation &left, const ValueRelation &right,
				const Value &a, const Value &b, const char *what ) const
			{
				const auto i = left.index_of( a );
				const auto j = right.index_of( b );
				if( !i || !j ) {
					throw Error( ErrorKind::invalid_argument,
						std::string( what ) + ": operand outside the carrier (" + render( a ) + "," + render( b ) + ")" );
				}
				return v_.carrier()[ table.at( { *i, *j } ) ];
			}

			TableSpec spec_;
			ValueRelation u_;
			ValueRelation p_;
			ValueRelation v_;
			Table oplus_;
			Table otimes_;

	};

	/**
	 * The act-as-value domain of a preference: U = {S×{c}}, P = (2^S, ⊆),
	 * V = 2^{S×C}, ⊕ = ∪, X⊗(S×{c}) = X×{c}. Values x ≾ y iff x = y or both
	 * are acts of A with x ≾_A y; the monotonic variant additionally relates
	 * a∪z ≾ b∪z whenever a ≾_A b.
	 */
	class CanonicalDomain final : public ExpectationDomain {

		public:

			CanonicalDomain( SituationPtr sit, PreferenceRelation pref, const bool monotonic ) :
				sit_( std::move( sit ) ), acts_( *sit_ ), pref_( std::move( pref ) ), monotonic_( monotonic )
			{
				if( pref_.size() != sit_->n_acts() ) {
					throw Error( ErrorKind::invalid_argument, "preference carrier differs from the act set" );
				}
			}

			const DecisionSituation &situation() const noexcept { return *sit_; }
			const PreferenceRelation &preference() const noexcept { return pref_; }
			bool monotonic() const noexcept { return monotonic_; }

			DomainKind kind() const noexcept override { return DomainKind::canonical; }
			DomainFlags flags() const noexcept override { return { true, monotonic_, true, true }; }

			bool in_u( const Value &v ) const override {
				const auto *p = std::get_if< PairSet >( &v );
				return p != nullptr && internal::constant_consequence( *p, sit_->n_states() ) &&
					internal::pairs_in_range( *p, sit_->n_states(), sit_->n_consequences() );
			}
			bool in_p( const Value &v ) const override {
				const auto *s = std::get_if< StateSet >( &v );
				return s != nullptr && is_subset( s->mask, sit_->full() );
			}
			bool in_v( const Value &v ) const override {
				const auto *p = std::get_if< PairSet >( &v );
				return p != nullptr && internal::pairs_in_range( *p, sit_->n_states(), sit_->n_consequences() );
			}

			bool leq_u( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_pairset( a, "leq_u" );
				const auto &y = internal::as_pairset( b, "leq_u" );
				if( x == y ) {
					return true;
				}
				const auto ix = acts_.find( x );
				const auto iy = acts_.find( y );
				return ix && iy && pref_( *ix, *iy );
			}
			bool leq_p( const Value &a, const Value &b ) const override {
				return is_subset( internal::as_stateset( a, "leq_p" ), internal::as_stateset( b, "leq_p" ) );
			}
			bool leq_v( const Value &a, const Value &b ) const override {
				return internal::act_value_leq( acts_, pref_, monotonic_, internal::as_pairset( a, "leq_v" ),
					internal::as_pairset( b, "leq_v" ) );
			}

			Value oplus( const Value &x, const Value &y ) const override {
				return internal::as_pairset( x, "oplus" ).unite( internal::as_pairset( y, "oplus" ) );
			}
			Value otimes( const Value &p, const Value &u ) const override {
				const Subset x = internal::as_stateset( p, "otimes" );
				const auto c = internal::constant_consequence( internal::as_pairset( u, "otimes" ), sit_->n_states() );
				if( !c ) {
					throw Error( ErrorKind::invalid_argument, "otimes: utility value is not of the form S x {c}" );
				}
				return PairSet::product( x, *c );
			}

			Value embed( const Value &u ) const override { return u; }
			std::optional< Value > as_utility( const Value &v ) const override {
				return in_u( v ) ? std::optional< Value >( v ) : std::nullopt;
			}

			Value bottom() const override { return StateSet{ 0 }; }
			Value top() const override { return StateSet{ sit_->full() }; }
			std::optional< Value > certified_identity() const override { return Value( PairSet{} ); }

			std::optional< std::vector< Value > > enumerate_u( std::uint64_t ) const override {
				std::vector< Value > out;
				for( ConsequenceId c = 0; c < sit_->n_consequences(); ++c ) {
					out.emplace_back( PairSet::product( sit_->full(), c ) );
				}
				return out;
			}
			std::optional< std::vector< Value > > enumerate_p( const std::uint64_t limit ) const override {
				return internal::all_statesets( sit_->n_states(), limit );
			}
			std::optional< std::vector< Value > > enumerate_v( const std::uint64_t limit ) const override {
				const auto all = internal::all_pairsets( sit_->n_states(), sit_->n_consequences(), limit );
				if( !all ) {
					return std::nullopt;
				}
				return std::vector< Value >( all->begin(), all->end() );
			}

			Value sample_u( Rng &rng ) const override {
				return PairSet::product( sit_->full(), static_cast< ConsequenceId >( rng() % sit_->n_consequences() ) );
			}
			Value sample_p( Rng &rng ) const override { return StateSet{ internal::sample_subset( rng, sit_->n_states() ) }; }
			Value sample_v( Rng &rng ) const override {
				// bias toward act values and their unions so the order is exercised
				const std::uint64_t roll = rng() % 3;
				PairSet base = internal::sample_pairset( rng, sit_->n_states(), sit_->n_consequences() );
				if( roll == 0 ) {
					return base;
				}
				const PairSet &act = acts_.graphs[ rng() % acts_.graphs.size() ];
				return roll == 1 ? act : act.unite( base );
			}

			Naming naming() const override { return sit_->naming(); }

			std::string fingerprint() const override {
				std::string out = std::string( monotonic_ ? "canonical-monotonic" : "canonical" ) +
					";n=" + std::to_string( sit_->n_states() ) + ";m=" + std::to_string( sit_->n_consequences() ) + ";A=";
				for( const auto &g : acts_.graphs ) out += render( g ) + ";";
				out += "pref=";
				for( const auto &[ i, j ] : pref_.pairs() ) out += std::to_string( i ) + "<" + std::to_string( j ) + ",";
				return out;
			}

		private:

			SituationPtr sit_;
			internal::ActGraphs acts_;
			PreferenceRelation pref_;
			bool monotonic_;

	};

	/**
	 * Interns preference relations to small integer ids. Equal relations get
	 * the same id. Thread-safe; ids are never reused.
	 */
	class PreferenceRegistry {

		public:

			std::uint32_t intern( const PreferenceRelation &pref ) {
				const std::lock_guard< std::mutex > lock( mutex_ );
				for( std::size_t i = 0; i < prefs_.size(); ++i ) {
					if( *prefs_[ i ] == pref ) {
						return static_cast< std::uint32_t >( i );
					}
				}
				prefs_.push_back( std::make_shared< const PreferenceRelation >( pref ) );
				return static_cast< std::uint32_t >( prefs_.size() - 1 );
			}

			std::shared_ptr< const PreferenceRelation > get( const std::uint32_t id ) const {
				const std::lock_guard< std::mutex > lock( mutex_ );
				if( id >= prefs_.size() ) {
					return nullptr;
				}
				return prefs_[ id ];
			}

			std::size_t size() const {
				const std::lock_guard< std::mutex > lock( mutex_ );
				return prefs_.size();
			}

		private:

			mutable std::mutex mutex_;
			std::vector< std::shared_ptr< const PreferenceRelation > > prefs_;

	};

	/**
	 * The preference-independent domain: U = C × tag-sets, V = 2^{S×C} ×
	 * tag-sets, ⊕ componentwise union, X⊗(c,Y) = (X×{c}, Y) and ∅⊗(c,Y) =
	 * (∅,∅). (x,X) ≾ (y,Y) iff they are equal, or X = Y and for some tag r in
	 * X, x = a∪z and y = b∪z with a ≾_r b. The utility order is the
	 * restriction of this order to U.
	 */
	class TaggedDomain final : public ExpectationDomain {

		public:

			TaggedDomain( SituationPtr sit, std::shared_ptr< PreferenceRegistry > registry ) :
				sit_( std::move( sit ) ), acts_( *sit_ ), registry_( std::move( registry ) )
			{
				if( !registry_ ) {
					throw Error( ErrorKind::invalid_argument, "tagged domain needs a preference registry" );
				}
			}

			const DecisionSituation &situation() const noexcept { return *sit_; }
			const std::shared_ptr< PreferenceRegistry > &registry() const noexcept { return registry_; }

			DomainKind kind() const noexcept override { return DomainKind::tagged; }
			DomainFlags flags() const noexcept override { return { true, true, true, true }; }

			bool in_u( const Value &v ) const override {
				const auto *t = std::get_if< Tagged >( &v );
				return t != nullptr && internal::constant_consequence( t->pairs, sit_->n_states() ) &&
					internal::pairs_in_range( t->pairs, sit_->n_states(), sit_->n_consequences() ) && tags_known( t->tags );
			}
			bool in_p( const Value &v ) const override {
				const auto *s = std::get_if< StateSet >( &v );
				return s != nullptr && is_subset( s->mask, sit_->full() );
			}
			bool in_v( const Value &v ) const override {
				const auto *t = std::get_if< Tagged >( &v );
				return t != nullptr && internal::pairs_in_range( t->pairs, sit_->n_states(), sit_->n_consequences() ) &&
					tags_known( t->tags );
			}

			bool leq_u( const Value &a, const Value &b ) const override { return leq_v( a, b ); }
			bool leq_p( const Value &a, const Value &b ) const override {
				return is_subset( internal::as_stateset( a, "leq_p" ), internal::as_stateset( b, "leq_p" ) );
			}
			bool leq_v( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_tagged( a, "leq_v" );
				const auto &y = internal::as_tagged( b, "leq_v" );
				if( x == y ) {
					return true;
				}
				if( x.tags != y.tags ) {
					return false;
				}
				for( const std::uint32_t r : x.tags ) {
					const auto pref = registry_->get( r );
					if( pref && pref->size() == acts_.graphs.size() &&
						internal::act_value_leq( acts_, *pref, true, x.pairs, y.pairs ) )
					{
						return true;
					}
				}
				return false;
			}

			Value oplus( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_tagged( a, "oplus" );
				const auto &y = internal::as_tagged( b, "oplus" );
				std::vector< std::uint32_t > tags( x.tags );
				tags.insert( tags.end(), y.tags.begin(), y.tags.end() );
				return Tagged( x.pairs.unite( y.pairs ), std::move( tags ) );
			}
			Value otimes( const Value &p, const Value &u ) const override {
				const Subset x = internal::as_stateset( p, "otimes" );
				const auto &t = internal::as_tagged( u, "otimes" );
				const auto c = internal::constant_consequence( t.pairs, sit_->n_states() );
				if( !c ) {
					throw Error( ErrorKind::invalid_argument, "otimes: utility value is not of the form (S x {c}, Y)" );
				}
				if( x == 0 ) {
					return Tagged{};
				}
				return Tagged( PairSet::product( x, *c ), t.tags );
			}

			Value embed( const Value &u ) const override { return u; }
			std::optional< Value > as_utility( const Value &v ) const override {
				return in_u( v ) ? std::optional< Value >( v ) : std::nullopt;
			}

			Value bottom() const override { return StateSet{ 0 }; }
			Value top() const override { return StateSet{ sit_->full() }; }
			std::optional< Value > certified_identity() const override { return Value( Tagged{} ); }

			std::optional< std::vector< Value > > enumerate_p( const std::uint64_t limit ) const override {
				return internal::all_statesets( sit_->n_states(), limit );
			}

			Value sample_u( Rng &rng ) const override {
				return Tagged( PairSet::product( sit_->full(), static_cast< ConsequenceId >( rng() % sit_->n_consequences() ) ),
					sample_tags( rng ) );
			}
			Value sample_p( Rng &rng ) const override { return StateSet{ internal::sample_subset( rng, sit_->n_states() ) }; }
			Value sample_v( Rng &rng ) const override {
				PairSet base = internal::sample_pairset( rng, sit_->n_states(), sit_->n_consequences() );
				if( rng() % 2 == 0 && !acts_.graphs.empty() ) {
					base = acts_.graphs[ rng() % acts_.graphs.size() ].unite( rng() % 2 ? base : PairSet{} );
				}
				return Tagged( std::move( base ), sample_tags( rng ) );
			}

			Naming naming() const override { return sit_->naming(); }

			/** Independent of the registry contents. */
			std::string fingerprint() const override {
				std::string out = "tagged;n=" + std::to_string( sit_->n_states() ) +
					";m=" + std::to_string( sit_->n_consequences() ) + ";A=";
				for( const auto &g : acts_.graphs ) out += render( g ) + ";";
				return out;
			}

		private:

			bool tags_known( const std::vector< std::uint32_t > &tags ) const {
				const std::size_t n = registry_->size();
				for( const std::uint32_t t : tags ) {
					if( t >= n ) {
						return false;
					}
				}
				return true;
			}

			std::vector< std::uint32_t > sample_tags( Rng &rng ) const {
				const std::size_t n = registry_->size();
				std::vector< std::uint32_t > tags;
				if( n == 0 ) {
					return tags;
				}
				tags.push_back( static_cast< std::uint32_t >( rng() % n ) );
				if( rng() % 4 == 0 ) {
					tags.push_back( static_cast< std::uint32_t >( rng() % n ) );
				}
				return tags;
			}

			SituationPtr sit_;
			internal::ActGraphs acts_;
			std::shared_ptr< PreferenceRegistry > registry_;

	};

	inline DomainPtr standard_domain() { return std::make_shared< const StandardDomain >(); }
	inline DomainPtr pair_domain() { return std::make_shared< const PairDomain >( false ); }
	inline DomainPtr pair_min_domain() { return std::make_shared< const PairDomain >( true ); }
	inline DomainPtr table_domain( TableSpec spec ) { return std::make_shared< const TableDomain >( std::move( spec ) ); }

	inline DomainPtr canonical_domain( SituationPtr sit, PreferenceRelation pref, const bool monotonic = false ) {
		return std::make_shared< const CanonicalDomain >( std::move( sit ), std::move( pref ), monotonic );
	}

	inline DomainPtr tagged_domain( SituationPtr sit, std::shared_ptr< PreferenceRegistry > registry ) {
		return std::make_shared< const TaggedDomain >( std::move( sit ), std::move( registry ) );
	}

} // end namespace geu

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
 * @file value.hpp
 *
 * The closed union of carrier elements used by every expectation domain.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rational.hpp"
#include "subset.hpp"

namespace geu {

	struct RationalPair {
		Rational first;
		Rational second;

		friend bool operator==( const RationalPair &a, const RationalPair &b ) {
			return a.first == b.first && a.second == b.second;
		}
		friend bool operator<( const RationalPair &a, const RationalPair &b ) {
			if( a.first != b.first ) {
				return a.first < b.first;
			}
			return a.second < b.second;
		}
	};

	/** A finite set of (state, consequence) pairs, kept sorted and unique. */
	class PairSet {

		public:

			using Pair = std::pair< StateId, ConsequenceId >;

			PairSet() = default;

			explicit PairSet( std::vector< Pair > items ) : items_( std::move( items ) ) {
				std::sort( items_.begin(), items_.end() );
				items_.erase( std::unique( items_.begin(), items_.end() ), items_.end() );
			}

			/** X × {c}. */
			static PairSet product( const Subset x, const ConsequenceId c ) {
				PairSet out;
				for( const StateId s : members( x ) ) {
					out.items_.emplace_back( s, c );
				}
				return out;
			}

			const std::vector< Pair > &items() const noexcept { return items_; }
			bool empty() const noexcept { return items_.empty(); }
			std::size_t size() const noexcept { return items_.size(); }

			bool contains( const Pair &p ) const {
				return std::binary_search( items_.begin(), items_.end(), p );
			}

			bool includes( const PairSet &other ) const {
				return std::includes( items_.begin(), items_.end(), other.items_.begin(), other.items_.end() );
			}

			PairSet unite( const PairSet &other ) const {
				PairSet out;
				out.items_.reserve( items_.size() + other.items_.size() );
				std::set_union( items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
					std::back_inserter( out.items_ ) );
				return out;
			}

			PairSet minus( const PairSet &other ) const {
				PairSet out;
				std::set_difference( items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
					std::back_inserter( out.items_ ) );
				return out;
			}

			/** States appearing as first components. */
			Subset domain() const {
				Subset x = 0;
				for( const auto &p : items_ ) {
					x |= Subset( 1 ) << p.first;
				}
				return x;
			}

			friend bool operator==( const PairSet &a, const PairSet &b ) { return a.items_ == b.items_; }
			friend bool operator<( const PairSet &a, const PairSet &b ) { return a.items_ < b.items_; }

		private:

			std::vector< Pair > items_;

	};

	/** A PairSet carrying a set of interned preference ids. */
	struct Tagged {
		PairSet pairs;
		std::vector< std::uint32_t > tags;

		Tagged() = default;
		Tagged( PairSet p, std::vector< std::uint32_t > t ) : pairs( std::move( p ) ), tags( std::move( t ) ) {
			std::sort( tags.begin(), tags.end() );
			tags.erase( std::unique( tags.begin(), tags.end() ), tags.end() );
		}

		friend bool operator==( const Tagged &a, const Tagged &b ) {
			return a.pairs == b.pairs && a.tags == b.tags;
		}
		friend bool operator<( const Tagged &a, const Tagged &b ) {
			if( !( a.pairs == b.pairs ) ) {
				return a.pairs < b.pairs;
			}
			return a.tags < b.tags;
		}
	};

	/** Element of an explicit finite carrier. */
	struct TableElem {
		std::string symbol;

		friend bool operator==( const TableElem &a, const TableElem &b ) { return a.symbol == b.symbol; }
		friend bool operator<( const TableElem &a, const TableElem &b ) { return a.symbol < b.symbol; }
	};

	/** A subset of S used as a plausibility value (identity measures). */
	struct StateSet {
		Subset mask = 0;

		friend bool operator==( const StateSet &a, const StateSet &b ) { return a.mask == b.mask; }
		friend bool operator<( const StateSet &a, const StateSet &b ) { return lex_less( a.mask, b.mask ); }
	};

	using Value = std::variant< Rational, RationalPair, PairSet, Tagged, TableElem, StateSet >;

	/** Display names used when rendering ids. Missing entries fall back to numeric ids. */
	struct Naming {
		std::vector< std::string > states;
		std::vector< std::string > consequences;
		std::vector< std::string > tags;

		std::string state( const StateId s ) const {
			return s < states.size() ? states[ s ] : "s" + std::to_string( s );
		}
		std::string consequence( const ConsequenceId c ) const {
			return c < consequences.size() ? consequences[ c ] : "c" + std::to_string( c );
		}
		std::string tag( const std::uint32_t t ) const {
			return t < tags.size() ? tags[ t ] : "r" + std::to_string( t );
		}
	};

	inline std::string render_subset( const Subset x, const Naming &names = {} ) {
		std::string out = "{";
		bool first = true;
		for( const StateId s : members( x ) ) {
			if( !first ) {
				out += ",";
			}
			first = false;
			out += names.state( s );
		}
		return out + "}";
	}

	inline std::string render_pairs( const PairSet &p, const Naming &names ) {
		std::string out = "{";
		bool first = true;
		for( const auto &[ s, c ] : p.items() ) {
			if( !first ) {
				out += ",";
			}
			first = false;
			out += "(" + names.state( s ) + "," + names.consequence( c ) + ")";
		}
		return out + "}";
	}

	/** Canonical text rendering. */
	inline std::string render( const Value &v, const Naming &names = {} ) {
		struct Visitor {
			const Naming &names;
			std::string operator()( const Rational &r ) const { return to_string( r ); }
			std::string operator()( const RationalPair &p ) const {
				return "(" + to_string( p.first ) + "," + to_string( p.second ) + ")";
			}
			std::string operator()( const PairSet &p ) const { return render_pairs( p, names ); }
			std::string operator()( const Tagged &t ) const {
				std::string tags = "{";
				for( std::size_t i = 0; i < t.tags.size(); ++i ) {
					tags += ( i ? "," : "" ) + names.tag( t.tags[ i ] );
				}
				return "(" + render_pairs( t.pairs, names ) + "," + tags + "})";
			}
			std::string operator()( const TableElem &e ) const { return e.symbol; }
			std::string operator()( const StateSet &s ) const { return render_subset( s.mask, names ); }
		};
		return std::visit( Visitor{ names }, v );
	}

} // end namespace geu

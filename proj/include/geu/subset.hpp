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
 * @file subset.hpp
 *
 * Events (subsets of a finite state space) as bit masks, their canonical
 * enumeration order, and set partitions via restricted-growth strings.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace geu {

	using StateId = std::uint32_t;
	using ConsequenceId = std::uint32_t;

	/** A set of states; bit i is state i. */
	using Subset = std::uint64_t;

	/** Largest supported state count. */
	inline constexpr std::size_t max_states = 63;

	inline constexpr Subset full_subset( const std::size_t n ) noexcept {
		return n == 0 ? Subset( 0 ) : ( ~Subset( 0 ) >> ( 64 - n ) );
	}

	inline constexpr Subset complement( const Subset x, const std::size_t n ) noexcept {
		return full_subset( n ) & ~x;
	}

	inline constexpr bool is_subset( const Subset x, const Subset y ) noexcept {
		return ( x & ~y ) == 0;
	}

	inline std::size_t cardinality( const Subset x ) noexcept {
		return static_cast< std::size_t >( std::popcount( x ) );
	}

	inline std::vector< StateId > members( Subset x ) {
		std::vector< StateId > out;
		while( x != 0 ) {
			out.push_back( static_cast< StateId >( std::countr_zero( x ) ) );
			x &= x - 1;
		}
		return out;
	}

	inline Subset subset_of( const std::vector< StateId > &ids ) {
		Subset x = 0;
		for( const StateId s : ids ) {
			x |= Subset( 1 ) << s;
		}
		return x;
	}

	/**
	 * Lexicographic order on sorted member lists, with a proper prefix first.
	 * The empty set is the least element.
	 */
	inline bool lex_less( const Subset x, const Subset y ) {
		const auto a = members( x );
		const auto b = members( y );
		return std::lexicographical_compare( a.begin(), a.end(), b.begin(), b.end() );
	}

	/** All subsets of an n-element state space in canonical (lexicographic) order. */
	inline std::vector< Subset > subsets_lex( const std::size_t n ) {
		std::vector< Subset > out;
		out.reserve( std::size_t( 1 ) << n );
		// depth-first generation of sorted id lists is lexicographic by construction
		std::function< void( Subset, StateId ) > walk = [ & ]( const Subset prefix, const StateId next ) {
			out.push_back( prefix );
			for( StateId s = next; s < n; ++s ) {
				walk( prefix | ( Subset( 1 ) << s ), s + 1 );
			}
		};
		walk( 0, 0 );
		return out;
	}

	/** Nonempty subsets of y in canonical order. */
	inline std::vector< Subset > nonempty_subsets_of( const Subset y, const std::size_t n ) {
		std::vector< Subset > out;
		for( const Subset x : subsets_lex( n ) ) {
			if( x != 0 && is_subset( x, y ) ) {
				out.push_back( x );
			}
		}
		return out;
	}

	/** Bell number B(n); saturates at UINT64_MAX. */
	inline std::uint64_t bell_number( const std::size_t n ) {
		// Bell triangle
		std::vector< std::uint64_t > row{ 1 };
		for( std::size_t i = 0; i < n; ++i ) {
			std::vector< std::uint64_t > next{ row.back() };
			for( const std::uint64_t v : row ) {
				const std::uint64_t prev = next.back();
				next.push_back( prev > UINT64_MAX - v ? UINT64_MAX : prev + v );
			}
			row = std::move( next );
		}
		return row.front();
	}

	using Partition = std::vector< Subset >;

	/**
	 * Visits every partition of y into nonempty cells in restricted-growth
	 * order over the ascending members of y. The visitor returns false to stop.
	 * Returns false iff the visitor stopped early.
	 */
	template< typename Visitor >
	bool for_each_partition( const Subset y, Visitor &&visit ) {
		const std::vector< StateId > elems = members( y );
		const std::size_t m = elems.size();
		if( m == 0 ) {
			return true;
		}
		std::vector< std::size_t > rgs( m, 0 );
		std::vector< std::size_t > maxima( m, 0 );
		Partition cells;
		while( true ) {
			std::size_t blocks = 0;
			for( const std::size_t b : rgs ) {
				blocks = std::max( blocks, b + 1 );
			}
			cells.assign( blocks, 0 );
			for( std::size_t i = 0; i < m; ++i ) {
				cells[ rgs[ i ] ] |= Subset( 1 ) << elems[ i ];
			}
			if( !visit( static_cast< const Partition & >( cells ) ) ) {
				return false;
			}
			// next restricted-growth string: rgs[i] <= 1 + max(rgs[0..i-1])
			std::size_t i = m;
			while( i > 1 ) {
				--i;
				if( rgs[ i ] <= maxima[ i - 1 ] ) {
					break;
				}
				if( i == 1 ) {
					return true;
				}
			}
			if( m == 1 || rgs[ i ] > maxima[ i - 1 ] ) {
				return true;
			}
			++rgs[ i ];
			maxima[ i ] = std::max( maxima[ i - 1 ], rgs[ i ] );
			for( std::size_t j = i + 1; j < m; ++j ) {
				rgs[ j ] = 0;
				maxima[ j ] = maxima[ i ];
			}
		}
	}

	inline std::vector< Partition > partitions_of( const Subset y ) {
		std::vector< Partition > out;
		for_each_partition( y, [ & ]( const Partition &p ) {
			out.push_back( p );
			return true;
		} );
		return out;
	}

} // end namespace geu

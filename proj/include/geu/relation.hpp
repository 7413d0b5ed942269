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
 * @file relation.hpp
 *
 * Finite binary relations stored as dense boolean matrices, and relations
 * over explicit carriers of values.
 */

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "value.hpp"

namespace geu {

	/** A relation on {0, ..., n-1}. */
	class BinaryRelation {

		public:

			BinaryRelation() = default;

			explicit BinaryRelation( const std::size_t n ) : n_( n ), m_( n * n, 0 ) {}

			/** Builds the reflexive closure of the given pairs. */
			static BinaryRelation reflexive( const std::size_t n,
				const std::vector< std::pair< std::size_t, std::size_t > > &pairs = {} )
			{
				BinaryRelation r( n );
				for( std::size_t i = 0; i < n; ++i ) {
					r.set( i, i );
				}
				for( const auto &[ i, j ] : pairs ) {
					if( i >= n || j >= n ) {
						throw Error( ErrorKind::invalid_argument, "relation pair out of range" );
					}
					r.set( i, j );
				}
				return r;
			}

			std::size_t size() const noexcept { return n_; }

			bool operator()( const std::size_t i, const std::size_t j ) const noexcept {
				return m_[ i * n_ + j ] != 0;
			}

			void set( const std::size_t i, const std::size_t j, const bool v = true ) {
				m_[ i * n_ + j ] = v ? 1 : 0;
			}

			bool strict( const std::size_t i, const std::size_t j ) const noexcept {
				return ( *this )( i, j ) && !( *this )( j, i );
			}

			bool equivalent( const std::size_t i, const std::size_t j ) const noexcept {
				return ( *this )( i, j ) && ( *this )( j, i );
			}

			std::vector< std::pair< std::size_t, std::size_t > > pairs() const {
				std::vector< std::pair< std::size_t, std::size_t > > out;
				for( std::size_t i = 0; i < n_; ++i ) {
					for( std::size_t j = 0; j < n_; ++j ) {
						if( ( *this )( i, j ) ) {
							out.emplace_back( i, j );
						}
					}
				}
				return out;
			}

			bool is_reflexive() const noexcept {
				for( std::size_t i = 0; i < n_; ++i ) {
					if( !( *this )( i, i ) ) {
						return false;
					}
				}
				return true;
			}

			/** First unrelated pair, if any. */
			std::optional< std::pair< std::size_t, std::size_t > > totality_violation() const {
				for( std::size_t i = 0; i < n_; ++i ) {
					for( std::size_t j = 0; j < n_; ++j ) {
						if( !( *this )( i, j ) && !( *this )( j, i ) ) {
							return std::make_pair( i, j );
						}
					}
				}
				return std::nullopt;
			}

			/** First (i,j,k) with i~j, j~k but not i~k. */
			std::optional< std::vector< std::size_t > > transitivity_violation() const {
				for( std::size_t i = 0; i < n_; ++i ) {
					for( std::size_t j = 0; j < n_; ++j ) {
						if( !( *this )( i, j ) ) {
							continue;
						}
						for( std::size_t k = 0; k < n_; ++k ) {
							if( ( *this )( j, k ) && !( *this )( i, k ) ) {
								return std::vector< std::size_t >{ i, j, k };
							}
						}
					}
				}
				return std::nullopt;
			}

			std::optional< std::pair< std::size_t, std::size_t > > antisymmetry_violation() const {
				for( std::size_t i = 0; i < n_; ++i ) {
					for( std::size_t j = i + 1; j < n_; ++j ) {
						if( ( *this )( i, j ) && ( *this )( j, i ) ) {
							return std::make_pair( i, j );
						}
					}
				}
				return std::nullopt;
			}

			friend bool operator==( const BinaryRelation &a, const BinaryRelation &b ) {
				return a.n_ == b.n_ && a.m_ == b.m_;
			}

		private:

			std::size_t n_ = 0;
			std::vector< char > m_;

	};

	/** Reflexive relation on acts of a situation, indexed like the act list. */
	using PreferenceRelation = BinaryRelation;

	enum class RelationKind { reflexive, partial_order, total_preorder_claimed };

	/**
	 * A relation on an explicit finite carrier of values. Reflexive closure is
	 * applied at construction; partial orders are validated.
	 */
	class ValueRelation {

		public:

			ValueRelation() = default;

			ValueRelation( std::vector< Value > carrier,
				const std::vector< std::pair< Value, Value > > &pairs,
				const RelationKind kind = RelationKind::reflexive ) :
				carrier_( std::move( carrier ) ), kind_( kind )
			{
				for( std::size_t i = 0; i < carrier_.size(); ++i ) {
					if( !index_.emplace( carrier_[ i ], i ).second ) {
						throw Error( ErrorKind::validation, "duplicate carrier element " + render( carrier_[ i ] ) );
					}
				}
				std::vector< std::pair< std::size_t, std::size_t > > idx;
				for( const auto &[ a, b ] : pairs ) {
					const auto ia = index_of( a );
					const auto ib = index_of( b );
					if( !ia || !ib ) {
						throw Error( ErrorKind::validation,
							"order pair (" + render( a ) + "," + render( b ) + ") leaves the carrier" );
					}
					idx.emplace_back( *ia, *ib );
				}
				rel_ = BinaryRelation::reflexive( carrier_.size(), idx );
				if( kind_ == RelationKind::partial_order ) {
					std::vector< std::string > issues;
					if( const auto v = rel_.antisymmetry_violation() ) {
						issues.push_back( "antisymmetry fails on (" + render( carrier_[ v->first ] ) + "," +
							render( carrier_[ v->second ] ) + ")" );
					}
					if( const auto v = rel_.transitivity_violation() ) {
						issues.push_back( "transitivity fails on (" + render( carrier_[ ( *v )[ 0 ] ] ) + "," +
							render( carrier_[ ( *v )[ 1 ] ] ) + "," + render( carrier_[ ( *v )[ 2 ] ] ) + ")" );
					}
					if( !issues.empty() ) {
						throw Error( ErrorKind::validation, "plausibility order is not a partial order", issues );
					}
				}
			}

			const std::vector< Value > &carrier() const noexcept { return carrier_; }
			const BinaryRelation &matrix() const noexcept { return rel_; }
			RelationKind kind() const noexcept { return kind_; }

			std::optional< std::size_t > index_of( const Value &v ) const {
				const auto it = index_.find( v );
				if( it == index_.end() ) {
					return std::nullopt;
				}
				return it->second;
			}

			bool contains( const Value &v ) const { return index_.count( v ) != 0; }

			/** Undefined pairs (outside the carrier) are unrelated. */
			bool operator()( const Value &a, const Value &b ) const {
				const auto ia = index_of( a );
				const auto ib = index_of( b );
				return ia && ib && rel_( *ia, *ib );
			}

		private:

			std::vector< Value > carrier_;
			std::map< Value, std::size_t > index_;
			BinaryRelation rel_;
			RelationKind kind_ = RelationKind::reflexive;

	};

} // end namespace geu

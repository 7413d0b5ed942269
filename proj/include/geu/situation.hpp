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
 * @file situation.hpp
 *
 * Decision situations (A, S, C): named states and consequences plus a
 * finite set of named simple acts.
 */

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "check.hpp"
#include "errors.hpp"
#include "relation.hpp"
#include "subset.hpp"
#include "value.hpp"

namespace geu {

	struct NamedAct {
		std::string name;
		Act map;

		friend bool operator==( const NamedAct &, const NamedAct & ) = default;
	};

	inline Act constant_act( const ConsequenceId c, const std::size_t n_states ) {
		return Act( n_states, c );
	}

	/** The act equal to a1 on x and to a2 elsewhere. */
	inline Act splice( const Act &a1, const Subset x, const Act &a2 ) {
		Act out( a2 );
		for( std::size_t s = 0; s < out.size(); ++s ) {
			if( ( x >> s ) & 1 ) {
				out[ s ] = a1[ s ];
			}
		}
		return out;
	}

	/** The graph {(s, a(s))} of an act. */
	inline PairSet act_graph( const Act &a ) {
		std::vector< PairSet::Pair > items;
		items.reserve( a.size() );
		for( std::size_t s = 0; s < a.size(); ++s ) {
			items.emplace_back( static_cast< StateId >( s ), a[ s ] );
		}
		return PairSet( std::move( items ) );
	}

	class DecisionSituation {

		public:

			DecisionSituation( std::vector< std::string > states, std::vector< std::string > consequences,
				std::vector< NamedAct > acts, const bool allow_duplicates = false ) :
				states_( std::move( states ) ), consequences_( std::move( consequences ) ),
				acts_( std::move( acts ) ), allow_duplicates_( allow_duplicates )
			{
				std::vector< std::string > issues;
				if( states_.empty() ) {
					issues.push_back( "state set is empty" );
				}
				if( states_.size() > max_states ) {
					issues.push_back( "at most " + std::to_string( max_states ) + " states are supported" );
				}
				if( consequences_.empty() ) {
					issues.push_back( "consequence set is empty" );
				}
				if( acts_.empty() ) {
					issues.push_back( "act set is empty" );
				}
				check_unique( states_, "state", issues );
				check_unique( consequences_, "consequence", issues );
				std::set< std::string > names;
				for( std::size_t i = 0; i < acts_.size(); ++i ) {
					const NamedAct &a = acts_[ i ];
					if( !names.insert( a.name ).second ) {
						issues.push_back( "duplicate act name " + a.name );
					}
					if( a.map.size() != states_.size() ) {
						issues.push_back( "act " + a.name + " is not total on the states" );
						continue;
					}
					bool ok = true;
					for( const ConsequenceId c : a.map ) {
						if( c >= consequences_.size() ) {
							issues.push_back( "act " + a.name + " maps to an undeclared consequence" );
							ok = false;
							break;
						}
					}
					if( !ok ) {
						continue;
					}
					auto [ it, fresh ] = index_.emplace( a.map, i );
					if( !fresh ) {
						if( !allow_duplicates_ ) {
							issues.push_back( "acts " + acts_[ it->second ].name + " and " + a.name +
								" denote the same function" );
						}
						has_duplicates_ = true;
					}
				}
				if( !issues.empty() ) {
					throw Error( ErrorKind::validation, "invalid decision situation", issues );
				}
			}

			std::size_t n_states() const noexcept { return states_.size(); }
			std::size_t n_consequences() const noexcept { return consequences_.size(); }
			std::size_t n_acts() const noexcept { return acts_.size(); }

			const std::vector< std::string > &states() const noexcept { return states_; }
			const std::vector< std::string > &consequences() const noexcept { return consequences_; }
			const std::vector< NamedAct > &acts() const noexcept { return acts_; }
			const NamedAct &act( const std::size_t i ) const { return acts_.at( i ); }

			bool allows_duplicates() const noexcept { return allow_duplicates_; }
			bool has_duplicates() const noexcept { return has_duplicates_; }

			Subset full() const noexcept { return full_subset( states_.size() ); }

			/** Index of the first act in A denoting this function. */
			std::optional< std::size_t > find( const Act &a ) const {
				const auto it = index_.find( a );
				if( it == index_.end() ) {
					return std::nullopt;
				}
				return it->second;
			}

			bool contains( const Act &a ) const { return index_.count( a ) != 0; }

			std::optional< std::size_t > find_name( const std::string &name ) const {
				for( std::size_t i = 0; i < acts_.size(); ++i ) {
					if( acts_[ i ].name == name ) {
						return i;
					}
				}
				return std::nullopt;
			}

			/** Number of simple acts |C|^|S|, saturating. */
			std::uint64_t simple_act_count() const noexcept {
				std::uint64_t total = 1;
				for( std::size_t i = 0; i < states_.size(); ++i ) {
					if( total > UINT64_MAX / consequences_.size() ) {
						return UINT64_MAX;
					}
					total *= consequences_.size();
				}
				return total;
			}

			/** True iff A is the set of all simple acts. */
			bool has_all_simple_acts() const noexcept {
				return index_.size() == simple_act_count();
			}

			Naming naming() const { return Naming{ states_, consequences_, {} }; }

			/** Name if the act lies in A, otherwise its map written as (c_s1,...). */
			std::string act_label( const Act &a ) const {
				if( const auto i = find( a ) ) {
					return acts_[ *i ].name;
				}
				std::string out = "(";
				for( std::size_t s = 0; s < a.size(); ++s ) {
					out += ( s ? "," : "" ) + ( a[ s ] < consequences_.size() ? consequences_[ a[ s ] ] : std::string( "?" ) );
				}
				return out + ")";
			}

			std::optional< std::size_t > state_index( const std::string &name ) const {
				return position( states_, name );
			}

			std::optional< std::size_t > consequence_index( const std::string &name ) const {
				return position( consequences_, name );
			}

		private:

			static std::optional< std::size_t > position( const std::vector< std::string > &v, const std::string &name ) {
				for( std::size_t i = 0; i < v.size(); ++i ) {
					if( v[ i ] == name ) {
						return i;
					}
				}
				return std::nullopt;
			}

			static void check_unique( const std::vector< std::string > &v, const char *what,
				std::vector< std::string > &issues )
			{
				std::set< std::string > seen;
				for( const auto &x : v ) {
					if( !seen.insert( x ).second ) {
						issues.push_back( std::string( "duplicate " ) + what + " id " + x );
					}
				}
			}

			std::vector< std::string > states_;
			std::vector< std::string > consequences_;
			std::vector< NamedAct > acts_;
			std::map< Act, std::size_t > index_;
			bool allow_duplicates_ = false;
			bool has_duplicates_ = false;

	};

	using SituationPtr = std::shared_ptr< const DecisionSituation >;

	/**
	 * All simple acts in lexicographic order (first state most significant);
	 * the first is the constant act on the first consequence.
	 */
	inline std::vector< Act > enumerate_simple_acts( const std::size_t n_states, const std::size_t n_consequences,
		const std::uint64_t budget )
	{
		std::uint64_t total = 1;
		for( std::size_t i = 0; i < n_states; ++i ) {
			if( total > UINT64_MAX / n_consequences ) {
				total = UINT64_MAX;
				break;
			}
			total *= n_consequences;
		}
		if( total > budget ) {
			throw BudgetExceeded( "enumerating simple acts", total, budget );
		}
		std::vector< Act > out;
		out.reserve( total );
		Act cur( n_states, 0 );
		for( std::uint64_t k = 0; k < total; ++k ) {
			out.push_back( cur );
			for( std::size_t s = n_states; s-- > 0; ) {
				if( ++cur[ s ] < n_consequences ) {
					break;
				}
				cur[ s ] = 0;
			}
		}
		return out;
	}

	inline std::vector< Act > enumerate_simple_acts( const DecisionSituation &sit, const std::uint64_t budget ) {
		return enumerate_simple_acts( sit.n_states(), sit.n_consequences(), budget );
	}

	/** Names simple acts after their maps, e.g. "(c1,c2)". */
	inline std::vector< NamedAct > all_simple_acts( const std::vector< std::string > &states,
		const std::vector< std::string > &consequences, const std::uint64_t budget )
	{
		std::vector< NamedAct > out;
		for( Act &a : enumerate_simple_acts( states.size(), consequences.size(), budget ) ) {
			std::string name = "(";
			for( std::size_t s = 0; s < a.size(); ++s ) {
				name += ( s ? "," : "" ) + consequences[ a[ s ] ];
			}
			out.push_back( NamedAct{ name + ")", std::move( a ) } );
		}
		return out;
	}

	/** Builds a preference relation on A from ordered act-name pairs (reflexive closure applied). */
	inline PreferenceRelation preference_from_names( const DecisionSituation &sit,
		const std::vector< std::pair< std::string, std::string > > &pairs )
	{
		std::vector< std::pair< std::size_t, std::size_t > > idx;
		std::vector< std::string > issues;
		for( const auto &[ a, b ] : pairs ) {
			const auto ia = sit.find_name( a );
			const auto ib = sit.find_name( b );
			if( !ia ) {
				issues.push_back( "preference names unknown act " + a );
			}
			if( !ib ) {
				issues.push_back( "preference names unknown act " + b );
			}
			if( ia && ib ) {
				idx.emplace_back( *ia, *ib );
			}
		}
		if( !issues.empty() ) {
			throw Error( ErrorKind::validation, "invalid preference relation", issues );
		}
		return PreferenceRelation::reflexive( sit.n_acts(), idx );
	}

} // end namespace geu

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
 * @file measures.hpp
 *
 * Plausibility measures: maps from events to a bounded plausibility order,
 * materialized eagerly when the subset count fits the budget.
 */

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "check.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "value.hpp"

namespace geu {

	/** A bounded order on plausibility values. */
	class PlausibilityOrder {

		public:

			virtual ~PlausibilityOrder() = default;
			virtual std::string name() const = 0;
			virtual bool contains( const Value &v ) const = 0;
			virtual bool leq( const Value &a, const Value &b ) const = 0;
			virtual Value bottom() const = 0;
			virtual Value top() const = 0;

	};

	using PlausibilityOrderPtr = std::shared_ptr< const PlausibilityOrder >;

	/** [0,1] under ≤. */
	class ProbabilityOrder final : public PlausibilityOrder {
		public:
			std::string name() const override { return "probability"; }
			bool contains( const Value &v ) const override {
				const auto *r = std::get_if< Rational >( &v );
				return r != nullptr && *r >= 0 && *r <= 1;
			}
			bool leq( const Value &a, const Value &b ) const override {
				return internal::as_rational( a, "leq" ) <= internal::as_rational( b, "leq" );
			}
			Value bottom() const override { return Rational( 0 ); }
			Value top() const override { return Rational( 1 ); }
	};

	/** [0,1]² componentwise. */
	class PairProbabilityOrder final : public PlausibilityOrder {
		public:
			std::string name() const override { return "pair"; }
			bool contains( const Value &v ) const override {
				const auto *p = std::get_if< RationalPair >( &v );
				return p != nullptr && internal::unit_interval( p->first ) && internal::unit_interval( p->second );
			}
			bool leq( const Value &a, const Value &b ) const override {
				const auto &x = internal::as_pair( a, "leq" );
				const auto &y = internal::as_pair( b, "leq" );
				return x.first <= y.first && x.second <= y.second;
			}
			Value bottom() const override { return RationalPair{ 0, 0 }; }
			Value top() const override { return RationalPair{ 1, 1 }; }
	};

	/** (2^S, ⊆). */
	class SubsetOrder final : public PlausibilityOrder {
		public:
			explicit SubsetOrder( const std::size_t n ) : n_( n ) {}
			std::string name() const override { return "identity"; }
			bool contains( const Value &v ) const override {
				const auto *s = std::get_if< StateSet >( &v );
				return s != nullptr && is_subset( s->mask, full_subset( n_ ) );
			}
			bool leq( const Value &a, const Value &b ) const override {
				return is_subset( internal::as_stateset( a, "leq" ), internal::as_stateset( b, "leq" ) );
			}
			Value bottom() const override { return StateSet{ 0 }; }
			Value top() const override { return StateSet{ full_subset( n_ ) }; }
		private:
			std::size_t n_;
	};

	/** The plausibility order of an expectation domain. */
	class DomainPlausibilityOrder final : public PlausibilityOrder {
		public:
			explicit DomainPlausibilityOrder( DomainPtr d ) : d_( std::move( d ) ) {}
			std::string name() const override { return std::string( domain_kind_name( d_->kind() ) ); }
			bool contains( const Value &v ) const override { return d_->in_p( v ); }
			bool leq( const Value &a, const Value &b ) const override { return d_->leq_p( a, b ); }
			Value bottom() const override { return d_->bottom(); }
			Value top() const override { return d_->top(); }
		private:
			DomainPtr d_;
	};

	/** Per-state nonnegative weights summing to exactly 1. */
	class ProbabilityWeights {

		public:

			explicit ProbabilityWeights( std::vector< Rational > w ) : w_( std::move( w ) ) {
				std::vector< std::string > issues;
				Rational sum = 0;
				for( std::size_t s = 0; s < w_.size(); ++s ) {
					if( w_[ s ] < 0 ) {
						issues.push_back( "weight of state " + std::to_string( s ) + " is negative: " + to_string( w_[ s ] ) );
					}
					sum += w_[ s ];
				}
				if( sum != 1 ) {
					issues.push_back( "weights sum to " + to_string( sum ) + ", not 1" );
				}
				if( !issues.empty() ) {
					throw Error( ErrorKind::validation, "invalid probability weights", issues );
				}
			}

			const std::vector< Rational > &weights() const noexcept { return w_; }
			std::size_t size() const noexcept { return w_.size(); }

			Rational of( const Subset x ) const {
				Rational sum = 0;
				for( const StateId s : members( x ) ) {
					sum += w_[ s ];
				}
				return sum;
			}

			friend bool operator==( const ProbabilityWeights &a, const ProbabilityWeights &b ) { return a.w_ == b.w_; }

		private:

			std::vector< Rational > w_;

	};

	using MeasureEntries = std::vector< std::pair< Subset, Value > >;

	struct IdentitySource {
		friend bool operator==( const IdentitySource &, const IdentitySource & ) = default;
	};

	struct PairSource {
		ProbabilityWeights first;
		ProbabilityWeights second;
		friend bool operator==( const PairSource &a, const PairSource &b ) {
			return a.first == b.first && a.second == b.second;
		}
	};

	/** How a measure was specified; kept so it can be written back out. */
	using MeasureSource = std::variant< ProbabilityWeights, PairSource, IdentitySource, MeasureEntries >;

	class PlausibilityMeasure {

		public:

			PlausibilityMeasure( const std::size_t n_states, PlausibilityOrderPtr order, MeasureSource source,
				std::function< Value( Subset ) > rule, const std::uint64_t subset_budget = Budgets{}.subsets ) :
				n_( n_states ), order_( std::move( order ) ), source_( std::move( source ) ), rule_( std::move( rule ) )
			{
				if( n_ == 0 || n_ > max_states ) {
					throw Error( ErrorKind::invalid_argument, "measure needs between 1 and 63 states" );
				}
				if( n_ < 63 && ( std::uint64_t( 1 ) << n_ ) <= subset_budget ) {
					table_.reserve( std::size_t( 1 ) << n_ );
					for( Subset x = 0; x < ( Subset( 1 ) << n_ ); ++x ) {
						table_.push_back( rule_( x ) );
					}
				}
			}

			std::size_t n_states() const noexcept { return n_; }
			const PlausibilityOrder &order() const noexcept { return *order_; }
			const PlausibilityOrderPtr &order_ptr() const noexcept { return order_; }
			const MeasureSource &source() const noexcept { return source_; }
			bool materialized() const noexcept { return !table_.empty(); }

			Value operator()( const Subset x ) const {
				if( !table_.empty() ) {
					return table_[ x ];
				}
				return rule_( x );
			}

			/** Stable structural description. */
			std::string fingerprint() const {
				std::string out = order_->name() + ";n=" + std::to_string( n_ );
				for( Subset x = 0; x < ( Subset( 1 ) << std::min< std::size_t >( n_, 20 ) ); ++x ) {
					out += ";" + render( ( *this )( x ) );
				}
				return out;
			}

		private:

			std::size_t n_;
			PlausibilityOrderPtr order_;
			MeasureSource source_;
			std::function< Value( Subset ) > rule_;
			std::vector< Value > table_;

	};

	inline PlausibilityMeasure probability_measure( const ProbabilityWeights &w ) {
		const ProbabilityWeights copy = w;
		return PlausibilityMeasure( w.size(), std::make_shared< const ProbabilityOrder >(), w,
			[ copy ]( const Subset x ) { return Value( copy.of( x ) ); } );
	}

	inline PlausibilityMeasure pair_measure( const ProbabilityWeights &w1, const ProbabilityWeights &w2 ) {
		if( w1.size() != w2.size() ) {
			throw Error( ErrorKind::validation, "pair measure weights range over different state sets" );
		}
		const ProbabilityWeights a = w1;
		const ProbabilityWeights b = w2;
		return PlausibilityMeasure( w1.size(), std::make_shared< const PairProbabilityOrder >(), PairSource{ w1, w2 },
			[ a, b ]( const Subset x ) { return Value( RationalPair{ a.of( x ), b.of( x ) } ); } );
	}

	inline PlausibilityMeasure identity_measure( const std::size_t n_states ) {
		return PlausibilityMeasure( n_states, std::make_shared< const SubsetOrder >( n_states ), IdentitySource{},
			[]( const Subset x ) { return Value( StateSet{ x } ); } );
	}

	inline PlausibilityMeasure identity_measure( const DecisionSituation &sit ) {
		return identity_measure( sit.n_states() );
	}

	/** An explicit measure; every one of the 2^n subsets must appear exactly once. */
	inline PlausibilityMeasure table_measure( const std::size_t n_states, const MeasureEntries &entries,
		PlausibilityOrderPtr order )
	{
		if( n_states == 0 || n_states > 20 ) {
			throw Error( ErrorKind::invalid_argument, "table measures support 1 to 20 states" );
		}
		std::vector< std::string > issues;
		std::map< Subset, Value > table;
		for( const auto &[ x, v ] : entries ) {
			if( !is_subset( x, full_subset( n_states ) ) ) {
				issues.push_back( "entry for a subset outside S" );
				continue;
			}
			if( !table.emplace( x, v ).second ) {
				issues.push_back( "duplicate entry for " + render_subset( x ) );
			}
		}
		for( Subset x = 0; x < ( Subset( 1 ) << n_states ); ++x ) {
			if( table.count( x ) == 0 ) {
				issues.push_back( "missing entry for " + render_subset( x ) );
			}
		}
		if( !issues.empty() ) {
			throw Error( ErrorKind::validation, "invalid measure table", issues );
		}
		auto shared = std::make_shared< const std::map< Subset, Value > >( std::move( table ) );
		return PlausibilityMeasure( n_states, std::move( order ), entries,
			[ shared ]( const Subset x ) { return shared->at( x ); } );
	}

	/**
	 * Pl1–Pl3 against the measure's order (or an overriding one), exhaustive
	 * over subset pairs. Values outside the order's carrier are reported too.
	 */
	inline ValidationReport validate_measure( const PlausibilityMeasure &pl, const PlausibilityOrder *against = nullptr ) {
		const PlausibilityOrder &ord = against ? *against : pl.order();
		const std::size_t n = pl.n_states();
		const Subset full = full_subset( n );
		ValidationReport report;

		CheckResult carrier{ "Pl-carrier" };
		for( const Subset x : subsets_lex( n ) ) {
			if( !ord.contains( pl( x ) ) ) {
				fail( carrier, { { "X", EventBinding{ x } }, { "value", pl( x ) } } );
				break;
			}
		}
		report.checks.push_back( carrier );

		CheckResult pl1{ "Pl1" };
		if( !( pl( 0 ) == ord.bottom() ) ) {
			fail( pl1, { { "X", EventBinding{ 0 } }, { "value", pl( 0 ) } } );
		}
		report.checks.push_back( pl1 );

		CheckResult pl2{ "Pl2" };
		if( !( pl( full ) == ord.top() ) ) {
			fail( pl2, { { "X", EventBinding{ full } }, { "value", pl( full ) } } );
		}
		report.checks.push_back( pl2 );

		CheckResult pl3{ "Pl3" };
		if( carrier.holds ) {
			const auto order = subsets_lex( n );
			for( const Subset x : order ) {
				bool done = false;
				for( const Subset y : order ) {
					if( is_subset( x, y ) && !ord.leq( pl( x ), pl( y ) ) ) {
						fail( pl3, { { "X", EventBinding{ x } }, { "Y", EventBinding{ y } } } );
						done = true;
						break;
					}
				}
				if( done ) {
					break;
				}
			}
		} else {
			pl3.note = "skipped: values outside the plausibility carrier";
		}
		report.checks.push_back( pl3 );
		return report;
	}

} // end namespace geu

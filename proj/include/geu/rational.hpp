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
 * @file rational.hpp
 *
 * Exact rationals backed by Boost.Multiprecision. Values are kept in lowest
 * terms with a positive denominator by the backend, so structural equality
 * coincides with numeric equality.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace geu {

	using Integer = boost::multiprecision::cpp_int;
	using Rational = boost::multiprecision::cpp_rational;

	/** Renders as an integer string or as "p/q". */
	inline std::string to_string( const Rational &r ) {
		const Integer num = boost::multiprecision::numerator( r );
		const Integer den = boost::multiprecision::denominator( r );
		if( den == 1 ) {
			return num.str();
		}
		return num.str() + "/" + den.str();
	}

	namespace internal {

		inline bool all_digits( std::string_view s ) {
			if( s.empty() ) {
				return false;
			}
			for( const char ch : s ) {
				if( ch < '0' || ch > '9' ) {
					return false;
				}
			}
			return true;
		}

		inline std::optional< Integer > parse_integer( std::string_view s ) {
			bool negative = false;
			if( !s.empty() && ( s.front() == '-' || s.front() == '+' ) ) {
				negative = s.front() == '-';
				s.remove_prefix( 1 );
			}
			if( !all_digits( s ) ) {
				return std::nullopt;
			}
			const Integer v{ std::string( s ) };
			return negative ? Integer( -v ) : v;
		}

	} // end namespace internal

	/**
	 * Parses "p", "-p", "p/q" or a finite decimal such as "0.25".
	 * Returns nullopt on malformed input or a zero denominator.
	 */
	inline std::optional< Rational > parse_rational( std::string_view text ) {
		const auto slash = text.find( '/' );
		if( slash != std::string_view::npos ) {
			const auto num = internal::parse_integer( text.substr( 0, slash ) );
			const std::string_view den_text = text.substr( slash + 1 );
			if( !num || !internal::all_digits( den_text ) ) {
				return std::nullopt;
			}
			const Integer den( ( std::string( den_text ) ) );
			if( den == 0 ) {
				return std::nullopt;
			}
			return Rational( *num, den );
		}
		const auto dot = text.find( '.' );
		if( dot != std::string_view::npos ) {
			const std::string_view frac = text.substr( dot + 1 );
			std::string_view whole = text.substr( 0, dot );
			bool negative = false;
			if( !whole.empty() && ( whole.front() == '-' || whole.front() == '+' ) ) {
				negative = whole.front() == '-';
				whole.remove_prefix( 1 );
			}
			if( !internal::all_digits( frac ) || ( !whole.empty() && !internal::all_digits( whole ) ) ) {
				return std::nullopt;
			}
			Integer scale = 1;
			for( std::size_t i = 0; i < frac.size(); ++i ) {
				scale *= 10;
			}
			const Integer w = whole.empty() ? Integer( 0 ) : Integer( std::string( whole ) );
			const Integer f( ( std::string( frac ) ) );
			Rational r( Integer( w * scale + f ), scale );
			return negative ? Rational( -r ) : r;
		}
		const auto v = internal::parse_integer( text );
		if( !v ) {
			return std::nullopt;
		}
		return Rational( *v );
	}

} // end namespace geu

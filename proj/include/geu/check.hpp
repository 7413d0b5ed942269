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
 * @file check.hpp
 *
 * Results of law, postulate and axiom checks. A failing result carries a
 * witness: the binding of every quantified variable at the first violating
 * instance under the canonical enumeration order.
 */

#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "value.hpp"

namespace geu {

	/** A total map from states to consequences. */
	using Act = std::vector< ConsequenceId >;

	struct ActBinding {
		Act map;
		friend bool operator==( const ActBinding &, const ActBinding & ) = default;
	};

	struct EventBinding {
		Subset mask = 0;
		friend bool operator==( const EventBinding &, const EventBinding & ) = default;
	};

	struct ConsequenceBinding {
		ConsequenceId id = 0;
		friend bool operator==( const ConsequenceBinding &, const ConsequenceBinding & ) = default;
	};

	struct PartitionBinding {
		Partition cells;
		friend bool operator==( const PartitionBinding &, const PartitionBinding & ) = default;
	};

	using BindingValue = std::variant< ActBinding, EventBinding, ConsequenceBinding, PartitionBinding, Value >;

	struct Binding {
		std::string var;
		BindingValue value;
	};

	enum class Version { general, special };

	inline const char * version_name( const Version v ) noexcept {
		return v == Version::general ? "general" : "special";
	}

	struct CheckResult {
		std::string name;
		std::optional< Version > version;
		bool holds = true;
		std::vector< Binding > witness;
		std::size_t vacuous = 0;
		/** Free-form remark, e.g. certification source or probe count. */
		std::string note;
		/** Distinguished element reported by some checks (the ⊕-identity). */
		std::optional< Value > element;

		const BindingValue * find( const std::string &var ) const {
			for( const auto &b : witness ) {
				if( b.var == var ) {
					return &b.value;
				}
			}
			return nullptr;
		}

		template< typename T >
		const T & get( const std::string &var ) const {
			const BindingValue *v = find( var );
			if( v == nullptr ) {
				throw Error( ErrorKind::invalid_argument, name + ": witness lacks variable " + var );
			}
			if constexpr( std::is_same_v< T, Value > ) {
				return std::get< Value >( *v );
			} else {
				return std::get< T >( *v );
			}
		}
	};

	struct ValidationReport {
		std::vector< CheckResult > checks;

		bool ok() const {
			for( const auto &c : checks ) {
				if( !c.holds ) {
					return false;
				}
			}
			return true;
		}

		const CheckResult * find( const std::string &name ) const {
			for( const auto &c : checks ) {
				if( c.name == name ) {
					return &c;
				}
			}
			return nullptr;
		}
	};

	/** Marks a result as failed at the given bindings. */
	inline void fail( CheckResult &r, std::vector< Binding > witness ) {
		r.holds = false;
		r.witness = std::move( witness );
	}

} // end namespace geu

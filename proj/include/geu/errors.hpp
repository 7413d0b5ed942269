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
 * @file errors.hpp
 *
 * Error kinds raised by the library. Every error carries the list of
 * individual violations so callers can report all of them at once.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geu {

	enum class ErrorKind {
		parse,
		validation,
		budget,
		precondition,
		special_version_mismatch,
		duplicate_act,
		not_a_representation,
		unsupported,
		empty_fold,
		invalid_argument
	};

	inline const char * error_kind_name( const ErrorKind k ) noexcept {
		switch( k ) {
			case ErrorKind::parse: return "parse-error";
			case ErrorKind::validation: return "validation-error";
			case ErrorKind::budget: return "budget-exceeded";
			case ErrorKind::precondition: return "precondition-violated";
			case ErrorKind::special_version_mismatch: return "special-version-mismatch";
			case ErrorKind::duplicate_act: return "duplicate-act-obstruction";
			case ErrorKind::not_a_representation: return "not-a-representation";
			case ErrorKind::unsupported: return "unsupported-domain";
			case ErrorKind::empty_fold: return "empty-sequence";
			case ErrorKind::invalid_argument: return "invalid-argument";
		}
		return "error";
	}

	class Error : public std::runtime_error {

		public:

			Error( const ErrorKind kind, const std::string &message, std::vector< std::string > details = {} ) :
				std::runtime_error( message ), kind_( kind ), details_( std::move( details ) )
			{}

			ErrorKind kind() const noexcept { return kind_; }
			const std::vector< std::string > &details() const noexcept { return details_; }

		private:

			ErrorKind kind_;
			std::vector< std::string > details_;

	};

	/** Thrown when an enumeration would exceed its configured budget. */
	class BudgetExceeded : public Error {

		public:

			BudgetExceeded( const std::string &what, const std::uint64_t required, const std::uint64_t budget ) :
				Error( ErrorKind::budget,
					what + " requires " + std::to_string( required ) + " but budget is " + std::to_string( budget ) ),
				required_( required ), budget_( budget )
			{}

			std::uint64_t required() const noexcept { return required_; }
			std::uint64_t budget() const noexcept { return budget_; }

		private:

			std::uint64_t required_;
			std::uint64_t budget_;

	};

	/** Enumeration limits shared by checkers and the command line. */
	struct Budgets {
		std::uint64_t acts = 4096;
		std::uint64_t partitions = 203;
		std::uint64_t probes = 10000;
		std::uint64_t subsets = std::uint64_t( 1 ) << 16;
	};

} // end namespace geu

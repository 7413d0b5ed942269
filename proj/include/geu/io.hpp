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
 * @file io.hpp
 *
 * The JSON problem document: a typed mirror of the file, its parser and
 * emitter, and assembly of the library objects it describes.
 *
 * Layout of a document:
 * \code
 * {
 *   "states": ["s1", "s2"],
 *   "consequences": ["c1", "c2"],
 *   "acts": { "aL": { "s1": "c1", "s2": "c2" } }   or   "acts": "all",
 *   "allow_duplicate_acts": false,
 *   "domain": { "type": "standard" },
 *   "utility": { "c1": "1", "c2": "0" },
 *   "plausibility": { "type": "probability", "weights": { "s1": "3/10", "s2": "7/10" } },
 *   "preference": [ ["aL", "aK"] ]
 * }
 * \endcode
 * Domain types are standard, pair, pair-min, table, canonical (optionally
 * "monotonic": true) and tagged. Canonical and tagged documents carry no
 * utility and use the identity plausibility; their problem is synthesized
 * from the preference.
 */

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "decision.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "measures.hpp"
#include "situation.hpp"
#include "synthesis.hpp"

namespace geu {

	using Json = nlohmann::ordered_json;

	struct PlausibilitySpec {
		enum class Kind { probability, pair, identity, table };
		Kind kind = Kind::identity;
		std::vector< Rational > weights1;
		std::vector< Rational > weights2;
		MeasureEntries entries;

		friend bool operator==( const PlausibilitySpec &, const PlausibilitySpec & ) = default;
	};

	struct ProblemDocument {
		std::vector< std::string > states;
		std::vector< std::string > consequences;
		bool all_acts = false;
		std::vector< NamedAct > acts;
		bool allow_duplicates = false;
		DomainKind domain = DomainKind::standard;
		bool monotonic = false;
		std::optional< TableSpec > table;
		/** Per consequence; empty for canonical and tagged documents. */
		std::vector< Value > utility;
		PlausibilitySpec plausibility;
		std::optional< std::vector< std::pair< std::string, std::string > > > preference;

		bool synthesized() const noexcept { return domain == DomainKind::canonical || domain == DomainKind::tagged; }

		friend bool operator==( const ProblemDocument &, const ProblemDocument & ) = default;
	};

	namespace internal {

		[[noreturn]] inline void parse_error( const std::string &where, const std::string &what ) {
			throw Error( ErrorKind::parse, what + " at " + ( where.empty() ? "/" : where ) );
		}

		inline const Json &member( const Json &j, const std::string &key, const std::string &where ) {
			if( !j.is_object() || !j.contains( key ) ) {
				parse_error( where, "missing field \"" + key + "\"" );
			}
			return j.at( key );
		}

		inline std::string as_string( const Json &j, const std::string &where ) {
			if( !j.is_string() ) {
				parse_error( where, "expected a string" );
			}
			return j.get< std::string >();
		}

		inline std::vector< std::string > string_list( const Json &j, const std::string &where ) {
			if( !j.is_array() ) {
				parse_error( where, "expected an array of strings" );
			}
			std::vector< std::string > out;
			for( std::size_t i = 0; i < j.size(); ++i ) {
				out.push_back( as_string( j[ i ], where + "/" + std::to_string( i ) ) );
			}
			return out;
		}

		inline Rational rational_from( const Json &j, const std::string &where ) {
			std::string text;
			if( j.is_string() ) {
				text = j.get< std::string >();
			} else if( j.is_number() ) {
				text = j.dump();
			} else {
				parse_error( where, "expected a rational" );
			}
			const auto r = parse_rational( text );
			if( !r ) {
				parse_error( where, "malformed rational \"" + text + "\"" );
			}
			return *r;
		}

		inline std::size_t position_of( const std::vector< std::string > &ids, const std::string &id,
			const char *what, const std::string &where )
		{
			for( std::size_t i = 0; i < ids.size(); ++i ) {
				if( ids[ i ] == id ) {
					return i;
				}
			}
			throw Error( ErrorKind::validation, std::string( "unknown " ) + what + " \"" + id + "\" at " + where );
		}

		inline Subset event_from( const Json &j, const std::vector< std::string > &states, const std::string &where ) {
			Subset x = 0;
			const auto ids = string_list( j, where );
			for( std::size_t i = 0; i < ids.size(); ++i ) {
				x |= Subset( 1 ) << position_of( states, ids[ i ], "state", where + "/" + std::to_string( i ) );
			}
			return x;
		}

		inline Json event_json( const Subset x, const std::vector< std::string > &states ) {
			Json out = Json::array();
			for( const StateId s : members( x ) ) {
				out.push_back( states[ s ] );
			}
			return out;
		}

		/** Parses a utility (or, if plausibility is set, a plausibility value) of the domain. */
		inline Value scalar_from( const Json &j, const DomainKind kind, const bool plausibility, const std::string &where ) {
			switch( kind ) {
				case DomainKind::standard:
					return rational_from( j, where );
				case DomainKind::pair:
				case DomainKind::pair_min:
					if( !plausibility ) {
						return rational_from( j, where );
					}
					if( !j.is_array() || j.size() != 2 ) {
						parse_error( where, "expected a pair [a, b]" );
					}
					return RationalPair{ rational_from( j[ 0 ], where + "/0" ), rational_from( j[ 1 ], where + "/1" ) };
				case DomainKind::table:
					return TableElem{ as_string( j, where ) };
				default:
					parse_error( where, "values are not written for this domain type" );
			}
		}

		inline std::vector< Rational > weights_from( const Json &j, const std::vector< std::string > &states,
			const std::string &where )
		{
			if( !j.is_object() ) {
				parse_error( where, "expected an object of state weights" );
			}
			std::vector< std::optional< Rational > > w( states.size() );
			for( const auto &[ key, value ] : j.items() ) {
				const std::size_t s = position_of( states, key, "state", where + "/" + key );
				w[ s ] = rational_from( value, where + "/" + key );
			}
			std::vector< Rational > out;
			for( std::size_t s = 0; s < states.size(); ++s ) {
				if( !w[ s ] ) {
					throw Error( ErrorKind::validation, "no weight for state " + states[ s ] + " at " + where );
				}
				out.push_back( *w[ s ] );
			}
			return out;
		}

		inline Json weights_json( const std::vector< Rational > &w, const std::vector< std::string > &states ) {
			Json out = Json::object();
			for( std::size_t s = 0; s < w.size(); ++s ) {
				out[ states[ s ] ] = to_string( w[ s ] );
			}
			return out;
		}

		inline std::optional< DomainKind > domain_kind_from( const std::string &s ) {
			for( const DomainKind k : { DomainKind::standard, DomainKind::pair, DomainKind::pair_min, DomainKind::table,
				DomainKind::canonical, DomainKind::tagged } )
			{
				if( s == domain_kind_name( k ) ) {
					return k;
				}
			}
			return std::nullopt;
		}

		inline std::vector< std::pair< std::string, std::string > > pair_list( const Json &j, const std::string &where ) {
			if( !j.is_array() ) {
				parse_error( where, "expected an array of pairs" );
			}
			std::vector< std::pair< std::string, std::string > > out;
			for( std::size_t i = 0; i < j.size(); ++i ) {
				const std::string w = where + "/" + std::to_string( i );
				if( !j[ i ].is_array() || j[ i ].size() != 2 ) {
					parse_error( w, "expected a pair" );
				}
				out.emplace_back( as_string( j[ i ][ 0 ], w + "/0" ), as_string( j[ i ][ 1 ], w + "/1" ) );
			}
			return out;
		}

		inline std::vector< std::array< std::string, 3 > > triple_list( const Json &j, const std::string &where ) {
			if( !j.is_array() ) {
				parse_error( where, "expected an array of triples" );
			}
			std::vector< std::array< std::string, 3 > > out;
			for( std::size_t i = 0; i < j.size(); ++i ) {
				const std::string w = where + "/" + std::to_string( i );
				if( !j[ i ].is_array() || j[ i ].size() != 3 ) {
					parse_error( w, "expected a triple" );
				}
				out.push_back( { as_string( j[ i ][ 0 ], w + "/0" ), as_string( j[ i ][ 1 ], w + "/1" ),
					as_string( j[ i ][ 2 ], w + "/2" ) } );
			}
			return out;
		}

		inline TableSpec table_from( const Json &j ) {
			const std::string w = "/domain";
			const auto list = [ & ]( const char *k ) { return string_list( member( j, k, w ), w + "/" + k ); };
			const auto pairs = [ & ]( const char *k ) { return pair_list( member( j, k, w ), w + "/" + k ); };
			TableSpec t;
			t.utility = list( "utility" );
			t.plausibility = list( "plausibility" );
			t.valuation = list( "valuation" );
			t.bottom = as_string( member( j, "bottom", w ), w + "/bottom" );
			t.top = as_string( member( j, "top", w ), w + "/top" );
			t.oplus = triple_list( member( j, "oplus", w ), w + "/oplus" );
			t.otimes = triple_list( member( j, "otimes", w ), w + "/otimes" );
			t.utility_order = pairs( "utility_order" );
			t.plausibility_order = pairs( "plausibility_order" );
			t.valuation_order = pairs( "valuation_order" );
			return t;
		}

		inline Json table_json( const TableSpec &t ) {
			const auto pairs = []( const std::vector< std::pair< std::string, std::string > > &ps ) {
				Json out = Json::array();
				for( const auto &[ a, b ] : ps ) {
					out.push_back( Json::array( { a, b } ) );
				}
				return out;
			};
			const auto triples = []( const std::vector< std::array< std::string, 3 > > &ts ) {
				Json out = Json::array();
				for( const auto &x : ts ) {
					out.push_back( Json::array( { x[ 0 ], x[ 1 ], x[ 2 ] } ) );
				}
				return out;
			};
			Json out = Json::object();
			out[ "type" ] = "table";
			out[ "utility" ] = t.utility;
			out[ "plausibility" ] = t.plausibility;
			out[ "valuation" ] = t.valuation;
			out[ "bottom" ] = t.bottom;
			out[ "top" ] = t.top;
			out[ "oplus" ] = triples( t.oplus );
			out[ "otimes" ] = triples( t.otimes );
			out[ "utility_order" ] = pairs( t.utility_order );
			out[ "plausibility_order" ] = pairs( t.plausibility_order );
			out[ "valuation_order" ] = pairs( t.valuation_order );
			return out;
		}

	} // end namespace internal

	/**
	 * JSON form of a value. Rationals are strings, pairs two-element arrays,
	 * pair sets arrays of [state, consequence], tagged values objects, table
	 * symbols strings and state sets arrays of state names.
	 */
	inline Json value_json( const Value &v, const Naming &names = {} ) {
		const auto pairs = [ & ]( const PairSet &p ) {
			Json out = Json::array();
			for( const auto &[ s, c ] : p.items() ) {
				out.push_back( Json::array( { names.state( s ), names.consequence( c ) } ) );
			}
			return out;
		};
		if( const auto *r = std::get_if< Rational >( &v ) ) {
			return to_string( *r );
		}
		if( const auto *p = std::get_if< RationalPair >( &v ) ) {
			return Json::array( { to_string( p->first ), to_string( p->second ) } );
		}
		if( const auto *p = std::get_if< PairSet >( &v ) ) {
			return pairs( *p );
		}
		if( const auto *t = std::get_if< Tagged >( &v ) ) {
			Json tags = Json::array();
			for( const auto id : t->tags ) {
				tags.push_back( names.tag( id ) );
			}
			return Json{ { "pairs", pairs( t->pairs ) }, { "tags", tags } };
		}
		if( const auto *e = std::get_if< TableElem >( &v ) ) {
			return e->symbol;
		}
		Json out = Json::array();
		for( const StateId id : members( std::get< StateSet >( v ).mask ) ) {
			out.push_back( names.state( id ) );
		}
		return out;
	}

	/** Reads a document from parsed JSON; location-tagged parse errors, validation errors on dangling ids. */
	inline ProblemDocument parse_document( const Json &j ) {
		using namespace internal;
		if( !j.is_object() ) {
			parse_error( "", "a problem document must be a JSON object" );
		}
		ProblemDocument doc;
		doc.states = string_list( member( j, "states", "" ), "/states" );
		doc.consequences = string_list( member( j, "consequences", "" ), "/consequences" );
		if( j.contains( "allow_duplicate_acts" ) ) {
			if( !j[ "allow_duplicate_acts" ].is_boolean() ) {
				parse_error( "/allow_duplicate_acts", "expected a boolean" );
			}
			doc.allow_duplicates = j[ "allow_duplicate_acts" ].get< bool >();
		}

		const Json &acts = member( j, "acts", "" );
		if( acts.is_string() ) {
			if( acts.get< std::string >() != "all" ) {
				parse_error( "/acts", "the only act marker is \"all\"" );
			}
			doc.all_acts = true;
		} else if( acts.is_object() ) {
			for( const auto &[ name, map ] : acts.items() ) {
				const std::string w = "/acts/" + name;
				if( !map.is_object() ) {
					parse_error( w, "expected an object mapping states to consequences" );
				}
				std::vector< std::optional< ConsequenceId > > slots( doc.states.size() );
				for( const auto &[ state, cons ] : map.items() ) {
					const std::size_t s = position_of( doc.states, state, "state", w + "/" + state );
					slots[ s ] = static_cast< ConsequenceId >(
						position_of( doc.consequences, as_string( cons, w + "/" + state ), "consequence", w + "/" + state ) );
				}
				Act a;
				for( std::size_t s = 0; s < slots.size(); ++s ) {
					if( !slots[ s ] ) {
						throw Error( ErrorKind::validation, "act " + name + " is undefined on state " + doc.states[ s ] );
					}
					a.push_back( *slots[ s ] );
				}
				doc.acts.push_back( NamedAct{ name, std::move( a ) } );
			}
		} else {
			parse_error( "/acts", "expected an object of acts or \"all\"" );
		}

		const Json &dom = member( j, "domain", "" );
		const std::string type = as_string( member( dom, "type", "/domain" ), "/domain/type" );
		const auto kind = domain_kind_from( type );
		if( !kind ) {
			parse_error( "/domain/type", "unknown domain type \"" + type + "\"" );
		}
		doc.domain = *kind;
		if( dom.contains( "monotonic" ) ) {
			if( doc.domain != DomainKind::canonical || !dom[ "monotonic" ].is_boolean() ) {
				parse_error( "/domain/monotonic", "a boolean flag of the canonical domain" );
			}
			doc.monotonic = dom[ "monotonic" ].get< bool >();
		}
		if( doc.domain == DomainKind::table ) {
			doc.table = table_from( dom );
		}

		if( j.contains( "preference" ) ) {
			doc.preference = pair_list( j[ "preference" ], "/preference" );
		}

		if( doc.synthesized() ) {
			if( j.contains( "utility" ) ) {
				parse_error( "/utility", "canonical and tagged documents derive their utility" );
			}
			if( j.contains( "plausibility" ) ) {
				const Json &pl = j[ "plausibility" ];
				if( as_string( member( pl, "type", "/plausibility" ), "/plausibility/type" ) != "identity" ) {
					parse_error( "/plausibility/type", "canonical and tagged documents use the identity measure" );
				}
			}
			if( !doc.preference ) {
				throw Error( ErrorKind::validation, "canonical and tagged documents need a preference" );
			}
			return doc;
		}

		const Json &util = member( j, "utility", "" );
		if( !util.is_object() ) {
			parse_error( "/utility", "expected an object mapping consequences to values" );
		}
		std::vector< std::optional< Value > > u( doc.consequences.size() );
		for( const auto &[ key, value ] : util.items() ) {
			const std::size_t c = position_of( doc.consequences, key, "consequence", "/utility/" + key );
			u[ c ] = scalar_from( value, doc.domain, false, "/utility/" + key );
		}
		for( std::size_t c = 0; c < u.size(); ++c ) {
			if( !u[ c ] ) {
				throw Error( ErrorKind::validation, "no utility for consequence " + doc.consequences[ c ] );
			}
			doc.utility.push_back( *u[ c ] );
		}

		const Json &pl = member( j, "plausibility", "" );
		const std::string pt = as_string( member( pl, "type", "/plausibility" ), "/plausibility/type" );
		auto &spec = doc.plausibility;
		if( pt == "probability" ) {
			spec.kind = PlausibilitySpec::Kind::probability;
			spec.weights1 = weights_from( member( pl, "weights", "/plausibility" ), doc.states, "/plausibility/weights" );
		} else if( pt == "pair" ) {
			spec.kind = PlausibilitySpec::Kind::pair;
			spec.weights1 = weights_from( member( pl, "weights1", "/plausibility" ), doc.states, "/plausibility/weights1" );
			spec.weights2 = weights_from( member( pl, "weights2", "/plausibility" ), doc.states, "/plausibility/weights2" );
		} else if( pt == "identity" ) {
			spec.kind = PlausibilitySpec::Kind::identity;
		} else if( pt == "table" ) {
			spec.kind = PlausibilitySpec::Kind::table;
			const Json &entries = member( pl, "entries", "/plausibility" );
			if( !entries.is_array() ) {
				parse_error( "/plausibility/entries", "expected an array" );
			}
			for( std::size_t i = 0; i < entries.size(); ++i ) {
				const std::string w = "/plausibility/entries/" + std::to_string( i );
				spec.entries.emplace_back( event_from( member( entries[ i ], "event", w ), doc.states, w + "/event" ),
					scalar_from( member( entries[ i ], "value", w ), doc.domain, true, w + "/value" ) );
			}
		} else {
			parse_error( "/plausibility/type", "unknown plausibility type \"" + pt + "\"" );
		}
		return doc;
	}

	/** Reads a document from text. */
	inline ProblemDocument parse_document_text( const std::string &text ) {
		Json j;
		try {
			j = Json::parse( text );
		} catch( const nlohmann::json::parse_error &e ) {
			throw Error( ErrorKind::parse, std::string( "malformed JSON: " ) + e.what() );
		}
		return parse_document( j );
	}

	inline ProblemDocument read_document( const std::string &path ) {
		std::ifstream in( path, std::ios::binary );
		if( !in ) {
			throw Error( ErrorKind::parse, "cannot open " + path );
		}
		std::stringstream ss;
		ss << in.rdbuf();
		return parse_document_text( ss.str() );
	}

	/** Canonical JSON form; parse_document inverts it. */
	inline Json emit_document( const ProblemDocument &doc ) {
		using namespace internal;
		Json j = Json::object();
		j[ "states" ] = doc.states;
		j[ "consequences" ] = doc.consequences;
		if( doc.all_acts ) {
			j[ "acts" ] = "all";
		} else {
			Json acts = Json::object();
			for( const auto &a : doc.acts ) {
				Json map = Json::object();
				for( std::size_t s = 0; s < a.map.size(); ++s ) {
					map[ doc.states[ s ] ] = doc.consequences[ a.map[ s ] ];
				}
				acts[ a.name ] = map;
			}
			j[ "acts" ] = acts;
		}
		if( doc.allow_duplicates ) {
			j[ "allow_duplicate_acts" ] = true;
		}
		if( doc.table ) {
			j[ "domain" ] = table_json( *doc.table );
		} else {
			j[ "domain" ] = Json{ { "type", domain_kind_name( doc.domain ) } };
			if( doc.monotonic ) {
				j[ "domain" ][ "monotonic" ] = true;
			}
		}
		if( !doc.synthesized() ) {
			Json u = Json::object();
			for( std::size_t c = 0; c < doc.utility.size(); ++c ) {
				u[ doc.consequences[ c ] ] = value_json( doc.utility[ c ] );
			}
			j[ "utility" ] = u;
		}
		Json pl = Json::object();
		switch( doc.plausibility.kind ) {
			case PlausibilitySpec::Kind::probability:
				pl[ "type" ] = "probability";
				pl[ "weights" ] = weights_json( doc.plausibility.weights1, doc.states );
				break;
			case PlausibilitySpec::Kind::pair:
				pl[ "type" ] = "pair";
				pl[ "weights1" ] = weights_json( doc.plausibility.weights1, doc.states );
				pl[ "weights2" ] = weights_json( doc.plausibility.weights2, doc.states );
				break;
			case PlausibilitySpec::Kind::identity:
				pl[ "type" ] = "identity";
				break;
			case PlausibilitySpec::Kind::table: {
				pl[ "type" ] = "table";
				Json entries = Json::array();
				for( const auto &[ x, v ] : doc.plausibility.entries ) {
					entries.push_back( Json{ { "event", event_json( x, doc.states ) }, { "value", value_json( v ) } } );
				}
				pl[ "entries" ] = entries;
				break;
			}
		}
		j[ "plausibility" ] = pl;
		if( doc.preference ) {
			Json pref = Json::array();
			for( const auto &[ a, b ] : *doc.preference ) {
				pref.push_back( Json::array( { a, b } ) );
			}
			j[ "preference" ] = pref;
		}
		return j;
	}

	/** Library objects described by a document. */
	struct LoadedProblem {
		ProblemDocument document;
		SituationPtr situation;
		std::optional< PreferenceRelation > preference;
		std::optional< DecisionProblem > problem;
		/** The registry behind a tagged domain. */
		std::shared_ptr< PreferenceRegistry > registry;
	};

	/** Builds and validates everything the document describes. */
	inline LoadedProblem load_problem( ProblemDocument doc, const Budgets &budgets = {} ) {
		LoadedProblem out;
		std::vector< NamedAct > acts = doc.all_acts ? all_simple_acts( doc.states, doc.consequences, budgets.acts ) : doc.acts;
		out.situation = std::make_shared< const DecisionSituation >( doc.states, doc.consequences, std::move( acts ),
			doc.allow_duplicates );
		if( doc.preference ) {
			out.preference = preference_from_names( *out.situation, *doc.preference );
		}
		switch( doc.domain ) {
			case DomainKind::canonical:
				out.problem = doc.monotonic ? monotonic_representation( out.situation, *out.preference ).problem
											: canonical_representation( out.situation, *out.preference ).problem;
				break;
			case DomainKind::tagged: {
				const FixedDomain fixed = fixed_domain( out.situation );
				out.registry = fixed.registry;
				out.problem = fixed_representation( fixed, *out.preference ).problem;
				break;
			}
			default: {
				DomainPtr dom;
				PlausibilityOrderPtr order;
				switch( doc.domain ) {
					case DomainKind::standard:
						dom = standard_domain();
						order = std::make_shared< const ProbabilityOrder >();
						break;
					case DomainKind::pair:
					case DomainKind::pair_min:
						dom = doc.domain == DomainKind::pair ? pair_domain() : pair_min_domain();
						order = std::make_shared< const PairProbabilityOrder >();
						break;
					default:
						dom = table_domain( *doc.table );
						order = std::make_shared< const DomainPlausibilityOrder >( dom );
						break;
				}
				const auto &spec = doc.plausibility;
				const std::size_t n = doc.states.size();
				std::optional< PlausibilityMeasure > pl;
				switch( spec.kind ) {
					case PlausibilitySpec::Kind::probability:
						pl = probability_measure( ProbabilityWeights( spec.weights1 ) );
						break;
					case PlausibilitySpec::Kind::pair:
						pl = pair_measure( ProbabilityWeights( spec.weights1 ), ProbabilityWeights( spec.weights2 ) );
						break;
					case PlausibilitySpec::Kind::identity:
						pl = identity_measure( n );
						break;
					case PlausibilitySpec::Kind::table:
						pl = table_measure( n, spec.entries, order );
						break;
				}
				out.problem.emplace( out.situation, dom, doc.utility, std::move( *pl ), budgets.probes );
				break;
			}
		}
		out.document = std::move( doc );
		return out;
	}

	/** Writes a synthesized problem as a document of type canonical or tagged. */
	inline ProblemDocument synthesized_document( const SynthesizedProblem &s ) {
		const DecisionSituation &sit = s.problem.situation();
		ProblemDocument doc;
		doc.states = sit.states();
		doc.consequences = sit.consequences();
		doc.acts = sit.acts();
		doc.allow_duplicates = sit.has_duplicates();
		doc.domain = s.construction == Construction::fixed_domain ? DomainKind::tagged : DomainKind::canonical;
		doc.monotonic = s.construction == Construction::corollary;
		doc.plausibility.kind = PlausibilitySpec::Kind::identity;
		std::vector< std::pair< std::string, std::string > > pairs;
		for( const auto &[ i, j ] : s.provenance.pairs() ) {
			if( i != j ) {
				pairs.emplace_back( sit.act( i ).name, sit.act( j ).name );
			}
		}
		doc.preference = std::move( pairs );
		return doc;
	}

	/** 64-bit FNV-1a of the input bytes, as 16 hex digits. */
	inline std::string digest( const std::string &bytes ) {
		std::uint64_t h = 0xcbf29ce484222325ULL;
		for( const unsigned char ch : bytes ) {
			h ^= ch;
			h *= 0x100000001b3ULL;
		}
		static const char *hex = "0123456789abcdef";
		std::string out( 16, '0' );
		for( int i = 15; i >= 0; --i ) {
			out[ i ] = hex[ h & 0xf ];
			h >>= 4;
		}
		return out;
	}

} // end namespace geu

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
 * @file cli.hpp
 *
 * The geu command line: command dispatch and report emission.
 *
 * Exit codes: 0 when every record holds, 1 when at least one record fails,
 * 2 on input or validation errors, 3 when a budget is exceeded.
 */

#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "savage.hpp"
#include "synthesis.hpp"

namespace geu {

	namespace cli {

		enum class Format { json, text };

		/** One checked statement in a report. */
		struct Record {
			Json json;
			std::string text;
			bool holds = true;
		};

		struct Report {
			std::string command;
			std::vector< std::string > arguments;
			std::string path;
			std::string digest;
			Budgets budgets;
			std::vector< Record > records;
			Json result = Json::object();
			/** Text lines printed after the records. */
			std::vector< std::string > text;
			/** In text mode print only the text lines. */
			bool bare = false;

			bool holds() const {
				for( const auto &r : records ) {
					if( !r.holds ) {
						return false;
					}
				}
				return true;
			}
		};

		inline Json binding_json( const BindingValue &b, const DecisionSituation *sit, const Naming &names ) {
			if( const auto *a = std::get_if< ActBinding >( &b ) ) {
				if( sit != nullptr ) {
					return sit->act_label( a->map );
				}
				Json out = Json::array();
				for( const auto c : a->map ) {
					out.push_back( names.consequence( c ) );
				}
				return out;
			}
			if( const auto *e = std::get_if< EventBinding >( &b ) ) {
				return value_json( StateSet{ e->mask }, names );
			}
			if( const auto *c = std::get_if< ConsequenceBinding >( &b ) ) {
				return names.consequence( c->id );
			}
			if( const auto *p = std::get_if< PartitionBinding >( &b ) ) {
				Json out = Json::array();
				for( const Subset cell : p->cells ) {
					out.push_back( value_json( StateSet{ cell }, names ) );
				}
				return out;
			}
			return value_json( std::get< Value >( b ), names );
		}

		inline std::string binding_text( const BindingValue &b, const DecisionSituation *sit, const Naming &names ) {
			if( const auto *a = std::get_if< ActBinding >( &b ) ) {
				return sit != nullptr ? sit->act_label( a->map ) : binding_json( b, nullptr, names ).dump();
			}
			if( const auto *e = std::get_if< EventBinding >( &b ) ) {
				return render_subset( e->mask, names );
			}
			if( const auto *c = std::get_if< ConsequenceBinding >( &b ) ) {
				return names.consequence( c->id );
			}
			if( const auto *v = std::get_if< Value >( &b ) ) {
				return render( *v, names );
			}
			return binding_json( b, sit, names ).dump();
		}

		inline Record record_of( const CheckResult &r, const DecisionSituation *sit, const Naming &names ) {
			Record rec;
			rec.holds = r.holds;
			rec.json[ "name" ] = r.name;
			if( r.version ) {
				rec.json[ "version" ] = version_name( *r.version );
			}
			rec.json[ "holds" ] = r.holds;
			rec.json[ "vacuous" ] = r.vacuous;
			rec.text = r.name + ( r.version ? std::string( " [" ) + version_name( *r.version ) + "]" : "" ) + ": " +
				( r.holds ? "holds" : "FAILS" );
			if( !r.holds ) {
				Json w = Json::object();
				std::string wt;
				for( const auto &b : r.witness ) {
					w[ b.var ] = binding_json( b.value, sit, names );
					wt += " " + b.var + "=" + binding_text( b.value, sit, names );
				}
				rec.json[ "witness" ] = w;
				rec.text += r.witness.empty() ? " (no instance satisfies the existential)" : " at" + wt;
			}
			if( r.element ) {
				rec.json[ "element" ] = value_json( *r.element, names );
				rec.text += " element=" + render( *r.element, names );
			}
			if( !r.note.empty() ) {
				rec.json[ "note" ] = r.note;
			}
			if( r.vacuous != 0 ) {
				rec.text += " (" + std::to_string( r.vacuous ) + " vacuous)";
			}
			return rec;
		}

		inline std::vector< Index > index_list( const std::string &list ) {
			std::vector< Index > out;
			if( list == "all" ) {
				return all_indices();
			}
			std::stringstream ss( list );
			std::string item;
			while( std::getline( ss, item, ',' ) ) {
				if( item.empty() ) {
					continue;
				}
				const auto i = parse_index( item );
				if( !i ) {
					throw Error( ErrorKind::invalid_argument, "unknown index " + item + " (expected 1a,1b,2,...,6 or all)" );
				}
				out.push_back( *i );
			}
			return out;
		}

		inline void emit( const Report &r, const Format format, std::ostream &out, const std::optional< double > elapsed ) {
			if( format == Format::text ) {
				if( !r.bare ) {
					out << "command: " << r.command << "\n";
					out << "input: " << r.path << " (fnv1a64 " << r.digest << ")\n";
					out << "budgets: acts=" << r.budgets.acts << " partitions=" << r.budgets.partitions
						<< " probes=" << r.budgets.probes << "\n";
					for( const auto &rec : r.records ) {
						out << rec.text << "\n";
					}
				}
				for( const auto &line : r.text ) {
					out << line << "\n";
				}
				if( elapsed && !r.bare ) {
					out << "elapsed_ms: " << *elapsed << "\n";
				}
				return;
			}
			Json j = Json::object();
			j[ "command" ] = r.command;
			j[ "arguments" ] = r.arguments;
			j[ "input" ] = Json{ { "path", r.path }, { "digest", r.digest } };
			j[ "budgets" ] = Json{ { "acts", r.budgets.acts }, { "partitions", r.budgets.partitions },
				{ "probes", r.budgets.probes } };
			Json recs = Json::array();
			for( const auto &rec : r.records ) {
				recs.push_back( rec.json );
			}
			j[ "records" ] = recs;
			j[ "result" ] = r.result;
			j[ "holds" ] = r.holds();
			if( elapsed ) {
				j[ "elapsed_ms" ] = *elapsed;
			}
			out << j.dump( 2 ) << "\n";
		}

		inline std::string read_file( const std::string &path ) {
			std::ifstream in( path, std::ios::binary );
			if( !in ) {
				throw Error( ErrorKind::parse, "cannot open " + path );
			}
			std::stringstream ss;
			ss << in.rdbuf();
			return ss.str();
		}

		inline const DecisionProblem &need_problem( const LoadedProblem &p ) {
			if( !p.problem ) {
				throw Error( ErrorKind::invalid_argument, "this command needs a decision problem" );
			}
			return *p.problem;
		}

		/** The stated preference, or the one the problem induces. */
		inline PreferenceRelation preference_of( const LoadedProblem &p ) {
			if( p.preference ) {
				return *p.preference;
			}
			return induced_preference( need_problem( p ) );
		}

		inline Json act_json( const DecisionSituation &sit, const Act &a ) {
			Json m = Json::object();
			for( std::size_t s = 0; s < a.size(); ++s ) {
				m[ sit.states()[ s ] ] = sit.consequences()[ a[ s ] ];
			}
			return m;
		}

		inline Naming tag_naming( const LoadedProblem &p ) {
			Naming n = p.problem ? p.problem->naming() : p.situation->naming();
			if( p.registry ) {
				for( std::size_t i = 0; i < p.registry->size(); ++i ) {
					n.tags.push_back( "r" + std::to_string( i ) );
				}
			}
			return n;
		}

		struct Options {
			std::string command;
			std::string path;
			Format format = Format::text;
			Budgets budgets;
			bool timing = false;
			std::string act;
			std::vector< std::string > restrict_to;
			bool restrict_given = false;
			std::string construction = "thm1";
			std::string postulates;
			std::string axioms;
			std::string version = "general";
			std::string set = "all";
			bool enumerate = false;
		};

		inline void run_validate( const LoadedProblem &p, Report &r ) {
			const DecisionProblem &d = need_problem( p );
			const Naming names = tag_naming( p );
			const auto &sit = d.situation();
			for( const auto &c : validate_domain( d.domain(), r.budgets.probes ).checks ) {
				r.records.push_back( record_of( c, &sit, names ) );
			}
			const DomainPlausibilityOrder against( d.domain_ptr() );
			for( const auto &c : validate_measure( d.plausibility(), &against ).checks ) {
				r.records.push_back( record_of( c, &sit, names ) );
			}
			r.result = Json{ { "states", sit.n_states() }, { "consequences", sit.n_consequences() },
				{ "acts", sit.n_acts() }, { "domain", domain_kind_name( d.domain().kind() ) },
				{ "additive", is_additive( d ).holds }, { "all_simple_acts", sit.has_all_simple_acts() } };
			r.text.push_back( std::to_string( sit.n_states() ) + " states, " + std::to_string( sit.n_consequences() ) +
				" consequences, " + std::to_string( sit.n_acts() ) + " acts, domain " + domain_kind_name( d.domain().kind() ) );
		}

		inline void run_eval( const LoadedProblem &p, const Options &o, Report &r ) {
			const DecisionProblem &d = need_problem( p );
			const auto &sit = d.situation();
			const auto i = sit.find_name( o.act );
			if( !i ) {
				throw Error( ErrorKind::invalid_argument, "no act named " + o.act );
			}
			Subset z = sit.full();
			if( o.restrict_given ) {
				z = 0;
				for( const auto &s : o.restrict_to ) {
					const auto id = sit.state_index( s );
					if( !id ) {
						throw Error( ErrorKind::invalid_argument, "no state named " + s );
					}
					z |= Subset( 1 ) << *id;
				}
			}
			const Naming names = tag_naming( p );
			const Value v = geu_restricted( d, sit.act( *i ).map, z );
			r.result = Json{ { "act", o.act }, { "restrict", value_json( StateSet{ z }, names ) },
				{ "value", value_json( v, names ) } };
			r.text.push_back( render( v, names ) );
			r.bare = true;
		}

		inline void run_prefs( const LoadedProblem &p, Report &r ) {
			const DecisionProblem &d = need_problem( p );
			const auto &sit = d.situation();
			const Naming names = tag_naming( p );
			const auto values = geu_all( d );
			const PreferenceRelation induced = induced_preference( d );
			Json vals = Json::object();
			for( std::size_t i = 0; i < sit.n_acts(); ++i ) {
				vals[ sit.act( i ).name ] = value_json( values[ i ], names );
				r.text.push_back( "geu " + sit.act( i ).name + " = " + render( values[ i ], names ) );
			}
			Json pairs = Json::array();
			for( const auto &[ i, j ] : induced.pairs() ) {
				if( i != j ) {
					pairs.push_back( Json::array( { sit.act( i ).name, sit.act( j ).name } ) );
					r.text.push_back( sit.act( i ).name + " <= " + sit.act( j ).name );
				}
			}
			r.result = Json{ { "values", vals }, { "preference", pairs } };
			if( p.preference ) {
				CheckResult c{ "stated-preference" };
				c.holds = induced == *p.preference;
				r.records.push_back( record_of( c, &sit, names ) );
			}
		}

		inline void run_synthesize( const LoadedProblem &p, const Options &o, Report &r ) {
			if( !p.preference ) {
				throw Error( ErrorKind::invalid_argument, "synthesize needs a preference in the document" );
			}
			const auto &sit = p.situation;
			std::optional< SynthesizedProblem > s;
			if( o.construction == "thm1" ) {
				s = canonical_representation( sit, *p.preference );
			} else if( o.construction == "corollary" ) {
				s = monotonic_representation( sit, *p.preference );
			} else if( o.construction == "fixed" ) {
				s = fixed_representation( fixed_domain( sit ), *p.preference );
			} else {
				throw Error( ErrorKind::invalid_argument, "unknown construction " + o.construction );
			}
			CheckResult c{ "round-trip" };
			c.holds = induced_preference( s->problem ) == *p.preference;
			r.records.push_back( record_of( c, sit.get(), sit->naming() ) );
			const Json doc = emit_document( synthesized_document( *s ) );
			r.result = Json{ { "construction", construction_name( s->construction ) }, { "document", doc } };
			r.text.push_back( doc.dump( 2 ) );
		}

		inline void run_check( const LoadedProblem &p, const Options &o, Report &r ) {
			const Version version = o.version == "special" ? Version::special : Version::general;
			if( o.version != "general" && o.version != "special" ) {
				throw Error( ErrorKind::invalid_argument, "version must be general or special" );
			}
			if( o.postulates.empty() && o.axioms.empty() ) {
				throw Error( ErrorKind::invalid_argument, "check needs --postulates and/or --axioms" );
			}
			const Naming names = tag_naming( p );
			if( !o.postulates.empty() ) {
				const PreferenceRelation pref = preference_of( p );
				for( const Index i : index_list( o.postulates ) ) {
					r.records.push_back( record_of( check_P( *p.situation, pref, i, version, r.budgets ), p.situation.get(), names ) );
				}
			}
			if( !o.axioms.empty() ) {
				const DecisionProblem &d = need_problem( p );
				const auto indices = index_list( o.axioms );
				for( const Index i : indices ) {
					internal::require_axiom_classes( d, i, version );
				}
				const AxiomFrame frame( d );
				for( const Index i : indices ) {
					r.records.push_back( record_of( check_A( frame, i, version, r.budgets ), p.situation.get(), names ) );
				}
			}
		}

		inline void run_verify( const LoadedProblem &p, const Options &o, Report &r ) {
			const DecisionProblem &d = need_problem( p );
			const Naming names = tag_naming( p );
			const auto rep = verify_representation( d, index_list( o.set ), r.budgets );
			for( const auto &e : rep.entries ) {
				Record rec;
				rec.holds = e.agrees();
				const std::string name = std::string( "A" ) + index_name( e.index ) + "<=>P" + index_name( e.index );
				const Record a = record_of( e.axiom, &d.situation(), names );
				const Record pr = record_of( e.postulate, &d.situation(), names );
				rec.json = Json{ { "name", name }, { "holds", rec.holds }, { "axiom", a.json }, { "postulate", pr.json } };
				rec.text = name + ": " + ( rec.holds ? "holds" : "DISCREPANCY" ) + "\n  " + a.text + "\n  " + pr.text;
				r.records.push_back( std::move( rec ) );
			}
			r.result = Json{ { "pi", Json{ { "all", rep.pi.all }, { "additive", rep.pi.additive }, { "zero", rep.pi.zero } } },
				{ "axioms_hold", rep.axioms_hold }, { "postulates_hold", rep.postulates_hold },
				{ "conjunction_agrees", rep.conjunction_agrees() } };
			r.text.push_back( std::string( "conjunction: axioms " ) + ( rep.axioms_hold ? "hold" : "fail" ) + ", postulates " +
				( rep.postulates_hold ? "hold" : "fail" ) + ( rep.conjunction_agrees() ? ", agree" : ", DISCREPANCY" ) );
			if( !rep.conjunction_agrees() ) {
				Record rec;
				rec.holds = false;
				rec.json = Json{ { "name", "conjunction" }, { "holds", false } };
				rec.text = "conjunction: DISCREPANCY";
				r.records.push_back( std::move( rec ) );
			}
		}

		inline void run_acts( const LoadedProblem &p, const Options &o, Report &r ) {
			const auto &sit = *p.situation;
			Json list = Json::array();
			if( o.enumerate ) {
				for( const Act &a : enumerate_simple_acts( sit, r.budgets.acts ) ) {
					const bool in_a = sit.contains( a );
					list.push_back( Json{ { "label", sit.act_label( a ) }, { "map", act_json( sit, a ) }, { "in_A", in_a } } );
					r.text.push_back( sit.act_label( a ) + ( in_a ? "" : "  (not in A)" ) );
				}
			} else {
				for( const auto &a : sit.acts() ) {
					list.push_back( Json{ { "label", a.name }, { "map", act_json( sit, a.map ) }, { "in_A", true } } );
					r.text.push_back( a.name );
				}
			}
			r.result = Json{ { "acts", list } };
		}

		inline int exit_code_of( const ErrorKind k ) { return k == ErrorKind::budget ? 3 : 2; }

	} // end namespace cli

	/** Runs the geu command line; returns the process exit code. */
	inline int run_cli( int argc, const char *const *argv, std::ostream &out, std::ostream &err ) {
		using namespace cli;
		Options o;
		CLI::App app{ "Generalized expected utility: evaluation, synthesis and postulate checking" };
		app.require_subcommand( 1 );
		app.fallthrough();
		std::string format = "text";
		app.add_option( "--format", format, "Report format" )->check( CLI::IsMember( { "json", "text" } ) );
		app.add_option( "--budget-acts", o.budgets.acts, "Limit on enumerated simple acts" );
		app.add_option( "--budget-partitions", o.budgets.partitions, "Limit on enumerated partitions" );
		app.add_option( "--budget-probes", o.budgets.probes, "Limit on law probes" );
		app.add_flag( "--timing", o.timing, "Add elapsed time to the report" );

		const auto file = [ & ]( CLI::App *sub ) { sub->add_option( "file", o.path, "Problem document" )->required(); };

		auto *validate = app.add_subcommand( "validate", "Check domain and measure laws" );
		file( validate );
		auto *eval = app.add_subcommand( "eval", "GEU of an act" );
		file( eval );
		eval->add_option( "--act", o.act, "Act name" )->required();
		eval->add_option( "--restrict", o.restrict_to, "Restrict to these states" )->delimiter( ',' );
		auto *prefs = app.add_subcommand( "prefs", "Induced preference" );
		file( prefs );
		auto *synth = app.add_subcommand( "synthesize", "Build a GEU representation of the preference" );
		file( synth );
		synth->add_option( "--construction", o.construction, "thm1, corollary or fixed" )
			->check( CLI::IsMember( { "thm1", "corollary", "fixed" } ) );
		auto *check = app.add_subcommand( "check", "Decide postulates and axioms" );
		file( check );
		check->add_option( "--postulates", o.postulates, "Comma separated indices or all" );
		check->add_option( "--axioms", o.axioms, "Comma separated indices or all" );
		check->add_option( "--version", o.version, "general or special" )->check( CLI::IsMember( { "general", "special" } ) );
		auto *verify = app.add_subcommand( "verify", "Compare A_i with P_i on the induced preference" );
		file( verify );
		verify->add_option( "--set", o.set, "Comma separated indices or all" );
		auto *acts = app.add_subcommand( "acts", "List acts" );
		file( acts );
		acts->add_flag( "--enumerate", o.enumerate, "List all simple acts" );

		try {
			app.parse( argc, argv );
		} catch( const CLI::CallForHelp & ) {
			out << app.help();
			return 0;
		} catch( const CLI::ParseError &e ) {
			err << "error (invalid-argument): " << e.what() << "\n";
			return 2;
		}
		o.format = format == "json" ? Format::json : Format::text;
		o.restrict_given = eval->count( "--restrict" ) > 0;
		CLI::App *sub = app.get_subcommands().front();
		o.command = sub->get_name();

		Report report;
		report.command = o.command;
		for( int i = 1; i < argc; ++i ) {
			report.arguments.emplace_back( argv[ i ] );
		}
		report.path = o.path;
		report.budgets = o.budgets;
		const auto start = std::chrono::steady_clock::now();
		try {
			const std::string bytes = read_file( o.path );
			report.digest = digest( bytes );
			const LoadedProblem p = load_problem( parse_document_text( bytes ), o.budgets );
			if( sub == validate ) {
				run_validate( p, report );
			} else if( sub == eval ) {
				run_eval( p, o, report );
			} else if( sub == prefs ) {
				run_prefs( p, report );
			} else if( sub == synth ) {
				run_synthesize( p, o, report );
			} else if( sub == check ) {
				run_check( p, o, report );
			} else if( sub == verify ) {
				run_verify( p, o, report );
			} else {
				run_acts( p, o, report );
			}
		} catch( const Error &e ) {
			err << "error (" << error_kind_name( e.kind() ) << "): " << e.what() << "\n";
			for( const auto &d : e.details() ) {
				err << "  " << d << "\n";
			}
			if( o.format == Format::json ) {
				out << Json{ { "command", o.command }, { "error", Json{ { "kind", error_kind_name( e.kind() ) },
					{ "message", e.what() }, { "details", e.details() } } } }.dump( 2 ) << "\n";
			}
			return exit_code_of( e.kind() );
		}
		std::optional< double > elapsed;
		if( o.timing ) {
			elapsed = std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - start ).count();
		}
		emit( report, o.format, out, elapsed );
		return report.holds() ? 0 : 1;
	}

} // end namespace geu

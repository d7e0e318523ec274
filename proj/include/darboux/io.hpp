#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "darboux/autom.hpp"
#include "darboux/darboux.hpp"
#include "darboux/derivation.hpp"

namespace darboux {

using Json = nlohmann::ordered_json;

// Derivation document: {"vars": [...], "images": ["t^2", ...]} or
// {"vars": [...], "beta": [[0,0,0,2], ...]}. Throws ParseError.
QDerivation derivation_from_json(const Json& j);
QDerivation derivation_from_json_text(std::string_view text);
Json derivation_to_json(const QDerivation& d);

// Automorphism document: {"scalars": ["z8^3", "z8^5", "z8^3", "z8"]}.
DiagonalAutomorphism automorphism_from_json(const Json& j, std::size_t arity);
Json automorphism_to_json(const DiagonalAutomorphism& s);

Json symmetry_to_json(const SymmetrySolution& sol);
SymmetrySolution symmetry_from_json(const Json& j);

// Reports behind the CLI subcommands. Field order is fixed so that dumps are
// byte-stable.
Json wd_report(const QDerivation& d);
Json symmetry_report(const QDerivation& d, long m);
Json conjugate_report(const QDerivation& d, const DiagonalAutomorphism& s);
Json constants_report(const QDerivation& d, long max_degree, unsigned threads, const SolveOptions& opts);
Json certificate_to_json(const Certificate& cert, bool include_timings = false);

// Structural check of a certificate document against the documented schema;
// returns an empty string when valid, otherwise the first problem found.
std::string validate_certificate_json(const Json& j);

}  // namespace darboux

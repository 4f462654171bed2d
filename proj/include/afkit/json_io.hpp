#pragma once

// JSON schemas. Rationals are always strings "p/q" (or "p"), so nothing is
// lost to floating point downstream.
//
//   matrix    {"n": int, "entries": [[{"re": "p/q", "im": "p/q"}, ...], ...]}
//   tuple     {"n": int, "mats": [matrix, ...]}
//   polytope  {"dim": int, "vertices": [["p/q", ...], ...]}
//   gram      {"r": int, "d": [["p/q", ...], ...]}
//   gap       {"lhs", "rhs", "gap": "p/q", "equality": bool, "lambda": "p/q" | null}
//
// Parsers throw ParseError on malformed documents and let the domain
// constructors raise DomainError for well-formed but invalid content.

#include "afkit/convexvol.hpp"
#include "afkit/ineqcheck.hpp"
#include "afkit/matrix.hpp"
#include "afkit/shephard.hpp"
#include "afkit/torus.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace afkit::io {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& x);
Rat rat_from(const Json& j);

Json gauss_json(const GaussRat& z);
Json matrix_json(const GenMat& m);
Json matrix_json(const HermMat& m);
GenMat gen_matrix_from(const Json& j);
HermMat herm_matrix_from(const Json& j);

Json tuple_json(const std::vector<HermMat>& mats);
std::vector<HermMat> tuple_from(const Json& j);

Json polytope_json(const Polytope& p);
Polytope polytope_from(const Json& j);

Json gram_json(const GramTable& g);
GramTable gram_from(const Json& j);

Json gap_json(const GapReport& r);

/// Matrix schema plus "nef", "big" and "kahler" flags.
Json torus_class_json(const TorusClass& c);

Json concavity_json(const ConcavityReport& r);

Json rat_vector_json(const std::vector<Rat>& v);

/// A document read through --in, classified by its keys.
using Fixture = std::variant<HermMat, std::vector<HermMat>, Polytope, GramTable>;

/// One fixture or an array of them.
std::vector<Fixture> fixtures_from(const Json& j);

Json parse_document(const std::string& text);

} // namespace afkit::io

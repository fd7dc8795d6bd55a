#ifndef CSP_JSONIO_HPP
#define CSP_JSONIO_HPP

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "csp/arith.hpp"
#include "csp/cone.hpp"
#include "csp/exactroots.hpp"
#include "csp/sieve.hpp"

namespace csp {

using json = nlohmann::json;

// Number conventions: integers become JSON numbers when they fit in 64 bits
// and decimal strings otherwise; rationals are always strings, "p/q" with
// the slash dropped for integers. Parsers accept numbers or strings in both
// positions. All failures surface as errc::parse_error with the offending
// field path in the message.
json int_to_json(const Int& v);
json rat_to_json(const Rat& v);
Int int_from_json(const json& j, const std::string& path);
Rat rat_from_json(const json& j, const std::string& path);

json to_json(const CycPoly& p);          // {"n":6,"coeffs":[10,1,0,3,0,1]}
json to_json(const EvalTable& t);        // {"n":...,"values":[...]}, values[0] is k=1
json to_json(const OrbitProfile& p);     // {"n":...,"counts":[...]}
json to_json(const UniversalVector& s);  // {"n":...,"s":[...]}
json to_json(const CspMatrix& m);        // {"n":...,"rows":[["2","1/2",...],...]}
json to_json(const CspDecision& d);
json to_json(const Swap& s);
json to_json(const std::vector<Swap>& steps);

CycPoly cycpoly_from_json(const json& j);
EvalTable evaltable_from_json(const json& j);
OrbitProfile orbitprofile_from_json(const json& j);
UniversalVector universal_from_json(const json& j);
CspMatrix matrix_from_json(const json& j);

// json::parse with the library exception rewrapped as errc::parse_error.
json parse_json_text(const std::string& text);

std::string dump_canonical(const json& j);

struct ParsedObject {
    std::string kind;  // "cycpoly", "evaltable", "profile", "universal", "matrix"
    std::variant<CycPoly, EvalTable, OrbitProfile, UniversalVector, CspMatrix> value;
};

// Reads a file, dispatches on which schema it matches, and checks that
// serializing the parsed object reproduces the document.
ParsedObject io_roundtrip(const std::string& path);

}  // namespace csp

#endif

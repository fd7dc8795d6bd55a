#include "csp/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "csp/error.hpp"

namespace csp {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json rat_to_json(const Rat& v) { return json(rat_string(v)); }

// what() carries the errc name already; drop it when nesting under a field path.
static std::string bare_message(const error& e) {
    std::string w = e.what();
    std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (w.rfind(prefix, 0) == 0) return w.substr(prefix.size());
    return w;
}

Int int_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Int(j.dump());
    if (j.is_string()) {
        Rat r;
        try {
            r = parse_rat(j.get<std::string>());
        } catch (const error& e) {
            fail(errc::parse_error, path + ": " + bare_message(e));
        }
        if (!is_integer(r)) fail(errc::parse_error, path + ": expected an integer");
        return to_int(r);
    }
    fail(errc::parse_error, path + ": expected an integer, got " + std::string(j.type_name()));
}

Rat rat_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(Int(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const error& e) {
            fail(errc::parse_error, path + ": " + bare_message(e));
        }
    }
    fail(errc::parse_error, path + ": expected a rational, got " + std::string(j.type_name()));
}

static void require_object(const json& j, const std::vector<std::string>& fields,
                           const std::string& what) {
    if (!j.is_object()) fail(errc::parse_error, what + ": expected a JSON object");
    for (const auto& f : fields)
        if (!j.contains(f)) fail(errc::parse_error, what + ": missing field '" + f + "'");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const auto& f : fields) known = known || key == f;
        if (!known) fail(errc::parse_error, what + ": unexpected field '" + key + "'");
    }
}

static long small_positive(const json& j, const std::string& path) {
    Int v = int_from_json(j, path);
    if (v < 1 || !v.fits_slong_p()) fail(errc::parse_error, path + ": expected a small positive integer");
    return v.get_si();
}

static std::vector<Int> int_array(const json& j, size_t expect, const std::string& path) {
    if (!j.is_array()) fail(errc::parse_error, path + ": expected an array");
    if (j.size() != expect)
        fail(errc::parse_error,
             path + ": expected " + std::to_string(expect) + " entries, got " + std::to_string(j.size()));
    std::vector<Int> out;
    out.reserve(expect);
    for (size_t i = 0; i < expect; ++i)
        out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

static std::vector<Rat> rat_array(const json& j, size_t expect, const std::string& path) {
    if (!j.is_array()) fail(errc::parse_error, path + ": expected an array");
    if (j.size() != expect)
        fail(errc::parse_error,
             path + ": expected " + std::to_string(expect) + " entries, got " + std::to_string(j.size()));
    std::vector<Rat> out;
    out.reserve(expect);
    for (size_t i = 0; i < expect; ++i)
        out.push_back(rat_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

json to_json(const CycPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs) coeffs.push_back(int_to_json(c));
    return json{{"n", p.n}, {"coeffs", std::move(coeffs)}};
}

json to_json(const EvalTable& t) {
    json values = json::array();
    for (const Int& v : t.values) values.push_back(int_to_json(v));
    return json{{"n", t.n}, {"values", std::move(values)}};
}

json to_json(const OrbitProfile& p) {
    json counts = json::array();
    for (const Int& c : p.counts) counts.push_back(int_to_json(c));
    return json{{"n", p.n}, {"counts", std::move(counts)}};
}

json to_json(const UniversalVector& s) {
    json values = json::array();
    for (const Rat& v : s.s) values.push_back(rat_to_json(v));
    return json{{"n", s.n}, {"s", std::move(values)}};
}

json to_json(const CspMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const Rat& e : row) r.push_back(rat_to_json(e));
        rows.push_back(std::move(r));
    }
    return json{{"n", m.n}, {"rows", std::move(rows)}};
}

static const char* reason_name(csp_reason r) {
    switch (r) {
        case csp_reason::ok: return "ok";
        case csp_reason::not_integral: return "not_integral";
        case csp_reason::negative_evaluation: return "negative_evaluation";
        case csp_reason::negative_orbit_count: return "negative_orbit_count";
    }
    fail(errc::internal_error, "unknown csp_reason");
}

json to_json(const CspDecision& d) {
    json out{{"yes", d.yes}, {"reason", reason_name(d.reason)}};
    if (d.profile) out["profile"] = to_json(*d.profile);
    if (d.witness_k) out["witness_k"] = *d.witness_k;
    return out;
}

json to_json(const Swap& s) {
    return json{{"u", {s.u.first, s.u.second}}, {"v", {s.v.first, s.v.second}}, {"a", rat_to_json(s.a)}};
}

json to_json(const std::vector<Swap>& steps) {
    json out = json::array();
    for (const Swap& s : steps) out.push_back(to_json(s));
    return out;
}

CycPoly cycpoly_from_json(const json& j) {
    require_object(j, {"n", "coeffs"}, "polynomial");
    long n = small_positive(j["n"], "n");
    return CycPoly(n, int_array(j["coeffs"], static_cast<size_t>(n), "coeffs"));
}

EvalTable evaltable_from_json(const json& j) {
    require_object(j, {"n", "values"}, "evaluation table");
    EvalTable t;
    t.n = small_positive(j["n"], "n");
    t.values = int_array(j["values"], static_cast<size_t>(t.n), "values");
    return t;
}

OrbitProfile orbitprofile_from_json(const json& j) {
    require_object(j, {"n", "counts"}, "orbit profile");
    long n = small_positive(j["n"], "n");
    return OrbitProfile(n, int_array(j["counts"], static_cast<size_t>(n), "counts"));
}

UniversalVector universal_from_json(const json& j) {
    require_object(j, {"n", "s"}, "universal vector");
    long n = small_positive(j["n"], "n");
    return UniversalVector(n, rat_array(j["s"], static_cast<size_t>(n), "s"));
}

CspMatrix matrix_from_json(const json& j) {
    require_object(j, {"n", "rows"}, "matrix");
    long n = small_positive(j["n"], "n");
    const json& rows = j["rows"];
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n))
        fail(errc::parse_error, "rows: expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Rat>> e;
    e.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        e.push_back(rat_array(rows[static_cast<size_t>(i)], static_cast<size_t>(n),
                              "rows[" + std::to_string(i) + "]"));
    return CspMatrix(n, std::move(e));
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::parse_error, e.what());
    }
}

std::string dump_canonical(const json& j) { return j.dump(); }

ParsedObject io_roundtrip(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json doc = parse_json_text(buffer.str());

    ParsedObject obj;
    json again;
    if (doc.is_object() && doc.contains("coeffs")) {
        obj.kind = "cycpoly";
        CycPoly p = cycpoly_from_json(doc);
        again = to_json(p);
        obj.value = std::move(p);
    } else if (doc.is_object() && doc.contains("values")) {
        obj.kind = "evaltable";
        EvalTable t = evaltable_from_json(doc);
        again = to_json(t);
        obj.value = std::move(t);
    } else if (doc.is_object() && doc.contains("counts")) {
        obj.kind = "profile";
        OrbitProfile p = orbitprofile_from_json(doc);
        again = to_json(p);
        obj.value = std::move(p);
    } else if (doc.is_object() && doc.contains("s")) {
        obj.kind = "universal";
        UniversalVector s = universal_from_json(doc);
        again = to_json(s);
        obj.value = std::move(s);
    } else if (doc.is_object() && doc.contains("rows")) {
        obj.kind = "matrix";
        CspMatrix m = matrix_from_json(doc);
        again = to_json(m);
        obj.value = std::move(m);
    } else {
        fail(errc::parse_error, "document matches no known schema");
    }
    if (again != doc)
        fail(errc::parse_error, "document is not in canonical form: reserializing changes it");
    return obj;
}

}  // namespace csp

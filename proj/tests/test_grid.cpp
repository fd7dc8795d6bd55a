#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "csp/appendix.hpp"
#include "csp/cone.hpp"
#include "csp/error.hpp"
#include "csp/exactroots.hpp"
#include "csp/grid.hpp"
#include "csp/jsonio.hpp"
#include "csp/schur.hpp"
#include "csp/sieve.hpp"
#include "oracles.hpp"

using namespace csp;

namespace {

template <class F>
errc thrown_code(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a csp::error");
    return errc::internal_error;
}

// independent binomial coefficients via the Pascal recurrence
Int choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (long r = 1; r <= n; ++r)
        for (long c = r; c >= 1; --c) row[static_cast<size_t>(c)] += row[static_cast<size_t>(c - 1)];
    return row[static_cast<size_t>(k)];
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// CSP_BIN, or the csp executable sitting next to this binary
std::string cli_binary() {
    if (const char* bin = std::getenv("CSP_BIN")) return bin;
    char buf[4096];
    ssize_t len = readlink("/proc/self/exe", buf, sizeof buf - 1);
    if (len > 0) {
        buf[len] = '\0';
        std::string path(buf);
        std::string candidate = path.substr(0, path.find_last_of('/')) + "/csp";
        if (access(candidate.c_str(), X_OK) == 0) return candidate;
    }
    return "";
}

CliResult run_cli(const std::string& args) {
    std::string cmd = "'" + cli_binary() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::vector<std::vector<long>> kWordsGrid = {
    {2, 1, 0, 0, 0, 11}, {0, 0, 2, 0, 0, 7}, {0, 0, 0, 0, 0, 11},
    {0, 1, 2, 0, 0, 7},  {0, 0, 0, 0, 0, 11}, {0, 0, 2, 0, 0, 7},
};

CspMatrix words_matrix() {
    std::vector<std::vector<Rat>> entries;
    for (const auto& row : kWordsGrid) entries.emplace_back(row.begin(), row.end());
    return CspMatrix(6, std::move(entries));
}

}  // namespace

TEST_CASE("grid report is identical across thread counts") {
    GridReport one = verify_conjecture_grid(3, 3, 4, 1);
    GridReport three = verify_conjecture_grid(3, 3, 4, 3);
    GridReport seven = verify_conjecture_grid(3, 3, 4, 7);
    std::string canon = dump_canonical(to_json(one));
    CHECK(canon == dump_canonical(to_json(three)));
    CHECK(canon == dump_canonical(to_json(seven)));
}

TEST_CASE("grid entries are ordered, complete and all positive") {
    GridReport r = verify_conjecture_grid(3, 3, 4);
    long shapes = 0;
    for (long w = 1; w <= 3; ++w) shapes += oracles::partition_count(w).get_si();
    CHECK(r.entries.size() == static_cast<size_t>(shapes * 3 * 4));
    CHECK(r.yes_count == static_cast<long>(r.entries.size()));
    CHECK(r.no_count == 0);
    CHECK(r.max_weight == 3);
    CHECK(r.max_m == 3);
    CHECK(r.max_n == 4);

    // same order as the nested generation: weight, then the partition
    // enumeration order, then m, then n
    std::vector<std::tuple<std::vector<long>, long, long>> expected;
    for (long w = 1; w <= 3; ++w)
        for (const Partition& lam : partitions_of(w))
            for (long m = 1; m <= 3; ++m)
                for (long n = 1; n <= 4; ++n) expected.emplace_back(lam.parts, m, n);
    REQUIRE(expected.size() == r.entries.size());
    for (size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(r.entries[i].lambda == std::get<0>(expected[i]));
        CHECK(r.entries[i].m == std::get<1>(expected[i]));
        CHECK(r.entries[i].n == std::get<2>(expected[i]));
    }

    CHECK(r.entries.front().lambda == std::vector<long>({1}));
    CHECK(r.entries.front().m == 1);
    CHECK(r.entries.front().n == 1);
    CHECK(r.entries.back().lambda == std::vector<long>({1, 1, 1}));
    for (const GridEntry& e : r.entries) {
        CHECK(e.decision.yes);
        REQUIRE(e.decision.profile.has_value());
        CHECK(e.decision.profile->n == e.n);
    }
}

TEST_CASE("one-row shapes in the grid count multisets") {
    GridReport r = verify_conjecture_grid(3, 3, 4);
    long seen = 0;
    for (const GridEntry& e : r.entries) {
        if (e.lambda != std::vector<long>({1})) continue;
        ++seen;
        // s_(n) in m variables at q = 1 counts n-multisets from m values
        CHECK(e.decision.profile->total() == choose(e.n + e.m - 1, e.n));
    }
    CHECK(seen == 12);
}

TEST_CASE("shapes with more rows than variables give the empty case") {
    GridReport r = verify_conjecture_grid(3, 3, 4);
    for (const GridEntry& e : r.entries) {
        if (e.lambda != std::vector<long>({1, 1, 1}) || e.m > 2) continue;
        CHECK(e.decision.yes);
        for (const Int& c : e.decision.profile->counts) CHECK(c == 0);
    }
}

TEST_CASE("grid entries match the direct pipeline") {
    GridReport r = verify_conjecture_grid(3, 3, 4);
    for (const GridEntry& e : r.entries) {
        if (!(e.lambda == std::vector<long>({2}) && e.m == 3 && e.n == 2) &&
            !(e.lambda == std::vector<long>({2, 1}) && e.m == 2 && e.n == 3))
            continue;
        std::vector<long> stretched;
        for (long part : e.lambda) stretched.push_back(part * e.n);
        IntPolynomial p = principal_specialization(Partition(stretched), e.m);
        CspDecision direct = csp_exists(reduce_mod_qn(p.coeffs, e.n));
        CHECK(direct.yes == e.decision.yes);
        CHECK(direct.profile->counts == e.decision.profile->counts);
    }
}

TEST_CASE("fast grid dimensions") {
    GridReport r = verify_conjecture_grid(4, 4, 6);
    CHECK(r.entries.size() == 264);
    CHECK(r.yes_count == 264);
    CHECK(r.no_count == 0);
}

TEST_CASE("invalid grid bounds") {
    CHECK(thrown_code([] { verify_conjecture_grid(0, 3, 4); }) == errc::invalid_argument);
    CHECK(thrown_code([] { verify_conjecture_grid(3, 0, 4); }) == errc::invalid_argument);
    CHECK(thrown_code([] { verify_conjecture_grid(3, 3, 0); }) == errc::invalid_argument);
}

TEST_CASE("catalan sweep profiles") {
    CatalanReport r = catalan_sweep(6);
    CHECK(r.max_n == 6);
    CHECK(r.entries.size() == 6);
    CHECK(r.yes_count == 6);
    CHECK(r.no_count == 0);
    for (size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(r.entries[i].n == static_cast<long>(i) + 1);
        CHECK(r.entries[i].decision.yes);
    }
    CHECK(r.entries[0].decision.profile->counts == std::vector<Int>({1}));
    CHECK(r.entries[1].decision.profile->counts == std::vector<Int>({2, 0}));
    CHECK(r.entries[5].decision.profile->counts == std::vector<Int>({2, 4, 18, 0, 0, 108}));

    // totals are the Catalan numbers
    std::vector<long> catalan = {1, 2, 5, 14, 42, 132};
    for (size_t i = 0; i < 6; ++i) CHECK(r.entries[i].decision.profile->total() == catalan[i]);

    CHECK(thrown_code([] { catalan_sweep(0); }) == errc::invalid_argument);
}

TEST_CASE("appendix inequalities against direct evaluation") {
    // harmonic sums, recomputed with plain rational arithmetic
    for (long a = 1; a <= 3; ++a)
        for (long t = a; t <= 3; ++t)
            for (long i = 0; i <= 3; ++i)
                for (long j = 1; j <= 3; ++j)
                    for (long k = j; k <= 3; ++k) {
                        Rat lhs = 0, rhs = 0;
                        for (long l = 0; l < k * a; ++l) lhs += make_rat(1, k * t + i - l);
                        for (long l = 0; l < j * a; ++l) rhs += make_rat(1, j * t + i - l);
                        CHECK(harmonic_sum_dominance(a, t, i, j, k) == (lhs >= rhs));
                        CHECK(harmonic_sum_dominance(a, t, i, j, k));
                    }

    auto int_power = [](const Int& base, long e) {
        Int acc = 1;
        for (long x = 0; x < e; ++x) acc *= base;
        return acc;
    };
    for (long a = 1; a <= 3; ++a)
        for (long b = a; b <= 3; ++b)
            for (long i = 0; i <= 3; ++i)
                for (long j = 1; j <= 3; ++j)
                    for (long k = j; k <= 3; ++k) {
                        Int lhs = int_power(choose(k * b + i, k * a), j) * int_power(choose(j * a + i, j * a), k);
                        Int rhs = int_power(choose(j * b + i, j * a), k) * int_power(choose(k * a + i, k * a), j);
                        CHECK(binomial_ratio_power_monotone(a, b, i, j, k) == (lhs >= rhs));
                        CHECK(binomial_ratio_power_monotone(a, b, i, j, k));
                    }

    for (long a = 0; a <= 3; ++a)
        for (long b = a + 1; b <= 4; ++b)
            for (long k = 1; k <= 3; ++k)
                for (long i = 0; i <= k * a; ++i) {
                    Int lhs = choose(k * b + i, k * a) * int_power(Int(2 * a), k * a);
                    Int rhs = choose(k * a + i, k * a) * int_power(Int(b + a), k * a);
                    CHECK(binomial_product_lower_bound(a, b, i, k) == (lhs >= rhs));
                    CHECK(binomial_product_lower_bound(a, b, i, k));
                }
}

TEST_CASE("appendix equality boundaries hold") {
    CHECK(harmonic_sum_dominance(2, 5, 3, 4, 4));              // j = k
    CHECK(binomial_ratio_power_monotone(3, 3, 2, 2, 5));       // a = b
    CHECK(binomial_ratio_power_monotone(2, 4, 1, 3, 3));       // j = k
    CHECK(binomial_product_lower_bound(0, 7, 0, 3));           // a = 0 forces i = 0
}

TEST_CASE("appendix hypothesis violations") {
    CHECK(thrown_code([] { harmonic_sum_dominance(0, 1, 0, 1, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { harmonic_sum_dominance(2, 1, 0, 1, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { harmonic_sum_dominance(1, 1, -1, 1, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { harmonic_sum_dominance(1, 1, 0, 2, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_ratio_power_monotone(2, 1, 0, 1, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_ratio_power_monotone(1, 1, 0, 3, 2); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_product_lower_bound(1, 1, 0, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_product_lower_bound(0, 1, 1, 1); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_product_lower_bound(1, 2, 0, 0); }) == errc::hypothesis_violation);
    CHECK(thrown_code([] { binomial_product_lower_bound(1, 2, 3, 2); }) == errc::hypothesis_violation);
}

TEST_CASE("appendix report is seeded and reproducible") {
    AppendixReport a = check_appendix_inequalities(3, 40, 7);
    AppendixReport b = check_appendix_inequalities(3, 40, 7);
    CHECK(dump_canonical(to_json(a)) == dump_canonical(to_json(b)));
    CHECK(a.violations.empty());
    CHECK(a.max_param == 3);
    CHECK(a.samples == 40);
    CHECK(a.seed == 7);

    AppendixReport none = check_appendix_inequalities(3, 0, 7);
    CHECK(none.violations.empty());
    CHECK(a.checks == none.checks + 3 * 40);

    json doc = to_json(a);
    CHECK(doc["violations"].is_array());
    CHECK(doc["violations"].empty());
    CHECK(doc["checks"].get<long>() == a.checks);

    CHECK(thrown_code([] { check_appendix_inequalities(0, 1, 1); }) == errc::invalid_argument);
    CHECK(thrown_code([] { check_appendix_inequalities(2, -1, 1); }) == errc::invalid_argument);
}

TEST_CASE("json number conventions") {
    CHECK(int_to_json(Int(7)) == json(7));
    CHECK(int_to_json(Int(-3)) == json(-3));
    Int big("1208925819614629174706176");  // 2^80
    CHECK(int_to_json(big).is_string());
    CHECK(int_from_json(int_to_json(big), "x") == big);
    CHECK(int_from_json(json("42"), "x") == 42);
    CHECK(int_from_json(json(-9), "x") == -9);
    CHECK(rat_to_json(make_rat(1, 2)) == json("1/2"));
    CHECK(rat_to_json(Rat(5)) == json("5"));
    CHECK(rat_from_json(json(5), "x") == 5);
    CHECK(rat_from_json(json("2/4"), "x") == make_rat(1, 2));
    CHECK(rat_from_json(json("-7/3"), "x") == make_rat(-7, 3));

    CHECK(thrown_code([] { int_from_json(json(1.5), "x"); }) == errc::parse_error);
    CHECK(thrown_code([] { int_from_json(json("1/2"), "x"); }) == errc::parse_error);
    CHECK(thrown_code([] { rat_from_json(json("1/0"), "x"); }) == errc::parse_error);
    CHECK(thrown_code([] { rat_from_json(json("abc"), "x"); }) == errc::parse_error);
    CHECK(thrown_code([] { rat_from_json(json(nullptr), "x"); }) == errc::parse_error);
}

TEST_CASE("file round trips for every schema") {
    CycPoly f = reduce_mod_qn({10, 1, 0, 3, 0, 1}, 6);
    write_file("/tmp/csp_poly.json", dump_canonical(to_json(f)));
    ParsedObject poly = io_roundtrip("/tmp/csp_poly.json");
    CHECK(poly.kind == "cycpoly");
    CHECK(std::get<CycPoly>(poly.value).coeffs == f.coeffs);

    EvalTable t = eval_table(f);
    write_file("/tmp/csp_table.json", dump_canonical(to_json(t)));
    ParsedObject table = io_roundtrip("/tmp/csp_table.json");
    CHECK(table.kind == "evaltable");
    CHECK(std::get<EvalTable>(table.value).values == t.values);

    OrbitProfile prof(6, {2, 2, 6, 0, 0, 54});
    write_file("/tmp/csp_profile.json", dump_canonical(to_json(prof)));
    ParsedObject profile = io_roundtrip("/tmp/csp_profile.json");
    CHECK(profile.kind == "profile");
    CHECK(std::get<OrbitProfile>(profile.value).counts == prof.counts);

    UniversalVector s(4, {Rat(1), make_rat(3, 2), Rat(0), Rat(8)});
    write_file("/tmp/csp_universal.json", dump_canonical(to_json(s)));
    ParsedObject universal = io_roundtrip("/tmp/csp_universal.json");
    CHECK(universal.kind == "universal");
    CHECK(std::get<UniversalVector>(universal.value).s == s.s);

    CspMatrix m = words_matrix();
    m.at(0, 1) = make_rat(7, 3);
    CspMatrix rational(6, m.entries);
    write_file("/tmp/csp_matrix.json", dump_canonical(to_json(rational)));
    ParsedObject matrix = io_roundtrip("/tmp/csp_matrix.json");
    CHECK(matrix.kind == "matrix");
    CHECK(std::get<CspMatrix>(matrix.value) == rational);

    // big coefficients survive the string convention
    CycPoly bigpoly(2, {Int("1208925819614629174706176"), Int(0)});
    write_file("/tmp/csp_big.json", dump_canonical(to_json(bigpoly)));
    CHECK(std::get<CycPoly>(io_roundtrip("/tmp/csp_big.json").value).coeffs[0] ==
          Int("1208925819614629174706176"));
}

TEST_CASE("malformed documents are rejected") {
    write_file("/tmp/csp_bad.json", "not json at all");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    write_file("/tmp/csp_bad.json", "[1,2,3]");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_missing_file.json"); }) == errc::parse_error);

    // unknown field
    write_file("/tmp/csp_bad.json", R"({"coeffs":[1,2],"n":2,"padding":0})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    // wrong length
    write_file("/tmp/csp_bad.json", R"({"coeffs":[1,2,3],"n":2})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    // n must be a small positive integer
    write_file("/tmp/csp_bad.json", R"({"coeffs":[],"n":0})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    // parses fine but is not canonical: integers stay numbers when small
    write_file("/tmp/csp_bad.json", R"({"coeffs":["1",2],"n":2})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    // zero denominator inside an array
    write_file("/tmp/csp_bad.json", R"({"n":1,"s":["1/0"]})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::parse_error);

    // schema-valid JSON whose payload violates matrix invariants
    write_file("/tmp/csp_bad.json", R"({"n":2,"rows":[["-1","0"],["0","0"]]})");
    CHECK(thrown_code([] { io_roundtrip("/tmp/csp_bad.json"); }) == errc::negative_entry);

    CHECK(thrown_code([] { parse_json_text("{"); }) == errc::parse_error);
}

TEST_CASE("cli: polynomial decisions") {
    if (cli_binary().empty()) { MESSAGE("CSP_BIN not set, skipping"); return; }

    CliResult no = run_cli("check-poly --json --n 6 --coeffs 10,1,0,3,0,1");
    CHECK(no.exit_code == 1);
    json doc = parse_json_text(no.out);
    CHECK(doc["yes"] == false);
    CHECK(doc["reason"] == "negative_orbit_count");
    CHECK(doc["witness_k"] == 3);
    CHECK(doc["evaluations"] == json({8, 12, 5, 12, 8, 15}));
    CHECK(doc["sieve"] == json({8, 4, -3, 0, 0, 6}));

    CliResult yes = run_cli("check-poly --json --n 4 --coeffs 1,1,1,1");
    CHECK(yes.exit_code == 0);
    doc = parse_json_text(yes.out);
    CHECK(doc["yes"] == true);
    CHECK(doc["reason"] == "ok");
    CHECK(doc["profile"]["counts"] == json({0, 0, 0, 4}));
    CHECK(doc["sieve"] == json({0, 0, 0, 4}));

    CliResult frac = run_cli("check-poly --json --n 6 --coeffs 0,1,0,0,0,0");
    CHECK(frac.exit_code == 1);
    doc = parse_json_text(frac.out);
    CHECK(doc["yes"] == false);
    CHECK(doc["reason"] == "not_integral");
    CHECK(doc["witness_k"] == 5);
    CHECK_FALSE(doc.contains("evaluations"));

    CliResult table = run_cli("sieve --n 2 --coeffs 1,1");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("[0, 2]") != std::string::npos);

    CliResult sieve_json = run_cli("sieve --json --n 2 --coeffs 1,1");
    doc = parse_json_text(sieve_json.out);
    CHECK(doc["values"] == json({0, 2}));
    CHECK(doc["sieve"] == json({0, 2}));
}

TEST_CASE("cli: schur subcommands") {
    if (cli_binary().empty()) { MESSAGE("CSP_BIN not set, skipping"); return; }

    CliResult spec = run_cli("schur spec --json --shape 2,2 --m 4");
    CHECK(spec.exit_code == 0);
    json doc = parse_json_text(spec.out);
    CHECK(doc["shape"] == json({2, 2}));
    CHECK(doc["coeffs"] == json({0, 0, 1, 1, 3, 3, 4, 3, 3, 1, 1}));

    CliResult pretty = run_cli("schur spec --shape 2,2 --m 4");
    CHECK(pretty.out == "q^2 + q^3 + 3q^4 + 3q^5 + 4q^6 + 3q^7 + 3q^8 + q^9 + q^10\n");

    CliResult eval = run_cli("schur eval --json --shape 2,2 --m 4 --d 2");
    CHECK(eval.exit_code == 0);
    CHECK(parse_json_text(eval.out)["value"] == 4);

    CliResult one = run_cli("schur eval --shape 2,2 --m 2 --d 2");
    CHECK(one.out == "1\n");

    CliResult bad = run_cli("schur eval --shape 2,2 --m 3 --d 2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: cone subcommands") {
    if (cli_binary().empty()) { MESSAGE("CSP_BIN not set, skipping"); return; }

    write_file("/tmp/csp_cli_matrix.json", dump_canonical(to_json(words_matrix())));
    CliResult ok = run_cli("cone verify --json --file /tmp/csp_cli_matrix.json");
    CHECK(ok.exit_code == 0);
    CHECK(parse_json_text(ok.out)["verifies"] == true);

    CspMatrix bad_m = words_matrix();
    bad_m.at(2, 1) += 1;
    write_file("/tmp/csp_cli_bad.json", dump_canonical(to_json(CspMatrix(6, bad_m.entries))));
    CliResult no = run_cli("cone verify --json --file /tmp/csp_cli_bad.json");
    CHECK(no.exit_code == 1);
    CHECK(parse_json_text(no.out)["verifies"] == false);

    CliResult proj = run_cli("cone project --json --file /tmp/csp_cli_matrix.json");
    CHECK(proj.exit_code == 0);
    CHECK(matrix_from_json(parse_json_text(proj.out)) == project_universal(words_matrix()));

    CliResult dec = run_cli("cone decompose --json --file /tmp/csp_cli_matrix.json");
    CHECK(dec.exit_code == 0);
    json steps = parse_json_text(dec.out);
    REQUIRE(steps.is_array());
    CspMatrix walk = project_universal(words_matrix());
    for (const json& s : steps) {
        Swap sw({s["u"][0].get<long>(), s["u"][1].get<long>()},
                {s["v"][0].get<long>(), s["v"][1].get<long>()}, rat_from_json(s["a"], "a"));
        walk = apply_swap(walk, sw);
    }
    CHECK(walk == words_matrix());

    CliResult rays = run_cli("cone rays --json --n 2");
    CHECK(parse_json_text(rays.out)["rays"].size() == 3);

    CliResult verts = run_cli("cone vertices --json --p 3 --m 2");
    CHECK(parse_json_text(verts.out)["vertices"].size() == 5);

    CliResult count = run_cli("cone count --p 3 --m 8");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "11\n");
}

TEST_CASE("cli: reports and error paths") {
    if (cli_binary().empty()) { MESSAGE("CSP_BIN not set, skipping"); return; }

    CliResult grid = run_cli("grid --fast --json");
    CHECK(grid.exit_code == 0);
    json doc = parse_json_text(grid.out);
    CHECK(doc["no_count"] == 0);
    CHECK(doc["entries"].size() == 264);

    CliResult cat = run_cli("catalan --json --max-n 8");
    CHECK(cat.exit_code == 0);
    doc = parse_json_text(cat.out);
    CHECK(doc["yes_count"] == 8);
    CHECK(doc["no_count"] == 0);

    CliResult app = run_cli("appendix --json --max-param 2 --samples 5 --seed 1");
    CHECK(app.exit_code == 0);
    doc = parse_json_text(app.out);
    CHECK(doc["violations"].empty());
    CHECK(doc["seed"] == 1);

    CHECK(run_cli("check-poly --n 0 --coeffs 1").exit_code == 2);
    CHECK(run_cli("check-poly --n 4").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("cone verify --file /tmp/csp_no_such_file.json").exit_code == 2);
    CHECK(run_cli("check-poly --json --table --n 2 --coeffs 1,1").exit_code == 2);
    CHECK(run_cli("check-poly --n 2 --coeffs 1,x").exit_code == 2);
    CHECK(run_cli("cone count --p 6 --m 2").exit_code == 2);
}

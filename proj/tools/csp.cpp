// Command-line front end: every computation is exact, output is either a
// human table or canonical JSON. Exit codes: 0 = positive verdict or plain
// data, 1 = negative verdict, 2 = any error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csp/appendix.hpp"
#include "csp/cone.hpp"
#include "csp/error.hpp"
#include "csp/exactroots.hpp"
#include "csp/grid.hpp"
#include "csp/jsonio.hpp"
#include "csp/polynomial.hpp"
#include "csp/schur.hpp"
#include "csp/sieve.hpp"

using namespace csp;

namespace {

std::vector<std::string> split_commas(const std::string& raw) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : raw) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Int> parse_int_list(const std::string& raw) {
    std::vector<Int> out;
    for (const std::string& piece : split_commas(raw)) {
        Rat r = parse_rat(piece);
        if (!is_integer(r)) fail(errc::parse_error, "'" + piece + "' is not an integer");
        out.push_back(to_int(r));
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& raw) {
    std::vector<long> out;
    for (const Int& v : parse_int_list(raw)) {
        if (!v.fits_slong_p()) fail(errc::parse_error, "list entry out of range");
        out.push_back(v.get_si());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CspMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_json_text(read_file(path))); }

std::string poly_string(const std::vector<Int>& coeffs) {
    std::string out;
    for (size_t e = 0; e < coeffs.size(); ++e) {
        const Int& c = coeffs[e];
        if (c == 0) continue;
        Int mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (mag != 1 || e == 0) out += mag.get_str();
        if (e >= 1) out += (e == 1) ? "q" : "q^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

std::string int_list_string(const std::vector<Int>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].get_str();
    }
    return out + "]";
}

void print_matrix(const CspMatrix& m) {
    std::vector<size_t> width(static_cast<size_t>(m.n), 0);
    for (long j = 1; j <= m.n; ++j)
        for (long i = 0; i < m.n; ++i)
            width[static_cast<size_t>(j - 1)] =
                std::max(width[static_cast<size_t>(j - 1)], rat_string(m.at(i, j)).size());
    for (long i = 0; i < m.n; ++i) {
        std::string line = "  [";
        for (long j = 1; j <= m.n; ++j) {
            std::string cell = rat_string(m.at(i, j));
            if (j > 1) line += "  ";
            line += std::string(width[static_cast<size_t>(j - 1)] - cell.size(), ' ') + cell;
        }
        std::cout << line << "]\n";
    }
}

std::string decision_line(const CspDecision& d) {
    if (d.yes) return "CSP exists: yes";
    std::string why;
    switch (d.reason) {
        case csp_reason::not_integral: why = "a root-of-unity value is not an integer"; break;
        case csp_reason::negative_evaluation: why = "a root-of-unity value is negative"; break;
        case csp_reason::negative_orbit_count: why = "an orbit count would be negative"; break;
        case csp_reason::ok: why = "ok"; break;
    }
    std::string at = d.witness_k ? " (witness k=" + std::to_string(*d.witness_k) + ")" : "";
    return "CSP exists: no, " + why + at;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclic sieving toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false, table_out = false;
    auto* jflag = app.add_flag("--json", json_out, "emit canonical JSON");
    auto* tflag = app.add_flag("--table", table_out, "emit human-readable tables (default)");
    jflag->excludes(tflag);

    int verdict = 0;
    auto emit = [&](const json& doc, const std::function<void()>& table) {
        if (json_out)
            std::cout << dump_canonical(doc) << "\n";
        else
            table();
    };

    std::string coeffs_raw, shape_raw, file_path, target_path;
    long n_arg = 0, m_arg = 0, d_arg = 0, p_arg = 0;

    auto* check = app.add_subcommand("check-poly", "decide CSP existence for a polynomial mod q^n - 1");
    check->add_option("--n", n_arg, "cyclic group order")->required();
    check->add_option("--coeffs", coeffs_raw, "comma-separated coefficients, degree 0 first")->required();
    check->callback([&] {
        CycPoly f = reduce_mod_qn(parse_int_list(coeffs_raw), n_arg);
        CspDecision d = csp_exists(f);
        verdict = d.yes ? 0 : 1;
        json doc = to_json(d);
        bool integral = is_integral_at_roots(f);
        EvalTable t;
        std::vector<Int> s;
        if (integral) {
            t = eval_table(f);
            s = sieve_transform(t);
            json evals = json::array(), sieve = json::array();
            for (const Int& v : t.values) evals.push_back(int_to_json(v));
            for (const Int& v : s) sieve.push_back(int_to_json(v));
            doc["evaluations"] = std::move(evals);
            doc["sieve"] = std::move(sieve);
        }
        emit(doc, [&] {
            std::cout << "f = " << poly_string(f.coeffs) << "  (mod q^" << f.n << " - 1)\n";
            if (integral) {
                std::cout << "f(w^k), k=1..n:  " << int_list_string(t.values) << "\n";
                std::cout << "sieve S_1..S_n:  " << int_list_string(s) << "\n";
            }
            std::cout << decision_line(d) << "\n";
        });
    });

    auto* sieve_cmd = app.add_subcommand("sieve", "root-of-unity values and the sieve transform");
    sieve_cmd->add_option("--n", n_arg, "cyclic group order")->required();
    sieve_cmd->add_option("--coeffs", coeffs_raw, "comma-separated coefficients, degree 0 first")->required();
    sieve_cmd->callback([&] {
        CycPoly f = reduce_mod_qn(parse_int_list(coeffs_raw), n_arg);
        EvalTable t = eval_table(f);
        std::vector<Int> s = sieve_transform(t);
        json doc = to_json(t);
        json sj = json::array();
        for (const Int& v : s) sj.push_back(int_to_json(v));
        doc["sieve"] = std::move(sj);
        emit(doc, [&] {
            std::cout << "f = " << poly_string(f.coeffs) << "  (mod q^" << f.n << " - 1)\n";
            std::cout << "f(w^k), k=1..n:  " << int_list_string(t.values) << "\n";
            std::cout << "sieve S_1..S_n:  " << int_list_string(s) << "\n";
        });
    });

    auto* schur_cmd = app.add_subcommand("schur", "principal specializations of Schur polynomials");
    schur_cmd->require_subcommand(1);
    auto* schur_spec = schur_cmd->add_subcommand("spec", "s_shape(1, q, ..., q^{m-1}) as a polynomial");
    schur_spec->add_option("--shape", shape_raw, "partition, e.g. 3,1,1")->required();
    schur_spec->add_option("--m", m_arg, "number of variables")->required();
    schur_spec->callback([&] {
        Partition lam(parse_long_list(shape_raw));
        IntPolynomial p = principal_specialization(lam, m_arg);
        json coeffs = json::array();
        for (const Int& c : p.coeffs) coeffs.push_back(int_to_json(c));
        emit(json{{"shape", lam.parts}, {"m", m_arg}, {"coeffs", std::move(coeffs)}},
             [&] { std::cout << poly_string(p.coeffs) << "\n"; });
    });
    auto* schur_eval = schur_cmd->add_subcommand("eval", "the same specialization at a primitive d-th root of unity");
    schur_eval->add_option("--shape", shape_raw, "partition, e.g. 3,1,1")->required();
    schur_eval->add_option("--m", m_arg, "number of variables, multiple of d")->required();
    schur_eval->add_option("--d", d_arg, "root of unity order")->required();
    schur_eval->callback([&] {
        Partition lam(parse_long_list(shape_raw));
        Int v = rsw_evaluate(lam, m_arg, d_arg);
        emit(json{{"shape", lam.parts}, {"m", m_arg}, {"d", d_arg}, {"value", int_to_json(v)}},
             [&] { std::cout << v.get_str() << "\n"; });
    });

    auto* cone_cmd = app.add_subcommand("cone", "the cone of CSP matrices");
    cone_cmd->require_subcommand(1);
    auto* cone_verify = cone_cmd->add_subcommand("verify", "is the matrix a CSP matrix?");
    cone_verify->add_option("--file", file_path, "matrix JSON file")->required();
    cone_verify->callback([&] {
        bool ok = verify(load_matrix(file_path));
        verdict = ok ? 0 : 1;
        emit(json{{"verifies", ok}}, [&] { std::cout << (ok ? "yes" : "no") << "\n"; });
    });
    auto* cone_project = cone_cmd->add_subcommand("project", "project onto the universal CSP matrix");
    cone_project->add_option("--file", file_path, "matrix JSON file")->required();
    cone_project->callback([&] {
        CspMatrix u = project_universal(load_matrix(file_path));
        emit(to_json(u), [&] { print_matrix(u); });
    });
    auto* cone_decompose = cone_cmd->add_subcommand("decompose", "walk between two CSP matrices by unit swaps");
    cone_decompose->add_option("--file", file_path, "start matrix JSON file")->required();
    cone_decompose->add_option("--target", target_path, "target matrix JSON file (default: universal projection)");
    cone_decompose->callback([&] {
        CspMatrix a = load_matrix(file_path);
        CspMatrix b = target_path.empty() ? project_universal(a) : load_matrix(target_path);
        std::vector<Swap> steps = swap_decompose(a, b);
        emit(to_json(steps), [&] {
            std::cout << steps.size() << " swaps from target back to start:\n";
            for (const Swap& s : steps)
                std::cout << "  +" << rat_string(s.a) << " at (" << s.u.first << "," << s.u.second
                          << ") and (" << s.v.first << "," << s.v.second << "), balancing corners\n";
        });
    });
    auto* cone_rays = cone_cmd->add_subcommand("rays", "the extreme rays for cyclic order n");
    cone_rays->add_option("--n", n_arg, "cyclic group order")->required();
    cone_rays->callback([&] {
        std::vector<CspMatrix> rays = ray_family(n_arg);
        json arr = json::array();
        for (const CspMatrix& r : rays) arr.push_back(to_json(r));
        emit(json{{"n", n_arg}, {"rays", std::move(arr)}}, [&] {
            std::cout << rays.size() << " extreme rays\n";
            for (size_t i = 0; i < rays.size(); ++i) {
                std::cout << "ray " << i << ":\n";
                print_matrix(rays[i]);
            }
        });
    });
    auto* cone_vertices = cone_cmd->add_subcommand("vertices", "vertices of the mass-m slice, prime order");
    cone_vertices->add_option("--p", p_arg, "prime order")->required();
    cone_vertices->add_option("--m", m_arg, "total mass")->required();
    cone_vertices->callback([&] {
        std::vector<CspMatrix> verts = prime_polytope_vertices(p_arg, m_arg);
        json arr = json::array();
        for (const CspMatrix& v : verts) arr.push_back(to_json(v));
        emit(json{{"p", p_arg}, {"m", m_arg}, {"vertices", std::move(arr)}}, [&] {
            std::cout << verts.size() << " vertices\n";
            for (size_t i = 0; i < verts.size(); ++i) {
                std::cout << "vertex " << i << ":\n";
                print_matrix(verts[i]);
            }
        });
    });
    auto* cone_count = cone_cmd->add_subcommand("count", "integer CSP matrices of total mass m, prime order");
    cone_count->add_option("--p", p_arg, "prime order")->required();
    cone_count->add_option("--m", m_arg, "total mass")->required();
    cone_count->callback([&] {
        Int c = count_lattice_points(p_arg, m_arg);
        emit(json{{"p", p_arg}, {"m", m_arg}, {"count", int_to_json(c)}},
             [&] { std::cout << c.get_str() << "\n"; });
    });

    bool fast = false;
    long max_weight = 6, max_m = 6, max_n = 12, sweep_n = 30;
    auto* grid_cmd = app.add_subcommand("grid", "stretched-shape CSP existence over a grid of shapes");
    grid_cmd->add_flag("--fast", fast, "reduced grid (4,4,6)");
    grid_cmd->add_option("--max-weight", max_weight, "largest |shape| (default 6)");
    grid_cmd->add_option("--max-m", max_m, "largest variable count (default 6)");
    grid_cmd->add_option("--max-n", max_n, "largest cyclic order (default 12)");
    grid_cmd->callback([&] {
        if (fast) {
            max_weight = 4;
            max_m = 4;
            max_n = 6;
        }
        GridReport r = verify_conjecture_grid(max_weight, max_m, max_n);
        verdict = r.no_count == 0 ? 0 : 1;
        emit(to_json(r), [&] {
            std::cout << "grid |shape|<=" << max_weight << ", m<=" << max_m << ", n<=" << max_n << ": "
                      << r.entries.size() << " cases, " << r.yes_count << " yes, " << r.no_count
                      << " no  (" << r.seconds << "s)\n";
            for (const GridEntry& e : r.entries)
                if (!e.decision.yes) {
                    std::cout << "  no at shape=";
                    for (size_t i = 0; i < e.lambda.size(); ++i)
                        std::cout << (i ? "," : "") << e.lambda[i];
                    std::cout << " m=" << e.m << " n=" << e.n << ": " << decision_line(e.decision) << "\n";
                }
        });
    });

    auto* catalan_cmd = app.add_subcommand("catalan", "CSP existence for the q-Catalan numbers");
    catalan_cmd->add_option("--max-n", sweep_n, "largest index (default 30)");
    catalan_cmd->callback([&] {
        CatalanReport r = catalan_sweep(sweep_n);
        verdict = r.no_count == 0 ? 0 : 1;
        emit(to_json(r), [&] {
            std::cout << "q-Catalan n=1.." << sweep_n << ": " << r.yes_count << " yes, " << r.no_count
                      << " no\n";
        });
    });

    long max_param = 6, samples = 100;
    unsigned long seed = 20260815;
    auto* appendix_cmd = app.add_subcommand("appendix", "exact checks of the auxiliary inequalities");
    appendix_cmd->add_option("--max-param", max_param, "exhaustive bound (default 6)");
    appendix_cmd->add_option("--samples", samples, "random samples per inequality (default 100)");
    appendix_cmd->add_option("--seed", seed, "random seed");
    appendix_cmd->callback([&] {
        AppendixReport r = check_appendix_inequalities(max_param, samples, seed);
        verdict = r.violations.empty() ? 0 : 1;
        emit(to_json(r), [&] {
            std::cout << r.checks << " inequality instances checked, " << r.violations.size()
                      << " violations\n";
            for (const AppendixViolation& v : r.violations) {
                std::cout << "  " << v.inequality << " fails at";
                for (long p : v.params) std::cout << " " << p;
                std::cout << "\n";
            }
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return verdict;
}

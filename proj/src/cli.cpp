#include <pyramid/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include <pyramid/errors.hpp>
#include <pyramid/eulerian.hpp>
#include <pyramid/families.hpp>
#include <pyramid/hyperg.hpp>
#include <pyramid/io.hpp>
#include <pyramid/ortho.hpp>
#include <pyramid/weyl/expr.hpp>
#include <pyramid/weyl/normal_order.hpp>
#include <pyramid/weyl/reduce.hpp>

namespace pyramid::cli
{

using namespace pyramid::weyl;

namespace
{

std::string read_input(const std::string &path, std::istream &in)
{
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw PreconditionError("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(f), {});
}

std::string report_text(const CheckReport &r)
{
    std::ostringstream os;
    for (const auto &e : r.entries()) {
        os << to_string(e.status) << ' ' << e.identity;
        if (e.n) {
            os << " n=" << *e.n;
        }
        if (e.m) {
            os << " m=" << *e.m;
        }
        if (!e.detail.empty()) {
            os << "  " << e.detail;
        }
        os << '\n';
    }
    os << r.entries().size() << " entries, " << r.failures() << " failed\n";
    return os.str();
}

struct Family {
    std::optional<OrderingFamily> ordering;
    std::optional<PolyFamily> poly;

    PyramidRow row(long n) const
    {
        return ordering ? ordering->row(n) : classical_pyramid(*poly, n);
    }
    Poly polynomial(long n) const
    {
        return ordering ? ordering->poly(n) : family_poly(*poly, n);
    }
};

Family lookup_family(const std::string &name, long r)
{
    Family f;
    f.ordering = OrderingFamily::from_name(name, r);
    if (!f.ordering) {
        f.poly = poly_family_from_name(name);
    }
    if (!f.ordering && !f.poly) {
        throw CLI::ValidationError("family", "unknown family '" + name + "'");
    }
    return f;
}

std::string gauss_list(const std::vector<GaussRat> &v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? " " : "") + v[k].to_string();
    }
    return s;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact operator-ordering pyramids and their polynomials"};
    app.name("pyramid");
    app.require_subcommand(1, 1);

    std::string expr_text, alphabet_name = "heisenberg", method = "engine";
    auto *reduce = app.add_subcommand("reduce", "Reduce a balanced expression in p, q to a polynomial in z");
    reduce->add_option("expr", expr_text, "expression, e.g. \"q p^2 q\"")->required();
    reduce->add_option("--method", method, "engine or interpolation")->check(CLI::IsMember({"engine", "interpolation"}));
    bool reduce_json = false;
    reduce->add_flag("--json", reduce_json, "print {\"coeffs\": [...]}");

    auto *norm = app.add_subcommand("normal-order", "Normal-order an expression");
    norm->add_option("expr", expr_text, "expression")->required();
    norm->add_option("--alphabet", alphabet_name, "heisenberg (q,p) or a1 (R,D)")->check(CLI::IsMember({"heisenberg", "a1"}));

    std::string input_path;
    auto *p2p = app.add_subcommand("pyramid2poly", "Pyramid row JSON to polynomial JSON");
    p2p->add_option("file", input_path, "input file, stdin when omitted or -");

    long n = -1;
    auto *poly2pyr = app.add_subcommand("poly2pyramid", "Polynomial JSON to pyramid row JSON");
    poly2pyr->add_option("file", input_path, "input file, stdin when omitted or -");
    poly2pyr->add_option("--n", n, "row index (defaults to the degree)");

    std::string family_name;
    long r = 2;
    bool integerize_flag = false, json = false, csv = false, triangle = false;
    auto *fam = app.add_subcommand("family", "Pyramid row and polynomial of a named family");
    fam->add_option("name", family_name, "symmetric, born-jordan, weyl, binom-pow, legendre, hermite, chebyshev-t, chebyshev-u, monomial")->required();
    fam->add_option("--n", n, "row index")->required()->check(CLI::NonNegativeNumber);
    fam->add_option("--r", r, "binomial power for binom-pow")->check(CLI::PositiveNumber);
    fam->add_flag("--integerize", integerize_flag, "scale rows to coprime integers");
    auto *fam_json = fam->add_flag("--json", json, "JSON output");
    auto *fam_csv = fam->add_flag("--csv", csv, "CSV output (rows only)");
    fam_json->excludes(fam_csv);
    fam->add_flag("--triangle", triangle, "rows 0..n instead of row n");

    long max_n = 10;
    auto *outer = app.add_subcommand("outer-diagonal", "Check the outer-diagonal closed form of a family");
    outer->add_option("name", family_name, "legendre, hermite, chebyshev-t, chebyshev-u or all")->required();
    outer->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);
    bool text = false;
    outer->add_flag("--text", text, "plain-text report");

    long max_r = 200, depth = 6;
    auto *screen = app.add_subcommand("screen", "Orthogonality screen of an ordering family");
    screen->add_option("--family", family_name, "symmetric, born-jordan, weyl or binom-pow")->required();
    screen->add_option("--max-r", max_r, "largest power for binom-pow")->check(CLI::PositiveNumber);
    screen->add_option("--depth", depth, "number of polynomials screened")->check(CLI::Range(4L, 64L));
    screen->add_option("--r", r, "single power when --family binom-pow is screened like a named family");
    screen->add_flag("--text", text, "plain-text report");

    long max_m = 10;
    auto *ids = app.add_subcommand("identities", "Hypergeometric identity and bridge checks");
    ids->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);
    ids->add_option("--max-m", max_m, "largest m")->check(CLI::NonNegativeNumber);
    ids->add_flag("--text", text, "plain-text report");

    std::string check;
    auto *eul = app.add_subcommand("eulerian", "Type-B Eulerian rows and checks");
    eul->add_option("--n", n, "row index, or largest n for --check")->required()->check(CLI::NonNegativeNumber);
    eul->add_option("--check", check, "gf, euler, relations or all")->check(CLI::IsMember({"gf", "euler", "relations", "all"}));
    eul->add_flag("--text", text, "plain-text report");

    std::size_t max_len = 10;
    auto *pal = app.add_subcommand("palindromes", "Exhaustive palindrome/Hermitian scan over words in p, q");
    pal->add_option("--max-len", max_len, "longest word")->check(CLI::Range(0, 20));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    auto emit_report = [&](const CheckReport &rep, bool as_text, bool failures_matter) {
        out << (as_text ? report_text(rep) : report_to_json(rep));
        return failures_matter && !rep.passed() ? verification_failure : ok;
    };

    try {
        if (*reduce) {
            const WeylExpr e = parse_expr(expr_text);
            const Poly p = method == "engine" ? reduce_balanced(e) : reduce_via_interpolation(e);
            out << (reduce_json ? poly_to_json(p) : p.to_string() + "\n");
            return ok;
        }
        if (*norm) {
            const Alphabet &a = alphabet_name == "a1" ? weyl_a1() : heisenberg();
            out << normal_order(parse_expr(expr_text, a), a).to_string(a) << '\n';
            return ok;
        }
        if (*p2p) {
            out << poly_to_json(pyramid_to_poly(pyramid_from_json(read_input(input_path, in))));
            return ok;
        }
        if (*poly2pyr) {
            const Poly p = poly_from_json(read_input(input_path, in));
            const long row_n = n >= 0 ? n : std::max(0L, p.degree());
            out << pyramid_to_json(poly_to_pyramid(p, row_n));
            return ok;
        }
        if (*fam) {
            const Family f = lookup_family(family_name, r);
            const long lo = triangle ? 0 : n;
            if (csv) {
                std::vector<PyramidRow> rows;
                std::vector<IntRow> irows;
                for (long k = lo; k <= n; ++k) {
                    if (integerize_flag) {
                        irows.push_back(integerize(f.row(k)));
                    } else {
                        rows.push_back(f.row(k));
                    }
                }
                out << (integerize_flag ? rows_to_csv(irows) : rows_to_csv(rows));
                return ok;
            }
            for (long k = lo; k <= n; ++k) {
                const PyramidRow row = f.row(k);
                const Poly p = f.polynomial(k);
                if (json) {
                    std::string row_json = integerize_flag ? pyramid_to_json(integerize(row)) : pyramid_to_json(row);
                    std::string poly_json = poly_to_json(p);
                    // splice {"n":..,"entries":[..]} and {"coeffs":[..]} into one object
                    row_json.erase(row_json.size() - 2);
                    out << row_json << ',' << poly_json.substr(1);
                } else {
                    out << "n = " << k << '\n';
                    if (integerize_flag) {
                        const IntRow ir = integerize(row);
                        std::string s;
                        for (std::size_t j = 0; j < ir.entries.size(); ++j) {
                            s += (j ? " " : "") + ir.entries[j].get_str();
                        }
                        out << "pyramid (integerized): " << s << '\n';
                    } else {
                        out << "pyramid: " << gauss_list(row.entries()) << '\n';
                    }
                    out << "P_" << k << "(z) = " << p.to_string() << '\n';
                }
            }
            return ok;
        }
        if (*outer) {
            CheckReport rep;
            if (family_name == "all") {
                rep = outer_diagonal_identities(max_n);
            } else {
                const auto pf = poly_family_from_name(family_name);
                if (!pf || *pf == PolyFamily::monomial) {
                    err << "error: no outer-diagonal closed form for '" << family_name << "'\n";
                    return usage;
                }
                rep = outer_diagonal_identities(*pf, max_n);
            }
            return emit_report(rep, text, true);
        }
        if (*screen) {
            if (family_name == "binom-pow" && screen->count("--r") == 0) {
                return emit_report(binom_power_scan(max_r, depth), text, false);
            }
            const auto f = OrderingFamily::from_name(family_name, r);
            if (!f) {
                err << "error: unknown ordering family '" << family_name << "'\n";
                return usage;
            }
            const auto polys = f->polys(depth);
            CheckReport rep;
            const GaussRat c1 = condition1(polys);
            rep.check("condition1", std::nullopt, std::nullopt, c1.is_zero(), "value " + c1.to_string());
            if (depth >= 6) {
                const GaussRat c2 = condition2(polys);
                rep.check("condition2", std::nullopt, std::nullopt, c2.is_zero(), "value " + c2.to_string());
            }
            const ScreenResult s = three_term_screen(polys, depth);
            std::string detail = "betas " + gauss_list(s.betas);
            if (!s.ok) {
                detail += "; fails at n = " + std::to_string(*s.failing_n) + ": " + s.reason;
                if (!s.remainder.is_zero()) {
                    detail += ", remainder " + s.remainder.to_string();
                }
            }
            rep.check("three-term", s.failing_n, std::nullopt, s.ok, detail);
            return emit_report(rep, text, false);
        }
        if (*ids) {
            CheckReport rep = identity_suite(max_n, max_m);
            rep.merge(bridge_suite(max_n));
            return emit_report(rep, text, true);
        }
        if (*eul) {
            if (check.empty()) {
                out << pyramid_to_json(b_row(n));
                return ok;
            }
            CheckReport rep;
            if (check == "gf" || check == "all") {
                rep.merge(b_gf_check(std::max(1L, n)));
            }
            if (check == "euler" || check == "all") {
                rep.merge(euler_sum_check(n));
            }
            if (check == "relations" || check == "all") {
                rep.merge(type_ab_relations(std::max(1L, n)));
            }
            return emit_report(rep, text, true);
        }
        if (*pal) {
            const PalindromeScan s = palindrome_scan(max_len);
            out << "words " << s.words_checked << ", palindromes " << s.palindromes << ", hermitian " << s.hermitian << '\n';
            for (const auto &w : s.non_hermitian_palindromes) {
                out << "non-hermitian palindrome: " << w.to_string() << '\n';
            }
            for (const auto &w : s.counterexamples) {
                out << "hermitian non-palindrome: " << w.to_string() << '\n';
            }
            return s.non_hermitian_palindromes.empty() ? ok : verification_failure;
        }
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError &e) {
        err << "parse error at position " << e.position() << ": " << e.what() << '\n';
        return parse_error;
    } catch (const InternalError &e) {
        err << "internal error: " << e.what() << '\n';
        return verification_failure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    }
    return usage;
}

} // namespace pyramid::cli

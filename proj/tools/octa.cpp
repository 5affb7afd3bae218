// Command-line driver: every verification suite and computation in the
// library behind subcommands with JSON output.  Exit codes: 0 all checks
// pass, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "octa/verify.hpp"

using namespace octa;
using Json = nlohmann::ordered_json;

namespace {

Json rational_json(const Rational& q) { return q.get_str(); }
Json gaussian_json(const QI& q) {
    return Json{{"re", q.re.get_str()}, {"im", q.im.get_str()}};
}

Json report_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"id", c.id},
                              {"status", status_name(c.status)},
                              {"details", c.details},
                              {"ref", c.ref}});
    return Json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

void print_report_table(const Report& rep) {
    std::cout << "== suite " << rep.suite << (rep.passed() ? "  [ok]" : "  [FAILED]") << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "  " << std::left;
        std::cout.width(44);
        std::cout << c.id;
        std::cout << " " << status_name(c.status);
        if (!c.details.empty()) std::cout << "  (" << c.details << ")";
        std::cout << "\n";
    }
}

void load_config(const std::string& path, VerifyOptions& opt) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto last = s.find_last_not_of(" \t");
            s.erase(last == std::string::npos ? 0 : last + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "seed") opt.seed = std::stoul(value);
        else if (key == "koszul.max_degree") opt.koszul_max_degree = std::stoi(value);
        else if (key == "rewrite.degree_cap") opt.rewrite_degree_cap = std::stoi(value);
        else if (key == "series.order") opt.series_order = std::stoi(value);
        else if (key == "quiver.prime") opt.quiver_prime = std::stoll(value);
        else if (key == "quiver.prime_cap") opt.quiver_prime_cap = std::stoll(value);
        else if (key == "reps.budget") opt.reps_budget = std::stoull(value);
        else if (key == "min_rank.samples") opt.min_rank_samples = std::stoull(value);
        else throw CLI::ValidationError("config", "unknown key " + key);
    }
}

int cmd_oct_table(const std::string& basis, bool json) {
    if (basis == "standard") {
        Json table = Json::array();
        for (int r = 1; r <= 7; ++r) {
            Json row = Json::array();
            for (int s = 1; s <= 7; ++s) {
                auto prod = Octonion<Rational>::basis(r) * Octonion<Rational>::basis(s);
                Json coords = Json::array();
                for (int i = 0; i < 8; ++i) coords.push_back(rational_json(prod.c[i]));
                row.push_back(coords);
            }
            table.push_back(row);
        }
        Json out{{"basis", "standard"},
                 {"elements", {"1", "o1", "o2", "o3", "o4", "o5", "o6", "o7"}},
                 {"table", table}};
        std::cout << out.dump(json ? 2 : -1) << "\n";
        return 0;
    }
    if (basis == "split") {
        Json table = Json::array();
        for (int r = 1; r <= 7; ++r) {
            Json row = Json::array();
            for (int s = 1; s <= 7; ++s) {
                auto prod = split_mul(SplitOctonion<QI>::basis(r), SplitOctonion<QI>::basis(s));
                Json coords = Json::array();
                for (int i = 0; i < 8; ++i) coords.push_back(gaussian_json(prod.c[i]));
                row.push_back(coords);
            }
            table.push_back(row);
        }
        Json out{{"basis", "split"},
                 {"elements", {"1", "t", "u1", "u2", "u3", "v1", "v2", "v3"}},
                 {"table", table}};
        std::cout << out.dump(json ? 2 : -1) << "\n";
        return 0;
    }
    std::cerr << "unknown basis " << basis << "\n";
    return 2;
}

std::array<Rational, 7> parse_vector7(const std::string& text) {
    std::array<Rational, 7> out;
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 7) throw CLI::ValidationError("vector", "expected 7 comma-separated scalars");
        out[i++] = scalar_from_str(item);
    }
    if (i != 7) throw CLI::ValidationError("vector", "expected 7 comma-separated scalars");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the octonion graded algebra"};
    app.require_subcommand(1);
    bool json = false;
    std::string config_path;
    app.add_flag("--json", json, "emit JSON");
    app.add_option("--config", config_path, "key=value config file");

    VerifyOptions opt;

    auto* oct = app.add_subcommand("oct", "octonion arithmetic");
    auto* oct_table = oct->add_subcommand("table", "emit a multiplication table");
    std::string basis = "standard";
    oct_table->add_option("--basis", basis, "standard|split");

    auto* rw = app.add_subcommand("rewrite", "rewriting engine");
    auto* rw_nf = rw->add_subcommand("nf", "normal form of an expression");
    std::string expr;
    rw_nf->add_option("--expr", expr, "polynomial, e.g. 'x7*x6 - x6*x7'")->required();
    auto* rw_amb = rw->add_subcommand("ambiguities", "overlap ambiguities of the system");
    auto* rw_count = rw->add_subcommand("count", "count normal words");
    int degree = 0;
    rw_count->add_option("--degree", degree, "word degree")->required();

    auto* se = app.add_subcommand("series", "Hilbert series");
    auto* se_h = se->add_subcommand("hilbert", "coefficients of a Hilbert series");
    std::string algebra = "A";
    int order = 8;
    se_h->add_option("--algebra", algebra, "A | B | Aquot:<letters>");
    se_h->add_option("--n", order, "truncation order");

    auto* ko = app.add_subcommand("koszul", "Koszul data");
    auto* ko_verify = ko->add_subcommand("verify", "dual algebra, complexes, certificates");
    ko_verify->add_option("--max-degree", opt.koszul_max_degree, "exactness cap");

    auto* st = app.add_subcommand("structure", "structural facts");
    auto* st_ders = st->add_subcommand("verify-derivations", "the 21 derivations");
    auto* st_ore = st->add_subcommand("verify-ore", "the Ore presentation");

    auto* re = app.add_subcommand("reps", "finite-dimensional modules");
    auto* re_check = re->add_subcommand("check", "check a module file");
    std::string rep_file;
    re_check->add_option("--file", rep_file, "JSON file {n, X: [7 matrices of 'p/q']}")
        ->required();
    auto* re_search = re->add_subcommand("search", "search modules over F_p");
    std::size_t search_n = 2;
    std::int64_t search_p = 3;
    double budget = 2000;
    re_search->add_option("--n", search_n, "matrix size (<= 3)");
    re_search->add_option("--p", search_p, "odd prime");
    re_search->add_option("--budget", budget, "sample budget");

    auto* qu = app.add_subcommand("quiver", "quiver and moduli");
    auto* qu_count = qu->add_subcommand("count", "count (1,1,1) moduli points over F_p");
    std::int64_t prime = 3;
    qu_count->add_option("--p", prime, "odd prime <= cap");
    auto* qu_check = qu->add_subcommand("check", "membership of a (u, v) pair");
    std::string u_text, v_text;
    qu_check->add_option("--u", u_text, "7 comma-separated scalars")->required();
    qu_check->add_option("--v", v_text, "7 comma-separated scalars")->required();

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name = "all";
    ve->add_option("suite", suite_name,
                   "octonion|relations|rewrite|series|koszul|structure|reps|quiver|all");
    ve->add_option("--seed", opt.seed, "seed for sampled checks");
    ve->add_option("--max-degree", opt.koszul_max_degree, "Koszul exactness cap");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) load_config(config_path, opt);

        if (oct_table->parsed()) return cmd_oct_table(basis, json);

        if (rw_nf->parsed()) {
            auto sys = algebra_a_system<Rational>();
            NcPoly<Rational> p = parse_poly<Rational>(expr);
            NcPoly<Rational> nf = normal_form(p, sys);
            if (json)
                std::cout << Json{{"input", p.str()}, {"normal_form", nf.str()}}.dump() << "\n";
            else
                std::cout << nf.str() << "\n";
            return 0;
        }
        if (rw_amb->parsed()) {
            auto sys = algebra_a_system<Rational>();
            auto ambs = check_all_ambiguities(sys);
            Json overlaps = Json::array();
            bool all_ok = true;
            for (const auto& a : ambs) {
                overlaps.push_back(Json{{"word", a.overlap.str()}, {"resolvable", a.resolvable}});
                all_ok = all_ok && a.resolvable;
            }
            if (json)
                std::cout << Json{{"overlaps", overlaps}}.dump() << "\n";
            else
                for (const auto& a : ambs)
                    std::cout << a.overlap.str() << " "
                              << (a.resolvable ? "resolvable" : "UNRESOLVABLE") << "\n";
            return all_ok ? 0 : 1;
        }
        if (rw_count->parsed()) {
            auto sys = algebra_a_system<Rational>();
            BigInt c = count_normal_words(sys, degree);
            if (json)
                std::cout << Json{{"degree", degree}, {"count", c.get_str()}}.dump() << "\n";
            else
                std::cout << c.get_str() << "\n";
            return 0;
        }

        if (se_h->parsed()) {
            std::vector<std::string> coeffs;
            if (algebra == "A") {
                auto h = hilbert_series_A(order);
                for (int n = 0; n <= order; ++n) coeffs.push_back(h.at(n).get_str());
            } else if (algebra == "B") {
                auto h = hilbert_series_B(order);
                for (int n = 0; n <= order; ++n) coeffs.push_back(h.at(n).get_str());
            } else if (algebra.rfind("Aquot:", 0) == 0) {
                std::vector<int> kill;
                for (char ch : algebra.substr(6))
                    if (ch >= '1' && ch <= '7') kill.push_back(ch - '0');
                auto q = quotient_hilbert_letters<Rational>(kill, order);
                for (const auto& d : q.dims) coeffs.push_back(d.get_str());
            } else {
                std::cerr << "unknown algebra " << algebra << "\n";
                return 2;
            }
            Json out{{"algebra", algebra}, {"coeffs", coeffs}};
            std::cout << out.dump(json ? 2 : -1) << "\n";
            return 0;
        }

        if (ko_verify->parsed()) {
            Report rep = suite::koszul_suite(opt);
            if (json)
                std::cout << report_json(rep).dump(2) << "\n";
            else
                print_report_table(rep);
            return rep.passed() ? 0 : 1;
        }
        if (st_ders->parsed() || st_ore->parsed()) {
            Report full = suite::structure_suite(opt);
            Report rep{st_ders->parsed() ? "structure/derivations" : "structure/ore", {}};
            for (const auto& c : full.checks) {
                bool ders_check = c.ref.rfind("derivations:", 0) == 0 ||
                                  c.ref.rfind("invariants:", 0) == 0;
                if (st_ders->parsed() == ders_check) rep.checks.push_back(c);
            }
            if (json)
                std::cout << report_json(rep).dump(2) << "\n";
            else
                print_report_table(rep);
            return rep.passed() ? 0 : 1;
        }

        if (re_check->parsed()) {
            std::ifstream in(rep_file);
            if (!in) {
                std::cerr << "cannot open " << rep_file << "\n";
                return 2;
            }
            Json doc = Json::parse(in);
            std::size_t n = doc.at("n").get<std::size_t>();
            auto rep = RepAssignment<Rational>::zero(n);
            auto mats = doc.at("X");
            if (mats.size() != 7) {
                std::cerr << "expected 7 matrices\n";
                return 2;
            }
            for (int i = 1; i <= 7; ++i)
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        rep.X[i](r, c) =
                            scalar_from_str(mats[i - 1][r][c].get<std::string>());
            auto eq = equivalence_check(rep);
            auto witness = is_module(rep);
            Json out{{"n", n},
                     {"is_module", witness.is_module},
                     {"failing_relation", witness.failing_relation},
                     {"routes_agree", eq.routes_agree}};
            std::cout << out.dump(json ? 2 : -1) << "\n";
            return eq.routes_agree ? 0 : 1;
        }
        if (re_search->parsed()) {
            auto res = search_small_modules(search_n, search_p,
                                            static_cast<std::size_t>(budget), false, opt.seed);
            Json out{{"n", search_n},
                     {"p", search_p},
                     {"budget", static_cast<std::size_t>(budget)},
                     {"modules_found", res.modules_found},
                     {"distinct_up_to_perm_diag", res.solutions.size()},
                     {"commuting", res.commuting},
                     {"budget_exhausted", res.budget_exhausted},
                     {"status", "sampled"}};
            std::cout << out.dump(json ? 2 : -1) << "\n";
            return 0;
        }

        if (qu_count->parsed()) {
            auto rep = count_moduli_points(prime, opt.quiver_prime_cap);
            Json out{{"p", prime},
                     {"projective_points", rep.projective_points.get_str()},
                     {"quadric_points", rep.quadric_points.get_str()},
                     {"total", rep.total.get_str()},
                     {"fibers_one_or_three", rep.fibers_one_or_three}};
            if (rep.brute_force_total) {
                out["brute_force_total"] = rep.brute_force_total->get_str();
                out["membership_tests_agree"] = rep.membership_tests_agree;
            }
            std::cout << out.dump(json ? 2 : -1) << "\n";
            return rep.fibers_one_or_three ? 0 : 1;
        }
        if (qu_check->parsed()) {
            QuiverRep111<Rational> r;
            r.u = parse_vector7(u_text);
            r.v = parse_vector7(v_text);
            auto m = moduli_membership(r);
            Json out{{"member", m.member},
                     {"quiver_relations_hold", m.quiver_relations_hold},
                     {"octonion_condition_holds", m.octonion_condition_holds},
                     {"tests_agree", m.tests_agree}};
            std::cout << out.dump(json ? 2 : -1) << "\n";
            return m.tests_agree ? 0 : 1;
        }

        if (ve->parsed()) {
            auto reports = run_suites(suite_name, opt);
            bool ok = true;
            if (json) {
                Json suites = Json::array();
                for (const auto& r : reports) {
                    suites.push_back(report_json(r));
                    ok = ok && r.passed();
                }
                std::cout << Json{{"seed", opt.seed}, {"passed", ok}, {"suites", suites}}.dump(2)
                          << "\n";
            } else {
                for (const auto& r : reports) {
                    print_report_table(r);
                    ok = ok && r.passed();
                }
                std::cout << (ok ? "all checks passed" : "FAILURES PRESENT") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

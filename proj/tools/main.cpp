#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibcorr/avoidance.hpp"
#include "fibcorr/borders.hpp"
#include "fibcorr/closed_form.hpp"
#include "fibcorr/correlation.hpp"
#include "fibcorr/fibonacci.hpp"
#include "fibcorr/polynomial.hpp"
#include "fibcorr/verify.hpp"
#include "fibcorr/word.hpp"

namespace {

using fibcorr::Word;
using json = nlohmann::json;

constexpr std::uint32_t kDefaultSeed = 1729;

Word parse_word_arg(const std::string& text) {
    if (text == "eps") return Word();
    return Word::parse(text);
}

std::string word_text(const Word& w) { return w.empty() ? "eps" : w.str(); }

void emit_family(const std::string& family, int max, const std::string& format) {
    const int lo = (family == "p" || family == "M") ? 3 : 1;
    if (format == "latex") {
        std::cout << "\\begin{tabular}{l}\n";
        for (int n = lo; n <= max; ++n) {
            std::string value;
            if (family == "F") value = std::to_string(fibcorr::fib_number(n));
            else if (family == "f") value = fibcorr::fib_word(n).str();
            else if (family == "p") {
                const Word w = fibcorr::palindromic_prefix(n);
                value = w.empty() ? "$\\epsilon$" : w.str();
            } else value = fibcorr::min_forbidden(n).str();
            std::cout << "$" << family << "_{" << n << "}$ = " << value
                      << (n < max ? " \\\\" : "") << "\n";
        }
        std::cout << "\\end{tabular}\n";
        return;
    }
    for (int n = lo; n <= max; ++n) {
        if (family == "F") {
            const std::int64_t v = fibcorr::fib_number(n);
            if (format == "json") {
                std::cout << json{{"family", "F"}, {"n", n}, {"value", std::to_string(v)}}.dump()
                          << "\n";
            } else {
                std::cout << "F_" << n << " = " << v << "\n";
            }
            continue;
        }
        Word w;
        if (family == "f") w = fibcorr::fib_word(n);
        else if (family == "p") w = fibcorr::palindromic_prefix(n);
        else w = fibcorr::min_forbidden(n);
        if (format == "json") {
            std::cout << json{{"family", family}, {"n", n}, {"word", w.str()}}.dump() << "\n";
        } else {
            std::cout << family << "_" << n << " = " << word_text(w) << "\n";
        }
    }
}

void emit_counts(const std::vector<Word>& patterns, const std::vector<fibcorr::BigCount>& counts,
                 const std::string& format) {
    if (format == "json") {
        json names = json::array();
        for (const Word& p : patterns) names.push_back(p.str());
        json values = json::array();
        for (const auto& c : counts) values.push_back(c.str());
        std::cout << json{{"patterns", names}, {"counts", values}}.dump() << "\n";
        return;
    }
    for (std::size_t n = 0; n < counts.size(); ++n) {
        std::cout << "count[" << n << "] = " << counts[n] << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal forbidden factors of the Fibonacci word: families, borders,\n"
                 "correlation polynomials, and avoidance counting."};
    app.require_subcommand(1);
    std::function<int()> action;

    // family
    auto* family = app.add_subcommand("family", "Emit an indexed family as a table");
    family->require_subcommand(1);
    struct FamilyArgs {
        int max = 0;
        std::string format = "text";
    };
    static std::array<FamilyArgs, 4> fam_args;
    const std::array<std::tuple<std::string, std::string, int>, 4> family_specs = {{
        {"fib-numbers", "F", 12},
        {"fib-words", "f", 9},
        {"palindromic-prefixes", "p", 9},
        {"min-forbidden", "M", 9},
    }};
    for (std::size_t i = 0; i < family_specs.size(); ++i) {
        const auto& [name, key, default_max] = family_specs[i];
        FamilyArgs& args = fam_args[i];
        args.max = default_max;
        auto* sub = family->add_subcommand(name, "Rows " + key + "_n up to --max");
        sub->add_option("--max", args.max, "Largest index");
        sub->add_option("--format", args.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        const std::string family_key = key;
        sub->callback([&action, &args, family_key] {
            action = [&args, family_key] {
                emit_family(family_key, args.max, args.format);
                return 0;
            };
        });
    }

    // corr
    auto* corr = app.add_subcommand("corr", "Correlation word and polynomial of u over v");
    struct {
        std::string u, v;
        bool diagram = false;
        std::string format = "text";
    } co;
    corr->add_option("u", co.u, "Left word ('0'/'1' string)")->required();
    corr->add_option("v", co.v, "Right word ('0'/'1' string)")->required();
    corr->add_flag("--diagram", co.diagram, "Also print the shift diagram");
    corr->add_option("--format", co.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    corr->callback([&] {
        action = [&] {
            const Word u = parse_word_arg(co.u);
            const Word v = parse_word_arg(co.v);
            const Word c = fibcorr::correlation(u, v);
            const fibcorr::Polynomial p = fibcorr::correlation_poly(u, v);
            if (co.format == "json") {
                json out{{"u", u.str()}, {"v", v.str()}, {"correlation", c.str()},
                         {"polynomial", p.str()}};
                if (co.diagram) out["diagram"] = fibcorr::correlation_diagram(u, v);
                std::cout << out.dump() << "\n";
            } else {
                std::cout << c.str() << "\n" << p.str() << "\n";
                if (co.diagram) std::cout << fibcorr::correlation_diagram(u, v);
            }
            return 0;
        };
    });

    // borders
    auto* borders_cmd = app.add_subcommand("borders", "Border set of the minimal forbidden word M_n");
    struct {
        int n = 0;
        std::string method = "closed";
        std::string format = "text";
    } bo;
    borders_cmd->add_option("n", bo.n, "Family index (3..30)")->required();
    borders_cmd->add_option("--method", bo.method, "Construction to use")
        ->check(CLI::IsMember({"brute", "recursive", "closed"}))
        ->default_val("closed");
    borders_cmd->add_option("--format", bo.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    borders_cmd->callback([&] {
        action = [&] {
            fibcorr::BorderSet set;
            if (bo.method == "brute") set = fibcorr::border_set_brute(bo.n);
            else if (bo.method == "recursive") set = fibcorr::border_set_recursive(bo.n);
            else set = fibcorr::border_set_closed(bo.n);
            if (bo.format == "json") {
                json members = json::array();
                for (const Word& w : set.members) members.push_back(w.str());
                std::cout << json{{"n", set.index}, {"method", bo.method}, {"members", members}}.dump()
                          << "\n";
            } else {
                std::string line;
                for (const Word& w : set.members) {
                    if (!line.empty()) line += ' ';
                    line += w.str();
                }
                std::cout << line << "\n";
            }
            return 0;
        };
    });

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "Pairwise correlation-polynomial matrix");
    struct {
        int k = 0;
        std::string format = "text";
    } ma;
    matrix_cmd->add_option("k", ma.k, "Matrix size; row i holds M_{i+2}")->required();
    matrix_cmd->add_option("--format", ma.format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->default_val("text");
    matrix_cmd->callback([&] {
        action = [&] {
            const fibcorr::PolynomialMatrix m = fibcorr::correlation_matrix(ma.k);
            if (ma.format == "latex") {
                std::cout << fibcorr::render_matrix_latex(m) << "\n";
            } else if (ma.format == "json") {
                json rows = json::array();
                for (const auto& row : m) {
                    json r = json::array();
                    for (const auto& entry : row) r.push_back(entry.str());
                    rows.push_back(r);
                }
                std::cout << json{{"k", ma.k}, {"entries", rows}}.dump() << "\n";
            } else {
                std::cout << fibcorr::render_matrix_text(m);
            }
            return 0;
        };
    });

    // count
    auto* count_cmd = app.add_subcommand("count", "Count binary words avoiding a pattern set");
    struct {
        std::string patterns;
        int family_max = 0;
        int max_len = 0;
        bool brute = false;
        std::string format = "text";
    } cn;
    auto* pat_opt = count_cmd->add_option("--patterns", cn.patterns,
                                          "Comma-separated '0'/'1' patterns");
    auto* fam_opt = count_cmd->add_option("--family", cn.family_max,
                                          "Use the minimal forbidden family M_3..M_K");
    pat_opt->excludes(fam_opt);
    fam_opt->excludes(pat_opt);
    count_cmd->add_option("--max-len", cn.max_len, "Largest word length to count")->required();
    count_cmd->add_flag("--brute", cn.brute, "Use exhaustive enumeration instead of the automaton");
    count_cmd->add_option("--format", cn.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    count_cmd->callback([&] {
        action = [&] {
            if (pat_opt->count() == 0 && fam_opt->count() == 0) {
                std::cerr << "error: one of --patterns/--family is required\n";
                return 2;
            }
            std::vector<Word> patterns;
            if (fam_opt->count() > 0) {
                patterns = fibcorr::forbidden_family(cn.family_max);
            } else {
                std::string rest = cn.patterns;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    patterns.push_back(parse_word_arg(rest.substr(0, comma)));
                    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
                }
            }
            const auto counts = cn.brute ? fibcorr::count_avoiding_bruteforce(patterns, cn.max_len)
                                         : fibcorr::count_avoiding(patterns, cn.max_len);
            emit_counts(patterns, counts, cn.format);
            return 0;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-module invariant suite");
    struct {
        int max_index = 12;
        std::uint32_t seed = kDefaultSeed;
        std::string format = "text";
    } ve;
    verify_cmd->add_option("--max-index", ve.max_index, "Largest family index to sweep (3..30)")
        ->default_val(12);
    verify_cmd->add_option("--seed", ve.seed, "Seed for randomized properties")
        ->default_val(kDefaultSeed);
    verify_cmd->add_option("--format", ve.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    verify_cmd->callback([&] {
        action = [&] {
            const auto results = fibcorr::run_verification(ve.max_index, ve.seed);
            std::size_t passed = 0;
            for (const auto& r : results) {
                if (r.ok) ++passed;
                if (ve.format == "json") {
                    std::cout << json{{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}}.dump()
                              << "\n";
                } else {
                    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
                    if (!r.ok) std::cout << ": " << r.detail;
                    std::cout << "\n";
                }
            }
            if (ve.format == "json") {
                std::cout << json{{"passed", passed}, {"total", results.size()}}.dump() << "\n";
            } else {
                std::cout << "passed " << passed << "/" << results.size() << " checks\n";
            }
            return passed == results.size() ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

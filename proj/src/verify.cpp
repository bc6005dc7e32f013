#include "fibcorr/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fibcorr/avoidance.hpp"
#include "fibcorr/borders.hpp"
#include "fibcorr/closed_form.hpp"
#include "fibcorr/correlation.hpp"
#include "fibcorr/fibonacci.hpp"
#include "fibcorr/word.hpp"

namespace fibcorr {

namespace {

// Pair sweeps that materialize correlations are quadratic in word length;
// clamp them so verify stays interactive at large --max-index.
constexpr int kQuadraticSweepCap = 16;
// Naive border enumeration is quadratic too; beyond this the linear
// prefix-function variant stands in as the independent path.
constexpr int kBruteBorderCap = 18;
// Remark-style factor checks against the longest materialized host word can
// only see prefixes/suffixes that first occur inside it.
constexpr int kSpotCheckCap = 28;

Word random_word(std::mt19937& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t len = len_dist(rng);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.append(static_cast<std::uint8_t>(bit(rng)));
    return w;
}

Word random_palindrome(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    const std::size_t len = len_dist(rng);
    std::vector<std::uint8_t> s(len);
    for (std::size_t i = 0; i < (len + 1) / 2; ++i) {
        s[i] = static_cast<std::uint8_t>(bit(rng));
        s[len - 1 - i] = s[i];
    }
    return Word(std::move(s));
}

bool set_contains(const std::vector<Word>& sorted_members, const Word& w) {
    return std::binary_search(sorted_members.begin(), sorted_members.end(), w);
}

template <typename F>
void run_check(std::vector<CheckResult>& out, const std::string& name, F&& body) {
    CheckResult r{name, true, ""};
    try {
        r.detail = body();
        r.ok = r.detail.empty();
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
}

std::string index_pair(int n, int m) {
    return "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

// Independent overlap rule: the length-(|u|-k) suffix of u against the
// equally long prefix of v.
bool suffix_prefix_match(const Word& u, const Word& v, std::size_t k) {
    const std::size_t len = u.size() - k;
    if (len > v.size()) return false;
    return u.suffix(len) == v.prefix(len);
}

}  // namespace

std::vector<CheckResult> run_verification(int max_index, std::uint32_t seed) {
    if (max_index < 3 || max_index > kMaxWordIndex) {
        throw std::domain_error("verification max index must lie in [3, 30]");
    }
    const int N = max_index;
    const int qn = std::min(N, kQuadraticSweepCap);
    std::vector<CheckResult> results;

    run_check(results, "word-reverse-involution", [&] {
        std::mt19937 rng(seed);
        for (int t = 0; t < 500; ++t) {
            const Word w = random_word(rng, 0, 64);
            if (reverse(reverse(w)) != w) return "reverse(reverse(w)) != w for w=" + w.str();
        }
        const Word v = Word::parse("01001010010");
        if (reverse(v) != v || !is_palindrome(v)) return std::string("palindromic example broke");
        return std::string();
    });

    run_check(results, "border-oracle-agreement", [&] {
        std::mt19937 rng(seed + 1);
        auto check_one = [](const Word& w) -> std::string {
            const auto slow = borders_bruteforce(w);
            if (borders(w) != slow) return "fast borders disagree on " + w.str();
            for (const Word& b : slow) {
                if (w.prefix(b.size()) != b || w.suffix(b.size()) != b)
                    return "non-border member for " + w.str();
            }
            const auto rev = borders_bruteforce(reverse(w));
            for (const Word& b : slow) {
                if (!set_contains(rev, reverse(b)))
                    return "border reversal not closed for " + w.str();
            }
            return "";
        };
        for (std::size_t len = 1; len <= 10; ++len) {
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                Word w;
                for (std::size_t i = 0; i < len; ++i)
                    w.append(static_cast<std::uint8_t>((mask >> i) & 1u));
                if (auto err = check_one(w); !err.empty()) return err;
            }
        }
        for (int t = 0; t < 200; ++t) {
            if (auto err = check_one(random_word(rng, 1, 128)); !err.empty()) return err;
        }
        return std::string();
    });

    run_check(results, "fib-word-lengths", [&] {
        for (int n = 1; n <= N; ++n) {
            if (static_cast<std::int64_t>(fib_word(n).size()) != fib_number(n))
                return "|f_" + std::to_string(n) + "| != F_" + std::to_string(n);
        }
        return std::string();
    });

    run_check(results, "phi-advances-family", [&] {
        for (int n = 1; n + 1 <= N; ++n) {
            if (phi(fib_word(n)) != fib_word(n + 1))
                return "phi(f_" + std::to_string(n) + ") != f_" + std::to_string(n + 1);
        }
        Word zero = Word::parse("0");
        for (int n = 3; n + 1 <= N; ++n) {
            if (phi(palindromic_prefix(n)) + zero != palindromic_prefix(n + 1))
                return "phi(p_" + std::to_string(n) + ")0 != p_" + std::to_string(n + 1);
        }
        return std::string();
    });

    run_check(results, "palindromic-prefix-splittings", [&] {
        const Word s01 = Word::parse("01");
        const Word s10 = Word::parse("10");
        for (int n = 2; 2 * n + 2 <= N; ++n) {
            const Word a = palindromic_prefix(2 * n - 1);
            const Word b = palindromic_prefix(2 * n);
            const Word c = palindromic_prefix(2 * n + 1);
            const Word d = palindromic_prefix(2 * n + 2);
            if (c != a + s01 + b || c != b + s10 + a)
                return "odd splitting failed at n=" + std::to_string(n);
            if (d != b + s10 + c || d != c + s01 + b)
                return "even splitting failed at n=" + std::to_string(n);
        }
        return std::string();
    });

    run_check(results, "forbidden-morphism-identities", [&] {
        const Word zero = Word::parse("0");
        auto decorate = [](const Word& core, std::uint8_t s) {
            Word wrap;
            wrap.append(s);
            return wrap + core + wrap;
        };
        for (int n = 1; 2 * n + 3 <= N; ++n) {
            const Word lhs_a = phi(decorate(palindromic_prefix(2 * n + 2), 1)) + zero;
            if (lhs_a != decorate(palindromic_prefix(2 * n + 3), 0))
                return "identity (a) failed at n=" + std::to_string(n);
            const Word lhs_b = left_quotient(phi(decorate(palindromic_prefix(2 * n + 1), 0)), 0);
            if (lhs_b != decorate(palindromic_prefix(2 * n + 2), 1))
                return "identity (b) failed at n=" + std::to_string(n);
        }
        for (int n = 1; 2 * n + 2 <= N; ++n) {
            if (phi(min_forbidden(2 * n + 1)) + zero != min_forbidden(2 * n + 2))
                return "identity (c) failed at n=" + std::to_string(n);
        }
        for (int n = 1; 2 * n + 3 <= N; ++n) {
            if (left_quotient(phi(min_forbidden(2 * n + 2)), 0) != min_forbidden(2 * n + 3))
                return "identity (d) failed at n=" + std::to_string(n);
        }
        return std::string();
    });

    run_check(results, "phi-inverse-roundtrip", [&] {
        std::mt19937 rng(seed + 2);
        for (int t = 0; t < 1000; ++t) {
            const Word v = random_word(rng, 0, 200);
            const Word u = phi(v);
            if (phi_inverse(u) != v) return "phi_inverse(phi(v)) != v for v=" + v.str();
            if (phi(phi_inverse(u)) != u) return "phi(phi_inverse(u)) != u for u=" + u.str();
        }
        try {
            phi_inverse(Word::parse("1"));
            return std::string("phi_inverse(1) unexpectedly succeeded");
        } catch (const NotInImageError&) {
        }
        return std::string();
    });

    run_check(results, "family-palindromes", [&] {
        for (int n = 3; n <= N; ++n) {
            if (!is_palindrome(palindromic_prefix(n)))
                return "p_" + std::to_string(n) + " is not a palindrome";
            if (!is_palindrome(min_forbidden(n)))
                return "M_" + std::to_string(n) + " is not a palindrome";
        }
        return std::string();
    });

    run_check(results, "minimal-forbidden-spot-check", [&] {
        const Word host = fib_word(kMaxWordIndex);
        for (int n = 3; n <= std::min(N, kSpotCheckCap); ++n) {
            const Word m = min_forbidden(n);
            if (is_factor(m, host))
                return "M_" + std::to_string(n) + " occurs in the Fibonacci prefix";
            if (!is_factor(m.prefix(m.size() - 1), host))
                return "prefix of M_" + std::to_string(n) + " missing from the Fibonacci prefix";
            if (!is_factor(m.suffix(m.size() - 1), host))
                return "suffix of M_" + std::to_string(n) + " missing from the Fibonacci prefix";
        }
        return std::string();
    });

    run_check(results, "correlation-suffix-prefix-rule", [&] {
        auto check_pair = [&](const Word& u, const Word& v) -> std::string {
            const Word c = correlation(u, v);
            for (std::size_t k = 0; k < u.size(); ++k) {
                if ((c[k] == 1) != suffix_prefix_match(u, v, k))
                    return "overlap rule mismatch at k=" + std::to_string(k) + " for (" +
                           u.str() + ", " + v.str() + ")";
            }
            return "";
        };
        for (int i = 3; i <= qn; ++i) {
            for (int j = i; j <= qn; ++j) {
                if (auto e = check_pair(min_forbidden(i), min_forbidden(j)); !e.empty()) return e;
            }
        }
        std::mt19937 rng(seed + 3);
        for (int t = 0; t < 200; ++t) {
            Word u = random_word(rng, 1, 48);
            Word v = random_word(rng, 1, 48);
            if (u.size() > v.size()) std::swap(u, v);
            if (auto e = check_pair(u, v); !e.empty()) return e;
        }
        return std::string();
    });

    run_check(results, "correlation-nonfactor-heads", [&] {
        for (int m = 3; m <= qn; ++m) {
            for (int n = 3; n < m; ++n) {
                const Word u = min_forbidden(m);
                const Word v = min_forbidden(n);
                if (is_factor(v, u))
                    return "M_" + std::to_string(n) + " is a factor of M_" + std::to_string(m);
                const Word c = correlation(u, v);
                const std::size_t gap = u.size() - v.size();
                for (std::size_t k = 0; k < u.size(); ++k) {
                    const bool expected =
                        (k > gap) && suffix_prefix_match(u, v, k);
                    if ((c[k] == 1) != expected)
                        return "nonfactor head rule failed at k=" + std::to_string(k) +
                               " for " + index_pair(m, n);
                }
            }
        }
        return std::string();
    });

    run_check(results, "palindrome-transpose", [&] {
        auto check_pair = [](const Word& u, const Word& v) -> std::string {
            const Word cu = correlation(u, v);
            const Word cv = correlation(v, u);
            if (cu != cv.suffix(u.size()))
                return "transpose mismatch for (" + u.str() + ", " + v.str() + ")";
            return "";
        };
        for (int i = 3; i <= qn; ++i) {
            for (int j = i; j <= qn; ++j) {
                if (auto e = check_pair(min_forbidden(i), min_forbidden(j)); !e.empty()) return e;
            }
        }
        std::mt19937 rng(seed + 4);
        for (int t = 0; t < 500; ++t) {
            Word u = random_palindrome(rng, 64);
            Word v = random_palindrome(rng, 64);
            if (u.size() > v.size()) std::swap(u, v);
            if (auto e = check_pair(u, v); !e.empty()) return e;
        }
        return std::string();
    });

    run_check(results, "autocorrelation-border-duality", [&] {
        auto check_word = [](const Word& w) -> std::string {
            const Word c = correlation(w, w);
            if (c[0] != 1) return "autocorrelation head is 0 for " + w.str();
            const auto bs = borders_bruteforce(w);
            for (std::size_t k = 0; k < w.size(); ++k) {
                const bool has_border = set_contains(bs, w.prefix(w.size() - k));
                if ((c[k] == 1) != has_border)
                    return "border duality failed at k=" + std::to_string(k) + " for " + w.str();
            }
            return "";
        };
        for (int n = 3; n <= qn; ++n) {
            if (auto e = check_word(min_forbidden(n)); !e.empty()) return e;
        }
        std::mt19937 rng(seed + 5);
        for (int t = 0; t < 200; ++t) {
            if (auto e = check_word(random_word(rng, 1, 64)); !e.empty()) return e;
        }
        return std::string();
    });

    run_check(results, "border-set-three-way-agreement", [&] {
        for (int n = 3; n <= N; ++n) {
            const BorderSet rec = border_set_recursive(n);
            const BorderSet closed = border_set_closed(n);
            if (rec != closed) return "recursive != closed at n=" + std::to_string(n);
            const std::vector<Word> oracle = n <= kBruteBorderCap
                                                 ? borders_bruteforce(min_forbidden(n))
                                                 : borders(min_forbidden(n));
            if (rec.members != oracle) return "recursive != enumerated at n=" + std::to_string(n);
            const std::size_t expected =
                n == 3 ? 2 : static_cast<std::size_t>((n - 2 - (n % 2)) / 2 + 2);
            if (rec.members.size() != expected)
                return "|B_" + std::to_string(n) + "| != " + std::to_string(expected);
        }
        return std::string();
    });

    run_check(results, "border-transport", [&] {
        const Word zero = Word::parse("0");
        for (int n = 1; 2 * n + 2 <= N; ++n) {
            const auto odd = border_set_recursive(2 * n + 1).members;
            const auto even = border_set_recursive(2 * n + 2).members;
            for (const Word& b : odd) {
                if (!set_contains(even, phi(b) + zero))
                    return "transport (a) failed at n=" + std::to_string(n);
            }
            for (const Word& b : even) {
                if (b.size() > 1 && !set_contains(odd, phi_inverse(right_quotient(b, 0))))
                    return "transport (d) failed at n=" + std::to_string(n);
            }
            if (2 * n + 3 > N) continue;
            const auto next_odd = border_set_recursive(2 * n + 3).members;
            for (const Word& b : even) {
                if (!set_contains(next_odd, left_quotient(phi(b), 0)))
                    return "transport (b) failed at n=" + std::to_string(n);
            }
            for (const Word& b : next_odd) {
                if (!set_contains(even, phi_inverse(zero + b)))
                    return "transport (c) failed at n=" + std::to_string(n);
            }
        }
        return std::string();
    });

    run_check(results, "border-intersection-note", [&] {
        for (int n = 3; n <= N; ++n) {
            for (int m = n; m <= N; ++m) {
                const auto both = border_intersection(n, m);
                if (n == m) {
                    if (both != border_set_closed(n).members)
                        return "self-intersection broke at n=" + std::to_string(n);
                } else if (n % 2 != m % 2) {
                    if (!both.empty())
                        return "opposite parity intersection nonempty for " + index_pair(n, m);
                } else {
                    auto expected = border_set_closed(n).members;
                    expected.pop_back();  // drop M_n, the longest member
                    if (both != expected)
                        return "shared borders != B_n \\ {M_n} for " + index_pair(n, m);
                }
            }
        }
        return std::string();
    });

    run_check(results, "correlation-triple-agreement", [&] {
        for (int n = 3; n <= qn; ++n) {
            for (int m = 3; m <= qn; ++m) {
                const Polynomial by_def = correlation_poly(min_forbidden(n), min_forbidden(m));
                const Polynomial by_borders = corr_poly_via_borders(n, m);
                const Polynomial by_closed = corr_poly_closed(n, m);
                if (by_def != by_borders || by_def != by_closed)
                    return "triple agreement failed for " + index_pair(n, m);
            }
        }
        return std::string();
    });

    run_check(results, "closed-form-structure", [&] {
        for (int n = 3; n <= N; ++n) {
            for (int m = 3; m <= N; ++m) {
                const Polynomial p = corr_poly_closed(n, m);
                if (p != corr_poly_closed(m, n)) return "asymmetric at " + index_pair(n, m);
                if (n % 2 != m % 2) {
                    if (!p.is_zero()) return "parity annihilation failed at " + index_pair(n, m);
                    continue;
                }
                for (const auto& [exp, coeff] : p.terms()) {
                    if (coeff != 1) return "coefficient != 1 at " + index_pair(n, m);
                }
                if (n == m) {
                    if (p.coefficient(fib_number(n) - 1) != 1 || p.coefficient(0) != 1)
                        return "diagonal structure failed at n=" + std::to_string(n);
                } else {
                    Polynomial expected = corr_poly_closed(std::min(n, m), std::min(n, m));
                    Polynomial cross;
                    for (const auto& [exp, coeff] : expected.terms()) {
                        if (exp != fib_number(std::min(n, m)) - 1) cross.add_term(exp, coeff);
                    }
                    if (p != cross)
                        return "cross != diagonal minus leading term at " + index_pair(n, m);
                }
            }
        }
        return std::string();
    });

    run_check(results, "closed-form-large-index", [&] {
        for (int n : {89, 90, 91, 92}) {
            const Polynomial diag = corr_poly_closed(n, n);
            Polynomial expected;
            expected.add_term(fib_number(n) - 1);
            for (int j = n - 1; j >= 1; j -= 2) expected.add_term(fib_number(j) - 1);
            if (diag != expected)
                return "exponent ladder disagrees with fib_number at n=" + std::to_string(n);
        }
        try {
            corr_poly_closed(93, 93);
            return std::string("index 93 unexpectedly accepted");
        } catch (const std::domain_error&) {
        }
        try {
            fib_number(93);
            return std::string("fib_number(93) unexpectedly accepted");
        } catch (const std::domain_error&) {
        }
        return std::string();
    });

    run_check(results, "avoidance-oracle-agreement", [&] {
        const std::vector<std::vector<Word>> corpora = {
            {Word::parse("11")},
            {Word::parse("11"), Word::parse("000")},
            forbidden_family(std::min(N, 8)),
        };
        for (const auto& patterns : corpora) {
            const auto fast = count_avoiding(patterns, 16);
            const auto slow = count_avoiding_bruteforce(patterns, 16);
            if (fast != slow) return std::string("automaton disagrees with enumeration");
        }
        return std::string();
    });

    run_check(results, "factor-complexity-count", [&] {
        // All forbidden factors of length <= 20 (F_7 = 13 <= 20 < F_8 = 21).
        const auto counts = count_avoiding(forbidden_family(7), 20);
        for (int n = 0; n <= 20; ++n) {
            if (counts[static_cast<std::size_t>(n)] != n + 1)
                return "counts[" + std::to_string(n) + "] != n + 1";
        }
        // Longer patterns cannot change counts at lengths below their own.
        const auto more = count_avoiding(forbidden_family(8), 20);
        if (more != counts) return std::string("longer patterns changed short counts");
        return std::string();
    });

    return results;
}

}  // namespace fibcorr

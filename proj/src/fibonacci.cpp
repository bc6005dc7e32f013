#include "fibcorr/fibonacci.hpp"

#include <string>
#include <utility>

namespace fibcorr {

namespace {

void check_index(int n, int lo, int hi, const char* what) {
    if (n < lo) {
        throw std::domain_error(std::string(what) + ": index must be >= " + std::to_string(lo) +
                                ", got " + std::to_string(n));
    }
    if (n > hi) {
        throw std::domain_error(std::string(what) + ": index " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(hi));
    }
}

}  // namespace

std::int64_t fib_number(int n) {
    check_index(n, 1, kMaxNumberIndex, "fib_number");
    std::int64_t a = 1, b = 1;  // F_1, F_2
    for (int i = 3; i <= n; ++i) {
        std::int64_t next = a + b;
        a = b;
        b = next;
    }
    return n == 1 ? a : b;
}

Word phi(const Word& w) {
    std::vector<std::uint8_t> out;
    out.reserve(2 * w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            out.push_back(0);
            out.push_back(1);
        } else {
            out.push_back(0);
        }
    }
    return Word(std::move(out));
}

Word phi_inverse(const Word& w) {
    std::vector<std::uint8_t> out;
    out.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == 0 && i + 1 < w.size() && w[i + 1] == 1) {
            out.push_back(0);
            i += 2;
        } else if (w[i] == 0) {
            out.push_back(1);
            i += 1;
        } else {
            throw NotInImageError("phi_inverse: word is not in the image of phi");
        }
    }
    return Word(std::move(out));
}

Word fib_word(int n) {
    check_index(n, 1, kMaxWordIndex, "fib_word");
    Word a = Word::parse("1");  // f_1
    Word b = Word::parse("0");  // f_2
    if (n == 1) return a;
    for (int i = 3; i <= n; ++i) {
        Word next = b + a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

Word palindromic_prefix(int n) {
    check_index(n, 3, kMaxWordIndex, "palindromic_prefix");
    Word f = fib_word(n);
    return f.prefix(f.size() - 2);
}

Word min_forbidden(int n) {
    check_index(n, 3, kMaxWordIndex, "min_forbidden");
    const std::uint8_t s = (n % 2 == 1) ? 1 : 0;
    Word wrap;
    wrap.append(s);
    return wrap + palindromic_prefix(n) + wrap;
}

}  // namespace fibcorr

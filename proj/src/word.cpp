#include "fibcorr/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibcorr {

Word::Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    for (std::uint8_t s : symbols_) {
        if (s > 1) throw std::invalid_argument("word symbol out of {0,1}");
    }
}

Word Word::parse(std::string_view text) {
    Word w;
    w.symbols_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("word text must consist of '0'/'1' characters");
        }
        w.symbols_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (std::uint8_t s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

Word Word::prefix(std::size_t len) const {
    if (len > size()) throw std::out_of_range("prefix length exceeds word length");
    Word w;
    w.symbols_.assign(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(len));
    return w;
}

Word Word::suffix(std::size_t len) const {
    if (len > size()) throw std::out_of_range("suffix length exceeds word length");
    Word w;
    w.symbols_.assign(symbols_.end() - static_cast<std::ptrdiff_t>(len), symbols_.end());
    return w;
}

void Word::append(std::uint8_t symbol) {
    if (symbol > 1) throw std::invalid_argument("word symbol out of {0,1}");
    symbols_.push_back(symbol);
}

Word operator+(const Word& a, const Word& b) {
    Word w;
    w.symbols_.reserve(a.size() + b.size());
    w.symbols_.insert(w.symbols_.end(), a.symbols_.begin(), a.symbols_.end());
    w.symbols_.insert(w.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
    return w;
}

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return symbols_ <=> other.symbols_;
}

Word reverse(const Word& w) {
    std::vector<std::uint8_t> rev(w.symbols().rbegin(), w.symbols().rend());
    return Word(std::move(rev));
}

bool is_palindrome(const Word& w) {
    const auto& s = w.symbols();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::vector<std::size_t> prefix_function(const Word& w) {
    std::vector<std::size_t> pi(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && w[i] != w[j]) j = pi[j - 1];
        if (w[i] == w[j]) ++j;
        pi[i] = j;
    }
    return pi;
}

bool is_factor(const Word& u, const Word& w) {
    if (u.empty()) return true;
    if (u.size() > w.size()) return false;
    const std::vector<std::size_t> pi = prefix_function(u);
    std::size_t j = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        while (j > 0 && w[i] != u[j]) j = pi[j - 1];
        if (w[i] == u[j]) ++j;
        if (j == u.size()) return true;
    }
    return false;
}

std::vector<Word> borders_bruteforce(const Word& w) {
    if (w.empty()) throw std::domain_error("border set of the empty word is undefined");
    std::vector<Word> out;
    for (std::size_t len = 1; len <= w.size(); ++len) {
        bool match = true;
        for (std::size_t i = 0; i < len; ++i) {
            if (w[i] != w[w.size() - len + i]) { match = false; break; }
        }
        if (match) out.push_back(w.prefix(len));
    }
    return out;
}

std::vector<Word> borders(const Word& w) {
    if (w.empty()) throw std::domain_error("border set of the empty word is undefined");
    const std::vector<std::size_t> pi = prefix_function(w);
    std::vector<std::size_t> lengths;
    for (std::size_t len = w.size(); len > 0; len = pi[len - 1]) lengths.push_back(len);
    std::vector<Word> out;
    out.reserve(lengths.size());
    for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) out.push_back(w.prefix(*it));
    return out;
}

Word left_quotient(const Word& w, std::uint8_t symbol) {
    if (w.empty() || w[0] != symbol) {
        throw std::domain_error("left quotient: word does not start with the required symbol");
    }
    return w.suffix(w.size() - 1);
}

Word right_quotient(const Word& w, std::uint8_t symbol) {
    if (w.empty() || w[w.size() - 1] != symbol) {
        throw std::domain_error("right quotient: word does not end with the required symbol");
    }
    return w.prefix(w.size() - 1);
}

}  // namespace fibcorr

#include "fibcorr/correlation.hpp"

#include <stdexcept>
#include <vector>

namespace fibcorr {

Word correlation(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) {
        throw std::domain_error("correlation requires nonempty words");
    }
    const std::size_t n = u.size();
    const std::size_t m = v.size();
    Word out;
    for (std::size_t k = 0; k < n; ++k) {
        bool agree = true;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t i = j + k;
            if (i >= n) break;  // no further pairs with i in [n]
            if (u[i] != v[j]) { agree = false; break; }
        }
        out.append(agree ? 1 : 0);
    }
    return out;
}

Polynomial correlation_poly(const Word& u, const Word& v) {
    const Word c = correlation(u, v);
    const std::size_t n = c.size();
    Polynomial p;
    for (std::size_t k = 0; k < n; ++k) {
        if (c[k] == 1) p.add_term(static_cast<std::int64_t>(n - 1 - k));
    }
    return p;
}

std::string correlation_diagram(const Word& u, const Word& v) {
    const Word c = correlation(u, v);
    const std::size_t n = u.size();
    const std::size_t m = v.size();
    const std::size_t cols = n + m - 1;

    std::size_t label_width = 3;  // "pos"
    for (std::size_t k = 0; k < n; ++k) {
        label_width = std::max(label_width, 2 + std::to_string(k).size());
    }

    auto cell = [&](std::size_t col, const std::string& text) {
        std::string s = text;
        while (s.size() < std::to_string(col).size()) s += ' ';
        return s;
    };
    auto row = [&](const std::string& label, std::size_t from, const Word* w,
                   const std::string& tail) {
        std::string line = label;
        while (line.size() < label_width) line += ' ';
        line += " |";
        for (std::size_t col = 0; col < cols; ++col) {
            std::string text = "-";
            if (w != nullptr && col >= from && col < from + w->size()) {
                text = std::string(1, static_cast<char>('0' + (*w)[col - from]));
            }
            line += ' ' + cell(col, text);
        }
        line += " | " + tail;
        return line;
    };

    std::string header = "pos";
    while (header.size() < label_width) header += ' ';
    header += " |";
    for (std::size_t col = 0; col < cols; ++col) header += ' ' + std::to_string(col);
    header += " |";

    std::string out = header + '\n';
    out += row("u", 0, &u, "C") + '\n';
    for (std::size_t k = 0; k < n; ++k) {
        out += row("k=" + std::to_string(k), k, &v,
                   std::string(1, static_cast<char>('0' + c[k]))) + '\n';
    }
    return out;
}

}  // namespace fibcorr

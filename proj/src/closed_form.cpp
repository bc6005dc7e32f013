#include "fibcorr/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fibcorr/borders.hpp"
#include "fibcorr/fibonacci.hpp"

namespace fibcorr {

namespace {

void check_closed_index(int n) {
    if (n < 3 || n > kMaxNumberIndex) {
        throw std::domain_error("closed-form index must lie in [3, " +
                                std::to_string(kMaxNumberIndex) + "], got " + std::to_string(n));
    }
}

}  // namespace

Polynomial corr_poly_via_borders(int n, int m) {
    Polynomial p;
    for (const Word& b : border_intersection(n, m)) {
        p.add_term(static_cast<std::int64_t>(b.size()) - 1);
    }
    return p;
}

Polynomial corr_poly_closed(int n, int m) {
    check_closed_index(n);
    check_closed_index(m);
    Polynomial p;
    if (n % 2 != m % 2) return p;  // opposite parity: no shared borders
    const int lo = std::min(n, m);
    if (lo % 2 == 1) {
        for (int j = 2; j <= lo - 1; j += 2) p.add_term(fib_number(j) - 1);
    } else {
        for (int j = 1; j <= lo - 1; j += 2) p.add_term(fib_number(j) - 1);
    }
    if (n == m) p.add_term(fib_number(n) - 1);
    return p;
}

PolynomialMatrix correlation_matrix(int k) {
    if (k < 1 || k + 2 > kMaxNumberIndex) {
        throw std::domain_error("matrix size must lie in [1, " +
                                std::to_string(kMaxNumberIndex - 2) + "], got " +
                                std::to_string(k));
    }
    PolynomialMatrix matrix(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        auto& row = matrix[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) row.push_back(corr_poly_closed(i + 2, j + 2));
    }
    return matrix;
}

std::string render_matrix_text(const PolynomialMatrix& matrix) {
    std::string out;
    for (const auto& row : matrix) {
        std::string line;
        for (const auto& entry : row) {
            if (!line.empty()) line += " | ";
            line += entry.str();
        }
        out += line + '\n';
    }
    return out;
}

std::string render_matrix_latex(const PolynomialMatrix& matrix) {
    std::string out = "\\left(\\begin{array}{";
    for (std::size_t j = 0; j < (matrix.empty() ? 0 : matrix[0].size()); ++j) out += 'r';
    out += "}\n";
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        std::string line;
        for (const auto& entry : matrix[i]) {
            if (!line.empty()) line += " & ";
            line += entry.latex();
        }
        out += line;
        if (i + 1 < matrix.size()) out += " \\\\";
        out += '\n';
    }
    out += "\\end{array}\\right)";
    return out;
}

}  // namespace fibcorr

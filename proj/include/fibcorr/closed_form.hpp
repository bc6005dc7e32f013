#pragma once

#include <string>
#include <vector>

#include "fibcorr/polynomial.hpp"

namespace fibcorr {

/// Correlation polynomial of M_n over M_m as the shared-border sum: one term
/// z^{|b|-1} per border b common to B_n and B_m. Symmetric in (n, m).
/// Requires materialized border sets, so 3 <= n, m <= 30.
Polynomial corr_poly_via_borders(int n, int m);

/// Fully closed form: Fibonacci-number exponents selected by parity and
/// order of (n, m), no words materialized. Valid for 3 <= n, m <= 92;
/// indices beyond 92 are rejected (F_93 overflows exact 64-bit arithmetic).
Polynomial corr_poly_closed(int n, int m);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// k x k matrix with (i, j) entry corr_poly_closed(i + 2, j + 2) for
/// 1 <= i, j <= k; matrix index 1 corresponds to the smallest minimal
/// forbidden word M_3. Requires 1 <= k <= 90.
PolynomialMatrix correlation_matrix(int k);

/// One row per line, entries joined with " | ".
std::string render_matrix_text(const PolynomialMatrix& matrix);

/// LaTeX array with right-aligned columns and braced exponents.
std::string render_matrix_latex(const PolynomialMatrix& matrix);

}  // namespace fibcorr

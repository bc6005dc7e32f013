#include "fibcorr/polynomial.hpp"

#include <stdexcept>

namespace fibcorr {

void Polynomial::add_term(std::int64_t exponent, std::int64_t coefficient) {
    if (exponent < 0) throw std::domain_error("polynomial exponent must be nonnegative");
    if (coefficient < 0) throw std::domain_error("polynomial coefficient must be nonnegative");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) it->second += coefficient;
}

std::int64_t Polynomial::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::string Polynomial::render(bool braced) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [exp, coeff] = *it;
        if (!out.empty()) out += " + ";
        if (exp == 0) {
            out += std::to_string(coeff);
            continue;
        }
        if (coeff != 1) out += std::to_string(coeff);
        out += "z";
        if (exp > 1) {
            out += braced ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
        }
    }
    return out;
}

std::string Polynomial::str() const { return render(false); }

std::string Polynomial::latex() const { return render(true); }

}  // namespace fibcorr

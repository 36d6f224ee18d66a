#include "efluct/n_expansion.hpp"

#include "efluct/errors.hpp"

#include <cmath>

namespace efluct {

NExpansion NExpansion::term(int exponent, GammaPoly coeff) {
    NExpansion e;
    e.add_term(exponent, coeff);
    return e;
}

GammaPoly NExpansion::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GammaPoly{} : it->second;
}

int NExpansion::max_exponent() const {
    if (terms_.empty()) throw InputError("max_exponent of zero expansion");
    return terms_.rbegin()->first;
}

int NExpansion::min_exponent() const {
    if (terms_.empty()) throw InputError("min_exponent of zero expansion");
    return terms_.begin()->first;
}

void NExpansion::add_term(int exponent, const GammaPoly& coeff) {
    if (coeff.is_zero()) return;
    auto& slot = terms_[exponent];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(exponent);
}

NExpansion NExpansion::shifted(int k) const {
    NExpansion out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

NExpansion& NExpansion::operator+=(const NExpansion& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

NExpansion& NExpansion::operator-=(const NExpansion& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

NExpansion& NExpansion::operator*=(const NExpansion& other) {
    NExpansion out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
    *this = std::move(out);
    return *this;
}

NExpansion& NExpansion::operator*=(GammaPoly::Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, poly] : terms_) poly *= c;
    return *this;
}

double NExpansion::evaluate(double n, const std::map<int, double>& gamma, double fallback) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) total += c.evaluate(gamma, fallback) * std::pow(n, e);
    return total;
}

Rational NExpansion::evaluate_exact(const Rational& n, const std::map<int, Rational>& gamma) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational pw = 1;
        for (int i = 0; i < std::abs(e); ++i) pw *= n;
        if (e < 0) pw = Rational(1) / pw;
        total += c.evaluate_exact(gamma) * pw;
    }
    return total;
}

std::string NExpansion::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.to_string() + ")";
        if (it->first != 0) out += "*N^" + std::to_string(it->first);
    }
    return out;
}

} // namespace efluct

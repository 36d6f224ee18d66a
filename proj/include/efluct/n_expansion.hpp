#pragma once

#include "efluct/gamma_poly.hpp"

#include <map>
#include <string>

namespace efluct {

/// Finite Laurent polynomial sum_e coeff_e N^e with GammaPoly coefficients.
class NExpansion {
public:
    NExpansion() = default;
    static NExpansion term(int exponent, GammaPoly coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, GammaPoly>& terms() const { return terms_; }
    GammaPoly coefficient(int exponent) const;
    int max_exponent() const; // requires non-zero
    int min_exponent() const;

    void add_term(int exponent, const GammaPoly& coeff);
    // Multiply by N^k.
    NExpansion shifted(int k) const;

    NExpansion& operator+=(const NExpansion& other);
    NExpansion& operator-=(const NExpansion& other);
    NExpansion& operator*=(const NExpansion& other);
    NExpansion& operator*=(GammaPoly::Coeff c);
    friend NExpansion operator+(NExpansion a, const NExpansion& b) { return a += b; }
    friend NExpansion operator-(NExpansion a, const NExpansion& b) { return a -= b; }
    friend NExpansion operator*(NExpansion a, const NExpansion& b) { return a *= b; }
    friend NExpansion operator*(NExpansion a, GammaPoly::Coeff c) { return a *= c; }
    bool operator==(const NExpansion&) const = default;

    double evaluate(double n, const std::map<int, double>& gamma, double fallback = 0.0) const;
    Rational evaluate_exact(const Rational& n, const std::map<int, Rational>& gamma) const;

    // e.g. "(g1^2 + 1) + (2*g1)*N^-2"
    std::string to_string() const;

private:
    std::map<int, GammaPoly> terms_;
};

} // namespace efluct

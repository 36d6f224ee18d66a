#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace efluct {

using Rational = boost::multiprecision::cpp_rational;

/// Monomial in the per-color parameters: sorted (color, exponent) pairs with
/// positive exponents. The empty monomial is the constant 1.
using Monomial = std::vector<std::pair<int, int>>;

Monomial monomial_product(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

/// Sparse multivariate polynomial in gamma_c with exact integer coefficients.
/// Zero coefficients are never stored, so equality is coefficientwise.
class GammaPoly {
public:
    using Coeff = std::int64_t;

    GammaPoly() = default;
    static GammaPoly constant(Coeff c);
    static GammaPoly monomial(Coeff c, Monomial m);
    // c * gamma_color^exponent
    static GammaPoly power(int color, int exponent, Coeff c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    Coeff coefficient(const Monomial& m) const;
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, Coeff c);

    GammaPoly& operator+=(const GammaPoly& other);
    GammaPoly& operator-=(const GammaPoly& other);
    GammaPoly& operator*=(const GammaPoly& other);
    GammaPoly& operator*=(Coeff c);
    friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
    friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
    friend GammaPoly operator*(GammaPoly a, const GammaPoly& b) { return a *= b; }
    friend GammaPoly operator*(GammaPoly a, Coeff c) { return a *= c; }
    GammaPoly operator-() const;

    bool operator==(const GammaPoly&) const = default;

    // Missing colors evaluate with the fallback value.
    double evaluate(const std::map<int, double>& gamma, double fallback = 0.0) const;
    Rational evaluate_exact(const std::map<int, Rational>& gamma) const;
    // Substitute the same value for every color.
    double evaluate_uniform(double gamma) const;

    // e.g. "2*g1^2 + 1"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<Monomial, Coeff> terms_;
};

} // namespace efluct

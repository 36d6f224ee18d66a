#include "efluct/gamma_poly.hpp"

#include "efluct/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace efluct {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto [c, e] : m) d += e;
    return d;
}

GammaPoly GammaPoly::constant(Coeff c) {
    GammaPoly g;
    g.add_term({}, c);
    return g;
}

GammaPoly GammaPoly::monomial(Coeff c, Monomial m) {
    std::map<int, int> merged;
    for (auto [color, e] : m) {
        if (e < 0) throw InputError("GammaPoly: negative exponent");
        merged[color] += e;
    }
    Monomial canon;
    for (auto [color, e] : merged)
        if (e > 0) canon.emplace_back(color, e);
    GammaPoly g;
    g.add_term(canon, c);
    return g;
}

GammaPoly GammaPoly::power(int color, int exponent, Coeff c) {
    if (exponent < 0) throw InputError("GammaPoly: negative exponent");
    if (exponent == 0) return constant(c);
    return monomial(c, {{color, exponent}});
}

GammaPoly::Coeff GammaPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void GammaPoly::add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

GammaPoly& GammaPoly::operator*=(const GammaPoly& other) {
    GammaPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    *this = std::move(out);
    return *this;
}

GammaPoly& GammaPoly::operator*=(Coeff c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

GammaPoly GammaPoly::operator-() const {
    GammaPoly g = *this;
    return g *= -1;
}

double GammaPoly::evaluate(const std::map<int, double>& gamma, double fallback) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = static_cast<double>(c);
        for (auto [color, e] : m) {
            auto it = gamma.find(color);
            term *= std::pow(it == gamma.end() ? fallback : it->second, e);
        }
        total += term;
    }
    return total;
}

Rational GammaPoly::evaluate_exact(const std::map<int, Rational>& gamma) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (auto [color, e] : m) {
            auto it = gamma.find(color);
            if (it == gamma.end()) throw InputError("GammaPoly: no value for color " + std::to_string(color));
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

double GammaPoly::evaluate_uniform(double gamma) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) total += static_cast<double>(c) * std::pow(gamma, total_degree(m));
    return total;
}

std::string GammaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    std::vector<std::pair<Monomial, Coeff>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return total_degree(a.first) > total_degree(b.first);
    });
    for (const auto& [m, c] : ordered) {
        Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool show_coeff = mag != 1 || m.empty();
        if (show_coeff) os << mag;
        bool need_star = show_coeff;
        for (auto [color, e] : m) {
            if (need_star) os << '*';
            os << 'g' << color;
            if (e != 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

} // namespace efluct

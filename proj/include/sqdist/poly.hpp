#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sqdist/errors.hpp"
#include "sqdist/rational.hpp"

namespace sqdist {

// Dense univariate polynomial over the rationals, constant term first.
// The zero polynomial is the empty coefficient list; its degree() is -1.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Rational& c) { return Poly({c}); }

    // x + shift
    static Poly linear(const Rational& shift) { return Poly({shift, Rational(1)}); }

    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly operator+(const Poly& rhs) const {
        std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
        return Poly(std::move(out));
    }

    Poly operator-(const Poly& rhs) const {
        std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
        return Poly(std::move(out));
    }

    Poly operator*(const Poly& rhs) const {
        if (is_zero() || rhs.is_zero()) return Poly();
        std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return Poly(std::move(out));
    }

    Poly scaled(const Rational& factor) const {
        std::vector<Rational> out(coeffs_);
        for (auto& c : out) c *= factor;
        return Poly(std::move(out));
    }

    Poly pow(std::size_t k) const {
        Poly acc = constant(Rational(1));
        for (std::size_t i = 0; i < k; ++i) acc = acc * (*this);
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
        return Poly(std::move(out));
    }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    std::string to_string() const {
        if (is_zero()) return "[0]";
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ", ";
            out += sqdist::to_string(coeffs_[i]);
        }
        return out + "]";
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::pair<Poly, Poly> poly_div_rem(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw DivisionByZeroPolyError();
    std::vector<Rational> rem(p.coeffs());
    std::vector<Rational> quot;
    int dq = q.degree();
    if (p.degree() >= dq) quot.assign(p.degree() - dq + 1, Rational(0));
    Rational lead = q.leading();
    for (int d = p.degree(); d >= dq; --d) {
        Rational factor = rem[d] / lead;
        if (factor == 0) continue;
        quot[d - dq] = factor;
        for (int i = 0; i <= dq; ++i) rem[d - dq + i] -= factor * q.coefficient(i);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly poly_div_exact(const Poly& p, const Poly& q) {
    auto [quot, rem] = poly_div_rem(p, q);
    if (!rem.is_zero()) throw NotDivisibleError();
    return quot;
}

inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

inline Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

// Monic gcd via the Euclidean algorithm; gcd(0, 0) is the zero polynomial.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [quot, rem] = poly_div_rem(a, b);
        (void)quot;
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.is_zero() && a.leading() != 1) a = a.scaled(Rational(1) / a.leading());
    return a;
}

}  // namespace sqdist

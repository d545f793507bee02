#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sqdist/errors.hpp"
#include "sqdist/matrix.hpp"
#include "sqdist/poly.hpp"
#include "sqdist/rational.hpp"

namespace sqdist {

struct Inertia {
    std::size_t positive = 0;
    std::size_t zero = 0;
    std::size_t negative = 0;

    bool operator==(const Inertia&) const = default;
};

namespace detail {

// Scale each row to integers; returns the integer matrix and the product of
// the row scaling factors, so det(M) = det(int matrix) / product.
inline std::pair<Matrix<BigInt>, BigInt> clear_denominators(const RatMatrix& m) {
    Matrix<BigInt> out(m.rows(), m.cols());
    BigInt scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            BigInt den = boost::multiprecision::denominator(m(i, j));
            row_lcm = boost::multiprecision::lcm(row_lcm, den);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m(i, j);
            out(i, j) = boost::multiprecision::numerator(e) *
                        (row_lcm / boost::multiprecision::denominator(e));
        }
        scale *= row_lcm;
    }
    return {std::move(out), std::move(scale)};
}

// Fraction-free Bareiss elimination; exact for integer input.
inline BigInt det_bareiss_int(Matrix<BigInt> a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { pivot = i; break; }
            if (a(pivot, k) == 0) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace detail

inline Rational det_bareiss(const RatMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    auto [ints, scale] = detail::clear_denominators(m);
    return Rational(detail::det_bareiss_int(std::move(ints)), scale);
}

// cof M via the row/column reduction of the first row and column:
// cof M = det M_A(1|1) where M_A is M after R_i <- R_i - R_1 (i >= 2)
// followed by C_i <- C_i - C_1 (i >= 2).
inline Rational cof_sum_reduction(const RatMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const std::size_t n = m.rows();
    if (n < 2) throw OrderTooSmallError("cof_sum_reduction requires order >= 2");
    RatMatrix reduced(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            reduced(i - 1, j - 1) = m(i, j) - m(0, j) - m(i, 0) + m(0, 0);
    return det_bareiss(reduced);
}

// Direct definitional oracle: sum of all n^2 cofactors.
inline Rational cof_sum_adjugate(const RatMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const std::size_t n = m.rows();
    if (n == 1) return Rational(1);
    Rational sum(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = det_bareiss(m.minor_matrix(i, j));
            if ((i + j) % 2 != 0) c = -c;
            sum += c;
        }
    return sum;
}

// Gauss-Jordan with row swaps only; exact over the rationals.
inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) throw SingularError();
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        Rational p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

inline std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

// Eigenvalue sign counts by symmetric congruence reduction; no floating
// point. When every remaining diagonal entry is zero but some off-diagonal
// entry M[i][j] is not, the congruence R_i <- R_i + R_j, C_i <- C_i + C_j
// creates a nonzero diagonal entry without changing the inertia.
inline Inertia inertia_congruence(const RatMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetricError();
    const std::size_t n = m.rows();
    RatMatrix a = m;
    std::vector<bool> done(n, false);
    Inertia inertia;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) { p = i; break; }
        if (p == n) {
            // All remaining diagonal entries vanish; look for an
            // off-diagonal entry to fold onto the diagonal.
            std::size_t oi = n, oj = n;
            for (std::size_t i = 0; i < n && oi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (done[j] || j == i || a(i, j) == 0) continue;
                    oi = i;
                    oj = j;
                    break;
                }
            }
            if (oi == n) {
                // Remaining block is zero.
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) { ++inertia.zero; done[i] = true; }
                break;
            }
            for (std::size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
            for (std::size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
            p = oi;
        }
        Rational pivot = a(p, p);
        if (pivot > 0) ++inertia.positive;
        else ++inertia.negative;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p || a(i, p) == 0) continue;
            Rational f = a(i, p) / pivot;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
            for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, p);
        }
        done[p] = true;
    }
    return inertia;
}

// Faddeev-LeVerrier: exact characteristic polynomial det(xI - M), and the
// adjugate as a byproduct (valid for singular M as well).
inline std::pair<Poly, RatMatrix> charpoly_with_adjugate(const RatMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    if (n == 0) return {Poly(std::move(coeffs)), RatMatrix(0, 0)};
    RatMatrix acc = RatMatrix::identity(n);
    RatMatrix last = acc;
    for (std::size_t k = 1; k <= n; ++k) {
        last = acc;
        RatMatrix am = m * acc;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        Rational c = -tr / Rational(k);
        coeffs[n - k] = c;
        acc = am;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    RatMatrix adj = (n % 2 == 0) ? -last : last;
    return {Poly(std::move(coeffs)), std::move(adj)};
}

inline Poly charpoly_exact(const RatMatrix& m) {
    return charpoly_with_adjugate(m).first;
}

inline RatMatrix adjugate(const RatMatrix& m) {
    return charpoly_with_adjugate(m).second;
}

}  // namespace sqdist

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqdist/errors.hpp"
#include "sqdist/graph.hpp"
#include "sqdist/linalg.hpp"
#include "sqdist/matrix.hpp"
#include "sqdist/poly.hpp"
#include "sqdist/rational.hpp"

namespace sqdist {

// The scalar bundle behind every closed form:
//   alpha       = prod_k (3 n_k + 1)
//   alpha_hat_i = prod_{k != i} (3 n_k + 1)
//   beta        = sum_k n_k alpha_hat_k
// together with the doubly-hatted variants and lambda = beta / (alpha - 2 beta).
// Empty products are 1 and empty sums 0, so b = 1 evaluates cleanly.
struct ScalarInvariants {
    Rational alpha;
    std::vector<Rational> alpha_hat;
    std::vector<std::vector<Rational>> alpha_hat2;
    Rational beta;
    std::vector<Rational> beta_hat;
    Rational a2b;  // alpha - 2 beta
    std::optional<Rational> lambda;
};

inline ScalarInvariants scalar_invariants(const Shape& shape) {
    const int b = shape.block_count();
    ScalarInvariants s;
    s.alpha = 1;
    for (int k = 0; k < b; ++k) s.alpha *= Rational(3 * shape.parts[k] + 1);
    s.alpha_hat.assign(b, Rational(1));
    for (int i = 0; i < b; ++i)
        for (int k = 0; k < b; ++k)
            if (k != i) s.alpha_hat[i] *= Rational(3 * shape.parts[k] + 1);
    s.alpha_hat2.assign(b, std::vector<Rational>(b, Rational(1)));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < b; ++k)
                if (k != i && k != j) s.alpha_hat2[i][j] *= Rational(3 * shape.parts[k] + 1);
    s.beta = 0;
    for (int k = 0; k < b; ++k) s.beta += Rational(shape.parts[k]) * s.alpha_hat[k];
    s.beta_hat.assign(b, Rational(0));
    for (int i = 0; i < b; ++i)
        for (int k = 0; k < b; ++k)
            if (k != i) s.beta_hat[i] += Rational(shape.parts[k]) * s.alpha_hat2[i][k];
    s.a2b = s.alpha - 2 * s.beta;
    if (s.a2b != 0) s.lambda = s.beta / s.a2b;
    return s;
}

namespace detail {

inline int parity_sign(const Shape& shape) {
    int total = shape.vertex_count() - 1;  // sum of parts
    return total % 2 == 0 ? 1 : -1;
}

}  // namespace detail

inline Rational det_delta_closed(const Shape& shape) {
    ScalarInvariants s = scalar_invariants(shape);
    return Rational(detail::parity_sign(shape)) * s.beta;
}

inline Rational det_delta22_closed(const Shape& shape) {
    ScalarInvariants s = scalar_invariants(shape);
    return Rational(-detail::parity_sign(shape)) * (4 * s.beta - s.alpha);
}

inline Rational cof_delta_closed(const Shape& shape) {
    ScalarInvariants s = scalar_invariants(shape);
    return Rational(detail::parity_sign(shape)) * s.a2b;
}

inline Rational cof_delta22_closed(const Shape& shape) {
    ScalarInvariants s = scalar_invariants(shape);
    return Rational(-detail::parity_sign(shape)) * s.beta;
}

// The degree-(b+1) factor of P_Delta:
//   x prod_i (x+3n_i+1) - (4x+1) sum_i n_i prod_{j != i} (x+3n_j+1)
inline Poly charpoly_quotient_delta(const Shape& shape) {
    const int b = shape.block_count();
    Poly prod = Poly::constant(Rational(1));
    for (int i = 0; i < b; ++i) prod = prod * Poly::linear(Rational(3 * shape.parts[i] + 1));
    Poly sum;
    for (int i = 0; i < b; ++i) {
        Poly term = Poly::constant(Rational(shape.parts[i]));
        for (int j = 0; j < b; ++j)
            if (j != i) term = term * Poly::linear(Rational(3 * shape.parts[j] + 1));
        sum = sum + term;
    }
    Poly four_x_plus_one({Rational(1), Rational(4)});
    return Poly::x() * prod - four_x_plus_one * sum;
}

// The degree-b factor of P_Delta22:
//   prod_i (x+3n_i+1) - 4 sum_i n_i prod_{j != i} (x+3n_j+1)
inline Poly charpoly_quotient_delta22(const Shape& shape) {
    const int b = shape.block_count();
    Poly prod = Poly::constant(Rational(1));
    for (int i = 0; i < b; ++i) prod = prod * Poly::linear(Rational(3 * shape.parts[i] + 1));
    Poly sum;
    for (int i = 0; i < b; ++i) {
        Poly term = Poly::constant(Rational(shape.parts[i]));
        for (int j = 0; j < b; ++j)
            if (j != i) term = term * Poly::linear(Rational(3 * shape.parts[j] + 1));
        sum = sum + term;
    }
    return prod - sum.scaled(Rational(4));
}

inline std::size_t minus_one_multiplicity(const Shape& shape) {
    return static_cast<std::size_t>(shape.vertex_count() - 1 - shape.block_count());
}

inline Poly charpoly_delta_closed(const Shape& shape) {
    return Poly::linear(Rational(1)).pow(minus_one_multiplicity(shape)) *
           charpoly_quotient_delta(shape);
}

inline Poly charpoly_delta22_closed(const Shape& shape) {
    return Poly::linear(Rational(1)).pow(minus_one_multiplicity(shape)) *
           charpoly_quotient_delta22(shape);
}

// Q(Delta), order b+1: first row (0, n_1, ..., n_b); row i has 1 in the
// first column, n_i - 1 on the diagonal and 4 n_j elsewhere.
inline RatMatrix quotient_matrix_delta(const Shape& shape) {
    const int b = shape.block_count();
    RatMatrix q(b + 1, b + 1);
    for (int j = 0; j < b; ++j) q(0, j + 1) = Rational(shape.parts[j]);
    for (int i = 0; i < b; ++i) {
        q(i + 1, 0) = 1;
        for (int j = 0; j < b; ++j)
            q(i + 1, j + 1) = (i == j) ? Rational(shape.parts[j] - 1)
                                       : Rational(4 * shape.parts[j]);
    }
    return q;
}

inline RatMatrix quotient_matrix_delta22(const Shape& shape) {
    RatMatrix q = quotient_matrix_delta(shape);
    const std::size_t b = shape.parts.size();
    RatMatrix sub(b, b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) sub(i, j) = q(i + 1, j + 1);
    return sub;
}

// Eigenvectors for eigenvalue -1: for each block, the differences between
// its first vertex and each of its other vertices (zero in the center
// coordinate). Exactly sum n_i - b vectors.
inline std::vector<std::vector<Rational>> minus_one_eigenbasis(const Shape& shape) {
    const int n = shape.vertex_count();
    VertexPartition vp = VertexPartition::of(shape);
    std::vector<std::vector<Rational>> basis;
    for (const auto& range : vp.ranges) {
        for (int v = range.begin + 1; v < range.end; ++v) {
            std::vector<Rational> vec(n, Rational(0));
            vec[range.begin] = 1;
            vec[v] = -1;
            basis.push_back(std::move(vec));
        }
    }
    return basis;
}

inline Inertia inertia_delta_closed(const Shape& shape) {
    return Inertia{1, 0, static_cast<std::size_t>(shape.vertex_count() - 1)};
}

inline Inertia inertia_delta22_closed(const Shape& shape) {
    return Inertia{1, 0, static_cast<std::size_t>(shape.vertex_count() - 2)};
}

struct EtaVector {
    std::vector<Rational> entries;
};

namespace detail {

inline ScalarInvariants require_invertible(const Shape& shape) {
    if (shape.block_count() < 2) throw BlockCountTooSmallError();
    ScalarInvariants s = scalar_invariants(shape);
    if (s.a2b == 0) throw CofactorZeroError();
    return s;
}

}  // namespace detail

inline Rational lambda_value(const Shape& shape) {
    return *detail::require_invertible(shape).lambda;
}

// eta: center entry (alpha - 3 beta)/(alpha - 2 beta), each vertex of V_i
// gets alpha_hat_i/(alpha - 2 beta). Satisfies Delta eta = lambda 1 and
// 1^t eta = 1.
inline EtaVector eta(const Shape& shape) {
    ScalarInvariants s = detail::require_invertible(shape);
    EtaVector v;
    v.entries.reserve(shape.vertex_count());
    v.entries.push_back((s.alpha - 3 * s.beta) / s.a2b);
    for (int i = 0; i < shape.block_count(); ++i)
        for (int k = 0; k < shape.parts[i]; ++k)
            v.entries.push_back(s.alpha_hat[i] / s.a2b);
    return v;
}

struct LaplacianLike {
    RatMatrix l_hat;  // integer-valued
    RatMatrix l;      // l_hat / (alpha - 2 beta); row and column sums zero
};

inline LaplacianLike laplacian_like(const Shape& shape) {
    ScalarInvariants s = detail::require_invertible(shape);
    const int n = shape.vertex_count();
    const int b = shape.block_count();
    VertexPartition vp = VertexPartition::of(shape);
    RatMatrix l_hat(n, n);
    l_hat(0, 0) = s.beta;
    for (int i = 0; i < b; ++i) {
        const auto& ri = vp.ranges[i];
        Rational within = 6 * s.beta_hat[i] - s.alpha_hat[i];
        for (int u = ri.begin; u < ri.end; ++u) {
            l_hat(0, u) = l_hat(u, 0) = -s.alpha_hat[i];
            for (int v = ri.begin; v < ri.end; ++v)
                l_hat(u, v) = (u == v) ? within + s.a2b : within;
        }
        for (int j = i + 1; j < b; ++j) {
            const auto& rj = vp.ranges[j];
            Rational cross = 2 * s.alpha_hat2[i][j];
            for (int u = ri.begin; u < ri.end; ++u)
                for (int v = rj.begin; v < rj.end; ++v)
                    l_hat(u, v) = l_hat(v, u) = cross;
        }
    }
    return {l_hat, l_hat.scaled(Rational(1) / s.a2b)};
}

// Delta^{-1} = -L + (1/lambda) eta eta^t
inline RatMatrix delta_inverse_closed(const Shape& shape) {
    ScalarInvariants s = detail::require_invertible(shape);
    LaplacianLike lap = laplacian_like(shape);
    EtaVector e = eta(shape);
    const std::size_t n = e.entries.size();
    Rational inv_lambda = Rational(1) / *s.lambda;
    RatMatrix out = -lap.l;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) += inv_lambda * e.entries[i] * e.entries[j];
    return out;
}

// Every cofactor of L equals 1/(alpha - 2 beta).
inline Rational cofactor_constant(const Shape& shape) {
    ScalarInvariants s = detail::require_invertible(shape);
    return Rational(1) / s.a2b;
}

}  // namespace sqdist

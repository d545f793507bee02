#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqdist/closed_forms.hpp"
#include "sqdist/graph.hpp"
#include "sqdist/linalg.hpp"
#include "sqdist/spectral.hpp"

namespace sqdist {

struct CheckOutcome {
    int passed = 0;
    int failed = 0;

    void record(bool ok) { ok ? ++passed : ++failed; }
    bool all_passed() const { return failed == 0; }
};

using CheckMap = std::map<std::string, CheckOutcome>;

// Optional corruption of one named closed-form value before it is compared
// against the oracles; used by the mutation smoke test to prove the
// verification suite actually bites.
struct FaultInjection {
    std::string target;

    bool hits(const std::string& name) const { return target == name; }
};

inline const std::vector<std::string>& fault_targets() {
    static const std::vector<std::string> targets = {
        "det_delta",       "det_delta22",       "cof_delta",
        "cof_delta22",     "charpoly_delta",    "charpoly_delta22",
        "charpoly_quotient_delta", "charpoly_quotient_delta22",
        "inertia_delta",   "inertia_delta22",   "eta",
        "lambda",          "l_hat",             "delta_inverse",
        "cofactor_constant",
    };
    return targets;
}

// All canonical shapes with 3 <= n <= max_n, any block count; ordered by
// n, then b, then lexicographically descending parts.
inline std::vector<Shape> all_shapes_up_to(int max_n) {
    std::vector<Shape> shapes;
    for (int n = 3; n <= max_n; ++n)
        for (int b = 1; b <= n - 1; ++b)
            for (Shape& s : enumerate_shapes(n, b)) shapes.push_back(std::move(s));
    return shapes;
}

namespace detail {

inline Rational maybe_bump(const Rational& v, bool hit) {
    return hit ? v + 1 : v;
}

inline Poly maybe_bump(const Poly& p, bool hit) {
    return hit ? p + Poly::constant(Rational(1)) : p;
}

inline RatMatrix maybe_bump_matrix(const RatMatrix& m, bool hit) {
    if (!hit) return m;
    RatMatrix out = m;
    out(0, 0) += 1;
    return out;
}

}  // namespace detail

// Runs every applicable invariant for one shape, accumulating per-check
// pass/fail counts. Checks that require alpha - 2 beta != 0 or b >= 2 are
// skipped (not failed) where the preconditions do not hold.
inline void run_shape_checks(const Shape& shape, CheckMap& checks,
                             const FaultInjection& fault = {}) {
    const int n = shape.vertex_count();
    const int b = shape.block_count();
    const std::size_t mult = minus_one_multiplicity(shape);

    IntMatrix delta_int = squared_distance_matrix(shape);
    IntMatrix delta22_int = delta22(shape);
    RatMatrix delta = to_rational(delta_int);
    RatMatrix d22 = to_rational(delta22_int);

    // graph structure against the BFS oracle
    {
        IntMatrix dist = bfs_distance_matrix(build_adjacency(shape));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (delta_int(i, j) != dist(i, j) * dist(i, j)) ok = false;
        checks["graph/squared_distance_equals_bfs_square"].record(ok);

        bool entries_ok = true;
        for (int i = 0; i < n && entries_ok; ++i)
            for (int j = 0; j < n && entries_ok; ++j) {
                if (i == j) entries_ok = delta_int(i, j) == 0;
                else entries_ok = delta_int(i, j) == 1 || delta_int(i, j) == 4;
            }
        checks["graph/offdiagonal_entries_1_or_4"].record(entries_ok);

        bool sub_ok = true;
        for (int i = 1; i < n && sub_ok; ++i)
            for (int j = 1; j < n && sub_ok; ++j)
                if (delta22_int(i - 1, j - 1) != delta_int(i, j)) sub_ok = false;
        checks["graph/delta22_is_principal_submatrix"].record(sub_ok);
    }

    // scalar regrouping identities
    {
        ScalarInvariants s = scalar_invariants(shape);
        bool ok = true;
        for (int i = 0; i < b; ++i) {
            if (s.alpha != Rational(3 * shape.parts[i] + 1) * s.alpha_hat[i]) ok = false;
            if (s.beta != Rational(shape.parts[i]) * s.alpha_hat[i] +
                              Rational(3 * shape.parts[i] + 1) * s.beta_hat[i])
                ok = false;
            for (int j = 0; j < b; ++j)
                if (j != i &&
                    s.alpha_hat[i] != Rational(3 * shape.parts[j] + 1) * s.alpha_hat2[i][j])
                    ok = false;
        }
        checks["scalars/regrouping_identities"].record(ok);
    }

    // determinants
    checks["det/delta_closed_equals_bareiss"].record(
        detail::maybe_bump(det_delta_closed(shape), fault.hits("det_delta")) ==
        det_bareiss(delta));
    checks["det/delta22_closed_equals_bareiss"].record(
        detail::maybe_bump(det_delta22_closed(shape), fault.hits("det_delta22")) ==
        det_bareiss(d22));

    // cofactor sums, both oracles
    {
        Rational closed = detail::maybe_bump(cof_delta_closed(shape), fault.hits("cof_delta"));
        Rational red = cof_sum_reduction(delta);
        Rational adjsum = cof_sum_adjugate(delta);
        checks["cof/delta_closed_equals_oracles"].record(closed == red && closed == adjsum);
        checks["cof/zero_iff_s11"].record(
            (closed == 0) == (shape.canonical() == Shape{1, 1}));
    }
    {
        Rational closed =
            detail::maybe_bump(cof_delta22_closed(shape), fault.hits("cof_delta22"));
        bool ok = closed == cof_sum_adjugate(d22);
        if (d22.rows() >= 2) ok = ok && closed == cof_sum_reduction(d22);
        checks["cof/delta22_closed_equals_oracles"].record(ok);
    }

    // characteristic polynomials
    Poly p_delta = detail::maybe_bump(charpoly_delta_closed(shape), fault.hits("charpoly_delta"));
    Poly p_quotient = detail::maybe_bump(charpoly_quotient_delta(shape),
                                         fault.hits("charpoly_quotient_delta"));
    checks["charpoly/delta_closed_equals_oracle"].record(p_delta == charpoly_exact(delta));
    checks["charpoly/delta22_closed_equals_oracle"].record(
        detail::maybe_bump(charpoly_delta22_closed(shape), fault.hits("charpoly_delta22")) ==
        charpoly_exact(d22));
    checks["charpoly/quotient_delta_equals_oracle"].record(
        p_quotient == charpoly_exact(quotient_matrix_delta(shape)));
    checks["charpoly/quotient_delta22_equals_oracle"].record(
        detail::maybe_bump(charpoly_quotient_delta22(shape),
                           fault.hits("charpoly_quotient_delta22")) ==
        charpoly_exact(quotient_matrix_delta22(shape)));
    {
        Poly cyclotomic_power = Poly::linear(Rational(1)).pow(mult);
        bool ok = cyclotomic_power * p_quotient == p_delta;
        try {
            ok = ok && poly_div_exact(p_delta, p_quotient) == cyclotomic_power;
        } catch (const NotDivisibleError&) {
            ok = false;
        }
        checks["charpoly/delta_factors_as_quotient_times_x_plus_1_power"].record(ok);
    }
    if (b >= 2)
        checks["charpoly/quotient_delta_nonzero_at_minus_one"].record(
            p_quotient.eval(Rational(-1)) != 0);

    // eigenvalue -1
    {
        auto basis = minus_one_eigenbasis(shape);
        bool ok = basis.size() == mult;
        for (const auto& vec : basis) {
            // Delta v = -v
            for (int i = 0; i < n && ok; ++i) {
                Rational acc(0);
                for (int j = 0; j < n; ++j) acc += delta(i, j) * vec[j];
                if (acc != -vec[i]) ok = false;
            }
            // the restriction to the non-center block is a Delta22 eigenvector
            for (int i = 1; i < n && ok; ++i) {
                Rational acc(0);
                for (int j = 1; j < n; ++j) acc += d22(i - 1, j - 1) * vec[j];
                if (acc != -vec[i]) ok = false;
            }
        }
        checks["eigen/minus_one_eigenbasis_valid"].record(ok);
    }
    if (b >= 2) {
        // exact multiplicity of -1 as a root of P_Delta
        Poly rem = charpoly_exact(delta);
        std::size_t count = 0;
        while (rem.eval(Rational(-1)) == 0) {
            rem = poly_div_exact(rem, Poly::linear(Rational(1)));
            ++count;
        }
        checks["eigen/minus_one_multiplicity_exact"].record(count == mult);
    }

    // inertia
    {
        Inertia closed = inertia_delta_closed(shape);
        if (fault.hits("inertia_delta")) closed.positive += 1;
        checks["inertia/delta"].record(inertia_congruence(delta) == closed);
    }
    // Delta22 is nonsingular for every shape except S(1); the inertia
    // formula and the Haynsworth split both rest on that.
    if (det_delta22_closed(shape) != 0) {
        Inertia closed = inertia_delta22_closed(shape);
        if (fault.hits("inertia_delta22")) closed.positive += 1;
        checks["inertia/delta22"].record(inertia_congruence(d22) == closed);
    }
    if (det_delta22_closed(shape) != 0) {
        // Haynsworth additivity over the paper's 2x2 partition of Delta
        Inertia d22_inertia = inertia_congruence(d22);
        RatMatrix inv22 = inverse(d22);
        Rational schur(0);
        for (std::size_t i = 0; i < inv22.rows(); ++i)
            for (std::size_t j = 0; j < inv22.cols(); ++j) schur -= inv22(i, j);
        Inertia scalar_inertia{schur > 0 ? 1u : 0u, schur == 0 ? 1u : 0u, schur < 0 ? 1u : 0u};
        Inertia total{d22_inertia.positive + scalar_inertia.positive,
                      d22_inertia.zero + scalar_inertia.zero,
                      d22_inertia.negative + scalar_inertia.negative};
        checks["inertia/haynsworth_additivity"].record(total == inertia_congruence(delta));
    }

    // Q(Delta22) has exactly one sign-certified positive root
    {
        Poly q22 = charpoly_quotient_delta22(shape);
        checks["spectral/q_delta22_single_positive_root"].record(
            sturm_root_count(q22, Rational(0), Rational(4 * n)) == 1 &&
            q22.eval(Rational(4 * n)) != 0);
    }

    // spectral radius bracket straddles a sign change of P_Delta too
    {
        RootBracket bracket = spectral_radius(shape, Rational(1, 1000000));
        Rational at_lo = p_delta.eval(bracket.lo);
        Rational at_hi = p_delta.eval(bracket.hi);
        checks["spectral/bracket_sign_change_in_p_delta"].record(
            (at_lo < 0 && at_hi > 0) || (at_lo > 0 && at_hi < 0));
    }

    // Section-3 objects exist only when alpha - 2 beta != 0 and b >= 2.
    ScalarInvariants scalars = scalar_invariants(shape);
    if (b >= 2 && scalars.a2b != 0) {
        Rational lam = detail::maybe_bump(lambda_value(shape), fault.hits("lambda"));
        EtaVector ev = eta(shape);
        if (fault.hits("eta")) ev.entries[0] += 1;
        LaplacianLike lap = laplacian_like(shape);
        if (fault.hits("l_hat")) {
            lap.l_hat(0, 0) += 1;
            lap.l(0, 0) += Rational(1) / scalars.a2b;
        }

        {
            bool ok = true;
            Rational sum(0);
            for (int i = 0; i < n; ++i) {
                Rational acc(0);
                for (int j = 0; j < n; ++j) acc += delta(i, j) * ev.entries[j];
                if (acc != lam) ok = false;
                sum += ev.entries[i];
            }
            checks["inverse/delta_eta_equals_lambda_ones"].record(ok);
            checks["inverse/eta_sums_to_one"].record(sum == 1);
        }
        {
            bool ok = lap.l_hat.is_symmetric() && lap.l.is_symmetric();
            for (const Rational& rs : lap.l_hat.row_sums())
                if (rs != 0) ok = false;
            for (const Rational& rs : lap.l.row_sums())
                if (rs != 0) ok = false;
            checks["inverse/l_hat_row_sums_zero"].record(ok);
        }
        {
            // L Delta + I = eta 1^t
            RatMatrix lhs = lap.l * delta + RatMatrix::identity(n);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (lhs(i, j) != ev.entries[i]) ok = false;
            checks["inverse/laplacian_identity"].record(ok);
        }
        {
            RatMatrix closed_inv =
                detail::maybe_bump_matrix(delta_inverse_closed(shape), fault.hits("delta_inverse"));
            checks["inverse/delta_times_closed_inverse_is_identity"].record(
                delta * closed_inv == RatMatrix::identity(n));
            checks["inverse/closed_inverse_equals_oracle"].record(closed_inv == inverse(delta));
        }
        checks["laplacian/rank_n_minus_1"].record(rank(lap.l) ==
                                                  static_cast<std::size_t>(n - 1));
        {
            Rational constant = detail::maybe_bump(cofactor_constant(shape),
                                                   fault.hits("cofactor_constant"));
            RatMatrix adj = adjugate(lap.l);
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (adj(i, j) != constant) ok = false;
            checks["laplacian/all_cofactors_equal_constant"].record(ok);
        }
        checks["laplacian/null_dimension_one"].record(inertia_congruence(lap.l).zero == 1);
    }
}

// Balancing monotonicity and the f/g gap, for every index pair with
// n_p - n_q >= 2; sampled at x in {1/2, 1, 2, 10, 4n}.
inline void run_balancing_checks(const Shape& shape, CheckMap& checks) {
    const int b = shape.block_count();
    const std::vector<Rational> samples{Rational(1, 2), Rational(1), Rational(2), Rational(10),
                                        Rational(4 * shape.vertex_count())};
    for (std::size_t p = 0; p < static_cast<std::size_t>(b); ++p)
        for (std::size_t q = 0; q < static_cast<std::size_t>(b); ++q) {
            if (p == q || shape.parts[p] - shape.parts[q] < 2) continue;
            Shape moved = balancing_move(shape, p, q);
            checks["balancing/rho_strictly_increases"].record(
                compare_rho(shape, moved) == Ordering::Less);
            bool gap_ok = true;
            for (const Rational& x : samples) {
                auto [f, g] = lemma_fg_values(shape, p, q, x);
                if (!(f > g)) gap_ok = false;
            }
            checks["balancing/f_exceeds_g_at_samples"].record(gap_ok);
        }
}

}  // namespace sqdist

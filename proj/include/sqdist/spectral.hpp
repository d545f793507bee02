#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "sqdist/closed_forms.hpp"
#include "sqdist/errors.hpp"
#include "sqdist/graph.hpp"
#include "sqdist/poly.hpp"
#include "sqdist/rational.hpp"

namespace sqdist {

// Certified isolating interval for the unique positive root of poly:
// poly(lo) and poly(hi) have strictly opposite signs.
struct RootBracket {
    Poly poly;
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

inline Poly reduced_factor(const Shape& shape) {
    return charpoly_quotient_delta(shape);
}

namespace detail {

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Halve the bracket once; an exact root hit collapses to a thin interval
// around it (the root is simple, so the signs still straddle).
inline void refine_once(RootBracket& bracket, const Rational& min_width) {
    Rational mid = bracket.midpoint();
    int s = sign_of(bracket.poly.eval(mid));
    if (s == 0) {
        Rational half = std::min(min_width, bracket.width()) / 2;
        bracket.lo = mid - half;
        bracket.hi = mid + half;
        return;
    }
    int slo = sign_of(bracket.poly.eval(bracket.lo));
    if (s == slo) bracket.lo = mid;
    else bracket.hi = mid;
}

}  // namespace detail

// Bracket the unique positive root of reduced_factor(shape) down to the
// requested width. Initial interval [0, 4n]: 4n strictly exceeds every row
// sum of Delta, hence the spectral radius; p(0) = -beta < 0.
inline RootBracket spectral_radius(const Shape& shape, const Rational& width_limit) {
    if (width_limit <= 0) throw WidthNotPositiveError();
    RootBracket bracket;
    bracket.poly = reduced_factor(shape);
    bracket.lo = 0;
    bracket.hi = Rational(4 * shape.vertex_count());
    while (bracket.width() > width_limit) detail::refine_once(bracket, width_limit);
    return bracket;
}

// Number of distinct real roots of p in (lo, hi], by Sturm's theorem.
inline int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero() || p.degree() == 0) return 0;
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto [quot, rem] = poly_div_rem(chain[chain.size() - 2], chain.back());
        (void)quot;
        chain.push_back(Poly() - rem);
    }
    chain.pop_back();
    auto variations = [&](const Rational& x) {
        int count = 0, prev = 0;
        for (const Poly& q : chain) {
            int s = detail::sign_of(q.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

enum class Ordering { Less, Equal, Greater };

// Exact ordering of spectral radii. Brackets are refined alternately until
// disjoint; after refinement_cap rounds the gcd of the two reduced factors
// decides whether the roots coincide.
inline Ordering compare_rho(const Shape& a, const Shape& b, int refinement_cap = 256) {
    Shape ca = a.canonical(), cb = b.canonical();
    if (ca == cb) return Ordering::Equal;
    Rational start_width(4 * std::max(a.vertex_count(), b.vertex_count()));
    // Seed width only bounds the exact-hit collapse; any positive value works.
    Rational seed = start_width / 1024;
    RootBracket ba = spectral_radius(a, start_width);
    RootBracket bb = spectral_radius(b, start_width);
    bool gcd_checked = false;
    for (int round = 0;; ++round) {
        if (ba.hi <= bb.lo) return Ordering::Less;
        if (bb.hi <= ba.lo) return Ordering::Greater;
        if (round >= refinement_cap && !gcd_checked) {
            gcd_checked = true;
            Poly g = poly_gcd(ba.poly, bb.poly);
            if (g.degree() >= 1) {
                Rational lo = std::max(ba.lo, bb.lo);
                Rational hi = std::min(ba.hi, bb.hi);
                int slo = detail::sign_of(g.eval(lo));
                int shi = detail::sign_of(g.eval(hi));
                if (slo == 0 || shi == 0 || slo != shi) return Ordering::Equal;
            }
        }
        detail::refine_once(ba, seed);
        detail::refine_once(bb, seed);
        seed /= 2;
    }
}

// Move one vertex from block p to block q (indices 0-based, n_p - n_q >= 2).
inline Shape balancing_move(const Shape& shape, std::size_t p, std::size_t q) {
    if (p >= shape.parts.size() || q >= shape.parts.size() || p == q)
        throw InvalidParametersError("balancing_move: bad block indices");
    if (shape.parts[p] - shape.parts[q] < 2) throw MovePreconditionError();
    Shape out = shape;
    out.parts[p] -= 1;
    out.parts[q] += 1;
    return out;
}

// The two bracketed expressions the balancing comparison rests on, evaluated
// exactly at x > 0. f comes from the shape itself, g from its balancing
// move; f(x) > g(x) holds strictly.
inline std::pair<Rational, Rational> lemma_fg_values(const Shape& shape, std::size_t p,
                                                     std::size_t q, const Rational& x) {
    if (p >= shape.parts.size() || q >= shape.parts.size() || p == q)
        throw InvalidParametersError("lemma_fg_values: bad block indices");
    if (shape.parts[p] - shape.parts[q] < 2) throw MovePreconditionError();
    if (x <= 0) throw NonPositiveSampleError();

    auto evaluate = [&](int np, int nq) {
        Rational tp = x + 3 * np + 1;
        Rational tq = x + 3 * nq + 1;
        Rational sum = Rational(np) / tp + Rational(nq) / tq;
        for (std::size_t i = 0; i < shape.parts.size(); ++i) {
            if (i == p || i == q) continue;
            sum += Rational(shape.parts[i]) / (x + 3 * shape.parts[i] + 1);
        }
        return tp * tq * (x - (4 * x + 1) * sum);
    };

    return {evaluate(shape.parts[p], shape.parts[q]),
            evaluate(shape.parts[p] - 1, shape.parts[q] + 1)};
}

namespace detail {

inline void check_extremal_params(int n, int b) {
    if (b < 2 || n < b + 1)
        throw InvalidParametersError("need n >= b+1 >= 3");
}

}  // namespace detail

// One big block plus b-1 single-vertex blocks; the spectral-radius minimizer.
inline Shape s1_shape(int n, int b) {
    detail::check_extremal_params(n, b);
    std::vector<int> parts{n - b};
    parts.insert(parts.end(), b - 1, 1);
    return Shape(std::move(parts));
}

// Balanced composition: r parts of ceil((n-1)/b), b-r of floor((n-1)/b)
// with r = (n-1) mod b; the spectral-radius maximizer.
inline Shape s2_shape(int n, int b) {
    detail::check_extremal_params(n, b);
    int base = (n - 1) / b;
    int r = (n - 1) % b;
    std::vector<int> parts;
    parts.insert(parts.end(), r, base + 1);
    parts.insert(parts.end(), b - r, base);
    return Shape(std::move(parts));
}

// All partitions of n-1 into exactly b positive parts, descending within
// each shape, listed in lexicographically descending order.
inline std::vector<Shape> enumerate_shapes(int n, int b) {
    if (b < 1 || n < b + 1) throw InvalidParametersError("need n >= b+1");
    std::vector<Shape> out;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, int slots, int max_part) -> void {
        if (slots == 0) {
            if (remaining == 0) out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining - (slots - 1), max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, slots - 1, p);
            parts.pop_back();
        }
    };
    recurse(recurse, n - 1, b, n - 1);
    return out;
}

struct ShapeRho {
    Shape shape;
    RootBracket rho;
};

struct ExtremalReport {
    int n = 0;
    int b = 0;
    std::vector<ShapeRho> shapes;
    Shape argmin_shape;
    Shape argmax_shape;
    bool min_unique = false;
    bool max_unique = false;

    bool matches_theorem() const {
        return argmin_shape == s1_shape(n, b).canonical() &&
               argmax_shape == s2_shape(n, b).canonical() && min_unique && max_unique;
    }
};

inline ExtremalReport extremal_report(int n, int b, const Rational& width_limit) {
    detail::check_extremal_params(n, b);
    if (width_limit <= 0) throw WidthNotPositiveError();
    ExtremalReport report;
    report.n = n;
    report.b = b;
    for (const Shape& s : enumerate_shapes(n, b))
        report.shapes.push_back({s, spectral_radius(s, width_limit)});

    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < report.shapes.size(); ++i) {
        if (compare_rho(report.shapes[i].shape, report.shapes[imin].shape) == Ordering::Less)
            imin = i;
        if (compare_rho(report.shapes[i].shape, report.shapes[imax].shape) == Ordering::Greater)
            imax = i;
    }
    report.argmin_shape = report.shapes[imin].shape;
    report.argmax_shape = report.shapes[imax].shape;
    report.min_unique = report.max_unique = true;
    for (std::size_t i = 0; i < report.shapes.size(); ++i) {
        if (i != imin &&
            compare_rho(report.shapes[imin].shape, report.shapes[i].shape) != Ordering::Less)
            report.min_unique = false;
        if (i != imax &&
            compare_rho(report.shapes[imax].shape, report.shapes[i].shape) != Ordering::Greater)
            report.max_unique = false;
    }
    return report;
}

}  // namespace sqdist

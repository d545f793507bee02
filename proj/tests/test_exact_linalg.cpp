#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sqdist/graph.hpp"
#include "sqdist/linalg.hpp"
#include "sqdist/poly.hpp"

using namespace sqdist;

namespace {

RatMatrix delta_of(const Shape& s) { return to_rational(squared_distance_matrix(s)); }

RatMatrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

RatMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
    RatMatrix m = random_int_matrix(rng, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(j, i) = m(i, j);
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("2.5e3") == Rational(2500));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), RationalParseError);
    CHECK_THROWS_AS(parse_rational("abc"), RationalParseError);
    // round trip
    // inputs already in lowest terms, so printing reproduces them verbatim
    for (const char* text : {"0", "-3/2", "22/7", "13717421/109739369"})
        CHECK(to_string(parse_rational(text)) == text);
}

TEST_CASE("determinant via Bareiss") {
    CHECK(det_bareiss(RatMatrix::identity(3)) == 1);
    CHECK(det_bareiss(delta_of(Shape{1, 1})) == 8);
    CHECK(det_bareiss(RatMatrix::ones(3, 3)) == 0);
    CHECK_THROWS_AS(det_bareiss(RatMatrix(2, 3)), NotSquareError);
    // rational entries are cleared row by row
    RatMatrix half{{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 3)}};
    CHECK(det_bareiss(half) == Rational(1, 6));
}

TEST_CASE("cofactor sum via first-row reduction") {
    CHECK(cof_sum_reduction(RatMatrix{{0, 1}, {1, 0}}) == -2);
    CHECK(cof_sum_reduction(RatMatrix::identity(2)) == 2);
    CHECK(cof_sum_reduction(delta_of(Shape{1, 1})) == 0);
    CHECK_THROWS_AS(cof_sum_reduction(RatMatrix::identity(1)), OrderTooSmallError);
    CHECK_THROWS_AS(cof_sum_reduction(RatMatrix(2, 3)), NotSquareError);
}

TEST_CASE("cofactor sum via direct adjugate") {
    CHECK(cof_sum_adjugate(RatMatrix{{0, 1}, {1, 0}}) == -2);
    CHECK(cof_sum_adjugate(RatMatrix::identity(2)) == 2);
    CHECK(cof_sum_adjugate(delta_of(Shape{1, 1})) == 0);
    CHECK(cof_sum_adjugate(delta_of(Shape{1, 1, 1})) == 32);
    CHECK(cof_sum_adjugate(delta_of(Shape{2, 1})) == 2);
    CHECK(cof_sum_adjugate(RatMatrix::identity(1)) == 1);  // empty-minor convention
}

TEST_CASE("the two cofactor oracles agree on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 5;
        RatMatrix m = random_int_matrix(rng, n);
        CHECK(cof_sum_reduction(m) == cof_sum_adjugate(m));
    }
}

TEST_CASE("exact inverse") {
    CHECK(inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));
    CHECK(inverse(RatMatrix::identity(2).scaled(Rational(2))) ==
          RatMatrix::identity(2).scaled(Rational(1, 2)));

    RatMatrix expected{
        {Rational(-8, 3), Rational(1, 3), Rational(1, 3), Rational(1, 3)},
        {Rational(1, 3), Rational(-1, 6), Rational(1, 12), Rational(1, 12)},
        {Rational(1, 3), Rational(1, 12), Rational(-1, 6), Rational(1, 12)},
        {Rational(1, 3), Rational(1, 12), Rational(1, 12), Rational(-1, 6)}};
    RatMatrix delta = delta_of(Shape{1, 1, 1});
    CHECK(inverse(delta) == expected);
    CHECK(delta * inverse(delta) == RatMatrix::identity(4));
    CHECK(inverse(delta) * delta == RatMatrix::identity(4));

    CHECK_THROWS_AS(inverse(RatMatrix::ones(3, 3)), SingularError);
}

TEST_CASE("rank") {
    CHECK(rank(RatMatrix::ones(3, 3)) == 1);
    CHECK(rank(RatMatrix(4, 4)) == 0);
    CHECK(rank(delta_of(Shape{1, 1})) == 3);
    CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("inertia by congruence") {
    CHECK(inertia_congruence(RatMatrix{{2, 0}, {0, -3}}) == Inertia{1, 0, 1});
    CHECK(inertia_congruence(delta_of(Shape{1, 1, 1})) == Inertia{1, 0, 3});
    CHECK(inertia_congruence(RatMatrix{{0, 1}, {1, 0}}) == Inertia{1, 0, 1});
    CHECK(inertia_congruence(RatMatrix(3, 3)) == Inertia{0, 3, 0});
    CHECK_THROWS_AS(inertia_congruence(RatMatrix{{0, 1}, {2, 0}}), NotSymmetricError);
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937 rng(987654);
    int done = 0;
    while (done < 25) {
        std::size_t n = 2 + done % 4;
        RatMatrix m = random_symmetric(rng, n);
        RatMatrix s = random_int_matrix(rng, n);
        if (det_bareiss(s) == 0) continue;
        RatMatrix congruent = s.transpose() * m * s;
        CHECK(inertia_congruence(congruent) == inertia_congruence(m));
        // rank + n0 = order for symmetric matrices
        Inertia in = inertia_congruence(m);
        CHECK(rank(m) + in.zero == n);
        ++done;
    }
}

TEST_CASE("characteristic polynomial") {
    RatMatrix j2_minus_i{{0, 1}, {1, 0}};
    CHECK(charpoly_exact(j2_minus_i) == Poly({-1, 0, 1}));  // x^2 - 1
    CHECK(charpoly_exact(delta_of(Shape{1, 1})) == Poly({-8, -18, 0, 1}));
    CHECK(charpoly_exact(delta_of(Shape{1, 1, 1})) == Poly({-48, -152, -51, 0, 1}));
    CHECK_THROWS_AS(charpoly_exact(RatMatrix(2, 3)), NotSquareError);
}

TEST_CASE("charpoly constant term reproduces the determinant") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + trial % 6;
        RatMatrix m = random_int_matrix(rng, n);
        Poly p = charpoly_exact(m);
        Rational det = det_bareiss(m);
        CHECK(p.coefficient(0) == (n % 2 == 0 ? det : -det));
        CHECK(p.leading() == 1);
    }
}

TEST_CASE("adjugate from Faddeev-LeVerrier") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 5;
        RatMatrix m = random_int_matrix(rng, n);
        RatMatrix adj = adjugate(m);
        Rational det = det_bareiss(m);
        // M Adj(M) = det(M) I, also for singular M
        CHECK(m * adj == RatMatrix::identity(n).scaled(det));
    }
}

TEST_CASE("polynomial arithmetic") {
    Poly p({-1, 0, 1});  // x^2 - 1
    CHECK(poly_eval(p, Rational(3)) == 8);
    CHECK(poly_div_exact(Poly({-8, -18, 0, 1}), Poly({4, 1})) == Poly({-2, -4, 1}));
    CHECK_THROWS_AS(poly_div_exact(Poly({1, 0, 1}), Poly({1, 1})), NotDivisibleError);
    CHECK_THROWS_AS(poly_div_exact(p, Poly()), DivisionByZeroPolyError);

    CHECK(Poly({1, 1}) * Poly({-1, 1}) == Poly({-1, 0, 1}));
    CHECK(Poly({1, 2, 1}).derivative() == Poly({2, 2}));
    CHECK(Poly().degree() == -1);
    CHECK(Poly({0, 0}).is_zero());

    // gcd of (x-1)(x+2) and (x-1)(x-3) is x-1
    Poly a = Poly({-1, 1}) * Poly({2, 1});
    Poly b = Poly({-1, 1}) * Poly({-3, 1});
    CHECK(poly_gcd(a, b) == Poly({-1, 1}));
}

TEST_CASE("multiplication then exact division round-trips") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> ca(1 + trial % 4), cb(1 + (trial / 2) % 4);
        for (auto& c : ca) c = Rational(coeff(rng));
        for (auto& c : cb) c = Rational(coeff(rng));
        ca.push_back(Rational(1 + (trial % 3)));  // keep divisors nonzero
        cb.push_back(Rational(1));
        Poly a(std::move(ca)), b(std::move(cb));
        CHECK(poly_div_exact(a * b, b) == a);
    }
}

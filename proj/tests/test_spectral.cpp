#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqdist/spectral.hpp"
#include "sqdist/verify.hpp"

using namespace sqdist;

TEST_CASE("reduced factor") {
    // multiplicity of -1 is zero here, so the factor is the full charpoly
    CHECK(reduced_factor(Shape{1, 1}) == Poly({-8, -18, 0, 1}));
    CHECK(reduced_factor(Shape{1, 1, 1}) == Poly({-48, -152, -51, 0, 1}));
    // S(2): reduced factor (x-2)(x+1), spectral radius exactly 2
    Poly r2 = reduced_factor(Shape{2});
    CHECK(r2.eval(Rational(2)) == 0);
    CHECK(r2.eval(Rational(-1)) == 0);
}

TEST_CASE("spectral radius brackets the golden roots") {
    Rational width(1, 1000000000);

    // rho(S(1,1)) = 2 + sqrt(6): compare (x - 2)^2 with 6 exactly
    RootBracket b11 = spectral_radius(Shape{1, 1}, width);
    CHECK(b11.width() <= width);
    CHECK(b11.lo > 2);
    CHECK((b11.lo - 2) * (b11.lo - 2) < 6);
    CHECK((b11.hi - 2) * (b11.hi - 2) > 6);

    // rho(S(1,1,1)) = 4 + sqrt(19)
    RootBracket b111 = spectral_radius(Shape{1, 1, 1}, width);
    CHECK(b111.width() <= width);
    CHECK(b111.lo > 4);
    CHECK((b111.lo - 4) * (b111.lo - 4) < 19);
    CHECK((b111.hi - 4) * (b111.hi - 4) > 19);

    // rho(S(2)) = 2 exactly: the bisection hits the root and collapses
    RootBracket b2 = spectral_radius(Shape{2}, width);
    CHECK(b2.width() <= width);
    CHECK(b2.contains(Rational(2)));

    CHECK_THROWS_AS(spectral_radius(Shape{1, 1}, Rational(0)), WidthNotPositiveError);
    CHECK_THROWS_AS(spectral_radius(Shape{1, 1}, Rational(-1)), WidthNotPositiveError);
}

TEST_CASE("bracket endpoints certify a sign change") {
    for (Shape shape : {Shape{1, 1}, Shape{3, 2}, Shape{2, 2, 2}, Shape{5}}) {
        RootBracket bracket = spectral_radius(shape, Rational(1, 1 << 20));
        Rational at_lo = bracket.poly.eval(bracket.lo);
        Rational at_hi = bracket.poly.eval(bracket.hi);
        CHECK(((at_lo < 0 && at_hi > 0) || (at_lo > 0 && at_hi < 0)));
    }
}

TEST_CASE("sturm root counting") {
    // (x-1)(x-2)(x+3)
    Poly p = Poly({-1, 1}) * Poly({-2, 1}) * Poly({3, 1});
    CHECK(sturm_root_count(p, Rational(0), Rational(4)) == 2);
    CHECK(sturm_root_count(p, Rational(1), Rational(2)) == 1);  // (lo, hi]: 2 in, 1 out
    CHECK(sturm_root_count(p, Rational(-4), Rational(4)) == 3);
    CHECK(sturm_root_count(Poly({1, 0, 1}), Rational(-10), Rational(10)) == 0);
    // repeated roots count once: (x-1)^2
    CHECK(sturm_root_count(Poly({-1, 1}) * Poly({-1, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("exact comparison of spectral radii") {
    CHECK(compare_rho(Shape{4, 1}, Shape{3, 2}) == Ordering::Less);
    CHECK(compare_rho(Shape{3, 2}, Shape{4, 1}) == Ordering::Greater);
    CHECK(compare_rho(Shape{1, 2}, Shape{2, 1}) == Ordering::Equal);  // isomorphic
    CHECK(compare_rho(Shape{2, 1, 1}, Shape{2, 1, 1}) == Ordering::Equal);
    CHECK(compare_rho(Shape{1, 1}, Shape{1, 1, 1}) == Ordering::Less);
}

TEST_CASE("balancing move") {
    CHECK(balancing_move(Shape{4, 1}, 0, 1) == Shape{3, 2});
    CHECK(balancing_move(Shape{5, 2, 1}, 0, 2) == Shape{4, 2, 2});
    CHECK_THROWS_AS(balancing_move(Shape{2, 1}, 0, 1), MovePreconditionError);
    CHECK_THROWS_AS(balancing_move(Shape{3, 3}, 0, 1), MovePreconditionError);
    CHECK_THROWS_AS(balancing_move(Shape{4, 1}, 0, 0), InvalidParametersError);
    CHECK_THROWS_AS(balancing_move(Shape{4, 1}, 0, 5), InvalidParametersError);
}

TEST_CASE("f/g gap behind the balancing comparison") {
    Shape shape{4, 1, 2};
    std::size_t p = 0, q = 1;
    for (Rational x : {Rational(1, 2), Rational(1), Rational(2), Rational(10)}) {
        auto [f, g] = lemma_fg_values(shape, p, q, x);
        CHECK(f > g);

        // f times the untouched-block factors reproduces the reduced factor
        Rational rest(1);
        for (std::size_t i = 0; i < shape.parts.size(); ++i)
            if (i != p && i != q) rest *= x + 3 * shape.parts[i] + 1;
        CHECK(f * rest == reduced_factor(shape).eval(x));
    }
    CHECK_THROWS_AS(lemma_fg_values(shape, 0, 1, Rational(0)), NonPositiveSampleError);
    CHECK_THROWS_AS(lemma_fg_values(shape, 0, 1, Rational(-2)), NonPositiveSampleError);
    CHECK_THROWS_AS(lemma_fg_values(Shape{2, 1}, 0, 1, Rational(1)), MovePreconditionError);
}

TEST_CASE("extremal shape constructions") {
    CHECK(s1_shape(6, 2) == Shape{4, 1});
    CHECK(s2_shape(6, 2) == Shape{3, 2});
    CHECK(s1_shape(8, 3) == Shape{5, 1, 1});
    CHECK(s2_shape(8, 3) == Shape{3, 2, 2});
    CHECK(s1_shape(5, 4) == Shape{1, 1, 1, 1});
    CHECK(s2_shape(5, 4) == Shape{1, 1, 1, 1});
    CHECK_THROWS_AS(s1_shape(4, 1), InvalidParametersError);
    CHECK_THROWS_AS(s2_shape(3, 3), InvalidParametersError);
}

TEST_CASE("shape enumeration") {
    auto shapes = enumerate_shapes(6, 2);
    REQUIRE(shapes.size() == 2);
    CHECK(shapes[0] == Shape{4, 1});
    CHECK(shapes[1] == Shape{3, 2});

    CHECK(enumerate_shapes(5, 1) == std::vector<Shape>{Shape{4}});

    auto s83 = enumerate_shapes(8, 3);
    REQUIRE(s83.size() == 4);
    CHECK(s83.front() == Shape{5, 1, 1});
    CHECK(s83.back() == Shape{3, 2, 2});

    CHECK_THROWS_AS(enumerate_shapes(2, 2), InvalidParametersError);
}

TEST_CASE("extremal report on small cases") {
    ExtremalReport r = extremal_report(8, 3, Rational(1, 1000000));
    CHECK(r.argmin_shape == Shape{5, 1, 1});
    CHECK(r.argmax_shape == Shape{3, 2, 2});
    CHECK(r.min_unique);
    CHECK(r.max_unique);
    CHECK(r.matches_theorem());

    // single shape: min and max coincide and are trivially unique
    ExtremalReport tiny = extremal_report(5, 4, Rational(1, 1000000));
    CHECK(tiny.argmin_shape == tiny.argmax_shape);
    CHECK(tiny.matches_theorem());

    CHECK_THROWS_AS(extremal_report(6, 2, Rational(0)), WidthNotPositiveError);
    CHECK_THROWS_AS(extremal_report(4, 1, Rational(1, 2)), InvalidParametersError);
}

TEST_CASE("verification sweep passes clean and bites under fault injection") {
    CheckMap checks;
    for (const Shape& shape : all_shapes_up_to(7)) {
        run_shape_checks(shape, checks);
        run_balancing_checks(shape, checks);
    }
    for (const auto& [name, outcome] : checks) {
        INFO(name);
        CHECK(outcome.all_passed());
        CHECK(outcome.passed > 0);
    }

    // each fault target must make at least one check fail somewhere
    for (const std::string& target : fault_targets()) {
        CheckMap faulty;
        for (const Shape& shape : all_shapes_up_to(6))
            run_shape_checks(shape, faulty, FaultInjection{target});
        int failures = 0;
        for (const auto& [name, outcome] : faulty) failures += outcome.failed;
        INFO(target);
        CHECK(failures > 0);
    }
}

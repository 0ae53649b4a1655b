#include "rotvec/exact_real.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace rotvec;
using rotvec::testing::table_ab;

TEST_CASE("symbol table rejects bad declarations") {
    SymbolTable t;
    t.declare("a", 1.5);
    CHECK_THROWS_AS(t.declare("a", 2.0), std::invalid_argument);
    CHECK_THROWS_AS(t.declare("1", 2.0), std::invalid_argument);
    CHECK_THROWS_AS(t.declare("2x", 2.0), std::invalid_argument);
    CHECK_THROWS_AS(t.declare("b", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(t.declare("b", std::nan("")), std::invalid_argument);
    CHECK(t.index_of("a") == 0);
    CHECK(t.index_of("z") == -1);
}

TEST_CASE("parse reads linear combinations exactly") {
    auto t = table_ab();
    ExactReal x = parse("1/2 + a", t);
    CHECK(x.rat() == Rational(1, 2));
    CHECK(x.coeffs().size() == 1);
    CHECK(x.coeffs().at(0) == 1);

    ExactReal zero = parse("0", t);
    CHECK(zero.is_zero());

    ExactReal y = parse("2/3 - 5/7*b + b", t);
    CHECK(y.rat() == Rational(2, 3));
    CHECK(y.coeffs().size() == 1);
    CHECK(y.coeffs().at(1) == Rational(2, 7));
}

TEST_CASE("parse rejects malformed input") {
    auto t = table_ab();
    CHECK_THROWS_AS(parse("1/0", t), std::invalid_argument);
    CHECK_THROWS_AS(parse("c + 1", t), std::invalid_argument);
    CHECK_THROWS_AS(parse("1/", t), std::invalid_argument);
    CHECK_THROWS_AS(parse("", t), std::invalid_argument);
    CHECK_THROWS_AS(parse("1 1", t), std::invalid_argument);
    CHECK_THROWS_AS(parse("2*", t), std::invalid_argument);
}

TEST_CASE("arithmetic is exact and drops zero coefficients") {
    auto t = table_ab();
    ExactReal a = parse("a", t);
    CHECK((a + (-a)).is_zero());
    CHECK(scale(2, parse("1/2 + a", t)) == parse("1 + 2*a", t));
    CHECK(parse("1/3 + a", t) + parse("2/3 + b", t) == parse("1 + a + b", t));

    auto other = table_ab();
    CHECK_THROWS_AS((void)(a + parse("a", other)), std::invalid_argument);
}

TEST_CASE("eq_mod_z compares residues") {
    auto t = table_ab();
    CHECK(eq_mod_z(parse("3/2 + a", t), parse("1/2 + a", t)));
    CHECK_FALSE(eq_mod_z(parse("a", t), parse("2*a", t)));
    CHECK(eq_mod_z(parse("5/3", t), parse("-1/3", t)));
}

TEST_CASE("canonical_mod_z reduces the rational part into [0,1)") {
    auto t = table_ab();
    CHECK(canonical_mod_z(parse("3/2 + a", t)) == parse("1/2 + a", t));
    CHECK(canonical_mod_z(parse("-1/3", t)) == parse("2/3", t));
    CHECK(canonical_mod_z(parse("2*a", t)) == parse("2*a", t));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        ExactReal x = ExactReal::constant(testing::random_rational(rng, 12), t) +
                      scale(testing::random_rational(rng, 5), ExactReal::symbol(0, t));
        ExactReal c = canonical_mod_z(x);
        CHECK(c.rat() >= 0);
        CHECK(c.rat() < 1);
        CHECK(eq_mod_z(x, c));
        ExactReal y = ExactReal::constant(testing::random_rational(rng, 12), t);
        CHECK(eq_mod_z(x, y) == (canonical_mod_z(x) == canonical_mod_z(y)));
    }
}

TEST_CASE("coordinates is linear and includes zeros") {
    auto t = table_ab();
    CHECK(coordinates(parse("0", t)) == std::vector<Rational>{0, 0, 0});
    CHECK(coordinates(parse("1/2 + a", t)) == std::vector<Rational>{Rational(1, 2), 1, 0});
    CHECK(coordinates(parse("2*a - 3/4*b", t)) ==
          std::vector<Rational>{0, 2, Rational(-3, 4)});

    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        ExactReal x = testing::random_vector(rng, t, 1, 2)[0];
        ExactReal y = testing::random_vector(rng, t, 1, 2)[0];
        Rational q = testing::random_rational(rng, 6);
        auto cx = coordinates(x), cy = coordinates(y), cs = coordinates(x + y);
        for (size_t j = 0; j < cx.size(); ++j) CHECK(cs[j] == cx[j] + cy[j]);
        auto cq = coordinates(scale(q, x));
        for (size_t j = 0; j < cx.size(); ++j) CHECK(cq[j] == q * cx[j]);
    }
}

TEST_CASE("approx evaluates in double precision") {
    auto t = table_ab();
    CHECK(approx(parse("1/2", t)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(approx(parse("a", t)) == doctest::Approx(1.4142135623730951).epsilon(1e-15));
    CHECK(approx(parse("1/2 + 2*a", t)) == doctest::Approx(3.3284271247461903).epsilon(1e-15));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        ExactReal x = testing::random_vector(rng, t, 1, 2, 50)[0];
        double budget = 1.0;
        double exact = x.rat().get_d();
        for (const auto& [s, c] : x.coeffs()) {
            exact += c.get_d() * t->approx(s);
            budget += std::abs(c.get_d() * t->approx(s));
        }
        CHECK(std::abs(approx(x) - exact) <= std::ldexp(budget, -40));
    }
}

TEST_CASE("render round-trips through parse") {
    auto t = table_ab();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        ExactReal x = testing::random_vector(rng, t, 1, 2, 20)[0];
        CHECK(parse(render(x), t) == x);
    }
    CHECK(render(parse("0", t)) == "0");
    CHECK(render(parse("-1/2 - a", t)) == "-1/2 - a");
}

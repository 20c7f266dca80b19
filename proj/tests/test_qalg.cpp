#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrook/qalg.hpp"
#include "qrook/rational_fn.hpp"
#include "qrook/text_io.hpp"

#include <random>
#include <string>

using namespace qrook;

namespace {

// Independent oracle for the Gaussian binomial via the q-Pascal recursion
// [n choose k] = [n-1 choose k-1] + q^k [n-1 choose k].  The library
// computes the same value by exact division of Pochhammer products, so
// agreement here exercises a genuinely different code path.
LaurentPoly qbin_pascal(int n, int k) {
    if (k < 0 || k > n) return {};
    if (n == 0) return LaurentPoly(1);
    return qbin_pascal(n - 1, k - 1) + qbin_pascal(n - 1, k).shifted(k);
}

Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

LaurentPoly random_poly(std::mt19937& rng, int max_terms, int max_abs_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<int> coeff(-9, 9);
    LaurentPoly p;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

} // namespace

TEST_CASE("q_number basic values") {
    CHECK(q_number(0).is_zero());
    CHECK(q_number(1) == LaurentPoly(1));
    CHECK(q_number(3) == parse_laurent("q^2 + q + 1"));
    CHECK_THROWS_AS(q_number(-1), std::domain_error);
}

TEST_CASE("q_factorial basic values") {
    CHECK(q_factorial(0) == LaurentPoly(1));
    CHECK(q_factorial(2) == parse_laurent("q + 1"));
    // (1+q)(1+q+q^2) expanded by hand
    CHECK(q_factorial(3) == parse_laurent("q^3 + 2*q^2 + 2*q + 1"));
}

TEST_CASE("q_pochhammer basic values") {
    const LaurentPoly q = LaurentPoly::q();
    CHECK(q_pochhammer(q, 0) == LaurentPoly(1));
    CHECK(q_pochhammer(q, 1) == LaurentPoly(1) - q);
    // (1-q)(1-q^2) expanded by hand
    CHECK(q_pochhammer(q, 2) == parse_laurent("q^3 - q^2 - q + 1"));
}

TEST_CASE("q_binomial values and bounds") {
    CHECK(q_binomial(2, 1) == parse_laurent("q + 1"));
    CHECK(q_binomial(4, 2) == parse_laurent("q^4 + q^3 + 2*q^2 + q + 1"));
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    CHECK(q_binomial(0, 0) == LaurentPoly(1));
}

TEST_CASE("q_binomial matches the Pascal-recursion oracle") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k) == qbin_pascal(n, k));
}

TEST_CASE("q_binomial symmetry") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
}

TEST_CASE("q_binomial under q -> 1/q") {
    // Substituting q -> q^{-1} multiplies the Gaussian binomial by
    // q^{-k(j-k)}.
    for (int j = 0; j <= 10; ++j)
        for (int k = 0; k <= j; ++k) {
            LaurentPoly lhs = q_binomial(j, k).inverted();
            LaurentPoly rhs = q_binomial(j, k).shifted(-k * (j - k));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("evaluation at q = 1 recovers plain counts") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k).evaluate(Rat(1)) == Rat(binomial(n, k)));

    for (const auto& mu : partitions_of(6)) {
        Int expected = factorial(6);
        for (int part : mu.parts()) expected /= factorial(part);
        CHECK(q_multinomial(6, mu).evaluate(Rat(1)) == Rat(expected));
    }
}

TEST_CASE("q_multinomial values") {
    CHECK(q_multinomial(2, Partition({1, 1})) == parse_laurent("q + 1"));
    CHECK(q_multinomial(3, Partition({3})) == LaurentPoly(1));
    CHECK(q_multinomial(3, Partition({2, 1})) == parse_laurent("q^2 + q + 1"));
    CHECK_THROWS_AS(q_multinomial(4, Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("reverse") {
    CHECK(reverse(parse_laurent("1 + q"), 1) == parse_laurent("q + 1"));
    CHECK(reverse(parse_laurent("1 + q^2"), 2) == parse_laurent("q^2 + 1"));
    CHECK(reverse(parse_laurent("q^3"), 0) == parse_laurent("q^-3"));
}

TEST_CASE("LaurentPoly arithmetic and normal form") {
    LaurentPoly a = parse_laurent("q^2 - 1");
    LaurentPoly b = parse_laurent("q - 1");
    CHECK(a - a == LaurentPoly());
    CHECK((a * b).coeff(3) == 1);
    CHECK(exact_div(a, b) == parse_laurent("q + 1"));
    CHECK_THROWS_AS(exact_div(parse_laurent("q^2 + 1"), b), std::logic_error);
    CHECK_THROWS_AS(exact_div(a, LaurentPoly()), std::domain_error);
    // cancellation never leaves a stored zero
    LaurentPoly c = parse_laurent("q + 1");
    c -= parse_laurent("q");
    CHECK(c.terms().size() == 1);
}

TEST_CASE("LaurentPoly evaluation handles negative exponents") {
    LaurentPoly p = parse_laurent("q^-2 + q");
    CHECK(p.evaluate(Rat(2)) == Rat(9, 4));
    CHECK_THROWS_AS(p.evaluate(Rat(0)), std::domain_error);
}

TEST_CASE("RationalFn normal form is canonical") {
    std::mt19937 rng(20240817);
    int checked = 0;
    while (checked < 200) {
        LaurentPoly a = random_poly(rng, 4, 5);
        LaurentPoly b = random_poly(rng, 4, 5);
        LaurentPoly c = random_poly(rng, 3, 4);
        if (b.is_zero() || c.is_zero()) continue;
        ++checked;
        RationalFn direct(a, b);
        RationalFn padded(a * c, b * c);
        CHECK(direct == padded);
        CHECK(direct.den().coeff(direct.den().max_exp()) > 0);
        CHECK(poly_gcd(direct.num(), direct.den()) == LaurentPoly(1));
    }
}

TEST_CASE("RationalFn arithmetic agrees with rational-number evaluation") {
    std::mt19937 rng(7);
    const Rat point(3, 2);
    int checked = 0;
    while (checked < 100) {
        LaurentPoly a = random_poly(rng, 4, 4);
        LaurentPoly b = random_poly(rng, 4, 4);
        LaurentPoly c = random_poly(rng, 4, 4);
        LaurentPoly d = random_poly(rng, 4, 4);
        if (b.is_zero() || d.is_zero()) continue;
        RationalFn f(a, b), g(c, d);
        if (f.den().evaluate(point) == 0 || g.den().evaluate(point) == 0) continue;
        ++checked;
        CHECK((f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point));
        CHECK((f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point));
        if (!g.is_zero() && (f / g).den().evaluate(point) != 0 && g.evaluate(point) != 0)
            CHECK((f / g).evaluate(point) == f.evaluate(point) / g.evaluate(point));
    }
}

TEST_CASE("RationalFn Laurent embedding") {
    RationalFn f(parse_laurent("q^-2 + 1"));
    CHECK(f.is_laurent());
    CHECK_FALSE(f.is_polynomial());
    CHECK(f.to_laurent() == parse_laurent("q^-2 + 1"));
    CHECK(f.den() == parse_laurent("q^2"));

    RationalFn g(LaurentPoly(1), parse_laurent("q - 1"));
    CHECK_FALSE(g.is_laurent());
    CHECK_THROWS_AS(g.to_laurent(), std::domain_error);

    // (q^2-1)/(q-1) reduces to a polynomial
    RationalFn h(parse_laurent("q^2 - 1"), parse_laurent("q - 1"));
    CHECK(h.is_polynomial());
    CHECK(h.to_laurent() == parse_laurent("q + 1"));

    CHECK_THROWS_AS(RationalFn(LaurentPoly(1), LaurentPoly()), std::domain_error);
}

TEST_CASE("RationalFn inversion") {
    RationalFn f(parse_laurent("q^2 + q"), parse_laurent("q - 1"));
    RationalFn finv = f.inverted();
    const Rat pt(5, 3);
    CHECK(finv.evaluate(pt) == f.evaluate(Rat(1) / pt));
    CHECK(f.inverted().inverted() == f);
}

TEST_CASE("polynomial text rendering") {
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(parse_laurent("1 + 2*q + q^3")) == "q^3 + 2*q + 1");
    CHECK(to_string(LaurentPoly::monomial(1, -2)) == "q^-2");
    CHECK(to_string(LaurentPoly::monomial(-1, 2) + LaurentPoly(5)) == "-q^2 + 5");
    CHECK(to_string(parse_laurent("q^2 - 3*q")) == "q^2 - 3*q");
}

TEST_CASE("polynomial text round trip") {
    std::mt19937 rng(99);
    for (int t = 0; t < 300; ++t) {
        LaurentPoly p = random_poly(rng, 6, 8);
        CHECK(parse_laurent(to_string(p)) == p);
    }
}

TEST_CASE("polynomial JSON round trip") {
    std::mt19937 rng(123);
    for (int t = 0; t < 100; ++t) {
        LaurentPoly p = random_poly(rng, 6, 8);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
    }
    // large coefficients fall back to string encoding
    LaurentPoly big = LaurentPoly::monomial(Int("123456789012345678901234567890"), 3);
    CHECK(laurent_from_json(laurent_to_json(big)) == big);
}

TEST_CASE("parse errors name the offending token") {
    try {
        parse_laurent("q^3 + # + 1");
        FAIL("expected parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("#") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_laurent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("x,y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
}

TEST_CASE("rational function text round trip") {
    RationalFn f(parse_laurent("q^2 + 1"), parse_laurent("q^3 - q"));
    CHECK(parse_rational_fn(to_string(f)) == f);
    CHECK(to_string(RationalFn(LaurentPoly(1), parse_laurent("q"))) == "(1)/(q)");
    RationalFn p(parse_laurent("q + 1"));
    CHECK(to_string(p) == "q + 1");
    CHECK(parse_rational_fn("q + 1") == p);
}

TEST_CASE("partition text forms") {
    CHECK(to_string(Partition({4, 3, 3})) == "4,3,3");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("4,3,3") == Partition({4, 3, 3}));
    CHECK(parse_partition("-") == Partition{});
    CHECK(partition_from_json(partition_to_json(Partition({4, 3, 3}))) == Partition({4, 3, 3}));
}

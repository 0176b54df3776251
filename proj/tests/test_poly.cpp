#include "flagcw/lattice.hpp"
#include "flagcw/poly.hpp"
#include "random_poly.hpp"

#include <catch_amalgamated.hpp>

using namespace flagcw;
using flagcw::testing::random_polynomial;

TEST_CASE("printing follows the coefficient-star-monomial format")
{
    Vars v = make_vars({"a", "b"}, {2, 2});
    Polynomial p = Polynomial::monomial(v, {14, 14}, BigInt("22941470025"));
    REQUIRE(p.to_string() == "22941470025*a^14*b^14");
    Polynomial q = parse_polynomial("18662400*a^22*b^6 - 508680000*a^20*b^8 + b - 3", v);
    REQUIRE(q.to_string() == "-3 + b + 18662400*a^22*b^6 - 508680000*a^20*b^8");
    REQUIRE(t_poly({1, 1}).to_string() == "1 + t");
    REQUIRE(t_poly({0, 0, 2}).to_string() == "2*t^2");
    REQUIRE(Polynomial(v).to_string() == "0");
}

TEST_CASE("weighted graded-lex storage")
{
    Vars v = make_vars({"a", "p"}, {2, 4});
    Polynomial p = parse_polynomial("p + a^2 + a", v);
    REQUIRE(p.is_homogeneous() == false);
    REQUIRE(p.max_degree() == 4);
    REQUIRE(p.homogeneous_part(4).size() == 2);
    REQUIRE(p.terms().front().first == Exponents{1, 0});
    // a^2 is lex-larger than p at equal weight
    REQUIRE(p.terms().back().first == Exponents{2, 0});
}

TEST_CASE("mixing rings is an error")
{
    Polynomial a = Polynomial::variable(indexed_vars("x", 2), 0);
    Polynomial b = Polynomial::variable(indexed_vars("y", 2), 0);
    REQUIRE_THROWS_AS(a + b, std::invalid_argument);
    REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(7);
    Vars v = indexed_vars("x", 3);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_polynomial(rng, v, 3, 6);
        Polynomial q = random_polynomial(rng, v, 3, 6);
        Polynomial r = random_polynomial(rng, v, 2, 4);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p * q == q * p);
        REQUIRE(p - p == Polynomial(v));
        std::vector<BigInt> pt{BigInt(trial - 3), BigInt(2), BigInt(-5)};
        REQUIRE((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        REQUIRE(parse_polynomial(p.to_string(), v) == p);
        if (!q.is_zero()) {
            auto quo = divide_exact(p * q, q);
            REQUIRE(quo.has_value());
            REQUIRE(*quo == p);
        }
    }
}

TEST_CASE("exact division detects remainders")
{
    Vars v = indexed_vars("x", 2);
    Polynomial x = Polynomial::variable(v, 0), y = Polynomial::variable(v, 1);
    REQUIRE_FALSE(divide_exact(x * x + y, x - y).has_value());
    REQUIRE(*divide_exact(x * x - y * y, x - y) == x + y);
    REQUIRE_FALSE(divide_exact(BigInt(3) * x, Polynomial::constant(v, 2)).has_value());
}

TEST_CASE("substitution composes with evaluation")
{
    std::mt19937 rng(11);
    Vars v = indexed_vars("x", 2), w = indexed_vars("y", 3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_polynomial(rng, v, 3, 5);
        Polynomial f = random_polynomial(rng, w, 2, 3), g = random_polynomial(rng, w, 2, 3);
        std::vector<BigInt> pt{BigInt(1), BigInt(-2), BigInt(3)};
        REQUIRE(p.substitute({f, g}).evaluate(pt) == p.evaluate({f.evaluate(pt), g.evaluate(pt)}));
    }
}

TEST_CASE("integer helpers")
{
    REQUIRE(factorial(5) == 120);
    REQUIRE(double_factorial(7) == 105);
    REQUIRE(double_factorial(0) == 1);
    REQUIRE(binomial(8, 3) == 56);
    REQUIRE(binomial(3, 5) == 0);
}

TEST_CASE("Hermite normal form and kernels")
{
    IntMatrix m{{BigInt(2), BigInt(4), BigInt(6)}, {BigInt(1), BigInt(3), BigInt(5)}};
    IntMatrix u;
    IntMatrix h = hermite_normal_form(m, 3, &u);
    REQUIRE(h.size() == 2);
    REQUIRE(h[0][0] == 1);
    // U * m == h
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < 3; ++j) REQUIRE(u[i][0] * m[0][j] + u[i][1] * m[1][j] == h[i][j]);
    IntMatrix k = integer_kernel(m, 3);
    REQUIRE(k.size() == 1);
    IntVector image = apply(m, k[0], 2);
    REQUIRE(image[0] == 0);
    REQUIRE(image[1] == 0);
    REQUIRE(determinant({{BigInt(2), BigInt(1)}, {BigInt(7), BigInt(4)}}) == 1);
}

TEST_CASE("quotient bases detect torsion and honour preferred lifts")
{
    // Z^2 / <(2, 1)> is free, Z^2 / <(2, 0)> is not.
    QuotientBasis q = quotient_basis({{BigInt(2), BigInt(1)}}, 2, {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
    REQUIRE(q.free);
    REQUIRE(q.rank() == 1);
    REQUIRE(q.project({BigInt(2), BigInt(1)})[0] == 0);
    REQUIRE(q.project(q.lifts[0])[0] == 1);
    QuotientBasis t = quotient_basis({{BigInt(2), BigInt(0)}}, 2);
    REQUIRE_FALSE(t.free);
}

TEST_CASE("lattice coordinates")
{
    LatticeBasis b({{BigInt(1), BigInt(1), BigInt(0)}, {BigInt(0), BigInt(2), BigInt(1)}}, 3);
    auto c = b.coordinates({BigInt(3), BigInt(1), BigInt(-1)});
    REQUIRE(c.has_value());
    REQUIRE((*c)[0] == 3);
    REQUIRE((*c)[1] == -1);
    REQUIRE_FALSE(b.coordinates({BigInt(1), BigInt(0), BigInt(0)}).has_value());
}

TEST_CASE("F2 rank")
{
    F2Matrix m(3, 70);
    m.set(0, 0, true);
    m.set(0, 69, true);
    m.set(1, 69, true);
    m.set(2, 0, true);
    REQUIRE(m.rank() == 2);
}

#include "flagcw/symfunc.hpp"
#include "random_poly.hpp"

#include <catch_amalgamated.hpp>

using namespace flagcw;

TEST_CASE("partition basics")
{
    REQUIRE(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
    REQUIRE(Partition().transpose() == Partition());
    REQUIRE(Partition::parse("(14,14,14,14)").size() == 56);
    REQUIRE(Partition::parse("()").length() == 0);
    REQUIRE(Partition().complement(2, 3) == Partition({3, 3}));
    REQUIRE(Partition({1}).complement(2, 1) == Partition({1}));
    REQUIRE(Partition({3, 3}).complement(2, 3) == Partition());
    REQUIRE_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Partition({4}).complement(2, 3), std::invalid_argument);
    REQUIRE(partitions_in_box(2, 2).size() == 6);
    REQUIRE(partitions_in_box(2, 1).size() == 3);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            auto box = partitions_in_box(m, n);
            REQUIRE(box.size() == binomial(m + n, m).get_ui());
            for (const auto& l : box) {
                REQUIRE(l.transpose().transpose() == l);
                REQUIRE(l.complement(m, n).complement(m, n) == l);
                REQUIRE(l.size() + l.complement(m, n).size() == m * n);
            }
        }
    REQUIRE(partitions_of(5, 10).size() == 7);
}

TEST_CASE("small Jacobi-Trudi determinants")
{
    std::vector<BigInt> v{1, 7, 5, 3};
    REQUIRE(jacobi_trudi_delta(Partition({1}), v) == 7);
    REQUIRE(jacobi_trudi_delta(Partition({2}), v) == 5);
    REQUIRE(jacobi_trudi_delta(Partition({1, 1}), v) == 49 - 5);
    REQUIRE(jacobi_trudi_delta(Partition(), v) == 1);
}

TEST_CASE("Schur polynomials three ways")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(-4, 4);
    for (int n = 1; n <= 4; ++n) {
        Vars v = indexed_vars("x", n);
        std::vector<Polynomial> e;
        for (int k = 0; k <= n; ++k) e.push_back(elementary_symmetric(v, k));
        std::vector<Polynomial> h;
        for (int k = 0; k <= 8; ++k) h.push_back(complete_symmetric(v, k));
        for (int size = 0; size <= 8; ++size)
            for (const auto& lam : partitions_of(size, n)) {
                INFO(lam.to_string() << " in " << n << " variables");
                Polynomial s = schur_polynomial(lam, v);
                if (lam.parts().empty() || lam[0] <= n)
                    REQUIRE(s == jacobi_trudi_delta(lam.transpose(), e, v));
                REQUIRE(s == jacobi_trudi_delta(lam, h, v));
                std::vector<BigInt> pts(n);
                for (auto& p : pts) p = pick(rng);
                REQUIRE(schur_at(lam, pts) == s.evaluate(pts));
            }
    }
}

TEST_CASE("quadratic specialization")
{
    REQUIRE(q_spec(Partition({1}), 3) == 10);
    REQUIRE(q_spec(Partition({1, 1}), 3) == 9);
    REQUIRE(q_spec(Partition({1}), 2) == 4);
    REQUIRE(q_spec(Partition({2}), 2) == 16);
    REQUIRE(q_spec(Partition(), 7) == 1);
    REQUIRE(q_spec(Partition({1, 1}), 2) == 0);
}

TEST_CASE("Schur expansion")
{
    Vars v = indexed_vars("x", 2);
    auto a = schur_expand(parse_polynomial("x1*x2", v));
    REQUIRE(a.size() == 1);
    REQUIRE(a[Partition({1, 1})] == 1);
    auto b = schur_expand(parse_polynomial("x1^2 + x1*x2 + x2^2", v));
    REQUIRE(b.size() == 1);
    REQUIRE(b[Partition({2})] == 1);
    auto c = schur_expand(parse_polynomial("9*x1*x2*(2*x1 + x2)*(x1 + 2*x2)", v));
    REQUIRE(c[Partition({2, 2})] == 27);
    REQUIRE_THROWS_AS(schur_expand(parse_polynomial("x1", v)), std::invalid_argument);

    std::mt19937 rng(2);
    std::uniform_int_distribution<int> pick(-3, 3);
    Vars w = indexed_vars("x", 3);
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial p = testing::random_polynomial(rng, w, 3, 4);
        Polynomial sym = p + p.permute({1, 0, 2}) + p.permute({2, 1, 0}) + p.permute({0, 2, 1}) +
                         p.permute({1, 2, 0}) + p.permute({2, 0, 1});
        auto ex = schur_expand(sym);
        for (int pt = 0; pt < 5; ++pt) {
            std::vector<BigInt> x(3);
            for (auto& xi : x) xi = pick(rng);
            BigInt total = 0;
            for (const auto& [lam, coef] : ex) total += coef * schur_at(lam, x);
            REQUIRE(total == sym.evaluate(x));
        }
    }
}

TEST_CASE("Grassmannian integrals")
{
    for (int k = 1; k <= 3; ++k)
        for (int n = k; n <= 9; ++n) {
            Vars v = indexed_vars("x", k);
            std::vector<int> box(k, n - k);
            REQUIRE(grassmann_integrate(k, n, schur_polynomial(Partition(box), v)) == 1);
        }
    Vars v = indexed_vars("x", 2);
    REQUIRE(grassmann_integrate(2, 4, parse_polynomial("9*x1*x2*(2*x1 + x2)*(x1 + 2*x2)", v)) == 27);
    // s_1^4 on Gr(2,4) is the degree 2
    REQUIRE(grassmann_integrate(2, 4, parse_polynomial("(x1 + x2)^4", v)) == 2);
    // lower-degree parts do not contribute
    REQUIRE(grassmann_integrate(2, 4, parse_polynomial("x1^2*x2^2 + x1 + 5", v)) == 1);
}

TEST_CASE("relative Grassmannian pushforward")
{
    Vars v = indexed_vars("t", 4);
    for (size_t k = 1; k < 4; ++k) {
        std::vector<size_t> sub(k);
        for (size_t i = 0; i < k; ++i) sub[i] = i;
        Vars sv = indexed_vars("t", static_cast<int>(k));
        std::vector<int> box(k, static_cast<int>(4 - k));
        std::vector<Polynomial> embed;
        for (size_t i = 0; i < k; ++i) embed.push_back(Polynomial::variable(v, i));
        Polynomial pt = schur_polynomial(Partition(box), sv).substitute(embed);
        REQUIRE(grassmann_bundle_pushforward(sub, pt) == Polynomial::constant(v, 1));
        REQUIRE(grassmann_bundle_pushforward(sub, Polynomial::constant(v, 1)).is_zero());
    }
    Polynomial g = parse_polynomial("9*t1*t2*(2*t1 + t2)*(t1 + 2*t2)", v);
    REQUIRE(grassmann_bundle_pushforward({0, 1}, g) == Polynomial::constant(v, 27));
    REQUIRE_THROWS_AS(grassmann_bundle_pushforward({0, 1}, parse_polynomial("t1*t3^5", v)), std::invalid_argument);
}

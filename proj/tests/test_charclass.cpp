#include "flagcw/charclass.hpp"
#include "flagcw/symfunc.hpp"

#include "poly_printer.hpp"

#include <catch_amalgamated.hpp>

using namespace flagcw;

namespace {

Polynomial ab(const std::string& s) { return parse_polynomial(s, euler_root_vars(2)); }

// prod over the positive weights (M-2i)a and (N-2j)b of ((M-2i)^2 a^2 - (N-2j)^2 b^2)
Polynomial root_product(int m, int n)
{
    Vars v = euler_root_vars(2);
    Polynomial p = Polynomial::constant(v, 1);
    for (int i = m; i > 0; i -= 2)
        for (int j = n; j > 0; j -= 2)
            p = p * (Polynomial::monomial(v, {2, 0}, i * i) - Polynomial::monomial(v, {0, 2}, j * j));
    return p;
}

std::vector<Polynomial> pontryagin_list(const Polynomial& total, int rank_half)
{
    std::vector<Polynomial> out;
    for (int k = 0; k <= rank_half; ++k) out.push_back(total.homogeneous_part(4 * k));
    return out;
}

}  // namespace

TEST_CASE("rank-2 symmetric power classes")
{
    Vars a = euler_root_vars(1);
    REQUIRE(pontryagin_sym_rk2(3) == parse_polynomial("(1 + 9*a^2)*(1 + a^2)", a));
    REQUIRE(pontryagin_sym_rk2(2) == parse_polynomial("1 + 4*a^2", a));
    REQUIRE(pontryagin_sym_rk2(0) == Polynomial::constant(a, 1));
    REQUIRE(euler_sym_rk2(3) == parse_polynomial("3*a^2", a));
    REQUIRE(euler_sym_rk2(5) == parse_polynomial("15*a^3", a));
    REQUIRE(euler_sym_rk2(1) == parse_polynomial("a", a));
    REQUIRE(euler_sym_rk2(4).is_zero());
    REQUIRE(euler_tensor_rk2() == ab("a^2 - b^2"));
    REQUIRE(euler_dual_sign(2) == 1);
    REQUIRE(euler_dual_sign(3) == -1);
    REQUIRE(euler_dual_sign(56) == 1);
}

TEST_CASE("Sym tensor examples")
{
    REQUIRE(euler_sym_tensor(3, 2) == ab("(9*a^4 - 40*a^2*b^2 + 16*b^4)*3*a^2"));
    REQUIRE(euler_sym_tensor(4, 1) == ab("(64*a^4 - 20*a^2*b^2 + b^4)*b"));
    REQUIRE(euler_sym_tensor(2, 2).is_zero());
    REQUIRE(euler_sym_tensor(1, 1) == euler_tensor_rk2());
}

TEST_CASE("Sym tensor agrees with the root product for odd powers")
{
    for (int m = 1; m <= 7; m += 2)
        for (int n = 1; n <= 7; n += 2) {
            INFO("M=" << m << " N=" << n);
            REQUIRE(euler_sym_tensor(m, n) == root_product(m, n));
        }
}

TEST_CASE("Cauchy formula from Pontryagin classes")
{
    Vars v = euler_root_vars(2);
    for (int m = 1; m <= 7; m += 2)
        for (int n = 1; n <= 7; n += 2) {
            INFO("M=" << m << " N=" << n);
            Polynomial pa = pontryagin_sym_rk2(m).substitute({Polynomial::variable(v, 0)});
            Polynomial pb = pontryagin_sym_rk2(n).substitute({Polynomial::variable(v, 1)});
            REQUIRE(euler_tensor_cauchy(pontryagin_list(pa, (m + 1) / 2), pontryagin_list(pb, (n + 1) / 2)) ==
                    root_product(m, n));
        }
    // n = 1: sum_k (-1)^k p_{2(m-k)}(A) b^{2k}
    Vars w = make_vars({"p1", "p2", "p3", "b"}, {4, 8, 12, 2});
    std::vector<Polynomial> pa{Polynomial::constant(w, 1), Polynomial::variable(w, 0), Polynomial::variable(w, 1),
                               Polynomial::variable(w, 2)};
    std::vector<Polynomial> pb{Polynomial::constant(w, 1), parse_polynomial("b^2", w)};
    REQUIRE(euler_tensor_cauchy(pa, pb) == parse_polynomial("p3 - p2*b^2 + p1*b^4 - b^6", w));
    // equal root multisets
    Polynomial pc = pontryagin_sym_rk2(3).substitute({Polynomial::variable(v, 0)});
    REQUIRE(euler_tensor_cauchy(pontryagin_list(pc, 2), pontryagin_list(pc, 2)).is_zero());
}

TEST_CASE("q specialization matches Jacobi-Trudi on Pontryagin classes")
{
    for (int m = 1; m <= 7; ++m) {
        Polynomial p = pontryagin_sym_rk2(m);
        std::vector<BigInt> coeffs;
        for (int k = 0; k <= (m + 1) / 2; ++k) coeffs.push_back(p.coefficient({2 * k}));
        for (int size = 0; size <= 6; ++size)
            for (const auto& lam : partitions_of(size, 10)) {
                INFO("M=" << m << " lambda=" << lam.to_string());
                REQUIRE(jacobi_trudi_delta(lam.transpose(), coeffs) == q_spec(lam, m));
            }
    }
}

TEST_CASE("Euler class of Sym^5 of a rank-4 sum")
{
    Polynomial expected = ab("18662400*a^22*b^6 - 508680000*a^20*b^8 + 4194860400*a^18*b^10"
                             " - 14714257500*a^16*b^12 + 22941470025*a^14*b^14 - 14714257500*a^12*b^16"
                             " + 4194860400*a^10*b^18 - 508680000*a^8*b^20 + 18662400*a^6*b^22");
    Polynomial e = euler_sym_sum_rk2(5);
    REQUIRE(e == expected);
    REQUIRE(euler_sym_sum_rk2(1) == ab("a*b"));
    Polynomial p = ab("15*a^3*(9*a^4 - 40*a^2*b^2 + 16*b^4)*3*a^2*(64*a^4 - 20*a^2*b^2 + b^4)*b");
    REQUIRE(e == p * p.permute({1, 0}));
    for (int k = 1; k <= 6; ++k) {
        Polynomial s = euler_sym_sum_rk2(k);
        Polynomial swapped = s.permute({1, 0});
        REQUIRE((swapped == s || swapped == -s));
    }
}

TEST_CASE("sym rank and first Chern class multiple")
{
    REQUIRE(sym_rank_c1(3, 2) == std::pair<BigInt, BigInt>(4, 6));
    REQUIRE(sym_rank_c1(5, 4) == std::pair<BigInt, BigInt>(56, 70));
    REQUIRE(sym_rank_c1(0, 3) == std::pair<BigInt, BigInt>(1, 0));
    REQUIRE(orientability_conditions(3, 5, 14).all());
    REQUIRE_FALSE(orientability_conditions(3, 5, 13).d_even);
    REQUIRE_FALSE(orientability_conditions(2, 5, 14).rank_even);
    // no smaller even l2 or smaller l1 works
    for (int l2 = 1; l2 < 5; ++l2)
        for (int l1 = 1; l1 < 20; ++l1)
            for (int d = 2; d < 30; ++d) REQUIRE_FALSE(orientability_conditions(l1, l2, d).all());
}

TEST_CASE("bundle expression parser")
{
    REQUIRE(parse_bundle("sym^5(D1 + D2)").to_string() == "sym^5((D1+D2))");
    REQUIRE(parse_bundle("D1 + D2*D3").to_string() == "(D1+(D2*D3))");
    REQUIRE(parse_bundle("(D1+D2)*D3").to_string() == "((D1+D2)*D3)");
    REQUIRE(parse_bundle("dual(S2) + triv(1)").max_block() == 2);
    for (const char* bad : {"", "D0", "sym(D1)", "D1 +", "dual D1", "X1", "triv(x)", "(D1"})
        REQUIRE_THROWS_AS(parse_bundle(bad), std::invalid_argument);
}

TEST_CASE("bundle evaluation in rank-2 blocks")
{
    auto eval = [](const char* s) { return evaluate_bundle(parse_bundle(s), 2); };
    auto sym3 = eval("sym^3(D1)");
    REQUIRE(sym3.rank == 4);
    REQUIRE(sym3.euler == parse_polynomial("3*a^2", euler_root_vars(1)));
    REQUIRE(sym3.total == pontryagin_sym_rk2(3));
    REQUIRE(eval("D1*D2").euler == euler_tensor_rk2());
    REQUIRE(eval("sym^5(D1+D2)").euler == euler_sym_sum_rk2(5));
    REQUIRE(eval("sym^5(dual(S2))").rank == 56);
    for (int m = 0; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n) {
            std::string s = "sym^" + std::to_string(m) + "(D1)*sym^" + std::to_string(n) + "(D2)";
            INFO(s);
            REQUIRE(eval(s.c_str()).euler == euler_sym_tensor(m, n));
        }
    // Whitney sum and trivial summands
    auto a = eval("sym^3(D1)"), b = eval("D1*D2");
    auto both = evaluate_bundle(parse_bundle("sym^3(D1) + D1*D2"), 2);
    REQUIRE(both.euler == a.euler.substitute({Polynomial::variable(both.euler.vars(), 0)}) * b.euler);
    REQUIRE(both.total == a.total.substitute({Polynomial::variable(both.total.vars(), 0)}) * b.total);
    REQUIRE(eval("D1 + triv(1)").euler.is_zero());
    REQUIRE(eval("sym^2(D1)").euler.is_zero());
}

TEST_CASE("bundle evaluation in line blocks")
{
    auto cubic = evaluate_bundle(parse_bundle("sym^3(dual(S2))"), 1);
    REQUIRE(cubic.rank == 4);
    REQUIRE(grassmann_integrate(2, 4, cubic.euler) == 27);
    auto dual = evaluate_bundle(parse_bundle("dual(S3)"), 1);
    REQUIRE(dual.euler == -evaluate_bundle(parse_bundle("S3"), 1).euler);
    REQUIRE(evaluate_bundle(parse_bundle("S2"), 1).total == parse_polynomial("(1 + t1)*(1 + t2)", chern_root_vars(2)));
    REQUIRE_THROWS_AS(evaluate_bundle(parse_bundle("D1"), 3), std::invalid_argument);
}

#include "flagcw/flagchow.hpp"
#include "random_poly.hpp"

#include <catch_amalgamated.hpp>

using namespace flagcw;

namespace {

// Divided difference (f - s_i f) / (x_i - x_{i+1}), 0-based i.
Polynomial divided_difference(const Polynomial& f, size_t i)
{
    std::vector<size_t> perm(f.nvars());
    for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::swap(perm[i], perm[i + 1]);
    Polynomial d = Polynomial::variable(f.vars(), i) - Polynomial::variable(f.vars(), i + 1);
    auto q = divide_exact(f - f.permute(perm), d);
    REQUIRE(q.has_value());
    return *q;
}

// Integral over Fl(N) through the longest-word divided difference; the point class
// prod (-x_i)^{N-i} carries the sign (-1)^{N(N-1)/2}.
BigInt oracle_integral(const Polynomial& f)
{
    const size_t n = f.nvars();
    Polynomial g = f.homogeneous_part(static_cast<int>(n * (n - 1) / 2));
    // w0 = (s_1)(s_2 s_1)(s_3 s_2 s_1)...
    for (size_t k = 1; k < n; ++k)
        for (size_t i = k; i-- > 0;) g = divided_difference(g, i);
    BigInt v = g.is_zero() ? BigInt(0) : g.terms().front().second;
    return (n * (n - 1) / 2) % 2 ? BigInt(-v) : v;
}

}  // namespace

TEST_CASE("standard monomials count N! and follow Mahonian ranks")
{
    for (int n = 1; n <= 6; ++n) {
        FullFlagRing r(n);
        REQUIRE(r.total_rank() == static_cast<size_t>(factorial(n).get_ui()));
        REQUIRE(t_coefficients(chow_poincare(FlagShape::full(n)))[1] == n - 1);
    }
}

TEST_CASE("Groebner basis leading terms are pure powers")
{
    FullFlagRing r(4);
    for (int k = 1; k <= 4; ++k) {
        Exponents lead(4, 0);
        lead[k - 1] = k;
        REQUIRE(r.groebner_basis()[k - 1].terms().back().first == lead);
        REQUIRE(r.normal_form(r.groebner_basis()[k - 1]).is_zero());
    }
}

TEST_CASE("integration agrees with the divided-difference oracle")
{
    std::mt19937 rng(3);
    for (int n = 2; n <= 5; ++n) {
        FullFlagRing r(n);
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial f = testing::random_homogeneous(rng, r.vars(), r.top_degree(), 5);
            REQUIRE(r.integrate(f) == oracle_integral(f));
            // normal forms are compatible with products
            int d = trial % (r.top_degree() + 1);
            Polynomial a = testing::random_homogeneous(rng, r.vars(), d, 4);
            Polynomial b = testing::random_homogeneous(rng, r.vars(), r.top_degree() - d, 4);
            REQUIRE(r.integrate(r.normal_form(a) * r.normal_form(b)) == oracle_integral(a * b));
        }
    }
}

TEST_CASE("normal forms kill symmetric polynomials and are idempotent")
{
    std::mt19937 rng(5);
    FullFlagRing r(4);
    Polynomial e2 = parse_polynomial("x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4", r.vars());
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial f = testing::random_polynomial(rng, r.vars(), 3, 5);
        REQUIRE(r.normal_form(f * e2).is_zero());
        Polynomial nf = r.normal_form(f);
        REQUIRE(r.normal_form(nf) == nf);
        for (const auto& [e, c] : nf.terms()) REQUIRE(FullFlagRing::is_standard(e));
    }
}

TEST_CASE("Chow Poincare polynomials")
{
    REQUIRE(chow_poincare(FlagShape::parse("1,1,1,1")).to_string() ==
            "1 + 3*t + 5*t^2 + 6*t^3 + 5*t^4 + 3*t^5 + t^6");
    REQUIRE(chow_poincare(FlagShape::parse("1,1")).to_string() == "1 + t");
    REQUIRE(chow_poincare(FlagShape::parse("2,2")).to_string() == "1 + t + 2*t^2 + t^3 + t^4");
    for (const char* s : {"1,2", "2,1", "2,2", "1,1,2", "1,2,1", "3,2", "2,2,2", "1,1,1,1", "1,2,3", "2,4", "1,1,1,2", "3,3"}) {
        ChowRing ring(FlagShape::parse(s));
        INFO(s);
        REQUIRE(chow_poincare_from_basis(ring) == chow_poincare(ring.shape()));
    }
}

TEST_CASE("point classes")
{
    FullFlagRing r3(3);
    REQUIRE(class_of_point(FlagShape::full(3)) == parse_polynomial("x2*x3^2", r3.vars()));
    for (int n = 1; n <= 3; ++n) {
        FlagShape s({1, 1, n});
        FullFlagRing r(n + 2);
        Exponents e(n + 2, 0);
        e[0] = n + 1;
        e[1] = n;
        REQUIRE(class_of_point(s) == r.normal_form(Polynomial::monomial(r.vars(), e, -1)));
        REQUIRE(integrate_fln(s, class_of_point(s)) == 1);
    }
    for (int n = 1; n <= 6; ++n) REQUIRE(integrate_fln(FlagShape::full(n), class_of_point(FlagShape::full(n))) == 1);
    REQUIRE(integrate_fln(FlagShape::parse("1,1"), parse_polynomial("x1", indexed_vars("x", 2))) == -1);
}

TEST_CASE("Poincare duality is unimodular")
{
    for (const char* s : {"1,1,1", "1,1,1,1", "2,2", "1,1,2", "1,3"}) {
        INFO(s);
        REQUIRE(poincare_duality_check(ChowRing(FlagShape::parse(s))));
    }
}

TEST_CASE("partial flag subring bases are monomials in Chern classes")
{
    ChowRing ring(FlagShape::parse("2,2"));
    REQUIRE(ring.labels(1) == std::vector<std::string>{"c1(D1)"});
    REQUIRE(ring.rank(2) == 2);
    // c1(D1) + c1(D2) = 0
    Polynomial s = ring.chern(1, 1) + ring.chern(2, 1);
    REQUIRE(ring.full().normal_form(s).is_zero());
}

TEST_CASE("principal ideal quotient property")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) {
                INFO("N=" << n << " i=" << i << " j=" << j);
                REQUIRE(piqp_check(n, i, j));
            }
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) REQUIRE(fln_annihilator_check(n, i));
}

TEST_CASE("ideal ranks of x_[i]")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i) {
            size_t expect = static_cast<size_t>((n - i) * factorial(n - 1).get_ui());
            REQUIRE(schubert_ideal_rank(n, i) == expect);
        }
}

TEST_CASE("Bruhat count of the upper interval matches the ideal rank")
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            auto w = SchubertPermutation::coxeter_prefix(n, i);
            REQUIRE(w.length() == i);
            REQUIRE(w.inverse_at(1) == i + 1);
            size_t above = 0, by_position = 0;
            for (const auto& v : SchubertPermutation::all(n)) {
                if (w.bruhat_leq(v)) ++above;
                if (v.inverse_at(1) >= i + 1) ++by_position;
                REQUIRE(w.bruhat_leq(v) == (v.inverse_at(1) >= i + 1));
            }
            REQUIRE(above == static_cast<size_t>((n - i) * factorial(n - 1).get_ui()));
            REQUIRE(by_position == above);
        }
}

TEST_CASE("annihilator of the top Chern class")
{
    for (const char* s : {"1,1", "1,2", "2,2", "1,1,2", "2,1", "1,3"}) {
        INFO(s);
        REQUIRE(ann_top_chern(FlagShape::parse(s)));
    }
}

TEST_CASE("shapes drop zero parts")
{
    FlagShape s = FlagShape::parse("(1,0,2)");
    REQUIRE(s.parts() == std::vector<int>{1, 2});
    REQUIRE(s.notices().size() == 1);
    REQUIRE_THROWS_AS(FlagShape::parse("1,-1"), std::invalid_argument);
    REQUIRE_THROWS_AS(FlagShape::parse("1,x"), std::invalid_argument);
}

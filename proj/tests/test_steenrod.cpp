#include "flagcw/steenrod.hpp"
#include "poly_printer.hpp"
#include "random_poly.hpp"

#include <catch_amalgamated.hpp>

using namespace flagcw;

TEST_CASE("Sq2 on generators")
{
    ChowRing ring(FlagShape::full(4));
    const Vars& v = ring.full().vars();
    TwistClass none(4, 0);
    for (int i = 0; i < 4; ++i) {
        Polynomial x = Polynomial::variable(v, i);
        REQUIRE(sq2(ring, x, none) == reduce_mod2(ring.full(), x * x));
    }
    TwistClass l2(4, 0b0010);
    REQUIRE(sq2(ring, Polynomial::constant(v, 1), l2) == reduce_mod2(ring.full(), Polynomial::variable(v, 1)));

    // Wu formula on Chern classes of a block: Sq2 c_j = c_1 c_j + (j+1) c_{j+1}
    ChowRing partial(FlagShape::parse("3,2"));
    for (int j = 1; j <= 3; ++j) {
        Polynomial rhs = partial.chern(1, 1) * partial.chern(1, j);
        if (j < 3 && (j + 1) % 2) rhs += partial.chern(1, j + 1);
        REQUIRE(sq2(partial, partial.chern(1, j), TwistClass(2, 0)) == reduce_mod2(partial.full(), rhs));
    }
}

TEST_CASE("Sq2 squares to zero for every twist")
{
    std::mt19937 rng(9);
    ChowRing ring(FlagShape::full(4));
    for (const auto& tw : TwistClass::all(4))
        for (int trial = 0; trial < 100; ++trial) {
            int d = trial % (ring.top_degree() + 1);
            Polynomial x = testing::random_homogeneous(rng, ring.full().vars(), d, 4);
            REQUIRE(sq2(ring, sq2(ring, x, tw), tw).is_zero());
        }
    for (const char* s : {"1,1,1", "1,1,1,1", "2,2", "1,2,2", "1,1,1,1,1", "2,3", "1,1,2,2"}) {
        FlagShape shape = FlagShape::parse(s);
        for (const auto& tw : TwistClass::all(shape.blocks())) {
            INFO(s << " twist " << tw.to_string());
            REQUIRE(sq2_complex(ChowRing(shape), tw).squares_to_zero);
        }
    }
}

TEST_CASE("Bockstein cohomology of complete flags")
{
    auto fl3 = bockstein_cohomology_ranks(FlagShape::full(3), TwistClass(3, 0));
    REQUIRE(fl3 == std::vector<size_t>{1, 0, 0, 1});
    auto fl4 = bockstein_cohomology_ranks(FlagShape::full(4), TwistClass(4, 0));
    REQUIRE(fl4 == std::vector<size_t>{1, 0, 0, 2, 0, 0, 1});
    for (int n = 2; n <= 6; ++n) {
        FlagShape shape = FlagShape::full(n);
        ChowRing ring(shape);
        for (const auto& tw : TwistClass::all(n)) {
            INFO("N=" << n << " twist " << tw.to_string());
            Sq2Complex c = sq2_complex(ring, tw);
            auto b = c.bockstein();
            std::vector<BigInt> bc;
            for (size_t x : b) bc.push_back(static_cast<unsigned long>(x));
            if (tw.trivial())
                REQUIRE(t_poly(bc) == free_poincare_fln(n));
            else
                REQUIRE(t_poly(bc).is_zero());
            REQUIRE(torsion_poincare_from_sq2(shape, tw) == torsion_poincare_closed(n, !tw.trivial()));
        }
    }
}

TEST_CASE("torsion closed forms")
{
    Vars t = t_vars();
    REQUIRE(torsion_poincare_closed(3, false) == parse_polynomial("2*t^2", t));
    REQUIRE(torsion_poincare_closed(4, false) == parse_polynomial("3*t^2 + 2*t^3 + 2*t^4 + 3*t^5", t));
    REQUIRE(torsion_poincare_closed(3, true) == parse_polynomial("t + t^2 + t^3", t));
    REQUIRE(torsion_poincare_closed(1, false).is_zero());
    REQUIRE(free_poincare_fln(3) == parse_polynomial("1 + t^3", t));
    REQUIRE(free_poincare_fln(4) == parse_polynomial("(1 + t^3)^2", t));
    // P2 = P0 + (1+t)/t P_Tor
    for (int n = 1; n <= 8; ++n) {
        Polynomial back = free_poincare_fln(n) * t_poly({0, 1}) + t_poly({1, 1}) * torsion_poincare_closed(n, false);
        REQUIRE(back == mod2_poincare_fln(n) * t_poly({0, 1}));
        REQUIRE(mod2_poincare_fln(n) == chow_poincare(FlagShape::full(n)));
    }
}

TEST_CASE("rank-nullity in every degree for partial flags")
{
    for (const char* s : {"2,2", "1,2,1", "2,3", "1,1,2", "3,3"}) {
        FlagShape shape = FlagShape::parse(s);
        ChowRing ring(shape);
        for (const auto& tw : TwistClass::all(shape.blocks())) {
            Sq2Complex c = sq2_complex(ring, tw);
            for (size_t q = 0; q < c.dims.size(); ++q) {
                size_t in = q ? c.ranks[q - 1] : 0;
                REQUIRE(c.ranks[q] + in <= c.dims[q]);
                REQUIRE(c.bockstein()[q] + c.ranks[q] + in == c.dims[q]);
            }
        }
    }
}

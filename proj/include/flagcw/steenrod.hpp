#pragma once

#include "flagcw/flagchow.hpp"

#include <vector>

namespace flagcw {

// Integral lift of the twisted Sq^2 on the full flag ring: x^a -> sum_i (a_i + t_i) x^{a + e_i}
// with t_i = 1 for the variables of twisted blocks. It is the derivation sum_i x_i^2 d/dx_i
// plus multiplication by the twist class, and preserves the Chern-class subring.
Polynomial sq2_lift(const FlagShape& shape, const Polynomial& p, const TwistClass& twist);

// Coefficients reduced into {0, 1} on standard monomials.
Polynomial reduce_mod2(const FullFlagRing& ring, const Polynomial& p);

// Sq^2 followed by reduction mod 2.
Polynomial sq2(const ChowRing& ring, const Polynomial& x, const TwistClass& twist);

// Sq^2 : Ch^q -> Ch^{q+1} on the subring basis, one column per source basis element.
F2Matrix sq2_matrix(const ChowRing& ring, int q, const TwistClass& twist);

struct Sq2Complex {
    std::vector<size_t> dims;   // dim Ch^q
    std::vector<size_t> ranks;  // rank of Sq^2 out of Ch^q
    bool squares_to_zero = true;

    // dim ker / im in each degree
    std::vector<size_t> bockstein() const;
};

Sq2Complex sq2_complex(const ChowRing& ring, const TwistClass& twist);
std::vector<size_t> bockstein_cohomology_ranks(const FlagShape& shape, const TwistClass& twist);

// sum_q rank(Sq^2 out of Ch^q) t^{q+1}
Polynomial torsion_poincare_from_sq2(const FlagShape& shape, const TwistClass& twist);

// prod_{j <= N} (1 - t^j) / (1 - t)
Polynomial mod2_poincare_fln(int n);
// prod_{i <= k} (1 + t^{4i-1}) for N = 2k+1; (1 + t^{2k-1}) prod_{i < k} (1 + t^{4i-1}) for N = 2k.
Polynomial free_poincare_fln(int n);
// t/(1+t) (P2 - P0) for the trivial twist and t/(1+t) P2 otherwise.
Polynomial torsion_poincare_closed(int n, bool twisted);

}  // namespace flagcw

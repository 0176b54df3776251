#pragma once

#include "flagcw/poly.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace flagcw {

// a, b, c, ...: Euler classes of rank-2 building blocks, of degree 2.
Vars euler_root_vars(int count);
// t1, t2, ...: Chern roots of line-bundle building blocks, of degree 1.
Vars chern_root_vars(int count);

// Total Pontryagin class of Sym^m A for A of rank 2 with Euler class a.
Polynomial pontryagin_sym_rk2(int m);
// (2r+1)!! a^{r+1} for m = 2r+1; zero for even m.
Polynomial euler_sym_rk2(int m);
// e(A (x) B) = a^2 - b^2.
Polynomial euler_tensor_rk2();
// Euler class of A (x) B from Pontryagin classes: pa[i] = p_{2i}(A) (i = 0..m), pb likewise.
// Sums over lambda in the m x n box the terms (-1)^{|lt|} Delta_{lambda^T}(p(A)) Delta_{lt}(p(B)),
// lt being the box complement of lambda.
Polynomial euler_tensor_cauchy(const std::vector<Polynomial>& pa, const std::vector<Polynomial>& pb);
// e(Sym^M A (x) Sym^N B) in a, b.
Polynomial euler_sym_tensor(int m, int n);
// e(Sym^k (A + B)) as the product of e(Sym^{k-i} A (x) Sym^i B).
Polynomial euler_sym_sum_rk2(int k);
int euler_dual_sign(int rank);

// (rank, c1 multiple) of Sym^l S for S of rank s: (C(l+s-1, s-1), C(l+s-1, s)).
std::pair<BigInt, BigInt> sym_rank_c1(int l, int s);

// Conditions for Sym^l1(S1^dual) + Sym^l2(S2^dual) on Fl(2,2,d) to be relatively oriented of
// rank equal to the dimension 4(d+1).
struct OrientabilityCheck {
    bool d_even = false;
    bool c1_even = false;
    bool rank_even = false;
    bool rank_matches_dimension = false;
    bool all() const { return d_even && c1_even && rank_even && rank_matches_dimension; }
};
OrientabilityCheck orientability_conditions(int l1, int l2, int d);

// Bundle expressions: S<i> | D<i> | triv(r) | dual(e) | sym^k(e) | e+e | e*e, with parentheses.
// D<i> is a building block and S<i> = D1 + ... + Di.
struct BundleExpr {
    enum class Kind { Block, Taut, Trivial, Dual, Sym, Sum, Tensor };
    Kind kind = Kind::Trivial;
    int value = 0;  // block index, trivial rank or symmetric power
    std::vector<BundleExpr> children;

    std::string to_string() const;
    int max_block() const;
};

BundleExpr parse_bundle(const std::string& text);

struct BundleClasses {
    int rank = 0;
    Polynomial euler;
    Polynomial total;  // Pontryagin class for rank-2 blocks, Chern class for line blocks
};

// block_rank 2: blocks are oriented rank-2 bundles, weights come in +- pairs and the Euler class
// takes the member of each pair whose first nonzero coefficient is positive.
// block_rank 1: blocks are line bundles and the Euler class is the top Chern class.
BundleClasses evaluate_bundle(const BundleExpr& e, int block_rank, int blocks = 0);

}  // namespace flagcw

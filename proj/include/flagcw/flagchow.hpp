#pragma once

#include "flagcw/graded.hpp"
#include "flagcw/lattice.hpp"
#include "flagcw/poly.hpp"
#include "flagcw/shape.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagcw {

// Chow ring of the complete flag variety Fl(N): Z[x_1..x_N] modulo the elementary symmetric
// polynomials. Normal forms use the lex Groebner basis g_k = h_k(x_k, ..., x_N) whose standard
// monomials are x^a with a_k <= k - 1.
class FullFlagRing {
public:
    using Sparse = std::vector<std::pair<size_t, BigInt>>;

    explicit FullFlagRing(int n);

    int n() const { return n_; }
    int top_degree() const { return n_ * (n_ - 1) / 2; }
    const Vars& vars() const { return vars_; }
    size_t rank(int d) const;
    size_t total_rank() const;
    const std::vector<Exponents>& basis(int d) const;
    static bool is_standard(const Exponents& e);
    const std::vector<Polynomial>& groebner_basis() const { return groebner_; }

    // Normal form of a monomial as coordinates in its degree.
    const Sparse& reduce_monomial(const Exponents& e) const;
    IntVector coordinates(const Polynomial& p, int d) const;
    Polynomial normal_form(const Polynomial& p) const;
    Polynomial from_coordinates(int d, const IntVector& c) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;

    Polynomial point_class() const;
    BigInt integrate(const Polynomial& p) const;

private:
    struct Hash {
        size_t operator()(const Exponents& e) const;
    };

    int n_;
    Vars vars_;
    std::vector<std::vector<Exponents>> basis_;
    std::vector<std::unordered_map<Exponents, size_t, Hash>> index_;
    std::vector<Polynomial> groebner_;
    std::vector<std::vector<Exponents>> tails_;  // monomials of g_k other than x_k^k
    mutable std::unordered_map<Exponents, Sparse, Hash> memo_;
};

// Chow ring of a partial flag variety Fl(D), realised inside CH(Fl(N)) through c_j(D_i) = e_j of
// the block variables. Each degree carries a Z-basis, made of monomials in the Chern classes
// whenever those form a basis.
class ChowRing {
public:
    using Namer = std::function<std::string(int block, int j)>;

    explicit ChowRing(FlagShape shape, Namer namer = {});

    const FlagShape& shape() const { return shape_; }
    const FullFlagRing& full() const { return full_; }
    int top_degree() const { return shape_.dimension(); }

    Polynomial chern(int block, int j) const;
    Polynomial top_chern(int block) const { return chern(block, shape_.part(block)); }
    std::string generator_name(int block, int j) const;

    size_t rank(int d) const;
    const LatticeBasis& lattice(int d) const;
    const std::vector<std::string>& labels(int d) const;
    // Coordinates of the degree-d part; nullopt when it is not in the subring.
    std::optional<IntVector> coordinates(const Polynomial& p, int d) const;
    Polynomial element(int d, const IntVector& coords) const;
    IntMatrix multiplication_matrix(const Polynomial& f, int d) const;
    Multiplier multiplier(const Polynomial& f) const;
    RankFn rank_fn() const;

    Polynomial point_class() const;
    BigInt integrate(const Polynomial& p) const;

    // Presentation: variables c_j(D_i) of degree j, pulled back to the full flag ring.
    const Vars& chern_vars() const { return chern_vars_; }
    Polynomial pullback(const Polynomial& in_chern_vars) const;

private:
    void build(int d) const;

    FlagShape shape_;
    FullFlagRing full_;
    Namer namer_;
    Vars chern_vars_;
    std::vector<std::pair<int, int>> generators_;  // (block, j)
    std::vector<Polynomial> generator_polys_;
    mutable std::vector<std::optional<LatticeBasis>> lattice_;
    mutable std::vector<std::vector<std::string>> labels_;
    mutable std::vector<std::vector<std::optional<std::vector<int>>>> exps_;
};

Polynomial chow_poincare(const FlagShape& shape);
// Ranks of the graded pieces found from the lattice bases.
Polynomial chow_poincare_from_basis(const ChowRing& ring);

Polynomial normal_form_fln(int n, const Polynomial& p);

// x_[i] = x_1 x_2 ... x_i in the full flag ring.
Polynomial schubert_monomial(const FullFlagRing& ring, int i);
Polynomial schubert_monomial(const FullFlagRing& ring, const std::vector<int>& indices);
size_t schubert_ideal_rank(int n, int i);
// Total rank of the ideal generated by an arbitrary set of elements.
size_t ideal_total_rank(const ChowRing& ring, const std::vector<Polynomial>& gens);

struct PieceCheck {
    int degree = 0;
    uint32_t twist = 0;
    bool ok = false;
};

// (I : J) == H degree by degree.
std::vector<PieceCheck> ideal_quotient_degreewise(const ChowRing& ring, const std::vector<Polynomial>& ideal,
                                                  const std::vector<Polynomial>& by,
                                                  const std::vector<Polynomial>& expected);
// (x_[i] : x_[j]) == (x_[i]\[j]) for j < i.
bool piqp_check(int n, int i, int j);
// Ann(x_[i]) == (x_[N]\[i]).
bool fln_annihilator_check(int n, int i);
// Ann(c_top(D_block)) == (prod_{j != block} c_top(D_j)).
bool ann_top_chern(const FlagShape& shape, int block = 0);

Polynomial class_of_point(const FlagShape& shape);
BigInt integrate_fln(const FlagShape& shape, const Polynomial& p);

// Pairing CH^d x CH^{top-d} -> Z has determinant +-1 in every degree.
bool poincare_duality_check(const ChowRing& ring);

class SchubertPermutation {
public:
    explicit SchubertPermutation(std::vector<int> one_line);
    static SchubertPermutation identity(int n);
    // s_1 s_2 ... s_i acting on positions.
    static SchubertPermutation coxeter_prefix(int n, int i);
    static std::vector<SchubertPermutation> all(int n);

    const std::vector<int>& one_line() const { return w_; }
    int length() const;
    int inverse_at(int value) const;
    bool bruhat_leq(const SchubertPermutation& o) const;
    std::string to_string() const;

private:
    std::vector<int> w_;
};

}  // namespace flagcw

#pragma once

#include "flagcw/flagchow.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagcw {

// Element of W_D: for each (set I of Euler classes, set J of exterior generators) a
// coefficient in the Pontryagin subring A, written in the flag variables of Fl(D').
struct WElement {
    using Key = std::pair<uint32_t, uint32_t>;
    std::map<Key, Polynomial> parts;

    bool is_zero() const { return parts.empty(); }
    bool operator==(const WElement& o) const { return parts == o.parts; }
    WElement& operator+=(const WElement& o);
    WElement operator-() const;
};

WElement operator+(WElement a, const WElement& b);
WElement operator-(WElement a, const WElement& b);

// W_D = Sigma_D (x) Lambda. Sigma_D is generated over A = CH(Fl(D')), D' = floor(D/2) with
// c_j -> p_{2j} and degrees times 4, by Euler classes e_i (d_i even) with e_i^2 = p_top(D_i),
// and prod e_i = 0 when every d_i is even. Lambda is exterior on R_l, l = q+1..n.
class WRing {
public:
    enum class Parity { AllEven, Mixed, AllOdd };

    struct Generator {
        std::string name;
        int degree = 0;
        TwistClass twist;
    };

    explicit WRing(FlagShape shape);

    const FlagShape& shape() const { return shape_; }
    Parity parity() const { return parity_; }
    std::string parity_name() const;
    const ChowRing& base() const { return base_; }
    const std::vector<int>& euler_blocks() const { return euler_blocks_; }
    int q() const { return q_; }
    int n() const { return n_; }
    // Degrees of R_{q+1}, ..., R_n.
    const std::vector<int>& exterior_degrees() const { return ext_degrees_; }
    std::vector<Generator> generators() const;
    int top_degree() const;
    std::vector<TwistClass> twists() const { return TwistClass::all(shape_.blocks()); }

    WElement zero() const { return {}; }
    WElement one() const;
    WElement constant(const BigInt& c) const;
    WElement from_base(const Polynomial& a) const;
    WElement pontryagin(int block, int j) const;  // p_{2j}(D_block)
    WElement euler(int block) const;
    WElement exterior(int l) const;  // R_l
    WElement multiply(const WElement& a, const WElement& b) const;
    WElement normal_form(const WElement& x) const;
    std::string to_string(const WElement& x) const;
    // Grade of a nonzero homogeneous element.
    std::optional<Grade> grade_of(const WElement& x) const;

    size_t rank(const Grade& g) const;
    std::vector<std::string> basis_labels(const Grade& g) const;
    WElement basis_element(const Grade& g, size_t index) const;
    IntVector coordinates(const WElement& x, const Grade& g) const;
    Multiplier multiplier(const WElement& f) const;
    RankFn rank_fn() const;
    Polynomial poincare(const TwistClass& twist) const;
    size_t total_rank() const;

    const Polynomial& p_top(int block) const { return p_top_[block - 1]; }

private:
    struct Component {
        uint32_t euler = 0;
        uint32_t ext = 0;
        int k = 0;  // degree in A
    };

    std::vector<Component> components(const Grade& g) const;
    size_t component_rank(const Component& c) const;
    const QuotientBasis& quotient(uint32_t euler, int k) const;
    int euler_degree(uint32_t mask) const;
    int exterior_degree(uint32_t mask) const;
    uint32_t twist_of(uint32_t euler_mask) const;
    Polynomial base_coefficient(const Component& c, size_t index) const;
    std::string base_label(const Component& c, size_t index) const;
    std::string a_label(int k, size_t row) const;

    FlagShape shape_;
    FlagShape half_;
    ChowRing base_;
    std::vector<int> half_index_;  // original block -> block of D', 0 when it vanishes
    Parity parity_ = Parity::AllOdd;
    std::vector<int> euler_blocks_;
    uint32_t euler_mask_ = 0;
    int q_ = 0, n_ = 0;
    std::vector<int> ext_degrees_;
    std::vector<Polynomial> p_top_;
    mutable std::map<std::pair<uint32_t, int>, QuotientBasis> quotients_;
    mutable std::optional<int> top_;
};

struct AnnihilatorReport {
    int block = 0;
    WElement generator;
    std::string generator_text;
    std::vector<PieceCheck> pieces;
    std::optional<Grade> first_mismatch;
    bool ok() const { return !first_mismatch.has_value(); }
};

// Ann(e_block) == (x) degree by degree up to degree_bound (default: top degree).
AnnihilatorReport ann_euler(const WRing& ring, int block, int degree_bound = -1);

Polynomial wd_poincare(const FlagShape& shape, const TwistClass& twist);

// In the real cohomology of Fl(1,1,n) every top monomial x1^i x2^{2n+1-i} with i outside
// {n, n+1} vanishes. Returns the coefficients of x1^{n+1} x2^n and x1^n x2^{n+1} in p.
std::pair<BigInt, BigInt> real_fl11n_reduce(int n, const Polynomial& p);

}  // namespace flagcw

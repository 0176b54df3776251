#pragma once

#include "flagcw/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace flagcw {

// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, padded
    Partition transpose() const;
    bool fits(int rows, int cols) const;
    // Complement inside the rows x cols box: n - lambda_{m+1-i}.
    Partition complement(int rows, int cols) const;
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_of(int n, int max_length);

// det(v_{lambda_i + j - i}) with v_0 = 1 and v_k = 0 for k < 0; v is queried for k >= 1.
template <class T>
T jacobi_trudi_delta(const Partition& lambda, const std::function<T(int)>& v, const T& zero, const T& one);

BigInt jacobi_trudi_delta(const Partition& lambda, const std::vector<BigInt>& v);
Polynomial jacobi_trudi_delta(const Partition& lambda, const std::vector<Polynomial>& v, const Vars& vars);

// e_k and h_k of all variables of the ring.
Polynomial elementary_symmetric(const Vars& vars, int k);
Polynomial complete_symmetric(const Vars& vars, int k);
std::vector<BigInt> elementary_values(const std::vector<BigInt>& points);

// s_lambda in all variables of the ring, via the bialternant.
Polynomial schur_polynomial(const Partition& lambda, const Vars& vars);
BigInt schur_at(const Partition& lambda, const std::vector<BigInt>& points);

// s_lambda(M^2, (M-2)^2, ...) over the positive values M - 2i.
BigInt q_spec(const Partition& lambda, int m);

bool is_symmetric(const Polynomial& p);
// Coefficients of p in the Schur basis; p must be symmetric in all its variables.
std::map<Partition, BigInt> schur_expand(const Polynomial& p);

// Integral over Gr(k, n) of a symmetric polynomial in the k Chern roots of the dual
// tautological subbundle: the coefficient of s_{(n-k)^k}. Only the degree k(n-k) part counts.
BigInt grassmann_integrate(int k, int n, const Polynomial& p);

// Pushforward along the relative Grassmannian of k-planes in a rank-r bundle with roots
// t_1..t_r (the variables of g). sub_roots lists the k roots of the tautological subbundle.
Polynomial grassmann_bundle_pushforward(const std::vector<size_t>& sub_roots, const Polynomial& g);

}  // namespace flagcw

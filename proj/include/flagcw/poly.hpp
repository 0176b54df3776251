#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagcw {

using BigInt = mpz_class;
using Exponents = std::vector<int>;

BigInt factorial(int n);
BigInt double_factorial(int n);
BigInt binomial(long n, long k);

// Variable names and weighted degrees, shared between polynomials of one ring.
class VariableSet {
public:
    VariableSet(std::vector<std::string> names, std::vector<int> weights);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    int weight(size_t i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<size_t> find(const std::string& name) const;

    bool operator==(const VariableSet& o) const
    {
        return names_ == o.names_ && weights_ == o.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using Vars = std::shared_ptr<const VariableSet>;

Vars make_vars(std::vector<std::string> names, std::vector<int> weights);
// prefix1, ..., prefixn, all of the given weight.
Vars indexed_vars(const std::string& prefix, int n, int weight = 1);

int weighted_degree(const Exponents& e, const VariableSet& v);

// Graded lexicographic comparison: weighted degree, then lex with x1 largest.
bool grlex_less(const Exponents& a, const Exponents& b, const VariableSet& v);

class Polynomial {
public:
    using Term = std::pair<Exponents, BigInt>;

    explicit Polynomial(Vars vars);
    static Polynomial constant(Vars vars, const BigInt& c);
    static Polynomial variable(Vars vars, size_t i);
    static Polynomial monomial(Vars vars, Exponents e, const BigInt& c = 1);
    // Combines like terms and drops zeros.
    static Polynomial from_terms(Vars vars, std::vector<Term> terms);
    // Terms already sorted ascending, distinct and nonzero.
    static Polynomial from_canonical(Vars vars, std::vector<Term> terms);

    const Vars& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    // Ascending graded-lex order.
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int degree_of(const Exponents& e) const { return weighted_degree(e, *vars_); }
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    BigInt coefficient(const Exponents& e) const;
    Polynomial homogeneous_part(int d) const;
    BigInt evaluate(const std::vector<BigInt>& point) const;

    // images[i] replaces variable i; images share one variable set.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Same exponents, relabelled onto another variable set with as many variables.
    Polynomial rebase(Vars other) const;
    Polynomial permute(const std::vector<size_t>& perm) const;  // var i -> var perm[i]

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& c);
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Terms by increasing degree; within a degree x1-heavy terms first.
    std::string to_string() const;

private:
    void require_same(const Polynomial& o) const;

    Vars vars_;
    std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const BigInt& c);
Polynomial operator*(const BigInt& c, Polynomial a);

Polynomial product(const std::vector<Polynomial>& factors, Vars vars);

// Quotient if d divides p exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// Parses "<coeff>*<var>^<exp>*... + ..." over the given variables.
Polynomial parse_polynomial(const std::string& text, Vars vars);

// Univariate helpers on a one-variable ring named t.
Vars t_vars();
Polynomial t_poly(const std::vector<BigInt>& coeffs);  // coeffs[i] is the t^i coefficient
std::vector<BigInt> t_coefficients(const Polynomial& p);

}  // namespace flagcw

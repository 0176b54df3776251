#include "flagcw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace flagcw {

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(int n)
{
    BigInt r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

VariableSet::VariableSet(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights))
{
    if (names_.size() != weights_.size())
        throw std::invalid_argument("variable names and weights differ in length");
}

std::optional<size_t> VariableSet::find(const std::string& name) const
{
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Vars make_vars(std::vector<std::string> names, std::vector<int> weights)
{
    return std::make_shared<const VariableSet>(std::move(names), std::move(weights));
}

Vars indexed_vars(const std::string& prefix, int n, int weight)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names), std::vector<int>(n, weight));
}

int weighted_degree(const Exponents& e, const VariableSet& v)
{
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * v.weight(i);
    return d;
}

bool grlex_less(const Exponents& a, const Exponents& b, const VariableSet& v)
{
    int da = weighted_degree(a, v), db = weighted_degree(b, v);
    if (da != db) return da < db;
    return a < b;
}

namespace {

struct ExpHash {
    size_t operator()(const Exponents& e) const
    {
        size_t h = 1469598103934665603ull;
        for (int x : e) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
        return h;
    }
};

using Accumulator = std::unordered_map<Exponents, BigInt, ExpHash>;

std::vector<Polynomial::Term> drain(Accumulator& acc, const VariableSet& v)
{
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, std::move(c));
    std::sort(out.begin(), out.end(),
              [&](const auto& x, const auto& y) { return grlex_less(x.first, y.first, v); });
    return out;
}

std::string format_monomial(const Exponents& e, const VariableSet& v)
{
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += v.name(i);
        if (e[i] > 1) s += '^' + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

Polynomial::Polynomial(Vars vars) : vars_(std::move(vars))
{
    if (!vars_) throw std::invalid_argument("polynomial needs a variable set");
}

Polynomial Polynomial::constant(Vars vars, const BigInt& c)
{
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace_back(Exponents(p.nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(Vars vars, size_t i)
{
    Exponents e(vars->size(), 0);
    if (i >= e.size()) throw std::out_of_range("variable index");
    e[i] = 1;
    return monomial(std::move(vars), std::move(e));
}

Polynomial Polynomial::monomial(Vars vars, Exponents e, const BigInt& c)
{
    Polynomial p(vars);
    if (e.size() != p.nvars()) throw std::invalid_argument("exponent vector has wrong length");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (c != 0) p.terms_.emplace_back(std::move(e), c);
    return p;
}

Polynomial Polynomial::from_canonical(Vars vars, std::vector<Term> terms)
{
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::from_terms(Vars vars, std::vector<Term> terms)
{
    Polynomial p(vars);
    Accumulator acc;
    for (auto& [e, c] : terms) {
        if (e.size() != p.nvars()) throw std::invalid_argument("exponent vector has wrong length");
        acc[e] += c;
    }
    p.terms_ = drain(acc, *p.vars_);
    return p;
}

int Polynomial::max_degree() const
{
    return terms_.empty() ? -1 : degree_of(terms_.back().first);
}

int Polynomial::min_degree() const
{
    return terms_.empty() ? -1 : degree_of(terms_.front().first);
}

bool Polynomial::is_homogeneous() const { return min_degree() == max_degree(); }

BigInt Polynomial::coefficient(const Exponents& e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [&](const Term& t, const Exponents& x) {
        return grlex_less(t.first, x, *vars_);
    });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

Polynomial Polynomial::homogeneous_part(int d) const
{
    Polynomial p(vars_);
    for (const auto& t : terms_)
        if (degree_of(t.first) == d) p.terms_.push_back(t);
    return p;
}

BigInt Polynomial::evaluate(const std::vector<BigInt>& point) const
{
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        BigInt v = c;
        for (size_t i = 0; i < e.size(); ++i) {
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
            v *= pw;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != nvars()) throw std::invalid_argument("substitution needs one image per variable");
    if (images.empty()) return *this;
    Vars target = images[0].vars();
    for (const auto& im : images)
        if (!(*im.vars() == *target)) throw std::invalid_argument("substitution images use different rings");
    std::vector<std::vector<Polynomial>> powers(nvars());
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
            term = term * pw[e[i]];
        }
        result += term;
    }
    return result;
}

Polynomial Polynomial::rebase(Vars other) const
{
    if (other->size() != nvars()) throw std::invalid_argument("rebase needs the same number of variables");
    return from_terms(std::move(other), terms_);
}

Polynomial Polynomial::permute(const std::vector<size_t>& perm) const
{
    if (perm.size() != nvars()) throw std::invalid_argument("permutation has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        Exponents f(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
        out.emplace_back(std::move(f), c);
    }
    return from_terms(vars_, std::move(out));
}

void Polynomial::require_same(const Polynomial& o) const
{
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
        throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && grlex_less(terms_[i].first, o.terms_[j].first, *vars_))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || grlex_less(o.terms_[j].first, terms_[i].first, *vars_)) {
            out.push_back(o.terms_[j++]);
        } else {
            BigInt c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.emplace_back(std::move(terms_[i].first), c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial r = constant(vars_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    require_same(o);
    return terms_ == o.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
        int da = degree_of(a->first), db = degree_of(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        BigInt c = t->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono = format_monomial(t->first, *vars_);
        if (mono.empty())
            os << c.get_str();
        else if (c == 1)
            os << mono;
        else
            os << c.get_str() << '*' << mono;
    }
    return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.vars() != b.vars() && !(*a.vars() == *b.vars()))
        throw std::invalid_argument("polynomials live in different rings");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.vars());
    Accumulator acc;
    acc.reserve(a.size() * b.size());
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = acc.try_emplace(e);
            mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    return Polynomial::from_canonical(a.vars(), drain(acc, *a.vars()));
}

Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }

Polynomial product(const std::vector<Polynomial>& factors, Vars vars)
{
    Polynomial r = Polynomial::constant(vars, 1);
    for (const auto& f : factors) r = r * f;
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d)
{
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    const auto& lead = d.terms().back();
    Polynomial rem = p;
    std::vector<Polynomial::Term> quotient;
    while (!rem.is_zero()) {
        const auto& top = rem.terms().back();
        Exponents e(top.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = top.first[i] - lead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (!mpz_divisible_p(top.second.get_mpz_t(), lead.second.get_mpz_t())) return std::nullopt;
        BigInt c = top.second / lead.second;
        quotient.emplace_back(e, c);
        rem -= Polynomial::monomial(p.vars(), e, c) * d;
    }
    return Polynomial::from_terms(p.vars(), std::move(quotient));
}

namespace {

// sum := term (('+'|'-') term)*; term := unary ('*' unary)*; unary := '-' unary | power;
// power := atom ('^' int)?; atom := int | name | '(' sum ')'
class PolyParser {
public:
    PolyParser(const std::string& text, Vars vars) : text_(text), vars_(std::move(vars))
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Polynomial parse()
    {
        if (s_.empty()) throw std::invalid_argument("empty polynomial");
        Polynomial p = sum();
        if (i_ != s_.size()) fail("unexpected '" + s_.substr(i_) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("cannot parse polynomial '" + text_ + "': " + why);
    }

    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

    std::string digits()
    {
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return s_.substr(st, i_ - st);
    }

    Polynomial sum()
    {
        Polynomial p = term();
        while (peek('+') || peek('-')) {
            bool minus = s_[i_++] == '-';
            Polynomial q = term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    Polynomial term()
    {
        Polynomial p = unary();
        while (peek('*')) {
            ++i_;
            p = p * unary();
        }
        return p;
    }

    Polynomial unary()
    {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        Polynomial p = atom();
        if (peek('^')) {
            ++i_;
            std::string k = digits();
            if (k.empty()) fail("missing exponent");
            if (k.size() > 6) fail("exponent too large");
            p = p.pow(std::stoi(k));
        }
        return p;
    }

    Polynomial atom()
    {
        if (i_ >= s_.size()) fail("unexpected end");
        if (peek('(')) {
            ++i_;
            Polynomial p = sum();
            if (!peek(')')) fail("expected ')'");
            ++i_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return Polynomial::constant(vars_, BigInt(digits()));
        size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (st == i_) fail("expected a factor at '" + s_.substr(st) + "'");
        std::string name = s_.substr(st, i_ - st);
        auto idx = vars_->find(name);
        if (!idx) fail("unknown variable " + name);
        return Polynomial::variable(vars_, *idx);
    }

    std::string text_, s_;
    Vars vars_;
    size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, Vars vars) { return PolyParser(text, std::move(vars)).parse(); }

Vars t_vars()
{
    static const Vars v = make_vars({"t"}, {1});
    return v;
}

Polynomial t_poly(const std::vector<BigInt>& coeffs)
{
    std::vector<Polynomial::Term> terms;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) terms.emplace_back(Exponents{static_cast<int>(i)}, coeffs[i]);
    return Polynomial::from_terms(t_vars(), std::move(terms));
}

std::vector<BigInt> t_coefficients(const Polynomial& p)
{
    if (p.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
    std::vector<BigInt> out(std::max(0, p.max_degree() + 1), BigInt(0));
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

}  // namespace flagcw

#include "flagcw/charclass.hpp"
#include "flagcw/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace flagcw {

Vars euler_root_vars(int count)
{
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) {
        if (i < 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("a" + std::to_string(i + 1));
    }
    return make_vars(std::move(names), std::vector<int>(count, 2));
}

Vars chern_root_vars(int count) { return indexed_vars("t", count, 1); }

Polynomial pontryagin_sym_rk2(int m)
{
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    Vars v = euler_root_vars(1);
    Polynomial p = Polynomial::constant(v, 1);
    for (int k = m; k > 0; k -= 2) p = p * (Polynomial::constant(v, 1) + Polynomial::monomial(v, {2}, k * k));
    return p;
}

Polynomial euler_sym_rk2(int m)
{
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    Vars v = euler_root_vars(1);
    if (m % 2 == 0) return Polynomial(v);
    return Polynomial::monomial(v, {(m + 1) / 2}, double_factorial(m));
}

Polynomial euler_tensor_rk2()
{
    Vars v = euler_root_vars(2);
    return Polynomial::monomial(v, {2, 0}) - Polynomial::monomial(v, {0, 2});
}

Polynomial euler_tensor_cauchy(const std::vector<Polynomial>& pa, const std::vector<Polynomial>& pb)
{
    if (pa.empty() || pb.empty()) throw std::invalid_argument("Pontryagin lists start with p_0 = 1");
    const Vars& v = pa[0].vars();
    const int m = static_cast<int>(pa.size()) - 1, n = static_cast<int>(pb.size()) - 1;
    Polynomial total(v);
    for (const auto& lambda : partitions_in_box(m, n)) {
        Partition comp = lambda.complement(m, n);
        Polynomial term = jacobi_trudi_delta(lambda.transpose(), pa, v) * jacobi_trudi_delta(comp, pb, v);
        if (comp.size() % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

Polynomial euler_sym_tensor(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("negative symmetric power");
    Vars v = euler_root_vars(2);
    if (m % 2 == 0 && n % 2 == 0) return Polynomial(v);
    const int rows = (m + 1) / 2, cols = (n + 1) / 2;
    Polynomial e(v);
    for (const auto& lambda : partitions_in_box(rows, cols)) {
        Partition comp = lambda.complement(rows, cols);
        BigInt c = q_spec(lambda, m) * q_spec(comp.transpose(), n);
        if (comp.size() % 2) c = -c;
        e += Polynomial::monomial(v, {2 * lambda.size(), 2 * comp.size()}, c);
    }
    if (m % 2 == 0) e = e * Polynomial::monomial(v, {0, cols}, double_factorial(n));
    if (n % 2 == 0) e = e * Polynomial::monomial(v, {rows, 0}, double_factorial(m));
    return e;
}

Polynomial euler_sym_sum_rk2(int k)
{
    Polynomial p = Polynomial::constant(euler_root_vars(2), 1);
    for (int i = 0; i <= k; ++i) p = p * euler_sym_tensor(k - i, i);
    return p;
}

int euler_dual_sign(int rank) { return rank % 2 ? -1 : 1; }

std::pair<BigInt, BigInt> sym_rank_c1(int l, int s)
{
    if (l < 0 || s < 1) throw std::invalid_argument("sym_rank_c1 needs l >= 0 and s >= 1");
    return {binomial(l + s - 1, s - 1), binomial(l + s - 1, s)};
}

OrientabilityCheck orientability_conditions(int l1, int l2, int d)
{
    auto [r1, c1] = sym_rank_c1(l1, 2);
    auto [r2, c2] = sym_rank_c1(l2, 4);
    OrientabilityCheck out;
    out.d_even = d % 2 == 0;
    out.c1_even = mpz_even_p(c1.get_mpz_t()) && mpz_even_p(c2.get_mpz_t());
    out.rank_even = mpz_even_p(r1.get_mpz_t()) && mpz_even_p(r2.get_mpz_t());
    out.rank_matches_dimension = r1 + r2 == BigInt(4) * (d + 1);
    return out;
}

std::string BundleExpr::to_string() const
{
    switch (kind) {
    case Kind::Block: return "D" + std::to_string(value);
    case Kind::Taut: return "S" + std::to_string(value);
    case Kind::Trivial: return "triv(" + std::to_string(value) + ")";
    case Kind::Dual: return "dual(" + children[0].to_string() + ")";
    case Kind::Sym: return "sym^" + std::to_string(value) + "(" + children[0].to_string() + ")";
    case Kind::Sum: return "(" + children[0].to_string() + "+" + children[1].to_string() + ")";
    case Kind::Tensor: return "(" + children[0].to_string() + "*" + children[1].to_string() + ")";
    }
    return "";
}

int BundleExpr::max_block() const
{
    int m = (kind == Kind::Block || kind == Kind::Taut) ? value : 0;
    for (const auto& c : children) m = std::max(m, c.max_block());
    return m;
}

namespace {

class BundleParser {
public:
    explicit BundleParser(const std::string& text) : text_(text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    BundleExpr parse()
    {
        BundleExpr e = sum();
        if (pos_ != s_.size()) fail("unexpected input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        std::string where = pos_ < s_.size() ? "at '" + s_.substr(pos_, 12) + "'" : "at end of input";
        throw std::invalid_argument("cannot parse bundle '" + text_ + "': " + why + " " + where);
    }

    bool eat(const std::string& tok)
    {
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    int number()
    {
        size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected a number");
        if (pos_ - st > 6) fail("number too large");
        return std::stoi(s_.substr(st, pos_ - st));
    }

    BundleExpr sum()
    {
        BundleExpr e = product();
        while (eat("+")) e = BundleExpr{BundleExpr::Kind::Sum, 0, {e, product()}};
        return e;
    }

    BundleExpr product()
    {
        BundleExpr e = factor();
        while (eat("*")) e = BundleExpr{BundleExpr::Kind::Tensor, 0, {e, factor()}};
        return e;
    }

    BundleExpr wrapped()
    {
        if (!eat("(")) fail("expected '('");
        BundleExpr e = sum();
        if (!eat(")")) fail("expected ')'");
        return e;
    }

    BundleExpr factor()
    {
        if (eat("(")) {
            BundleExpr e = sum();
            if (!eat(")")) fail("expected ')'");
            return e;
        }
        if (eat("dual")) return BundleExpr{BundleExpr::Kind::Dual, 0, {wrapped()}};
        if (eat("sym^")) {
            int k = number();
            return BundleExpr{BundleExpr::Kind::Sym, k, {wrapped()}};
        }
        if (eat("triv")) {
            if (!eat("(")) fail("expected '('");
            int r = number();
            if (!eat(")")) fail("expected ')'");
            return BundleExpr{BundleExpr::Kind::Trivial, r, {}};
        }
        if (eat("S")) {
            int i = number();
            if (i < 1) fail("block indices start at 1");
            return BundleExpr{BundleExpr::Kind::Taut, i, {}};
        }
        if (eat("D")) {
            int i = number();
            if (i < 1) fail("block indices start at 1");
            return BundleExpr{BundleExpr::Kind::Block, i, {}};
        }
        fail(pos_ < s_.size() ? "unexpected '" + s_.substr(pos_, 1) + "'" : "unexpected end");
    }

    std::string text_, s_;
    size_t pos_ = 0;
};

using Weight = std::vector<long long>;

std::vector<Weight> block_weights(int i, int blocks, int block_rank)
{
    Weight w(blocks, 0);
    w[i - 1] = 1;
    if (block_rank == 1) return {w};
    Weight neg(blocks, 0);
    neg[i - 1] = -1;
    return {w, neg};
}

void multisets(size_t n, int k, size_t start, std::vector<size_t>& cur, const std::vector<Weight>& base,
               std::vector<Weight>& out)
{
    if (k == 0) {
        Weight s(base.empty() ? 0 : base[0].size(), 0);
        for (size_t i : cur)
            for (size_t j = 0; j < s.size(); ++j) s[j] += base[i][j];
        out.push_back(std::move(s));
        return;
    }
    for (size_t i = start; i < n; ++i) {
        cur.push_back(i);
        multisets(n, k - 1, i, cur, base, out);
        cur.pop_back();
    }
}

std::vector<Weight> weights_of(const BundleExpr& e, int blocks, int block_rank)
{
    using K = BundleExpr::Kind;
    switch (e.kind) {
    case K::Block: return block_weights(e.value, blocks, block_rank);
    case K::Taut: {
        std::vector<Weight> out;
        for (int i = 1; i <= e.value; ++i)
            for (auto& w : block_weights(i, blocks, block_rank)) out.push_back(std::move(w));
        return out;
    }
    case K::Trivial: return std::vector<Weight>(e.value, Weight(blocks, 0));
    case K::Dual: {
        auto w = weights_of(e.children[0], blocks, block_rank);
        for (auto& x : w)
            for (auto& c : x) c = -c;
        return w;
    }
    case K::Sym: {
        auto base = weights_of(e.children[0], blocks, block_rank);
        std::vector<Weight> out;
        std::vector<size_t> cur;
        if (e.value == 0) return {Weight(blocks, 0)};
        if (base.empty()) return {};
        multisets(base.size(), e.value, 0, cur, base, out);
        return out;
    }
    case K::Sum: {
        auto a = weights_of(e.children[0], blocks, block_rank);
        auto b = weights_of(e.children[1], blocks, block_rank);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    case K::Tensor: {
        auto a = weights_of(e.children[0], blocks, block_rank);
        auto b = weights_of(e.children[1], blocks, block_rank);
        std::vector<Weight> out;
        for (const auto& x : a)
            for (const auto& y : b) {
                Weight s(blocks);
                for (int j = 0; j < blocks; ++j) s[j] = x[j] + y[j];
                out.push_back(std::move(s));
            }
        return out;
    }
    }
    return {};
}

Polynomial linear_form(const Weight& w, const Vars& v)
{
    std::vector<Polynomial::Term> terms;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        Exponents e(w.size(), 0);
        e[i] = 1;
        terms.emplace_back(std::move(e), BigInt(static_cast<long>(w[i])));
    }
    return Polynomial::from_terms(v, std::move(terms));
}

bool lex_positive(const Weight& w)
{
    for (long long c : w)
        if (c) return c > 0;
    return false;
}

}  // namespace

BundleExpr parse_bundle(const std::string& text) { return BundleParser(text).parse(); }

BundleClasses evaluate_bundle(const BundleExpr& e, int block_rank, int blocks)
{
    if (block_rank != 1 && block_rank != 2) throw std::invalid_argument("building blocks have rank 1 or 2");
    blocks = std::max(blocks, e.max_block());
    blocks = std::max(blocks, 1);
    Vars v = block_rank == 2 ? euler_root_vars(blocks) : chern_root_vars(blocks);
    auto ws = weights_of(e, blocks, block_rank);
    BundleClasses out{static_cast<int>(ws.size()), Polynomial(v), Polynomial::constant(v, 1)};
    const Polynomial one = Polynomial::constant(v, 1);
    if (block_rank == 1) {
        Polynomial top = one;
        for (const auto& w : ws) {
            Polynomial l = linear_form(w, v);
            top = top * l;
            out.total = out.total * (one + l);
        }
        out.euler = top;
        return out;
    }
    std::map<Weight, int> count;
    bool has_zero = false;
    for (const auto& w : ws) {
        if (std::all_of(w.begin(), w.end(), [](long long c) { return c == 0; }))
            has_zero = true;
        else
            ++count[w];
    }
    Polynomial euler = one;
    for (const auto& [w, c] : count) {
        if (!lex_positive(w)) continue;
        Weight neg = w;
        for (auto& x : neg) x = -x;
        if (count[neg] != c) throw std::logic_error("weights of a real bundle must pair up");
        Polynomial l = linear_form(w, v);
        for (int i = 0; i < c; ++i) {
            euler = euler * l;
            out.total = out.total * (one + l * l);
        }
    }
    out.euler = has_zero ? Polynomial(v) : euler;
    return out;
}

}  // namespace flagcw

#include "flagcw/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagcw {

Partition::Partition(std::vector<int> parts)
{
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const
{
    std::vector<int> t;
    int cols = parts_.empty() ? 0 : parts_.front();
    for (int j = 0; j < cols; ++j) {
        int c = 0;
        for (int p : parts_)
            if (p > j) ++c;
        t.push_back(c);
    }
    return Partition(t);
}

bool Partition::fits(int rows, int cols) const
{
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

Partition Partition::complement(int rows, int cols) const
{
    if (!fits(rows, cols)) throw std::invalid_argument("partition does not fit in the box");
    std::vector<int> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = cols - (*this)[rows - 1 - i];
    return Partition(c);
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void box_rec(int rows, int cap, std::vector<int>& cur, std::vector<Partition>& out)
{
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= cap; ++v) {
        cur.push_back(v);
        box_rec(rows, v, cur, out);
        cur.pop_back();
    }
}

void sum_rec(int left, int cap, int max_len, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
        cur.push_back(v);
        sum_rec(left - v, v, max_len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    box_rec(rows, cols, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int n, int max_length)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    sum_rec(n, n, max_length, cur, out);
    return out;
}

template <class T>
T jacobi_trudi_delta(const Partition& lambda, const std::function<T(int)>& v, const T& zero, const T& one)
{
    const int l = lambda.length();
    if (l == 0) return one;
    std::vector<std::vector<T>> m(l, std::vector<T>(l, zero));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int k = lambda[i] + j - i;
            m[i][j] = k < 0 ? zero : (k == 0 ? one : v(k));
        }
    // Laplace expansion row by row over the set of used columns.
    std::vector<std::vector<T>> dp(size_t{1} << l, std::vector<T>());
    dp[0] = {one};
    for (int row = 0; row < l; ++row) {
        std::vector<std::vector<T>> next(size_t{1} << l);
        for (size_t mask = 0; mask < dp.size(); ++mask) {
            if (dp[mask].empty() || __builtin_popcountll(mask) != row) continue;
            const T& acc = dp[mask][0];
            int above = 0;
            for (int col = l - 1; col >= 0; --col) {
                if (mask >> col & 1u) {
                    ++above;
                    continue;
                }
                T term = acc * m[row][col];
                size_t nm = mask | (size_t{1} << col);
                // sign: number of used columns greater than col
                if (above % 2) term = zero - term;
                if (next[nm].empty())
                    next[nm] = {term};
                else
                    next[nm][0] = next[nm][0] + term;
            }
        }
        dp = std::move(next);
    }
    return dp.back().empty() ? zero : dp.back()[0];
}

template BigInt jacobi_trudi_delta<BigInt>(const Partition&, const std::function<BigInt(int)>&, const BigInt&,
                                           const BigInt&);
template Polynomial jacobi_trudi_delta<Polynomial>(const Partition&, const std::function<Polynomial(int)>&,
                                                   const Polynomial&, const Polynomial&);

BigInt jacobi_trudi_delta(const Partition& lambda, const std::vector<BigInt>& v)
{
    std::function<BigInt(int)> f = [&](int k) { return k < static_cast<int>(v.size()) ? v[k] : BigInt(0); };
    return jacobi_trudi_delta<BigInt>(lambda, f, BigInt(0), BigInt(1));
}

Polynomial jacobi_trudi_delta(const Partition& lambda, const std::vector<Polynomial>& v, const Vars& vars)
{
    std::function<Polynomial(int)> f = [&](int k) { return k < static_cast<int>(v.size()) ? v[k] : Polynomial(vars); };
    return jacobi_trudi_delta<Polynomial>(lambda, f, Polynomial(vars), Polynomial::constant(vars, 1));
}

Polynomial elementary_symmetric(const Vars& vars, int k)
{
    const int n = static_cast<int>(vars->size());
    if (k < 0 || k > n) return Polynomial(vars);
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    std::vector<Polynomial::Term> terms;
    do {
        terms.emplace_back(Exponents(pick.begin(), pick.end()), 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return Polynomial::from_terms(vars, std::move(terms));
}

Polynomial complete_symmetric(const Vars& vars, int k)
{
    if (k < 0) return Polynomial(vars);
    // h_k = sum over e_k via the recurrence h_k = sum_{i>=1} (-1)^{i-1} e_i h_{k-i}
    std::vector<Polynomial> h{Polynomial::constant(vars, 1)};
    for (int j = 1; j <= k; ++j) {
        Polynomial acc(vars);
        for (int i = 1; i <= j; ++i) {
            Polynomial t = elementary_symmetric(vars, i) * h[j - i];
            if (i % 2)
                acc += t;
            else
                acc -= t;
        }
        h.push_back(acc);
    }
    return h[k];
}

std::vector<BigInt> elementary_values(const std::vector<BigInt>& points)
{
    std::vector<BigInt> e(points.size() + 1, BigInt(0));
    e[0] = 1;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * points[i];
    return e;
}

namespace {

// a_alpha = sum over permutations sign * x^{sigma(alpha)}
Polynomial alternant(const Vars& vars, const std::vector<int>& alpha)
{
    const size_t n = vars->size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Polynomial::Term> terms;
    do {
        Exponents e(n);
        int inv = 0;
        for (size_t i = 0; i < n; ++i) {
            e[perm[i]] = alpha[i];
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        }
        terms.emplace_back(std::move(e), inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial::from_terms(vars, std::move(terms));
}

std::vector<int> staircase(size_t n)
{
    std::vector<int> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = static_cast<int>(n - 1 - i);
    return d;
}

}  // namespace

Polynomial schur_polynomial(const Partition& lambda, const Vars& vars)
{
    const size_t n = vars->size();
    if (lambda.length() > static_cast<int>(n)) return Polynomial(vars);
    std::vector<int> alpha = staircase(n);
    for (size_t i = 0; i < n; ++i) alpha[i] += lambda[static_cast<int>(i)];
    auto q = divide_exact(alternant(vars, alpha), alternant(vars, staircase(n)));
    if (!q) throw std::logic_error("bialternant division failed");
    return *q;
}

BigInt schur_at(const Partition& lambda, const std::vector<BigInt>& points)
{
    return jacobi_trudi_delta(lambda.transpose(), elementary_values(points));
}

BigInt q_spec(const Partition& lambda, int m)
{
    std::vector<BigInt> pts;
    for (int k = m; k > 0; k -= 2) pts.emplace_back(k * k);
    return schur_at(lambda, pts);
}

bool is_symmetric(const Polynomial& p)
{
    for (size_t i = 0; i + 1 < p.nvars(); ++i) {
        std::vector<size_t> perm(p.nvars());
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        if (p.permute(perm) != p) return false;
    }
    return true;
}

std::map<Partition, BigInt> schur_expand(const Polynomial& p)
{
    if (!is_symmetric(p)) throw std::invalid_argument("schur_expand needs a symmetric polynomial");
    const size_t n = p.nvars();
    Polynomial prod = p * alternant(p.vars(), staircase(n));
    std::map<Partition, BigInt> out;
    for (const auto& [e, c] : prod.terms()) {
        bool decreasing = true;
        for (size_t i = 0; i + 1 < n; ++i)
            if (e[i] <= e[i + 1]) decreasing = false;
        if (!decreasing) continue;
        std::vector<int> lam(n);
        for (size_t i = 0; i < n; ++i) lam[i] = e[i] - static_cast<int>(n - 1 - i);
        out[Partition(lam)] = c;
    }
    return out;
}

BigInt grassmann_integrate(int k, int n, const Polynomial& p)
{
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (p.nvars() != static_cast<size_t>(k)) throw std::invalid_argument("expected a polynomial in k roots");
    for (size_t i = 0; i < p.nvars(); ++i)
        if (p.vars()->weight(i) != 1) throw std::invalid_argument("Chern roots must have weight 1");
    const int top = k * (n - k);
    // coefficient of x^{(n-k)^k + delta} in p * a_delta
    std::vector<int> target(k);
    for (int i = 0; i < k; ++i) target[i] = n - k + (k - 1 - i);
    std::vector<size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        Exponents e(k);
        int inv = 0;
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            e[perm[i]] = target[perm[i]] - (k - 1 - i);
            if (e[perm[i]] < 0) ok = false;
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        }
        if (!ok || weighted_degree(e, *p.vars()) != top) continue;
        BigInt c = p.coefficient(e);
        if (inv % 2)
            total -= c;
        else
            total += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Polynomial grassmann_bundle_pushforward(const std::vector<size_t>& sub_roots, const Polynomial& g)
{
    const size_t r = g.nvars();
    const size_t k = sub_roots.size();
    std::vector<bool> in0(r, false);
    for (size_t i : sub_roots) {
        if (i >= r || in0[i]) throw std::invalid_argument("bad subbundle root indices");
        in0[i] = true;
    }
    std::vector<size_t> s0, c0;
    for (size_t i = 0; i < r; ++i) (in0[i] ? s0 : c0).push_back(i);
    const Vars& v = g.vars();
    auto diff_product = [&](const std::vector<size_t>& idx) {
        Polynomial acc = Polynomial::constant(v, 1);
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b)
                acc = acc * (Polynomial::variable(v, idx[a]) - Polynomial::variable(v, idx[b]));
        return acc;
    };
    std::vector<size_t> all(r);
    std::iota(all.begin(), all.end(), 0);
    Polynomial numerator(v);
    std::vector<int> pick(r, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<size_t> s, c;
        for (size_t i = 0; i < r; ++i) (pick[i] ? s : c).push_back(i);
        std::vector<size_t> perm(r);
        for (size_t a = 0; a < k; ++a) perm[s0[a]] = s[a];
        for (size_t b = 0; b < r - k; ++b) perm[c0[b]] = c[b];
        int inv = 0;
        for (size_t i : s)
            for (size_t j : c)
                if (i > j) ++inv;
        Polynomial term = g.permute(perm) * diff_product(s) * diff_product(c);
        if (inv % 2)
            numerator -= term;
        else
            numerator += term;
    } while (std::next_permutation(pick.begin(), pick.end()));
    auto q = divide_exact(numerator, diff_product(all));
    if (!q) throw std::invalid_argument("pushforward numerator is not divisible; g lacks the required symmetry");
    return *q;
}

}  // namespace flagcw

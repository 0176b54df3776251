#include "flagcw/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace flagcw {

IntMatrix zero_matrix(size_t rows, size_t cols) { return IntMatrix(rows, IntVector(cols, BigInt(0))); }

IntMatrix identity_matrix(size_t n)
{
    IntMatrix m = zero_matrix(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix transpose(const IntMatrix& m, size_t cols)
{
    IntMatrix t = zero_matrix(cols, m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

IntVector apply(const IntMatrix& m, const IntVector& v, size_t rows)
{
    IntVector out(rows, BigInt(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) mpz_addmul(out[i].get_mpz_t(), m[i][j].get_mpz_t(), v[j].get_mpz_t());
    return out;
}

namespace {

// rows a, b <- s a + t b, -v a + u b
void combine_rows(IntVector& a, IntVector& b, const BigInt& s, const BigInt& t, const BigInt& u, const BigInt& v)
{
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0 && b[k] == 0) continue;
        BigInt na = s * a[k] + t * b[k];
        BigInt nb = u * b[k] - v * a[k];
        a[k] = std::move(na);
        b[k] = std::move(nb);
    }
}

void combine_cols(IntMatrix& m, size_t r, size_t i, const BigInt& s, const BigInt& t, const BigInt& u,
                  const BigInt& v)
{
    for (auto& row : m) {
        BigInt nr = u * row[r] + v * row[i];
        BigInt ni = s * row[i] - t * row[r];
        row[r] = std::move(nr);
        row[i] = std::move(ni);
    }
}

void submul_row(IntVector& a, const IntVector& b, const BigInt& q)
{
    for (size_t k = 0; k < a.size(); ++k)
        if (b[k] != 0) mpz_submul(a[k].get_mpz_t(), q.get_mpz_t(), b[k].get_mpz_t());
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix a, size_t cols, IntMatrix* transform, IntMatrix* inverse)
{
    const size_t m = a.size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    if (transform) *transform = identity_matrix(m);
    if (inverse) *inverse = identity_matrix(m);
    size_t r = 0;
    for (size_t col = 0; col < cols && r < m; ++col) {
        for (size_t i = r + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            if (a[r][col] == 0) {
                std::swap(a[r], a[i]);
                if (transform) std::swap((*transform)[r], (*transform)[i]);
                if (inverse)
                    for (auto& row : *inverse) std::swap(row[r], row[i]);
                continue;
            }
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][col].get_mpz_t(), a[i][col].get_mpz_t());
            BigInt u = a[r][col] / g, v = a[i][col] / g;
            combine_rows(a[r], a[i], s, t, u, v);
            if (transform) combine_rows((*transform)[r], (*transform)[i], s, t, u, v);
            if (inverse) combine_cols(*inverse, r, i, s, t, u, v);
        }
        if (a[r][col] == 0) continue;
        if (a[r][col] < 0) {
            for (auto& x : a[r]) x = -x;
            if (transform)
                for (auto& x : (*transform)[r]) x = -x;
            if (inverse)
                for (auto& row : *inverse) row[r] = -row[r];
        }
        for (size_t i = 0; i < r; ++i) {
            if (a[i][col] == 0) continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[r][col].get_mpz_t());
            if (q == 0) continue;
            submul_row(a[i], a[r], q);
            if (transform) submul_row((*transform)[i], (*transform)[r], q);
            if (inverse)
                for (auto& row : *inverse) mpz_addmul(row[r].get_mpz_t(), q.get_mpz_t(), row[i].get_mpz_t());
        }
        ++r;
    }
    a.resize(r);
    return a;
}

size_t lattice_rank(const IntMatrix& rows, size_t cols)
{
    return hermite_normal_form(rows, cols).size();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b, size_t cols)
{
    return hermite_normal_form(a, cols) == hermite_normal_form(b, cols);
}

IntMatrix integer_kernel(const IntMatrix& m, size_t cols)
{
    IntMatrix t = transpose(m, cols);
    IntMatrix u;
    IntMatrix h = hermite_normal_form(t, m.size(), &u);
    IntMatrix kernel(u.begin() + static_cast<long>(h.size()), u.end());
    return hermite_normal_form(kernel, cols);
}

BigInt determinant(IntMatrix m)
{
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

LatticeBasis::LatticeBasis(IntMatrix basis, size_t ambient) : basis_(std::move(basis)), ambient_(ambient)
{
    hnf_ = hermite_normal_form(basis_, ambient_, &to_basis_);
    if (hnf_.size() != basis_.size()) throw std::invalid_argument("lattice basis rows are dependent");
    for (const auto& row : hnf_) {
        size_t p = 0;
        while (row[p] == 0) ++p;
        pivots_.push_back(p);
    }
}

std::optional<IntVector> LatticeBasis::coordinates(const IntVector& v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length");
    const size_t k = hnf_.size();
    IntVector h(k, BigInt(0));
    IntVector rest = v;
    for (size_t i = 0; i < k; ++i) {
        const BigInt& piv = hnf_[i][pivots_[i]];
        if (!mpz_divisible_p(rest[pivots_[i]].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
        h[i] = rest[pivots_[i]] / piv;
        if (h[i] != 0) submul_row(rest, hnf_[i], h[i]);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    IntVector c(k, BigInt(0));
    for (size_t i = 0; i < k; ++i)
        if (h[i] != 0)
            for (size_t j = 0; j < k; ++j) mpz_addmul(c[j].get_mpz_t(), h[i].get_mpz_t(), to_basis_[i][j].get_mpz_t());
    return c;
}

IntVector LatticeBasis::combine(const IntVector& coords) const
{
    IntVector v(ambient_, BigInt(0));
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            for (size_t j = 0; j < ambient_; ++j) mpz_addmul(v[j].get_mpz_t(), coords[i].get_mpz_t(), basis_[i][j].get_mpz_t());
    return v;
}

IntVector QuotientBasis::project(const IntVector& x) const { return apply(projection, x, projection.size()); }

QuotientBasis quotient_basis(const IntMatrix& sub_generators, size_t n, const IntMatrix& preferred)
{
    QuotientBasis q;
    q.ambient = n;
    IntMatrix s = hermite_normal_form(sub_generators, n);
    const size_t r = s.size();
    q.sub_rank = r;
    IntMatrix u, uinv;
    IntMatrix h = hermite_normal_form(transpose(s, n), r, &u, &uinv);
    for (size_t i = 0; i < r; ++i)
        if (h[i][i] != 1) q.free = false;

    if (q.free && !preferred.empty()) {
        std::vector<size_t> chosen = independent_rows(preferred, n, s);
        if (chosen.size() == n - r) {
            IntMatrix k = s;
            for (size_t i : chosen) k.push_back(preferred[i]);
            IntMatrix kinv;
            IntMatrix hk = hermite_normal_form(k, n, &kinv);
            if (hk == identity_matrix(n)) {
                for (size_t j = 0; j < n - r; ++j) {
                    q.lifts.push_back(preferred[chosen[j]]);
                    IntVector row(n);
                    for (size_t i = 0; i < n; ++i) row[i] = kinv[i][r + j];
                    q.projection.push_back(std::move(row));
                }
                q.preferred_used = std::move(chosen);
                return q;
            }
        }
    }
    for (size_t j = r; j < n; ++j) {
        q.projection.push_back(u[j]);
        IntVector lift(n);
        for (size_t i = 0; i < n; ++i) lift[i] = uinv[i][j];
        q.lifts.push_back(std::move(lift));
    }
    return q;
}

namespace {

constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) { return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime); }

uint64_t powmod(uint64_t a, uint64_t e)
{
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

struct ModEchelon {
    std::vector<std::vector<uint64_t>> rows;
    std::vector<size_t> pivots;

    bool insert(const IntVector& v)
    {
        std::vector<uint64_t> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = mpz_fdiv_ui(v[i].get_mpz_t(), kPrime);
        for (size_t k = 0; k < rows.size(); ++k) {
            uint64_t f = w[pivots[k]];
            if (!f) continue;
            for (size_t j = 0; j < w.size(); ++j)
                if (rows[k][j]) w[j] = (w[j] + kPrime - mulmod(f, rows[k][j])) % kPrime;
        }
        size_t p = 0;
        while (p < w.size() && !w[p]) ++p;
        if (p == w.size()) return false;
        uint64_t inv = powmod(w[p], kPrime - 2);
        for (auto& x : w) x = mulmod(x, inv);
        rows.push_back(std::move(w));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

std::vector<size_t> independent_rows(const IntMatrix& rows, size_t cols, const IntMatrix& seed)
{
    ModEchelon e;
    for (const auto& s : seed) {
        if (s.size() != cols) throw std::invalid_argument("seed row has wrong length");
        e.insert(s);
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (e.rows.size() == cols) break;
        if (e.insert(rows[i])) out.push_back(i);
    }
    return out;
}

F2Matrix::F2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows, std::vector<uint64_t>((cols + 63) / 64, 0))
{
}

void F2Matrix::set(size_t r, size_t c, bool v)
{
    uint64_t bit = uint64_t{1} << (c & 63);
    if (v)
        data_[r][c >> 6] |= bit;
    else
        data_[r][c >> 6] &= ~bit;
}

size_t F2Matrix::rank() const
{
    auto d = data_;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t w = c >> 6;
        uint64_t bit = uint64_t{1} << (c & 63);
        size_t p = r;
        while (p < rows_ && !(d[p][w] & bit)) ++p;
        if (p == rows_) continue;
        std::swap(d[r], d[p]);
        for (size_t i = r + 1; i < rows_; ++i)
            if (d[i][w] & bit)
                for (size_t k = w; k < d[i].size(); ++k) d[i][k] ^= d[r][k];
        ++r;
    }
    return r;
}

}  // namespace flagcw

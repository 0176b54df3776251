#include "flagcw/steenrod.hpp"

#include <stdexcept>

namespace flagcw {

Polynomial sq2_lift(const FlagShape& shape, const Polynomial& p, const TwistClass& twist)
{
    const size_t n = p.nvars();
    if (n != static_cast<size_t>(shape.n())) throw std::invalid_argument("polynomial is not in the flag variables");
    std::vector<int> t(n, 0);
    for (int b : twist.members())
        for (int k = 0; k < shape.part(b); ++k) t[shape.block_offset(b) + k] = 1;
    std::vector<Polynomial::Term> out;
    for (const auto& [e, c] : p.terms())
        for (size_t i = 0; i < n; ++i) {
            int m = e[i] + t[i];
            if (!m) continue;
            Exponents f = e;
            ++f[i];
            out.emplace_back(std::move(f), c * m);
        }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

Polynomial reduce_mod2(const FullFlagRing& ring, const Polynomial& p)
{
    Polynomial nf = ring.normal_form(p);
    std::vector<Polynomial::Term> out;
    for (const auto& [e, c] : nf.terms())
        if (mpz_odd_p(c.get_mpz_t())) out.emplace_back(e, BigInt(1));
    return Polynomial::from_terms(p.vars(), std::move(out));
}

Polynomial sq2(const ChowRing& ring, const Polynomial& x, const TwistClass& twist)
{
    return reduce_mod2(ring.full(), sq2_lift(ring.shape(), x, twist));
}

F2Matrix sq2_matrix(const ChowRing& ring, int q, const TwistClass& twist)
{
    const size_t src = ring.rank(q), dst = ring.rank(q + 1);
    F2Matrix m(dst, src);
    for (size_t j = 0; j < src; ++j) {
        IntVector unit(src, 0);
        unit[j] = 1;
        Polynomial image = sq2_lift(ring.shape(), ring.element(q, unit), twist);
        auto coords = ring.coordinates(image, q + 1);
        if (!coords) throw std::logic_error("Sq^2 left the Chern-class subring");
        for (size_t i = 0; i < dst; ++i)
            if (mpz_odd_p((*coords)[i].get_mpz_t())) m.set(i, j, true);
    }
    return m;
}

std::vector<size_t> Sq2Complex::bockstein() const
{
    std::vector<size_t> out(dims.size());
    for (size_t q = 0; q < dims.size(); ++q) {
        size_t in = q ? ranks[q - 1] : 0;
        out[q] = dims[q] - ranks[q] - in;
    }
    return out;
}

namespace {

F2Matrix compose(const F2Matrix& a, const F2Matrix& b)
{
    F2Matrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                for (size_t j = 0; j < b.cols(); ++j)
                    if (b.get(k, j)) out.flip(i, j);
    return out;
}

bool is_zero(const F2Matrix& m)
{
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) return false;
    return true;
}

}  // namespace

Sq2Complex sq2_complex(const ChowRing& ring, const TwistClass& twist)
{
    Sq2Complex c;
    const int top = ring.top_degree();
    std::vector<F2Matrix> maps;
    for (int q = 0; q <= top; ++q) {
        c.dims.push_back(ring.rank(q));
        maps.push_back(sq2_matrix(ring, q, twist));
        c.ranks.push_back(maps.back().rank());
    }
    for (int q = 0; q + 1 <= top; ++q)
        if (!is_zero(compose(maps[q + 1], maps[q]))) c.squares_to_zero = false;
    return c;
}

std::vector<size_t> bockstein_cohomology_ranks(const FlagShape& shape, const TwistClass& twist)
{
    return sq2_complex(ChowRing(shape), twist).bockstein();
}

Polynomial torsion_poincare_from_sq2(const FlagShape& shape, const TwistClass& twist)
{
    Sq2Complex c = sq2_complex(ChowRing(shape), twist);
    std::vector<BigInt> coeffs(c.ranks.size() + 1, BigInt(0));
    for (size_t q = 0; q < c.ranks.size(); ++q) coeffs[q + 1] = static_cast<unsigned long>(c.ranks[q]);
    return t_poly(coeffs);
}

Polynomial mod2_poincare_fln(int n)
{
    if (n < 0) throw std::invalid_argument("negative flag length");
    Polynomial p = t_poly({1});
    for (int j = 1; j <= n; ++j) p = p * t_poly(std::vector<BigInt>(j, BigInt(1)));
    return p;
}

Polynomial free_poincare_fln(int n)
{
    if (n < 0) throw std::invalid_argument("negative flag length");
    auto one_plus = [](int k) {
        std::vector<BigInt> c(k + 1, BigInt(0));
        c[0] = 1;
        c[k] += 1;
        return t_poly(c);
    };
    const int k = n / 2;
    Polynomial p = t_poly({1});
    if (n % 2) {
        for (int i = 1; i <= k; ++i) p = p * one_plus(4 * i - 1);
    } else if (k > 0) {
        p = one_plus(2 * k - 1);
        for (int i = 1; i < k; ++i) p = p * one_plus(4 * i - 1);
    }
    return p;
}

Polynomial torsion_poincare_closed(int n, bool twisted)
{
    Polynomial p2 = mod2_poincare_fln(n);
    Polynomial num = twisted ? p2 : p2 - free_poincare_fln(n);
    num = num * t_poly({0, 1});
    if (num.is_zero()) return num;
    auto q = divide_exact(num, t_poly({1, 1}));
    if (!q) throw std::logic_error("torsion numerator is not divisible by 1 + t");
    return *q;
}

}  // namespace flagcw

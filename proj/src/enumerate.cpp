#include "flagcw/enumerate.hpp"
#include "flagcw/charclass.hpp"
#include "flagcw/parallel.hpp"
#include "flagcw/symfunc.hpp"
#include "flagcw/wdring.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagcw {

GWForm gw_form(const BigInt& complex, const BigInt& real)
{
    if (abs(real) > complex) throw std::invalid_argument("real count exceeds the complex count");
    BigInt diff = complex - real;
    if (!mpz_even_p(diff.get_mpz_t())) throw std::invalid_argument("complex and real counts differ in parity");
    return {(complex + real) / 2, diff / 2};
}

namespace {

void compositions(int k, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int i = d; i >= 0; --i) {
        cur.push_back(i);
        compositions(k, d - i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Polynomial sym_top_chern(int k, int d)
{
    if (k < 1 || d < 0) throw std::invalid_argument("sym_top_chern needs k >= 1 and d >= 0");
    Vars v = chern_root_vars(k);
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    compositions(k, d, cur, alphas);
    std::vector<Polynomial> factors;
    for (const auto& a : alphas) {
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i < k; ++i) {
            if (!a[i]) continue;
            Exponents e(k, 0);
            e[i] = 1;
            terms.emplace_back(std::move(e), BigInt(a[i]));
        }
        factors.push_back(Polynomial::from_terms(v, std::move(terms)));
    }
    // contiguous chunks multiplied concurrently, then merged in order
    const size_t chunks = std::min<size_t>(std::max(1u, configured_threads()), factors.size() / 8 + 1);
    std::vector<Polynomial> partial(chunks, Polynomial::constant(v, 1));
    parallel_for(chunks, [&](size_t c) {
        size_t lo = factors.size() * c / chunks, hi = factors.size() * (c + 1) / chunks;
        for (size_t i = lo; i < hi; ++i) partial[c] = partial[c] * factors[i];
    });
    Polynomial p = Polynomial::constant(v, 1);
    for (const auto& q : partial) p = p * q;
    return p;
}

BigInt hypersurface_count(int k, int n, int d) { return grassmann_integrate(k, n, sym_top_chern(k, d)); }

CountResult count_lines_cubic()
{
    CountResult r;
    r.complex = hypersurface_count(2, 4, 3);
    // e(Sym^3 D1^dual) = 3a^2 = 3 x1 on the real Grassmannian Fl(2,2)
    Polynomial e = halve_exponents(euler_sym_rk2(3));
    auto [upper, lower] = real_fl11n_reduce(0, e.substitute({Polynomial::variable(indexed_vars("x", 2), 0)}));
    r.real = upper + lower;
    r.diagnostic = upper - lower;
    r.notes.push_back("real count from the top coefficients of e(Sym^3 D1^dual) = 3*x1 on the real Gr(2,4)");
    return r;
}

BigInt count_quintic_fourplanes() { return hypersurface_count(4, 18, 5); }

FlagComplexCount count_flags_complex()
{
    FlagComplexCount out;
    Polynomial quintic = sym_top_chern(4, 5);
    BigInt n5 = grassmann_integrate(4, 18, quintic);
    out.via_product = hypersurface_count(2, 4, 3) * n5;
    // cubic condition on the rank-2 subbundle with roots t1, t2 of the rank-4 bundle
    Polynomial cubic = sym_top_chern(2, 3);
    const Vars& v = quintic.vars();
    Polynomial g = cubic.substitute({Polynomial::variable(v, 0), Polynomial::variable(v, 1)});
    Polynomial pf = grassmann_bundle_pushforward({0, 1}, g);
    if (pf.max_degree() > 0) throw std::logic_error("fibre pushforward is not a constant");
    out.fiber_pushforward = pf.is_zero() ? BigInt(0) : pf.coefficient(Exponents(4, 0));
    out.via_pushforward = grassmann_integrate(4, 18, pf * quintic);
    return out;
}

Polynomial halve_exponents(const Polynomial& p)
{
    std::vector<std::string> names;
    for (size_t i = 0; i < p.nvars(); ++i) names.push_back("x" + std::to_string(i + 1));
    Vars x = make_vars(names, std::vector<int>(p.nvars(), 1));
    std::vector<Polynomial::Term> terms;
    for (const auto& [e, c] : p.terms()) {
        Exponents h(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % 2) throw std::invalid_argument("odd exponent in " + p.to_string());
            h[i] = e[i] / 2;
        }
        terms.emplace_back(std::move(h), c);
    }
    return Polynomial::from_terms(x, std::move(terms));
}

RealFlagCount count_flags_real()
{
    Polynomial sym5 = halve_exponents(euler_sym_sum_rk2(5));
    Polynomial cubic = halve_exponents(euler_sym_rk2(3));
    Polynomial e = cubic.substitute({Polynomial::variable(sym5.vars(), 0)}) * sym5;
    auto [upper, lower] = real_fl11n_reduce(7, e);
    return {upper, lower, upper + lower, upper - lower};
}

}  // namespace flagcw

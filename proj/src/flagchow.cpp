#include "flagcw/flagchow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flagcw {

namespace {

void monomials_of_degree(int vars_from, int vars_to, int degree, Exponents& cur, int pos,
                         std::vector<Exponents>& out)
{
    if (pos == vars_to - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int a = degree; a >= 0; --a) {
        cur[pos] = a;
        monomials_of_degree(vars_from, vars_to, degree - a, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

IntVector unit_vector(size_t n, size_t i)
{
    IntVector v(n, BigInt(0));
    v[i] = 1;
    return v;
}

}  // namespace

size_t FullFlagRing::Hash::operator()(const Exponents& e) const
{
    size_t h = 1469598103934665603ull;
    for (int x : e) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
}

FullFlagRing::FullFlagRing(int n) : n_(n), vars_(indexed_vars("x", n))
{
    if (n < 0 || n > 9) throw std::invalid_argument("full flag ring supports 0 <= N <= 9");
    basis_.resize(top_degree() + 1);
    index_.resize(top_degree() + 1);
    Exponents e(n, 0);
    // odometer over a_k in [0, k-1]
    while (true) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        basis_[d].push_back(e);
        int k = n - 1;
        while (k >= 0 && e[k] == k) {
            e[k] = 0;
            --k;
        }
        if (k < 0) break;
        ++e[k];
    }
    for (int d = 0; d <= top_degree(); ++d) {
        std::sort(basis_[d].begin(), basis_[d].end(), [&](const Exponents& a, const Exponents& b) {
            return grlex_less(b, a, *vars_);
        });
        for (size_t i = 0; i < basis_[d].size(); ++i) index_[d][basis_[d][i]] = i;
    }
    tails_.resize(n);
    for (int k = 0; k < n; ++k) {
        std::vector<Exponents> mons;
        Exponents cur(n, 0);
        if (k == n - 1) {
            cur[k] = k + 1;
            mons.push_back(cur);
        } else {
            monomials_of_degree(k, n, k + 1, cur, k, mons);
        }
        std::vector<Polynomial::Term> terms;
        for (const auto& m : mons) {
            terms.emplace_back(m, 1);
            if (m[k] != k + 1) tails_[k].push_back(m);
        }
        groebner_.push_back(Polynomial::from_terms(vars_, std::move(terms)));
    }
}

size_t FullFlagRing::rank(int d) const
{
    if (d < 0 || d > top_degree()) return 0;
    return basis_[d].size();
}

size_t FullFlagRing::total_rank() const
{
    size_t r = 0;
    for (const auto& b : basis_) r += b.size();
    return r;
}

const std::vector<Exponents>& FullFlagRing::basis(int d) const
{
    static const std::vector<Exponents> empty;
    if (d < 0 || d > top_degree()) return empty;
    return basis_[d];
}

bool FullFlagRing::is_standard(const Exponents& e)
{
    for (size_t k = 0; k < e.size(); ++k)
        if (e[k] > static_cast<int>(k)) return false;
    return true;
}

const FullFlagRing::Sparse& FullFlagRing::reduce_monomial(const Exponents& e) const
{
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("monomial has wrong length");
    int d = std::accumulate(e.begin(), e.end(), 0);
    Sparse res;
    if (d <= top_degree()) {
        if (is_standard(e)) {
            res.emplace_back(index_[d].at(e), 1);
        } else {
            size_t k = 0;
            while (e[k] <= static_cast<int>(k)) ++k;
            Exponents base = e;
            base[k] -= static_cast<int>(k) + 1;
            std::map<size_t, BigInt> acc;
            for (const auto& t : tails_[k]) {
                Exponents m = base;
                for (int i = 0; i < n_; ++i) m[i] += t[i];
                for (const auto& [idx, c] : reduce_monomial(m)) acc[idx] -= c;
            }
            for (auto& [idx, c] : acc)
                if (c != 0) res.emplace_back(idx, std::move(c));
        }
    }
    return memo_.emplace(e, std::move(res)).first->second;
}

IntVector FullFlagRing::coordinates(const Polynomial& p, int d) const
{
    if (p.nvars() != static_cast<size_t>(n_)) throw std::invalid_argument("polynomial is not in the flag ring");
    IntVector v(rank(d), BigInt(0));
    for (const auto& [e, c] : p.terms()) {
        if (p.degree_of(e) != d) continue;
        for (const auto& [idx, k] : reduce_monomial(e)) mpz_addmul(v[idx].get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    }
    return v;
}

Polynomial FullFlagRing::from_coordinates(int d, const IntVector& c) const
{
    std::vector<Polynomial::Term> terms;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) terms.emplace_back(basis_.at(d)[i], c[i]);
    return Polynomial::from_terms(vars_, std::move(terms));
}

Polynomial FullFlagRing::normal_form(const Polynomial& p) const
{
    Polynomial out(vars_);
    if (p.is_zero()) return out;
    for (int d = std::max(0, p.min_degree()); d <= std::min(p.max_degree(), top_degree()); ++d)
        out += from_coordinates(d, coordinates(p, d));
    return out;
}

Polynomial FullFlagRing::multiply(const Polynomial& a, const Polynomial& b) const { return normal_form(a * b); }

Polynomial FullFlagRing::point_class() const
{
    Exponents e(n_, 0);
    int sign = 1;
    for (int i = 0; i + 1 < n_; ++i) {
        e[i] = n_ - 1 - i;
        if (e[i] % 2) sign = -sign;
    }
    return normal_form(Polynomial::monomial(vars_, e, sign));
}

BigInt FullFlagRing::integrate(const Polynomial& p) const
{
    IntVector v = coordinates(p, top_degree());
    IntVector pt = coordinates(point_class(), top_degree());
    return v[0] * pt[0];
}

ChowRing::ChowRing(FlagShape shape, Namer namer)
    : shape_(std::move(shape)), full_(shape_.n()), namer_(std::move(namer))
{
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= shape_.blocks(); ++i) {
        int off = shape_.block_offset(i);
        int d = shape_.part(i);
        for (int j = 1; j <= d; ++j) {
            generators_.emplace_back(i, j);
            names.push_back(generator_name(i, j));
            weights.push_back(j);
            // e_j of the block variables
            std::vector<Polynomial::Term> terms;
            std::vector<int> pick(d, 0);
            std::fill(pick.end() - j, pick.end(), 1);
            do {
                Exponents e(shape_.n(), 0);
                for (int k = 0; k < d; ++k) e[off + k] = pick[k];
                terms.emplace_back(std::move(e), 1);
            } while (std::next_permutation(pick.begin(), pick.end()));
            generator_polys_.push_back(full_.normal_form(Polynomial::from_terms(full_.vars(), std::move(terms))));
        }
    }
    chern_vars_ = make_vars(std::move(names), std::move(weights));
    lattice_.resize(top_degree() + 1);
    labels_.resize(top_degree() + 1);
    exps_.resize(top_degree() + 1);
}

std::string ChowRing::generator_name(int block, int j) const
{
    if (namer_) return namer_(block, j);
    return "c" + std::to_string(j) + "(D" + std::to_string(block) + ")";
}

Polynomial ChowRing::chern(int block, int j) const
{
    if (block < 1 || block > shape_.blocks()) throw std::out_of_range("block index");
    if (j == 0) return Polynomial::constant(full_.vars(), 1);
    if (j < 0 || j > shape_.part(block)) return Polynomial(full_.vars());
    for (size_t g = 0; g < generators_.size(); ++g)
        if (generators_[g] == std::make_pair(block, j)) return generator_polys_[g];
    throw std::logic_error("missing Chern generator");
}

size_t ChowRing::rank(int d) const
{
    if (d < 0 || d > top_degree()) return 0;
    return lattice(d).rank();
}

const LatticeBasis& ChowRing::lattice(int d) const
{
    if (d < 0 || d > top_degree()) throw std::out_of_range("degree outside the ring");
    if (!lattice_[d]) build(d);
    return *lattice_[d];
}

const std::vector<std::string>& ChowRing::labels(int d) const
{
    lattice(d);
    return labels_[d];
}

void ChowRing::build(int d) const
{
    const size_t amb = full_.rank(d);
    if (shape_.is_full() || d == 0) {
        std::vector<std::string> labels;
        std::vector<std::optional<std::vector<int>>> exps;
        for (const auto& e : full_.basis(d)) {
            labels.push_back(Polynomial::monomial(full_.vars(), e).to_string());
            exps.emplace_back(shape_.is_full() ? std::vector<int>(e.begin(), e.end())
                                               : std::vector<int>(generators_.size(), 0));
        }
        lattice_[d].emplace(identity_matrix(amb), amb);
        labels_[d] = std::move(labels);
        exps_[d] = std::move(exps);
        return;
    }
    struct Candidate {
        std::optional<std::vector<int>> exps;  // exponents over the generators
        IntVector coords;
        std::string label;
    };
    std::map<std::vector<int>, Candidate> monomials;
    std::vector<Candidate> loose;
    for (size_t g = 0; g < generators_.size(); ++g) {
        int j = generators_[g].second;
        if (j > d) continue;
        const LatticeBasis& lower = lattice(d - j);
        for (size_t b = 0; b < lower.rank(); ++b) {
            const auto& lower_exps = exps_[d - j][b];
            std::optional<std::vector<int>> key;
            if (lower_exps) {
                key = *lower_exps;
                (*key)[g] += 1;
                if (monomials.count(*key)) continue;
            }
            Polynomial elem = full_.from_coordinates(d - j, lower.rows()[b]);
            IntVector v = full_.coordinates(elem * generator_polys_[g], d);
            if (key) {
                Exponents ex(key->begin(), key->end());
                std::string label = Polynomial::monomial(chern_vars_, ex).to_string();
                monomials.emplace(*key, Candidate{key, std::move(v), std::move(label)});
            } else {
                loose.push_back(Candidate{std::nullopt, std::move(v),
                                          generator_name(generators_[g].first, j) + "*" + labels_[d - j][b]});
            }
        }
    }
    std::vector<Candidate> all;
    for (auto& [k, c] : monomials) all.push_back(std::move(c));
    std::stable_sort(all.begin(), all.end(), [&](const Candidate& a, const Candidate& b) {
        Exponents ea(a.exps->begin(), a.exps->end()), eb(b.exps->begin(), b.exps->end());
        return grlex_less(eb, ea, *chern_vars_);
    });
    for (auto& c : loose) all.push_back(std::move(c));
    IntMatrix rows;
    for (const auto& c : all) rows.push_back(c.coords);
    IntMatrix hnf = hermite_normal_form(rows, amb);
    std::vector<size_t> chosen = independent_rows(rows, amb);
    IntMatrix picked;
    for (size_t i : chosen) picked.push_back(rows[i]);
    bool candidate_basis = chosen.size() == hnf.size() && hermite_normal_form(picked, amb) == hnf;
    std::vector<std::string> labels;
    std::vector<std::optional<std::vector<int>>> exps;
    if (candidate_basis) {
        for (size_t i : chosen) {
            labels.push_back(all[i].label);
            exps.push_back(all[i].exps);
        }
        lattice_[d].emplace(std::move(picked), amb);
    } else {
        for (const auto& r : hnf) {
            labels.push_back("[" + full_.from_coordinates(d, r).to_string() + "]");
            exps.emplace_back(std::nullopt);
        }
        lattice_[d].emplace(std::move(hnf), amb);
    }
    labels_[d] = std::move(labels);
    exps_[d] = std::move(exps);
}

std::optional<IntVector> ChowRing::coordinates(const Polynomial& p, int d) const
{
    if (d < 0 || d > top_degree()) return IntVector{};
    return lattice(d).coordinates(full_.coordinates(p, d));
}

Polynomial ChowRing::element(int d, const IntVector& coords) const
{
    return full_.from_coordinates(d, lattice(d).combine(coords));
}

IntMatrix ChowRing::multiplication_matrix(const Polynomial& f, int d) const
{
    if (f.is_zero()) return zero_matrix(0, rank(d));
    if (!f.is_homogeneous()) throw std::invalid_argument("multiplier must be homogeneous");
    int e = f.max_degree();
    const size_t src = rank(d), dst = rank(d + e);
    IntMatrix m = zero_matrix(dst, src);
    if (dst == 0) return m;
    for (size_t j = 0; j < src; ++j) {
        Polynomial b = full_.from_coordinates(d, lattice(d).rows()[j]);
        auto c = coordinates(b * f, d + e);
        if (!c) throw std::domain_error("product left the partial flag subring");
        for (size_t i = 0; i < dst; ++i) m[i][j] = (*c)[i];
    }
    return m;
}

Multiplier ChowRing::multiplier(const Polynomial& f) const
{
    int e = f.is_zero() ? 0 : f.max_degree();
    return Multiplier{Grade{e, 0}, [this, f](const Grade& src) { return multiplication_matrix(f, src.degree); }};
}

RankFn ChowRing::rank_fn() const
{
    return [this](const Grade& g) -> size_t { return g.twist ? 0 : rank(g.degree); };
}

Polynomial ChowRing::point_class() const { return class_of_point(shape_); }

BigInt ChowRing::integrate(const Polynomial& p) const
{
    const int top = top_degree();
    IntVector v = full_.coordinates(p, top);
    IntVector pt = full_.coordinates(point_class(), top);
    size_t k = 0;
    while (k < pt.size() && pt[k] == 0) ++k;
    if (k == pt.size()) throw std::logic_error("point class vanished");
    if (!mpz_divisible_p(v[k].get_mpz_t(), pt[k].get_mpz_t()))
        throw std::domain_error("top-degree part is not a multiple of the point class");
    BigInt lambda = v[k] / pt[k];
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != lambda * pt[i]) throw std::domain_error("top-degree part is not a multiple of the point class");
    return lambda;
}

Polynomial ChowRing::pullback(const Polynomial& in_chern_vars) const
{
    if (!(*in_chern_vars.vars() == *chern_vars_)) throw std::invalid_argument("expected a polynomial in the Chern classes");
    return full_.normal_form(in_chern_vars.substitute(generator_polys_));
}

Polynomial chow_poincare(const FlagShape& shape)
{
    std::vector<BigInt> one_minus(1, 1);
    auto factor = [](int j) {
        std::vector<BigInt> c(j + 1, BigInt(0));
        c[0] = 1;
        c[j] = -1;
        return t_poly(c);
    };
    Polynomial num = Polynomial::constant(t_vars(), 1), den = Polynomial::constant(t_vars(), 1);
    for (int j = 1; j <= shape.n(); ++j) num = num * factor(j);
    for (int d : shape.parts())
        for (int j = 1; j <= d; ++j) den = den * factor(j);
    auto q = divide_exact(num, den);
    if (!q) throw std::logic_error("q-multinomial division was not exact");
    return *q;
}

Polynomial chow_poincare_from_basis(const ChowRing& ring)
{
    std::vector<BigInt> c;
    for (int d = 0; d <= ring.top_degree(); ++d) c.emplace_back(static_cast<unsigned long>(ring.rank(d)));
    return t_poly(c);
}

Polynomial normal_form_fln(int n, const Polynomial& p)
{
    FullFlagRing ring(n);
    return ring.normal_form(p.rebase(ring.vars()));
}

Polynomial schubert_monomial(const FullFlagRing& ring, const std::vector<int>& indices)
{
    Exponents e(ring.n(), 0);
    for (int i : indices) {
        if (i < 1 || i > ring.n()) throw std::out_of_range("variable index");
        e[i - 1] += 1;
    }
    return Polynomial::monomial(ring.vars(), e);
}

Polynomial schubert_monomial(const FullFlagRing& ring, int i)
{
    std::vector<int> idx(i);
    std::iota(idx.begin(), idx.end(), 1);
    return schubert_monomial(ring, idx);
}

size_t ideal_total_rank(const ChowRing& ring, const std::vector<Polynomial>& gens)
{
    std::vector<Multiplier> ms;
    for (const auto& g : gens) ms.push_back(ring.multiplier(g));
    size_t total = 0;
    for (int d = 0; d <= ring.top_degree(); ++d) total += ideal_piece(ring.rank_fn(), ms, Grade{d, 0}).size();
    return total;
}

size_t schubert_ideal_rank(int n, int i)
{
    ChowRing ring(FlagShape::full(n));
    return ideal_total_rank(ring, {schubert_monomial(ring.full(), i)});
}

std::vector<PieceCheck> ideal_quotient_degreewise(const ChowRing& ring, const std::vector<Polynomial>& ideal,
                                                  const std::vector<Polynomial>& by,
                                                  const std::vector<Polynomial>& expected)
{
    auto mults = [&](const std::vector<Polynomial>& ps) {
        std::vector<Multiplier> out;
        for (const auto& p : ps)
            if (!p.is_zero()) out.push_back(ring.multiplier(p));
        return out;
    };
    auto mi = mults(ideal), mj = mults(by), mh = mults(expected);
    std::vector<PieceCheck> out;
    for (int d = 0; d <= ring.top_degree(); ++d) {
        Grade g{d, 0};
        IntMatrix q = quotient_piece(ring.rank_fn(), mi, mj, g);
        IntMatrix h = ideal_piece(ring.rank_fn(), mh, g);
        out.push_back(PieceCheck{d, 0, q == h});
    }
    return out;
}

namespace {

bool all_ok(const std::vector<PieceCheck>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const PieceCheck& c) { return c.ok; });
}

}  // namespace

bool piqp_check(int n, int i, int j)
{
    if (!(1 <= j && j < i && i <= n)) throw std::invalid_argument("need 1 <= j < i <= N");
    ChowRing ring(FlagShape::full(n));
    std::vector<int> diff;
    for (int k = j + 1; k <= i; ++k) diff.push_back(k);
    return all_ok(ideal_quotient_degreewise(ring, {schubert_monomial(ring.full(), i)},
                                            {schubert_monomial(ring.full(), j)},
                                            {schubert_monomial(ring.full(), diff)}));
}

bool fln_annihilator_check(int n, int i)
{
    ChowRing ring(FlagShape::full(n));
    std::vector<int> rest;
    for (int k = i + 1; k <= n; ++k) rest.push_back(k);
    return all_ok(ideal_quotient_degreewise(ring, {}, {schubert_monomial(ring.full(), i)},
                                            {schubert_monomial(ring.full(), rest)}));
}

bool ann_top_chern(const FlagShape& shape, int block)
{
    ChowRing ring(shape);
    const int m = shape.blocks();
    if (block == 0) block = m;
    if (block < 1 || block > m) throw std::out_of_range("block index");
    Polynomial x = Polynomial::constant(ring.full().vars(), 1);
    for (int j = 1; j <= m; ++j)
        if (j != block) x = ring.full().multiply(x, ring.top_chern(j));
    return all_ok(ideal_quotient_degreewise(ring, {}, {ring.top_chern(block)}, {x}));
}

Polynomial class_of_point(const FlagShape& shape)
{
    FullFlagRing full(shape.n());
    Exponents e(shape.n(), 0);
    int sign = 1;
    for (int i = 1; i < shape.blocks(); ++i) {
        int corank = shape.n() - shape.partial_sum(i);
        for (int k = 0; k < shape.part(i); ++k) {
            e[shape.block_offset(i) + k] = corank;
            if (corank % 2) sign = -sign;
        }
    }
    return full.normal_form(Polynomial::monomial(full.vars(), e, sign));
}

BigInt integrate_fln(const FlagShape& shape, const Polynomial& p)
{
    ChowRing ring(shape);
    return ring.integrate(p.rebase(ring.full().vars()));
}

bool poincare_duality_check(const ChowRing& ring)
{
    const int top = ring.top_degree();
    for (int d = 0; d <= top; ++d) {
        size_t a = ring.rank(d), b = ring.rank(top - d);
        if (a != b) return false;
        IntMatrix pairing = zero_matrix(a, b);
        for (size_t i = 0; i < a; ++i) {
            Polynomial u = ring.element(d, unit_vector(a, i));
            for (size_t j = 0; j < b; ++j) {
                Polynomial v = ring.element(top - d, unit_vector(b, j));
                pairing[i][j] = ring.integrate(u * v);
            }
        }
        BigInt det = determinant(pairing);
        if (det != 1 && det != -1) return false;
    }
    return true;
}

SchubertPermutation::SchubertPermutation(std::vector<int> one_line) : w_(std::move(one_line))
{
    std::vector<int> sorted = w_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation of 1..n");
}

SchubertPermutation SchubertPermutation::identity(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SchubertPermutation(w);
}

SchubertPermutation SchubertPermutation::coxeter_prefix(int n, int i)
{
    if (i < 0 || i >= n) throw std::invalid_argument("need 0 <= i < n");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int k = 0; k < i; ++k) std::swap(w[k], w[k + 1]);
    return SchubertPermutation(w);
}

std::vector<SchubertPermutation> SchubertPermutation::all(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<SchubertPermutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int SchubertPermutation::length() const
{
    int inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

int SchubertPermutation::inverse_at(int value) const
{
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] == value) return static_cast<int>(i) + 1;
    throw std::out_of_range("value not in permutation");
}

bool SchubertPermutation::bruhat_leq(const SchubertPermutation& o) const
{
    if (o.w_.size() != w_.size()) throw std::invalid_argument("permutations of different size");
    for (size_t k = 1; k < w_.size(); ++k) {
        std::vector<int> a(w_.begin(), w_.begin() + static_cast<long>(k));
        std::vector<int> b(o.w_.begin(), o.w_.begin() + static_cast<long>(k));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (size_t i = 0; i < k; ++i)
            if (a[i] > b[i]) return false;
    }
    return true;
}

std::string SchubertPermutation::to_string() const
{
    std::string s = "[";
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w_[i]);
    }
    return s + "]";
}

}  // namespace flagcw

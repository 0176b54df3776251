#include "flagcw/wdring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace flagcw {

WElement& WElement::operator+=(const WElement& o)
{
    for (const auto& [k, p] : o.parts) {
        auto it = parts.find(k);
        if (it == parts.end()) {
            if (!p.is_zero()) parts.emplace(k, p);
            continue;
        }
        it->second += p;
        if (it->second.is_zero()) parts.erase(it);
    }
    return *this;
}

WElement WElement::operator-() const
{
    WElement out;
    for (const auto& [k, p] : parts) out.parts.emplace(k, -p);
    return out;
}

WElement operator+(WElement a, const WElement& b) { return a += b; }
WElement operator-(WElement a, const WElement& b) { return a += -b; }

namespace {

ChowRing::Namer pontryagin_namer(std::vector<int> original)
{
    return [original](int block, int j) {
        return "p" + std::to_string(2 * j) + "(D" + std::to_string(original[block - 1]) + ")";
    };
}

std::vector<int> surviving_blocks(const FlagShape& shape)
{
    std::vector<int> out;
    for (int i = 1; i <= shape.blocks(); ++i)
        if (shape.half_block(i)) out.push_back(i);
    return out;
}

int sign_of_merge(uint32_t a, uint32_t b)
{
    int swaps = 0;
    for (uint32_t x = b; x; x &= x - 1) {
        uint32_t bit = x & (~x + 1);
        // elements of a above this element of b must move past it
        swaps += std::popcount(a & ~((bit << 1) - 1));
    }
    return swaps % 2 ? -1 : 1;
}

}  // namespace

WRing::WRing(FlagShape shape)
    : shape_(std::move(shape)),
      half_(shape_.half()),
      base_(half_, pontryagin_namer(surviving_blocks(shape_)))
{
    const int m = shape_.blocks();
    half_index_.resize(m);
    bool any_odd = false;
    for (int i = 1; i <= m; ++i) {
        half_index_[i - 1] = shape_.half_block(i);
        q_ += shape_.part(i) / 2;
        if (shape_.part(i) % 2) {
            any_odd = true;
        } else {
            euler_blocks_.push_back(i);
            euler_mask_ |= 1u << (i - 1);
        }
        int h = half_index_[i - 1];
        p_top_.push_back(h ? base_.full().normal_form(base_.top_chern(h)) : Polynomial::constant(base_.full().vars(), 1));
    }
    parity_ = !any_odd ? Parity::AllEven : euler_blocks_.empty() ? Parity::AllOdd : Parity::Mixed;
    n_ = shape_.n() / 2;
    for (int l = q_ + 1; l <= n_; ++l)
        ext_degrees_.push_back(l == n_ && shape_.n() % 2 == 0 ? shape_.n() - 1 : 4 * l - 1);
}

std::string WRing::parity_name() const
{
    switch (parity_) {
    case Parity::AllEven: return "all-even";
    case Parity::Mixed: return "mixed";
    case Parity::AllOdd: return "all-odd";
    }
    return "";
}

std::vector<WRing::Generator> WRing::generators() const
{
    const int m = shape_.blocks();
    std::vector<Generator> out;
    for (int i = 1; i <= m; ++i) {
        int h = half_index_[i - 1];
        for (int j = 1; h && j <= half_.part(h); ++j)
            out.push_back({base_.generator_name(h, j), 4 * j, TwistClass(m, 0)});
    }
    for (int i : euler_blocks_) out.push_back({"e" + std::to_string(i), shape_.part(i), TwistClass(m, 1u << (i - 1))});
    for (size_t l = 0; l < ext_degrees_.size(); ++l)
        out.push_back({"R" + std::to_string(q_ + 1 + static_cast<int>(l)), ext_degrees_[l], TwistClass(m, 0)});
    return out;
}

int WRing::euler_degree(uint32_t mask) const
{
    int d = 0;
    for (int i : euler_blocks_)
        if (mask >> (i - 1) & 1u) d += shape_.part(i);
    return d;
}

int WRing::exterior_degree(uint32_t mask) const
{
    int d = 0;
    for (size_t l = 0; l < ext_degrees_.size(); ++l)
        if (mask >> l & 1u) d += ext_degrees_[l];
    return d;
}

uint32_t WRing::twist_of(uint32_t euler_mask) const { return TwistClass(shape_.blocks(), euler_mask).mask(); }

int WRing::top_degree() const
{
    if (top_) return *top_;
    uint32_t all_ext = ext_degrees_.empty() ? 0 : (1u << ext_degrees_.size()) - 1;
    int d = 4 * base_.top_degree() + euler_degree(euler_mask_) + exterior_degree(all_ext);
    // prod e_i vanishes when every block is even
    for (; d > 0; --d) {
        bool any = false;
        for (const auto& tw : twists()) any = any || rank({d, tw.mask()}) > 0;
        if (any) break;
    }
    top_ = d;
    return d;
}

WElement WRing::from_base(const Polynomial& a) const
{
    WElement x;
    Polynomial nf = base_.full().normal_form(a);
    if (!nf.is_zero()) x.parts.emplace(WElement::Key{0, 0}, nf);
    return x;
}

WElement WRing::one() const { return constant(1); }

WElement WRing::constant(const BigInt& c) const { return from_base(Polynomial::constant(base_.full().vars(), c)); }

WElement WRing::pontryagin(int block, int j) const
{
    if (block < 1 || block > shape_.blocks()) throw std::out_of_range("block index");
    if (j == 0) return one();
    int h = half_index_[block - 1];
    if (!h || j < 0 || j > half_.part(h)) return zero();
    return from_base(base_.chern(h, j));
}

WElement WRing::euler(int block) const
{
    if (block < 1 || block > shape_.blocks()) throw std::out_of_range("block index");
    WElement x;
    if (shape_.part(block) % 2 == 0)
        x.parts.emplace(WElement::Key{1u << (block - 1), 0}, Polynomial::constant(base_.full().vars(), 1));
    return normal_form(x);
}

WElement WRing::exterior(int l) const
{
    if (l <= q_ || l > n_) throw std::out_of_range("exterior generators are R_{q+1}..R_n");
    WElement x;
    x.parts.emplace(WElement::Key{0, 1u << (l - q_ - 1)}, Polynomial::constant(base_.full().vars(), 1));
    return x;
}

WElement WRing::multiply(const WElement& a, const WElement& b) const
{
    WElement out;
    for (const auto& [ka, pa] : a.parts)
        for (const auto& [kb, pb] : b.parts) {
            if (ka.second & kb.second) continue;
            Polynomial c = pa * pb;
            for (uint32_t both = ka.first & kb.first; both; both &= both - 1)
                c = c * p_top_[std::countr_zero(both)];
            if (sign_of_merge(ka.second, kb.second) < 0) c = -c;
            WElement term;
            term.parts.emplace(WElement::Key{ka.first ^ kb.first, ka.second | kb.second}, base_.full().normal_form(c));
            out += term;
        }
    return normal_form(out);
}

const QuotientBasis& WRing::quotient(uint32_t euler, int k) const
{
    auto key = std::make_pair(euler, k);
    auto it = quotients_.find(key);
    if (it != quotients_.end()) return it->second;
    const size_t r = base_.rank(k);
    Polynomial p = Polynomial::constant(base_.full().vars(), 1);
    for (int i : euler_blocks_)
        if (!(euler >> (i - 1) & 1u)) p = p * p_top_[i - 1];
    p = base_.full().normal_form(p);
    IntMatrix sub;
    if (!p.is_zero()) {
        int e = p.max_degree();
        if (k - e >= 0) {
            size_t src = base_.rank(k - e);
            sub = transpose(base_.multiplication_matrix(p, k - e), src);
        }
    }
    QuotientBasis qb = quotient_basis(sub, r, identity_matrix(r));
    if (!qb.free) throw std::logic_error("quotient of the Pontryagin ring has torsion");
    return quotients_.emplace(key, std::move(qb)).first->second;
}

std::vector<WRing::Component> WRing::components(const Grade& g) const
{
    std::vector<Component> out;
    const uint32_t ext_count = 1u << ext_degrees_.size();
    for (uint32_t I = euler_mask_;; I = (I - 1) & euler_mask_) {
        if (twist_of(I) == g.twist)
            for (uint32_t J = 0; J < ext_count; ++J) {
                int rest = g.degree - euler_degree(I) - exterior_degree(J);
                if (rest >= 0 && rest % 4 == 0 && rest / 4 <= base_.top_degree()) out.push_back({I, J, rest / 4});
            }
        if (I == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

size_t WRing::component_rank(const Component& c) const
{
    if (parity_ == Parity::AllEven) return quotient(c.euler, c.k).rank();
    return base_.rank(c.k);
}

size_t WRing::rank(const Grade& g) const
{
    if (g.degree < 0) return 0;
    size_t r = 0;
    for (const auto& c : components(g)) r += component_rank(c);
    return r;
}

RankFn WRing::rank_fn() const
{
    return [this](const Grade& g) { return rank(g); };
}

Polynomial WRing::base_coefficient(const Component& c, size_t index) const
{
    if (parity_ == Parity::AllEven) return base_.element(c.k, quotient(c.euler, c.k).lifts[index]);
    IntVector unit(base_.rank(c.k), 0);
    unit[index] = 1;
    return base_.element(c.k, unit);
}

std::string WRing::base_label(const Component& c, size_t index) const
{
    size_t row = index;
    if (parity_ == Parity::AllEven) {
        const auto& qb = quotient(c.euler, c.k);
        if (qb.preferred_used.empty()) return "[" + base_coefficient(c, index).to_string() + "]";
        row = qb.preferred_used[index];
    }
    return a_label(c.k, row);
}

std::vector<std::string> WRing::basis_labels(const Grade& g) const
{
    std::vector<std::string> out;
    for (const auto& c : components(g)) {
        std::string tail;
        for (int i : euler_blocks_)
            if (c.euler >> (i - 1) & 1u) tail += "*e" + std::to_string(i);
        for (size_t l = 0; l < ext_degrees_.size(); ++l)
            if (c.ext >> l & 1u) tail += "*R" + std::to_string(q_ + 1 + static_cast<int>(l));
        for (size_t b = 0; b < component_rank(c); ++b) {
            std::string head = base_label(c, b);
            if (head == "1" && !tail.empty())
                out.push_back(tail.substr(1));
            else
                out.push_back(head + tail);
        }
    }
    return out;
}

WElement WRing::basis_element(const Grade& g, size_t index) const
{
    for (const auto& c : components(g)) {
        size_t r = component_rank(c);
        if (index < r) {
            WElement x;
            x.parts.emplace(WElement::Key{c.euler, c.ext}, base_coefficient(c, index));
            return x;
        }
        index -= r;
    }
    throw std::out_of_range("basis index");
}

WElement WRing::normal_form(const WElement& x) const
{
    WElement out;
    for (const auto& [key, p] : x.parts) {
        Polynomial nf = base_.full().normal_form(p);
        if (parity_ == Parity::AllEven) {
            Polynomial reduced(nf.vars());
            for (int k = nf.min_degree(); !nf.is_zero() && k <= nf.max_degree(); ++k) {
                Polynomial part = nf.homogeneous_part(k);
                if (part.is_zero()) continue;
                auto coords = base_.coordinates(part, k);
                if (!coords) throw std::invalid_argument("coefficient is not in the Pontryagin subring");
                const auto& qb = quotient(key.first, k);
                IntVector qc = qb.project(*coords);
                IntVector lift(base_.rank(k), 0);
                for (size_t i = 0; i < qc.size(); ++i)
                    for (size_t j = 0; j < lift.size(); ++j) lift[j] += qc[i] * qb.lifts[i][j];
                reduced += base_.element(k, lift);
            }
            nf = reduced;
        }
        if (nf.is_zero()) continue;
        WElement term;
        term.parts.emplace(key, nf);
        out += term;
    }
    return out;
}

std::optional<Grade> WRing::grade_of(const WElement& x) const
{
    std::optional<Grade> g;
    for (const auto& [key, p] : x.parts) {
        if (!p.is_homogeneous()) return std::nullopt;
        Grade h{4 * p.max_degree() + euler_degree(key.first) + exterior_degree(key.second), twist_of(key.first)};
        if (g && !(*g == h)) return std::nullopt;
        g = h;
    }
    return g;
}

IntVector WRing::coordinates(const WElement& x, const Grade& g) const
{
    WElement nf = normal_form(x);
    IntVector out;
    for (const auto& c : components(g)) {
        auto it = nf.parts.find({c.euler, c.ext});
        Polynomial part = it == nf.parts.end() ? Polynomial(base_.full().vars()) : it->second.homogeneous_part(c.k);
        auto coords = base_.coordinates(part, c.k);
        if (!coords) throw std::invalid_argument("coefficient is not in the Pontryagin subring");
        IntVector v = parity_ == Parity::AllEven ? quotient(c.euler, c.k).project(*coords) : *coords;
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Multiplier WRing::multiplier(const WElement& f) const
{
    WElement nf = normal_form(f);
    Grade grade{0, 0};
    if (!nf.is_zero()) {
        auto g = grade_of(nf);
        if (!g) throw std::invalid_argument("multiplier must be homogeneous");
        grade = *g;
    }
    return Multiplier{grade, [this, nf, grade](const Grade& source) {
                          const size_t src = rank(source);
                          const Grade target = source + grade;
                          const size_t dst = rank(target);
                          IntMatrix m = zero_matrix(dst, src);
                          if (nf.is_zero()) return m;
                          for (size_t j = 0; j < src; ++j) {
                              IntVector col = coordinates(multiply(basis_element(source, j), nf), target);
                              for (size_t i = 0; i < dst; ++i) m[i][j] = col[i];
                          }
                          return m;
                      }};
}

Polynomial WRing::poincare(const TwistClass& twist) const
{
    std::vector<BigInt> coeffs(top_degree() + 1, BigInt(0));
    for (int d = 0; d <= top_degree(); ++d) coeffs[d] = static_cast<unsigned long>(rank({d, twist.mask()}));
    return t_poly(coeffs);
}

size_t WRing::total_rank() const
{
    size_t r = 0;
    for (const auto& tw : twists())
        for (int d = 0; d <= top_degree(); ++d) r += rank({d, tw.mask()});
    return r;
}

std::string WRing::to_string(const WElement& x) const
{
    if (x.is_zero()) return "0";
    // (coefficient, monomial) pairs with the monomial written in the generators
    std::vector<std::pair<BigInt, std::string>> terms;
    for (const auto& [key, p] : x.parts) {
        std::string tail;
        for (int i : euler_blocks_)
            if (key.first >> (i - 1) & 1u) tail += "*e" + std::to_string(i);
        for (size_t l = 0; l < ext_degrees_.size(); ++l)
            if (key.second >> l & 1u) tail += "*R" + std::to_string(q_ + 1 + static_cast<int>(l));
        for (int k = p.min_degree(); k <= p.max_degree(); ++k) {
            Polynomial part = p.homogeneous_part(k);
            if (part.is_zero()) continue;
            auto coords = base_.coordinates(part, k);
            if (!coords) throw std::invalid_argument("coefficient is not in the Pontryagin subring");
            for (size_t b = 0; b < coords->size(); ++b) {
                if ((*coords)[b] == 0) continue;
                std::string head = a_label(k, b);
                std::string mono = head == "1" ? (tail.empty() ? "1" : tail.substr(1)) : head + tail;
                terms.emplace_back((*coords)[b], mono);
            }
        }
    }
    std::string out;
    for (const auto& [c, mono] : terms) {
        BigInt mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono == "1")
            out += mag.get_str();
        else
            out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    }
    return out;
}

std::string WRing::a_label(int k, size_t row) const
{
    if (half_.is_full() && k > 0) return Polynomial::monomial(base_.chern_vars(), base_.full().basis(k)[row]).to_string();
    return base_.labels(k)[row];
}

AnnihilatorReport ann_euler(const WRing& ring, int block, int degree_bound)
{
    const FlagShape& shape = ring.shape();
    if (block < 1 || block > shape.blocks()) throw std::out_of_range("block index");
    if (shape.part(block) % 2) throw std::invalid_argument("annihilators are computed for even-rank blocks");
    AnnihilatorReport rep;
    rep.block = block;
    WElement x;
    if (ring.parity() == WRing::Parity::AllEven) {
        x = ring.one();
        for (int j = 1; j <= shape.blocks(); ++j)
            if (j != block) x = ring.multiply(x, ring.euler(j));
    } else {
        x = ring.euler(block);
        for (int j = 1; j <= shape.blocks(); ++j)
            if (j != block) x = ring.multiply(x, ring.from_base(ring.p_top(j)));
    }
    rep.generator = x;
    rep.generator_text = ring.to_string(x);
    if (degree_bound < 0) degree_bound = ring.top_degree();
    const RankFn rank = ring.rank_fn();
    Multiplier by_e = ring.multiplier(ring.euler(block));
    std::vector<Multiplier> gens;
    if (!x.is_zero()) gens.push_back(ring.multiplier(x));
    for (int d = 0; d <= degree_bound; ++d)
        for (const auto& tw : ring.twists()) {
            Grade g{d, tw.mask()};
            const size_t r = rank(g);
            bool ok = true;
            if (r) {
                IntMatrix ann = annihilator_piece(rank, by_e, g);
                IntMatrix ideal = ideal_piece(rank, gens, g);
                ok = same_lattice(ann, ideal, r);
            }
            rep.pieces.push_back({d, tw.mask(), ok});
            if (!ok && !rep.first_mismatch) rep.first_mismatch = g;
        }
    return rep;
}

Polynomial wd_poincare(const FlagShape& shape, const TwistClass& twist) { return WRing(shape).poincare(twist); }

std::pair<BigInt, BigInt> real_fl11n_reduce(int n, const Polynomial& p)
{
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (p.nvars() != 2) throw std::invalid_argument("expected a polynomial in x1, x2");
    return {p.coefficient({n + 1, n}), p.coefficient({n, n + 1})};
}

}  // namespace flagcw

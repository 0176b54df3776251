#include "flagcw/graded.hpp"

namespace flagcw {

namespace {

size_t safe_rank(const RankFn& rank, const Grade& g) { return g.degree < 0 ? 0 : rank(g); }

}  // namespace

IntMatrix ideal_piece(const RankFn& rank, const std::vector<Multiplier>& gens, const Grade& piece)
{
    const size_t n = safe_rank(rank, piece);
    IntMatrix rows;
    for (const auto& g : gens) {
        Grade src = piece - g.grade;
        size_t k = safe_rank(rank, src);
        if (k == 0 || n == 0) continue;
        IntMatrix m = g.matrix(src);
        IntMatrix cols = transpose(m, k);
        for (auto& c : cols) rows.push_back(std::move(c));
    }
    return hermite_normal_form(rows, n);
}

IntMatrix quotient_piece(const RankFn& rank, const std::vector<Multiplier>& ideal,
                         const std::vector<Multiplier>& by, const Grade& piece)
{
    const size_t n = safe_rank(rank, piece);
    if (n == 0) return {};
    // Columns: a (n of them), then for each g a block of coefficients on the ideal basis.
    std::vector<IntMatrix> targets;
    std::vector<IntMatrix> ideal_bases;
    size_t total_cols = n, total_rows = 0;
    for (const auto& g : by) {
        Grade t = piece + g.grade;
        size_t tn = safe_rank(rank, t);
        targets.push_back(tn ? g.matrix(piece) : IntMatrix{});
        ideal_bases.push_back(tn ? ideal_piece(rank, ideal, t) : IntMatrix{});
        total_cols += ideal_bases.back().size();
        total_rows += tn;
    }
    IntMatrix big = zero_matrix(total_rows, total_cols);
    size_t row0 = 0, col0 = n;
    for (size_t gi = 0; gi < by.size(); ++gi) {
        const IntMatrix& m = targets[gi];
        const IntMatrix& basis = ideal_bases[gi];
        size_t tn = m.size();
        for (size_t r = 0; r < tn; ++r) {
            for (size_t c = 0; c < n; ++c) big[row0 + r][c] = m[r][c];
            for (size_t b = 0; b < basis.size(); ++b) big[row0 + r][col0 + b] = -basis[b][r];
        }
        row0 += tn;
        col0 += basis.size();
    }
    IntMatrix kernel = integer_kernel(big, total_cols);
    IntMatrix proj;
    for (const auto& v : kernel) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
    return hermite_normal_form(proj, n);
}

IntMatrix annihilator_piece(const RankFn& rank, const Multiplier& f, const Grade& piece)
{
    const size_t n = safe_rank(rank, piece);
    if (n == 0) return {};
    if (safe_rank(rank, piece + f.grade) == 0) return identity_matrix(n);
    return integer_kernel(f.matrix(piece), n);
}

size_t multiplication_rank(const RankFn& rank, const Multiplier& f, const Grade& piece)
{
    const size_t n = safe_rank(rank, piece);
    if (n == 0 || safe_rank(rank, piece + f.grade) == 0) return 0;
    return lattice_rank(transpose(f.matrix(piece), n), safe_rank(rank, piece + f.grade));
}

}  // namespace flagcw

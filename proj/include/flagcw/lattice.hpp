#pragma once

#include "flagcw/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace flagcw {

// Row-major integer matrix. A linear map Z^cols -> Z^rows acts on column vectors.
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

IntMatrix zero_matrix(size_t rows, size_t cols);
IntMatrix identity_matrix(size_t n);
IntMatrix transpose(const IntMatrix& m, size_t cols);
IntVector apply(const IntMatrix& m, const IntVector& v, size_t rows);

// Row Hermite normal form: positive pivots, entries above a pivot reduced into [0, pivot).
// Zero rows are removed. If transform is given it receives U with U * input = [H; 0].
IntMatrix hermite_normal_form(IntMatrix rows, size_t cols, IntMatrix* transform = nullptr,
                              IntMatrix* inverse = nullptr);

size_t lattice_rank(const IntMatrix& rows, size_t cols);
bool same_lattice(const IntMatrix& a, const IntMatrix& b, size_t cols);
// Integer basis (as rows) of {v : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m, size_t cols);
BigInt determinant(IntMatrix m);

// Z-basis of a lattice with a solver for coordinates.
class LatticeBasis {
public:
    LatticeBasis() = default;
    LatticeBasis(IntMatrix basis, size_t ambient);

    size_t rank() const { return basis_.size(); }
    size_t ambient() const { return ambient_; }
    const IntMatrix& rows() const { return basis_; }
    std::optional<IntVector> coordinates(const IntVector& v) const;
    IntVector combine(const IntVector& coords) const;

private:
    IntMatrix basis_;
    IntMatrix hnf_;
    IntMatrix to_basis_;
    std::vector<size_t> pivots_;
    size_t ambient_ = 0;
};

// Basis for Z^n / S. Quotient coordinates of x are projection * x; lifts are representatives.
struct QuotientBasis {
    size_t ambient = 0;
    size_t sub_rank = 0;
    bool free = true;
    IntMatrix lifts;
    IntMatrix projection;
    std::vector<size_t> preferred_used;  // indices into the preferred list, if that route succeeded

    size_t rank() const { return lifts.size(); }
    IntVector project(const IntVector& x) const;
};

// S is spanned by sub_generators. Lifts are drawn from preferred rows when they form a
// complement; otherwise a computed complement is used.
QuotientBasis quotient_basis(const IntMatrix& sub_generators, size_t n, const IntMatrix& preferred = {});

// Greedy choice of rows independent over Q, checked modulo a large prime.
std::vector<size_t> independent_rows(const IntMatrix& rows, size_t cols, const IntMatrix& seed = {});

// Dense matrices over F2 with bit-packed rows.
class F2Matrix {
public:
    F2Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t r, size_t c) const { return (data_[r][c >> 6] >> (c & 63)) & 1u; }
    void set(size_t r, size_t c, bool v);
    void flip(size_t r, size_t c) { data_[r][c >> 6] ^= uint64_t{1} << (c & 63); }
    size_t rank() const;

private:
    size_t rows_, cols_;
    std::vector<std::vector<uint64_t>> data_;
};

}  // namespace flagcw

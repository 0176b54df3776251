#pragma once

#include "flagcw/lattice.hpp"

#include <functional>
#include <vector>

namespace flagcw {

// Degree plus a twist mask; twists add by xor.
struct Grade {
    int degree = 0;
    uint32_t twist = 0;

    Grade operator+(const Grade& o) const { return {degree + o.degree, twist ^ o.twist}; }
    Grade operator-(const Grade& o) const { return {degree - o.degree, twist ^ o.twist}; }
    bool operator==(const Grade& o) const { return degree == o.degree && twist == o.twist; }
};

using RankFn = std::function<size_t(const Grade&)>;

// Multiplication by a fixed homogeneous element, as a matrix from the piece at `source`
// (columns) to the piece at source + grade (rows).
struct Multiplier {
    Grade grade;
    std::function<IntMatrix(const Grade& source)> matrix;
};

// Ideal generated by gens, in the given piece: HNF rows in piece coordinates.
IntMatrix ideal_piece(const RankFn& rank, const std::vector<Multiplier>& gens, const Grade& piece);

// {a in piece : a g in I for every g in J}, as HNF rows.
IntMatrix quotient_piece(const RankFn& rank, const std::vector<Multiplier>& ideal,
                         const std::vector<Multiplier>& by, const Grade& piece);

// Kernel of multiplication by one element, as HNF rows.
IntMatrix annihilator_piece(const RankFn& rank, const Multiplier& f, const Grade& piece);

// Rank of multiplication by f out of the piece.
size_t multiplication_rank(const RankFn& rank, const Multiplier& f, const Grade& piece);

}  // namespace flagcw

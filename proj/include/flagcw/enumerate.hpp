#pragma once

#include "flagcw/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagcw {

struct CountResult {
    BigInt complex;
    std::optional<BigInt> real;
    std::optional<BigInt> diagnostic;  // real count under the other sign identification
    std::vector<std::string> notes;
};

// Signed count as a sum of <1> and <-1>.
struct GWForm {
    BigInt plus;
    BigInt minus;
};

GWForm gw_form(const BigInt& complex, const BigInt& real);

// prod over |alpha| = d of sum alpha_i t_i: the top Chern class of Sym^d S^dual in the
// Chern roots t_1..t_k of S^dual.
Polynomial sym_top_chern(int k, int d);
// Number of k-planes in an n-space on a generic hypersurface of degree d.
BigInt hypersurface_count(int k, int n, int d);

CountResult count_lines_cubic();
BigInt count_quintic_fourplanes();

struct FlagComplexCount {
    BigInt via_product;      // 27 times the quintic count
    BigInt fiber_pushforward;  // pushforward of the cubic condition along the Gr(2,4) fibres
    BigInt via_pushforward;
    bool agree() const { return via_product == via_pushforward; }
};

// Flags A2 in A4 in an 18-space with A2 on a cubic and A4 on a quintic.
FlagComplexCount count_flags_complex();

struct RealFlagCount {
    BigInt upper;  // coefficient of x1^8 x2^7
    BigInt lower;  // coefficient of x1^7 x2^8
    BigInt primary;
    BigInt diagnostic;
};

RealFlagCount count_flags_real();

// a^{2i} b^{2j} -> x1^i x2^j; every exponent must be even.
Polynomial halve_exponents(const Polynomial& p);

}  // namespace flagcw

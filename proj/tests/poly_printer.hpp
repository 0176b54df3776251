#pragma once

#include "flagcw/poly.hpp"

#include <catch_amalgamated.hpp>

namespace Catch {
template <>
struct StringMaker<flagcw::Polynomial> {
    static std::string convert(const flagcw::Polynomial& p) { return p.to_string(); }
};
template <>
struct StringMaker<flagcw::BigInt> {
    static std::string convert(const flagcw::BigInt& v) { return v.get_str(); }
};
}  // namespace Catch

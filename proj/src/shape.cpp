#include "flagcw/shape.hpp"

#include <sstream>
#include <stdexcept>

namespace flagcw {

FlagShape::FlagShape(const std::vector<int>& parts)
{
    for (int d : parts) {
        if (d < 0) throw std::invalid_argument("flag shape parts must be nonnegative");
        if (d == 0) {
            notices_.push_back("dropped a zero part from the flag shape");
            continue;
        }
        parts_.push_back(d);
        n_ += d;
    }
    if (parts_.size() > 31) throw std::invalid_argument("flag shape has too many blocks");
}

FlagShape FlagShape::parse(const std::string& text)
{
    std::vector<int> parts;
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in flag shape '" + text + "'");
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw std::invalid_argument("bad entry '" + item + "' in flag shape");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("flag shape is empty");
    return FlagShape(parts);
}

FlagShape FlagShape::full(int n) { return FlagShape(std::vector<int>(n, 1)); }

int FlagShape::partial_sum(int i) const
{
    int s = 0;
    for (int k = 0; k < i; ++k) s += parts_.at(k);
    return s;
}

bool FlagShape::is_full() const
{
    for (int d : parts_)
        if (d != 1) return false;
    return true;
}

int FlagShape::dimension() const
{
    int dim = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        for (size_t j = i + 1; j < parts_.size(); ++j) dim += parts_[i] * parts_[j];
    return dim;
}

FlagShape FlagShape::half() const
{
    std::vector<int> h;
    for (int d : parts_)
        if (d / 2 > 0) h.push_back(d / 2);
    return FlagShape(h);
}

int FlagShape::half_block(int i) const
{
    if (parts_.at(i - 1) / 2 == 0) return 0;
    int k = 0;
    for (int j = 0; j < i; ++j)
        if (parts_[j] / 2 > 0) ++k;
    return k;
}

std::string FlagShape::to_string() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

TwistClass::TwistClass(int blocks, uint32_t mask) : blocks_(blocks)
{
    if (blocks < 0 || blocks > 31) throw std::invalid_argument("twist needs 0 to 31 blocks");
    uint32_t all = blocks ? ((uint32_t{1} << blocks) - 1) : 0;
    if (mask & ~all) throw std::invalid_argument("twist mentions a block outside the shape");
    mask_ = (mask & 1u) ? (mask ^ all) : mask;
}

TwistClass TwistClass::parse(const std::string& text, int blocks)
{
    uint32_t mask = 0;
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') s += c;
    if (s.empty() || s == "0") return TwistClass(blocks, 0);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && (item[0] == 'l' || item[0] == 'L')) item = item.substr(1);
        int b = 0;
        size_t used = 0;
        try {
            b = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) throw std::invalid_argument("bad twist entry '" + item + "'");
        if (b < 1 || b > blocks) throw std::invalid_argument("twist block " + item + " is outside the shape");
        mask ^= uint32_t{1} << (b - 1);
    }
    return TwistClass(blocks, mask);
}

std::vector<TwistClass> TwistClass::all(int blocks)
{
    std::vector<TwistClass> out;
    if (blocks == 0) return {TwistClass(0, 0)};
    for (uint32_t m = 0; m < (uint32_t{1} << blocks); m += 2) out.emplace_back(blocks, m);
    return out;
}

std::vector<int> TwistClass::members() const
{
    std::vector<int> out;
    for (int b = 1; b <= blocks_; ++b)
        if (contains(b)) out.push_back(b);
    return out;
}

std::string TwistClass::to_string() const
{
    if (trivial()) return "0";
    std::string s;
    for (int b : members()) {
        if (!s.empty()) s += '+';
        s += "l" + std::to_string(b);
    }
    return s;
}

}  // namespace flagcw

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagcw {

// Composition D = (d_1, ..., d_m) of N; zero parts are dropped.
class FlagShape {
public:
    FlagShape() = default;
    explicit FlagShape(const std::vector<int>& parts);
    static FlagShape parse(const std::string& text);
    static FlagShape full(int n);

    const std::vector<int>& parts() const { return parts_; }
    int blocks() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(i - 1); }  // 1-based
    int n() const { return n_; }
    int partial_sum(int i) const;                          // d_1 + ... + d_i
    int block_offset(int i) const { return partial_sum(i - 1); }
    bool is_full() const;
    int dimension() const;
    // Parts halved and rounded down, zeros dropped; half_block(i) is 0 when block i vanishes.
    FlagShape half() const;
    int half_block(int i) const;
    const std::vector<std::string>& notices() const { return notices_; }
    std::string to_string() const;

    bool operator==(const FlagShape& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    std::vector<std::string> notices_;
    int n_ = 0;
};

// Sum of l_i over a subset of blocks, modulo the sum over all blocks.
// Stored canonically with block 1 absent.
class TwistClass {
public:
    TwistClass() = default;
    TwistClass(int blocks, uint32_t mask);
    // "0" or "" is trivial; otherwise a comma separated list of 1-based blocks.
    static TwistClass parse(const std::string& text, int blocks);
    static std::vector<TwistClass> all(int blocks);

    uint32_t mask() const { return mask_; }
    int blocks() const { return blocks_; }
    bool trivial() const { return mask_ == 0; }
    bool contains(int block) const { return (mask_ >> (block - 1)) & 1u; }
    std::vector<int> members() const;
    TwistClass operator+(const TwistClass& o) const { return TwistClass(blocks_, mask_ ^ o.mask_); }
    bool operator==(const TwistClass& o) const { return mask_ == o.mask_ && blocks_ == o.blocks_; }
    std::string to_string() const;

private:
    int blocks_ = 0;
    uint32_t mask_ = 0;
};

}  // namespace flagcw

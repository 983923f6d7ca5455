#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace satgame {

// Dynamic-width bitset over 64-bit words. Width is fixed at construction.
class bitset_row {
public:
    bitset_row() = default;
    explicit bitset_row(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    int width() const { return bits_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { for (auto& x : w_) x = 0; }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }

    bool intersects(const bitset_row& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_count(const bitset_row& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bitset_row& operator|=(const bitset_row& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bitset_row& operator&=(const bitset_row& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this &= ~o
    bitset_row& subtract(const bitset_row& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= bits_) return -1;
        int word = from >> 6;
        std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int i = (word << 6) + std::countr_zero(cur);
                return i < bits_ ? i : -1;
            }
            if (++word >= static_cast<int>(w_.size())) return -1;
            cur = w_[word];
        }
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    friend bool operator==(const bitset_row&, const bitset_row&) = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace satgame

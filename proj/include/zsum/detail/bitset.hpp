#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace zsum::detail {

/// Fixed-width dynamic bitset; sized once, used as search state.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const
    {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    bool all() const { return count() == bits_; }
    bool none() const
    {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    /// Index of the first clear bit, or size() when every bit is set.
    std::size_t first_unset() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (~words_[k]) {
                const std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_one(words_[k]));
                return i < bits_ ? i : bits_;
            }
        }
        return bits_;
    }

    Bitset& operator|=(const Bitset& other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }

    /// |this & other|
    std::size_t count_and(const Bitset& other) const
    {
        std::size_t total = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            total += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        }
        return total;
    }

    /// |other \ this|
    std::size_t count_new(const Bitset& other) const
    {
        std::size_t total = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            total += static_cast<std::size_t>(std::popcount(other.words_[k] & ~words_[k]));
        }
        return total;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace zsum::detail

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace glg {

/// Dynamic bit-set over {0..nbits-1}, stored as 64-bit words with the tail
/// bits kept at zero. One word covers every graph the codecs accept
/// (n <= 62), so the common case is a single-word AND/popcount.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : words_((static_cast<std::size_t>(nbits) + 63) / 64, 0), nbits_(nbits) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
    }

    static Bitset single(int nbits, int bit) {
        Bitset b(nbits);
        b.set(bit);
        return b;
    }

    int size_bits() const { return nbits_; }

    bool test(int i) const {
        check_index(i);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool operator==(const Bitset&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Set bits as a sorted vertex list.
    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    struct Hash {
        std::size_t operator()(const Bitset& b) const {
            std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(b.nbits_);
            for (std::uint64_t w : b.words_) {
                h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

private:
    void check_index(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: bit index out of range");
    }

    std::vector<std::uint64_t> words_;
    int nbits_ = 0;
};

/// popcount(a & b) without materializing the intersection.
inline int and_count(const Bitset& a, const Bitset& b) {
    auto wa = a.words();
    auto wb = b.words();
    std::size_t k = wa.size() < wb.size() ? wa.size() : wb.size();
    int c = 0;
    for (std::size_t i = 0; i < k; ++i) c += std::popcount(wa[i] & wb[i]);
    return c;
}

} // namespace glg

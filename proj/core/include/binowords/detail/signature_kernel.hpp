#pragma once

#include <binowords/word.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace binowords::detail {

/// In-place subword-count updates over the canonical pattern layout.
/// T is either std::uint64_t (exact whenever every final count fits) or BigInt.
class SignatureKernel {
public:
    SignatureKernel(std::size_t alphabet_size, unsigned k) : a_(alphabet_size), k_(k) {
        offsets_.resize(k + 2);
        std::size_t off = 0;
        std::size_t width = 1;
        for (unsigned len = 0; len <= k + 1; ++len) {
            offsets_[len] = off;
            off += width;
            width *= a_;
        }
        width_.resize(k + 1);
        width = 1;
        for (unsigned len = 0; len <= k; ++len) {
            width_[len] = width;
            width *= a_;
        }
    }

    std::size_t alphabet_size() const noexcept { return a_; }
    unsigned k() const noexcept { return k_; }
    std::size_t size() const noexcept { return offsets_[k_ + 1]; }
    std::size_t offset(unsigned len) const noexcept { return offsets_[len]; }
    std::size_t width(unsigned len) const noexcept { return width_[len]; }

    template <class T>
    void reset(T* cnt) const {
        for (std::size_t i = 0; i < size(); ++i) cnt[i] = 0;
        cnt[0] = 1;
    }

    /// Counts of u -> counts of u.c
    template <class T>
    void append(T* cnt, Letter c) const {
        for (unsigned len = k_; len >= 1; --len) {
            T* dst = cnt + offsets_[len];
            const T* src = cnt + offsets_[len - 1];
            const std::size_t w = width_[len - 1];
            for (std::size_t q = 0; q < w; ++q) dst[q * a_ + c] += src[q];
        }
    }

    /// Counts of a.x -> counts of x
    template <class T>
    void remove_front(T* cnt, Letter a) const {
        for (unsigned len = 1; len <= k_; ++len) {
            T* row = cnt + offsets_[len] + a * width_[len - 1];
            const T* shorter = cnt + offsets_[len - 1];
            const std::size_t w = width_[len - 1];
            for (std::size_t x = 0; x < w; ++x) row[x] -= shorter[x];
        }
    }

    /// True when every count of every word of length n fits in 64 bits.
    static bool fits_u64(std::size_t n, unsigned k) {
        // max over len <= k of C(n, len), computed with overflow detection
        __extension__ typedef unsigned __int128 u128;
        u128 c = 1;
        const unsigned top = static_cast<unsigned>(std::min<std::size_t>(k, n));
        for (unsigned len = 1; len <= top; ++len) {
            c = c * (n - len + 1) / len;
            if (c >= (static_cast<u128>(1) << 64)) return false;
        }
        return true;
    }

private:
    std::size_t a_;
    unsigned k_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> width_;
};

} // namespace binowords::detail

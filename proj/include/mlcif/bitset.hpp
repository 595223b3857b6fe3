#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace mlcif {

/// Fixed-size bitset over a runtime-chosen universe, packed in 64-bit words.
/// All binary operations require equal sizes (asserted, not checked).
class DynBitset {
  public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    DynBitset& operator|=(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    /// *this &= ~o
    DynBitset& and_not(const DynBitset& o) {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const DynBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        assert(size_ == o.size_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    /// Calls f(i) for every bit set in *this but not in `minus`, ascending.
    template <class F>
    void for_each_and_not(const DynBitset& minus, F&& f) const {
        assert(size_ == minus.size_);
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi] & ~minus.w_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace mlcif

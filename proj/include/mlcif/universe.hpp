#pragma once

#include <cstdint>
#include <vector>

#include "mlcif/bitset.hpp"
#include "mlcif/core.hpp"

namespace mlcif {

/// C(n, k) as unsigned 64-bit; throws ScaleError on overflow.
std::uint64_t binomial_u64(int n, int k);

/// All k-subsets of [n] in colex order, with precomputed order structure.
/// Index i is the colex rank: rank(S) = sum_i C(s_i - 1, i).
///
/// down(i) / up(i) are bitmaps of the LC down-set / up-set of set i (both
/// include i itself); disjoint(i) marks sets sharing no element with set i.
/// Memory is O(N^2) bits per table, so construction is guarded.
class SubsetUniverse {
  public:
    /// Guard: C(n, k) <= max_size (default 5000), else ScaleError.
    SubsetUniverse(int k, int n, std::size_t max_size = 5000);

    int k() const { return k_; }
    int n() const { return n_; }
    std::size_t size() const { return elems_.size(); }

    const std::vector<int>& elems(std::size_t i) const { return elems_[i]; }
    KSet kset(std::size_t i) const { return KSet(elems_[i], n_); }
    long long sum(std::size_t i) const { return sums_[i]; }

    std::size_t rank(const std::vector<int>& elements) const;
    std::size_t rank(const KSet& f) const { return rank(f.elements()); }

    const DynBitset& down(std::size_t i) const { return down_[i]; }
    const DynBitset& up(std::size_t i) const { return up_[i]; }
    const DynBitset& disjoint(std::size_t i) const { return disj_[i]; }

    /// Colex rank of [n] \ S_i; only built when n == 2k.
    std::size_t complement_index(std::size_t i) const { return comp_[i]; }
    bool has_complements() const { return !comp_.empty(); }

    DynBitset empty_bitset() const { return DynBitset(size()); }

    /// Maximal elements of the given member bitmap under the LC order.
    std::vector<std::size_t> maximal_elements(const DynBitset& members) const;

  private:
    int k_, n_;
    std::vector<std::vector<int>> elems_;
    std::vector<long long> sums_;
    std::vector<DynBitset> down_, up_, disj_;
    std::vector<std::size_t> comp_;
};

}  // namespace mlcif

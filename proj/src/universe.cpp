#include "mlcif/universe.hpp"

#include <algorithm>
#include <string>

namespace mlcif {

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // r * num / i is exact at every step; detect overflow before it happens
        if (r > UINT64_MAX / num) throw ScaleError("binomial_u64 overflow at C(" + std::to_string(n) + "," + std::to_string(k) + ")");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

SubsetUniverse::SubsetUniverse(int k, int n, std::size_t max_size) : k_(k), n_(n) {
    GroundParams(k, n);  // validates k >= 1, n >= k
    const std::uint64_t count = binomial_u64(n, k);
    if (count > max_size)
        throw ScaleError("subset universe C(" + std::to_string(n) + "," + std::to_string(k) + ")=" +
                         std::to_string(count) + " exceeds ceiling " + std::to_string(max_size));
    const std::size_t N = static_cast<std::size_t>(count);
    elems_.reserve(N);
    sums_.reserve(N);

    // colex enumeration: successor of the current combination
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        elems_.push_back(cur);
        long long s = 0;
        for (int x : cur) s += x;
        sums_.push_back(s);
        int i = 0;
        while (i < k - 1 && cur[static_cast<std::size_t>(i)] + 1 == cur[static_cast<std::size_t>(i + 1)]) ++i;
        if (cur[static_cast<std::size_t>(i)] + 1 > n - (k - 1 - i)) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = j + 1;
    }

    down_.assign(N, DynBitset(N));
    up_.assign(N, DynBitset(N));
    disj_.assign(N, DynBitset(N));
    for (std::size_t a = 0; a < N; ++a) {
        down_[a].set(a);
        up_[a].set(a);
        for (std::size_t b = a + 1; b < N; ++b) {
            bool ab = true, ba = true, meet = false;
            for (int i = 0; i < k && (ab || ba); ++i) {
                const int xa = elems_[a][static_cast<std::size_t>(i)];
                const int xb = elems_[b][static_cast<std::size_t>(i)];
                if (xa > xb) ab = false;
                if (xb > xa) ba = false;
            }
            if (ab) {  // a <= b
                down_[b].set(a);
                up_[a].set(b);
            }
            if (ba) {
                down_[a].set(b);
                up_[b].set(a);
            }
            std::size_t ia = 0, ib = 0;
            while (ia < elems_[a].size() && ib < elems_[b].size()) {
                if (elems_[a][ia] == elems_[b][ib]) {
                    meet = true;
                    break;
                }
                if (elems_[a][ia] < elems_[b][ib]) ++ia; else ++ib;
            }
            if (!meet) {
                disj_[a].set(b);
                disj_[b].set(a);
            }
        }
    }

    if (n == 2 * k) {
        comp_.resize(N);
        std::vector<int> c(static_cast<std::size_t>(k));
        for (std::size_t a = 0; a < N; ++a) {
            std::size_t w = 0;
            std::size_t p = 0;
            for (int x = 1; x <= n; ++x) {
                if (p < elems_[a].size() && elems_[a][p] == x) {
                    ++p;
                } else {
                    c[w++] = x;
                }
            }
            comp_[a] = rank(c);
        }
    }
}

std::size_t SubsetUniverse::rank(const std::vector<int>& elements) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < elements.size(); ++i)
        r += binomial_u64(elements[i] - 1, static_cast<int>(i) + 1);
    return static_cast<std::size_t>(r);
}

std::vector<std::size_t> SubsetUniverse::maximal_elements(const DynBitset& members) const {
    std::vector<std::size_t> out;
    members.for_each([&](std::size_t i) {
        // i is a boundary element iff nothing else in the family dominates it
        DynBitset above = up_[i];
        above &= members;
        if (above.count() == 1) out.push_back(i);
    });
    return out;
}

}  // namespace mlcif

#include "mlcif/extension.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mlcif/universe.hpp"

namespace mlcif {

std::vector<int> valid_expansion_indices(const KSet& f) {
    std::vector<int> out;
    for (int j = 1; j <= f.k(); ++j) {
        int above = 0;
        for (int x : f.elements())
            if (x > f.k() + j) ++above;
        if (above == f.k() - j) out.push_back(j);
    }
    return out;
}

KSet expand_set(const KSet& f, int j, int n) {
    if (n < f.n()) throw ParameterError("expand_set: target ground " + std::to_string(n) + " below current " + std::to_string(f.n()));
    const auto valid = valid_expansion_indices(f);
    if (std::find(valid.begin(), valid.end(), j) == valid.end()) {
        std::string msg = "expand_set: j=" + std::to_string(j) + " invalid for " + to_string(f) + "; valid j:";
        for (int v : valid) msg += " " + std::to_string(v);
        throw DomainError(msg);
    }
    std::vector<int> out(f.elements().begin(), f.elements().begin() + j);
    for (int x = n - f.k() + j + 1; x <= n; ++x) out.push_back(x);
    return KSet(std::move(out), n);
}

namespace {

KSet reground(const KSet& f, int n) { return KSet(f.elements(), n); }

void require_mlcif(const Family& f, const char* op) {
    if (!check_family(f).all())
        throw DomainError(std::string(op) + ": input family is not an MLCIF on its ground [" +
                          std::to_string(f.n()) + "]");
}

}  // namespace

Family extend_greedy(const Family& f, int n) {
    require_mlcif(f, "extend_greedy");
    if (n < f.n()) throw ParameterError("extend_greedy: target n must be >= the current ground");

    SubsetUniverse uni(f.k(), n);  // throws ScaleError beyond the documented ceiling
    DynBitset in = uni.empty_bitset();
    for (const KSet& m : f.members()) in.set(uni.rank(m.elements()));  // members keep their elements on [n]

    while (true) {
        std::size_t best = uni.size();
        for (std::size_t g = 0; g < uni.size(); ++g) {
            if (in.test(g)) continue;
            DynBitset strictly_below = uni.down(g);
            strictly_below.reset(g);
            if (!strictly_below.is_subset_of(in)) continue;  // not LC-minimal among additions
            if (uni.disjoint(g).intersects(in)) continue;
            if (best == uni.size() || uni.elems(g) < uni.elems(best)) best = g;
        }
        if (best == uni.size()) break;
        in.set(best);
    }

    std::vector<KSet> boundary;
    for (std::size_t s : uni.maximal_elements(in)) boundary.push_back(uni.kset(s));
    return Family::from_boundary(std::move(boundary), GroundParams(f.k(), n));
}

Family extend_greedy_with_order(const Family& f, int n, const std::vector<std::size_t>& order) {
    require_mlcif(f, "extend_greedy_with_order");
    if (n < f.n()) throw ParameterError("extend_greedy_with_order: target n must be >= the current ground");

    SubsetUniverse uni(f.k(), n);
    if (order.size() != uni.size()) throw ParameterError("candidate order must be a permutation of the universe");
    DynBitset in = uni.empty_bitset();
    for (const KSet& m : f.members()) in.set(uni.rank(m.elements()));

    // adds the first addable candidate in the given order; the fixed point is
    // the same family regardless of the order
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t g : order) {
            if (in.test(g)) continue;
            DynBitset with_g = in;
            with_g |= uni.down(g);
            bool addable = true;
            uni.down(g).for_each([&](std::size_t t) {
                if (addable && !in.test(t) && uni.disjoint(t).intersects(with_g)) addable = false;
            });
            if (addable) {
                in = with_g;
                changed = true;
                break;
            }
        }
    }

    std::vector<KSet> boundary;
    for (std::size_t s : uni.maximal_elements(in)) boundary.push_back(uni.kset(s));
    return Family::from_boundary(std::move(boundary), GroundParams(f.k(), n));
}

Family extend_fast(const Family& f, int n) {
    require_mlcif(f, "extend_fast");
    if (n < f.n()) throw ParameterError("extend_fast: target n must be >= the current ground");

    // Candidate boundary: every expansion of every boundary set (j = k keeps
    // the set itself, so the old boundary is always among the candidates).
    std::set<std::vector<int>> seen;
    std::vector<KSet> candidates;
    for (const KSet& b : f.boundary()) {
        for (int j : valid_expansion_indices(b)) {
            KSet e = expand_set(reground(b, n), j, n);
            if (seen.insert(e.elements()).second) candidates.push_back(std::move(e));
        }
    }

    std::vector<KSet> boundary;
    for (const KSet& c : candidates) {
        bool maximal = true;
        for (const KSet& d : candidates)
            if (!(d == c) && lc_leq(c, d)) {
                maximal = false;
                break;
            }
        if (maximal) boundary.push_back(c);
    }
    Family out = Family::from_boundary(std::move(boundary), GroundParams(f.k(), n));

    // Verification pass (always on): the result must be intersecting and must
    // contain every member of f.
    for (const KSet& a : out.boundary())
        for (const KSet& b : out.boundary())
            if (downsets_admit_disjoint_pair(a, b))
                throw IntegrityError("extend_fast produced a non-intersecting family: down-sets of " + to_string(a) +
                                     " and " + to_string(b) + " admit a disjoint pair");
    for (const KSet& b : f.boundary())
        if (!out.contains(reground(b, n)))
            throw IntegrityError("extend_fast lost input boundary set " + to_string(b));
    return out;
}

namespace {

/// DFS over in/out decisions on C([n], k): in-sets close downward, out-sets
/// close upward, and members must pairwise intersect. Counts assignments that
/// are maximal (no out-set could be added with its down-closure).
class DirectSearch {
  public:
    DirectSearch(int k, int n) : uni_(k, n) {}

    long long count() {
        DynBitset in = uni_.empty_bitset();
        DynBitset out = uni_.empty_bitset();
        long long total = 0;
        dfs(in, out, total);
        return total;
    }

  private:
    // branch on the largest undecided set first: both branches propagate hard
    void dfs(DynBitset& in, DynBitset& out, long long& total) {
        std::size_t pick = uni_.size();
        for (std::size_t s = uni_.size(); s-- > 0;) {
            if (!in.test(s) && !out.test(s)) {
                pick = s;
                break;
            }
        }
        if (pick == uni_.size()) {
            if (in.any() && is_maximal(in)) ++total;
            return;
        }
        {
            DynBitset in2 = in, out2 = out;
            if (decide_in(in2, out2, pick)) dfs(in2, out2, total);
        }
        {
            DynBitset in2 = in, out2 = out;
            if (decide_out(in2, out2, pick)) dfs(in2, out2, total);
        }
    }

    bool decide_in(DynBitset& in, DynBitset& out, std::size_t s) {
        std::vector<std::pair<std::size_t, bool>> stack{{s, true}};
        while (!stack.empty()) {
            const auto [t, inside] = stack.back();
            stack.pop_back();
            if (inside) {
                if (out.test(t)) return false;
                if (in.test(t)) continue;
                in.set(t);
                uni_.down(t).for_each([&](std::size_t u) {
                    if (!in.test(u)) stack.emplace_back(u, true);
                });
                uni_.disjoint(t).for_each([&](std::size_t u) {
                    if (!out.test(u)) stack.emplace_back(u, false);
                });
            } else {
                if (in.test(t)) return false;
                if (out.test(t)) continue;
                out.set(t);
                uni_.up(t).for_each([&](std::size_t u) {
                    if (!out.test(u)) stack.emplace_back(u, false);
                });
            }
        }
        return true;
    }

    bool decide_out(DynBitset& in, DynBitset& out, std::size_t s) {
        if (in.test(s)) return false;
        if (out.test(s)) return true;
        out.set(s);
        bool ok = true;
        uni_.up(s).for_each([&](std::size_t u) {
            if (!ok) return;
            if (in.test(u)) ok = false;
            else out.set(u);
        });
        return ok;
    }

    bool is_maximal(const DynBitset& in) {
        for (std::size_t g = 0; g < uni_.size(); ++g) {
            if (in.test(g)) continue;
            DynBitset with_g = in;
            with_g |= uni_.down(g);
            bool addable = true;
            uni_.down(g).for_each([&](std::size_t t) {
                if (addable && !in.test(t) && uni_.disjoint(t).intersects(with_g)) addable = false;
            });
            if (addable) return false;
        }
        return true;
    }

    SubsetUniverse uni_;
};

}  // namespace

long long count_mlcifs_on_n(int k, int n) {
    GroundParams(k, n).require_family_scale();
    DirectSearch search(k, n);
    return search.count();
}

}  // namespace mlcif

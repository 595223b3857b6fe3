#include "mlcif/family.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "mlcif/universe.hpp"

namespace mlcif {

namespace {

/// Visits all k-subsets of [n] in colex order (a linear extension of the LC
/// order, so minimal sets come first).
template <class F>
void for_each_combination(int k, int n, F&& fn) {
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(std::as_const(cur));
        int i = 0;
        while (i < k - 1 && cur[static_cast<std::size_t>(i)] + 1 == cur[static_cast<std::size_t>(i + 1)]) ++i;
        if (cur[static_cast<std::size_t>(i)] + 1 > n - (k - 1 - i)) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) cur[static_cast<std::size_t>(j)] = j + 1;
    }
}

bool dominated_by_any(const KSet& f, const std::vector<KSet>& sets) {
    for (const KSet& b : sets)
        if (lc_leq(f, b)) return true;
    return false;
}

bool sets_disjoint(const KSet& a, const KSet& b) {
    std::size_t i = 0, j = 0;
    const auto& ae = a.elements();
    const auto& be = b.elements();
    while (i < ae.size() && j < be.size()) {
        if (ae[i] == be[j]) return false;
        if (ae[i] < be[j]) ++i; else ++j;
    }
    return true;
}

}  // namespace

Family::Family(GroundParams params, std::vector<KSet> boundary)
    : params_(params), boundary_(std::move(boundary)), cache_(std::make_shared<MemberCache>()) {}

Family Family::from_boundary(std::vector<KSet> boundary, GroundParams params) {
    params.require_family_scale();
    if (boundary.empty()) throw ParameterError("family boundary must be nonempty");
    for (const KSet& b : boundary)
        if (b.k() != params.k || b.n() != params.n)
            throw ParameterError("boundary set " + to_string(b) + " does not match params (k=" +
                                 std::to_string(params.k) + ", n=" + std::to_string(params.n) + ")");
    std::sort(boundary.begin(), boundary.end(), lex_less);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        for (std::size_t j = i + 1; j < boundary.size(); ++j) {
            if (boundary[i] == boundary[j]) throw ParameterError("duplicate boundary set " + to_string(boundary[i]));
            if (lc_leq(boundary[i], boundary[j]) || lc_leq(boundary[j], boundary[i]))
                throw ParameterError("boundary is not an antichain: " + to_string(boundary[i]) + " comparable to " +
                                     to_string(boundary[j]));
        }
    }
    return Family(params, std::move(boundary));
}

bool Family::contains(const KSet& f) const {
    return dominated_by_any(f, boundary_);
}

const std::vector<KSet>& Family::members() const {
    std::call_once(cache_->once, [this] {
        if (binomial_u64(params_.n, params_.k) > 2'000'000)
            throw ScaleError("member materialization refused: C(" + std::to_string(params_.n) + "," +
                             std::to_string(params_.k) + ") too large");
        std::vector<KSet>& out = cache_->members;
        for_each_combination(params_.k, params_.n, [&](const std::vector<int>& elems) {
            KSet f(elems, params_.n);
            if (contains(f)) out.push_back(std::move(f));
        });
        std::sort(out.begin(), out.end(), lex_less);
    });
    return cache_->members;
}

bool family_less(const Family& a, const Family& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    if (a.n() != b.n()) return a.n() < b.n();
    return std::lexicographical_compare(a.boundary().begin(), a.boundary().end(), b.boundary().begin(),
                                        b.boundary().end(), lex_less);
}

std::string canonical_jsonl(const Family& f) {
    std::string s = "{\"k\":" + std::to_string(f.k()) + ",\"n\":" + std::to_string(f.n()) + ",\"boundary\":[";
    for (std::size_t i = 0; i < f.boundary().size(); ++i) {
        if (i) s += ',';
        s += '[';
        const auto& e = f.boundary()[i].elements();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(e[j]);
        }
        s += ']';
    }
    s += "]}";
    return s;
}

Family down_closure(const std::vector<KSet>& sets, GroundParams params) {
    for (const KSet& s : sets)
        if (s.k() != params.k || s.n() != params.n)
            throw ParameterError("down_closure: set " + to_string(s) + " does not match params");
    Family f = Family::from_boundary(boundary_of(sets), params);
    f.members();  // materialize now
    return f;
}

std::vector<KSet> boundary_of(const std::vector<KSet>& members) {
    if (members.empty()) throw ParameterError("boundary_of: empty family");
    std::vector<KSet> out;
    for (const KSet& f : members) {
        bool maximal = true;
        for (const KSet& g : members) {
            if (!(g == f) && lc_leq(f, g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

FamilyFlags check_members(const std::vector<KSet>& members, GroundParams params) {
    params.require_family_scale();
    if (members.empty()) throw ParameterError("check_members: empty family");
    for (const KSet& f : members)
        if (f.k() != params.k || f.n() != params.n) throw ParameterError("check_members: inconsistent params");

    FamilyFlags flags;

    // intersecting: pairwise; on n == 2k also by the complement rule
    bool pairwise = true;
    for (std::size_t i = 0; i < members.size() && pairwise; ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (sets_disjoint(members[i], members[j])) {
                pairwise = false;
                break;
            }
    if (params.n == 2 * params.k) {
        bool no_complement = true;
        std::set<std::vector<int>> lookup;
        for (const KSet& f : members) lookup.insert(f.elements());
        for (const KSet& f : members)
            if (lookup.count(complement_in_2k(f).elements())) {
                no_complement = false;
                break;
            }
        if (no_complement != pairwise)
            throw IntegrityError("intersecting checks disagree on n == 2k: pairwise=" + std::to_string(pairwise) +
                                 " complement-rule=" + std::to_string(no_complement));
    }
    flags.intersecting = pairwise;

    // left-compressed: closed under single-element decrements (the covering
    // moves of the LC order)
    std::set<std::vector<int>> lookup;
    for (const KSet& f : members) lookup.insert(f.elements());
    flags.left_compressed = true;
    for (const KSet& f : members) {
        const auto& e = f.elements();
        for (std::size_t i = 0; i < e.size() && flags.left_compressed; ++i) {
            const int below = (i == 0) ? 0 : e[i - 1];
            if (e[i] - 1 > below) {
                std::vector<int> g = e;
                --g[i];
                if (!lookup.count(g)) flags.left_compressed = false;
            }
        }
        if (!flags.left_compressed) break;
    }

    // maximal: no addable set; candidates scanned minimal-first (colex),
    // short-circuiting on the first addable one
    SubsetUniverse uni(params.k, params.n);
    DynBitset in = uni.empty_bitset();
    for (const KSet& f : members) in.set(uni.rank(f));
    flags.maximal = true;
    for (std::size_t g = 0; g < uni.size(); ++g) {
        if (in.test(g)) continue;
        DynBitset with_g = in;
        with_g |= uni.down(g);
        bool addable = true;
        uni.down(g).for_each([&](std::size_t t) {
            if (addable && !in.test(t) && uni.disjoint(t).intersects(with_g)) addable = false;
        });
        if (addable) {
            flags.maximal = false;
            break;
        }
    }
    return flags;
}

FamilyFlags check_family(const Family& f) {
    return check_members(f.members(), f.params());
}

Family canonical_family(int i, GroundParams params) {
    return Family::from_boundary({z_set(i, params)}, params);
}

bool canonical_membership(const KSet& f, int i) {
    if (i < 1 || i > f.k()) throw ParameterError("canonical_membership: index out of range");
    int count = 0;
    for (int x : f.elements())
        if (x <= 2 * i - 1) ++count;
    return count >= i;
}

bool is_strong(const KSet& f) {
    const auto idx = index_of(f);
    if (!idx) throw DomainError("is_strong: set " + to_string(f) + " has no index");
    int above = 0;
    for (int x : f.elements())
        if (x > 2 * f.k()) ++above;
    return above == f.k() - *idx;
}

TypeTag type_of(const Family& f) {
    if (!check_family(f).all())
        throw DomainError("type_of requires an MLCIF; check_family flags failed");
    std::optional<int> common;
    for (const KSet& m : f.members()) {
        const auto idx = index_of(m);
        if (!idx)
            throw IntegrityError("member " + to_string(m) + " of an MLCIF has no index");
        if (!is_strong(m)) continue;
        if (common && *common != *idx)
            throw IntegrityError("strong members with distinct indices " + std::to_string(*common) + " and " +
                                 std::to_string(*idx) + " in one MLCIF");
        common = *idx;
    }
    return TypeTag{common};
}

TypeTag type_of_boundary(const Family& f) {
    const int k = f.k();
    const int n = f.n();
    std::optional<int> common;
    for (int i = 1; i <= k; ++i) {
        if (n - 2 * k < k - i) continue;  // no room for k-i elements above 2k
        // minimal strong set of index i: {2, 4, ..., 2i-2, 2i-1} u [2k+1, 3k-i]
        std::vector<int> probe;
        probe.reserve(static_cast<std::size_t>(k));
        for (int j = 1; j < i; ++j) probe.push_back(2 * j);
        probe.push_back(2 * i - 1);
        for (int x = 2 * k + 1; x <= 3 * k - i; ++x) probe.push_back(x);
        if (!f.contains(KSet(std::move(probe), n))) continue;
        if (common && *common != i)
            throw IntegrityError("strong members with distinct indices " + std::to_string(*common) + " and " +
                                 std::to_string(i) + " in one MLCIF (boundary route)");
        common = i;
    }
    return TypeTag{common};
}

}  // namespace mlcif

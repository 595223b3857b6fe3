#include <doctest.h>

#include <numeric>
#include <set>

#include "mlcif/enumerate.hpp"
#include "mlcif/extension.hpp"
#include "mlcif/universe.hpp"

using namespace mlcif;

namespace {

KSet ks(std::vector<int> e, int n) { return KSet(std::move(e), n); }

}  // namespace

TEST_CASE("expand_set") {
    // 5-uniform: {x,y,z,9,10} with j=3 becomes {x,y,z,n-1,n}
    CHECK(expand_set(ks({1, 2, 3, 9, 10}, 10), 3, 14) == ks({1, 2, 3, 13, 14}, 14));
    // j = k appends an empty top block
    CHECK(expand_set(ks({2, 3, 4}, 6), 3, 9) == ks({2, 3, 4}, 9));
    CHECK(expand_set(ks({1, 4}, 4), 1, 6) == ks({1, 6}, 6));

    CHECK(valid_expansion_indices(ks({1, 4}, 4)) == std::vector<int>{1, 2});
    CHECK(valid_expansion_indices(ks({2, 3}, 4)) == std::vector<int>{2});

    CHECK_THROWS_WITH_AS(expand_set(ks({2, 3}, 4), 1, 6), doctest::Contains("valid j"), DomainError);
    CHECK_THROWS_AS(expand_set(ks({1, 4}, 4), 1, 3), ParameterError);
}

TEST_CASE("extend_greedy fixed points") {
    const GroundParams p24(2, 4);
    // the triangle stays the triangle on [5]
    const Family triangle = canonical_family(2, p24);
    const Family t5 = extend_greedy(triangle, 5);
    CHECK(t5.members() == std::vector<KSet>{ks({1, 2}, 5), ks({1, 3}, 5), ks({2, 3}, 5)});
    // the star at 1 grows with n
    const Family star = canonical_family(1, p24);
    const Family s6 = extend_greedy(star, 6);
    CHECK(s6.member_count() == 5);
    for (const KSet& m : s6.members()) CHECK(m.element(1) == 1);
    // idempotence at the same ground
    CHECK(extend_greedy(s6, 6) == s6);
    CHECK(extend_fast(s6, 6) == s6);
}

TEST_CASE("extend_fast canonical boundaries") {
    for (int k = 2; k <= 4; ++k) {
        const GroundParams p2k(k, 2 * k);
        for (int i = 1; i <= k; ++i)
            for (int n : {2 * k + 1, 3 * k, 4 * k}) {
                const Family ext = extend_fast(canonical_family(i, p2k), n);
                CHECK(ext.boundary() == std::vector<KSet>{z_set(i, GroundParams(k, n))});
            }
    }
}

TEST_CASE("extension routes agree with each other and with direct search") {
    for (int k = 2; k <= 3; ++k) {
        const auto mk = enumerate_mlcifs(k);
        for (int n = 2 * k; n <= 2 * k + 3; ++n)
            for (const Family& f : mk) CHECK(extend_greedy(f, n) == extend_fast(f, n));
    }
    CHECK(count_mlcifs_on_n(2, 4) == 2);
    CHECK(count_mlcifs_on_n(2, 5) == 2);
    CHECK(count_mlcifs_on_n(3, 7) == 6);
}

TEST_CASE("extension routes agree across all of M_4") {
    const auto m4 = enumerate_mlcifs(4);
    for (int n = 8; n <= 11; ++n)
        for (const Family& f : m4) CHECK(extend_greedy(f, n) == extend_fast(f, n));
}

TEST_CASE("extension bijection: distinct inputs, distinct extensions, full coverage") {
    for (int k = 2; k <= 3; ++k) {
        const auto mk = enumerate_mlcifs(k);
        for (int n = 2 * k + 1; n <= 2 * k + 2; ++n) {
            std::set<std::string> images;
            for (const Family& f : mk) images.insert(canonical_jsonl(extend_fast(f, n)));
            CHECK(images.size() == mk.size());
            CHECK(static_cast<long long>(images.size()) == count_mlcifs_on_n(k, n));
        }
    }
}

TEST_CASE("membership preservation within [2k]") {
    for (int k = 2; k <= 3; ++k)
        for (const Family& f : enumerate_mlcifs(k)) {
            const Family ext = extend_greedy(f, 2 * k + 2);
            std::set<std::vector<int>> original;
            for (const KSet& m : f.members()) original.insert(m.elements());
            for (const KSet& m : ext.members()) {
                const bool inside = m.elements().back() <= 2 * k;
                CHECK(inside == (original.count(m.elements()) > 0));
            }
        }
}

TEST_CASE("greedy order independence") {
    const auto m2 = enumerate_mlcifs(2);
    SubsetUniverse uni(2, 6);
    std::vector<std::size_t> order(uni.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (const Family& f : m2) {
        const Family expect = extend_greedy(f, 6);
        CHECK(extend_greedy_with_order(f, 6, order) == expect);
        std::vector<std::size_t> reversed(order.rbegin(), order.rend());
        CHECK(extend_greedy_with_order(f, 6, reversed) == expect);
    }
}

TEST_CASE("extension rejects bad inputs") {
    const Family star = canonical_family(1, GroundParams(2, 4));
    CHECK_THROWS_AS(extend_greedy(star, 3), ParameterError);
    const Family notmax = down_closure({ks({1, 2}, 4)}, GroundParams(2, 4));
    CHECK_THROWS_AS(extend_greedy(notmax, 6), DomainError);
    CHECK_THROWS_AS(extend_fast(notmax, 6), DomainError);
}

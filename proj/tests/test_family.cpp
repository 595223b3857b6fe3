#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "mlcif/enumerate.hpp"
#include "mlcif/family.hpp"
#include "mlcif/universe.hpp"

using namespace mlcif;

namespace {

KSet ks(std::vector<int> e, int n) { return KSet(std::move(e), n); }

std::vector<KSet> filter_down(const KSet& b) {
    // independent oracle: enumerate C([n], k) and filter by lc_leq
    SubsetUniverse uni(b.k(), b.n());
    std::vector<KSet> out;
    for (std::size_t s = 0; s < uni.size(); ++s)
        if (lc_leq(uni.kset(s), b)) out.push_back(uni.kset(s));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("down_closure against the enumeration filter") {
    const GroundParams p24(2, 4);
    const Family f = down_closure({ks({1, 4}, 4)}, p24);
    CHECK(f.members() == std::vector<KSet>{ks({1, 2}, 4), ks({1, 3}, 4), ks({1, 4}, 4)});
    CHECK(f.members() == filter_down(ks({1, 4}, 4)));

    const Family g = down_closure({ks({2, 3}, 4)}, p24);
    CHECK(g.members() == std::vector<KSet>{ks({1, 2}, 4), ks({1, 3}, 4), ks({2, 3}, 4)});

    const Family bottom = down_closure({ks({1, 2, 3}, 6)}, GroundParams(3, 6));
    CHECK(bottom.members() == std::vector<KSet>{ks({1, 2, 3}, 6)});
}

TEST_CASE("boundary_of") {
    const GroundParams p24(2, 4);
    const Family c1 = canonical_family(1, p24);
    CHECK(boundary_of(c1.members()) == std::vector<KSet>{z_set(1, p24)});
    const Family c2 = canonical_family(2, p24);
    CHECK(boundary_of(c2.members()) == std::vector<KSet>{z_set(2, p24)});
    CHECK(boundary_of({ks({2, 4, 5}, 6)}) == std::vector<KSet>{ks({2, 4, 5}, 6)});
    CHECK_THROWS_AS(boundary_of({}), ParameterError);
}

TEST_CASE("Family validation") {
    const GroundParams p24(2, 4);
    CHECK_THROWS_AS(Family::from_boundary({}, p24), ParameterError);
    CHECK_THROWS_AS(Family::from_boundary({ks({1, 2}, 4), ks({1, 3}, 4)}, p24), ParameterError);  // comparable
    CHECK_THROWS_AS(Family::from_boundary({ks({1, 2}, 5)}, p24), ParameterError);                 // wrong n
    CHECK_THROWS_AS(Family::from_boundary({ks({1, 2}, 3)}, GroundParams(2, 3)), ParameterError);  // n < 2k
}

TEST_CASE("check_family flags") {
    const GroundParams p24(2, 4);
    const FamilyFlags good = check_family(canonical_family(1, p24));
    CHECK(good.intersecting);
    CHECK(good.left_compressed);
    CHECK(good.maximal);

    const FamilyFlags disjoint = check_members({ks({1, 2}, 4), ks({3, 4}, 4)}, p24);
    CHECK_FALSE(disjoint.intersecting);

    // down_closure({{2,3}}) minus {{1,2}} is no longer left-compressed
    const FamilyFlags broken = check_members({ks({1, 3}, 4), ks({2, 3}, 4)}, p24);
    CHECK_FALSE(broken.left_compressed);

    const FamilyFlags notmax = check_members({ks({1, 2}, 4), ks({1, 3}, 4)}, p24);
    CHECK_FALSE(notmax.maximal);

    CHECK_THROWS_AS(check_members({ks({1, 2}, 3)}, GroundParams(2, 3)), ParameterError);
}

TEST_CASE("canonical_family and membership predicate") {
    const GroundParams p24(2, 4);
    CHECK(canonical_family(1, p24).members() ==
          std::vector<KSet>{ks({1, 2}, 4), ks({1, 3}, 4), ks({1, 4}, 4)});
    CHECK(canonical_family(2, p24).members() ==
          std::vector<KSet>{ks({1, 2}, 4), ks({1, 3}, 4), ks({2, 3}, 4)});

    // interval-count predicate agrees with lc_leq to Z_i, exhaustively
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * k; n <= 12; n += 2) {
            SubsetUniverse uni(k, n);
            const GroundParams params(k, n);
            for (int i = 1; i <= k; ++i) {
                const KSet zi = z_set(i, params);
                for (std::size_t s = 0; s < uni.size(); ++s) {
                    const KSet f = uni.kset(s);
                    CHECK(canonical_membership(f, i) == lc_leq(f, zi));
                }
            }
        }
}

TEST_CASE("is_strong") {
    CHECK(is_strong(ks({2, 4, 5, 12}, 12)));
    CHECK_FALSE(is_strong(ks({2, 3, 4, 12}, 12)));
    CHECK_THROWS_AS(is_strong(ks({2, 4}, 4)), DomainError);  // no index

    // Z_i is strong with index i once the top block clears 2k
    for (int k = 2; k <= 4; ++k) {
        const GroundParams params(k, 3 * k);
        for (int i = 1; i <= k; ++i) {
            const KSet zi = z_set(i, params);
            CHECK(index_of(zi) == i);
            CHECK(is_strong(zi));
        }
    }
}

TEST_CASE("type_of worked examples") {
    const GroundParams p(4, 12);
    const Family typed = Family::from_boundary({ks({1, 2, 11, 12}, 12), ks({2, 4, 5, 12}, 12)}, p);
    CHECK(type_of(typed) == TypeTag{3});
    CHECK(type_of_boundary(typed) == TypeTag{3});

    const Family typeless = Family::from_boundary({ks({1, 4, 11, 12}, 12), ks({2, 3, 4, 12}, 12)}, p);
    CHECK(type_of(typeless).typeless());
    CHECK(type_of_boundary(typeless).typeless());

    // canonical families carry their own index as type (top block above 2k)
    for (int k = 2; k <= 4; ++k) {
        const GroundParams params(k, 3 * k);
        for (int i = 1; i <= k; ++i) {
            CHECK(type_of(canonical_family(i, params)) == TypeTag{i});
            CHECK(type_of_boundary(canonical_family(i, params)) == TypeTag{i});
        }
    }

    // non-MLCIF input is rejected
    CHECK_THROWS_AS(type_of(down_closure({ks({1, 2}, 4)}, GroundParams(2, 4))), DomainError);
}

TEST_CASE("canonical_jsonl bytes") {
    CHECK(canonical_jsonl(canonical_family(1, GroundParams(2, 4))) == "{\"k\":2,\"n\":4,\"boundary\":[[1,4]]}");
    const Family two = Family::from_boundary({ks({2, 4, 5, 12}, 12), ks({1, 2, 11, 12}, 12)}, GroundParams(4, 12));
    CHECK(canonical_jsonl(two) == "{\"k\":4,\"n\":12,\"boundary\":[[1,2,11,12],[2,4,5,12]]}");
}

TEST_CASE("members cache is shared across copies") {
    const Family f = canonical_family(1, GroundParams(2, 4));
    const Family g = f;
    CHECK(&f.members() == &g.members());
}

TEST_CASE("concurrent member materialization") {
    const Family f = canonical_family(2, GroundParams(3, 9));
    std::atomic<std::size_t> total{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&] { total += f.members().size(); });
    for (auto& th : pool) th.join();
    CHECK(total == 8 * f.members().size());
}

TEST_CASE("type routes agree on sampled members of M_5") {
    const auto m5 = enumerate_mlcifs(5);
    // deterministic stride through the 37145 families
    for (std::size_t i = 0; i < m5.size(); i += 1861) {
        const TypeTag definitional = type_of(m5[i]);
        CHECK(type_of_boundary(m5[i]) == definitional);
    }
}

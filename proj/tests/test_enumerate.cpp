#include <doctest.h>

#include <set>

#include "mlcif/enumerate.hpp"

using namespace mlcif;

namespace {

KSet ks(std::vector<int> e, int n) { return KSet(std::move(e), n); }

std::set<std::string> keys(const std::vector<Family>& fams) {
    std::set<std::string> out;
    for (const Family& f : fams) out.insert(canonical_jsonl(f));
    return out;
}

}  // namespace

TEST_CASE("forced assignments at k=2") {
    PairSystem ps(2);
    const auto a = ps.forced_assignments();
    const auto& uni = ps.universe();
    CHECK(a.in.test(uni.rank({1, 2})));
    CHECK(a.in.test(uni.rank({1, 3})));
    CHECK(a.out.test(uni.rank({3, 4})));
    CHECK(a.out.test(uni.rank({2, 4})));
    CHECK_FALSE(a.decided(uni.rank({1, 4})));
    CHECK_FALSE(a.decided(uni.rank({2, 3})));
    CHECK(ps.free_pairs().size() == 1);
}

TEST_CASE("forced assignments at k=1 and k=3") {
    PairSystem p1(1);
    const auto a1 = p1.forced_assignments();
    CHECK(a1.in.test(p1.universe().rank({1})));
    CHECK(a1.out.test(p1.universe().rank({2})));
    CHECK(p1.free_pairs().empty());

    // regression: the k=3 propagation leaves exactly these five pairs open
    PairSystem p3(3);
    CHECK(p3.free_pairs().size() == 5);
}

TEST_CASE("pair representatives have the smaller element sum") {
    for (int k = 1; k <= 4; ++k) {
        PairSystem ps(k);
        const auto& uni = ps.universe();
        for (const auto& pr : ps.pairs()) {
            CHECK(uni.complement_index(pr.rep) == pr.other);
            const long long sr = uni.sum(pr.rep), so = uni.sum(pr.other);
            CHECK((sr < so || (sr == so && uni.elems(pr.rep) < uni.elems(pr.other))));
        }
    }
}

TEST_CASE("enumerate_mlcifs small k") {
    const auto m1 = enumerate_mlcifs(1);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].boundary() == std::vector<KSet>{ks({1}, 2)});

    const auto m2 = enumerate_mlcifs(2);
    REQUIRE(m2.size() == 2);
    CHECK(keys(m2) == std::set<std::string>{"{\"k\":2,\"n\":4,\"boundary\":[[1,4]]}",
                                            "{\"k\":2,\"n\":4,\"boundary\":[[2,3]]}"});
}

TEST_CASE("oracle equivalence and schedule independence") {
    for (int k = 1; k <= 3; ++k) {
        const auto par = enumerate_mlcifs(k);
        const auto ser = enumerate_mlcifs_serial(k);
        const auto oracle = brute_force_mlcifs(k);
        CHECK(keys(par) == keys(ser));
        CHECK(keys(par) == keys(oracle));
        // emitted order is the canonical serialization order in both paths
        for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
    }
    // identical output for any worker count
    for (int threads : {1, 2, 7}) {
        EnumOptions opts;
        opts.threads = threads;
        const auto out = enumerate_mlcifs(4, opts);
        CHECK(out.size() == 72);
        CHECK(keys(out) == keys(enumerate_mlcifs_serial(4)));
    }
}

TEST_CASE("every enumerated family is an MLCIF with one set per pair") {
    for (int k = 1; k <= 3; ++k) {
        for (const Family& f : enumerate_mlcifs(k)) {
            CHECK(check_family(f).all());
            std::set<std::vector<int>> members;
            for (const KSet& m : f.members()) members.insert(m.elements());
            CHECK(members.size() == binomial_u64(2 * k, k) / 2);
            for (const auto& e : members) CHECK_FALSE(members.count(complement_in_2k(KSet(e, 2 * k)).elements()));
        }
    }
}

TEST_CASE("resource guards") {
    CHECK_THROWS_AS(enumerate_mlcifs(6), ScaleError);
    CHECK_THROWS_AS(brute_force_mlcifs(4), ScaleError);
}

TEST_CASE("complete") {
    const GroundParams p24(2, 4);
    for (int i = 1; i <= 2; ++i) {
        const Family ci = canonical_family(i, p24);
        CHECK(complete(ci) == ci);  // already maximal
    }
    // the bottom set completes to a valid MLCIF containing it
    for (int k = 2; k <= 4; ++k) {
        std::vector<int> bottom(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) bottom[static_cast<std::size_t>(i)] = i + 1;
        const Family seed = down_closure({KSet(bottom, 2 * k)}, GroundParams(k, 2 * k));
        const Family done = complete(seed);
        CHECK(check_family(done).all());
        CHECK(done.contains(KSet(bottom, 2 * k)));
        CHECK(complete(seed) == done);  // deterministic
    }
    // a non-intersecting seed is rejected
    const Family bad = down_closure({ks({3, 4}, 4)}, p24);
    CHECK_THROWS_AS(complete(bad), DomainError);
}

TEST_CASE("lift is injective into M_{k+1}") {
    for (int k = 1; k <= 3; ++k) {
        const auto mk = enumerate_mlcifs(k);
        const auto next = keys(enumerate_mlcifs(k + 1));
        std::set<std::string> images;
        for (const Family& f : mk) {
            const Family lifted = lift(f);
            CHECK(lifted.k() == k + 1);
            CHECK(check_family(lifted).all());
            CHECK(next.count(canonical_jsonl(lifted)));
            images.insert(canonical_jsonl(lifted));
        }
        CHECK(images.size() == mk.size());
    }
}

TEST_CASE("balanced pairs and the lower-bound construction") {
    const auto pairs = pk_pairs(2);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].first == ks({1, 4}, 4));
    CHECK(pairs[0].second == ks({2, 3}, 4));

    const GroundParams p24(2, 4);
    CHECK(pk_selection_family({pairs[0].first}, 2) == canonical_family(1, p24));
    CHECK(pk_selection_family({pairs[0].second}, 2) == canonical_family(2, p24));

    CHECK_THROWS_AS(pk_pairs(3), DomainError);
    CHECK_THROWS_AS(pk_selection_family({ks({1, 2}, 4)}, 2), DomainError);

    // every selection's down-closure is left-compressed and intersecting
    const auto pairs4 = pk_pairs(4);
    CHECK(pairs4.size() == 4);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        std::vector<KSet> sel;
        for (std::size_t i = 0; i < 4; ++i) sel.push_back((mask >> i) & 1 ? pairs4[i].second : pairs4[i].first);
        const Family completed = pk_selection_family(sel, 4);  // IntegrityError if the closure check failed
        CHECK(check_family(completed).all());
        for (const KSet& s : sel) CHECK(completed.contains(s));
    }
}

TEST_CASE("pk selections differing in one pair complete to distinct families") {
    const auto pairs4 = pk_pairs(4);
    std::vector<KSet> sel;
    for (const auto& [a, b] : pairs4) sel.push_back(a);
    const Family base = pk_selection_family(sel, 4);
    for (std::size_t flip = 0; flip < pairs4.size(); ++flip) {
        std::vector<KSet> sel2 = sel;
        sel2[flip] = pairs4[flip].second;
        CHECK_FALSE(pk_selection_family(sel2, 4) == base);
    }
}

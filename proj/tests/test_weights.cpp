#include <doctest.h>

#include <cmath>
#include <random>

#include "mlcif/enumerate.hpp"
#include "mlcif/extension.hpp"
#include "mlcif/weights.hpp"

using namespace mlcif;

namespace {

KSet ks(std::vector<int> e, int n) { return KSet(std::move(e), n); }

WeightFn random_weight(int n, std::mt19937_64& rng, bool increasing) {
    std::vector<double> v(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = static_cast<double>(rng() % 8);
        acc += x;
        v[static_cast<std::size_t>(j)] = increasing ? acc : x;
    }
    return WeightFn::from_dense(std::move(v));
}

}  // namespace

TEST_CASE("WeightFn construction") {
    const WeightFn w = WeightFn::from_dense({1, 2, 3, 4});
    CHECK(w.increasing());
    CHECK(w.at(3) == 3);
    CHECK_FALSE(WeightFn::from_dense({2, 1}).increasing());
    CHECK_THROWS_AS(WeightFn::from_dense({-1.0}), ParameterError);

    const WeightFn s = WeightFn::from_steps(6, {{1, 0.0}, {3, 1.0}});
    CHECK(s.dense() == std::vector<double>{0, 0, 1, 1, 1, 1});
    CHECK_THROWS_AS(WeightFn::from_steps(6, {{2, 1.0}}), ParameterError);
}

TEST_CASE("weight_of_set") {
    const WeightFn ones = WeightFn::from_dense(std::vector<double>(8, 1.0));
    CHECK(weight_of_set(ks({2, 5, 7}, 8), ones) == 1.0);
    CHECK(weight_of_set(ks({2, 3}, 4), WeightFn::from_dense({1, 2, 3, 4})) == 6.0);
    CHECK(weight_of_set(ks({1, 5}, 144), make_omega_i(2, 144)) == 0.0);
}

TEST_CASE("downset_weight worked value and unit-weight counting") {
    CHECK(downset_weight(ks({2, 3}, 4), WeightFn::from_dense({1, 2, 3, 4})) == 11.0);

    std::mt19937_64 rng(7);
    for (int k = 1; k <= 3; ++k)
        for (int n = 2 * k; n <= 10; ++n) {
            const WeightFn ones = WeightFn::from_dense(std::vector<double>(static_cast<std::size_t>(n), 1.0));
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<int> e;
                int prev = 0;
                for (int i = 0; i < k; ++i) {
                    prev += 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - prev - (k - i - 1)));
                    e.push_back(prev);
                }
                const KSet b(e, n);
                const Family d = down_closure({b}, GroundParams(k, n));
                CHECK(downset_weight(b, ones) == static_cast<double>(d.member_count()));
            }
        }

    // single-set down-set: the product of the bottom elements
    CHECK(downset_weight(ks({1, 2}, 4), WeightFn::from_dense({3, 5, 7, 9})) == 15.0);
}

TEST_CASE("family_weight worked values") {
    const GroundParams p24(2, 4);
    CHECK(family_weight(canonical_family(1, p24), WeightFn::from_dense({1, 2, 3, 4})) == 9.0);

    // single-boundary family equals downset_weight
    const WeightFn w = WeightFn::from_dense({1, 2, 3, 4});
    CHECK(family_weight(canonical_family(2, p24), w) == downset_weight(ks({2, 3}, 4), w));

    // the 4-uniform two-boundary family on [12]: meet is {1,2,5,12}
    CHECK(meet(ks({1, 2, 11, 12}, 12), ks({2, 4, 5, 12}, 12)) == ks({1, 2, 5, 12}, 12));
    const Family paper = Family::from_boundary({ks({1, 2, 11, 12}, 12), ks({2, 4, 5, 12}, 12)}, GroundParams(4, 12));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const WeightFn rw = random_weight(12, rng, trial % 2 == 0);
        const double ie = family_weight(paper, rw);
        const double direct = family_weight_direct(paper, rw);
        CHECK(ie == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("inclusion-exclusion agrees with direct summation on all MLCIFs") {
    std::mt19937_64 rng(20240902);
    for (int k = 1; k <= 3; ++k) {
        const auto mk = enumerate_mlcifs(k);
        for (int n = 2 * k; n <= 10; ++n) {
            for (const Family& f : mk) {
                const Family ext = n == 2 * k ? f : extend_fast(f, n);
                for (int trial = 0; trial < 4; ++trial) {
                    const WeightFn w = random_weight(n, rng, true);
                    const double ie = family_weight(ext, w);
                    const double direct = family_weight_direct(ext, w);
                    CHECK(std::abs(ie - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
                }
            }
        }
    }
}

TEST_CASE("family_weight boundary cap") {
    // 26 pairwise incomparable 2-sets {i, 61-i} on [60]
    std::vector<KSet> boundary;
    for (int i = 1; i <= 26; ++i) boundary.push_back(ks({i, 61 - i}, 60));
    const Family wide = Family::from_boundary(std::move(boundary), GroundParams(2, 60));
    CHECK_THROWS_AS(family_weight(wide, WeightFn::from_dense(std::vector<double>(60, 1.0))), ScaleError);
}

TEST_CASE("make_omega_i") {
    CHECK(make_omega_i(1, 5).dense() == std::vector<double>{1, 1, 1, 1, 1});
    CHECK(make_omega_i(2, 4).dense() == std::vector<double>{0, 1, 1, 1});
    // omega_i(F) is 1 iff F avoids [i-1]
    const WeightFn w3 = make_omega_i(3, 10);
    CHECK(weight_of_set(ks({3, 5}, 10), w3) == 1.0);
    CHECK(weight_of_set(ks({2, 5}, 10), w3) == 0.0);
}

TEST_CASE("is_trivial_weight") {
    CHECK(is_trivial_weight(WeightFn::from_dense(std::vector<double>(8, 0.0)), 2));
    CHECK_FALSE(is_trivial_weight(WeightFn::from_dense(std::vector<double>(8, 1.0)), 2));
    std::vector<double> only_last(144, 0.0);
    only_last.back() = 1.0;
    CHECK(is_trivial_weight(WeightFn::from_dense(std::move(only_last)), 2));
}

TEST_CASE("scale covariance and monotonicity") {
    std::mt19937_64 rng(5);
    const auto m3 = enumerate_mlcifs(3);
    for (int trial = 0; trial < 10; ++trial) {
        const WeightFn w = random_weight(8, rng, true);
        std::vector<double> scaled = w.dense();
        for (double& x : scaled) x *= 3.0;
        const WeightFn w3 = WeightFn::from_dense(std::move(scaled));
        for (const Family& f : m3) {
            const Family ext = extend_fast(f, 8);
            const double base = family_weight(ext, w);
            CHECK(family_weight(ext, w3) == doctest::Approx(std::pow(3.0, 3) * base).epsilon(1e-12));
            // pointwise domination
            std::vector<double> bigger = w.dense();
            for (double& x : bigger) x += 1.0;
            CHECK(family_weight(ext, WeightFn::from_dense(std::move(bigger))) >= base);
        }
    }
}

TEST_CASE("optimize") {
    // uniform weights: the star wins with weight C(143, 1)
    const WeightFn ones = WeightFn::from_dense(std::vector<double>(144, 1.0));
    const OptimizeResult star = optimize(2, 144, ones);
    REQUIRE(star.argmax.size() == 1);
    CHECK(star.unique);
    CHECK(star.max_weight == 143.0);
    CHECK(star.table[star.argmax[0]].first == canonical_family(1, GroundParams(2, 144)));

    const OptimizeResult tri = optimize(2, 144, make_omega_i(2, 144));
    REQUIRE(tri.argmax.size() == 1);
    CHECK(tri.unique);
    CHECK(tri.table[tri.argmax[0]].first == canonical_family(2, GroundParams(2, 144)));

    CHECK_THROWS_WITH_AS(optimize(2, 144, WeightFn::from_dense(std::vector<double>(144, 0.0))),
                         doctest::Contains("Corollary 2.4"), DomainError);

    // non-increasing weights only warn
    std::vector<double> dec(144, 1.0);
    dec[0] = 5.0;
    const OptimizeResult warned = optimize(2, 144, WeightFn::from_dense(std::move(dec)));
    CHECK_FALSE(warned.warning.empty());
}

TEST_CASE("sample_increasing_weight determinism") {
    const WeightFn a = sample_increasing_weight(144, 2, 99);
    const WeightFn b = sample_increasing_weight(144, 2, 99);
    CHECK(a.dense() == b.dense());
    CHECK(a.increasing());
    CHECK_FALSE(is_trivial_weight(a, 2));
    const WeightFn c = sample_increasing_weight(144, 2, 100);
    CHECK(a.dense() != c.dense());
}

TEST_CASE("step weights single out each canonical family at k=4 as well") {
    const int n = static_cast<int>(theorem2_min_n(4));  // 13440
    const auto m4 = enumerate_mlcifs(4);
    for (int i = 1; i <= 4; ++i) {
        const OptimizeResult res = optimize(4, n, make_omega_i(i, n), &m4);
        REQUIRE(res.argmax.size() == 1);
        CHECK(res.unique);
        CHECK(res.table[res.argmax[0]].first == canonical_family(i, GroundParams(4, n)));
    }
}

TEST_CASE("verify_increasing_theorems guards and determinism") {
    CHECK_THROWS_WITH_AS(verify_increasing_theorems(2, 100, 5, 1), doctest::Contains("144"), ParameterError);

    const auto m2 = enumerate_mlcifs(2);
    const auto serial = verify_increasing_theorems(2, 144, 8, 3, &m2, 1);
    const auto parallel = verify_increasing_theorems(2, 144, 8, 3, &m2, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].claim == parallel[i].claim);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].params == parallel[i].params);
        CHECK(serial[i].margin == parallel[i].margin);
    }
    for (const auto& r : serial) CHECK(r.pass);
}

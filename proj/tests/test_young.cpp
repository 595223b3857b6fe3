#include <doctest.h>

#include <cmath>
#include <map>

#include "mlcif/universe.hpp"
#include "mlcif/young.hpp"

using namespace mlcif;

namespace {

KSet ks(std::vector<int> e, int n) { return KSet(std::move(e), n); }

}  // namespace

TEST_CASE("rank_sizes") {
    CHECK(rank_sizes(2, 3) == std::vector<U128>{1, 1, 2, 2, 2, 1, 1});
    CHECK(rank_sizes(1, 5) == std::vector<U128>(6, 1));
    for (int k = 1; k <= 10; ++k) {
        U128 total = 0;
        for (U128 p : rank_sizes(k, k)) total += p;
        CHECK(total == binomial_u128(2 * k, k));
    }
    CHECK_THROWS_AS(rank_sizes(80, 80), ScaleError);  // 128-bit overflow guard
}

TEST_CASE("phi and phi_inv") {
    CHECK(phi(ks({1, 2, 3}, 6)).parts == std::vector<int>{0, 0, 0});
    CHECK(phi(ks({4, 5, 6}, 6)).parts == std::vector<int>{3, 3, 3});
    CHECK(phi(ks({1, 4}, 4)).parts == std::vector<int>{0, 2});
    CHECK(phi(ks({2, 3}, 4)).parts == std::vector<int>{1, 1});
    // incomparable on both sides
    CHECK_FALSE(partition_leq(phi(ks({1, 4}, 4)), phi(ks({2, 3}, 4))));
    CHECK_FALSE(partition_leq(phi(ks({2, 3}, 4)), phi(ks({1, 4}, 4))));

    for (int k = 2; k <= 5; ++k) {
        SubsetUniverse uni(k, 2 * k);
        for (std::size_t s = 0; s < uni.size(); ++s) {
            const KSet f = uni.kset(s);
            CHECK(phi_inv(phi(f)) == f);
            CHECK(phi(f).rank() == element_sum(f) - static_cast<long long>(k) * (k + 1) / 2);
        }
    }
    CHECK_THROWS_AS(phi(ks({1, 2}, 5)), ParameterError);
}

TEST_CASE("pk_count") {
    CHECK(pk_count(2) == 1);
    CHECK_THROWS_AS(pk_count(3), DomainError);
    CHECK_THROWS_AS(pk_count(62), ScaleError);
    for (int k = 2; k <= 8; k += 2) {
        const auto ranks = rank_sizes(k, k);
        CHECK(2 * pk_count(k) == ranks[static_cast<std::size_t>(k * k / 2)]);
    }
    // brute-force cross-check at k = 2 and 4: count balanced sets directly
    for (int k = 2; k <= 4; k += 2) {
        SubsetUniverse uni(k, 2 * k);
        long long balanced = 0;
        for (std::size_t s = 0; s < uni.size(); ++s)
            if (uni.sum(s) == static_cast<long long>(k) * (2 * k + 1) / 2) ++balanced;
        CHECK(pk_count(k) == static_cast<U128>(balanced / 2));
    }
}

TEST_CASE("max_antichain") {
    const AntichainResult l23 = max_antichain(2, 3);
    CHECK(l23.size == 2);
    CHECK(l23.witness.size() == 2);
    CHECK(max_antichain(2, 2).size == 2);
    for (int k = 2; k <= 4; ++k) {
        const auto ranks = rank_sizes(k, k);
        U128 best = 0;
        for (U128 p : ranks) best = std::max(best, p);
        CHECK(static_cast<U128>(max_antichain(k, k).size) == best);
    }
    CHECK_THROWS_AS(max_antichain(10, 10), ScaleError);
}

TEST_CASE("theorem1_report") {
    const auto rows = theorem1_report(4, {{2, 2}, {3, 6}, {4, 72}});
    REQUIRE(rows.size() == 3);
    const BoundsRow& r2 = rows[0];
    CHECK(r2.k == 2);
    CHECK(r2.log2_lower_allk == 0.5);
    CHECK(r2.log2_upper_allk == 3.0);
    REQUIRE(r2.log2_mk.has_value());
    CHECK(*r2.log2_mk == 1.0);
    CHECK(r2.log2_lower_allk <= *r2.log2_mk);
    CHECK(*r2.log2_mk <= r2.log2_upper_allk);
    REQUIRE(r2.pk.has_value());
    CHECK(*r2.pk == 1);
    // exact refinement at k=2: C(6,1) + C(6,2) = 21
    CHECK(r2.log2_antichain_bound == doctest::Approx(std::log2(21.0)).epsilon(1e-9));

    // Prodinger ratio drifts toward 1
    const auto wide = theorem1_report(40);
    std::map<int, double> r;
    for (const auto& row : wide)
        if (row.prodinger_r) r[row.k] = *row.prodinger_r;
    CHECK(std::abs(r[40] - 1.0) < std::abs(r[10] - 1.0));
    CHECK(r[40] > 0.8);
    CHECK(r[40] < 1.2);
}

TEST_CASE("supersaturation_probe") {
    const ProbeReport report = supersaturation_probe(4, {10, 20}, 8, 123);
    CHECK(report.label == "empirical — conjecture unproven");
    bool saw_single = false, saw_full = false, saw_uniform = false;
    for (const ProbeRow& row : report.rows) {
        if (row.strategy == "single-layer") {
            saw_single = true;
            CHECK(row.density == 0.0);  // a rank layer is an antichain
        }
        if (row.strategy == "full") saw_full = true;
        if (row.strategy == "uniform") saw_uniform = true;
    }
    CHECK(saw_single);
    CHECK(saw_full);
    CHECK(saw_uniform);

    // deterministic per seed, across thread counts
    const ProbeReport again = supersaturation_probe(4, {10, 20}, 8, 123, 3);
    REQUIRE(report.rows.size() == again.rows.size());
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CHECK(report.rows[i].strategy == again.rows[i].strategy);
        CHECK(report.rows[i].density == again.rows[i].density);
    }

    CHECK_THROWS_AS(supersaturation_probe(10, {5}, 2, 1), ScaleError);
    CHECK_THROWS_AS(supersaturation_probe(3, {100000}, 2, 1), ParameterError);
}

TEST_CASE("full-lattice density is exact") {
    // recount comparable pairs of L(3,3) directly from the definition
    const ProbeReport report = supersaturation_probe(3, {5}, 1, 1);
    double full_density = -1.0;
    for (const ProbeRow& row : report.rows)
        if (row.strategy == "full") full_density = row.density;
    SubsetUniverse uni(3, 6);
    long long pairs = 0;
    for (std::size_t a = 0; a < uni.size(); ++a)
        for (std::size_t b = a + 1; b < uni.size(); ++b)
            if (uni.down(a).test(b) || uni.down(b).test(a)) ++pairs;
    const double expect = static_cast<double>(pairs) / (9.0 * static_cast<double>(uni.size()));
    CHECK(full_density == doctest::Approx(expect).epsilon(1e-12));
}

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlcif/core.hpp"

namespace mlcif {

using U128 = unsigned __int128;

std::string u128_to_string(U128 v);

/// C(n, k) in checked 128-bit arithmetic.
U128 binomial_u128(int n, int k);

/// A partition in L(m, n): m nondecreasing parts, each in [0, n]. Stored in
/// the increasing-with-zeros convention so that phi is literally x_i - i.
struct Partition {
    std::vector<int> parts;

    int m() const { return static_cast<int>(parts.size()); }
    long long rank() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition make_partition(std::vector<int> parts, int n);

/// Componentwise order on L(m, n).
bool partition_leq(const Partition& a, const Partition& b);

/// Rank sizes p_0 .. p_mn of L(m, n): p_j counts partitions of j into at most
/// m parts, each at most n. Exact 128-bit with overflow guard; the computed
/// list is verified palindromic and unimodal with total C(m+n, m)
/// (IntegrityError otherwise).
std::vector<U128> rank_sizes(int m, int n);

/// The order isomorphism C([2k], k) -> L(k, k): subtract i from the i-th
/// smallest element. phi_inv adds it back.
Partition phi(const KSet& f);
KSet phi_inv(const Partition& p);

/// Number of complementary balanced pairs: half the count of k-subsets of
/// [2k] with element sum k(2k+1)/2. Even k <= 60.
U128 pk_count(int k);

struct AntichainResult {
    std::size_t size = 0;
    std::vector<Partition> witness;
};

/// Exact maximum antichain in L(m, n) via minimum chain cover (bipartite
/// matching on the comparability relation). Guarded at C(m+n, m) <= 2000.
AntichainResult max_antichain(int m, int n);

struct BoundsRow {
    int k = 0;
    double log2_lower_allk = 0.0;       // C(k-1, floor(k/2)) / 2
    double log2_upper_allk = 0.0;       // C(2k, k) / 2
    double log2_lower_asym = 0.0;       // (1/9) k^{-3/2} C(2k, k)
    double log2_upper_asym = 0.0;       // 7 log2(k) k^{-3/2} C(2k, k)
    double log2_antichain_bound = 0.0;  // log2 sum_{i<=q} C(C(2k,k), i), q = max antichain
    std::optional<double> log2_mk;      // when |M_k| was enumerated
    std::optional<U128> pk;             // even k
    std::optional<double> prodinger_r;  // pk * 2 pi k^2 / (2^{2k} sqrt(3))
};

/// Bound arithmetic in the log2 domain for k = 2..kmax; doubly-exponential
/// quantities are never materialized. Pass enumerated counts to fill log2_mk.
std::vector<BoundsRow> theorem1_report(int kmax, const std::map<int, unsigned long long>& mk_counts = {});

struct ProbeRow {
    int k = 0;
    std::string strategy;  // uniform | middle-layers | single-layer | full
    std::size_t usize = 0;
    double density = 0.0;  // comparable pairs / (k^2 |U|)
    std::uint64_t seed = 0;
    bool below_threshold = false;  // |U| < k^{-3/2} C(2k,k) (reference c1 = 1)
};

struct ProbeReport {
    int k = 0;
    std::vector<ProbeRow> rows;
    double min_uniform_density = 0.0;
    double mean_uniform_density = 0.0;
    std::string label;  // always "empirical — conjecture unproven"
};

/// Comparable-pair densities of sampled subsets of L(k, k); purely
/// observational, never a pass/fail verdict. Guarded at C(2k, k) <= 100000.
ProbeReport supersaturation_probe(int k, const std::vector<std::size_t>& sizes, int samples, std::uint64_t seed,
                                  int threads = 0);

}  // namespace mlcif

#include "mlcif/young.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mlcif/threads.hpp"
#include "mlcif/universe.hpp"

namespace mlcif {

std::string u128_to_string(U128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

constexpr U128 kU128Max = ~static_cast<U128>(0);

U128 checked_add(U128 a, U128 b) {
    if (a > kU128Max - b) throw ScaleError("128-bit integer overflow in exact count");
    return a + b;
}

U128 checked_mul(U128 a, U128 b) {
    if (b != 0 && a > kU128Max / b) throw ScaleError("128-bit integer overflow in exact count");
    return a * b;
}

}  // namespace

U128 binomial_u128(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    U128 r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, static_cast<U128>(n - k + i)) / static_cast<U128>(i);
    return r;
}

long long Partition::rank() const {
    long long s = 0;
    for (int x : parts) s += x;
    return s;
}

Partition make_partition(std::vector<int> parts, int n) {
    if (parts.empty()) throw ParameterError("partition needs at least one part");
    int prev = 0;
    for (int x : parts) {
        if (x < prev) throw ParameterError("partition parts must be nondecreasing");
        prev = x;
    }
    if (prev > n) throw ParameterError("partition part exceeds largest allowed part " + std::to_string(n));
    if (parts.front() < 0) throw ParameterError("partition parts must be nonnegative");
    return Partition{std::move(parts)};
}

bool partition_leq(const Partition& a, const Partition& b) {
    if (a.m() != b.m()) throw ParameterError("partition_leq: mismatched part counts");
    for (int i = 0; i < a.m(); ++i)
        if (a.parts[static_cast<std::size_t>(i)] > b.parts[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::vector<U128> rank_sizes(int m, int n) {
    if (m < 1 || n < 1) throw ParameterError("rank_sizes requires m, n >= 1");
    // T(a, b)[j] counts partitions of j into at most a parts, each at most b:
    // T(a, b) = T(a, b-1) + q^b T(a-1, b). Two rows over b suffice.
    const std::size_t deg = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    std::vector<std::vector<U128>> prev(static_cast<std::size_t>(n) + 1);  // a-1 row, indexed by b
    for (int b = 0; b <= n; ++b) prev[static_cast<std::size_t>(b)] = {1};  // a = 0: empty partition only
    std::vector<std::vector<U128>> cur(static_cast<std::size_t>(n) + 1);
    for (int a = 1; a <= m; ++a) {
        cur[0] = {1};  // b = 0: all parts zero
        for (int b = 1; b <= n; ++b) {
            const std::size_t len = std::min(deg, static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) + 1;
            std::vector<U128> row(len, 0);
            const auto& left = cur[static_cast<std::size_t>(b - 1)];
            for (std::size_t j = 0; j < left.size(); ++j) row[j] = left[j];
            const auto& up = prev[static_cast<std::size_t>(b)];
            for (std::size_t j = 0; j < up.size(); ++j)
                row[j + static_cast<std::size_t>(b)] = checked_add(row[j + static_cast<std::size_t>(b)], up[j]);
            cur[static_cast<std::size_t>(b)] = std::move(row);
        }
        prev.swap(cur);
    }
    std::vector<U128> out = prev[static_cast<std::size_t>(n)];
    out.resize(deg + 1, 0);

    // every call re-verifies the palindrome/unimodal/total properties
    U128 total = 0;
    for (U128 p : out) total = checked_add(total, p);
    if (total != binomial_u128(m + n, m))
        throw IntegrityError("rank sizes of L(" + std::to_string(m) + "," + std::to_string(n) + ") do not total C(m+n, m)");
    for (std::size_t j = 0; j < out.size(); ++j)
        if (out[j] != out[out.size() - 1 - j])
            throw IntegrityError("rank sizes of L(" + std::to_string(m) + "," + std::to_string(n) + ") are not palindromic");
    bool rising = true;
    for (std::size_t j = 1; j < out.size(); ++j) {
        if (out[j] > out[j - 1] && !rising)
            throw IntegrityError("rank sizes of L(" + std::to_string(m) + "," + std::to_string(n) + ") are not unimodal");
        if (out[j] < out[j - 1]) rising = false;
    }
    return out;
}

Partition phi(const KSet& f) {
    if (f.n() != 2 * f.k()) throw ParameterError("phi is defined on C([2k], k)");
    std::vector<int> parts(static_cast<std::size_t>(f.k()));
    for (int i = 1; i <= f.k(); ++i) parts[static_cast<std::size_t>(i - 1)] = f.element(i) - i;
    return make_partition(std::move(parts), f.k());
}

KSet phi_inv(const Partition& p) {
    const int k = p.m();
    for (int x : p.parts)
        if (x > k) throw ParameterError("phi_inv expects a partition in L(k, k)");
    std::vector<int> elems(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) elems[static_cast<std::size_t>(i - 1)] = p.parts[static_cast<std::size_t>(i - 1)] + i;
    return KSet(std::move(elems), 2 * k);
}

U128 pk_count(int k) {
    if (k < 2 || k % 2 != 0) throw DomainError("pk_count requires even k >= 2, got " + std::to_string(k));
    if (k > 60) throw ScaleError("pk_count guarded at k <= 60");
    const int target = k * (2 * k + 1) / 2;
    // dp[c][s]: subsets of the elements seen so far with c elements summing s
    std::vector<std::vector<U128>> dp(static_cast<std::size_t>(k) + 1,
                                      std::vector<U128>(static_cast<std::size_t>(target) + 1, 0));
    dp[0][0] = 1;
    for (int e = 1; e <= 2 * k; ++e)
        for (int c = std::min(k, e); c >= 1; --c)
            for (int s = target; s >= e; --s)
                dp[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] =
                    checked_add(dp[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)],
                                dp[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(s - e)]);
    return dp[static_cast<std::size_t>(k)][static_cast<std::size_t>(target)] / 2;
}

namespace {

std::vector<Partition> all_partitions(int m, int n) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    while (true) {
        out.push_back(Partition{cur});
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        const int v = cur[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < m; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

}  // namespace

AntichainResult max_antichain(int m, int n) {
    const U128 count = binomial_u128(m + n, m);
    if (count > 2000) throw ScaleError("max_antichain guarded at C(m+n, m) <= 2000");
    const std::vector<Partition> elems = all_partitions(m, n);
    const int V = static_cast<int>(elems.size());

    // comparability edges a -> b for a strictly below b (already transitive)
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b)
            if (a != b && partition_leq(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]))
                adj[static_cast<std::size_t>(a)].push_back(b);

    // Kuhn's matching: minimum chain cover = V - matching = maximum antichain
    std::vector<int> match_right(static_cast<std::size_t>(V), -1);
    std::vector<int> match_left(static_cast<std::size_t>(V), -1);
    std::vector<char> used;
    auto try_kuhn = [&](auto&& self, int a) -> bool {
        for (int b : adj[static_cast<std::size_t>(a)]) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            if (match_right[static_cast<std::size_t>(b)] == -1 || self(self, match_right[static_cast<std::size_t>(b)])) {
                match_right[static_cast<std::size_t>(b)] = a;
                match_left[static_cast<std::size_t>(a)] = b;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int a = 0; a < V; ++a) {
        used.assign(static_cast<std::size_t>(V), 0);
        if (try_kuhn(try_kuhn, a)) ++matching;
    }

    // Koenig: alternating reachability from unmatched left vertices; the
    // antichain is the set of elements uncovered on both sides.
    std::vector<char> zl(static_cast<std::size_t>(V), 0), zr(static_cast<std::size_t>(V), 0);
    std::vector<int> queue;
    for (int a = 0; a < V; ++a)
        if (match_left[static_cast<std::size_t>(a)] == -1) {
            zl[static_cast<std::size_t>(a)] = 1;
            queue.push_back(a);
        }
    while (!queue.empty()) {
        const int a = queue.back();
        queue.pop_back();
        for (int b : adj[static_cast<std::size_t>(a)]) {
            if (zr[static_cast<std::size_t>(b)]) continue;
            if (match_left[static_cast<std::size_t>(a)] == b) continue;  // non-matching edges only
            zr[static_cast<std::size_t>(b)] = 1;
            const int a2 = match_right[static_cast<std::size_t>(b)];
            if (a2 != -1 && !zl[static_cast<std::size_t>(a2)]) {
                zl[static_cast<std::size_t>(a2)] = 1;
                queue.push_back(a2);
            }
        }
    }

    AntichainResult res;
    res.size = static_cast<std::size_t>(V - matching);
    for (int v = 0; v < V; ++v) {
        const bool left_covered = !zl[static_cast<std::size_t>(v)];  // L \ Z
        const bool right_covered = zr[static_cast<std::size_t>(v)];  // R cap Z
        if (!left_covered && !right_covered) res.witness.push_back(elems[static_cast<std::size_t>(v)]);
    }
    if (res.witness.size() != res.size)
        throw IntegrityError("antichain witness size disagrees with V - matching");
    for (std::size_t i = 0; i < res.witness.size(); ++i)
        for (std::size_t j = i + 1; j < res.witness.size(); ++j)
            if (partition_leq(res.witness[i], res.witness[j]) || partition_leq(res.witness[j], res.witness[i]))
                throw IntegrityError("antichain witness contains a comparable pair");
    return res;
}

namespace {

double log2_u128(U128 v) { return std::log2(static_cast<long double>(v)); }

/// log2 of C(m, i) for huge m via lgamma.
double log2_binomial_real(double m, double i) {
    return (std::lgamma(m + 1.0) - std::lgamma(i + 1.0) - std::lgamma(m - i + 1.0)) / std::numbers::ln2;
}

}  // namespace

std::vector<BoundsRow> theorem1_report(int kmax, const std::map<int, unsigned long long>& mk_counts) {
    if (kmax < 2) throw ParameterError("theorem1_report requires kmax >= 2");
    std::vector<BoundsRow> rows;
    for (int k = 2; k <= kmax; ++k) {
        BoundsRow row;
        row.k = k;
        const double m = static_cast<double>(static_cast<long double>(binomial_u128(2 * k, k)));
        const double kpow = std::pow(static_cast<double>(k), -1.5);
        row.log2_lower_allk = 0.5 * static_cast<double>(static_cast<long double>(binomial_u128(k - 1, k / 2)));
        row.log2_upper_allk = 0.5 * m;
        row.log2_lower_asym = kpow * m / 9.0;
        row.log2_upper_asym = 7.0 * std::log2(static_cast<double>(k)) * kpow * m;

        // largest antichain q = middle rank of L(k, k); exact via rank sizes
        const std::vector<U128> ranks = rank_sizes(k, k);
        U128 q = 0;
        for (U128 p : ranks) q = std::max(q, p);
        if (q <= 4096) {
            // exact log-sum of sum_{i=1..q} C(m, i)
            long double acc = 0.0L;
            for (U128 i = 1; i <= q; ++i)
                acc += std::exp2l(static_cast<long double>(log2_binomial_real(m, static_cast<double>(static_cast<long double>(i)))) -
                                  static_cast<long double>(log2_binomial_real(m, static_cast<double>(static_cast<long double>(q)))));
            row.log2_antichain_bound = log2_binomial_real(m, static_cast<double>(static_cast<long double>(q))) +
                                       static_cast<double>(std::log2l(acc));
        } else {
            // sum_{i<=q} C(m, i) <= q C(m, q) for q <= m/2
            row.log2_antichain_bound =
                log2_u128(q) + log2_binomial_real(m, static_cast<double>(static_cast<long double>(q)));
        }

        if (auto it = mk_counts.find(k); it != mk_counts.end())
            row.log2_mk = std::log2(static_cast<double>(it->second));
        if (k % 2 == 0) {
            const U128 pk = pk_count(k);
            row.pk = pk;
            const long double num = static_cast<long double>(pk) * 2.0L * std::numbers::pi_v<long double> *
                                    static_cast<long double>(k) * static_cast<long double>(k);
            const long double den = std::exp2l(2.0L * k) * std::sqrt(3.0L);
            row.prodinger_r = static_cast<double>(num / den);
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::uint64_t probe_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long long comparable_pairs(const std::vector<Partition>& all, const std::vector<std::size_t>& idx) {
    long long e = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (partition_leq(all[idx[i]], all[idx[j]]) || partition_leq(all[idx[j]], all[idx[i]])) ++e;
    return e;
}

double density(int k, long long pairs, std::size_t usize) {
    if (usize == 0) return 0.0;
    return static_cast<double>(pairs) / (static_cast<double>(k) * static_cast<double>(k) * static_cast<double>(usize));
}

}  // namespace

ProbeReport supersaturation_probe(int k, const std::vector<std::size_t>& sizes, int samples, std::uint64_t seed,
                                  int threads) {
    if (k < 2) throw ParameterError("supersaturation_probe requires k >= 2");
    const U128 total = binomial_u128(2 * k, k);
    if (total > 100000) throw ScaleError("supersaturation_probe guarded at C(2k, k) <= 100000");
    const std::vector<Partition> all = all_partitions(k, k);
    const std::size_t V = all.size();
    const double threshold = std::pow(static_cast<double>(k), -1.5) * static_cast<double>(V);

    ProbeReport report;
    report.k = k;
    report.label = "empirical — conjecture unproven";

    // group by rank for the layer strategies
    std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(k * k) + 1);
    for (std::size_t i = 0; i < V; ++i) layers[static_cast<std::size_t>(all[i].rank())].push_back(i);
    const std::size_t mid = static_cast<std::size_t>(k * k / 2);

    auto add_row = [&](const std::string& strategy, const std::vector<std::size_t>& idx, std::uint64_t row_seed) {
        ProbeRow row;
        row.k = k;
        row.strategy = strategy;
        row.usize = idx.size();
        row.density = density(k, comparable_pairs(all, idx), idx.size());
        row.seed = row_seed;
        row.below_threshold = static_cast<double>(idx.size()) < threshold;
        report.rows.push_back(std::move(row));
    };

    // single middle layer: an antichain, density exactly zero
    add_row("single-layer", layers[mid], seed);

    // full lattice, exact, for modest k
    if (V <= 1000) {
        std::vector<std::size_t> everything(V);
        for (std::size_t i = 0; i < V; ++i) everything[i] = i;
        add_row("full", everything, seed);
    }

    for (const std::size_t size : sizes) {
        if (size == 0 || size > V)
            throw ParameterError("probe subset size must be in [1, C(2k,k)] = [1, " + std::to_string(V) + "]");

        // consecutive middle layers reaching at least the requested size
        {
            std::vector<std::size_t> idx;
            std::size_t lo = mid, hi = mid;
            idx.insert(idx.end(), layers[mid].begin(), layers[mid].end());
            while (idx.size() < size && (lo > 0 || hi + 1 < layers.size())) {
                if (hi + 1 < layers.size()) {
                    ++hi;
                    idx.insert(idx.end(), layers[hi].begin(), layers[hi].end());
                }
                if (idx.size() >= size) break;
                if (lo > 0) {
                    --lo;
                    idx.insert(idx.end(), layers[lo].begin(), layers[lo].end());
                }
            }
            add_row("middle-layers", idx, seed);
        }

        // uniform random subsets of exactly the requested size
        std::vector<ProbeRow> uniform_rows(static_cast<std::size_t>(samples));
        const int nthreads = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
        for (int s = 0; s < samples; ++s) {  // body cannot throw: indices validated above
            std::uint64_t state = probe_mix(seed ^ (static_cast<std::uint64_t>(size) << 32) ^ static_cast<std::uint64_t>(s));
            std::vector<std::size_t> pool(V);
            for (std::size_t i = 0; i < V; ++i) pool[i] = i;
            for (std::size_t i = 0; i < size; ++i) {  // partial Fisher-Yates
                state = probe_mix(state);
                const std::size_t j = i + static_cast<std::size_t>(state % (V - i));
                std::swap(pool[i], pool[j]);
            }
            pool.resize(size);
            ProbeRow row;
            row.k = k;
            row.strategy = "uniform";
            row.usize = size;
            row.density = density(k, comparable_pairs(all, pool), size);
            row.seed = seed;
            row.below_threshold = static_cast<double>(size) < threshold;
            uniform_rows[static_cast<std::size_t>(s)] = std::move(row);
        }
        for (auto& row : uniform_rows) report.rows.push_back(std::move(row));
    }

    double min_d = 0.0, sum_d = 0.0;
    std::size_t n_uniform = 0;
    for (const ProbeRow& row : report.rows) {
        if (row.strategy != "uniform") continue;
        if (n_uniform == 0 || row.density < min_d) min_d = row.density;
        sum_d += row.density;
        ++n_uniform;
    }
    report.min_uniform_density = min_d;
    report.mean_uniform_density = n_uniform ? sum_d / static_cast<double>(n_uniform) : 0.0;
    return report;
}

}  // namespace mlcif

#include "mlcif/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mlcif/claims.hpp"
#include "mlcif/enumerate.hpp"
#include "mlcif/extension.hpp"
#include "mlcif/threads.hpp"
#include "mlcif/universe.hpp"

namespace mlcif {

namespace {

bool is_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

}  // namespace

WeightFn WeightFn::from_dense(std::vector<double> values) {
    if (values.empty()) throw ParameterError("weight function needs at least one value");
    for (double v : values)
        if (!(v >= 0.0)) throw ParameterError("weight values must be nonnegative");
    WeightFn w;
    w.n_ = static_cast<int>(values.size());
    w.dense_ = std::move(values);
    w.increasing_ = is_increasing(w.dense_);
    return w;
}

WeightFn WeightFn::from_steps(int n, std::vector<WeightStep> steps) {
    if (n < 1) throw ParameterError("weight function ground size must be >= 1");
    if (steps.empty() || steps.front().from != 1)
        throw ParameterError("steps must start at from=1");
    int prev = 0;
    for (const WeightStep& s : steps) {
        if (s.from <= prev || s.from > n) throw ParameterError("step thresholds must be increasing and within [1, n]");
        if (!(s.value >= 0.0)) throw ParameterError("weight values must be nonnegative");
        prev = s.from;
    }
    WeightFn w;
    w.n_ = n;
    w.dense_.resize(static_cast<std::size_t>(n));
    std::size_t si = 0;
    for (int j = 1; j <= n; ++j) {
        while (si + 1 < steps.size() && steps[si + 1].from <= j) ++si;
        w.dense_[static_cast<std::size_t>(j - 1)] = steps[si].value;
    }
    w.steps_ = std::move(steps);
    w.increasing_ = is_increasing(w.dense_);
    return w;
}

double weight_of_set(const KSet& f, const WeightFn& w) {
    if (f.n() > w.n()) throw ParameterError("set lives on a larger ground than the weight function");
    double p = 1.0;
    for (int x : f.elements()) {
        p *= w.at(x);
        if (p == 0.0) return 0.0;
    }
    return p;
}

double downset_weight(const KSet& b, const WeightFn& w) {
    if (b.n() > w.n()) throw ParameterError("set lives on a larger ground than the weight function");
    const int k = b.k();
    // prefix[t] = sum over s <= t of D(i, s); level 0 is the empty prefix
    std::vector<double> prefix(static_cast<std::size_t>(b.element(k)) + 1, 1.0);
    prefix[0] = 1.0;  // D(0, 0) = 1
    for (int i = 1; i <= k; ++i) {
        const int cap = b.element(i);
        std::vector<double> next(prefix.size(), 0.0);
        double run = 0.0;
        for (int t = 1; t < static_cast<int>(prefix.size()); ++t) {
            double d = 0.0;
            if (t <= cap) d = w.at(t) * prefix[static_cast<std::size_t>(t - 1)];
            run += d;
            next[static_cast<std::size_t>(t)] = run;
        }
        prefix = std::move(next);
    }
    return prefix.back();
}

namespace {

double family_weight_ie(const std::vector<KSet>& boundary, const WeightFn& w) {
    std::map<std::vector<int>, double> memo;
    const auto eval = [&](const KSet& s) {
        auto it = memo.find(s.elements());
        if (it != memo.end()) return it->second;
        const double v = downset_weight(s, w);
        memo.emplace(s.elements(), v);
        return v;
    };
    double total = 0.0;
    // DFS over subsets carrying the running meet; sign alternates with |S|
    const std::size_t b = boundary.size();
    struct Frame {
        std::size_t next;
        KSet m;
        int size;
    };
    std::vector<Frame> frames;
    for (std::size_t i = 0; i < b; ++i) frames.push_back(Frame{i + 1, boundary[i], 1});
    while (!frames.empty()) {
        Frame f = std::move(frames.back());
        frames.pop_back();
        total += (f.size % 2 == 1 ? 1.0 : -1.0) * eval(f.m);
        for (std::size_t j = f.next; j < b; ++j)
            frames.push_back(Frame{j + 1, meet(f.m, boundary[j]), f.size + 1});
    }
    return total;
}

}  // namespace

double family_weight(const Family& f, const WeightFn& w) {
    if (f.n() > w.n()) throw ParameterError("family lives on a larger ground than the weight function");
    if (f.boundary().size() > 25)
        throw ScaleError("family_weight: boundary has " + std::to_string(f.boundary().size()) +
                         " sets; inclusion-exclusion refused above 25 — use direct member summation");
    return family_weight_ie(f.boundary(), w);
}

double family_weight_direct(const Family& f, const WeightFn& w) {
    double total = 0.0;
    for (const KSet& m : f.members()) total += weight_of_set(m, w);
    return total;
}

WeightFn make_omega_i(int i, int n) {
    if (i < 1 || i > n) throw ParameterError("make_omega_i: i must be in [1, n]");
    std::vector<WeightStep> steps;
    if (i == 1) {
        steps.push_back({1, 1.0});
    } else {
        steps.push_back({1, 0.0});
        steps.push_back({i, 1.0});
    }
    return WeightFn::from_steps(n, std::move(steps));
}

bool is_trivial_weight(const WeightFn& w, int k) {
    const GroundParams params(k, w.n());
    params.require_family_scale();
    for (int i = 1; i <= k; ++i)
        if (downset_weight(z_set(i, params), w) > 0.0) return false;
    return true;
}

OptimizeResult optimize(int k, int n, const WeightFn& w, const std::vector<Family>* mk) {
    if (w.n() < n) throw ParameterError("weight function covers [" + std::to_string(w.n()) + "], need [" + std::to_string(n) + "]");
    GroundParams(k, n).require_family_scale();
    if (is_trivial_weight(w, k))
        throw DomainError(std::string("trivial weight function: every MLCIF weighs zero (") + claims::kCor24 + ")");

    OptimizeResult res;
    if (!w.increasing()) res.warning = "weight function is not increasing; optimal families need not be canonical";

    std::vector<Family> own;
    if (!mk) {
        own = enumerate_mlcifs(k);
        mk = &own;
    }
    res.table.reserve(mk->size());
    for (const Family& f : *mk) {
        Family ext = (n == f.n()) ? f : extend_fast(f, n);
        const double weight = family_weight(ext, w);
        res.table.emplace_back(std::move(ext), weight);
    }
    res.max_weight = 0.0;
    for (const auto& [fam, weight] : res.table) res.max_weight = std::max(res.max_weight, weight);
    double second = 0.0;
    for (std::size_t i = 0; i < res.table.size(); ++i) {
        if (res.table[i].second >= res.max_weight * (1.0 - kStrictMargin))
            res.argmax.push_back(i);
        else
            second = std::max(second, res.table[i].second);
    }
    res.unique = res.argmax.size() == 1 && second < res.max_weight * (1.0 - kStrictMargin);
    return res;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// 53-bit uniform in [0, 1); platform-independent given the state sequence.
double next_u01(std::uint64_t& state) {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

}  // namespace

WeightFn sample_increasing_weight(int n, int k, std::uint64_t seed) {
    std::uint64_t state = splitmix64(seed ^ 0x5bf03635ab64a3a6ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> v(static_cast<std::size_t>(n));
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            acc += (next_u01(state) < 0.25) ? 0.0 : 1.0;
            v[static_cast<std::size_t>(j)] = acc;
        }
        WeightFn w = WeightFn::from_dense(std::move(v));
        if (!is_trivial_weight(w, k)) return w;
    }
    throw IntegrityError("could not sample a non-trivial increasing weight in 64 attempts");
}

long long theorem2_min_n(int k) {
    return 3LL * k * k * k * static_cast<long long>(binomial_u64(2 * k, k));
}

std::vector<VerificationReport> verify_increasing_theorems(int k, int n, int samples, std::uint64_t seed,
                                                           const std::vector<Family>* mk, int threads) {
    const long long required = theorem2_min_n(k);
    if (n < required)
        throw ParameterError("the increasing-weight theorems require n >= 3k^3 C(2k,k) = " + std::to_string(required) +
                             " for k=" + std::to_string(k) + "; got n=" + std::to_string(n));
    if (samples < 1) throw ParameterError("samples must be >= 1");

    std::vector<Family> own;
    if (!mk) {
        own = enumerate_mlcifs(k);
        mk = &own;
    }
    const GroundParams params(k, n);

    // canonical boundaries on [2k] identify the canonical entries of M_k
    std::vector<KSet> canon2k;
    for (int i = 1; i <= k; ++i) canon2k.push_back(z_set(i, GroundParams(k, 2 * k)));

    struct Extended {
        Family fam;
        TypeTag tag;
    };
    std::vector<Family> canonical_ext;
    for (int i = 1; i <= k; ++i) canonical_ext.push_back(canonical_family(i, params));
    std::vector<Extended> noncanonical;
    for (const Family& f : *mk) {
        const bool canonical = f.boundary().size() == 1 &&
                               std::find(canon2k.begin(), canon2k.end(), f.boundary().front()) != canon2k.end();
        if (canonical) continue;
        Family ext = extend_fast(f, n);
        TypeTag tag = type_of_boundary(ext);
        noncanonical.push_back(Extended{std::move(ext), tag});
    }

    const double c_k = 1.0 / static_cast<double>(binomial_u64(2 * k, k));  // computed, never hardcoded

    struct SampleOutcome {
        VerificationReport typeless, typed, cor32, thm2;
    };
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(samples));

    const int nthreads = resolve_threads(threads);
    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
    for (int s = 0; s < samples; ++s) {
        if (first_error) continue;
        try {
        const std::uint64_t sample_seed = splitmix64(seed + static_cast<std::uint64_t>(s) * 0x9e3779b97f4a7c15ULL);
        const WeightFn w = sample_increasing_weight(n, k, sample_seed);

        std::vector<double> canon_w(static_cast<std::size_t>(k));
        double canon_sum = 0.0, canon_max = 0.0;
        for (int j = 0; j < k; ++j) {
            canon_w[static_cast<std::size_t>(j)] = family_weight(canonical_ext[static_cast<std::size_t>(j)], w);
            canon_sum += canon_w[static_cast<std::size_t>(j)];
            canon_max = std::max(canon_max, canon_w[static_cast<std::size_t>(j)]);
        }

        auto base_report = [&](const char* claim) {
            VerificationReport r;
            r.claim = claim;
            r.params = {{"k", std::to_string(k)},
                        {"n", std::to_string(n)},
                        {"sample", std::to_string(s)},
                        {"seed", std::to_string(seed)}};
            r.pass = true;
            return r;
        };
        auto check_strict = [&](VerificationReport& r, double lhs, double rhs, const Family& fam) {
            const double margin = (rhs - lhs) / std::max(rhs, 1e-300);
            if (!r.margin || margin < *r.margin) r.margin = margin;
            if (margin <= kStrictMargin) {
                r.pass = false;
                r.witnesses.emplace_back("family", canonical_jsonl(fam));
                r.witnesses.emplace_back("lhs", std::to_string(lhs));
                r.witnesses.emplace_back("rhs", std::to_string(rhs));
            } else if (margin < kNearMarginWarn) {
                r.warning = true;
                r.note = "near-margin pass";
            }
        };

        SampleOutcome& o = outcomes[static_cast<std::size_t>(s)];
        o.typeless = base_report(claims::kTheorem31Typeless);
        o.typed = base_report(claims::kTheorem31Typed);
        o.cor32 = base_report(claims::kCor32);
        o.thm2 = base_report(claims::kTheorem2);

        int typeless_seen = 0, typed_seen = 0;
        for (const Extended& e : noncanonical) {
            const double lhs = family_weight(e.fam, w);
            if (e.tag.typeless()) {
                ++typeless_seen;
                check_strict(o.typeless, lhs, canon_sum / k, e.fam);
            } else {
                ++typed_seen;
                const double rhs = (1.0 - c_k) * canon_w[static_cast<std::size_t>(*e.tag.type - 1)] + (c_k / k) * canon_sum;
                check_strict(o.typed, lhs, rhs, e.fam);
            }
            check_strict(o.cor32, lhs, canon_max, e.fam);
        }
        if (noncanonical.empty()) {
            const std::string note = "vacuous: every MLCIF is canonical at k=" + std::to_string(k);
            o.typeless.note = o.typed.note = o.cor32.note = note;
        } else {
            if (typeless_seen == 0) o.typeless.note = "vacuous: no typeless MLCIF at k=" + std::to_string(k);
            if (typed_seen == 0) o.typed.note = "vacuous: no typed non-canonical MLCIF at k=" + std::to_string(k);
        }

        // Theorem 2: every optimal family must be canonical
        if (noncanonical.empty()) {
            o.thm2.note = "vacuous: every MLCIF is canonical at k=" + std::to_string(k);
        } else {
            double best_noncanon = 0.0;
            const Family* worst = nullptr;
            for (const Extended& e : noncanonical) {
                const double lhs = family_weight(e.fam, w);
                if (lhs > best_noncanon) {
                    best_noncanon = lhs;
                    worst = &e.fam;
                }
            }
            const double margin = (canon_max - best_noncanon) / std::max(canon_max, 1e-300);
            o.thm2.margin = margin;
            if (margin <= kStrictMargin) {
                o.thm2.pass = false;
                if (worst) o.thm2.witnesses.emplace_back("family", canonical_jsonl(*worst));
                o.thm2.witnesses.emplace_back("best_noncanonical", std::to_string(best_noncanon));
                o.thm2.witnesses.emplace_back("best_canonical", std::to_string(canon_max));
            }
        }
        } catch (...) {  // exceptions must not escape the parallel region
#ifdef _OPENMP
#pragma omp critical(mlcif_verify_error)
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    // deterministic merge: claim-major, sample-minor
    std::vector<VerificationReport> reports;
    for (const auto& o : outcomes) reports.push_back(o.typeless);
    for (const auto& o : outcomes) reports.push_back(o.typed);
    for (const auto& o : outcomes) reports.push_back(o.cor32);
    for (const auto& o : outcomes) reports.push_back(o.thm2);

    // Lemma 3.3: each canonical family uniquely optimal for its step weight
    for (int i = 1; i <= k; ++i) {
        VerificationReport r;
        r.claim = claims::kLemma33;
        r.params = {{"k", std::to_string(k)}, {"n", std::to_string(n)}, {"i", std::to_string(i)}};
        const OptimizeResult opt = optimize(k, n, make_omega_i(i, n), mk);
        const Family& expect = canonical_ext[static_cast<std::size_t>(i - 1)];
        r.pass = opt.unique && opt.argmax.size() == 1 && opt.table[opt.argmax[0]].first == expect;
        if (!r.pass) {
            for (std::size_t a : opt.argmax)
                r.witnesses.emplace_back("argmax", canonical_jsonl(opt.table[a].first));
            r.witnesses.emplace_back("expected", canonical_jsonl(expect));
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace mlcif

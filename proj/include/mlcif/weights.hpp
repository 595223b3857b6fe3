#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mlcif/family.hpp"
#include "mlcif/report.hpp"

namespace mlcif {

/// Relative margin required of every strict inequality we verify, and the
/// tolerance for argmax ties in the optimizer.
inline constexpr double kStrictMargin = 1e-9;
/// Passes with a smaller relative margin than this are flagged as warnings.
inline constexpr double kNearMarginWarn = 1e-6;

struct WeightStep {
    int from;      // first element this value applies to
    double value;  // >= 0
};

/// Nonnegative per-element weights on [n], stored dense or as piecewise
/// constant steps. Immutable once built; at(j) is O(1) either way.
class WeightFn {
  public:
    static WeightFn from_dense(std::vector<double> values);
    static WeightFn from_steps(int n, std::vector<WeightStep> steps);

    int n() const { return n_; }
    double at(int j) const { return dense_[static_cast<std::size_t>(j - 1)]; }
    bool increasing() const { return increasing_; }
    const std::vector<double>& dense() const { return dense_; }
    /// Present only when built from steps; preserved for serialization.
    const std::optional<std::vector<WeightStep>>& steps() const { return steps_; }

  private:
    WeightFn() = default;
    int n_ = 0;
    std::vector<double> dense_;
    std::optional<std::vector<WeightStep>> steps_;
    bool increasing_ = false;
};

/// Product of element weights; zero as soon as one element weighs zero.
double weight_of_set(const KSet& f, const WeightFn& w);

/// Exact sum of weight_of_set over LC(b), by the O(nk) prefix-sum recurrence
/// D(i, t) = w(t) * sum_{s<t} D(i-1, s) for t <= b_i.
double downset_weight(const KSet& b, const WeightFn& w);

/// Weight of a boundary-stored family by inclusion-exclusion over boundary
/// subsets, using meet() for down-set intersections. Refused (ScaleError)
/// beyond 25 boundary sets; use family_weight_direct at enumerable scale.
double family_weight(const Family& f, const WeightFn& w);

/// Direct member summation; the oracle route (scale-limited by members()).
double family_weight_direct(const Family& f, const WeightFn& w);

/// The step weight w_i: 0 below i, 1 from i on. Increasing; non-trivial for
/// i <= k.
WeightFn make_omega_i(int i, int n);

/// True iff every k-uniform MLCIF on [n] weighs zero, decided by evaluating
/// the k canonical families (sound and complete: every member of every MLCIF
/// lies in some canonical family).
bool is_trivial_weight(const WeightFn& w, int k);

struct OptimizeResult {
    std::vector<std::size_t> argmax;  // indices into `table`, within tolerance of max
    std::vector<std::pair<Family, double>> table;  // extended family and its weight, per M_k entry
    double max_weight = 0.0;
    bool unique = false;       // singleton argmax with margin above tolerance
    std::string warning;       // set when w is not increasing
};

/// Evaluates every MLCIF on [n] (via extend_fast over M_k) under w and
/// returns the argmax set. DomainError citing Corollary 2.4 on trivial w.
/// Pass a precomputed M_k to skip enumeration.
OptimizeResult optimize(int k, int n, const WeightFn& w, const std::vector<Family>* mk = nullptr);

/// Seeded random increasing weight: n increments, each 0 with probability 1/4
/// and 1 otherwise, prefix-summed; resampled until non-trivial. Integer
/// staircases keep family weights exactly representable at desk scales.
WeightFn sample_increasing_weight(int n, int k, std::uint64_t seed);

/// Verifies, for `samples` seeded random increasing non-trivial weights, the
/// strict inequalities bounding every non-canonical MLCIF by canonical
/// weights, that some canonical family always beats it, and that the optimizer
/// returns only canonical families; plus the uniquely-optimal step-weight
/// checks for each i in [k]. Requires n >= 3 k^3 C(2k,k) (ParameterError
/// printing the bound otherwise). Reports are merged deterministically by
/// (claim, sample index) regardless of thread count.
std::vector<VerificationReport> verify_increasing_theorems(int k, int n, int samples, std::uint64_t seed,
                                                           const std::vector<Family>* mk = nullptr,
                                                           int threads = 0);

/// Smallest legal n for the increasing-weight theorems: 3 k^3 C(2k,k).
long long theorem2_min_n(int k);

}  // namespace mlcif

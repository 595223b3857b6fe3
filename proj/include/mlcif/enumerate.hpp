#pragma once

#include <cstdint>
#include <vector>

#include "mlcif/family.hpp"
#include "mlcif/universe.hpp"

namespace mlcif {

/// The complementary-pair structure of C([2k], k) plus the propagation engine
/// used by the search: membership decisions close downward, exclusions close
/// upward, and each pair contributes exactly one member.
class PairSystem {
  public:
    /// k > 5 is refused unless allow_large (search cost grows doubly
    /// exponentially).
    explicit PairSystem(int k, bool allow_large = false);

    struct Pair {
        std::size_t rep;    // smaller element-sum side (lexicographic tie-break)
        std::size_t other;  // its complement
    };

    int k() const { return k_; }
    const SubsetUniverse& universe() const { return uni_; }
    const std::vector<Pair>& pairs() const { return pairs_; }

    struct Assignment {
        DynBitset in, out;

        bool decided(std::size_t s) const { return in.test(s) || out.test(s); }
    };

    Assignment empty_assignment() const;

    /// Adds the set (resp. its exclusion) and propagates to the closure.
    /// Returns false when a contradiction (some set both in and out) arises.
    bool mark_in(Assignment& a, std::size_t s) const;
    bool mark_out(Assignment& a, std::size_t s) const;

    /// Fixed point of the propagation rules with every LC-comparable
    /// complementary pair resolved toward its smaller side; this is the shared
    /// prefix of every MLCIF on [2k]. IntegrityError on contradiction.
    Assignment forced_assignments() const;

    /// Pairs undecided by forced_assignments(), in branch order (decreasing
    /// distance of the representative's element sum from k(2k+1)/2).
    std::vector<std::size_t> free_pairs() const;

    /// Builds the family determined by a complete assignment.
    Family family_from(const Assignment& a) const;

  private:
    int k_;
    SubsetUniverse uni_;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> pair_of_;  // set index -> pair index
};

struct EnumOptions {
    int threads = 0;          // 0 = MLCIF_THREADS / hardware
    bool allow_large = false; // required for k > 5
};

/// Every MLCIF on [2k], in canonical (lexicographic-serialization) order,
/// independent of thread count. Parallel kernel over DFS subtrees.
std::vector<Family> enumerate_mlcifs(int k, const EnumOptions& opts = {});

/// Serial reference enumeration (plain DFS); kept for testing and benchmarks.
std::vector<Family> enumerate_mlcifs_serial(int k, bool allow_large = false);

/// Independent oracle: filters all one-per-pair selections. Refused for k > 3.
std::vector<Family> brute_force_mlcifs(int k);

/// Deterministic maximal completion on [2k]: repeatedly adds the
/// lexicographically least LC-minimal addable set. Seed must be
/// left-compressed and intersecting (DomainError otherwise).
Family complete(const Family& seed);

/// The M_k -> M_{k+1} map: adjoin 2k+2 to every member, close downward,
/// complete. Distinct inputs yield distinct outputs.
Family lift(const Family& f);

/// The complementary pairs of C([2k], k) whose two sides both sum to
/// k(2k+1)/2. Requires even k.
std::vector<std::pair<KSet, KSet>> pk_pairs(int k);

/// Lower-bound construction: one choice per balanced pair, closed downward
/// (left-compressed and intersecting by construction; IntegrityError if not),
/// then completed to an MLCIF.
Family pk_selection_family(const std::vector<KSet>& selection, int k);

}  // namespace mlcif

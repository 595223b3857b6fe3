#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mlcif/core.hpp"

namespace mlcif {

/// A left-compressed family, canonically stored as its boundary antichain
/// (the LC-maximal members). Members are the union of the boundary down-sets
/// and are materialized lazily; the cache is written once and shared by
/// copies, so Family behaves as an immutable value.
class Family {
  public:
    /// Validates that the given sets form an antichain with uniform (k, n),
    /// n >= 2k, and stores them sorted lexicographically.
    static Family from_boundary(std::vector<KSet> boundary, GroundParams params);

    GroundParams params() const { return params_; }
    int k() const { return params_.k; }
    int n() const { return params_.n; }
    const std::vector<KSet>& boundary() const { return boundary_; }

    /// Membership test: dominated by some boundary set. O(|boundary| * k).
    bool contains(const KSet& f) const;

    /// All members, lexicographically sorted. Iterates C(n, k) candidates, so
    /// guarded: throws ScaleError when C(n, k) > 2'000'000.
    const std::vector<KSet>& members() const;

    std::size_t member_count() const { return members().size(); }

    /// Boundary-antichain equality (the canonical identity of a family).
    friend bool operator==(const Family& a, const Family& b) {
        return a.params_ == b.params_ && a.boundary_ == b.boundary_;
    }

  private:
    Family(GroundParams params, std::vector<KSet> boundary);

    struct MemberCache {
        std::once_flag once;
        std::vector<KSet> members;
    };

    GroundParams params_;
    std::vector<KSet> boundary_;
    std::shared_ptr<MemberCache> cache_;
};

/// Deterministic order on families: lexicographic over the sorted boundary.
bool family_less(const Family& a, const Family& b);

/// Canonical one-line serialization, e.g. {"k":2,"n":4,"boundary":[[1,4]]}.
/// This exact byte sequence is the identity used for output ordering,
/// deduplication and caching.
std::string canonical_jsonl(const Family& f);

/// Flags reported by check_family / check_members.
struct FamilyFlags {
    bool intersecting = false;
    bool left_compressed = false;
    bool maximal = false;

    bool all() const { return intersecting && left_compressed && maximal; }
};

/// Type of an MLCIF: the common index of its strong sets, or typeless.
struct TypeTag {
    std::optional<int> type;

    bool typeless() const { return !type.has_value(); }
    friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

/// Union of the LC down-sets of the given sets, returned with members
/// materialized. The boundary of the result is the maximal elements of the
/// input.
Family down_closure(const std::vector<KSet>& sets, GroundParams params);

/// LC-maximal elements of an explicit member list.
std::vector<KSet> boundary_of(const std::vector<KSet>& members);

/// Checks an arbitrary member list: pairwise intersecting, closed under
/// left-compression, and maximal among left-compressed intersecting families.
/// On n == 2k the intersecting flag is computed both pairwise and via the
/// no-member-has-its-complement rule; disagreement raises IntegrityError.
/// The maximality scan visits candidates minimal-first and short-circuits.
FamilyFlags check_members(const std::vector<KSet>& members, GroundParams params);

/// check_members on the family's materialized member set.
FamilyFlags check_family(const Family& f);

/// The i-th canonical family: boundary {Z_i}. Members satisfy
/// |F cap [2i-1]| >= i.
Family canonical_family(int i, GroundParams params);

/// Interval-count membership predicate of the i-th canonical family,
/// independent of lc_leq; kept as a cross-check route.
bool canonical_membership(const KSet& f, int i);

/// |F cap [2k+1, n]| == k - index_of(F). Throws DomainError when F has no
/// index.
bool is_strong(const KSet& f);

/// Definitional type computation: scans all members, collects indices of
/// strong ones. Validates the input is an MLCIF (DomainError otherwise) and
/// raises IntegrityError if two strong members disagree on the index.
TypeTag type_of(const Family& f);

/// Boundary-only type computation, usable at any n without materializing
/// members: a strong set of index i exists iff the forced pattern
/// {2, 4, ..., 2i-2, 2i-1} u [2k+1, 3k-i] is dominated by some boundary set.
/// Raises IntegrityError if two indices qualify. Trusts that f is an MLCIF.
TypeTag type_of_boundary(const Family& f);

}  // namespace mlcif

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlcif/errors.hpp"

namespace mlcif {

/// Uniformity k and ground-set size n. Constructing with k < 1 or n < k throws;
/// family-level code additionally calls require_family_scale() for n >= 2k.
struct GroundParams {
    int k = 0;
    int n = 0;

    GroundParams() = default;
    GroundParams(int k_, int n_);

    void require_family_scale() const;

    friend bool operator==(const GroundParams&, const GroundParams&) = default;
};

/// A k-element subset of [n], stored as its strictly increasing element
/// sequence (1-based, 32-bit). Immutable value; the bitmask view is a derived
/// accelerator available for n <= 128.
class KSet {
  public:
    KSet(std::vector<int> elements, int n);

    int k() const { return static_cast<int>(elems_.size()); }
    int n() const { return n_; }
    GroundParams params() const { return GroundParams(k(), n_); }

    const std::vector<int>& elements() const { return elems_; }
    /// 1-based position access: element(1) is the smallest element.
    int element(int i) const { return elems_[static_cast<std::size_t>(i - 1)]; }
    bool contains(int x) const;

    /// Occupancy bits (bit e-1 set iff e in the set). Requires n <= 128.
    std::array<std::uint64_t, 2> mask() const;

    friend bool operator==(const KSet&, const KSet&) = default;

  private:
    std::vector<int> elems_;
    int n_ = 0;
};

/// Strict lexicographic order on element sequences; the tie-break order used
/// everywhere a deterministic choice among sets is needed.
bool lex_less(const KSet& a, const KSet& b);

/// Left-compression order: g <=_LC f iff the i-th smallest element of g is
/// <= that of f, for every i. Throws ParameterError on mismatched (k, n).
bool lc_leq(const KSet& g, const KSet& f);

/// Same relation via the prefix-count form |g cap [t]| >= |f cap [t]| for all
/// t, evaluated on the bitmask view. Independent route kept for cross-checks;
/// requires n <= 128.
bool lc_leq_prefix(const KSet& g, const KSet& f);

/// [2k] \ f. Requires n == 2k. Antitone involution with respect to lc_leq.
KSet complement_in_2k(const KSet& f);

/// Componentwise minimum; the greatest lower bound in the LC order.
/// Satisfies LC(a) cap LC(b) = LC(meet(a, b)).
KSet meet(const KSet& a, const KSet& b);

/// Z_i = [i, 2i-1] union [n-k+i+1, n]; the unique boundary set of the i-th
/// canonical family. Requires i in [k] and n >= 2k.
KSet z_set(int i, GroundParams params);

/// Smallest i in [k] with f <=_LC Z_i, or nullopt when no such i exists.
/// Equivalent test: element(i) <= 2i-1 for some i.
std::optional<int> index_of(const KSet& f);

/// Sum of the elements. Strictly monotone along the LC order.
long long element_sum(const KSet& f);

/// True iff the down-sets LC(a) and LC(b) contain two disjoint sets on any
/// ground of size >= 2k. Decided by merging the two sorted element sequences
/// into m_1 <= ... <= m_2k and testing m_t >= t for all t (a Hall-type
/// transversal condition). Valid at any n, independent of enumeration.
bool downsets_admit_disjoint_pair(const KSet& a, const KSet& b);

/// "{1,4}" style rendering for messages and witnesses.
std::string to_string(const KSet& f);

}  // namespace mlcif

#pragma once

#include <vector>

#include "mlcif/family.hpp"

namespace mlcif {

/// The j values applicable to f: those j in [k] for which f has exactly k-j
/// elements strictly greater than k+j.
std::vector<int> valid_expansion_indices(const KSet& f);

/// Keeps the j smallest elements of f and replaces the rest with the top
/// block [n-k+j+1, n]. Requires f to have exactly k-j elements strictly
/// greater than k+j (DomainError listing the valid j otherwise).
KSet expand_set(const KSet& f, int j, int n);

/// Ground-truth extension of an MLCIF from [2k] to [n]: the fixed point of
/// adding, minimal-first, any set whose down-closure keeps the family
/// intersecting. Scale-guarded (C(n, k) must stay modest).
Family extend_greedy(const Family& f, int n);

/// extend_greedy with an explicit candidate scan order (a permutation of the
/// colex ranks of C([n], k)); the fixed point must not depend on it. Kept for
/// the order-independence checks.
Family extend_greedy_with_order(const Family& f, int n, const std::vector<std::size_t>& order);

/// Scalable extension: boundary candidates are all expansions of the boundary
/// sets of f; the LC-maximal of those form the new boundary. Always runs a
/// verification pass (intersecting, contains f); IntegrityError with a
/// counterexample on failure. Works at n far beyond enumeration range.
Family extend_fast(const Family& f, int n);

/// Direct enumeration of all maximal left-compressed intersecting families on
/// [n] (no use of the [2k] correspondence); the independent oracle for the
/// extension bijection. Scale-guarded.
long long count_mlcifs_on_n(int k, int n);

}  // namespace mlcif

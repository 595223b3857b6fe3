#pragma once

namespace mlcif::claims {

// Anchor strings naming the verified claims. Every command that checks one of
// these prints the anchor alongside pass/fail, and reports carry it as the
// claim id.

inline constexpr const char* kMkCount = "M_k enumeration: \"the number of distinct k-uniform MLCIFs on [n] is precisely |M_k|\"";
inline constexpr const char* kOeisCrossCheck = "OEIS cross-check: \"entered these as entry A300099\"";
inline constexpr const char* kOnePerPair = "Maximal families: \"includes precisely one set from each\"";
inline constexpr const char* kMaximality = "MLCIF: \"maximal with respect to inclusion\"";
inline constexpr const char* kBoundaryDecomposition = "Eq. (1): \"as the boundary sets\"";
inline constexpr const char* kProp23a = "Proposition 2.3(a): \"the smallest i such that\"";
inline constexpr const char* kProp23b = "Proposition 2.3(b): \"at least two boundary sets\"";
inline constexpr const char* kZUnique = "Z_i: \"the unique boundary set of the canonical\"";
inline constexpr const char* kCor24 = "Corollary 2.4: \"the canonical family <i> has\"";
inline constexpr const char* kLemma25 = "Lemma 2.5: \"greatest index among all sets\"";
inline constexpr const char* kCor26 = "Corollary 2.6: \"are strong sets in\"";
inline constexpr const char* kStrongExample = "Section 2.2 example: \"strong set of index 3\"";
inline constexpr const char* kTypelessExample = "Section 2.2 example: \"MLCIF with no strong set\"";
inline constexpr const char* kLemma21 = "Lemma 2.1: \"there is a unique MLCIF\"";
inline constexpr const char* kLemma21Bijection = "Lemma 2.1: \"G = G(F) for a unique MLCIF\"";
inline constexpr const char* kLemma22 = "Lemma 2.2: \"elements strictly greater than k+j\"";
inline constexpr const char* kTheorem31Typeless = "Theorem 3.1: \"If F is typeless, then\"";
inline constexpr const char* kTheorem31Typed = "Theorem 3.1: \"Otherwise,\"";
inline constexpr const char* kCor32 = "Corollary 3.2: \"which is not canonical, then\"";
inline constexpr const char* kTheorem2 = "Theorem 2: \"F is a canonical MLCIF\"";
inline constexpr const char* kLemma33 = "Lemma 3.3: \"uniquely optimal for the increasing\"";
inline constexpr const char* kLemma41 = "Lemma 4.1: \"are all distinct, and so\"";
inline constexpr const char* kLemma42 = "Lemma 4.2: \"one set from each pair\"";
inline constexpr const char* kTheorem43 = "Theorem 4.3: \"For each integer k >= 2 we have\"";
inline constexpr const char* kAntichainRefinement = "Antichain refinement: \"largest antichain in\"";
inline constexpr const char* kLemma44 = "Lemma 4.4: \"is an order isomorphism\"";
inline constexpr const char* kTheorem45 = "Theorem 4.5: \"rank-symmetric, rank-unimodal and Sperner\"";
inline constexpr const char* kCor46 = "Corollary 4.6: \"has size at most\"";
inline constexpr const char* kTheorem47 = "Theorem 4.7: \"For even k we have\"";
inline constexpr const char* kConjecture48 = "Conjecture 4.8: \"be the graph on\"";
inline constexpr const char* kYoungListing = "L(2,3): \"{00,01,02,03,11,12,13,22,23,33}\"";

}  // namespace mlcif::claims

#include "mlcif/core.hpp"

#include <algorithm>
#include <sstream>

namespace mlcif {

GroundParams::GroundParams(int k_, int n_) : k(k_), n(n_) {
    if (k < 1) throw ParameterError("uniformity k must be >= 1, got " + std::to_string(k));
    if (n < k) throw ParameterError("ground size n must be >= k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void GroundParams::require_family_scale() const {
    if (n < 2 * k)
        throw ParameterError("family-level operations require n >= 2k (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ")");
}

KSet::KSet(std::vector<int> elements, int n) : elems_(std::move(elements)), n_(n) {
    if (elems_.empty()) throw ParameterError("KSet must have at least one element");
    int prev = 0;
    for (int x : elems_) {
        if (x <= prev) throw ParameterError("KSet elements must be strictly increasing and >= 1");
        prev = x;
    }
    if (prev > n_) throw ParameterError("KSet element " + std::to_string(prev) + " exceeds ground size " + std::to_string(n_));
}

bool KSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::array<std::uint64_t, 2> KSet::mask() const {
    if (n_ > 128) throw ParameterError("mask view requires n <= 128, got n=" + std::to_string(n_));
    std::array<std::uint64_t, 2> m{0, 0};
    for (int x : elems_) {
        const int b = x - 1;
        m[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63);
    }
    return m;
}

bool lex_less(const KSet& a, const KSet& b) {
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
}

namespace {

void require_same_params(const KSet& a, const KSet& b, const char* op) {
    if (a.k() != b.k() || a.n() != b.n())
        throw ParameterError(std::string(op) + ": operands must share (k, n); got (" + std::to_string(a.k()) + "," +
                             std::to_string(a.n()) + ") vs (" + std::to_string(b.k()) + "," + std::to_string(b.n()) + ")");
}

}  // namespace

bool lc_leq(const KSet& g, const KSet& f) {
    require_same_params(g, f, "lc_leq");
    const auto& ge = g.elements();
    const auto& fe = f.elements();
    for (std::size_t i = 0; i < ge.size(); ++i)
        if (ge[i] > fe[i]) return false;
    return true;
}

bool lc_leq_prefix(const KSet& g, const KSet& f) {
    require_same_params(g, f, "lc_leq_prefix");
    const auto gm = g.mask();
    const auto fm = f.mask();
    int gcount = 0, fcount = 0;
    for (int t = 0; t < g.n(); ++t) {
        gcount += static_cast<int>((gm[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1);
        fcount += static_cast<int>((fm[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1);
        if (gcount < fcount) return false;
    }
    return true;
}

KSet complement_in_2k(const KSet& f) {
    if (f.n() != 2 * f.k())
        throw ParameterError("complement_in_2k requires n == 2k, got k=" + std::to_string(f.k()) +
                             " n=" + std::to_string(f.n()));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(f.k()));
    for (int x = 1; x <= f.n(); ++x)
        if (!f.contains(x)) out.push_back(x);
    return KSet(std::move(out), f.n());
}

KSet meet(const KSet& a, const KSet& b) {
    require_same_params(a, b, "meet");
    std::vector<int> out(a.elements().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a.elements()[i], b.elements()[i]);
    return KSet(std::move(out), a.n());
}

KSet z_set(int i, GroundParams params) {
    params.require_family_scale();
    if (i < 1 || i > params.k)
        throw ParameterError("z_set index must be in [1, k]; got i=" + std::to_string(i) + " k=" + std::to_string(params.k));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(params.k));
    for (int x = i; x <= 2 * i - 1; ++x) out.push_back(x);
    for (int x = params.n - params.k + i + 1; x <= params.n; ++x) out.push_back(x);
    return KSet(std::move(out), params.n);
}

std::optional<int> index_of(const KSet& f) {
    f.params().require_family_scale();
    // f <=_LC Z_i collapses to element(i) <= 2i-1: the top block of Z_i
    // dominates any tail, and the first i coordinates reduce to the i-th.
    for (int i = 1; i <= f.k(); ++i)
        if (f.element(i) <= 2 * i - 1) return i;
    return std::nullopt;
}

long long element_sum(const KSet& f) {
    long long s = 0;
    for (int x : f.elements()) s += x;
    return s;
}

bool downsets_admit_disjoint_pair(const KSet& a, const KSet& b) {
    require_same_params(a, b, "downsets_admit_disjoint_pair");
    if (a.n() < 2 * a.k()) return false;  // not enough room for 2k distinct elements
    const auto& ae = a.elements();
    const auto& be = b.elements();
    std::size_t i = 0, j = 0;
    int t = 0;
    while (i < ae.size() || j < be.size()) {
        int m;
        if (j >= be.size() || (i < ae.size() && ae[i] <= be[j]))
            m = ae[i++];
        else
            m = be[j++];
        ++t;
        if (m < t) return false;
    }
    return true;
}

std::string to_string(const KSet& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.elements().size(); ++i) {
        if (i) os << ',';
        os << f.elements()[i];
    }
    os << '}';
    return os.str();
}

}  // namespace mlcif

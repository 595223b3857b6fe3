#include "mlcif/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mlcif/threads.hpp"

namespace mlcif {

PairSystem::PairSystem(int k, bool allow_large) : k_(k), uni_(k, 2 * k, 1'000'000) {
    if (k > 5 && !allow_large)
        throw ScaleError("aborted: enumeration for k=" + std::to_string(k) +
                         " exceeds the default ceiling (k <= 5); pass the large-k override to proceed");
    const std::size_t N = uni_.size();
    pair_of_.assign(N, static_cast<std::size_t>(-1));
    for (std::size_t s = 0; s < N; ++s) {
        const std::size_t c = uni_.complement_index(s);
        if (pair_of_[s] != static_cast<std::size_t>(-1)) continue;
        std::size_t rep = s, other = c;
        if (uni_.sum(c) < uni_.sum(s) ||
            (uni_.sum(c) == uni_.sum(s) && uni_.elems(c) < uni_.elems(s)))
            std::swap(rep, other);
        pair_of_[s] = pair_of_[c] = pairs_.size();
        pairs_.push_back(Pair{rep, other});
    }
}

PairSystem::Assignment PairSystem::empty_assignment() const {
    return Assignment{uni_.empty_bitset(), uni_.empty_bitset()};
}

namespace {

enum class Polarity : std::uint8_t { In, Out };

}  // namespace

bool PairSystem::mark_in(Assignment& a, std::size_t s) const {
    std::vector<std::pair<std::size_t, Polarity>> stack{{s, Polarity::In}};
    while (!stack.empty()) {
        const auto [t, pol] = stack.back();
        stack.pop_back();
        if (pol == Polarity::In) {
            if (a.out.test(t)) return false;
            if (a.in.test(t)) continue;
            a.in.set(t);
            stack.emplace_back(uni_.complement_index(t), Polarity::Out);
            uni_.down(t).for_each_and_not(a.in, [&](std::size_t u) { stack.emplace_back(u, Polarity::In); });
        } else {
            if (a.in.test(t)) return false;
            if (a.out.test(t)) continue;
            a.out.set(t);
            stack.emplace_back(uni_.complement_index(t), Polarity::In);
            uni_.up(t).for_each_and_not(a.out, [&](std::size_t u) { stack.emplace_back(u, Polarity::Out); });
        }
    }
    return true;
}

bool PairSystem::mark_out(Assignment& a, std::size_t s) const {
    // out(s) is equivalent to in(complement): route through mark_in
    return mark_in(a, uni_.complement_index(s));
}

PairSystem::Assignment PairSystem::forced_assignments() const {
    Assignment a = empty_assignment();
    for (const Pair& p : pairs_) {
        if (uni_.down(p.other).test(p.rep)) {  // rep <=_LC other
            if (!mark_in(a, p.rep))
                throw IntegrityError("forced assignments contradict each other at pair rep=" +
                                     to_string(uni_.kset(p.rep)));
        }
    }
    return a;
}

std::vector<std::size_t> PairSystem::free_pairs() const {
    const Assignment base = forced_assignments();
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (!base.decided(pairs_[i].rep)) order.push_back(i);
    const long long target = static_cast<long long>(k_) * (2 * k_ + 1);  // 2 * balanced sum
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const long long dx = std::llabs(2 * uni_.sum(pairs_[x].rep) - target);
        const long long dy = std::llabs(2 * uni_.sum(pairs_[y].rep) - target);
        return dx > dy;
    });
    return order;
}

Family PairSystem::family_from(const Assignment& a) const {
    if (a.in.count() != uni_.size() / 2)
        throw IntegrityError("complete assignment must contain exactly one set per pair");
    std::vector<KSet> boundary;
    for (std::size_t s : uni_.maximal_elements(a.in)) boundary.push_back(uni_.kset(s));
    return Family::from_boundary(std::move(boundary), GroundParams(k_, 2 * k_));
}

namespace {

void dfs_enumerate(const PairSystem& ps, const std::vector<std::size_t>& order, std::size_t pos,
                   PairSystem::Assignment& a, std::vector<Family>& sink) {
    while (pos < order.size() && a.decided(ps.pairs()[order[pos]].rep)) ++pos;
    if (pos == order.size()) {
        sink.push_back(ps.family_from(a));
        return;
    }
    const auto& p = ps.pairs()[order[pos]];
    for (const std::size_t choice : {p.rep, p.other}) {
        PairSystem::Assignment child = a;
        if (ps.mark_in(child, choice)) dfs_enumerate(ps, order, pos + 1, child, sink);
    }
}

void sort_canonically(std::vector<Family>& fams) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(fams.size());
    for (std::size_t i = 0; i < fams.size(); ++i) keys.emplace_back(canonical_jsonl(fams[i]), i);
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i].first == keys[i - 1].first)
            throw IntegrityError("duplicate family in enumeration output: " + keys[i].first);
    std::vector<Family> out;
    out.reserve(fams.size());
    for (const auto& [key, idx] : keys) out.push_back(std::move(fams[idx]));
    fams = std::move(out);
}

}  // namespace

std::vector<Family> enumerate_mlcifs_serial(int k, bool allow_large) {
    PairSystem ps(k, allow_large);
    const auto order = ps.free_pairs();
    auto root = ps.forced_assignments();
    std::vector<Family> out;
    dfs_enumerate(ps, order, 0, root, out);
    sort_canonically(out);
    return out;
}

std::vector<Family> enumerate_mlcifs(int k, const EnumOptions& opts) {
    const int threads = resolve_threads(opts.threads);
    PairSystem ps(k, opts.allow_large);
    const auto order = ps.free_pairs();

    // Expand a deterministic frontier of independent DFS subtrees, then let
    // workers drain them; per-subtree sinks are concatenated in frontier
    // order, so the output cannot depend on the schedule.
    struct Node {
        PairSystem::Assignment a;
        std::size_t pos;
    };
    std::deque<Node> frontier;
    frontier.push_back(Node{ps.forced_assignments(), 0});
    const std::size_t want = static_cast<std::size_t>(threads) * 16;
    while (frontier.size() < want) {
        // find the first expandable node, preserving order
        std::size_t idx = frontier.size();
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            std::size_t pos = frontier[i].pos;
            while (pos < order.size() && frontier[i].a.decided(ps.pairs()[order[pos]].rep)) ++pos;
            frontier[i].pos = pos;
            if (pos < order.size()) {
                idx = i;
                break;
            }
        }
        if (idx == frontier.size()) break;  // every node is a complete assignment
        Node node = std::move(frontier[idx]);
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(idx));
        const auto& p = ps.pairs()[order[node.pos]];
        std::vector<Node> children;
        for (const std::size_t choice : {p.rep, p.other}) {
            Node child{node.a, node.pos + 1};
            if (ps.mark_in(child.a, choice)) children.push_back(std::move(child));
        }
        // children are inserted where the parent was, keeping a stable order
        frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(idx),
                        std::make_move_iterator(children.begin()), std::make_move_iterator(children.end()));
    }

    std::vector<Node> work(std::make_move_iterator(frontier.begin()), std::make_move_iterator(frontier.end()));
    std::vector<std::vector<Family>> sinks(work.size());
    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (first_error) continue;
        try {
            dfs_enumerate(ps, order, work[i].pos, work[i].a, sinks[i]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(mlcif_enum_error)
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<Family> out;
    for (auto& sink : sinks)
        for (auto& f : sink) out.push_back(std::move(f));
    sort_canonically(out);
    return out;
}

std::vector<Family> brute_force_mlcifs(int k) {
    if (k > 3)
        throw ScaleError("brute_force_mlcifs is an oracle for k <= 3 only (got k=" + std::to_string(k) + ")");
    PairSystem ps(k);
    const auto& uni = ps.universe();
    const auto& pairs = ps.pairs();
    std::vector<Family> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        DynBitset in = uni.empty_bitset();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            in.set((mask >> i) & 1 ? pairs[i].other : pairs[i].rep);
        bool ok = true;
        in.for_each([&](std::size_t s) {
            if (!ok) return;
            if (!uni.down(s).is_subset_of(in)) ok = false;            // left-compressed
            else if (in.test(uni.complement_index(s))) ok = false;    // intersecting
        });
        if (!ok) continue;
        std::vector<KSet> boundary;
        for (std::size_t s : uni.maximal_elements(in)) boundary.push_back(uni.kset(s));
        out.push_back(Family::from_boundary(std::move(boundary), GroundParams(k, 2 * k)));
    }
    sort_canonically(out);
    return out;
}

Family complete(const Family& seed) {
    if (seed.n() != 2 * seed.k())
        throw ParameterError("complete operates on [2k] (got n=" + std::to_string(seed.n()) + ")");
    const FamilyFlags flags = check_members(seed.members(), seed.params());
    if (!flags.left_compressed || !flags.intersecting)
        throw DomainError("complete: seed must be left-compressed and intersecting");

    SubsetUniverse uni(seed.k(), seed.n(), 1'000'000);
    DynBitset in = uni.empty_bitset();
    for (const KSet& f : seed.members()) in.set(uni.rank(f));

    while (true) {
        // minimal addable candidates have their whole strict down-set present
        std::size_t best = uni.size();
        for (std::size_t g = 0; g < uni.size(); ++g) {
            if (in.test(g)) continue;
            DynBitset strictly_below = uni.down(g);
            strictly_below.reset(g);
            if (!strictly_below.is_subset_of(in)) continue;
            if (uni.disjoint(g).intersects(in)) continue;  // would break intersecting
            if (best == uni.size() || uni.elems(g) < uni.elems(best)) best = g;
        }
        if (best == uni.size()) break;
        in.set(best);
    }

    std::vector<KSet> boundary;
    for (std::size_t s : uni.maximal_elements(in)) boundary.push_back(uni.kset(s));
    return Family::from_boundary(std::move(boundary), seed.params());
}

Family lift(const Family& f) {
    if (f.n() != 2 * f.k()) throw ParameterError("lift expects a family on [2k]");
    const int k2 = f.k() + 1;
    SubsetUniverse uni(k2, 2 * k2, 1'000'000);
    DynBitset in = uni.empty_bitset();
    for (const KSet& m : f.members()) {
        std::vector<int> e = m.elements();
        e.push_back(2 * k2);  // adjoin 2k+2
        in |= uni.down(uni.rank(e));
    }
    std::vector<KSet> boundary;
    for (std::size_t s : uni.maximal_elements(in)) boundary.push_back(uni.kset(s));
    return complete(Family::from_boundary(std::move(boundary), GroundParams(k2, 2 * k2)));
}

std::vector<std::pair<KSet, KSet>> pk_pairs(int k) {
    if (k < 2 || k % 2 != 0) throw DomainError("pk_pairs requires even k >= 2, got " + std::to_string(k));
    SubsetUniverse uni(k, 2 * k, 1'000'000);
    const long long target = static_cast<long long>(k) * (2 * k + 1) / 2;
    std::vector<std::pair<KSet, KSet>> out;
    for (std::size_t s = 0; s < uni.size(); ++s) {
        if (uni.sum(s) != target) continue;
        const std::size_t c = uni.complement_index(s);
        if (uni.elems(s) < uni.elems(c)) out.emplace_back(uni.kset(s), uni.kset(c));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

Family pk_selection_family(const std::vector<KSet>& selection, int k) {
    const auto pairs = pk_pairs(k);
    if (selection.size() != pairs.size())
        throw DomainError("selection must pick exactly one set per balanced pair (expected " +
                          std::to_string(pairs.size()) + ", got " + std::to_string(selection.size()) + ")");
    std::vector<KSet> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const bool first = selection[i] == pairs[i].first;
        const bool second = selection[i] == pairs[i].second;
        if (!first && !second)
            throw DomainError("selection entry " + to_string(selection[i]) + " is not a side of balanced pair " +
                              std::to_string(i));
        chosen.push_back(selection[i]);
    }

    const GroundParams params(k, 2 * k);
    Family closed = down_closure(chosen, params);
    const FamilyFlags flags = check_members(closed.members(), params);
    if (!flags.left_compressed || !flags.intersecting)
        throw IntegrityError("balanced-pair down-closure failed left-compressed/intersecting check");
    return complete(closed);
}

}  // namespace mlcif

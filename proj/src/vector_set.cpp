#include "svmc/vector_set.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <optional>

#include "sv_detail.hpp"

namespace svmc {

SymbolicVectorSet make_canonical_set(std::size_t dim, std::vector<SymbolicVector> members) {
    SymbolicVectorSet out(dim, std::move(members));
    out.known_canonical_ = true;
    return out;
}

namespace {

std::atomic<std::size_t> g_union_step_limit{2'000'000};

void require_same_dim(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
}

const Vector& lower_of(const SymbolicVector& sv) { return sv.include().front(); }

// Both canonical and nonempty.
bool disjoint(const SymbolicVector& x, const SymbolicVector& y) {
    Vector qmax = join(lower_of(x), lower_of(y));
    auto below = [&](const Vector& q) { return leq(q, qmax); };
    return std::any_of(x.exclude().begin(), x.exclude().end(), below) ||
           std::any_of(y.exclude().begin(), y.exclude().end(), below);
}

// Canonical nonempty pieces of x minus every member of ys (members canonical).
std::vector<SymbolicVector> subtract_all(const SymbolicVector& x, const std::vector<SymbolicVector>& ys) {
    std::vector<SymbolicVector> pieces;
    if (!is_empty(x)) pieces.push_back(x);
    for (const SymbolicVector& y : ys) {
        if (pieces.empty()) break;
        if (is_sentinel(y)) continue;
        std::vector<SymbolicVector> next;
        for (const SymbolicVector& p : pieces) {
            if (disjoint(p, y)) {
                next.push_back(p);
                continue;
            }
            for (SymbolicVector& q : detail::subtract_pieces_unchecked(p, y)) next.push_back(std::move(q));
        }
        pieces = std::move(next);
    }
    return pieces;
}

// Inserts the canonical members of `work` into `done`, which must be a canonical
// member list. Shareable pairs are resolved by moving the shared portion of the
// lex-larger member into the maximal extension of the lex-smaller one.
// With a finite `patience`, gives up after that many steps and returns nullopt;
// `done` and `work` then still cover exactly the union.
std::optional<std::vector<SymbolicVector>> union_worklist(std::vector<SymbolicVector>& done,
                                                          std::deque<SymbolicVector>& work, std::size_t& steps,
                                                          std::size_t patience) {
    const std::size_t limit = g_union_step_limit.load(std::memory_order_relaxed);
    const std::size_t stop = steps + patience;
    while (!work.empty()) {
        if (steps == stop) return std::nullopt;
        if (++steps > limit)
            throw UnionLimitExceeded("canonical union exceeded " + std::to_string(limit) + " steps");
        SymbolicVector x = std::move(work.front());
        work.pop_front();
        if (is_sentinel(x)) continue;
        std::size_t best = done.size();
        bool duplicate = false;
        for (std::size_t i = 0; i < done.size(); ++i) {
            if (done[i] == x) {
                duplicate = true;
                break;
            }
            if (detail::shareable_unchecked(x, done[i]) && (best == done.size() || done[i] < done[best])) best = i;
        }
        if (duplicate) continue;
        if (best == done.size()) {
            done.push_back(std::move(x));
            continue;
        }
        SymbolicVector partner = std::move(done[best]);
        done[best] = std::move(done.back());
        done.pop_back();
        const bool x_first = lower_of(x) <= lower_of(partner);
        const SymbolicVector& s = x_first ? x : partner;
        const SymbolicVector& l = x_first ? partner : x;
        SymbolicVector grown = extension(s, l);
        std::vector<SymbolicVector> rest = detail::subtract_pieces_unchecked(l, intersect(l, grown));
        for (auto it = rest.rbegin(); it != rest.rend(); ++it) work.push_front(std::move(*it));
        work.push_front(std::move(grown));
    }
    std::sort(done.begin(), done.end());
    return std::move(done);
}

// The canonical members of the union of `rest` (canonical, possibly overlapping),
// lex-least first: the least point q still uncovered is the lower bound of the
// next member, and its holes are the minimal points above q outside the union.
// Same result as the worklist. Each round recomputes a complement, so it is
// slow on large unions, but it does not churn when pieces keep fragmenting.
std::vector<SymbolicVector> greedy_union(std::vector<SymbolicVector> rest, std::size_t steps) {
    const std::size_t limit = g_union_step_limit.load(std::memory_order_relaxed);
    std::vector<SymbolicVector> out;
    std::erase_if(rest, [](const SymbolicVector& p) { return is_sentinel(p); });
    while (!rest.empty()) {
        steps += rest.size();
        if (steps > limit) throw UnionLimitExceeded("canonical union exceeded " + std::to_string(limit) + " steps");
        const Vector q = lower_of(*std::min_element(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
            return lower_of(a) < lower_of(b);
        }));
        std::vector<Vector> holes;
        for (const SymbolicVector& p : subtract_all(SymbolicVector::upset(q), rest)) holes.push_back(lower_of(p));
        SymbolicVector m(q, minimal_elements(std::move(holes)));
        std::vector<SymbolicVector> next;
        for (const SymbolicVector& r : rest)
            for (SymbolicVector& p : subtract_all(r, {m})) next.push_back(std::move(p));
        rest = std::move(next);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Worklist first; when it churns far beyond the input size, finish greedily.
std::vector<SymbolicVector> union_members(std::vector<SymbolicVector> done, std::deque<SymbolicVector> work) {
    std::size_t steps = 0;
    const std::size_t patience = 64 * (done.size() + work.size()) + 4096;
    if (auto out = union_worklist(done, work, steps, patience)) return std::move(*out);
    done.insert(done.end(), std::make_move_iterator(work.begin()), std::make_move_iterator(work.end()));
    return greedy_union(std::move(done), steps);
}

SymbolicVectorSet fold(std::size_t dim, std::vector<SymbolicVector> pieces) {
    std::deque<SymbolicVector> work;
    for (SymbolicVector& p : pieces)
        if (!is_sentinel(p)) work.push_back(std::move(p));
    return make_canonical_set(dim, union_members({}, std::move(work)));
}

std::vector<SymbolicVector> canonical_members(const SymbolicVectorSet& x) {
    std::vector<SymbolicVector> out;
    out.reserve(x.size());
    for (const SymbolicVector& sv : x) {
        SymbolicVector c = is_canonical(sv) ? sv : canonicalize(sv);
        if (!is_sentinel(c)) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

SymbolicVectorSet::SymbolicVectorSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("symbolic vector sets must have dimension >= 1");
}

SymbolicVectorSet::SymbolicVectorSet(std::size_t dim, std::vector<SymbolicVector> members)
    : dim_(dim), members_(std::move(members)) {
    if (dim == 0) throw std::invalid_argument("symbolic vector sets must have dimension >= 1");
    for (const SymbolicVector& sv : members_)
        if (sv.dim() != dim_) throw DimensionMismatch(dim_, sv.dim());
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SymbolicVectorSet SymbolicVectorSet::full(std::size_t dim) {
    return make_canonical_set(dim, {SymbolicVector::full(dim)});
}

std::string SymbolicVectorSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ", ";
        out += members_[i].to_string();
    }
    return out + '}';
}

bool contains(const SymbolicVectorSet& svs, const Vector& q) {
    if (q.dim() != svs.dim()) throw DimensionMismatch(svs.dim(), q.dim());
    return std::any_of(svs.begin(), svs.end(), [&](const SymbolicVector& sv) { return contains(sv, q); });
}

bool is_canonical(const SymbolicVectorSet& svs) {
    if (svs.known_canonical()) return true;
    const auto& ms = svs.members();
    for (const SymbolicVector& sv : ms)
        if (!is_canonical(sv) || is_sentinel(sv)) return false;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (detail::shareable_unchecked(ms[i], ms[j])) return false;
    return true;
}

void require_canonical(const SymbolicVectorSet& svs) {
    if (!is_canonical(svs)) throw NotCanonical("symbolic vector set is not canonical: " + svs.to_string());
}

SymbolicVectorSet raw_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    std::vector<SymbolicVector> ms = x.members();
    ms.insert(ms.end(), y.begin(), y.end());
    return SymbolicVectorSet(x.dim(), std::move(ms));
}

SymbolicVectorSet raw_intersect(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    std::vector<SymbolicVector> ms;
    for (const SymbolicVector& a : x)
        for (const SymbolicVector& b : y) ms.push_back(intersect(a, b));
    return SymbolicVectorSet(x.dim(), std::move(ms));
}

SymbolicVectorSet raw_subtract(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    std::vector<SymbolicVector> out;
    for (const SymbolicVector& a : x) {
        std::vector<SymbolicVector> pieces{a};
        for (const SymbolicVector& b : y) {
            std::vector<SymbolicVector> next;
            for (const SymbolicVector& p : pieces)
                for (SymbolicVector& q : subtract(p, b)) next.push_back(std::move(q));
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            pieces = std::move(next);
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return SymbolicVectorSet(x.dim(), std::move(out));
}

SymbolicVectorSet raw_negate(const SymbolicVectorSet& x) {
    return raw_subtract(SymbolicVectorSet(x.dim(), {SymbolicVector::full(x.dim())}), x);
}

SymbolicVectorSet rm_empty(const SymbolicVectorSet& x) {
    std::vector<SymbolicVector> ms;
    for (const SymbolicVector& sv : x)
        if (!is_empty(sv)) ms.push_back(sv);
    SymbolicVectorSet out(x.dim(), std::move(ms));
    return x.known_canonical() ? make_canonical_set(x.dim(), out.members()) : out;
}

SymbolicVectorSet canonicalize(const SymbolicVectorSet& x) {
    if (x.known_canonical()) return x;
    return fold(x.dim(), canonical_members(x));
}

SymbolicVectorSet canonical_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    const SymbolicVectorSet& big = x.size() >= y.size() ? x : y;
    const SymbolicVectorSet& small = x.size() >= y.size() ? y : x;
    return make_canonical_set(x.dim(),
                              union_members(big.members(), std::deque<SymbolicVector>(small.begin(), small.end())));
}

SymbolicVectorSet share_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    const SymbolicVectorSet& big = x.size() >= y.size() ? x : y;
    const SymbolicVectorSet& small = x.size() >= y.size() ? y : x;
    std::vector<SymbolicVector> done = big.members();
    std::deque<SymbolicVector> work(small.begin(), small.end());
    std::size_t steps = 0;
    return make_canonical_set(x.dim(), *union_worklist(done, work, steps, std::numeric_limits<std::size_t>::max()));
}

SymbolicVectorSet greedy_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    std::vector<SymbolicVector> pieces = x.members();
    pieces.insert(pieces.end(), y.begin(), y.end());
    return make_canonical_set(x.dim(), greedy_union(std::move(pieces), 0));
}

SymbolicVectorSet canonical_intersect(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    std::vector<SymbolicVector> pieces;
    for (const SymbolicVector& a : x)
        for (const SymbolicVector& b : y) {
            if (disjoint(a, b)) continue;
            pieces.push_back(intersect(a, b));
        }
    return fold(x.dim(), std::move(pieces));
}

SymbolicVectorSet canonical_subtract(const SymbolicVector& x, const SymbolicVector& y) {
    return fold(x.dim(), canonical_subtract_pieces(x, y));
}

SymbolicVectorSet canonical_subtract(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    std::vector<SymbolicVector> pieces;
    for (const SymbolicVector& a : x)
        for (SymbolicVector& p : subtract_all(a, y.members())) pieces.push_back(std::move(p));
    return fold(x.dim(), std::move(pieces));
}

SymbolicVectorSet canonical_negate(const SymbolicVectorSet& x) {
    return canonical_subtract(SymbolicVectorSet::full(x.dim()), x);
}

bool is_subset(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    std::vector<SymbolicVector> ys = canonical_members(y);
    for (const SymbolicVector& a : canonical_members(x))
        if (!subtract_all(a, ys).empty()) return false;
    return true;
}

bool equals(const SymbolicVectorSet& x, const SymbolicVectorSet& y) {
    require_same_dim(x, y);
    if (x.known_canonical() && y.known_canonical()) return x == y;
    return is_subset(x, y) && is_subset(y, x);
}

Count max_bound(const SymbolicVectorSet& svs) {
    Count m = 0;
    for (const SymbolicVector& sv : svs) m = std::max(m, max_bound(sv));
    return m;
}

std::vector<Vector> enumerate(const SymbolicVectorSet& svs, Count box) {
    if (box < max_bound(svs))
        throw std::invalid_argument("box " + std::to_string(box) + " is smaller than the largest bound " +
                                    std::to_string(max_bound(svs)));
    std::vector<Vector> out;
    for_each_in_box(svs.dim(), box, [&](Vector q) {
        if (contains(svs, q)) out.push_back(std::move(q));
    });
    return out;
}

std::vector<Vector> enumerate_within(const SymbolicVectorSet& svs, const Vector& box) {
    if (box.dim() != svs.dim()) throw DimensionMismatch(svs.dim(), box.dim());
    std::vector<Vector> out;
    std::vector<Count> cur(box.dim(), 0);
    while (true) {
        Vector q(cur);
        if (contains(svs, q)) out.push_back(std::move(q));
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == box[i - 1]) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

namespace {

BigCount box_volume(const std::vector<Count>& lower, const Vector& capacity) {
    BigCount v = 1;
    for (std::size_t p = 0; p < lower.size(); ++p) v *= BigCount(capacity[p] - lower[p] + 1);
    return v;
}

bool fits(const std::vector<Count>& lower, const Vector& capacity) {
    for (std::size_t p = 0; p < lower.size(); ++p)
        if (lower[p] > capacity[p]) return false;
    return true;
}

// Σ over subsets J of excl[from..] of (-1)^|J| · box(join(lower, J)).
BigCount inclusion_exclusion(const std::vector<Count>& lower, const std::vector<Vector>& excl, std::size_t from,
                             const Vector& capacity) {
    BigCount total = box_volume(lower, capacity);
    for (std::size_t j = from; j < excl.size(); ++j) {
        std::vector<Count> next = lower;
        for (std::size_t p = 0; p < next.size(); ++p) next[p] = std::max(next[p], excl[j][p]);
        if (!fits(next, capacity)) continue;
        total -= inclusion_exclusion(next, excl, j + 1, capacity);
    }
    return total;
}

}  // namespace

BigCount count_within(const SymbolicVectorSet& svs, const Vector& capacity) {
    require_canonical(svs);
    if (capacity.dim() != svs.dim()) throw DimensionMismatch(svs.dim(), capacity.dim());
    BigCount total = 0;
    for (const SymbolicVector& sv : svs) {
        const Vector& qa = lower_of(sv);
        std::vector<Count> lower(qa.values().begin(), qa.values().end());
        if (!fits(lower, capacity)) continue;
        total += inclusion_exclusion(lower, sv.exclude(), 0, capacity);
    }
    return total;
}

BigCount count_within(const SymbolicVectorSet& svs, Count capacity) {
    return count_within(svs, Vector(std::vector<Count>(svs.dim(), capacity)));
}

std::size_t union_step_limit() noexcept { return g_union_step_limit.load(); }

void set_union_step_limit(std::size_t limit) noexcept { g_union_step_limit.store(limit); }

}  // namespace svmc

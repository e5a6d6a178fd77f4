#include "svmc/symbolic_vector.hpp"

#include "sv_detail.hpp"

#include <algorithm>

namespace svmc {
namespace {

void check_members(std::size_t dim, const std::vector<Vector>& qs) {
    for (const Vector& q : qs)
        if (q.dim() != dim) throw DimensionMismatch(dim, q.dim());
}

void require_same_dim(const SymbolicVector& x, const SymbolicVector& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
}

std::string set_to_string(const std::vector<Vector>& qs) {
    std::string out = "{";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ',';
        out += '(' + qs[i].to_string() + ')';
    }
    return out + '}';
}

const Vector& lower_of(const SymbolicVector& sv) { return sv.include().front(); }

bool any_leq(const std::vector<Vector>& qs, const Vector& bound) {
    return std::any_of(qs.begin(), qs.end(), [&](const Vector& q) { return leq(q, bound); });
}

bool any_strictly_below(const std::vector<Vector>& qs, const Vector& bound) {
    return std::any_of(qs.begin(), qs.end(), [&](const Vector& q) { return q != bound && leq(q, bound); });
}

bool has(const std::vector<Vector>& qs, const Vector& q) { return std::binary_search(qs.begin(), qs.end(), q); }

// Canonical, nonempty operands: qa ≤ qc componentwise.
bool mergeable_ordered(const SymbolicVector& s, const SymbolicVector& l) {
    const Vector& qc = lower_of(l);
    for (const Vector& qb : s.exclude()) {
        if (leq(qc, qb)) continue;
        if (!any_leq(l.exclude(), join(qb, qc))) return false;
    }
    return true;
}

// Lex-smaller operand first.
std::pair<const SymbolicVector*, const SymbolicVector*> lex_ordered(const SymbolicVector& x,
                                                                    const SymbolicVector& y) {
    if (lower_of(x) <= lower_of(y)) return {&x, &y};
    return {&y, &x};
}

void require_nonempty_canonical(const SymbolicVector& sv) {
    require_canonical(sv);
    if (is_sentinel(sv)) throw std::invalid_argument("operation undefined on the empty symbolic vector");
}

}  // namespace

SymbolicVector::SymbolicVector(std::size_t dim, std::vector<Vector> include, std::vector<Vector> exclude)
    : include_(std::move(include)), exclude_(std::move(exclude)), dim_(dim) {
    if (dim == 0) throw std::invalid_argument("symbolic vectors must have dimension >= 1");
    check_members(dim_, include_);
    check_members(dim_, exclude_);
}

SymbolicVector::SymbolicVector(Vector lower, std::vector<Vector> exclude) : exclude_(std::move(exclude)) {
    dim_ = lower.dim();
    include_.push_back(std::move(lower));
    check_members(dim_, exclude_);
}

SymbolicVector SymbolicVector::full(std::size_t dim) { return SymbolicVector(Vector::zero(dim), {}); }

SymbolicVector SymbolicVector::sentinel(std::size_t dim) {
    return SymbolicVector(Vector::zero(dim), {Vector::zero(dim)});
}

SymbolicVector SymbolicVector::upset(Vector lower) { return SymbolicVector(std::move(lower), {}); }

Vector SymbolicVector::lower() const { return join(include_, dim_); }

std::string SymbolicVector::to_string() const {
    return '(' + set_to_string(include_) + ',' + set_to_string(exclude_) + ')';
}

bool contains(const SymbolicVector& sv, const Vector& q) {
    if (q.dim() != sv.dim()) throw DimensionMismatch(sv.dim(), q.dim());
    for (const Vector& qa : sv.include())
        if (!leq(qa, q)) return false;
    return !any_leq(sv.exclude(), q);
}

bool is_empty(const SymbolicVector& sv) { return any_leq(sv.exclude(), sv.lower()); }

bool is_sentinel(const SymbolicVector& sv) {
    return sv.include().size() == 1 && sv.include()[0].is_zero() && sv.exclude().size() == 1 &&
           sv.exclude()[0].is_zero();
}

bool is_canonical(const SymbolicVector& sv) {
    if (sv.include().size() != 1) return false;
    if (is_sentinel(sv)) return true;
    const Vector& qa = lower_of(sv);
    const auto& ex = sv.exclude();
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (i > 0 && !(ex[i - 1] < ex[i])) return false;
        if (!leq(qa, ex[i]) || ex[i] == qa) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (leq(ex[j], ex[i])) return false;
    }
    return true;
}

void require_canonical(const SymbolicVector& sv) {
    if (!is_canonical(sv)) throw NotCanonical("symbolic vector is not canonical: " + sv.to_string());
}

SymbolicVector canonicalize(const SymbolicVector& sv) {
    Vector qa = sv.lower();
    if (any_leq(sv.exclude(), qa)) return SymbolicVector::sentinel(sv.dim());
    std::vector<Vector> lifted;
    lifted.reserve(sv.exclude().size());
    for (const Vector& qb : sv.exclude()) lifted.push_back(join(qa, qb));
    return SymbolicVector(std::move(qa), minimal_elements(std::move(lifted)));
}

SymbolicVector intersect(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    std::vector<Vector> inc = x.include();
    inc.insert(inc.end(), y.include().begin(), y.include().end());
    std::vector<Vector> exc = x.exclude();
    exc.insert(exc.end(), y.exclude().begin(), y.exclude().end());
    return canonicalize(SymbolicVector(x.dim(), std::move(inc), std::move(exc)));
}

std::vector<SymbolicVector> subtract(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    std::vector<SymbolicVector> out;
    for (const Vector& qc : y.include()) {
        std::vector<Vector> exc = x.exclude();
        exc.push_back(qc);
        out.push_back(canonicalize(SymbolicVector(x.dim(), x.include(), std::move(exc))));
    }
    for (const Vector& qd : y.exclude()) {
        std::vector<Vector> inc = x.include();
        inc.insert(inc.end(), y.include().begin(), y.include().end());
        inc.push_back(qd);
        out.push_back(canonicalize(SymbolicVector(x.dim(), std::move(inc), x.exclude())));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SymbolicVector> canonical_subtract_pieces(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    return detail::subtract_pieces_unchecked(x, y);
}

bool mergeable(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    if (is_sentinel(x) || is_sentinel(y)) return true;
    if (leq(lower_of(x), lower_of(y))) return mergeable_ordered(x, y);
    if (leq(lower_of(y), lower_of(x))) return mergeable_ordered(y, x);
    return false;
}

SymbolicVector extension(const SymbolicVector& s, const SymbolicVector& l) {
    require_same_dim(s, l);
    const Vector& qc = lower_of(l);
    std::vector<Vector> bounds;
    for (const Vector& qb : s.exclude()) {
        if (!leq(qc, qb)) {
            bounds.push_back(qb);
            continue;
        }
        for (const Vector& qd : l.exclude()) bounds.push_back(join(qb, qd));
    }
    return canonicalize(SymbolicVector(lower_of(s), std::move(bounds)));
}

std::vector<SymbolicVector> merge(const SymbolicVector& x, const SymbolicVector& y) {
    bool merge_ok = mergeable(x, y);
    bool ex = is_sentinel(x), ey = is_sentinel(y);
    if (ex && ey) return {};
    if (ex) return {y};
    if (ey) return {x};
    if (!merge_ok) {
        std::vector<SymbolicVector> both{x, y};
        std::sort(both.begin(), both.end());
        return both;
    }
    if (leq(lower_of(x), lower_of(y))) return {extension(x, y)};
    return {extension(y, x)};
}

bool shareable(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_canonical(x);
    require_canonical(y);
    return detail::shareable_unchecked(x, y);
}

SymbolicVector share(const SymbolicVector& x, const SymbolicVector& y) {
    require_nonempty_canonical(x);
    require_nonempty_canonical(y);
    if (!shareable(x, y)) throw std::invalid_argument("share called on a non-shareable pair");
    auto [s, l] = lex_ordered(x, y);
    return intersect(*l, extension(*s, *l));
}

bool overlap(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_nonempty_canonical(x);
    require_nonempty_canonical(y);
    Vector qmax = join(lower_of(x), lower_of(y));
    return !any_leq(x.exclude(), qmax) && !any_leq(y.exclude(), qmax);
}

bool gap(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_nonempty_canonical(x);
    require_nonempty_canonical(y);
    Vector qmax = join(lower_of(x), lower_of(y));
    return any_strictly_below(x.exclude(), qmax) || any_strictly_below(y.exclude(), qmax) ||
           (has(x.exclude(), qmax) && has(y.exclude(), qmax));
}

bool adjacent(const SymbolicVector& x, const SymbolicVector& y) {
    require_same_dim(x, y);
    require_nonempty_canonical(x);
    require_nonempty_canonical(y);
    Vector qmax = join(lower_of(x), lower_of(y));
    bool in_b = has(x.exclude(), qmax), in_d = has(y.exclude(), qmax);
    return (in_b || in_d) && !(in_b && in_d);
}

Count max_bound(const SymbolicVector& sv) {
    Count m = 0;
    for (const Vector& q : sv.include()) m = std::max(m, q.max_component());
    for (const Vector& q : sv.exclude()) m = std::max(m, q.max_component());
    return m;
}

std::vector<Vector> enumerate(const SymbolicVector& sv, Count box) {
    if (box < max_bound(sv))
        throw std::invalid_argument("box " + std::to_string(box) + " is smaller than the largest bound " +
                                    std::to_string(max_bound(sv)));
    std::vector<Vector> out;
    for_each_in_box(sv.dim(), box, [&](Vector q) {
        if (contains(sv, q)) out.push_back(std::move(q));
    });
    return out;
}

namespace detail {

bool shareable_unchecked(const SymbolicVector& x, const SymbolicVector& y) {
    if (is_sentinel(x) || is_sentinel(y)) return true;
    auto [s, l] = lex_ordered(x, y);
    // Hot in the union worklist: compare against join(a, b) without building it.
    const std::span<const Count> a = lower_of(*s).values(), b = lower_of(*l).values();
    auto below_join = [&](const Vector& q, bool strict) {
        bool equal = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Count m = std::max(a[i], b[i]);
            if (q[i] > m) return false;
            equal = equal && q[i] == m;
        }
        return !(strict && equal);
    };
    for (const Vector& q : s->exclude())
        if (below_join(q, true)) return false;
    for (const Vector& q : l->exclude())
        if (below_join(q, false)) return false;
    return true;
}

std::vector<SymbolicVector> subtract_pieces_unchecked(const SymbolicVector& x, const SymbolicVector& y) {
    if (is_empty(x)) return {};
    if (is_empty(y)) return {x};
    std::vector<SymbolicVector> out;
    std::vector<Vector> exc = x.exclude();
    exc.push_back(lower_of(y));
    SymbolicVector first = canonicalize(SymbolicVector(x.dim(), x.include(), std::move(exc)));
    if (!is_sentinel(first)) out.push_back(std::move(first));
    std::vector<Vector> consumed = x.exclude();
    for (const Vector& qd : y.exclude()) {
        SymbolicVector piece = canonicalize(SymbolicVector(join(lower_of(x), qd), consumed));
        if (!is_sentinel(piece)) out.push_back(std::move(piece));
        consumed.push_back(qd);
    }
    return out;
}

}  // namespace detail
}  // namespace svmc

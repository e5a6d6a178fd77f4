#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "svmc/vector.hpp"

namespace svmc {

class NotCanonical : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The pair (include, exclude): every vector dominating all of `include` and none of `exclude`.
//
// Arbitrary pairs are allowed so that intermediate results can be represented;
// most operations below require the canonical form produced by canonicalize().
class SymbolicVector {
public:
    SymbolicVector(std::size_t dim, std::vector<Vector> include, std::vector<Vector> exclude);
    // Canonical ({lower}, exclude) without re-checking; use canonicalize() for untrusted input.
    SymbolicVector(Vector lower, std::vector<Vector> exclude);

    // ({0}, {}) : every vector.
    static SymbolicVector full(std::size_t dim);
    // ({0}, {0}) : the canonical representative of the empty set.
    static SymbolicVector sentinel(std::size_t dim);
    static SymbolicVector upset(Vector lower);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Vector>& include() const noexcept { return include_; }
    const std::vector<Vector>& exclude() const noexcept { return exclude_; }
    // join(include), the least vector any member must dominate.
    Vector lower() const;

    std::string to_string() const;

    friend auto operator<=>(const SymbolicVector&, const SymbolicVector&) = default;
    friend bool operator==(const SymbolicVector&, const SymbolicVector&) = default;

private:
    std::vector<Vector> include_;
    std::vector<Vector> exclude_;
    std::size_t dim_;
};

bool contains(const SymbolicVector& sv, const Vector& q);
bool is_empty(const SymbolicVector& sv);
bool is_sentinel(const SymbolicVector& sv);
bool is_canonical(const SymbolicVector& sv);
void require_canonical(const SymbolicVector& sv);

SymbolicVector canonicalize(const SymbolicVector& sv);

SymbolicVector intersect(const SymbolicVector& x, const SymbolicVector& y);

// Raw difference; members are canonicalised, the list as a whole is not canonical.
std::vector<SymbolicVector> subtract(const SymbolicVector& x, const SymbolicVector& y);

// Disjoint pieces of x \ y built by consuming y's exclude bounds in lex order.
// Empty pieces are dropped. Inputs must be canonical.
std::vector<SymbolicVector> canonical_subtract_pieces(const SymbolicVector& x, const SymbolicVector& y);

bool mergeable(const SymbolicVector& x, const SymbolicVector& y);
std::vector<SymbolicVector> merge(const SymbolicVector& x, const SymbolicVector& y);

bool shareable(const SymbolicVector& x, const SymbolicVector& y);

// The largest symbolic vector with lower bound q_s that stays inside s ∪ l
// (the merge construction applied without the mergeable guard). s and l canonical, nonempty.
SymbolicVector extension(const SymbolicVector& s, const SymbolicVector& l);

// The portion of the lex-larger operand that belongs with the lex-smaller one.
// Requires shareable(x, y) with neither operand empty.
SymbolicVector share(const SymbolicVector& x, const SymbolicVector& y);

bool overlap(const SymbolicVector& x, const SymbolicVector& y);
bool gap(const SymbolicVector& x, const SymbolicVector& y);
bool adjacent(const SymbolicVector& x, const SymbolicVector& y);

// Largest component of any include or exclude vector.
Count max_bound(const SymbolicVector& sv);

// All members inside [0, box]^dim. Throws if box < max_bound(sv).
std::vector<Vector> enumerate(const SymbolicVector& sv, Count box);

// Calls f(q) for every q in [0, box]^dim in lex order.
template <class F>
void for_each_in_box(std::size_t dim, Count box, F&& f) {
    std::vector<Count> cur(dim, 0);
    while (true) {
        f(Vector(cur));
        std::size_t i = dim;
        while (i > 0 && cur[i - 1] == box) cur[--i] = 0;
        if (i == 0) return;
        ++cur[i - 1];
    }
}

}  // namespace svmc

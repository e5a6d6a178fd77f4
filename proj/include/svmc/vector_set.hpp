#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "svmc/symbolic_vector.hpp"

namespace svmc {

using BigCount = boost::multiprecision::cpp_int;

class UnionLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite union of symbolic vectors. Members are kept sorted and duplicate-free.
//
// Sets produced by the canonical operations carry a flag so that later
// precondition checks do not have to re-verify pairwise non-shareability.
class SymbolicVectorSet {
public:
    explicit SymbolicVectorSet(std::size_t dim);
    SymbolicVectorSet(std::size_t dim, std::vector<SymbolicVector> members);

    static SymbolicVectorSet full(std::size_t dim);
    static SymbolicVectorSet empty_set(std::size_t dim) { return SymbolicVectorSet(dim); }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<SymbolicVector>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    // True when produced by a canonical operation (or verified canonical).
    bool known_canonical() const noexcept { return known_canonical_; }

    std::string to_string() const;

    friend bool operator==(const SymbolicVectorSet& a, const SymbolicVectorSet& b) {
        return a.dim_ == b.dim_ && a.members_ == b.members_;
    }

private:
    friend SymbolicVectorSet make_canonical_set(std::size_t dim, std::vector<SymbolicVector> members);

    std::size_t dim_;
    std::vector<SymbolicVector> members_;
    bool known_canonical_ = false;
};

bool contains(const SymbolicVectorSet& svs, const Vector& q);

bool is_canonical(const SymbolicVectorSet& svs);
void require_canonical(const SymbolicVectorSet& svs);

SymbolicVectorSet raw_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet raw_intersect(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet raw_subtract(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet raw_negate(const SymbolicVectorSet& x);
SymbolicVectorSet rm_empty(const SymbolicVectorSet& x);

SymbolicVectorSet canonicalize(const SymbolicVectorSet& x);
SymbolicVectorSet canonical_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
// canonical_union runs the share worklist and switches to the greedy
// construction when the worklist churns. Each route is also available alone.
SymbolicVectorSet share_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
// Members built lex-least first from the complement above each new lower bound.
SymbolicVectorSet greedy_union(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet canonical_intersect(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet canonical_subtract(const SymbolicVector& x, const SymbolicVector& y);
SymbolicVectorSet canonical_subtract(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
SymbolicVectorSet canonical_negate(const SymbolicVectorSet& x);

bool is_subset(const SymbolicVectorSet& x, const SymbolicVectorSet& y);
bool equals(const SymbolicVectorSet& x, const SymbolicVectorSet& y);

Count max_bound(const SymbolicVectorSet& svs);

// Members inside [0, box]^dim. Throws if box < max_bound(svs).
std::vector<Vector> enumerate(const SymbolicVectorSet& svs, Count box);
// Members inside the box, with no requirement on the box size.
std::vector<Vector> enumerate_within(const SymbolicVectorSet& svs, const Vector& box);

// Exact number of members inside ∏ [0, capacity(p)], by inclusion-exclusion
// over subsets of each member's exclude antichain. Requires a canonical set.
BigCount count_within(const SymbolicVectorSet& svs, const Vector& capacity);
BigCount count_within(const SymbolicVectorSet& svs, Count capacity);

// Cap on steps inside one canonical union or canonicalization; exceeding it throws UnionLimitExceeded.
std::size_t union_step_limit() noexcept;
void set_union_step_limit(std::size_t limit) noexcept;

}  // namespace svmc

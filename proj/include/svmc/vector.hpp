#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace svmc {

using Count = std::uint64_t;

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual);
};

// Fixed-dimension tuple of naturals. Doubles as a Petri net marking.
// The defaulted ordering is the lexicographic total order.
class Vector {
public:
    explicit Vector(std::vector<Count> values);
    Vector(std::initializer_list<Count> values);

    static Vector zero(std::size_t dim);
    // Parses "1,0,2". Whitespace around entries is ignored.
    static Vector parse(std::string_view text);

    std::size_t dim() const noexcept { return values_.size(); }
    Count operator[](std::size_t i) const { return values_[i]; }
    std::span<const Count> values() const noexcept { return values_; }
    bool is_zero() const noexcept;
    Count max_component() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const Vector&, const Vector&) = default;
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Count> values_;
};

void require_same_dim(const Vector& a, const Vector& b);

// Componentwise partial order.
bool leq(const Vector& a, const Vector& b);
// Lexicographic total order (reflexive).
bool lex_leq(const Vector& a, const Vector& b);

Vector join(const Vector& a, const Vector& b);
// join of an empty range is the zero vector of dimension dim.
Vector join(std::span<const Vector> qs, std::size_t dim);

// Componentwise minimum with a scalar bound; used for box clamping.
Vector clamp(const Vector& q, Count bound);

// Sorted, duplicate-free list of the leq-minimal elements.
std::vector<Vector> minimal_elements(std::vector<Vector> qs);

}  // namespace svmc

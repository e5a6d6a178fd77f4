#include "svmc/vector.hpp"

#include <algorithm>
#include <charconv>

namespace svmc {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(actual)) {}

Vector::Vector(std::vector<Count> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("vectors must have dimension >= 1");
}

Vector::Vector(std::initializer_list<Count> values) : Vector(std::vector<Count>(values)) {}

Vector Vector::zero(std::size_t dim) { return Vector(std::vector<Count>(dim, 0)); }

Vector Vector::parse(std::string_view text) {
    std::vector<Count> values;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        Count v = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size())
            throw std::invalid_argument("malformed vector \"" + std::string(text) + "\"");
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Vector(std::move(values));
}

bool Vector::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](Count v) { return v == 0; });
}

Count Vector::max_component() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

std::string Vector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

bool leq(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool lex_leq(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    return a <= b;
}

Vector join(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    std::vector<Count> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::max(a[i], b[i]);
    return Vector(std::move(out));
}

Vector join(std::span<const Vector> qs, std::size_t dim) {
    std::vector<Count> out(dim, 0);
    for (const Vector& q : qs) {
        if (q.dim() != dim) throw DimensionMismatch(dim, q.dim());
        for (std::size_t i = 0; i < dim; ++i) out[i] = std::max(out[i], q[i]);
    }
    return Vector(std::move(out));
}

Vector clamp(const Vector& q, Count bound) {
    std::vector<Count> out(q.values().begin(), q.values().end());
    for (Count& v : out) v = std::min(v, bound);
    return Vector(std::move(out));
}

std::vector<Vector> minimal_elements(std::vector<Vector> qs) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    // In lex order a vector can only be dominated by an earlier one.
    std::vector<Vector> out;
    out.reserve(qs.size());
    for (Vector& q : qs) {
        bool dominated = std::any_of(out.begin(), out.end(), [&](const Vector& m) { return leq(m, q); });
        if (!dominated) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace svmc

#include "support/decode.hpp"

#include <algorithm>

namespace support {

namespace {

bool below(const Vector& a, const Point& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (a[i] > q[i]) return false;
    return true;
}

bool below(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

bool member(const SymbolicVector& sv, const Point& q) {
    for (const Vector& a : sv.include())
        if (!below(a, q)) return false;
    for (const Vector& b : sv.exclude())
        if (below(b, q)) return false;
    return true;
}

PointSet box_points(std::size_t dim, Count box) {
    PointSet out;
    Point cur(dim, 0);
    while (true) {
        out.insert(cur);
        std::size_t i = dim;
        while (i > 0 && cur[i - 1] == box) cur[--i] = 0;
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

PointSet decode(const SymbolicVector& sv, Count box) {
    PointSet out;
    for (const Point& q : box_points(sv.dim(), box))
        if (member(sv, q)) out.insert(q);
    return out;
}

PointSet decode(const std::vector<SymbolicVector>& svs, std::size_t dim, Count box) {
    PointSet out;
    for (const Point& q : box_points(dim, box))
        if (std::any_of(svs.begin(), svs.end(), [&](const SymbolicVector& sv) { return member(sv, q); }))
            out.insert(q);
    return out;
}

PointSet decode(const SymbolicVectorSet& svs, Count box) { return decode(svs.members(), svs.dim(), box); }

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::vector<SymbolicVector> greedy_canonical(PointSet points, std::size_t dim, Count box) {
    std::vector<SymbolicVector> out;
    const PointSet all = box_points(dim, box);
    while (!points.empty()) {
        const Point q = *points.begin();
        std::vector<Point> holes;
        for (const Point& v : all)
            if (below(q, v) && !points.count(v)) holes.push_back(v);
        std::vector<Vector> minimal;
        for (const Point& h : holes) {
            bool dominated = std::any_of(holes.begin(), holes.end(),
                                         [&](const Point& o) { return o != h && below(o, h); });
            if (!dominated) minimal.emplace_back(h);
        }
        std::sort(minimal.begin(), minimal.end());
        SymbolicVector sv(Vector(q), std::move(minimal));
        for (auto it = points.begin(); it != points.end();) {
            if (member(sv, *it))
                it = points.erase(it);
            else
                ++it;
        }
        out.push_back(std::move(sv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Vector random_vector(std::mt19937_64& rng, std::size_t dim, Count max_component) {
    std::uniform_int_distribution<Count> d(0, max_component);
    std::vector<Count> v(dim);
    for (Count& x : v) x = d(rng);
    return Vector(std::move(v));
}

SymbolicVector random_raw_sv(std::mt19937_64& rng, std::size_t dim, Count max_component) {
    std::uniform_int_distribution<int> ni(0, 2), ne(0, 3);
    std::vector<Vector> inc, exc;
    for (int i = ni(rng); i > 0; --i) inc.push_back(random_vector(rng, dim, max_component));
    for (int i = ne(rng); i > 0; --i) exc.push_back(random_vector(rng, dim, max_component));
    return SymbolicVector(dim, std::move(inc), std::move(exc));
}

SymbolicVectorSet random_raw_svs(std::mt19937_64& rng, std::size_t dim, Count max_component,
                                 std::size_t max_members) {
    std::uniform_int_distribution<std::size_t> n(0, max_members);
    std::vector<SymbolicVector> ms;
    for (std::size_t i = n(rng); i > 0; --i) ms.push_back(random_raw_sv(rng, dim, max_component));
    return SymbolicVectorSet(dim, std::move(ms));
}

SymbolicVectorSet random_canonical_svs(std::mt19937_64& rng, std::size_t dim, Count max_component,
                                       std::size_t max_members) {
    return svmc::canonicalize(random_raw_svs(rng, dim, max_component, max_members));
}

}  // namespace support

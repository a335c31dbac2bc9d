#ifndef HOCHHOM_SPARSE_HPP
#define HOCHHOM_SPARSE_HPP

#include "hochhom/errors.hpp"
#include "hochhom/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace hochhom {

using Coord = std::int64_t;

/// Sparse vector: coordinate/value pairs sorted by coordinate, no zeros stored.
using RatVec = std::vector<std::pair<Coord, Rat>>;
using IntVec = std::vector<std::pair<Coord, Int>>;

inline void sort_and_combine(RatVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    RatVec out;
    out.reserve(v.size());
    for (auto& [c, q] : v) {
        if (!out.empty() && out.back().first == c)
            out.back().second += q;
        else
            out.emplace_back(c, q);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
              out.end());
    v = std::move(out);
}

inline RatVec unit_vec(Coord i) { return RatVec{{i, Rat(1)}}; }

inline Rat vec_entry(const RatVec& v, Coord i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, Coord c) { return p.first < c; });
    return (it != v.end() && it->first == i) ? it->second : Rat(0);
}

inline RatVec vec_add_scaled(const RatVec& a, const Rat& c, const RatVec& b) {
    RatVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat q = c * b[j].second;
            if (q != 0) out.emplace_back(b[j].first, std::move(q));
            ++j;
        } else {
            Rat q = a[i].second + c * b[j].second;
            if (q != 0) out.emplace_back(a[i].first, std::move(q));
            ++i, ++j;
        }
    }
    return out;
}

inline RatVec vec_scale(RatVec v, const Rat& c) {
    if (c == 0) return {};
    for (auto& [k, q] : v) q *= c;
    return v;
}

/// Strip an integer vector to primitive form (content 1). Zero stays zero.
inline void make_primitive(IntVec& v) {
    Int g = 0;
    for (auto& [c, x] : v) {
        g = gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& [c, x] : v) x /= g;
}

/// Scale a rational vector to a primitive integer vector (lcm of denominators,
/// then content stripped). Returns the scale s with  int_vec = s * rat_vec.
inline Rat to_primitive_int(const RatVec& v, IntVec& out) {
    out.clear();
    if (v.empty()) return Rat(1);
    Int l = 1;
    for (const auto& [c, q] : v) l = lcm(l, denominator(q));
    Int g = 0;
    out.reserve(v.size());
    for (const auto& [c, q] : v) {
        Int x = numerator(q) * (l / denominator(q));
        g = gcd(g, x);
        out.emplace_back(c, std::move(x));
    }
    if (g > 1)
        for (auto& [c, x] : out) x /= g;
    else
        g = 1;
    return Rat(l, g);
}

inline RatVec to_rational(const IntVec& v, const Rat& inv_scale = Rat(1)) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& [c, x] : v) out.emplace_back(c, Rat(x) * inv_scale);
    return out;
}

/// Incremental echelon structure for a stream of vectors in Q^ambient.
///
/// Pivot vectors are kept as primitive integer vectors whose leading (smallest)
/// coordinate is the pivot, with positive leading entry. Vectors are inserted
/// in call order and reduced by cross-multiplication with content stripping, so
/// the resulting basis is deterministic: same stream, same pivots.
class SpanBuilder {
public:
    explicit SpanBuilder(Coord ambient) : ambient_(ambient) {}

    Coord ambient() const { return ambient_; }
    std::int64_t rank() const { return static_cast<std::int64_t>(pivots_.size()); }

    /// Fully reduce v modulo the current span; the result has no entry at any
    /// pivot coordinate and lies in v + span.
    RatVec reduce(const RatVec& v) const {
        IntVec u;
        Rat scale = to_primitive_int(v, u);
        reduce_int(u, scale);
        if (u.empty()) return {};
        return to_rational(u, Rat(1) / scale);
    }

    bool contains(const RatVec& v) const {
        IntVec u;
        Rat scale = to_primitive_int(v, u);
        reduce_int(u, scale);
        return u.empty();
    }

    /// Insert v; returns true when v enlarged the span (a new pivot appeared).
    bool insert(const RatVec& v) {
        IntVec u;
        Rat scale = to_primitive_int(v, u);
        reduce_int(u, scale);
        if (u.empty()) return false;
        make_primitive(u);
        if (u.front().second < 0)
            for (auto& [c, x] : u) x = -x;
        pivots_.emplace(u.front().first, std::move(u));
        return true;
    }

    bool is_pivot(Coord c) const { return pivots_.count(c) != 0; }

    /// Pivot coordinates in increasing order.
    std::vector<Coord> pivot_coords() const {
        std::vector<Coord> out;
        out.reserve(pivots_.size());
        for (const auto& [c, v] : pivots_) out.push_back(c);
        return out;
    }

    /// The echelonized basis of the span (primitive integer vectors as stored).
    std::vector<RatVec> basis() const {
        std::vector<RatVec> out;
        out.reserve(pivots_.size());
        for (const auto& [c, v] : pivots_) out.push_back(to_rational(v));
        return out;
    }

private:
    // In-place reduction of (u, scale) representing the vector u / scale.
    void reduce_int(IntVec& u, Rat& scale) const {
        std::size_t i = 0;
        while (i < u.size()) {
            auto it = pivots_.find(u[i].first);
            if (it == pivots_.end()) {
                ++i;
                continue;
            }
            const IntVec& pv = it->second;
            const Int a = pv.front().second; // pivot value
            const Int b = u[i].second;
            // u <- a*u - b*pv ; cancels coordinate u[i].first, may add larger coords
            IntVec merged;
            merged.reserve(u.size() + pv.size());
            std::size_t x = 0, y = 0;
            while (x < u.size() || y < pv.size()) {
                if (y == pv.size() || (x < u.size() && u[x].first < pv[y].first)) {
                    merged.emplace_back(u[x].first, a * u[x].second);
                    ++x;
                } else if (x == u.size() || pv[y].first < u[x].first) {
                    merged.emplace_back(pv[y].first, -b * pv[y].second);
                    ++y;
                } else {
                    Int val = a * u[x].second - b * pv[y].second;
                    if (val != 0) merged.emplace_back(u[x].first, std::move(val));
                    ++x, ++y;
                }
            }
            u = std::move(merged);
            scale *= a;
            Int g = 0;
            for (auto& [c, x2] : u) {
                g = gcd(g, x2);
                if (g == 1) break;
            }
            if (g > 1) {
                for (auto& [c, x2] : u) x2 /= g;
                scale /= g;
            }
            // coordinates below the cancelled one are untouched, resume scan there
            while (i < u.size() && u[i].first < it->first) ++i;
        }
    }

    Coord ambient_;
    std::map<Coord, IntVec> pivots_;
};

} // namespace hochhom

#endif

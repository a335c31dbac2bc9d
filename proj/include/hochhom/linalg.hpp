#ifndef HOCHHOM_LINALG_HPP
#define HOCHHOM_LINALG_HPP

#include "hochhom/matrix.hpp"
#include "hochhom/sparse.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace hochhom {

/// A subspace of Q^ambient given by an independent list of vectors.
struct Subspace {
    Coord ambient_dim = 0;
    std::vector<RatVec> basis;

    std::int64_t dim() const { return static_cast<std::int64_t>(basis.size()); }
};

/// Fraction-free row elimination with the fixed pivot order: columns are
/// scanned left to right, the pivot row for a column is the surviving row with
/// the smallest original index. Rows are primitive integer vectors; the update
/// row ->  p*row - r*pivot_row  is followed by a content strip, so entries stay
/// integers of controlled size and the result is reproducible.
class RowEchelon {
public:
    explicit RowEchelon(const RatMatrix& m) : cols_(m.cols()) {
        // gather rows as primitive integer vectors
        RatMatrix t = m.transpose(); // columns of t = rows of m
        rows_.reserve(t.cols());
        for (Coord i = 0; i < t.cols(); ++i) {
            IntVec r;
            to_primitive_int(t.column(i), r);
            rows_.push_back(std::move(r));
        }
        eliminate();
    }

    std::int64_t rank() const { return static_cast<std::int64_t>(pivot_cols_.size()); }
    const std::vector<Coord>& pivot_cols() const { return pivot_cols_; }

    std::vector<Coord> free_cols() const {
        std::vector<Coord> out;
        std::size_t k = 0;
        for (Coord c = 0; c < cols_; ++c) {
            if (k < pivot_cols_.size() && pivot_cols_[k] == c)
                ++k;
            else
                out.push_back(c);
        }
        return out;
    }

    /// Kernel basis, one primitive integer vector per free column, entry +1 at
    /// the free column before normalization. Deterministic.
    std::vector<RatVec> kernel_basis() const {
        std::vector<RatVec> out;
        for (Coord f : free_cols()) {
            // back-substitution over pivot columns in decreasing order
            std::map<Coord, Rat> x;
            x[f] = Rat(1);
            for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
                const auto& [p, row] = *it;
                Rat s(0);
                Rat pval(0);
                for (const auto& [c, val] : row) {
                    if (c == p) {
                        pval = Rat(val);
                        continue;
                    }
                    auto found = x.find(c);
                    if (found != x.end()) s += Rat(val) * found->second;
                }
                if (s != 0) x[p] = -s / pval;
            }
            RatVec v;
            for (auto& [c, q] : x)
                if (q != 0) v.emplace_back(c, q);
            // normalize: primitive integer, positive entry at the free column
            IntVec iv;
            to_primitive_int(v, iv);
            RatVec nv = to_rational(iv);
            if (vec_entry(nv, f) < 0)
                for (auto& [c, q] : nv) q = -q;
            out.push_back(std::move(nv));
        }
        return out;
    }

private:
    void eliminate() {
        // An unused row never has entries at already-processed columns, so its
        // leading coordinate identifies the only column it can pivot; keep rows
        // bucketed by leading coordinate.
        std::map<Coord, std::vector<std::size_t>> buckets;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (!rows_[r].empty()) buckets[rows_[r].front().first].push_back(r);
        while (!buckets.empty()) {
            auto node = buckets.extract(buckets.begin());
            const Coord c = node.key();
            std::vector<std::size_t>& cand = node.mapped();
            std::size_t pivot = *std::min_element(cand.begin(), cand.end());
            pivot_cols_.push_back(c);
            const Int p = rows_[pivot].front().second;
            for (std::size_t r : cand) {
                if (r == pivot) continue;
                const Int e = rows_[r].front().second;
                rows_[r] = combine(p, rows_[r], e, rows_[pivot]);
                make_primitive(rows_[r]);
                if (!rows_[r].empty()) buckets[rows_[r].front().first].push_back(r);
            }
            pivot_rows_.emplace_back(c, rows_[pivot]);
        }
        std::sort(pivot_cols_.begin(), pivot_cols_.end());
    }

    // a*u - b*v
    static IntVec combine(const Int& a, const IntVec& u, const Int& b, const IntVec& v) {
        IntVec out;
        out.reserve(u.size() + v.size());
        std::size_t i = 0, j = 0;
        while (i < u.size() || j < v.size()) {
            if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
                out.emplace_back(u[i].first, a * u[i].second);
                ++i;
            } else if (i == u.size() || v[j].first < u[i].first) {
                out.emplace_back(v[j].first, -b * v[j].second);
                ++j;
            } else {
                Int val = a * u[i].second - b * v[j].second;
                if (val != 0) out.emplace_back(u[i].first, std::move(val));
                ++i, ++j;
            }
        }
        return out;
    }

    Coord cols_;
    std::vector<IntVec> rows_;
    std::vector<Coord> pivot_cols_;
    std::vector<std::pair<Coord, IntVec>> pivot_rows_; // in pivot order
};

/// Exact rank over Q.
inline std::int64_t rank(const RatMatrix& m) {
    SpanBuilder sb(m.rows());
    for (Coord j = 0; j < m.cols(); ++j) sb.insert(m.column(j));
    return sb.rank();
}

/// Basis of the null space; ambient = cols(m).
inline Subspace kernel_basis(const RatMatrix& m) {
    RowEchelon re(m);
    return Subspace{m.cols(), re.kernel_basis()};
}

/// Basis of the column space: the independent original columns, scanned in
/// column order (the pivot columns).
inline Subspace image_basis(const RatMatrix& m) {
    SpanBuilder sb(m.rows());
    Subspace out{m.rows(), {}};
    for (Coord j = 0; j < m.cols(); ++j)
        if (sb.insert(m.column(j))) out.basis.push_back(m.column(j));
    return out;
}

struct HomologySpot {
    std::int64_t dim = 0;
    std::vector<RatVec> representatives; // cycles spanning a complement of the boundaries
};

/// Homology at the middle spot of  . --d_in--> . --d_out--> .
/// Throws when d_out . d_in != 0 (malformed complex).
inline HomologySpot subquotient_homology(const RatMatrix& d_in, const RatMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw Error(ErrorKind::DimensionMismatch, "subquotient_homology: middle dimensions differ");
    for (Coord j = 0; j < d_in.cols(); ++j)
        if (!d_out.apply(d_in.column(j)).empty())
            throw Error(ErrorKind::CompositionNonzero, "subquotient_homology: d_out . d_in != 0");

    Subspace cycles = kernel_basis(d_out);
    SpanBuilder sb(d_out.cols());
    std::int64_t rank_in = 0;
    for (Coord j = 0; j < d_in.cols(); ++j) {
        if (sb.insert(d_in.column(j))) ++rank_in;
        // the image sits inside the cycles, so the rank cannot pass their dim
        if (rank_in == cycles.dim()) break;
    }

    HomologySpot out;
    for (const auto& z : cycles.basis)
        if (sb.insert(z)) out.representatives.push_back(z);
    out.dim = cycles.dim() - rank_in;
    return out;
}

/// Solve  sum_i x_i * cols[i] = target  when a solution exists.
inline std::optional<std::vector<Rat>> express_in_span(const std::vector<RatVec>& cols,
                                                       Coord ambient, const RatVec& target) {
    // dense-ish augmented elimination; intended for small systems
    RatMatrix m = RatMatrix::from_columns(ambient, cols).hstack(
        RatMatrix::from_columns(ambient, {target}));
    RowEchelon re(m);
    Coord t = static_cast<Coord>(cols.size());
    for (Coord p : re.pivot_cols())
        if (p == t) return std::nullopt; // target independent of the columns
    // kernel vector with entry at the target column gives the coefficients
    for (const auto& k : re.kernel_basis()) {
        Rat c = vec_entry(k, t);
        if (c != 0) {
            std::vector<Rat> out(cols.size(), Rat(0));
            for (const auto& [idx, q] : k)
                if (idx < t) out[static_cast<std::size_t>(idx)] = -q / c;
            return out;
        }
    }
    return std::nullopt;
}

} // namespace hochhom

#endif

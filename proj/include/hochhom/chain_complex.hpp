#ifndef HOCHHOM_CHAIN_COMPLEX_HPP
#define HOCHHOM_CHAIN_COMPLEX_HPP

#include "hochhom/linalg.hpp"
#include "hochhom/matrix.hpp"

#include <cstdint>
#include <vector>

namespace hochhom {

/// Non-negatively graded chain complex C_0..C_N with d_n : C_n -> C_{n-1}.
/// d o d = 0 is checked on construction.
class ChainComplex {
public:
    ChainComplex(std::vector<Coord> dims, std::vector<RatMatrix> differentials)
        : dims_(std::move(dims)), diffs_(std::move(differentials)) {
        if (diffs_.size() + 1 != dims_.size() && !(dims_.empty() && diffs_.empty()))
            throw Error(ErrorKind::DimensionMismatch, "chain complex: need one differential per positive degree");
        for (std::size_t n = 1; n < dims_.size(); ++n) {
            const RatMatrix& d = diffs_[n - 1];
            if (d.cols() != dims_[n] || d.rows() != dims_[n - 1])
                throw Error(ErrorKind::DimensionMismatch, "chain complex: differential shape mismatch");
        }
        for (std::size_t n = 2; n < dims_.size(); ++n) {
            const RatMatrix& hi = diffs_[n - 1];
            const RatMatrix& lo = diffs_[n - 2];
            for (Coord j = 0; j < hi.cols(); ++j)
                if (!lo.apply(hi.column(j)).empty())
                    throw Error(ErrorKind::CompositionNonzero, "chain complex: d o d != 0");
        }
    }

    std::int64_t top_degree() const { return static_cast<std::int64_t>(dims_.size()) - 1; }
    Coord dim(std::int64_t n) const {
        return (n >= 0 && n <= top_degree()) ? dims_[static_cast<std::size_t>(n)] : 0;
    }
    const std::vector<Coord>& dims() const { return dims_; }

    /// d_n : C_n -> C_{n-1}; degree 0 and out-of-range degrees give zero maps.
    RatMatrix differential(std::int64_t n) const {
        if (n >= 1 && n <= top_degree()) return diffs_[static_cast<std::size_t>(n - 1)];
        if (n == 0) return RatMatrix::zero(0, dim(0));
        return RatMatrix::zero(dim(n - 1), dim(n));
    }

    Int euler_characteristic() const {
        Int chi = 0;
        for (std::size_t n = 0; n < dims_.size(); ++n) chi += (n % 2 ? -Int(dims_[n]) : Int(dims_[n]));
        return chi;
    }

    /// Homology at degree n of the truncated complex (degree N uses no incoming
    /// boundaries, so it is only an upper bound there).
    HomologySpot homology_at(std::int64_t n) const {
        return subquotient_homology(differential(n + 1), differential(n));
    }

private:
    std::vector<Coord> dims_;
    std::vector<RatMatrix> diffs_;
};

/// Quotient of a complex by a subcomplex, via coordinate complements: the
/// pivot coordinates of each sub_n are eliminated, the remaining coordinates
/// index the quotient.
inline ChainComplex quotient_complex(const ChainComplex& c, const std::vector<Subspace>& sub) {
    const std::size_t levels = c.dims().size();
    if (sub.size() != levels)
        throw Error(ErrorKind::DimensionMismatch, "quotient_complex: one subspace per degree required");

    std::vector<SpanBuilder> builders;
    builders.reserve(levels);
    for (std::size_t n = 0; n < levels; ++n) {
        if (sub[n].ambient_dim != c.dim(static_cast<std::int64_t>(n)))
            throw Error(ErrorKind::DimensionMismatch, "quotient_complex: subspace ambient mismatch");
        SpanBuilder sb(sub[n].ambient_dim);
        for (const auto& v : sub[n].basis) sb.insert(v);
        builders.push_back(std::move(sb));
    }

    // subcomplex check: d(sub_n) inside sub_{n-1}
    for (std::size_t n = 1; n < levels; ++n) {
        RatMatrix d = c.differential(static_cast<std::int64_t>(n));
        for (const auto& v : sub[n].basis)
            if (!builders[n - 1].contains(d.apply(v)))
                throw Error(ErrorKind::NotASubcomplex, "quotient_complex: subspaces are not a subcomplex");
    }

    // complement coordinates per degree
    std::vector<std::vector<Coord>> comp(levels);
    std::vector<std::map<Coord, Coord>> comp_index(levels);
    std::vector<Coord> qdims(levels);
    for (std::size_t n = 0; n < levels; ++n) {
        const Coord ambient = c.dim(static_cast<std::int64_t>(n));
        for (Coord i = 0; i < ambient; ++i)
            if (!builders[n].is_pivot(i)) {
                comp_index[n][i] = static_cast<Coord>(comp[n].size());
                comp[n].push_back(i);
            }
        qdims[n] = static_cast<Coord>(comp[n].size());
    }

    std::vector<RatMatrix> qdiffs;
    for (std::size_t n = 1; n < levels; ++n) {
        RatMatrix d = c.differential(static_cast<std::int64_t>(n));
        std::vector<RatVec> cols;
        cols.reserve(comp[n].size());
        for (Coord src : comp[n]) {
            RatVec w = builders[n - 1].reduce(d.apply(unit_vec(src)));
            RatVec col;
            for (const auto& [i, q] : w) col.emplace_back(comp_index[n - 1].at(i), q);
            cols.push_back(std::move(col));
        }
        qdiffs.push_back(RatMatrix::from_columns(qdims[n - 1], std::move(cols)));
    }
    return ChainComplex(std::move(qdims), std::move(qdiffs));
}

} // namespace hochhom

#endif

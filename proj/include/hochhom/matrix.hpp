#ifndef HOCHHOM_MATRIX_HPP
#define HOCHHOM_MATRIX_HPP

#include "hochhom/errors.hpp"
#include "hochhom/sparse.hpp"

#include <utility>
#include <vector>

namespace hochhom {

/// Sparse matrix over Q, column-major. Values are immutable after
/// construction; every operation returns a fresh matrix.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}

    RatMatrix(Coord rows, Coord cols) : rows_(rows), cols_(cols), columns_(cols) {}

    static RatMatrix identity(Coord n) {
        RatMatrix m(n, n);
        for (Coord i = 0; i < n; ++i) m.columns_[i] = unit_vec(i);
        return m;
    }

    static RatMatrix zero(Coord rows, Coord cols) { return RatMatrix(rows, cols); }

    static RatMatrix from_columns(Coord rows, std::vector<RatVec> cols) {
        RatMatrix m(rows, static_cast<Coord>(cols.size()));
        for (auto& c : cols) {
            sort_and_combine(c);
            if (!c.empty() && (c.front().first < 0 || c.back().first >= rows))
                throw Error(ErrorKind::DimensionMismatch, "matrix column index out of bounds");
        }
        m.columns_ = std::move(cols);
        return m;
    }

    /// Row-major dense initializer, convenient for tests and small fixtures.
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        Coord r = static_cast<Coord>(rows.size());
        Coord c = r ? static_cast<Coord>(rows[0].size()) : 0;
        RatMatrix m(r, c);
        for (Coord i = 0; i < r; ++i) {
            if (static_cast<Coord>(rows[i].size()) != c)
                throw Error(ErrorKind::DimensionMismatch, "ragged row initializer");
            for (Coord j = 0; j < c; ++j)
                if (rows[i][j] != 0) m.columns_[j].emplace_back(i, rows[i][j]);
        }
        return m;
    }

    Coord rows() const { return rows_; }
    Coord cols() const { return cols_; }

    const RatVec& column(Coord j) const { return columns_[j]; }

    Rat entry(Coord i, Coord j) const { return vec_entry(columns_[j], i); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const {
        for (const auto& c : columns_)
            if (!c.empty()) return false;
        return true;
    }

    RatVec apply(const RatVec& v) const {
        RatVec out;
        for (const auto& [j, q] : v) {
            if (j < 0 || j >= cols_)
                throw Error(ErrorKind::DimensionMismatch, "apply: vector index out of range");
            for (const auto& [i, a] : columns_[j]) out.emplace_back(i, a * q);
        }
        sort_and_combine(out);
        return out;
    }

    /// this * other (composition of linear maps).
    RatMatrix compose(const RatMatrix& other) const {
        if (cols_ != other.rows_)
            throw Error(ErrorKind::DimensionMismatch, "compose: inner dimensions differ");
        std::vector<RatVec> cols(other.cols_);
        for (Coord j = 0; j < other.cols_; ++j) cols[j] = apply(other.columns_[j]);
        return from_columns(rows_, std::move(cols));
    }

    RatMatrix transpose() const {
        std::vector<RatVec> cols(rows_);
        for (Coord j = 0; j < cols_; ++j)
            for (const auto& [i, q] : columns_[j]) cols[i].emplace_back(j, q);
        RatMatrix m(cols_, rows_);
        m.columns_ = std::move(cols);
        return m;
    }

    RatMatrix scaled(const Rat& c) const {
        std::vector<RatVec> cols(columns_);
        for (auto& col : cols) col = vec_scale(std::move(col), c);
        if (c == 0)
            for (auto& col : cols) col.clear();
        return from_columns(rows_, std::move(cols));
    }

    RatMatrix plus(const RatMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw Error(ErrorKind::DimensionMismatch, "plus: shapes differ");
        std::vector<RatVec> cols(cols_);
        for (Coord j = 0; j < cols_; ++j) cols[j] = vec_add_scaled(columns_[j], Rat(1), other.columns_[j]);
        return from_columns(rows_, std::move(cols));
    }

    /// [this | other], side by side.
    RatMatrix hstack(const RatMatrix& other) const {
        if (rows_ != other.rows_)
            throw Error(ErrorKind::DimensionMismatch, "hstack: row counts differ");
        std::vector<RatVec> cols = columns_;
        cols.insert(cols.end(), other.columns_.begin(), other.columns_.end());
        RatMatrix m(rows_, cols_ + other.cols_);
        m.columns_ = std::move(cols);
        return m;
    }

    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && columns_ == other.columns_;
    }

private:
    Coord rows_, cols_;
    std::vector<RatVec> columns_;
};

} // namespace hochhom

#endif

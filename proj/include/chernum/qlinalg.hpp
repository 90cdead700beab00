#pragma once

// Exact rational linear algebra: RREF, rank, spans, membership, and
// Zassenhaus sum/intersection of row spaces.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chern_vector.hpp"
#include "partitions.hpp"
#include "rational.hpp"

namespace chernum {

using RowQ = std::vector<Rational>;

class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, RowQ(cols, Rational(0))) {}
    /// Column count is taken from the first row; an empty list needs it explicitly.
    explicit MatrixQ(std::vector<RowQ> rows, std::optional<std::size_t> cols = std::nullopt)
        : cols_(cols ? *cols : (rows.empty() ? 0 : rows.front().size())), data_(std::move(rows)) {
        for (const auto& r : data_)
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    }

    static MatrixQ identity(std::size_t n) {
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r][c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r][c]; }
    const RowQ& row(std::size_t r) const { return data_[r]; }
    const std::vector<RowQ>& data() const { return data_; }

    void append_row(RowQ r) {
        if (data_.empty() && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        data_.push_back(std::move(r));
    }

    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<RowQ> data_;
};

inline bool is_zero_row(const RowQ& r) {
    for (const auto& v : r)
        if (sgn(v) != 0) return false;
    return true;
}

/// Gauss-Jordan with first-nonzero pivoting. Zero rows are kept at the bottom.
inline MatrixQ rref(MatrixQ a) {
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(lead_row, c));
        const Rational inv = 1 / a(lead_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || sgn(a(r, col)) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(lead_row, c);
        }
        ++lead_row;
    }
    return a;
}

inline std::size_t rank(const MatrixQ& a) {
    const MatrixQ r = rref(a);
    std::size_t k = 0;
    while (k < r.rows() && !is_zero_row(r.row(k))) ++k;
    return k;
}

/// Row space of a matrix, held as an RREF basis without zero rows.
class SubspaceQ {
public:
    explicit SubspaceQ(std::size_t ambient) : basis_(0, ambient) {}

    static SubspaceQ row_space(const MatrixQ& m) {
        SubspaceQ s(m.cols());
        const MatrixQ reduced = rref(m);
        for (const auto& r : reduced.data())
            if (!is_zero_row(r)) s.basis_.append_row(r);
        return s;
    }
    static SubspaceQ full(std::size_t ambient) { return row_space(MatrixQ::identity(ambient)); }

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }

    friend bool operator==(const SubspaceQ&, const SubspaceQ&) = default;

private:
    MatrixQ basis_;
};

inline SubspaceQ span(const std::vector<RowQ>& rows, std::size_t ambient) {
    return SubspaceQ::row_space(MatrixQ(rows, ambient));
}

/// Row space of ChernVectors of degree n, on the canonical partition basis.
inline SubspaceQ span(const std::vector<ChernVector>& vectors, int n) {
    const PartitionBasis basis(n);
    std::vector<RowQ> rows;
    for (const auto& v : vectors) {
        if (v.degree() != n) throw std::invalid_argument("degree mismatch in span");
        rows.push_back(v.dense(basis));
    }
    return span(rows, basis.size());
}

inline SubspaceQ span(const std::vector<ChernVector>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("empty span needs an explicit degree");
    return span(vectors, vectors.front().degree());
}

/// Reduces v against the RREF basis and tests for zero.
inline bool contains(const SubspaceQ& s, const RowQ& v) {
    if (v.size() != s.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    RowQ w = v;
    const MatrixQ& b = s.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::size_t pivot = 0;
        while (sgn(b(r, pivot)) == 0) ++pivot;
        if (sgn(w[pivot]) == 0) continue;
        const Rational factor = w[pivot];
        for (std::size_t c = pivot; c < w.size(); ++c) w[c] -= factor * b(r, c);
    }
    return is_zero_row(w);
}

inline bool contains(const SubspaceQ& s, const ChernVector& v) {
    const PartitionBasis basis(v.degree());
    if (basis.size() != s.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    return contains(s, v.dense(basis));
}

inline bool subspace_equal(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    return a.basis() == b.basis();
}

/// Zassenhaus: RREF of [[A A],[B 0]]. Rows with a nonzero left half span
/// A + B; rows with a zero left half carry A ∩ B in their right half.
inline std::pair<SubspaceQ, SubspaceQ> sum_and_intersection(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t n = a.ambient();
    MatrixQ block(0, 2 * n);
    for (const auto& r : a.basis().data()) {
        RowQ row(r);
        row.insert(row.end(), r.begin(), r.end());
        block.append_row(std::move(row));
    }
    for (const auto& r : b.basis().data()) {
        RowQ row(r);
        row.resize(2 * n, Rational(0));
        block.append_row(std::move(row));
    }
    std::vector<RowQ> sum_rows, meet_rows;
    const MatrixQ reduced = rref(block);
    for (const auto& r : reduced.data()) {
        if (is_zero_row(r)) continue;
        RowQ left(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        RowQ right(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
        if (is_zero_row(left)) meet_rows.push_back(std::move(right));
        else sum_rows.push_back(std::move(left));
    }
    return {span(sum_rows, n), span(meet_rows, n)};
}

inline SubspaceQ intersect(const SubspaceQ& a, const SubspaceQ& b) { return sum_and_intersection(a, b).second; }
inline SubspaceQ subspace_sum(const SubspaceQ& a, const SubspaceQ& b) { return sum_and_intersection(a, b).first; }

/// Unique solution of a square nonsingular system A x = rhs.
inline RowQ solve(const MatrixQ& a, const RowQ& rhs) {
    if (a.rows() != a.cols() || rhs.size() != a.rows()) throw std::invalid_argument("solve needs a square system");
    MatrixQ aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = rhs[r];
    }
    const MatrixQ red = rref(aug);
    RowQ x(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (sgn(red(r, r)) == 0) throw std::domain_error("singular system");
        x[r] = red(r, a.cols());
    }
    return x;
}

}  // namespace chernum

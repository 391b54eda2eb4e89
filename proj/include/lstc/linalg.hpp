// Dense linear algebra over an arbitrary field object: row reduction,
// rank, null spaces, solving inside a span, and an incrementally built
// echelon basis used for quotient and ideal computations.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lstc {

template <typename F>
using FieldVec = std::vector<typename F::Elem>;

/// Row-major list of rows; all rows must share one length.
template <typename F>
using FieldMat = std::vector<FieldVec<F>>;

/// In-place reduced row echelon form. Returns the pivot columns in order.
template <typename F>
std::vector<int> row_reduce(const F& field, FieldMat<F>& m)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (!field.is_zero(m[i][c])) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        std::swap(m[r], m[pivot_row]);
        const auto scale = field.inv(m[r][c]);
        for (int j = c; j < cols; ++j)
            m[r][j] = field.mul(m[r][j], scale);
        for (int i = 0; i < rows; ++i) {
            if (i == r || field.is_zero(m[i][c]))
                continue;
            const auto factor = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = field.sub(m[i][j], field.mul(factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
int matrix_rank(const F& field, FieldMat<F> m)
{
    return static_cast<int>(row_reduce(field, m).size());
}

/// Basis of {x : m x = 0} for m acting on column vectors of length `cols`,
/// returned as rows. The column count is explicit so that matrices with no
/// rows keep their domain.
template <typename F>
FieldMat<F> nullspace(const F& field, FieldMat<F> m, int cols)
{
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::domain_error("nullspace: row length does not match column count");
    const std::vector<int> pivots = row_reduce(field, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    FieldMat<F> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        FieldVec<F> v(cols, field.zero());
        v[c] = field.one();
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            v[pivots[r]] = field.neg(m[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Coefficients c with sum_i c_i generators[i] == target, when they exist.
template <typename F>
std::optional<FieldVec<F>> solve_in_span(const F& field, const FieldMat<F>& generators,
                                         const FieldVec<F>& target)
{
    const int n = static_cast<int>(generators.size());
    const int dim = static_cast<int>(target.size());
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != dim)
            throw std::domain_error("solve_in_span: generator length mismatch");
    FieldMat<F> aug(dim, FieldVec<F>(n + 1, field.zero()));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = generators[j][i];
        aug[i][n] = target[i];
    }
    const std::vector<int> pivots = row_reduce(field, aug);
    FieldVec<F> coeffs(n, field.zero());
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        if (pivots[r] == n)
            return std::nullopt;
        coeffs[pivots[r]] = aug[r][n];
    }
    return coeffs;
}

/// Growing span with fully reduced rows: every stored row has a leading one
/// at its pivot column and zeros at all other pivots, so membership tests
/// reduce against rows in any order.
template <typename F>
class EchelonBasis {
public:
    EchelonBasis(const F& field, int dim) : field_(field), dim_(dim)
    {
        if (dim < 0)
            throw std::domain_error("echelon basis: negative dimension");
    }

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const FieldMat<F>& rows() const { return rows_; }

    /// Residual of v after subtracting its projection onto the span.
    FieldVec<F> reduce(FieldVec<F> v) const
    {
        check_length(v);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto factor = v[pivots_[r]];
            if (field_.is_zero(factor))
                continue;
            for (int j = 0; j < dim_; ++j)
                v[j] = field_.sub(v[j], field_.mul(factor, rows_[r][j]));
        }
        return v;
    }

    bool contains(const FieldVec<F>& v) const
    {
        const FieldVec<F> rem = reduce(v);
        for (const auto& x : rem)
            if (!field_.is_zero(x))
                return false;
        return true;
    }

    /// Adds v to the span; returns true when it enlarged the span.
    bool insert(FieldVec<F> v)
    {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < dim_; ++j) {
            if (!field_.is_zero(v[j])) {
                p = j;
                break;
            }
        }
        if (p < 0)
            return false;
        const auto scale = field_.inv(v[p]);
        for (int j = 0; j < dim_; ++j)
            v[j] = field_.mul(v[j], scale);
        for (auto& row : rows_) {
            const auto factor = row[p];
            if (field_.is_zero(factor))
                continue;
            for (int j = 0; j < dim_; ++j)
                row[j] = field_.sub(row[j], field_.mul(factor, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    void check_length(const FieldVec<F>& v) const
    {
        if (static_cast<int>(v.size()) != dim_)
            throw std::domain_error("echelon basis: vector length mismatch");
    }

    F field_;
    int dim_;
    FieldMat<F> rows_;
    std::vector<int> pivots_;
};

}  // namespace lstc

// Dense matrices over the integers, with a capacity guard for operations
// that materialize large complexes.

#pragma once

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

/// Thrown when an operation would materialize more matrix entries than the
/// caller allowed.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_capacity = 1'000'000;

inline void check_capacity(std::size_t rows, std::size_t cols, std::size_t max_entries)
{
    if (rows != 0 && cols > max_entries / rows)
        throw capacity_error("a " + std::to_string(rows) + " x " + std::to_string(cols) +
                             " matrix exceeds the capacity of " + std::to_string(max_entries) +
                             " entries");
}

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
    {
        if (rows < 0 || cols < 0)
            throw std::domain_error("matrix: negative dimensions");
        data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    static IntMatrix identity(int n)
    {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const
    {
        for (const Int& v : data_)
            if (v != 0)
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::domain_error("matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0)
                    c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

inline std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x)
{
    if (a.cols() != static_cast<int>(x.size()))
        throw std::domain_error("matrix-vector product: dimensions differ");
    std::vector<Int> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && x[j] != 0)
                y[i] += a.at(i, j) * x[j];
    return y;
}

inline IntMatrix transpose(const IntMatrix& a)
{
    IntMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            t.at(j, i) = a.at(i, j);
    return t;
}

/// Kronecker product; entry ((i1, i2), (j1, j2)) = a(i1, j1) * b(i2, j2)
/// with the second index varying fastest.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const Int& v = a.at(i1, j1);
            if (v == 0)
                continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    if (b.at(i2, j2) != 0)
                        k.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b.at(i2, j2);
        }
    return k;
}

/// Determinant by fraction-free elimination. Intended for moderately sized
/// matrices such as Smith transform factors under certification.
inline Int determinant(IntMatrix a)
{
    if (a.rows() != a.cols())
        throw std::domain_error("determinant: matrix must be square");
    const int n = a.rows();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return 0;
            for (int j = k; j < n; ++j)
                std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

}  // namespace lstc

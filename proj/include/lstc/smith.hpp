// Smith normal form over the integers with optional transform tracking,
// an independent certification pass, and exact solution of integer linear
// systems with non-solvability certificates.

#pragma once

#include "matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lstc {

struct SmithResult {
    IntMatrix d;  ///< diagonal form; u * a * v == d when transforms are kept
    IntMatrix u;
    IntMatrix v;
    bool has_transforms = false;
    std::vector<Int> invariant_factors;  ///< nonzero diagonal, each dividing the next

    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

/// Diagonalizes by repeated Euclidean row/column steps with a smallest-pivot
/// search (stopping early on a unit), then repairs the divisibility chain
/// and signs. Transform tracking roughly doubles time and memory; rank and
/// invariant factors do not need it.
inline SmithResult smith_normal_form(const IntMatrix& a, bool with_transforms = true)
{
    const int m = a.rows();
    const int n = a.cols();
    SmithResult res;
    res.d = a;
    res.has_transforms = with_transforms;
    if (with_transforms) {
        res.u = IntMatrix::identity(m);
        res.v = IntMatrix::identity(n);
    }
    IntMatrix& d = res.d;

    const auto row_swap = [&](int i1, int i2) {
        if (i1 == i2)
            return;
        for (int j = 0; j < n; ++j)
            std::swap(d.at(i1, j), d.at(i2, j));
        if (with_transforms)
            for (int j = 0; j < m; ++j)
                std::swap(res.u.at(i1, j), res.u.at(i2, j));
    };
    const auto col_swap = [&](int j1, int j2) {
        if (j1 == j2)
            return;
        for (int i = 0; i < m; ++i)
            std::swap(d.at(i, j1), d.at(i, j2));
        if (with_transforms)
            for (int i = 0; i < n; ++i)
                std::swap(res.v.at(i, j1), res.v.at(i, j2));
    };
    // row i1 += c * row i2, column j1 += c * column j2
    const auto row_axpy = [&](int i1, int i2, const Int& c) {
        for (int j = 0; j < n; ++j)
            if (d.at(i2, j) != 0)
                d.at(i1, j) += c * d.at(i2, j);
        if (with_transforms)
            for (int j = 0; j < m; ++j)
                if (res.u.at(i2, j) != 0)
                    res.u.at(i1, j) += c * res.u.at(i2, j);
    };
    const auto col_axpy = [&](int j1, int j2, const Int& c) {
        for (int i = 0; i < m; ++i)
            if (d.at(i, j2) != 0)
                d.at(i, j1) += c * d.at(i, j2);
        if (with_transforms)
            for (int i = 0; i < n; ++i)
                if (res.v.at(i, j2) != 0)
                    res.v.at(i, j1) += c * res.v.at(i, j2);
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        // smallest nonzero entry of the remaining block becomes the pivot
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m && best != 1; ++i)
            for (int j = t; j < n; ++j) {
                const Int& e = d.at(i, j);
                if (e == 0)
                    continue;
                Int ae = abs(e);
                if (pi < 0 || ae < best) {
                    best = std::move(ae);
                    pi = i;
                    pj = j;
                    if (best == 1)
                        break;
                }
            }
        if (pi < 0)
            break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            // clear the pivot column and row; swaps keep shrinking the pivot
            for (;;) {
                bool dirty = false;
                for (int i = t + 1; i < m; ++i)
                    while (d.at(i, t) != 0) {
                        const Int q = d.at(i, t) / d.at(t, t);
                        if (q != 0)
                            row_axpy(i, t, -q);
                        if (d.at(i, t) != 0) {
                            row_swap(t, i);
                            dirty = true;
                        }
                    }
                for (int j = t + 1; j < n; ++j)
                    while (d.at(t, j) != 0) {
                        const Int q = d.at(t, j) / d.at(t, t);
                        if (q != 0)
                            col_axpy(j, t, -q);
                        if (d.at(t, j) != 0) {
                            col_swap(t, j);
                            dirty = true;
                        }
                    }
                if (!dirty) {
                    bool column_clean = true;
                    for (int i = t + 1; i < m && column_clean; ++i)
                        column_clean = d.at(i, t) == 0;
                    if (column_clean)
                        break;
                }
            }
            // pivot must divide the rest of the block; folding a violating
            // row into the pivot row shrinks the pivot to a gcd
            if (d.at(t, t) == 1)
                break;
            int vi = -1;
            for (int i = t + 1; i < m && vi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        vi = i;
                        break;
                    }
            if (vi < 0)
                break;
            row_axpy(t, vi, 1);
        }
        if (d.at(t, t) < 0) {
            for (int j = t; j < n; ++j)
                d.at(t, j) = -d.at(t, j);
            if (with_transforms)
                for (int j = 0; j < m; ++j)
                    res.u.at(t, j) = -res.u.at(t, j);
        }
        res.invariant_factors.push_back(d.at(t, t));
    }
    return res;
}

/// Re-checks a Smith decomposition from scratch: shape, diagonality, the
/// divisibility chain, and (when transforms are present) u * a * v == d.
inline bool certify_smith(const IntMatrix& a, const SmithResult& s)
{
    if (s.d.rows() != a.rows() || s.d.cols() != a.cols())
        return false;
    const int r = static_cast<int>(s.invariant_factors.size());
    if (r > std::min(a.rows(), a.cols()))
        return false;
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j) {
            if (i != j && s.d.at(i, j) != 0)
                return false;
            if (i == j && i < r && s.d.at(i, j) != s.invariant_factors[i])
                return false;
            if (i == j && i >= r && s.d.at(i, j) != 0)
                return false;
        }
    for (int i = 0; i < r; ++i) {
        if (s.invariant_factors[i] <= 0)
            return false;
        if (i + 1 < r && s.invariant_factors[i + 1] % s.invariant_factors[i] != 0)
            return false;
    }
    if (s.has_transforms) {
        if (s.u.rows() != a.rows() || s.u.cols() != a.rows())
            return false;
        if (s.v.rows() != a.cols() || s.v.cols() != a.cols())
            return false;
        if (!(s.u * a * s.v == s.d))
            return false;
    }
    return true;
}

/// Outcome of solving a x = b over the integers. When unsolvable, the
/// certificate is a rational row y with y a integral but y b not an
/// integer, which no integer solution could permit.
struct IntegerSolve {
    bool solvable = false;
    std::vector<Int> solution;
    std::vector<Rational> certificate;
};

inline IntegerSolve solve_integer_system(const IntMatrix& a, const std::vector<Int>& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::domain_error("solve: right side length does not match rows");
    const SmithResult s = smith_normal_form(a, true);
    const std::vector<Int> ub = s.u * b;
    const int r = s.rank();

    const auto scaled_u_row = [&](int i, const Int& denom) {
        std::vector<Rational> y(a.rows());
        for (int j = 0; j < a.rows(); ++j)
            y[j] = make_fraction(s.u.at(i, j), denom);
        return y;
    };

    IntegerSolve out;
    for (int i = r; i < a.rows(); ++i)
        if (ub[i] != 0) {
            out.certificate = scaled_u_row(i, 2 * ub[i]);
            return out;
        }
    for (int i = 0; i < r; ++i)
        if (ub[i] % s.invariant_factors[i] != 0) {
            out.certificate = scaled_u_row(i, s.invariant_factors[i]);
            return out;
        }

    std::vector<Int> z(a.cols(), Int(0));
    for (int i = 0; i < r; ++i)
        z[i] = ub[i] / s.invariant_factors[i];
    out.solvable = true;
    out.solution = s.v * z;
    if (!(a * out.solution == b))
        throw std::logic_error("solve: internal check failed");
    return out;
}

/// Independent check of a non-solvability certificate for a x = b.
inline bool certify_unsolvable(const IntMatrix& a, const std::vector<Int>& b,
                               const std::vector<Rational>& y)
{
    if (static_cast<int>(y.size()) != a.rows())
        return false;
    for (int j = 0; j < a.cols(); ++j) {
        Rational dot = 0;
        for (int i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != 0)
                dot += y[i] * a.at(i, j);
        if (denominator(dot) != 1)
            return false;
    }
    Rational dot = 0;
    for (int i = 0; i < a.rows(); ++i)
        dot += y[i] * b[i];
    return denominator(dot) != 1;
}

}  // namespace lstc

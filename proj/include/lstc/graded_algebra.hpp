// Graded-commutative algebras presented by basis labels per degree and
// structure constants, truncated above a top degree. Provides validation
// (unit, associativity, graded commutativity), cup-length via ideal powers,
// the graded tensor square with Koszul signs, and the zero-divisor
// cup-length that bounds topological complexity from below.

#pragma once

#include "linalg.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

/// basis[d] lists the labels in degree d for 0 <= d <= top_degree.
/// products[d1][d2] holds one row per pair (i, j), at index i * dim(d2) + j,
/// giving the coefficients of basis_i * basis_j in degree d1 + d2; pairs of
/// degrees beyond the truncation multiply to zero and store no matrix.
template <typename F>
struct GradedAlgebra {
    F field;
    int top_degree = 0;
    std::vector<std::vector<std::string>> basis;
    std::vector<std::vector<FieldMat<F>>> products;

    GradedAlgebra() = default;
    explicit GradedAlgebra(F f) : field(std::move(f)) {}

    int dim(int degree) const
    {
        if (degree < 0 || degree > top_degree)
            return 0;
        return static_cast<int>(basis[degree].size());
    }

    int total_dim() const
    {
        int out = 0;
        for (int d = 0; d <= top_degree; ++d)
            out += dim(d);
        return out;
    }

    /// Shape of the presentation (not the algebra laws); throws on mismatch.
    void check_shape() const
    {
        if (top_degree < 0)
            throw std::domain_error("algebra: negative top degree");
        if (static_cast<int>(basis.size()) != top_degree + 1)
            throw std::domain_error("algebra: need one basis list per degree 0.." +
                                    std::to_string(top_degree));
        if (dim(0) != 1)
            throw std::domain_error("algebra: degree zero must be spanned by the unit alone");
        if (static_cast<int>(products.size()) != top_degree + 1)
            throw std::domain_error("algebra: product table has the wrong number of rows");
        for (int d1 = 0; d1 <= top_degree; ++d1) {
            if (static_cast<int>(products[d1].size()) != top_degree + 1)
                throw std::domain_error("algebra: product table row " + std::to_string(d1) +
                                        " has the wrong length");
            for (int d2 = 0; d1 + d2 <= top_degree; ++d2) {
                const auto& block = products[d1][d2];
                if (static_cast<int>(block.size()) !=
                    static_cast<std::size_t>(dim(d1)) * dim(d2))
                    throw std::domain_error("algebra: product block (" + std::to_string(d1) +
                                            ", " + std::to_string(d2) +
                                            ") has the wrong number of rows");
                for (const auto& row : block)
                    if (static_cast<int>(row.size()) != dim(d1 + d2))
                        throw std::domain_error("algebra: product row in block (" +
                                                std::to_string(d1) + ", " + std::to_string(d2) +
                                                ") has the wrong length");
            }
        }
    }
};

template <typename F>
FieldVec<F> zero_vector(const F& field, int dim)
{
    return FieldVec<F>(dim, field.zero());
}

template <typename F>
FieldVec<F> unit_vector(const F& field, int dim, int index)
{
    FieldVec<F> out = zero_vector(field, dim);
    out.at(index) = field.one();
    return out;
}

/// Product of two homogeneous elements, given by coefficient vectors in the
/// stated degrees; the result lives in degree d1 + d2 (empty above the top).
template <typename F>
FieldVec<F> multiply(const GradedAlgebra<F>& a, int d1, const FieldVec<F>& v1, int d2,
                     const FieldVec<F>& v2)
{
    const int target = d1 + d2;
    FieldVec<F> out = zero_vector(a.field, a.dim(target));
    if (target > a.top_degree || a.dim(target) == 0)
        return out;
    const auto& block = a.products[d1][d2];
    const int dim2 = a.dim(d2);
    for (int i = 0; i < a.dim(d1); ++i) {
        if (a.field.is_zero(v1[i]))
            continue;
        for (int j = 0; j < dim2; ++j) {
            if (a.field.is_zero(v2[j]))
                continue;
            const auto c = a.field.mul(v1[i], v2[j]);
            const auto& row = block[static_cast<std::size_t>(i) * dim2 + j];
            for (int k = 0; k < a.dim(target); ++k)
                out[k] = a.field.add(out[k], a.field.mul(c, row[k]));
        }
    }
    return out;
}

struct AlgebraReport {
    std::vector<std::string> violations;
    int checks = 0;

    bool ok() const { return violations.empty(); }
};

/// Exhaustive unit, associativity, and graded-commutativity checks over the
/// basis; violations are listed by the labels involved.
template <typename F>
AlgebraReport validate_algebra(const GradedAlgebra<F>& a)
{
    a.check_shape();
    AlgebraReport report;
    const auto is_zero_vec = [&](const FieldVec<F>& v) {
        for (const auto& x : v)
            if (!a.field.is_zero(x))
                return false;
        return true;
    };
    const auto minus = [&](const FieldVec<F>& u, const FieldVec<F>& v) {
        FieldVec<F> out = u;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.field.sub(out[i], v[i]);
        return out;
    };

    const FieldVec<F> one = unit_vector(a.field, 1, 0);
    for (int d = 0; d <= a.top_degree; ++d) {
        for (int i = 0; i < a.dim(d); ++i) {
            const FieldVec<F> x = unit_vector(a.field, a.dim(d), i);
            ++report.checks;
            if (!is_zero_vec(minus(multiply(a, 0, one, d, x), x)))
                report.violations.push_back("unit law fails on the left of " + a.basis[d][i]);
            ++report.checks;
            if (!is_zero_vec(minus(multiply(a, d, x, 0, one), x)))
                report.violations.push_back("unit law fails on the right of " + a.basis[d][i]);
        }
    }

    for (int d1 = 0; d1 <= a.top_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= a.top_degree; ++d2)
            for (int i = 0; i < a.dim(d1); ++i)
                for (int j = 0; j < a.dim(d2); ++j) {
                    const FieldVec<F> x = unit_vector(a.field, a.dim(d1), i);
                    const FieldVec<F> y = unit_vector(a.field, a.dim(d2), j);
                    FieldVec<F> xy = multiply(a, d1, x, d2, y);
                    FieldVec<F> yx = multiply(a, d2, y, d1, x);
                    if (d1 % 2 == 1 && d2 % 2 == 1)
                        for (auto& c : yx)
                            c = a.field.neg(c);
                    ++report.checks;
                    if (!is_zero_vec(minus(xy, yx)))
                        report.violations.push_back("graded commutativity fails at (" +
                                                    a.basis[d1][i] + ", " + a.basis[d2][j] + ")");
                    for (int d3 = 0; d1 + d2 + d3 <= a.top_degree; ++d3)
                        for (int k = 0; k < a.dim(d3); ++k) {
                            const FieldVec<F> z = unit_vector(a.field, a.dim(d3), k);
                            const FieldVec<F> left =
                                multiply(a, d1 + d2, xy, d3, z);
                            const FieldVec<F> right =
                                multiply(a, d1, x, d2 + d3, multiply(a, d2, y, d3, z));
                            ++report.checks;
                            if (!is_zero_vec(minus(left, right)))
                                report.violations.push_back(
                                    "associativity fails at (" + a.basis[d1][i] + ", " +
                                    a.basis[d2][j] + ", " + a.basis[d3][k] + ")");
                        }
                }
    return report;
}

namespace detail {

/// Longest nonzero product chain of elements drawn from a graded span
/// inside the algebra; degree-zero generators are never involved, so at
/// most top_degree factors can multiply to something nonzero.
template <typename F>
int nilpotency_length(const GradedAlgebra<F>& a, const std::vector<FieldMat<F>>& generators)
{
    bool any = false;
    for (int d = 1; d <= a.top_degree; ++d)
        if (d < static_cast<int>(generators.size()) && !generators[d].empty())
            any = true;
    if (!any)
        return 0;

    std::vector<FieldMat<F>> power(a.top_degree + 1);
    for (int d = 1; d <= a.top_degree; ++d)
        if (d < static_cast<int>(generators.size()))
            power[d] = generators[d];

    int k = 1;
    while (true) {
        std::vector<EchelonBasis<F>> next;
        next.reserve(a.top_degree + 1);
        for (int d = 0; d <= a.top_degree; ++d)
            next.emplace_back(a.field, a.dim(d));
        bool grew = false;
        for (int d1 = 1; d1 < static_cast<int>(generators.size()); ++d1)
            for (const auto& g : generators[d1])
                for (int d2 = 1; d1 + d2 <= a.top_degree; ++d2)
                    for (const auto& w : power[d2]) {
                        FieldVec<F> prod = multiply(a, d1, g, d2, w);
                        if (next[d1 + d2].insert(std::move(prod)))
                            grew = true;
                    }
        if (!grew)
            return k;
        for (int d = 0; d <= a.top_degree; ++d)
            power[d] = next[d].rows();
        ++k;
        if (k > a.top_degree + 1)
            throw std::logic_error("nilpotency: power chain failed to terminate");
    }
}

}  // namespace detail

/// Largest k with a nonzero k-fold product of positive-degree elements.
template <typename F>
int cuplength(const GradedAlgebra<F>& a)
{
    std::vector<FieldMat<F>> positive(a.top_degree + 1);
    for (int d = 1; d <= a.top_degree; ++d)
        for (int i = 0; i < a.dim(d); ++i)
            positive[d].push_back(unit_vector(a.field, a.dim(d), i));
    return detail::nilpotency_length(a, positive);
}

/// Graded tensor square with the Koszul sign:
/// (x (x) y)(z (x) w) = (-1)^{|y||z|} xz (x) yw. Basis pairs in each degree
/// are ordered by the left degree, then left index, then right index.
template <typename F>
GradedAlgebra<F> tensor_square(const GradedAlgebra<F>& a,
                               std::size_t capacity = default_capacity)
{
    GradedAlgebra<F> t(a.field);
    t.top_degree = 2 * a.top_degree;

    // offsets[d][p]: start of the block with left degree p inside degree d
    std::vector<std::vector<int>> offsets(t.top_degree + 1);
    t.basis.resize(t.top_degree + 1);
    for (int d = 0; d <= t.top_degree; ++d) {
        offsets[d].assign(a.top_degree + 2, 0);
        int at = 0;
        for (int p = 0; p <= a.top_degree; ++p) {
            offsets[d][p] = at;
            const int q = d - p;
            if (q < 0 || q > a.top_degree)
                continue;
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = 0; j < a.dim(q); ++j)
                    t.basis[d].push_back(a.basis[p][i] + "(x)" + a.basis[q][j]);
            at += a.dim(p) * a.dim(q);
        }
        offsets[d][a.top_degree + 1] = at;
    }

    t.products.assign(t.top_degree + 1, std::vector<FieldMat<F>>(t.top_degree + 1));
    for (int d1 = 0; d1 <= t.top_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= t.top_degree; ++d2) {
            check_capacity(static_cast<std::size_t>(t.dim(d1)) * t.dim(d2),
                           static_cast<std::size_t>(t.dim(d1 + d2)), capacity);
            FieldMat<F> block(static_cast<std::size_t>(t.dim(d1)) * t.dim(d2),
                              zero_vector(t.field, t.dim(d1 + d2)));
            int row = -1;
            for (int p1 = 0; p1 <= a.top_degree; ++p1) {
                const int q1 = d1 - p1;
                if (q1 < 0 || q1 > a.top_degree)
                    continue;
                for (int i1 = 0; i1 < a.dim(p1); ++i1)
                    for (int j1 = 0; j1 < a.dim(q1); ++j1) {
                        // rows pair this left factor with every right factor
                        for (int p2 = 0; p2 <= a.top_degree; ++p2) {
                            const int q2 = d2 - p2;
                            if (q2 < 0 || q2 > a.top_degree)
                                continue;
                            for (int i2 = 0; i2 < a.dim(p2); ++i2)
                                for (int j2 = 0; j2 < a.dim(q2); ++j2) {
                                    const int left_index =
                                        offsets[d1][p1] + i1 * a.dim(q1) + j1;
                                    const int right_index =
                                        offsets[d2][p2] + i2 * a.dim(q2) + j2;
                                    row = left_index * t.dim(d2) + right_index;
                                    if (p1 + p2 > a.top_degree || q1 + q2 > a.top_degree)
                                        continue;  // truncated to zero
                                    const FieldVec<F> u = multiply(
                                        a, p1, unit_vector(a.field, a.dim(p1), i1), p2,
                                        unit_vector(a.field, a.dim(p2), i2));
                                    const FieldVec<F> v = multiply(
                                        a, q1, unit_vector(a.field, a.dim(q1), j1), q2,
                                        unit_vector(a.field, a.dim(q2), j2));
                                    const bool negate = q1 % 2 == 1 && p2 % 2 == 1;
                                    auto& out = block[row];
                                    const int base = offsets[d1 + d2][p1 + p2];
                                    for (int k = 0; k < a.dim(p1 + p2); ++k) {
                                        if (a.field.is_zero(u[k]))
                                            continue;
                                        for (int l = 0; l < a.dim(q1 + q2); ++l) {
                                            auto c = a.field.mul(u[k], v[l]);
                                            if (negate)
                                                c = a.field.neg(c);
                                            const int pos =
                                                base + k * a.dim(q1 + q2) + l;
                                            out[pos] = a.field.add(out[pos], c);
                                        }
                                    }
                                }
                        }
                    }
            }
            t.products[d1][d2] = std::move(block);
        }
    return t;
}

/// Spanning vectors, per degree of the tensor square, of the kernel of the
/// multiplication map A (x) A -> A.
template <typename F>
std::vector<FieldMat<F>> zero_divisor_ideal(const GradedAlgebra<F>& a,
                                            const GradedAlgebra<F>& square)
{
    std::vector<FieldMat<F>> out(square.top_degree + 1);
    for (int d = 0; d <= square.top_degree; ++d) {
        // functionals: one row per A-basis coordinate of the product
        FieldMat<F> functionals(a.dim(d), zero_vector(a.field, square.dim(d)));
        int col = 0;
        for (int p = 0; p <= a.top_degree; ++p) {
            const int q = d - p;
            if (q < 0 || q > a.top_degree)
                continue;
            for (int i = 0; i < a.dim(p); ++i)
                for (int j = 0; j < a.dim(q); ++j) {
                    const FieldVec<F> image =
                        multiply(a, p, unit_vector(a.field, a.dim(p), i), q,
                                 unit_vector(a.field, a.dim(q), j));
                    for (int r = 0; r < a.dim(d); ++r)
                        functionals[r][col] = image[r];
                    ++col;
                }
        }
        out[d] = nullspace(square.field, std::move(functionals), square.dim(d));
    }
    return out;
}

/// Nilpotency length of the zero-divisor ideal in the tensor square: the
/// longest nonzero product of kernel elements of A (x) A -> A.
template <typename F>
int zero_divisor_cuplength(const GradedAlgebra<F>& a, std::size_t capacity = default_capacity)
{
    const GradedAlgebra<F> square = tensor_square(a, capacity);
    return detail::nilpotency_length(square, zero_divisor_ideal(a, square));
}

/// F[x]/(x^truncation) with |x| = generator_degree; labels 1, x, x^2, ...
template <typename F>
GradedAlgebra<F> truncated_polynomial_algebra(const F& field, const std::string& var,
                                              int generator_degree, int truncation)
{
    if (generator_degree < 1 || truncation < 1)
        throw std::domain_error("truncated polynomial algebra: positive degree and exponent");
    if (generator_degree % 2 == 1 && truncation > 2) {
        // odd generators square to zero unless the characteristic is two
        if (!field.is_zero(field.add(field.one(), field.one())))
            throw std::domain_error(
                "truncated polynomial algebra: odd generator needs characteristic two");
    }
    GradedAlgebra<F> a(field);
    a.top_degree = generator_degree * (truncation - 1);
    a.basis.assign(a.top_degree + 1, {});
    for (int k = 0; k < truncation; ++k)
        a.basis[k * generator_degree].push_back(
            k == 0 ? "1" : (k == 1 ? var : var + "^" + std::to_string(k)));
    a.products.assign(a.top_degree + 1, std::vector<FieldMat<F>>(a.top_degree + 1));
    for (int d1 = 0; d1 <= a.top_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= a.top_degree; ++d2) {
            FieldMat<F> block(static_cast<std::size_t>(a.dim(d1)) * a.dim(d2),
                              zero_vector(field, a.dim(d1 + d2)));
            if (!block.empty() && a.dim(d1 + d2) == 1)
                block[0][0] = field.one();
            a.products[d1][d2] = std::move(block);
        }
    return a;
}

/// Exterior algebra on generators of odd degrees; basis labels concatenate
/// the generator names in index order.
template <typename F>
GradedAlgebra<F> exterior_algebra(const F& field, const std::vector<std::string>& vars,
                                  const std::vector<int>& degrees)
{
    const int n = static_cast<int>(vars.size());
    if (degrees.size() != vars.size())
        throw std::domain_error("exterior algebra: one degree per generator");
    for (int d : degrees)
        if (d < 1 || d % 2 == 0)
            throw std::domain_error("exterior algebra: generator degrees must be odd");
    if (n > 20)
        throw std::domain_error("exterior algebra: too many generators");

    GradedAlgebra<F> a(field);
    a.top_degree = 0;
    for (int d : degrees)
        a.top_degree += d;

    const int subsets = 1 << n;
    std::vector<int> degree_of(subsets, 0);
    std::vector<int> index_of(subsets, -1);
    a.basis.assign(a.top_degree + 1, {});
    for (int s = 0; s < subsets; ++s) {
        int d = 0;
        std::string label;
        for (int i = 0; i < n; ++i)
            if (s & (1 << i)) {
                d += degrees[i];
                label += vars[i];
            }
        degree_of[s] = d;
        index_of[s] = static_cast<int>(a.basis[d].size());
        a.basis[d].push_back(s == 0 ? "1" : label);
    }

    // sign of merging two disjoint sorted subsets: each generator of t
    // passes every later-indexed generator of s, odd degrees anticommute
    const auto merge_sign = [&](int s, int t) {
        int swaps = 0;
        for (int i = 0; i < n; ++i)
            if (t & (1 << i))
                for (int j = i + 1; j < n; ++j)
                    if (s & (1 << j))
                        ++swaps;
        return swaps % 2 == 0;
    };

    a.products.assign(a.top_degree + 1, std::vector<FieldMat<F>>(a.top_degree + 1));
    for (int d1 = 0; d1 <= a.top_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= a.top_degree; ++d2)
            a.products[d1][d2] = FieldMat<F>(
                static_cast<std::size_t>(a.dim(d1)) * a.dim(d2),
                zero_vector(field, a.dim(d1 + d2)));
    for (int s = 0; s < subsets; ++s)
        for (int t = 0; t < subsets; ++t) {
            if (s & t)
                continue;
            const int d1 = degree_of[s];
            const int d2 = degree_of[t];
            const int row = index_of[s] * a.dim(d2) + index_of[t];
            auto& entry = a.products[d1][d2][row][index_of[s | t]];
            entry = merge_sign(s, t) ? field.one() : field.neg(field.one());
        }
    return a;
}

}  // namespace lstc

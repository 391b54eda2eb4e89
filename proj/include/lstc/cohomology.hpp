// Group cohomology on the reduced bar model: integer-valued cochains with
// module coefficients, the coboundary, the Alexander-Whitney cup product
// through an equivariant pairing, mod-p cohomology rings with their basis
// presentation, and the powers of the degree-one class with augmentation
// coefficients whose nonvanishing detects maximal category.

#pragma once

#include "bar.hpp"
#include "fields.hpp"
#include "graded_algebra.hpp"
#include "linalg.hpp"
#include "smith.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

inline bool same_group(const Monoid& a, const Monoid& b)
{
    return a.elements == b.elements && a.table == b.table && a.unit == b.unit;
}

inline bool same_module(const GModule& a, const GModule& b)
{
    if (!same_group(a.group, b.group) || a.rank != b.rank)
        return false;
    for (std::size_t i = 0; i < a.action.size(); ++i)
        if (!(a.action[i] == b.action[i]))
            return false;
    return true;
}

/// Normalized k-cochain on the bar model with coefficients in a module:
/// one value vector per tuple of k non-unit elements, flattened as
/// tuple_index * rank + coordinate.
struct Cochain {
    GModule module;
    int degree = 0;
    std::vector<Int> values;

    bool is_zero() const
    {
        for (const Int& v : values)
            if (v != 0)
                return false;
        return true;
    }
};

/// Number of coordinates of a k-cochain, guarded by the capacity bound.
inline std::size_t cochain_dim(const GModule& m, int degree,
                               std::size_t capacity = default_capacity)
{
    if (degree < 0)
        throw std::domain_error("cochain: negative degree");
    const std::size_t tuples =
        detail::checked_pow(static_cast<std::size_t>(m.group.size() - 1), degree, capacity);
    check_capacity(tuples, static_cast<std::size_t>(m.rank), capacity);
    return tuples * static_cast<std::size_t>(m.rank);
}

inline Cochain zero_cochain(const GModule& m, int degree,
                            std::size_t capacity = default_capacity)
{
    Cochain c;
    c.module = m;
    c.degree = degree;
    c.values.assign(cochain_dim(m, degree, capacity), Int(0));
    return c;
}

/// Matrix of the coboundary C^k(G; M) -> C^{k+1}(G; M),
///   (d f)(g_1, ..., g_{k+1}) = g_1 . f(g_2, ..., g_{k+1})
///     + sum_i (-1)^i f(..., g_i g_{i+1}, ...) + (-1)^{k+1} f(g_1, ..., g_k),
/// where merged tuples touching the unit contribute nothing.
inline IntMatrix coboundary_matrix(const GModule& m, int degree,
                                   std::size_t capacity = default_capacity)
{
    const Monoid& g = m.group;
    const std::vector<int> symbols = non_unit_elements(g);
    std::vector<int> slot(g.size(), -1);
    for (int i = 0; i < static_cast<int>(symbols.size()); ++i)
        slot[symbols[i]] = i;
    const std::size_t base = symbols.size();
    const std::size_t rank = static_cast<std::size_t>(m.rank);
    const std::size_t rows = cochain_dim(m, degree + 1, capacity);
    const std::size_t cols = cochain_dim(m, degree, capacity);
    check_capacity(rows, cols, capacity);

    IntMatrix d(static_cast<int>(rows), static_cast<int>(cols));
    if (rank == 0)
        return d;
    const int k = degree;
    const std::size_t row_tuples = rows / rank;
    for (std::size_t t = 0; t < row_tuples; ++t) {
        const std::vector<int> tuple = detail::decode_tuple(t, k + 1, symbols);
        {
            const std::vector<int> rest(tuple.begin() + 1, tuple.end());
            const std::size_t source = detail::encode_tuple(rest, slot, base);
            const IntMatrix& a = m.action[tuple[0]];
            for (std::size_t cm = 0; cm < rank; ++cm)
                for (std::size_t rm = 0; rm < rank; ++rm) {
                    const Int& coeff = a.at(static_cast<int>(rm), static_cast<int>(cm));
                    if (coeff != 0)
                        d.at(static_cast<int>(t * rank + rm),
                             static_cast<int>(source * rank + cm)) += coeff;
                }
        }
        for (int i = 1; i <= k; ++i) {
            const int merged = g.mul(tuple[i - 1], tuple[i]);
            if (merged == g.unit)
                continue;
            std::vector<int> shorter;
            shorter.reserve(k);
            for (int j = 0; j <= k; ++j) {
                if (j == i - 1)
                    shorter.push_back(merged);
                else if (j != i)
                    shorter.push_back(tuple[j]);
            }
            const std::size_t source = detail::encode_tuple(shorter, slot, base);
            const int sign = i % 2 == 0 ? 1 : -1;
            for (std::size_t mm = 0; mm < rank; ++mm)
                d.at(static_cast<int>(t * rank + mm),
                     static_cast<int>(source * rank + mm)) += sign;
        }
        {
            const std::vector<int> front(tuple.begin(), tuple.end() - 1);
            const std::size_t source = detail::encode_tuple(front, slot, base);
            const int sign = (k + 1) % 2 == 0 ? 1 : -1;
            for (std::size_t mm = 0; mm < rank; ++mm)
                d.at(static_cast<int>(t * rank + mm),
                     static_cast<int>(source * rank + mm)) += sign;
        }
    }
    return d;
}

inline Cochain coboundary(const Cochain& c, std::size_t capacity = default_capacity)
{
    Cochain out;
    out.module = c.module;
    out.degree = c.degree + 1;
    out.values = coboundary_matrix(c.module, c.degree, capacity) * c.values;
    return out;
}

/// Equivariant pairing M (x) N -> P: a matrix with one column per pair of
/// coordinates (m, n), flattened as m * rank(N) + n.
struct ModulePairing {
    GModule left;
    GModule right;
    GModule target;
    IntMatrix matrix;

    void validate() const
    {
        left.validate();
        right.validate();
        target.validate();
        if (!same_group(left.group, right.group) || !same_group(left.group, target.group))
            throw std::domain_error("pairing: all three modules must share one group");
        if (matrix.rows() != target.rank || matrix.cols() != left.rank * right.rank)
            throw std::domain_error("pairing: matrix shape does not match the module ranks");
        for (int g = 0; g < left.group.size(); ++g) {
            const IntMatrix lhs = target.action[g] * matrix;
            const IntMatrix rhs = matrix * kronecker(left.action[g], right.action[g]);
            if (!(lhs == rhs))
                throw std::domain_error("pairing: not equivariant at element " +
                                        left.group.elements[g]);
        }
    }
};

/// The identity pairing onto the tensor product module.
inline ModulePairing tensor_pairing(const GModule& a, const GModule& b,
                                    std::size_t capacity = default_capacity)
{
    ModulePairing p;
    p.left = a;
    p.right = b;
    p.target = tensor_product(a, b, capacity);
    p.matrix = IntMatrix::identity(a.rank * b.rank);
    return p;
}

/// Alexander-Whitney cup product:
///   (u cup v)(g_1, ..., g_{p+q})
///     = pairing(u(g_1, ..., g_p) (x) (g_1 ... g_p) . v(g_{p+1}, ..., g_{p+q})).
inline Cochain cup_product(const Cochain& u, const Cochain& v, const ModulePairing& pairing,
                           std::size_t capacity = default_capacity)
{
    if (!same_module(u.module, pairing.left) || !same_module(v.module, pairing.right))
        throw std::domain_error("cup product: cochain coefficients do not match the pairing");
    const Monoid& g = u.module.group;
    const std::vector<int> symbols = non_unit_elements(g);
    std::vector<int> slot(g.size(), -1);
    for (int i = 0; i < static_cast<int>(symbols.size()); ++i)
        slot[symbols[i]] = i;
    const std::size_t base = symbols.size();
    const int p = u.degree;
    const int q = v.degree;
    const std::size_t rank_m = static_cast<std::size_t>(u.module.rank);
    const std::size_t rank_n = static_cast<std::size_t>(v.module.rank);
    const std::size_t rank_p = static_cast<std::size_t>(pairing.target.rank);

    Cochain out = zero_cochain(pairing.target, p + q, capacity);
    const std::size_t tuples = rank_p == 0 ? 0 : out.values.size() / rank_p;
    for (std::size_t t = 0; t < tuples; ++t) {
        const std::vector<int> tuple = detail::decode_tuple(t, p + q, symbols);
        const std::vector<int> prefix(tuple.begin(), tuple.begin() + p);
        const std::vector<int> suffix(tuple.begin() + p, tuple.end());
        const std::size_t ui = detail::encode_tuple(prefix, slot, base);
        const std::size_t vi = detail::encode_tuple(suffix, slot, base);

        int walk = g.unit;
        for (int x : prefix)
            walk = g.mul(walk, x);

        std::vector<Int> m_val(u.values.begin() + static_cast<long>(ui * rank_m),
                               u.values.begin() + static_cast<long>((ui + 1) * rank_m));
        std::vector<Int> n_raw(v.values.begin() + static_cast<long>(vi * rank_n),
                               v.values.begin() + static_cast<long>((vi + 1) * rank_n));
        const std::vector<Int> n_val = v.module.action[walk] * n_raw;

        for (std::size_t a = 0; a < rank_m; ++a) {
            if (m_val[a] == 0)
                continue;
            for (std::size_t b = 0; b < rank_n; ++b) {
                if (n_val[b] == 0)
                    continue;
                const Int c = m_val[a] * n_val[b];
                const int col = static_cast<int>(a * rank_n + b);
                for (std::size_t r = 0; r < rank_p; ++r) {
                    const Int& w = pairing.matrix.at(static_cast<int>(r), col);
                    if (w != 0)
                        out.values[t * rank_p + r] += c * w;
                }
            }
        }
    }
    return out;
}

/// The degree-one cocycle g -> g - e with augmentation-ideal coefficients.
inline Cochain berstein_class(const Monoid& group, std::size_t capacity = default_capacity)
{
    const GModule ideal = augmentation_ideal(group);
    Cochain b = zero_cochain(ideal, 1, capacity);
    const std::vector<int> symbols = non_unit_elements(group);
    for (std::size_t t = 0; t < symbols.size(); ++t)
        b.values[t * static_cast<std::size_t>(ideal.rank) + t] = 1;
    return b;
}

struct BersteinResult {
    int degree = 0;
    bool nonzero = false;
    Cochain power;                       // the n-fold cup power, a cocycle
    std::vector<Int> solution;           // nonzero == false: primitive with d x = power
    std::vector<Rational> certificate;   // nonzero == true: y with y^T d integral, y^T power not
};

/// Decides whether the n-th cup power of the degree-one class survives in
/// H^n(G; I^{(x)n}) by exact integer linear algebra: the class vanishes
/// precisely when the power cocycle is a coboundary.
inline BersteinResult berstein_svarc_power(const Monoid& group, int n,
                                           std::size_t capacity = default_capacity)
{
    if (n < 1)
        throw std::domain_error("class power: the exponent must be positive");
    BersteinResult result;
    result.degree = n;

    const Cochain b = berstein_class(group, capacity);
    Cochain power = b;
    for (int k = 2; k <= n; ++k)
        power = cup_product(power, b, tensor_pairing(power.module, b.module, capacity),
                            capacity);
    if (!coboundary(power, capacity).is_zero())
        throw std::logic_error("class power: the cup power failed the cocycle check");

    const IntMatrix d = coboundary_matrix(power.module, n - 1, capacity);
    const IntegerSolve solve = solve_integer_system(d, power.values);
    result.nonzero = !solve.solvable;
    result.power = std::move(power);
    if (solve.solvable) {
        result.solution = solve.solution;
    } else {
        result.certificate = solve.certificate;
        if (!certify_unsolvable(d, result.power.values, result.certificate))
            throw std::logic_error("class power: the non-solvability certificate failed");
    }
    return result;
}

/// Mod-p cohomology ring of a finite group through degree n_max, presented
/// on a chosen basis with structure constants from cup products of lifted
/// representatives. Basis labels are "1" in degree zero and "h<k>_<i>"
/// above; the result passes the graded-algebra validator by construction.
inline GradedAlgebra<PrimeField> cohomology_ring(const Monoid& group, long long p, int n_max,
                                                 std::size_t capacity = default_capacity)
{
    if (n_max < 1)
        throw std::domain_error("cohomology ring: need at least degree one");
    const GModule coeff = trivial_module(group);
    const PrimeField field(p);

    // integer coboundaries, then everything mod p
    std::vector<IntMatrix> d(n_max + 1);
    for (int k = 0; k <= n_max; ++k)
        d[k] = coboundary_matrix(coeff, k, capacity);

    std::vector<std::size_t> dims(n_max + 1);
    for (int k = 0; k <= n_max; ++k)
        dims[k] = cochain_dim(coeff, k, capacity);

    // representatives of a basis of H^k, as integer lifts in 0..p-1
    std::vector<std::vector<std::vector<Int>>> reps(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        EchelonBasis<PrimeField> span(field, static_cast<int>(dims[k]));
        if (k > 0) {
            const FieldMat<PrimeField> prior = to_field_rows(field, d[k - 1]);
            for (std::size_t col = 0; col < dims[k - 1]; ++col) {
                FieldVec<PrimeField> image(dims[k], field.zero());
                for (std::size_t row = 0; row < dims[k]; ++row)
                    image[row] = prior[row][col];
                span.insert(std::move(image));
            }
        }
        const FieldMat<PrimeField> cocycles =
            nullspace(field, to_field_rows(field, d[k]), static_cast<int>(dims[k]));
        for (const auto& z : cocycles) {
            if (!span.insert(z))
                continue;
            std::vector<Int> lift;
            lift.reserve(z.size());
            for (const auto& c : z)
                lift.push_back(Int(c));
            reps[k].push_back(std::move(lift));
        }
    }
    if (reps[0].size() != 1)
        throw std::logic_error("cohomology ring: degree zero is not one-dimensional");
    reps[0][0].assign(1, Int(1));  // normalize the unit to the constant cocycle

    GradedAlgebra<PrimeField> ring(field);
    ring.top_degree = n_max;
    ring.basis.resize(n_max + 1);
    for (int k = 0; k <= n_max; ++k)
        for (std::size_t i = 0; i < reps[k].size(); ++i) {
            if (k == 0)
                ring.basis[k].push_back("1");
            else if (reps[k].size() == 1)
                ring.basis[k].push_back("h" + std::to_string(k));
            else
                ring.basis[k].push_back("h" + std::to_string(k) + "_" + std::to_string(i));
        }

    // express a cocycle's class in the representative basis: solve against
    // representatives plus coboundaries of the one-lower cochain space
    const auto class_coordinates = [&](int k, const std::vector<Int>& cocycle) {
        FieldMat<PrimeField> generators;
        for (const auto& r : reps[k]) {
            FieldVec<PrimeField> v;
            for (const Int& c : r)
                v.push_back(field.from_int(c));
            generators.push_back(std::move(v));
        }
        if (k > 0)
            for (std::size_t col = 0; col < dims[k - 1]; ++col) {
                FieldVec<PrimeField> image(dims[k], field.zero());
                for (std::size_t row = 0; row < dims[k]; ++row)
                    image[row] = field.from_int(d[k - 1].at(static_cast<int>(row),
                                                            static_cast<int>(col)));
                generators.push_back(std::move(image));
            }
        FieldVec<PrimeField> target;
        for (const Int& c : cocycle)
            target.push_back(field.from_int(c));
        const auto coeffs = solve_in_span(field, generators, target);
        if (!coeffs)
            throw std::logic_error("cohomology ring: a cup product left the cocycle space");
        return FieldVec<PrimeField>(coeffs->begin(),
                                    coeffs->begin() + static_cast<long>(reps[k].size()));
    };

    const ModulePairing mult = tensor_pairing(coeff, coeff, capacity);
    ring.products.assign(n_max + 1, std::vector<FieldMat<PrimeField>>(n_max + 1));
    for (int d1 = 0; d1 <= n_max; ++d1)
        for (int d2 = 0; d1 + d2 <= n_max; ++d2) {
            FieldMat<PrimeField> block;
            for (std::size_t i = 0; i < reps[d1].size(); ++i)
                for (std::size_t j = 0; j < reps[d2].size(); ++j) {
                    Cochain u = zero_cochain(coeff, d1, capacity);
                    u.values = reps[d1][i];
                    Cochain v = zero_cochain(coeff, d2, capacity);
                    v.values = reps[d2][j];
                    const Cochain w = cup_product(u, v, mult, capacity);
                    block.push_back(class_coordinates(d1 + d2, w.values));
                }
            ring.products[d1][d2] = std::move(block);
        }

    const AlgebraReport check = validate_algebra(ring);
    if (!check.ok())
        throw std::logic_error("cohomology ring: algebra laws failed: " + check.violations[0]);
    return ring;
}

}  // namespace lstc

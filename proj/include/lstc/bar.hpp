// Cell models of classifying spaces for a finite group G: cell counts and
// chain complexes of the reduced (normalized) bar model, and the simplicial
// chain complex of the iterated-join model of the total space. Cells of the
// bar model in degree k are tuples of k non-unit elements; tuples touching
// the unit are collapsed.

#pragma once

#include "chain_complex.hpp"
#include "gmodule.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

namespace detail {

/// base^exp as a materializable size, guarded by the capacity bound.
inline std::size_t checked_pow(std::size_t base, int exp, std::size_t capacity)
{
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > capacity / base)
            throw capacity_error("power " + std::to_string(base) + "^" + std::to_string(exp) +
                                 " exceeds the capacity bound " + std::to_string(capacity));
        out *= base;
    }
    if (out > capacity)
        throw capacity_error("power " + std::to_string(base) + "^" + std::to_string(exp) +
                             " exceeds the capacity bound " + std::to_string(capacity));
    return out;
}

/// Mixed-radix decode of an index into a tuple over `symbols`, first slot
/// most significant; encode is the inverse.
inline std::vector<int> decode_tuple(std::size_t index, int length,
                                     const std::vector<int>& symbols)
{
    std::vector<int> out(length);
    const std::size_t base = symbols.size();
    for (int i = length - 1; i >= 0; --i) {
        out[i] = symbols[index % base];
        index /= base;
    }
    return out;
}

inline std::size_t encode_tuple(const std::vector<int>& tuple, const std::vector<int>& slot,
                                std::size_t base)
{
    std::size_t out = 0;
    for (int id : tuple)
        out = out * base + static_cast<std::size_t>(slot[id]);
    return out;
}

}  // namespace detail

/// Nondegenerate cell counts per degree 0..n: p_cells for the reduced
/// classifying-space model, (|G|-1)^k, and e_cells for the total-space
/// model, |G|*(|G|-1)^k.
struct BarCellCounts {
    std::vector<Int> p_cells;
    std::vector<Int> e_cells;
};

inline BarCellCounts bar_cell_counts(const Monoid& group, int n)
{
    group.validate();
    if (!group.is_group())
        throw std::domain_error("bar cell counts: the monoid is not a group");
    if (n < 0)
        throw std::domain_error("bar cell counts: negative degree bound");
    BarCellCounts out;
    Int p = 1;
    for (int k = 0; k <= n; ++k) {
        out.p_cells.push_back(p);
        out.e_cells.push_back(Int(group.size()) * p);
        p *= group.size() - 1;
    }
    return out;
}

/// Chain complex of the reduced bar model with coefficients in m, computing
/// H_*(G; M) for degrees 0..k_max. Degree k has one generator per module
/// basis element and tuple [g_1 | ... | g_k] of non-unit elements, indexed
/// as tuple_index * rank + module_index. The boundary is
///   d(m (x) [g_1|...|g_k]) = m.g_1 (x) [g_2|...|g_k]
///     + sum_i (-1)^i m (x) [g_1|...|g_i g_{i+1}|...|g_k]
///     + (-1)^k m (x) [g_1|...|g_{k-1}],
/// with m.g = action(g^{-1}) m and merged tuples touching the unit dropped.
inline ChainComplex bar_chain_complex(const GModule& m, int k_max,
                                      std::size_t capacity = default_capacity)
{
    m.validate();
    if (k_max < 0)
        throw std::domain_error("bar complex: negative degree bound");
    const Monoid& g = m.group;
    const std::vector<int> symbols = non_unit_elements(g);
    std::vector<int> slot(g.size(), -1);
    for (int i = 0; i < static_cast<int>(symbols.size()); ++i)
        slot[symbols[i]] = i;
    const std::size_t base = symbols.size();
    const std::size_t rank = static_cast<std::size_t>(m.rank);

    ChainComplex c;
    for (int k = 0; k <= k_max; ++k) {
        const std::size_t tuples = detail::checked_pow(base, k, capacity);
        check_capacity(tuples, rank == 0 ? 1 : rank, capacity);
        c.dims.push_back(static_cast<int>(tuples * rank));
    }
    c.boundary.resize(k_max + 1);

    std::vector<int> inverse_of(g.size());
    for (int x = 0; x < g.size(); ++x)
        inverse_of[x] = g.inverse(x);

    for (int k = 1; k <= k_max; ++k) {
        check_capacity(c.dims[k - 1], c.dims[k], capacity);
        IntMatrix d(c.dims[k - 1], c.dims[k]);
        const std::size_t tuples = c.dims[k] / (rank == 0 ? 1 : rank);
        for (std::size_t t = 0; t < tuples && rank > 0; ++t) {
            const std::vector<int> tuple = detail::decode_tuple(t, k, symbols);
            // m.g_1 term: expand through the action of g_1^{-1}
            {
                std::vector<int> rest(tuple.begin() + 1, tuple.end());
                const std::size_t target = detail::encode_tuple(rest, slot, base);
                const IntMatrix& a = m.action[inverse_of[tuple[0]]];
                for (std::size_t col_m = 0; col_m < rank; ++col_m)
                    for (std::size_t row_m = 0; row_m < rank; ++row_m) {
                        const Int& coeff = a.at(static_cast<int>(row_m), static_cast<int>(col_m));
                        if (coeff != 0)
                            d.at(static_cast<int>(target * rank + row_m),
                                 static_cast<int>(t * rank + col_m)) += coeff;
                    }
            }
            // merge terms, dropped when the product is the unit
            for (int i = 1; i <= k - 1; ++i) {
                const int merged = g.mul(tuple[i - 1], tuple[i]);
                if (merged == g.unit)
                    continue;
                std::vector<int> shorter;
                shorter.reserve(k - 1);
                for (int j = 0; j < k; ++j) {
                    if (j == i - 1)
                        shorter.push_back(merged);
                    else if (j != i)
                        shorter.push_back(tuple[j]);
                }
                const std::size_t target = detail::encode_tuple(shorter, slot, base);
                const int sign = i % 2 == 0 ? 1 : -1;
                for (std::size_t mm = 0; mm < rank; ++mm)
                    d.at(static_cast<int>(target * rank + mm),
                         static_cast<int>(t * rank + mm)) += sign;
            }
            // drop the last entry
            {
                std::vector<int> front(tuple.begin(), tuple.end() - 1);
                const std::size_t target = detail::encode_tuple(front, slot, base);
                const int sign = k % 2 == 0 ? 1 : -1;
                for (std::size_t mm = 0; mm < rank; ++mm)
                    d.at(static_cast<int>(target * rank + mm),
                         static_cast<int>(t * rank + mm)) += sign;
            }
        }
        c.boundary[k] = std::move(d);
    }
    c.validate();
    return c;
}

/// Simplicial chain complex of the (n+1)-fold join model of the total
/// space: one vertex per (level, element) pair with levels 0..n, and one
/// k-simplex per choice of k+1 distinct levels plus an element for each.
/// Vertices of a simplex are ordered by level; face j removes the j-th.
inline ChainComplex join_complex(const Monoid& group, int n,
                                 std::size_t capacity = default_capacity)
{
    group.validate();
    if (!group.is_group())
        throw std::domain_error("join complex: the monoid is not a group");
    if (n < 0)
        throw std::domain_error("join complex: negative level bound");
    const std::size_t order = static_cast<std::size_t>(group.size());
    const int levels = n + 1;

    // level subsets of each size, in lexicographic order
    std::vector<std::vector<std::vector<int>>> combos(levels + 1);
    std::vector<std::map<std::vector<int>, int>> combo_index(levels + 1);
    std::vector<int> current;
    const auto emit = [&](auto&& self, int next) -> void {
        const int size = static_cast<int>(current.size());
        if (size >= 1) {
            combo_index[size][current] = static_cast<int>(combos[size].size());
            combos[size].push_back(current);
        }
        if (size == levels)
            return;
        for (int l = next; l < levels; ++l) {
            current.push_back(l);
            self(self, l + 1);
            current.pop_back();
        }
    };
    emit(emit, 0);

    ChainComplex c;
    for (int k = 0; k <= n; ++k) {
        const std::size_t assignments = detail::checked_pow(order, k + 1, capacity);
        check_capacity(combos[k + 1].size(), assignments, capacity);
        c.dims.push_back(static_cast<int>(combos[k + 1].size() * assignments));
    }
    c.boundary.resize(n + 1);

    for (int k = 1; k <= n; ++k) {
        check_capacity(c.dims[k - 1], c.dims[k], capacity);
        IntMatrix d(c.dims[k - 1], c.dims[k]);
        const std::size_t assignments = detail::checked_pow(order, k + 1, capacity);
        const std::size_t sub_assignments = assignments / order;
        for (std::size_t ci = 0; ci < combos[k + 1].size(); ++ci) {
            const std::vector<int>& combo = combos[k + 1][ci];
            for (std::size_t a = 0; a < assignments; ++a) {
                // assignment digits, lowest level most significant
                std::vector<std::size_t> digits(k + 1);
                std::size_t rest = a;
                for (int i = k; i >= 0; --i) {
                    digits[i] = rest % order;
                    rest /= order;
                }
                const std::size_t col = ci * assignments + a;
                for (int j = 0; j <= k; ++j) {
                    std::vector<int> sub_combo;
                    std::size_t sub_a = 0;
                    for (int i = 0; i <= k; ++i) {
                        if (i == j)
                            continue;
                        sub_combo.push_back(combo[i]);
                        sub_a = sub_a * order + digits[i];
                    }
                    const std::size_t row =
                        static_cast<std::size_t>(combo_index[k].at(sub_combo)) * sub_assignments +
                        sub_a;
                    d.at(static_cast<int>(row), static_cast<int>(col)) += j % 2 == 0 ? 1 : -1;
                }
            }
        }
        c.boundary[k] = std::move(d);
    }
    c.validate();
    return c;
}

/// Reduced integral homology of the join model. The join of n+1 copies of
/// a set with q+1 points is a wedge of q^{n+1} spheres of dimension n, so
/// the expected answer is free of rank (|G|-1)^{n+1} in degree n and zero
/// elsewhere; the trivial group gives a simplex, reduced homology zero.
inline std::vector<HomologyGroup> join_complex_homology(const Monoid& group, int n,
                                                        std::size_t capacity = default_capacity)
{
    const ChainComplex c = join_complex(group, n, capacity);
    HomologyResult result = homology(c, /*with_transforms=*/false);
    if (result.groups.empty() || result.groups[0].free_rank < 1)
        throw std::logic_error("join homology: missing the base component");
    result.groups[0].free_rank -= 1;
    return std::move(result.groups);
}

}  // namespace lstc

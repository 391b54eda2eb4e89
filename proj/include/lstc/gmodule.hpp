// Modules over the integral group ring of a finite group, given by one
// integer action matrix per group element. Includes the coefficient
// modules used by the classifying-space models: trivial and sign
// coefficients, the augmentation ideal, and tensor powers with the
// diagonal action.

#pragma once

#include "matrix.hpp"
#include "monoid.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

/// Element indices of a monoid with the unit removed, in element order.
inline std::vector<int> non_unit_elements(const Monoid& m)
{
    std::vector<int> out;
    for (int g = 0; g < m.size(); ++g)
        if (g != m.unit)
            out.push_back(g);
    return out;
}

/// Left module over ZG: action[g] is the matrix of g acting on Z^rank.
struct GModule {
    Monoid group;
    int rank = 0;
    std::vector<IntMatrix> action;

    void validate() const
    {
        group.validate();
        if (!group.is_group())
            throw std::domain_error(
                "module: coefficients need a group, but the monoid has non-invertible elements");
        if (rank < 0)
            throw std::domain_error("module: negative rank");
        if (static_cast<int>(action.size()) != group.size())
            throw std::domain_error("module: need one action matrix per group element");
        for (int g = 0; g < group.size(); ++g)
            if (action[g].rows() != rank || action[g].cols() != rank)
                throw std::domain_error("module: action matrix " + std::to_string(g) +
                                        " has the wrong shape");
        if (!(action[group.unit] == IntMatrix::identity(rank)))
            throw std::domain_error("module: unit must act as the identity");
        for (int g = 0; g < group.size(); ++g)
            for (int h = 0; h < group.size(); ++h)
                if (!(action[g] * action[h] == action[group.mul(g, h)]))
                    throw std::domain_error("module: action is not multiplicative at (" +
                                            group.elements[g] + ", " + group.elements[h] + ")");
    }

    /// Action of g on a column vector.
    std::vector<Int> act(int g, const std::vector<Int>& v) const { return action.at(g) * v; }
};

/// Z with every element acting as the identity.
inline GModule trivial_module(const Monoid& group)
{
    GModule m;
    m.group = group;
    m.rank = 1;
    m.action.assign(group.size(), IntMatrix::identity(1));
    m.validate();
    return m;
}

/// Z twisted by a character with values +-1 (one value per element).
inline GModule sign_module(const Monoid& group, const std::vector<int>& character)
{
    if (static_cast<int>(character.size()) != group.size())
        throw std::domain_error("sign module: need one character value per element");
    GModule m;
    m.group = group;
    m.rank = 1;
    for (int value : character) {
        if (value != 1 && value != -1)
            throw std::domain_error("sign module: character values must be +-1");
        IntMatrix a(1, 1);
        a.at(0, 0) = value;
        m.action.push_back(a);
    }
    m.validate();
    return m;
}

/// Augmentation ideal I(G) = ker(ZG -> Z) with basis {g - e : g != e},
/// ordered by the group's element order. The action is
/// h.(g - e) = (hg - e) - (h - e), where e - e contributes nothing.
inline GModule augmentation_ideal(const Monoid& group)
{
    group.validate();
    if (!group.is_group())
        throw std::domain_error("augmentation ideal: monoid must be a group");
    if (group.size() < 2)
        throw std::domain_error("augmentation ideal: the trivial group has an empty basis");
    const std::vector<int> basis = non_unit_elements(group);
    std::vector<int> slot(group.size(), -1);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        slot[basis[i]] = i;

    GModule m;
    m.group = group;
    m.rank = static_cast<int>(basis.size());
    for (int h = 0; h < group.size(); ++h) {
        IntMatrix a(m.rank, m.rank);
        for (int col = 0; col < m.rank; ++col) {
            const int g = basis[col];
            const int hg = group.mul(h, g);
            if (hg != group.unit)
                a.at(slot[hg], col) += 1;
            if (h != group.unit)
                a.at(slot[h], col) -= 1;
        }
        m.action.push_back(std::move(a));
    }
    m.validate();
    return m;
}

/// Tensor product over Z with the diagonal action; basis ordered with the
/// second factor's index varying fastest, matching the Kronecker product.
inline GModule tensor_product(const GModule& a, const GModule& b,
                              std::size_t capacity = default_capacity)
{
    if (!(a.group.table == b.group.table) || a.group.unit != b.group.unit)
        throw std::domain_error("tensor product: factors live over different groups");
    check_capacity(static_cast<std::size_t>(a.rank) * b.rank,
                   static_cast<std::size_t>(a.rank) * b.rank, capacity);
    GModule m;
    m.group = a.group;
    m.rank = a.rank * b.rank;
    for (int g = 0; g < a.group.size(); ++g)
        m.action.push_back(kronecker(a.action[g], b.action[g]));
    return m;
}

/// n-fold tensor power; the zeroth power is the trivial module.
inline GModule tensor_power(const GModule& a, int n, std::size_t capacity = default_capacity)
{
    if (n < 0)
        throw std::domain_error("tensor power: negative exponent");
    if (n == 0)
        return trivial_module(a.group);
    GModule out = a;
    for (int i = 1; i < n; ++i)
        out = tensor_product(out, a, capacity);
    return out;
}

}  // namespace lstc

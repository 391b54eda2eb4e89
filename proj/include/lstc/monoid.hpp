// Finite monoids given by explicit multiplication tables, homomorphisms
// between them, and a few standard constructions used in tests and demos.

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstc {

/// Finite monoid on elements 0..size-1 with a full multiplication table;
/// `elements` holds display names.
struct Monoid {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;
    int unit = 0;

    int size() const { return static_cast<int>(elements.size()); }

    int mul(int a, int b) const { return table[a][b]; }

    int product(const std::vector<int>& g) const
    {
        int acc = unit;
        for (int x : g)
            acc = mul(acc, x);
        return acc;
    }

    const std::string& name(int g) const { return elements[g]; }

    /// Checks table shape, entry ranges, the unit laws, and associativity.
    void validate() const
    {
        const int m = size();
        if (m == 0)
            throw std::domain_error("monoid: no elements");
        if (static_cast<int>(table.size()) != m)
            throw std::domain_error("monoid: table must have one row per element");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != m)
                throw std::domain_error("monoid: table rows must have one entry per element");
            for (int v : row)
                if (v < 0 || v >= m)
                    throw std::domain_error("monoid: table entry out of range");
        }
        if (unit < 0 || unit >= m)
            throw std::domain_error("monoid: unit out of range");
        for (int g = 0; g < m; ++g)
            if (mul(unit, g) != g || mul(g, unit) != g)
                throw std::domain_error("monoid: unit laws fail at " + elements[g]);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::domain_error("monoid: associativity fails at (" + elements[a] +
                                                ", " + elements[b] + ", " + elements[c] + ")");
    }

    bool has_inverse(int a) const
    {
        for (int b = 0; b < size(); ++b)
            if (mul(a, b) == unit && mul(b, a) == unit)
                return true;
        return false;
    }

    bool is_group() const
    {
        for (int a = 0; a < size(); ++a)
            if (!has_inverse(a))
                return false;
        return true;
    }

    int inverse(int a) const
    {
        for (int b = 0; b < size(); ++b)
            if (mul(a, b) == unit && mul(b, a) == unit)
                return b;
        throw std::domain_error("monoid: " + elements[a] + " has no inverse");
    }
};

/// Z/m with elements named "0".."m-1" and addition mod m.
inline Monoid cyclic_group(int m)
{
    if (m < 1)
        throw std::domain_error("cyclic_group: order must be positive");
    Monoid g;
    for (int i = 0; i < m; ++i)
        g.elements.push_back(std::to_string(i));
    g.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            g.table[a][b] = (a + b) % m;
    return g;
}

/// Symmetric group on n letters. Elements are the permutations of 0..n-1 in
/// lexicographic one-line order (so the unit comes first), named by their
/// 1-based one-line notation; (p * q)(i) = p(q(i)).
inline Monoid symmetric_group(int n)
{
    if (n < 1 || n > 6)
        throw std::domain_error("symmetric_group: supported for 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    Monoid g;
    for (const auto& q : perms) {
        std::string name;
        for (int v : q)
            name += std::to_string(v + 1);
        g.elements.push_back(name);
    }
    const int m = static_cast<int>(perms.size());
    const auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    g.table.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(n);
            for (int i = 0; i < n; ++i)
                comp[i] = perms[a][perms[b][i]];
            g.table[a][b] = index_of(comp);
        }
    return g;
}

/// Monoid homomorphism dom -> cod, elementwise.
struct MonoidHom {
    Monoid dom;
    Monoid cod;
    std::vector<int> image;

    int apply(int g) const { return image[g]; }

    void validate() const
    {
        dom.validate();
        cod.validate();
        if (static_cast<int>(image.size()) != dom.size())
            throw std::domain_error("hom: image must list one element per domain element");
        for (int v : image)
            if (v < 0 || v >= cod.size())
                throw std::domain_error("hom: image element out of range");
        if (image[dom.unit] != cod.unit)
            throw std::domain_error("hom: unit is not preserved");
        for (int a = 0; a < dom.size(); ++a)
            for (int b = 0; b < dom.size(); ++b)
                if (image[dom.mul(a, b)] != cod.mul(image[a], image[b]))
                    throw std::domain_error("hom: multiplicativity fails at (" + dom.elements[a] +
                                            ", " + dom.elements[b] + ")");
    }
};

inline MonoidHom identity_hom(const Monoid& g)
{
    MonoidHom h{g, g, std::vector<int>(g.size())};
    std::iota(h.image.begin(), h.image.end(), 0);
    return h;
}

/// Z/m -> Z/d, g -> g mod d; requires d to divide m.
inline MonoidHom reduction_hom(int m, int d)
{
    if (d < 1 || m < 1 || m % d != 0)
        throw std::domain_error("reduction_hom: divisor must divide the order");
    MonoidHom h{cyclic_group(m), cyclic_group(d), {}};
    for (int g = 0; g < m; ++g)
        h.image.push_back(g % d);
    return h;
}

/// Sign map S_n -> Z/2 by inversion parity.
inline MonoidHom parity_hom(int n)
{
    const Monoid sn = symmetric_group(n);
    MonoidHom h{sn, cyclic_group(2), {}};
    for (int g = 0; g < sn.size(); ++g) {
        const std::string& word = sn.elements[g];
        int inversions = 0;
        for (std::size_t i = 0; i < word.size(); ++i)
            for (std::size_t j = i + 1; j < word.size(); ++j)
                if (word[i] > word[j])
                    ++inversions;
        h.image.push_back(inversions % 2);
    }
    return h;
}

/// Calls fn for every tuple in {0..size-1}^length, in counting order.
template <typename Fn>
void for_each_tuple(int size, int length, Fn&& fn)
{
    if (size < 1 || length < 0)
        throw std::domain_error("for_each_tuple: bad dimensions");
    std::vector<int> g(length, 0);
    for (;;) {
        fn(static_cast<const std::vector<int>&>(g));
        int pos = length - 1;
        while (pos >= 0 && g[pos] == size - 1)
            g[pos--] = 0;
        if (pos < 0)
            return;
        ++g[pos];
    }
}

inline std::string tuple_names(const Monoid& monoid, const std::vector<int>& g)
{
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i)
            s += ", ";
        s += monoid.name(g[i]);
    }
    return s + ")";
}

}  // namespace lstc

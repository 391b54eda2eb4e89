// Associahedra K(n) and multiplihedra J(n) as convex polytopes with exact
// rational coordinates, together with their face maps, degeneracies, and
// randomized verification of the exchange rules between the two.
//
// K(n), n >= 2, lives in R^n:
//   t_i >= 0,  t_1 + ... + t_i <= i - 1 for all i,  sum = n - 1.
// J(n), n >= 1, is the same with every bound shifted by a = 1/2:
//   t_i >= 0,  t_1 + ... + t_i <= i - 1 + a,  sum = n - 1 + a.
// The primed chart of either polytope uses prefix sums u_i = t_1 + ... + t_i,
// where the constraints become 0 <= u_1 <= ... <= u_n with u_i capped.

#pragma once

#include "rational.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstc {

enum class Family { assoc, mult };

inline const char* family_name(Family f)
{
    return f == Family::assoc ? "assoc" : "mult";
}

inline int min_arity(Family f)
{
    return f == Family::assoc ? 2 : 1;
}

/// Shift a = 1/2 appearing in the multiplihedron constraints.
inline const Rational& mult_shift()
{
    static const Rational a(1, 2);
    return a;
}

/// Common coordinate sum of every point of the given polytope.
inline Rational coordinate_sum(Family f, int n)
{
    Rational s(n - 1);
    if (f == Family::mult)
        s += mult_shift();
    return s;
}

/// Names one polytope in one of its two charts. The default chart uses the
/// coordinates (t_1, ..., t_n); the primed chart their prefix sums.
struct PolytopeId {
    Family family = Family::assoc;
    int n = 2;
    bool primed = false;
};

inline void require_arity(Family f, int n)
{
    if (n < min_arity(f))
        throw std::domain_error(std::string(family_name(f)) + " polytope needs arity >= " +
                                std::to_string(min_arity(f)) + ", got " + std::to_string(n));
}

/// Exact membership test. A point of the wrong length is simply outside;
/// an id with arity below the family minimum is a domain error.
inline bool contains(const PolytopeId& id, const RationalVector& x)
{
    require_arity(id.family, id.n);
    if (static_cast<int>(x.size()) != id.n)
        return false;
    const bool shifted = id.family == Family::mult;
    const Rational total = coordinate_sum(id.family, id.n);
    if (!id.primed) {
        Rational prefix = 0;
        for (int i = 0; i < id.n; ++i) {
            if (x[i] < 0)
                return false;
            prefix += x[i];
            Rational cap(i);
            if (shifted)
                cap += mult_shift();
            if (prefix > cap)
                return false;
        }
        return prefix == total;
    }
    Rational prev = 0;
    for (int i = 0; i < id.n; ++i) {
        if (x[i] < prev)
            return false;
        Rational cap(i);
        if (shifted)
            cap += mult_shift();
        if (x[i] > cap)
            return false;
        prev = x[i];
    }
    return x[id.n - 1] == total;
}

inline bool in_family(Family f, const RationalVector& x)
{
    if (static_cast<int>(x.size()) < min_arity(f))
        return false;
    return contains({f, static_cast<int>(x.size()), false}, x);
}

/// Chart map t -> u, u_i = t_1 + ... + t_i. The input must lie in the
/// unprimed polytope.
inline RationalVector to_prime(Family f, const RationalVector& x)
{
    if (!in_family(f, x))
        throw std::domain_error("to_prime: point not in " + std::string(family_name(f)) +
                                " polytope " + format_tuple(x));
    RationalVector u(x.size());
    std::partial_sum(x.begin(), x.end(), u.begin());
    return u;
}

/// Inverse chart map u -> t, t_i = u_i - u_{i-1}. The input must lie in the
/// primed polytope.
inline RationalVector from_prime(Family f, const RationalVector& u)
{
    if (!contains({f, static_cast<int>(u.size()), true}, u))
        throw std::domain_error("from_prime: point not in primed " +
                                std::string(family_name(f)) + " polytope " + format_tuple(u));
    RationalVector x(u.size());
    std::adjacent_difference(u.begin(), u.end(), x.begin());
    return x;
}

/// Index (k, r, s) of a codimension-one cell glued from a product of two
/// polytopes of arities r and s, r + s = n + 1, at slot k.
struct BoundaryIndex {
    int k = 0;
    int r = 0;
    int s = 0;

    friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
};

/// Cells of the boundary of K(n): K(r) x K(s) with r + s = n + 1,
/// 2 <= s <= n - 1, 1 <= k <= r. Ordered by r, then k.
inline std::vector<BoundaryIndex> assoc_boundary_indices(int n)
{
    require_arity(Family::assoc, n);
    std::vector<BoundaryIndex> out;
    for (int r = 2; r <= n - 1; ++r) {
        const int s = n + 1 - r;
        for (int k = 1; k <= r; ++k)
            out.push_back({k, r, s});
    }
    return out;
}

/// Cells of the first kind in the boundary of J(n): J(r) x K(s) with
/// r + s = n + 1, 2 <= s <= n, 1 <= k <= r. Ordered by r, then k.
inline std::vector<BoundaryIndex> mult_boundary_indices(int n)
{
    require_arity(Family::mult, n);
    std::vector<BoundaryIndex> out;
    for (int r = 1; r <= n - 1; ++r) {
        const int s = n + 1 - r;
        for (int k = 1; k <= r; ++k)
            out.push_back({k, r, s});
    }
    return out;
}

/// Composition (r_1, ..., r_t) of n, t >= 2, indexing the boundary cell
/// K(t) x J(r_1) x ... x J(r_t) of J(n).
struct JoinIndex {
    std::vector<int> parts;

    friend bool operator==(const JoinIndex&, const JoinIndex&) = default;
};

/// Cells of the second kind in the boundary of J(n): all compositions of n
/// with at least two parts, ordered by length, then lexicographically.
inline std::vector<JoinIndex> mult_join_indices(int n)
{
    require_arity(Family::mult, n);
    std::vector<JoinIndex> out;
    std::vector<int> parts;
    const std::function<void(int, int)> extend = [&](int remaining, int slots) {
        if (slots == 1) {
            parts.push_back(remaining);
            out.push_back({parts});
            parts.pop_back();
            return;
        }
        for (int first = 1; first <= remaining - slots + 1; ++first) {
            parts.push_back(first);
            extend(remaining - first, slots - 1);
            parts.pop_back();
        }
    };
    for (int t = 2; t <= n; ++t)
        extend(n, t);
    return out;
}

namespace detail {

// Shared insertion pattern of the two two-factor face maps: sigma replaces
// slot k of rho, and rho's k-th coordinate is folded into sigma's last.
inline RationalVector glue_at_slot(int k, const RationalVector& rho, const RationalVector& sigma)
{
    const int r = static_cast<int>(rho.size());
    const int s = static_cast<int>(sigma.size());
    RationalVector out;
    out.reserve(r + s - 1);
    out.insert(out.end(), rho.begin(), rho.begin() + (k - 1));
    out.insert(out.end(), sigma.begin(), sigma.end());
    out[k + s - 2] += rho[k - 1];
    out.insert(out.end(), rho.begin() + k, rho.end());
    return out;
}

inline void require_slot(int k, int r, const char* where)
{
    if (k < 1 || k > r)
        throw std::domain_error(std::string(where) + ": slot " + std::to_string(k) +
                                " out of range 1.." + std::to_string(r));
}

inline void require_member(Family f, const RationalVector& x, const char* where)
{
    if (!in_family(f, x))
        throw std::domain_error(std::string(where) + ": factor " + format_tuple(x) +
                                " not in " + family_name(f) + " polytope");
}

}  // namespace detail

/// Face map K(r) x K(s) -> K(r + s - 1) at slot k.
inline RationalVector assoc_boundary(int k, const RationalVector& rho, const RationalVector& sigma)
{
    detail::require_member(Family::assoc, rho, "assoc_boundary");
    detail::require_member(Family::assoc, sigma, "assoc_boundary");
    detail::require_slot(k, static_cast<int>(rho.size()), "assoc_boundary");
    return detail::glue_at_slot(k, rho, sigma);
}

/// Face map J(r) x K(s) -> J(r + s - 1) at slot k.
inline RationalVector mult_boundary_k(int k, const RationalVector& rho, const RationalVector& sigma)
{
    detail::require_member(Family::mult, rho, "mult_boundary_k");
    detail::require_member(Family::assoc, sigma, "mult_boundary_k");
    detail::require_slot(k, static_cast<int>(rho.size()), "mult_boundary_k");
    return detail::glue_at_slot(k, rho, sigma);
}

/// Face map K(t) x J(r_1) x ... x J(r_t) -> J(r_1 + ... + r_t): concatenates
/// the J factors, adding (1 - a) u_i to the last coordinate of block i.
inline RationalVector mult_boundary_join(const RationalVector& tau,
                                         const std::vector<RationalVector>& rhos)
{
    const int t = static_cast<int>(rhos.size());
    if (t < 2)
        throw std::domain_error("mult_boundary_join: need at least two blocks");
    if (static_cast<int>(tau.size()) != t)
        throw std::domain_error("mult_boundary_join: outer factor arity must match block count");
    detail::require_member(Family::assoc, tau, "mult_boundary_join");
    const Rational weight = Rational(1) - mult_shift();
    RationalVector out;
    for (int i = 0; i < t; ++i) {
        detail::require_member(Family::mult, rhos[i], "mult_boundary_join");
        out.insert(out.end(), rhos[i].begin(), rhos[i].end());
        out.back() += weight * tau[i];
    }
    return out;
}

/// Prefix adjustment behind the degeneracies:
///   t'_1 = max(0, t_1 - 1),
///   t'_k = min(t_k, max_{j <= k} sum_{i <= j} (t_i - 1) - sum_{i < k} (t'_i - 1)).
/// Defined for any nonnegative tuple; the output is again nonnegative.
inline RationalVector xi(const RationalVector& t)
{
    const std::size_t n = t.size();
    if (n == 0)
        throw std::domain_error("xi: empty tuple");
    for (const auto& c : t)
        if (c < 0)
            throw std::domain_error("xi: negative coordinate in " + format_tuple(t));
    RationalVector out(n);
    Rational in_excess = t[0] - 1;
    Rational max_in_excess = in_excess;
    out[0] = std::max(Rational(0), Rational(t[0] - 1));
    Rational out_excess = out[0] - 1;
    for (std::size_t k = 1; k < n; ++k) {
        in_excess += t[k] - 1;
        max_in_excess = std::max(max_in_excess, in_excess);
        out[k] = std::min(t[k], Rational(max_in_excess - out_excess));
        out_excess += out[k] - 1;
    }
    return out;
}

namespace detail {

// Shared form of the degeneracies s_j (on K) and d_j (on J). For j = 1 the
// result is xi of the whole tuple with the first coordinate dropped; for
// j > 1, xi is applied to the tail (t_j, ..., t_n) and its first value is
// folded into t_{j-1}.
inline RationalVector drop_slot(int j, const RationalVector& tau)
{
    const int n = static_cast<int>(tau.size());
    if (j == 1) {
        RationalVector whole = xi(tau);
        return RationalVector(whole.begin() + 1, whole.end());
    }
    RationalVector tail_fixed = xi(RationalVector(tau.begin() + (j - 1), tau.end()));
    RationalVector out(tau.begin(), tau.begin() + (j - 1));
    out[j - 2] += tail_fixed[0];
    out.insert(out.end(), tail_fixed.begin() + 1, tail_fixed.end());
    return out;
}

}  // namespace detail

/// Degeneracy s_j: K(n) -> K(n - 1), n >= 3, 1 <= j <= n.
inline RationalVector assoc_degeneracy(int j, const RationalVector& tau)
{
    detail::require_member(Family::assoc, tau, "assoc_degeneracy");
    const int n = static_cast<int>(tau.size());
    if (n < 3)
        throw std::domain_error("assoc_degeneracy: arity must be at least 3");
    detail::require_slot(j, n, "assoc_degeneracy");
    return detail::drop_slot(j, tau);
}

/// Degeneracy d_j: J(n) -> J(n - 1), n >= 2, 1 <= j <= n.
inline RationalVector mult_degeneracy(int j, const RationalVector& tau)
{
    detail::require_member(Family::mult, tau, "mult_degeneracy");
    const int n = static_cast<int>(tau.size());
    if (n < 2)
        throw std::domain_error("mult_degeneracy: arity must be at least 2");
    detail::require_slot(j, n, "mult_degeneracy");
    return detail::drop_slot(j, tau);
}

/// Draws a point of the polytope: nonnegative integer tuples are rescaled to
/// the required coordinate sum and rejected while they violate a prefix cap.
inline RationalVector sample_point(const PolytopeId& id, SplitMix64& rng)
{
    require_arity(id.family, id.n);
    const Rational total = coordinate_sum(id.family, id.n);
    const PolytopeId unprimed{id.family, id.n, false};
    for (int attempt = 0; attempt < 200000; ++attempt) {
        std::vector<std::uint64_t> a(id.n);
        std::uint64_t sum = 0;
        for (int i = 0; i < id.n; ++i) {
            // the first coordinate of K(n) is pinned to zero by its cap
            a[i] = (id.family == Family::assoc && i == 0) ? 0 : rng.next_below(17);
            sum += a[i];
        }
        if (sum == 0)
            continue;
        RationalVector x(id.n);
        for (int i = 0; i < id.n; ++i)
            x[i] = Rational(a[i]) * total / sum;
        if (!contains(unprimed, x))
            continue;
        return id.primed ? to_prime(id.family, x) : x;
    }
    throw std::runtime_error("sample_point: rejection sampling did not converge");
}

inline RationalVector sample_point(const PolytopeId& id, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    return sample_point(id, rng);
}

/// One boundary cell containing a given point, together with the factor
/// points mapping onto it. `index` is set for the two-factor kinds, `parts`
/// for the join kind; `factors` is (rho, sigma) or (tau, rho_1, ..., rho_t).
struct LocatedCell {
    enum class Kind { assoc, mult, join };

    Kind kind = Kind::assoc;
    BoundaryIndex index;
    std::vector<int> parts;
    std::vector<RationalVector> factors;
};

inline const char* kind_name(LocatedCell::Kind k)
{
    switch (k) {
    case LocatedCell::Kind::assoc: return "assoc";
    case LocatedCell::Kind::mult: return "mult";
    default: return "join";
    }
}

/// Every codimension-one cell containing x, found by inverting each face
/// map: the glued coordinate is recovered from the fixed coordinate sum of
/// the inner factor, then both factors are tested for membership.
inline std::vector<LocatedCell> boundary_cell_locate(Family family, const RationalVector& x)
{
    const int n = static_cast<int>(x.size());
    require_arity(family, n);
    if (!contains({family, n, false}, x))
        throw std::domain_error("boundary_cell_locate: point not in polytope " + format_tuple(x));

    std::vector<LocatedCell> out;
    const auto try_two_factor = [&](const BoundaryIndex& ix, Family outer, LocatedCell::Kind kind) {
        const int pos = ix.k - 1;
        RationalVector sigma(x.begin() + pos, x.begin() + pos + ix.s);
        Rational partial = 0;
        for (int i = 0; i + 1 < ix.s; ++i)
            partial += sigma[i];
        const Rational inner_last = Rational(ix.s - 1) - partial;
        const Rational slot_value = sigma[ix.s - 1] - inner_last;
        sigma[ix.s - 1] = inner_last;
        RationalVector rho(x.begin(), x.begin() + pos);
        rho.push_back(slot_value);
        rho.insert(rho.end(), x.begin() + pos + ix.s, x.end());
        if (in_family(outer, rho) && in_family(Family::assoc, sigma))
            out.push_back({kind, ix, {}, {rho, sigma}});
    };

    if (family == Family::assoc) {
        for (const auto& ix : assoc_boundary_indices(n))
            try_two_factor(ix, Family::assoc, LocatedCell::Kind::assoc);
        return out;
    }

    for (const auto& ix : mult_boundary_indices(n))
        try_two_factor(ix, Family::mult, LocatedCell::Kind::mult);

    const Rational weight = Rational(1) - mult_shift();
    for (const auto& jx : mult_join_indices(n)) {
        const int t = static_cast<int>(jx.parts.size());
        RationalVector tau(t);
        std::vector<RationalVector> rhos;
        rhos.reserve(t);
        int offset = 0;
        bool viable = true;
        for (int i = 0; i < t; ++i) {
            const int len = jx.parts[i];
            RationalVector rho(x.begin() + offset, x.begin() + offset + len);
            Rational partial = 0;
            for (int l = 0; l + 1 < len; ++l)
                partial += rho[l];
            const Rational block_last = coordinate_sum(Family::mult, len) - partial;
            tau[i] = (rho[len - 1] - block_last) / weight;
            rho[len - 1] = block_last;
            if (!in_family(Family::mult, rho)) {
                viable = false;
                break;
            }
            rhos.push_back(std::move(rho));
            offset += len;
        }
        if (viable && in_family(Family::assoc, tau))
            out.push_back({LocatedCell::Kind::join, {}, jx.parts, [&] {
                               std::vector<RationalVector> fs{tau};
                               fs.insert(fs.end(), rhos.begin(), rhos.end());
                               return fs;
                           }()});
    }
    return out;
}

/// The face and degeneracy maps used by verify_identities, injectable so a
/// perturbed map is observed as a failed exchange rule.
struct FaceMaps {
    std::function<RationalVector(int, const RationalVector&, const RationalVector&)> assoc_boundary =
        [](int k, const RationalVector& rho, const RationalVector& sigma) {
            return lstc::assoc_boundary(k, rho, sigma);
        };
    std::function<RationalVector(int, const RationalVector&)> assoc_degeneracy =
        [](int j, const RationalVector& tau) { return lstc::assoc_degeneracy(j, tau); };
    std::function<RationalVector(int, const RationalVector&, const RationalVector&)> mult_boundary_k =
        [](int k, const RationalVector& rho, const RationalVector& sigma) {
            return lstc::mult_boundary_k(k, rho, sigma);
        };
    std::function<RationalVector(const RationalVector&, const std::vector<RationalVector>&)>
        mult_boundary_join = [](const RationalVector& tau, const std::vector<RationalVector>& rhos) {
            return lstc::mult_boundary_join(tau, rhos);
        };
    std::function<RationalVector(int, const RationalVector&)> mult_degeneracy =
        [](int j, const RationalVector& tau) { return lstc::mult_degeneracy(j, tau); };
};

/// Right side of the exchange rule for s_j applied to the cell (k, r, s)
/// of K(n), n = r + s - 1, 1 <= j <= n:
///   j < k:            boundary(k-1) of (s_j rho, sigma), collapsing to
///                     sigma when r = 2 (j = 1, k = 2);
///   k <= j < k + s:   boundary(k) of (rho, s_{j-k+1} sigma), collapsing to
///                     rho when s = 2;
///   k + s <= j <= n:  boundary(k) of (s_{j-s+1} rho, sigma), collapsing to
///                     sigma when r = 2 (j = n, k = 1).
inline RationalVector assoc_degeneracy_boundary_rhs(int j, int k, const RationalVector& rho,
                                                    const RationalVector& sigma,
                                                    const FaceMaps& maps = FaceMaps())
{
    const int r = static_cast<int>(rho.size());
    const int s = static_cast<int>(sigma.size());
    const int n = r + s - 1;
    if (j < 1 || j > n)
        throw std::domain_error("assoc_degeneracy_boundary_rhs: slot out of range");
    if (j < k) {
        if (r > 2)
            return maps.assoc_boundary(k - 1, maps.assoc_degeneracy(j, rho), sigma);
        return sigma;
    }
    if (j < k + s) {
        if (s > 2)
            return maps.assoc_boundary(k, rho, maps.assoc_degeneracy(j - k + 1, sigma));
        return rho;
    }
    if (r > 2)
        return maps.assoc_boundary(k, maps.assoc_degeneracy(j - s + 1, rho), sigma);
    return sigma;
}

/// Right side of the exchange rule for d_j applied to the cell (k, r, s) of
/// the first kind of J(n); same slot arithmetic as the K case, but the
/// outer factor never collapses because J(1) exists.
inline RationalVector mult_degeneracy_boundary_rhs(int j, int k, const RationalVector& rho,
                                                   const RationalVector& sigma,
                                                   const FaceMaps& maps = FaceMaps())
{
    const int r = static_cast<int>(rho.size());
    const int s = static_cast<int>(sigma.size());
    const int n = r + s - 1;
    if (j < 1 || j > n)
        throw std::domain_error("mult_degeneracy_boundary_rhs: slot out of range");
    if (j < k)
        return maps.mult_boundary_k(k - 1, maps.mult_degeneracy(j, rho), sigma);
    if (j < k + s) {
        if (s > 2)
            return maps.mult_boundary_k(k, rho, maps.assoc_degeneracy(j - k + 1, sigma));
        return rho;
    }
    return maps.mult_boundary_k(k, maps.mult_degeneracy(j - s + 1, rho), sigma);
}

/// Right side of the exchange rule for d_j applied to the join cell
/// (r_1, ..., r_t) of J(n). Slot j lands in block b (1-based offset o):
///   r_b > 1:          the degeneracy d_o passes into block b;
///   r_b = 1, t > 2:   block b is erased and s_b passes to the outer factor;
///   r_b = 1, t = 2:   the whole cell collapses to the other block.
inline RationalVector mult_degeneracy_join_rhs(int j, const RationalVector& tau,
                                               const std::vector<RationalVector>& rhos,
                                               const FaceMaps& maps = FaceMaps())
{
    const int t = static_cast<int>(rhos.size());
    int block = 0;
    int offset = j;
    while (block < t && offset > static_cast<int>(rhos[block].size())) {
        offset -= static_cast<int>(rhos[block].size());
        ++block;
    }
    if (block == t)
        throw std::domain_error("mult_degeneracy_join_rhs: slot out of range");
    if (static_cast<int>(rhos[block].size()) > 1) {
        auto blocks = rhos;
        blocks[block] = maps.mult_degeneracy(offset, blocks[block]);
        return maps.mult_boundary_join(tau, blocks);
    }
    if (t > 2) {
        auto blocks = rhos;
        blocks.erase(blocks.begin() + block);
        return maps.mult_boundary_join(maps.assoc_degeneracy(block + 1, tau), blocks);
    }
    return block == 0 ? rhos[1] : rhos[0];
}

struct TableCounts {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
};

struct IdentityReport {
    Family family = Family::assoc;
    int n_max = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::map<std::string, TableCounts> tables;
    std::vector<std::string> failure_samples;

    std::uint64_t total_checks() const
    {
        std::uint64_t c = 0;
        for (const auto& [name, tc] : tables)
            c += tc.checks;
        return c;
    }
    std::uint64_t total_failures() const
    {
        std::uint64_t c = 0;
        for (const auto& [name, tc] : tables)
            c += tc.failures;
        return c;
    }
    bool ok() const { return total_failures() == 0; }
};

namespace detail {

inline std::uint64_t case_seed(std::uint64_t seed, const std::vector<std::uint64_t>& words)
{
    std::uint64_t h = seed;
    for (auto w : words)
        h = hash_combine(h, w);
    return h;
}

inline void record(IdentityReport& report, const std::string& table, bool ok,
                   const std::function<std::string()>& describe)
{
    auto& counts = report.tables[table];
    ++counts.checks;
    if (!ok) {
        ++counts.failures;
        if (report.failure_samples.size() < 8)
            report.failure_samples.push_back(describe());
    }
}

}  // namespace detail

/// Samples the degeneracy/face exchange rules of one family with exact
/// comparisons. Each (n, cell, j, iteration) case draws its factors from a
/// seed derived from the case labels, so the outcome does not depend on
/// evaluation order. Non-membership of a composite and thrown domain errors
/// both count as failures.
inline IdentityReport verify_identities(Family family, int n_max, int samples, std::uint64_t seed,
                                        const FaceMaps& maps = FaceMaps())
{
    require_arity(family, n_max);
    if (samples < 1)
        throw std::domain_error("verify_identities: samples must be positive");
    IdentityReport report{family, n_max, samples, seed, {}, {}};

    const auto check_two_factor = [&](const std::string& table, Family outer, int n,
                                      const BoundaryIndex& ix, int j, int iter) {
        SplitMix64 rng(detail::case_seed(
            seed, {static_cast<std::uint64_t>(outer == Family::assoc ? 1 : 2),
                   static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(ix.k),
                   static_cast<std::uint64_t>(ix.r), static_cast<std::uint64_t>(j),
                   static_cast<std::uint64_t>(iter)}));
        const RationalVector rho = sample_point({outer, ix.r, false}, rng);
        const RationalVector sigma = sample_point({Family::assoc, ix.s, false}, rng);
        bool ok = false;
        std::string note;
        try {
            RationalVector lhs, rhs;
            if (outer == Family::assoc) {
                lhs = maps.assoc_degeneracy(j, maps.assoc_boundary(ix.k, rho, sigma));
                rhs = assoc_degeneracy_boundary_rhs(j, ix.k, rho, sigma, maps);
            }
            else {
                lhs = maps.mult_degeneracy(j, maps.mult_boundary_k(ix.k, rho, sigma));
                rhs = mult_degeneracy_boundary_rhs(j, ix.k, rho, sigma, maps);
            }
            ok = lhs == rhs && in_family(outer, lhs);
            note = "lhs=" + format_tuple(lhs) + " rhs=" + format_tuple(rhs);
        }
        catch (const std::exception& e) {
            note = std::string("error: ") + e.what();
        }
        detail::record(report, table, ok, [&] {
            return std::string(family_name(outer)) + " n=" + std::to_string(n) +
                   " k=" + std::to_string(ix.k) + " r=" + std::to_string(ix.r) +
                   " s=" + std::to_string(ix.s) + " j=" + std::to_string(j) + " rho=" +
                   format_tuple(rho) + " sigma=" + format_tuple(sigma) + " " + note;
        });
    };

    if (family == Family::assoc) {
        for (int n = 3; n <= n_max; ++n)
            for (const auto& ix : assoc_boundary_indices(n))
                for (int j = 1; j <= n; ++j)
                    for (int iter = 0; iter < samples; ++iter)
                        check_two_factor("degeneracy_boundary", Family::assoc, n, ix, j, iter);
        return report;
    }

    for (int n = 2; n <= n_max; ++n)
        for (const auto& ix : mult_boundary_indices(n))
            for (int j = 1; j <= n; ++j)
                for (int iter = 0; iter < samples; ++iter)
                    check_two_factor("degeneracy_boundary", Family::mult, n, ix, j, iter);

    for (int n = 2; n <= n_max; ++n) {
        for (const auto& jx : mult_join_indices(n)) {
            const int t = static_cast<int>(jx.parts.size());
            for (int j = 1; j <= n; ++j) {
                for (int iter = 0; iter < samples; ++iter) {
                    std::vector<std::uint64_t> words{3, static_cast<std::uint64_t>(n),
                                                     static_cast<std::uint64_t>(j),
                                                     static_cast<std::uint64_t>(iter)};
                    for (int p : jx.parts)
                        words.push_back(static_cast<std::uint64_t>(p));
                    SplitMix64 rng(detail::case_seed(seed, words));
                    const RationalVector tau = sample_point({Family::assoc, t, false}, rng);
                    std::vector<RationalVector> rhos;
                    rhos.reserve(t);
                    for (int p : jx.parts)
                        rhos.push_back(sample_point({Family::mult, p, false}, rng));
                    bool ok = false;
                    std::string note;
                    try {
                        const RationalVector lhs =
                            maps.mult_degeneracy(j, maps.mult_boundary_join(tau, rhos));
                        const RationalVector rhs = mult_degeneracy_join_rhs(j, tau, rhos, maps);
                        ok = lhs == rhs && in_family(Family::mult, lhs);
                        note = "lhs=" + format_tuple(lhs) + " rhs=" + format_tuple(rhs);
                    }
                    catch (const std::exception& e) {
                        note = std::string("error: ") + e.what();
                    }
                    detail::record(report, "degeneracy_join", ok, [&] {
                        std::string parts_str;
                        for (int p : jx.parts)
                            parts_str += (parts_str.empty() ? "" : ",") + std::to_string(p);
                        return "join n=" + std::to_string(n) + " parts=(" + parts_str + ") j=" +
                               std::to_string(j) + " tau=" + format_tuple(tau) + " " + note;
                    });
                }
            }
        }
    }
    return report;
}

}  // namespace lstc

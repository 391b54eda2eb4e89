// Higher homotopy-associative structure on a finite monoid: forms indexed
// by associahedra, maps between them indexed by multiplihedra, and exact
// validators for the defining axioms.
//
// A form is a family alpha_n : K(n) x G^n -> G, with alpha_1 the identity.
// Its axioms:
//   (boundary)  alpha at a glued point factors through the two glued cells;
//   (unit)      a unit argument at slot j drops to alpha_{n-1} through s_j.
// A map form over a homomorphism f: G -> H is beta_n : J(n) x G^n -> H with
//   (boundary)  compatibility with the two-factor cells of J(n);
//   (join)      compatibility with the join cells K(t) x J(r_1) x ... x J(r_t);
//   (unit)      a unit argument at slot j < n drops through d_j. Whether the
//               rule is also enforced at slot n is a caller choice.

#pragma once

#include "monoid.hpp"
#include "polytopes.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lstc {

struct AInftyForm {
    Monoid monoid;
    int n_max = 2;
    /// alpha(n, tau, g) with tau in K(n) for n >= 2 and tau empty for n = 1.
    std::function<int(int, const RationalVector&, const std::vector<int>&)> alpha;

    int apply(int n, const RationalVector& tau, const std::vector<int>& g) const
    {
        if (n < 1 || n > n_max)
            throw std::domain_error("form: arity " + std::to_string(n) + " out of range 1.." +
                                    std::to_string(n_max));
        if (static_cast<int>(g.size()) != n)
            throw std::domain_error("form: argument count does not match arity");
        return alpha(n, tau, g);
    }
};

/// The strictly associative form alpha_n(tau; g) = g_1 g_2 ... g_n carried
/// by any monoid. The polytope point is validated, then ignored.
inline AInftyForm canonical_form(const Monoid& monoid, int n_max)
{
    monoid.validate();
    if (n_max < 2)
        throw std::domain_error("canonical_form: n_max must be at least 2");
    AInftyForm form{monoid, n_max, nullptr};
    const Monoid m = monoid;
    form.alpha = [m](int n, const RationalVector& tau, const std::vector<int>& g) {
        if (n == 1) {
            if (!tau.empty())
                throw std::domain_error("form: arity-1 point must be empty");
        }
        else if (!contains({Family::assoc, n, false}, tau))
            throw std::domain_error("form: point not in assoc polytope " + format_tuple(tau));
        for (int x : g)
            if (x < 0 || x >= m.size())
                throw std::domain_error("form: element out of range");
        return m.product(g);
    };
    return form;
}

struct AInftyMapForm {
    MonoidHom hom;
    int n_max = 2;
    /// beta(n, tau, g) with tau in J(n), n >= 1.
    std::function<int(int, const RationalVector&, const std::vector<int>&)> beta;

    int apply(int n, const RationalVector& tau, const std::vector<int>& g) const
    {
        if (n < 1 || n > n_max)
            throw std::domain_error("map form: arity " + std::to_string(n) + " out of range 1.." +
                                    std::to_string(n_max));
        if (static_cast<int>(g.size()) != n)
            throw std::domain_error("map form: argument count does not match arity");
        return beta(n, tau, g);
    }
};

/// The map form beta_n(tau; g) = f(g_1 g_2 ... g_n) induced by a
/// homomorphism f. The polytope point is validated, then ignored.
inline AInftyMapForm hom_map_form(const MonoidHom& hom, int n_max)
{
    hom.validate();
    if (n_max < 1)
        throw std::domain_error("hom_map_form: n_max must be at least 1");
    AInftyMapForm form{hom, n_max, nullptr};
    const MonoidHom h = hom;
    form.beta = [h](int n, const RationalVector& tau, const std::vector<int>& g) {
        if (!contains({Family::mult, n, false}, tau))
            throw std::domain_error("map form: point not in mult polytope " + format_tuple(tau));
        for (int x : g)
            if (x < 0 || x >= h.dom.size())
                throw std::domain_error("map form: element out of range");
        return h.apply(h.dom.product(g));
    };
    return form;
}

struct FormReport {
    int n_max = 0;
    int point_samples = 0;
    std::uint64_t seed = 0;
    std::map<std::string, TableCounts> axioms;
    std::vector<std::string> failure_samples;

    std::uint64_t total_checks() const
    {
        std::uint64_t c = 0;
        for (const auto& [name, tc] : axioms)
            c += tc.checks;
        return c;
    }
    std::uint64_t total_failures() const
    {
        std::uint64_t c = 0;
        for (const auto& [name, tc] : axioms)
            c += tc.failures;
        return c;
    }
    bool ok() const { return total_failures() == 0; }
};

namespace detail {

template <typename Describe>
void record_axiom(FormReport& report, const std::string& axiom, bool ok, Describe&& describe)
{
    auto& counts = report.axioms[axiom];
    ++counts.checks;
    if (!ok) {
        ++counts.failures;
        if (report.failure_samples.size() < 8)
            report.failure_samples.push_back(describe());
    }
}

}  // namespace detail

/// Checks the boundary and unit axioms of a form: polytope points are
/// sampled (point_samples per cell, seeded per case), element tuples are
/// enumerated exhaustively. Thrown domain errors count as failures.
inline FormReport validate_form(const AInftyForm& form, int point_samples, std::uint64_t seed)
{
    form.monoid.validate();
    if (point_samples < 1)
        throw std::domain_error("validate_form: point_samples must be positive");
    const int m = form.monoid.size();
    const int e = form.monoid.unit;
    FormReport report{form.n_max, point_samples, seed, {}, {}};

    for (int n = 3; n <= form.n_max; ++n) {
        for (const auto& ix : assoc_boundary_indices(n)) {
            for (int iter = 0; iter < point_samples; ++iter) {
                SplitMix64 rng(detail::case_seed(
                    seed, {10, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(ix.k),
                           static_cast<std::uint64_t>(ix.r), static_cast<std::uint64_t>(iter)}));
                const RationalVector rho = sample_point({Family::assoc, ix.r, false}, rng);
                const RationalVector sigma = sample_point({Family::assoc, ix.s, false}, rng);
                const RationalVector glued = assoc_boundary(ix.k, rho, sigma);
                for_each_tuple(m, n, [&](const std::vector<int>& g) {
                    bool ok = false;
                    std::string note;
                    try {
                        const int lhs = form.apply(n, glued, g);
                        const std::vector<int> inner(g.begin() + ix.k - 1,
                                                     g.begin() + ix.k - 1 + ix.s);
                        std::vector<int> outer(g.begin(), g.begin() + ix.k - 1);
                        outer.push_back(form.apply(ix.s, sigma, inner));
                        outer.insert(outer.end(), g.begin() + ix.k - 1 + ix.s, g.end());
                        const int rhs = form.apply(ix.r, rho, outer);
                        ok = lhs == rhs;
                        note = "lhs=" + form.monoid.name(lhs) + " rhs=" + form.monoid.name(rhs);
                    }
                    catch (const std::exception& ex) {
                        note = std::string("error: ") + ex.what();
                    }
                    detail::record_axiom(report, "boundary", ok, [&] {
                        return "n=" + std::to_string(n) + " k=" + std::to_string(ix.k) +
                               " r=" + std::to_string(ix.r) + " s=" + std::to_string(ix.s) +
                               " g=" + tuple_names(form.monoid, g) + " " + note;
                    });
                });
            }
        }
    }

    for (int n = 2; n <= form.n_max; ++n) {
        for (int iter = 0; iter < point_samples; ++iter) {
            SplitMix64 rng(detail::case_seed(
                seed, {11, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(iter)}));
            const RationalVector tau = sample_point({Family::assoc, n, false}, rng);
            for (int j = 1; j <= n; ++j) {
                const RationalVector dropped =
                    n == 2 ? RationalVector{} : assoc_degeneracy(j, tau);
                for_each_tuple(m, n - 1, [&](const std::vector<int>& rest) {
                    bool ok = false;
                    std::string note;
                    try {
                        std::vector<int> g = rest;
                        g.insert(g.begin() + (j - 1), e);
                        const int lhs = form.apply(n, tau, g);
                        const int rhs = n == 2 ? rest[0] : form.apply(n - 1, dropped, rest);
                        ok = lhs == rhs;
                        note = "lhs=" + form.monoid.name(lhs) + " rhs=" + form.monoid.name(rhs);
                    }
                    catch (const std::exception& ex) {
                        note = std::string("error: ") + ex.what();
                    }
                    detail::record_axiom(report, "unit", ok, [&] {
                        return "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                               " rest=" + tuple_names(form.monoid, rest) + " " + note;
                    });
                });
            }
        }
    }
    return report;
}

/// Checks the boundary, join, and unit axioms of a map form against forms
/// on its domain and codomain monoids. The forms must cover the arities the
/// axioms consume (domain up to n_max, codomain up to n_max). Set
/// unit_axiom_at_last_slot to also enforce the unit rule at slot j = n.
inline FormReport validate_map_form(const AInftyMapForm& map_form, const AInftyForm& domain_form,
                                    const AInftyForm& codomain_form, int point_samples,
                                    std::uint64_t seed, bool unit_axiom_at_last_slot = false)
{
    map_form.hom.validate();
    if (point_samples < 1)
        throw std::domain_error("validate_map_form: point_samples must be positive");
    if (domain_form.monoid.table != map_form.hom.dom.table ||
        domain_form.monoid.unit != map_form.hom.dom.unit)
        throw std::domain_error("validate_map_form: domain form is over a different monoid");
    if (codomain_form.monoid.table != map_form.hom.cod.table ||
        codomain_form.monoid.unit != map_form.hom.cod.unit)
        throw std::domain_error("validate_map_form: codomain form is over a different monoid");
    if (domain_form.n_max < map_form.n_max || codomain_form.n_max < map_form.n_max)
        throw std::domain_error("validate_map_form: forms must cover arities up to n_max");

    const int m = map_form.hom.dom.size();
    const int e = map_form.hom.dom.unit;
    FormReport report{map_form.n_max, point_samples, seed, {}, {}};

    for (int n = 2; n <= map_form.n_max; ++n) {
        for (const auto& ix : mult_boundary_indices(n)) {
            for (int iter = 0; iter < point_samples; ++iter) {
                SplitMix64 rng(detail::case_seed(
                    seed, {20, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(ix.k),
                           static_cast<std::uint64_t>(ix.r), static_cast<std::uint64_t>(iter)}));
                const RationalVector rho = sample_point({Family::mult, ix.r, false}, rng);
                const RationalVector sigma = sample_point({Family::assoc, ix.s, false}, rng);
                const RationalVector glued = mult_boundary_k(ix.k, rho, sigma);
                for_each_tuple(m, n, [&](const std::vector<int>& g) {
                    bool ok = false;
                    std::string note;
                    try {
                        const int lhs = map_form.apply(n, glued, g);
                        const std::vector<int> inner(g.begin() + ix.k - 1,
                                                     g.begin() + ix.k - 1 + ix.s);
                        std::vector<int> outer(g.begin(), g.begin() + ix.k - 1);
                        outer.push_back(domain_form.apply(ix.s, sigma, inner));
                        outer.insert(outer.end(), g.begin() + ix.k - 1 + ix.s, g.end());
                        const int rhs = map_form.apply(ix.r, rho, outer);
                        ok = lhs == rhs;
                        note = "lhs=" + map_form.hom.cod.name(lhs) +
                               " rhs=" + map_form.hom.cod.name(rhs);
                    }
                    catch (const std::exception& ex) {
                        note = std::string("error: ") + ex.what();
                    }
                    detail::record_axiom(report, "boundary", ok, [&] {
                        return "n=" + std::to_string(n) + " k=" + std::to_string(ix.k) +
                               " r=" + std::to_string(ix.r) + " s=" + std::to_string(ix.s) +
                               " g=" + tuple_names(map_form.hom.dom, g) + " " + note;
                    });
                });
            }
        }

        for (const auto& jx : mult_join_indices(n)) {
            const int t = static_cast<int>(jx.parts.size());
            for (int iter = 0; iter < point_samples; ++iter) {
                std::vector<std::uint64_t> words{21, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(iter)};
                for (int p : jx.parts)
                    words.push_back(static_cast<std::uint64_t>(p));
                SplitMix64 rng(detail::case_seed(seed, words));
                const RationalVector tau = sample_point({Family::assoc, t, false}, rng);
                std::vector<RationalVector> rhos;
                rhos.reserve(t);
                for (int p : jx.parts)
                    rhos.push_back(sample_point({Family::mult, p, false}, rng));
                const RationalVector glued = mult_boundary_join(tau, rhos);
                for_each_tuple(m, n, [&](const std::vector<int>& g) {
                    bool ok = false;
                    std::string note;
                    try {
                        const int lhs = map_form.apply(n, glued, g);
                        std::vector<int> images;
                        images.reserve(t);
                        int offset = 0;
                        for (int i = 0; i < t; ++i) {
                            const std::vector<int> block(g.begin() + offset,
                                                         g.begin() + offset + jx.parts[i]);
                            images.push_back(map_form.apply(jx.parts[i], rhos[i], block));
                            offset += jx.parts[i];
                        }
                        const int rhs = codomain_form.apply(t, tau, images);
                        ok = lhs == rhs;
                        note = "lhs=" + map_form.hom.cod.name(lhs) +
                               " rhs=" + map_form.hom.cod.name(rhs);
                    }
                    catch (const std::exception& ex) {
                        note = std::string("error: ") + ex.what();
                    }
                    detail::record_axiom(report, "join", ok, [&] {
                        std::string parts_str;
                        for (int p : jx.parts)
                            parts_str += (parts_str.empty() ? "" : ",") + std::to_string(p);
                        return "n=" + std::to_string(n) + " parts=(" + parts_str + ")" +
                               " g=" + tuple_names(map_form.hom.dom, g) + " " + note;
                    });
                });
            }
        }
    }

    for (int n = 2; n <= map_form.n_max; ++n) {
        for (int iter = 0; iter < point_samples; ++iter) {
            SplitMix64 rng(detail::case_seed(
                seed, {22, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(iter)}));
            const RationalVector tau = sample_point({Family::mult, n, false}, rng);
            const int j_top = unit_axiom_at_last_slot ? n : n - 1;
            for (int j = 1; j <= j_top; ++j) {
                const RationalVector dropped = mult_degeneracy(j, tau);
                for_each_tuple(m, n - 1, [&](const std::vector<int>& rest) {
                    bool ok = false;
                    std::string note;
                    try {
                        std::vector<int> g = rest;
                        g.insert(g.begin() + (j - 1), e);
                        const int lhs = map_form.apply(n, tau, g);
                        const int rhs = map_form.apply(n - 1, dropped, rest);
                        ok = lhs == rhs;
                        note = "lhs=" + map_form.hom.cod.name(lhs) +
                               " rhs=" + map_form.hom.cod.name(rhs);
                    }
                    catch (const std::exception& ex) {
                        note = std::string("error: ") + ex.what();
                    }
                    detail::record_axiom(report, "unit", ok, [&] {
                        return "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                               " rest=" + tuple_names(map_form.hom.dom, rest) + " " + note;
                    });
                });
            }
        }
    }
    return report;
}

}  // namespace lstc

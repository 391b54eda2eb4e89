// File formats: monoids, homomorphisms, and graded algebras load from JSON
// documents, and the report types serialize back to JSON for the structured
// output mode of the command line. Keys inside every emitted document are
// sorted, so identical inputs produce byte-identical output.

#pragma once

#include "a_infty.hpp"
#include "bar.hpp"
#include "bounds.hpp"
#include "chain_complex.hpp"
#include "cohomology.hpp"
#include "graded_algebra.hpp"
#include "monoid.hpp"
#include "polytopes.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace lstc {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::domain_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Monoids and homomorphisms: {"elements": [...], "table": [[...]], "unit": 0}

inline Monoid monoid_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
        throw std::domain_error("monoid file needs \"elements\" and \"table\"");
    Monoid m;
    m.elements = j.at("elements").get<std::vector<std::string>>();
    m.table = j.at("table").get<std::vector<std::vector<int>>>();
    m.unit = j.value("unit", 0);
    m.validate();
    return m;
}

inline Monoid load_monoid(const std::string& path)
{
    try {
        return monoid_from_json(load_json_file(path));
    } catch (const Json::exception& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

inline MonoidHom hom_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("image"))
        throw std::domain_error("hom file needs \"dom\", \"cod\", and \"image\"");
    MonoidHom h;
    h.dom = monoid_from_json(j.at("dom"));
    h.cod = monoid_from_json(j.at("cod"));
    h.image = j.at("image").get<std::vector<int>>();
    h.validate();
    return h;
}

inline MonoidHom load_hom(const std::string& path)
{
    try {
        return hom_from_json(load_json_file(path));
    } catch (const Json::exception& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Graded algebras. The field key is "Q" or "F<p>"; basis lists labels per
// degree starting at 0; products list entries
//   {"left": label, "right": label, "value": {label: coefficient, ...}}
// with coefficients as "p/q" strings (integers also accepted). Omitted
// products are zero, except that products with the unit are filled in
// automatically.

using LoadedAlgebra = std::variant<GradedAlgebra<RationalField>, GradedAlgebra<PrimeField>>;

namespace detail {

inline std::string coefficient_string(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw std::domain_error("algebra coefficients must be strings or integers");
}

template <typename F>
GradedAlgebra<F> algebra_from_json_with_field(const Json& j, const F& field)
{
    GradedAlgebra<F> a(field);
    a.top_degree = j.at("top_degree").get<int>();
    a.basis = j.at("basis").get<std::vector<std::vector<std::string>>>();
    if (static_cast<int>(a.basis.size()) != a.top_degree + 1)
        throw std::domain_error("algebra file: basis must list degrees 0.." +
                                std::to_string(a.top_degree));

    std::map<std::string, std::pair<int, int>> slot;
    for (int d = 0; d <= a.top_degree; ++d)
        for (int i = 0; i < a.dim(d); ++i)
            if (!slot.emplace(a.basis[d][i], std::make_pair(d, i)).second)
                throw std::domain_error("algebra file: duplicate basis label " + a.basis[d][i]);

    a.products.assign(a.top_degree + 1, {});
    for (int d1 = 0; d1 <= a.top_degree; ++d1) {
        a.products[d1].assign(a.top_degree + 1, {});
        for (int d2 = 0; d1 + d2 <= a.top_degree; ++d2)
            a.products[d1][d2].assign(static_cast<std::size_t>(a.dim(d1)) * a.dim(d2),
                                      FieldVec<F>(a.dim(d1 + d2), field.zero()));
    }

    // unit laws give every product with the degree-zero generator
    for (int d = 0; d <= a.top_degree; ++d)
        for (int i = 0; i < a.dim(d); ++i) {
            a.products[0][d][i][i] = field.one();
            a.products[d][0][i][i] = field.one();
        }

    for (const Json& entry : j.value("products", Json::array())) {
        const std::string left = entry.at("left").get<std::string>();
        const std::string right = entry.at("right").get<std::string>();
        const auto l = slot.find(left);
        const auto r = slot.find(right);
        if (l == slot.end() || r == slot.end())
            throw std::domain_error("algebra file: product of unknown labels " + left + ", " +
                                    right);
        const auto [d1, i] = l->second;
        const auto [d2, k] = r->second;
        if (d1 + d2 > a.top_degree)
            continue;  // lands above the truncation, already zero
        FieldVec<F> value(a.dim(d1 + d2), field.zero());
        for (const auto& [label, coeff] : entry.at("value").items()) {
            const auto s = slot.find(label);
            if (s == slot.end() || s->second.first != d1 + d2)
                throw std::domain_error("algebra file: value label " + label +
                                        " is not a basis element of degree " +
                                        std::to_string(d1 + d2));
            const Rational q = parse_fraction(coefficient_string(coeff));
            typename F::Elem c = field.from_int(numerator(q));
            c = field.mul(c, field.inv(field.from_int(denominator(q))));
            value[s->second.second] = c;
        }
        a.products[d1][d2][static_cast<std::size_t>(i) * a.dim(d2) + k] = value;
    }

    a.check_shape();
    return a;
}

}  // namespace detail

inline LoadedAlgebra algebra_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("field") || !j.contains("top_degree") ||
        !j.contains("basis"))
        throw std::domain_error("algebra file needs \"field\", \"top_degree\", and \"basis\"");
    const std::string field_name = j.at("field").get<std::string>();
    if (field_name == "Q")
        return detail::algebra_from_json_with_field(j, RationalField{});
    if (field_name.size() > 1 && field_name[0] == 'F' &&
        field_name.find_first_not_of("0123456789", 1) == std::string::npos)
        return detail::algebra_from_json_with_field(j, PrimeField(std::stoll(field_name.substr(1))));
    throw std::domain_error("unknown field \"" + field_name + "\" (expected Q or F<p>)");
}

inline LoadedAlgebra load_algebra(const std::string& path)
{
    try {
        return algebra_from_json(load_json_file(path));
    } catch (const Json::exception& e) {
        throw std::domain_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Serialization back to JSON

inline std::string int_string(const Int& v) { return v.str(); }

inline std::vector<std::string> int_strings(const std::vector<Int>& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Int& x : v)
        out.push_back(x.str());
    return out;
}

/// Row-major decimal strings.
inline Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline Json point_json(const RationalVector& x)
{
    return Json(to_fraction_strings(x));
}

inline Json counts_json(const std::map<std::string, TableCounts>& tables)
{
    Json out = Json::object();
    for (const auto& [name, tc] : tables)
        out[name] = Json{{"checks", tc.checks}, {"failures", tc.failures}};
    return out;
}

inline Json report_json(const IdentityReport& r)
{
    return Json{{"family", family_name(r.family)},
                {"n_max", r.n_max},
                {"samples", r.samples},
                {"seed", r.seed},
                {"tables", counts_json(r.tables)},
                {"failure_samples", r.failure_samples},
                {"total_checks", r.total_checks()},
                {"total_failures", r.total_failures()},
                {"ok", r.ok()}};
}

inline Json report_json(const FormReport& r)
{
    return Json{{"n_max", r.n_max},
                {"point_samples", r.point_samples},
                {"seed", r.seed},
                {"axioms", counts_json(r.axioms)},
                {"failure_samples", r.failure_samples},
                {"total_checks", r.total_checks()},
                {"total_failures", r.total_failures()},
                {"ok", r.ok()}};
}

inline Json group_json(const HomologyGroup& g)
{
    return Json{{"degree", g.degree},
                {"free_rank", g.free_rank},
                {"torsion", int_strings(g.torsion)},
                {"name", homology_group_name(g)}};
}

inline Json homology_json(const std::vector<HomologyGroup>& groups)
{
    Json out = Json::array();
    for (const auto& g : groups)
        out.push_back(group_json(g));
    return out;
}

inline Json located_cell_json(const LocatedCell& c)
{
    Json out{{"kind", kind_name(c.kind)}};
    if (c.kind == LocatedCell::Kind::join) {
        out["parts"] = c.parts;
    } else {
        out["k"] = c.index.k;
        out["r"] = c.index.r;
        out["s"] = c.index.s;
    }
    Json factors = Json::array();
    for (const auto& f : c.factors)
        factors.push_back(point_json(f));
    out["factors"] = factors;
    return out;
}

template <typename F>
Json algebra_json(const GradedAlgebra<F>& a)
{
    Json products = Json::array();
    for (int d1 = 0; d1 <= a.top_degree; ++d1)
        for (int d2 = 0; d1 + d2 <= a.top_degree; ++d2)
            for (int i = 0; i < a.dim(d1); ++i)
                for (int k = 0; k < a.dim(d2); ++k) {
                    if (d1 == 0 || d2 == 0)
                        continue;  // unit products are implied
                    const FieldVec<F>& value =
                        a.products[d1][d2][static_cast<std::size_t>(i) * a.dim(d2) + k];
                    Json terms = Json::object();
                    for (int m = 0; m < a.dim(d1 + d2); ++m)
                        if (!a.field.is_zero(value[m]))
                            terms[a.basis[d1 + d2][m]] = a.field.to_string(value[m]);
                    if (!terms.empty())
                        products.push_back(Json{{"left", a.basis[d1][i]},
                                                {"right", a.basis[d2][k]},
                                                {"value", terms}});
                }
    return Json{{"field", a.field.name()},
                {"top_degree", a.top_degree},
                {"basis", a.basis},
                {"products", products}};
}

inline Json report_json(const AlgebraReport& r)
{
    return Json{{"checks", r.checks}, {"violations", r.violations}, {"ok", r.ok()}};
}

inline Json report_json(const BoundsReport& r)
{
    Json out{{"cuplength", r.cuplength},
             {"zcl", r.zcl},
             {"dim", r.dim},
             {"cat_lower", r.cat_lower},
             {"cat_upper", r.cat_upper},
             {"cat_exact", r.cat_exact},
             {"tc_lower", r.tc_lower},
             {"tc_upper", r.tc_upper},
             {"tc_exact", r.tc_exact}};
    if (r.known_tc) {
        out["known_tc"] = *r.known_tc;
        out["known_tc_consistent"] = r.known_tc_consistent;
    }
    return out;
}

inline Json berstein_json(const BersteinResult& r)
{
    Json out{{"degree", r.degree},
             {"nonzero", r.nonzero},
             {"power", int_strings(r.power.values)}};
    if (r.nonzero) {
        std::vector<std::string> cert;
        cert.reserve(r.certificate.size());
        for (const Rational& q : r.certificate)
            cert.push_back(to_fraction_string(q));
        out["certificate"] = cert;
    } else {
        out["primitive"] = int_strings(r.solution);
    }
    return out;
}

}  // namespace lstc

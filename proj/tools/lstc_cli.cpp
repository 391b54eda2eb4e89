// Command line surface. Every subcommand wraps exactly one library
// operation: polytope membership and identity suites, A-infinity form
// validation, bar-construction homology and cohomology rings, Berstein
// class powers, and cup-length bound reports.
//
// Exit codes: 0 all checks pass, 1 a check failed (counterexample found),
// 2 bad input, unknown command, or capacity exceeded.

#include <lstc/a_infty.hpp>
#include <lstc/bar.hpp>
#include <lstc/bounds.hpp>
#include <lstc/cohomology.hpp>
#include <lstc/io.hpp>
#include <lstc/polytopes.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using lstc::Json;

struct Outcome {
    Json config = Json::object();
    Json result = Json::object();
    bool ok = true;
    std::string human;
};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

lstc::RationalVector parse_point(const std::string& s)
{
    return lstc::parse_fractions(split_list(s));
}

lstc::Family parse_family(const std::string& s)
{
    return s == "assoc" ? lstc::Family::assoc : lstc::Family::mult;
}

std::string polytope_name(lstc::Family f, int n, bool primed)
{
    std::string base = f == lstc::Family::assoc ? "K" : "J";
    if (primed)
        base += "'";
    return base + "(" + std::to_string(n) + ")";
}

void append_counts(std::ostringstream& out, const std::map<std::string, lstc::TableCounts>& tables)
{
    for (const auto& [name, tc] : tables)
        out << "  " << (tc.failures == 0 ? "PASS" : "FAIL") << "  " << name << "  checks="
            << tc.checks << " failures=" << tc.failures << "\n";
}

void append_failures(std::ostringstream& out, const std::vector<std::string>& samples)
{
    for (const auto& s : samples)
        out << "    counterexample: " << s << "\n";
}

std::string homology_line(const std::string& symbol, const lstc::HomologyGroup& g)
{
    return "  " + symbol + "_" + std::to_string(g.degree) + " = " + lstc::homology_group_name(g);
}

// ---------------------------------------------------------------------------
// polytope

Outcome run_polytope_check(const std::string& family, const std::string& point, bool primed)
{
    const lstc::Family f = parse_family(family);
    const lstc::RationalVector x = parse_point(point);
    const lstc::PolytopeId id{f, static_cast<int>(x.size()), primed};
    const bool member = lstc::contains(id, x);
    Outcome out;
    out.config = {{"family", family}, {"point", lstc::point_json(x)}, {"primed", primed}};
    out.result = {{"polytope", polytope_name(f, id.n, primed)}, {"member", member}};
    out.ok = member;
    out.human = lstc::format_tuple(x) + (member ? " lies in " : " lies outside ") +
                polytope_name(f, id.n, primed) + "\n";
    return out;
}

Outcome run_polytope_identities(const std::string& family, int n_max, int samples,
                                std::uint64_t seed)
{
    std::vector<lstc::Family> families;
    if (family == "assoc" || family == "both")
        families.push_back(lstc::Family::assoc);
    if (family == "mult" || family == "both")
        families.push_back(lstc::Family::mult);
    Outcome out;
    out.config = {{"family", family}, {"n_max", n_max}, {"samples", samples}, {"seed", seed}};
    std::ostringstream h;
    Json reports = Json::object();
    for (lstc::Family f : families) {
        const lstc::IdentityReport r = lstc::verify_identities(f, n_max, samples, seed);
        reports[lstc::family_name(f)] = lstc::report_json(r);
        out.ok = out.ok && r.ok();
        h << lstc::family_name(f) << " identities, n <= " << n_max << ", " << samples
          << " samples, seed " << seed << ":\n";
        append_counts(h, r.tables);
        append_failures(h, r.failure_samples);
    }
    h << (out.ok ? "PASS" : "FAIL") << "\n";
    out.result = {{"reports", reports}};
    out.human = h.str();
    return out;
}

Outcome run_polytope_sample(const std::string& family, int n, bool primed, int samples,
                            std::uint64_t seed)
{
    if (samples < 1)
        throw std::domain_error("sample: samples must be positive");
    const lstc::Family f = parse_family(family);
    const lstc::PolytopeId id{f, n, primed};
    lstc::SplitMix64 rng(seed);
    Json points = Json::array();
    std::ostringstream h;
    h << samples << " points of " << polytope_name(f, n, primed) << ", seed " << seed << ":\n";
    for (int i = 0; i < samples; ++i) {
        const lstc::RationalVector x = lstc::sample_point(id, rng);
        points.push_back(lstc::point_json(x));
        h << "  " << lstc::format_tuple(x) << "\n";
    }
    Outcome out;
    out.config = {{"family", family}, {"n", n}, {"primed", primed}, {"samples", samples},
                  {"seed", seed}};
    out.result = {{"points", points}};
    out.human = h.str();
    return out;
}

Outcome run_polytope_locate(const std::string& family, const std::string& point)
{
    const lstc::Family f = parse_family(family);
    const lstc::RationalVector x = parse_point(point);
    const auto cells = lstc::boundary_cell_locate(f, x);
    Json rows = Json::array();
    std::ostringstream h;
    h << lstc::format_tuple(x) << " meets " << cells.size() << " boundary cell"
      << (cells.size() == 1 ? "" : "s") << "\n";
    for (const auto& c : cells) {
        rows.push_back(lstc::located_cell_json(c));
        h << "  " << lstc::kind_name(c.kind);
        if (c.kind == lstc::LocatedCell::Kind::join) {
            h << " parts=(";
            for (std::size_t i = 0; i < c.parts.size(); ++i)
                h << (i ? "," : "") << c.parts[i];
            h << ")";
        } else {
            h << " k=" << c.index.k << " r=" << c.index.r << " s=" << c.index.s;
        }
        for (const auto& factor : c.factors)
            h << "  " << lstc::format_tuple(factor);
        h << "\n";
    }
    Outcome out;
    out.config = {{"family", family}, {"point", lstc::point_json(x)}};
    out.result = {{"cells", rows}};
    out.human = h.str();
    return out;
}

// ---------------------------------------------------------------------------
// ainfty

Outcome form_report_outcome(const lstc::FormReport& r, Json config, const std::string& title)
{
    Outcome out;
    out.config = std::move(config);
    out.result = {{"report", lstc::report_json(r)}};
    out.ok = r.ok();
    std::ostringstream h;
    h << title << ", n <= " << r.n_max << ", " << r.point_samples << " point samples, seed "
      << r.seed << ":\n";
    append_counts(h, r.axioms);
    append_failures(h, r.failure_samples);
    h << (out.ok ? "PASS" : "FAIL") << "\n";
    out.human = h.str();
    return out;
}

Outcome run_ainfty_validate_form(const std::string& group_path, int n_max, int samples,
                                 std::uint64_t seed)
{
    const lstc::Monoid m = lstc::load_monoid(group_path);
    const lstc::AInftyForm form = lstc::canonical_form(m, n_max);
    const lstc::FormReport r = lstc::validate_form(form, samples, seed);
    return form_report_outcome(
        r,
        {{"group", group_path}, {"n_max", n_max}, {"samples", samples}, {"seed", seed}},
        "canonical form on a monoid of order " + std::to_string(m.size()));
}

Outcome run_ainfty_validate_map(const std::string& hom_path, int n_max, int samples,
                                std::uint64_t seed, bool unit_last)
{
    const lstc::MonoidHom hom = lstc::load_hom(hom_path);
    const lstc::AInftyMapForm map_form = lstc::hom_map_form(hom, n_max);
    const lstc::AInftyForm dom = lstc::canonical_form(hom.dom, n_max);
    const lstc::AInftyForm cod = lstc::canonical_form(hom.cod, n_max);
    const lstc::FormReport r =
        lstc::validate_map_form(map_form, dom, cod, samples, seed, unit_last);
    return form_report_outcome(r,
                               {{"hom", hom_path},
                                {"n_max", n_max},
                                {"samples", samples},
                                {"seed", seed},
                                {"unit_last", unit_last}},
                               "homomorphism map form, orders " + std::to_string(hom.dom.size()) +
                                   " -> " + std::to_string(hom.cod.size()));
}

// ---------------------------------------------------------------------------
// bar

lstc::GModule coefficient_module(const lstc::Monoid& g, const std::string& coeff,
                                 const std::string& character)
{
    if (coeff == "trivial")
        return lstc::trivial_module(g);
    if (coeff == "aug")
        return lstc::augmentation_ideal(g);
    if (character.empty())
        throw std::domain_error("sign coefficients need --character with one +1/-1 per element");
    std::vector<int> chars;
    for (const std::string& s : split_list(character))
        chars.push_back(std::stoi(s));
    return lstc::sign_module(g, chars);
}

Outcome run_bar_cells(const std::string& group_path, int n_max)
{
    const lstc::Monoid g = lstc::load_monoid(group_path);
    const lstc::BarCellCounts c = lstc::bar_cell_counts(g, n_max);
    Json rows = Json::array();
    std::ostringstream h;
    h << "cells of the bar models for a group of order " << g.size() << ":\n";
    h << "  degree  P-cells  E-cells\n";
    for (int k = 0; k <= n_max; ++k) {
        rows.push_back({{"degree", k},
                        {"p_cells", lstc::int_string(c.p_cells[k])},
                        {"e_cells", lstc::int_string(c.e_cells[k])}});
        h << "  " << k << "  " << c.p_cells[k] << "  " << c.e_cells[k] << "\n";
    }
    Outcome out;
    out.config = {{"group", group_path}, {"n_max", n_max}};
    out.result = {{"counts", rows}};
    out.human = h.str();
    return out;
}

Outcome run_bar_homology(const std::string& group_path, const std::string& coeff,
                         const std::string& character, int n_max, long long mod_p,
                         std::size_t capacity)
{
    const lstc::Monoid g = lstc::load_monoid(group_path);
    const lstc::GModule m = coefficient_module(g, coeff, character);
    // one degree beyond the request so every reported degree has both
    // boundary maps available
    const lstc::ChainComplex complex = lstc::bar_chain_complex(m, n_max + 1, capacity);
    Outcome out;
    out.config = {{"group", group_path}, {"coeff", coeff}, {"n_max", n_max}, {"mod", mod_p}};
    if (!character.empty())
        out.config["character"] = character;
    std::ostringstream h;
    if (mod_p == 0) {
        const lstc::HomologyResult res = lstc::homology(complex);
        std::vector<lstc::HomologyGroup> groups(res.groups.begin(),
                                                res.groups.begin() + n_max + 1);
        out.result = {{"homology", lstc::homology_json(groups)}};
        h << "integral bar homology, " << coeff << " coefficients:\n";
        for (const auto& grp : groups)
            h << homology_line("H", grp) << "\n";
    } else {
        std::vector<int> dims = lstc::homology_dimensions_mod_p(complex, mod_p);
        dims.resize(n_max + 1);
        out.result = {{"mod", mod_p}, {"dimensions", dims}};
        h << "bar homology dimensions mod " << mod_p << ", " << coeff << " coefficients:\n";
        for (int k = 0; k <= n_max; ++k)
            h << "  dim H_" << k << " = " << dims[k] << "\n";
    }
    out.human = h.str();
    return out;
}

Outcome run_bar_cohomology_ring(const std::string& group_path, long long mod_p, int n_max,
                                std::size_t capacity)
{
    const lstc::Monoid g = lstc::load_monoid(group_path);
    const lstc::GradedAlgebra<lstc::PrimeField> ring =
        lstc::cohomology_ring(g, mod_p, n_max, capacity);
    const Json ring_json = lstc::algebra_json(ring);
    Outcome out;
    out.config = {{"group", group_path}, {"mod", mod_p}, {"n_max", n_max}};
    out.result = {{"ring", ring_json}, {"cuplength", lstc::cuplength(ring)}};
    std::ostringstream h;
    h << "cohomology ring mod " << mod_p << " up to degree " << n_max << ":\n";
    for (int d = 0; d <= ring.top_degree; ++d) {
        h << "  degree " << d << ":";
        for (const auto& label : ring.basis[d])
            h << " " << label;
        h << "\n";
    }
    for (const auto& entry : ring_json.at("products")) {
        h << "  " << entry["left"].get<std::string>() << " * "
          << entry["right"].get<std::string>() << " =";
        for (const auto& [label, coeff] : entry["value"].items())
            h << " " << coeff.get<std::string>() << "*" << label;
        h << "\n";
    }
    h << "  cuplength " << lstc::cuplength(ring) << "\n";
    out.human = h.str();
    return out;
}

Outcome run_bar_berstein(const std::string& group_path, int n_max, std::size_t capacity)
{
    const lstc::Monoid g = lstc::load_monoid(group_path);
    Outcome out;
    out.config = {{"group", group_path}, {"n_max", n_max}};
    Json rows = Json::array();
    std::ostringstream h;
    h << "Berstein class powers for a group of order " << g.size() << ":\n";
    for (int n = 1; n <= n_max; ++n) {
        const lstc::BersteinResult r = lstc::berstein_svarc_power(g, n, capacity);
        rows.push_back(lstc::berstein_json(r));
        h << "  b^" << n << " in H^" << n << ": "
          << (r.nonzero ? "nonzero (certificate verified)" : "zero (primitive found)") << "\n";
    }
    out.result = {{"powers", rows}};
    out.human = h.str();
    return out;
}

Outcome run_bar_join_homology(const std::string& group_path, int n_max, std::size_t capacity)
{
    const lstc::Monoid g = lstc::load_monoid(group_path);
    Outcome out;
    out.config = {{"group", group_path}, {"n_max", n_max}};
    Json rows = Json::array();
    std::ostringstream h;
    h << "reduced homology of the join models:\n";
    for (int n = 0; n <= n_max; ++n) {
        const auto groups = lstc::join_complex_homology(g, n, capacity);
        rows.push_back({{"n", n}, {"reduced_homology", lstc::homology_json(groups)}});
        h << "  n = " << n << " (join of " << n + 1 << " copies):\n";
        for (const auto& grp : groups)
            if (!grp.is_trivial())
                h << "  " << homology_line("H~", grp) << "\n";
    }
    out.result = {{"joins", rows}};
    out.human = h.str();
    return out;
}

// ---------------------------------------------------------------------------
// ring

Outcome run_ring_validate(const std::string& algebra_path)
{
    const lstc::LoadedAlgebra a = lstc::load_algebra(algebra_path);
    Outcome out;
    out.config = {{"algebra", algebra_path}};
    std::visit(
        [&](const auto& alg) {
            const lstc::AlgebraReport r = lstc::validate_algebra(alg);
            out.result = {{"field", alg.field.name()}, {"report", lstc::report_json(r)}};
            out.ok = r.ok();
            std::ostringstream h;
            h << "algebra over " << alg.field.name() << ", top degree " << alg.top_degree << ", "
              << r.checks << " checks:\n";
            for (const auto& v : r.violations)
                h << "  violation: " << v << "\n";
            h << (r.ok() ? "PASS" : "FAIL") << "\n";
            out.human = h.str();
        },
        a);
    return out;
}

Outcome run_ring_cuplength(const std::string& algebra_path)
{
    const lstc::LoadedAlgebra a = lstc::load_algebra(algebra_path);
    Outcome out;
    out.config = {{"algebra", algebra_path}};
    const int n = std::visit([](const auto& alg) { return lstc::cuplength(alg); }, a);
    out.result = {{"cuplength", n}};
    out.human = "cuplength " + std::to_string(n) + " (lower bound for cat)\n";
    return out;
}

Outcome run_ring_tc_bound(const std::string& algebra_path, std::size_t capacity)
{
    const lstc::LoadedAlgebra a = lstc::load_algebra(algebra_path);
    Outcome out;
    out.config = {{"algebra", algebra_path}};
    const int zcl =
        std::visit([&](const auto& alg) { return lstc::zero_divisor_cuplength(alg, capacity); }, a);
    out.result = {{"zcl", zcl}, {"tc_lower", zcl}};
    out.human = "zcl " + std::to_string(zcl) + " (lower bound for tc)\n";
    return out;
}

Outcome run_ring_report(const std::string& algebra_path, int dim, std::optional<int> known_tc,
                        std::size_t capacity)
{
    const lstc::LoadedAlgebra a = lstc::load_algebra(algebra_path);
    const lstc::BoundsReport r = std::visit(
        [&](const auto& alg) { return lstc::bounds_report(alg, dim, known_tc, capacity); }, a);
    Outcome out;
    out.config = {{"algebra", algebra_path}, {"dim", dim}};
    if (known_tc)
        out.config["known_tc"] = *known_tc;
    out.result = lstc::report_json(r);
    out.ok = r.known_tc_consistent;
    std::ostringstream h;
    h << "cuplength " << r.cuplength << ", zcl " << r.zcl << ", dim " << r.dim << "\n";
    h << "  " << r.cat_lower << " <= cat <= " << r.cat_upper
      << (r.cat_exact ? "  (exact)" : "") << "\n";
    h << "  " << r.tc_lower << " <= tc <= " << r.tc_upper << (r.tc_exact ? "  (exact)" : "")
      << "\n";
    if (r.known_tc)
        h << "  known tc " << *r.known_tc
          << (r.known_tc_consistent ? " agrees with the bounds" : " CONTRADICTS the bounds")
          << "\n";
    h << (out.ok ? "PASS" : "FAIL") << "\n";
    out.human = h.str();
    return out;
}

Outcome run_rp_tc(int n, int imm)
{
    const int delta = lstc::delta_correction(n);
    const int tc = lstc::tc_rp(n, imm);
    Outcome out;
    out.config = {{"n", n}, {"imm", imm}};
    out.result = {{"n", n}, {"imm", imm}, {"delta", delta}, {"tc", tc}};
    out.human = "tc(RP^" + std::to_string(n) + ") = " + std::to_string(imm) + " - " +
                std::to_string(delta) + " = " + std::to_string(tc) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic models for LS category and topological complexity bounds"};
    app.require_subcommand(1);

    std::string format = "human";
    std::string family = "both";
    std::string point;
    std::string group_path;
    std::string hom_path;
    std::string algebra_path;
    std::string coeff = "trivial";
    std::string character;
    bool primed = false;
    bool unit_last = false;
    int n = 2;
    int n_max = 4;
    int samples = 100;
    int dim = 0;
    int imm = 0;
    std::optional<int> known_tc;
    long long mod_p = 0;
    std::uint64_t seed = 0;
    std::size_t capacity = lstc::default_capacity;
    std::function<Outcome()> run;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "structured"}));
    };
    const auto add_sampling = [&](CLI::App* cmd, int default_samples) {
        samples = default_samples;
        cmd->add_option("--samples", samples, "sample count");
        cmd->add_option("--seed", seed, "random seed");
    };

    CLI::App* polytope = app.add_subcommand("polytope", "face and degeneracy map layer");
    polytope->require_subcommand(1);
    {
        CLI::App* c = polytope->add_subcommand("check", "test membership of a point");
        c->add_option("--family", family, "assoc or mult")
            ->required()
            ->check(CLI::IsMember({"assoc", "mult"}));
        c->add_option("--point", point, "comma-separated coordinates, fractions allowed")
            ->required();
        c->add_flag("--primed", primed, "use the prefix-sum chart");
        add_format(c);
        c->callback([&] { run = [&] { return run_polytope_check(family, point, primed); }; });
    }
    {
        CLI::App* c = polytope->add_subcommand("identities", "verify the face/degeneracy tables");
        c->add_option("--family", family, "assoc, mult, or both")
            ->check(CLI::IsMember({"assoc", "mult", "both"}));
        c->add_option("--nmax", n_max, "largest arity");
        add_sampling(c, 100);
        add_format(c);
        c->callback(
            [&] { run = [&] { return run_polytope_identities(family, n_max, samples, seed); }; });
    }
    {
        CLI::App* c = polytope->add_subcommand("sample", "draw random points");
        c->add_option("--family", family, "assoc or mult")
            ->required()
            ->check(CLI::IsMember({"assoc", "mult"}));
        c->add_option("--n", n, "arity")->required();
        c->add_flag("--primed", primed, "use the prefix-sum chart");
        add_sampling(c, 5);
        add_format(c);
        c->callback(
            [&] { run = [&] { return run_polytope_sample(family, n, primed, samples, seed); }; });
    }
    {
        CLI::App* c = polytope->add_subcommand("locate", "find boundary cells through a point");
        c->add_option("--family", family, "assoc or mult")
            ->required()
            ->check(CLI::IsMember({"assoc", "mult"}));
        c->add_option("--point", point, "comma-separated coordinates, unprimed chart")
            ->required();
        add_format(c);
        c->callback([&] { run = [&] { return run_polytope_locate(family, point); }; });
    }

    CLI::App* ainfty = app.add_subcommand("ainfty", "A-infinity form validation");
    ainfty->require_subcommand(1);
    {
        CLI::App* c = ainfty->add_subcommand("validate-form", "check the canonical form axioms");
        c->add_option("--group", group_path, "monoid file")->required();
        c->add_option("--nmax", n_max, "largest arity");
        add_sampling(c, 64);
        add_format(c);
        c->callback(
            [&] { run = [&] { return run_ainfty_validate_form(group_path, n_max, samples, seed); }; });
    }
    {
        CLI::App* c = ainfty->add_subcommand("validate-map", "check the map form axioms");
        c->add_option("--hom", hom_path, "homomorphism file")->required();
        c->add_option("--nmax", n_max, "largest arity");
        c->add_flag("--unit-last", unit_last, "also require the unit axiom in the last slot");
        add_sampling(c, 64);
        add_format(c);
        c->callback([&] {
            run = [&] {
                return run_ainfty_validate_map(hom_path, n_max, samples, seed, unit_last);
            };
        });
    }

    CLI::App* bar = app.add_subcommand("bar", "bar construction models");
    bar->require_subcommand(1);
    {
        CLI::App* c = bar->add_subcommand("cells", "cell counts per degree");
        c->add_option("--group", group_path, "group file")->required();
        c->add_option("--nmax", n_max, "largest degree");
        add_format(c);
        c->callback([&] { run = [&] { return run_bar_cells(group_path, n_max); }; });
    }
    {
        CLI::App* c = bar->add_subcommand("homology", "group homology from the bar complex");
        c->add_option("--group", group_path, "group file")->required();
        c->add_option("--coeff", coeff, "coefficient module")
            ->check(CLI::IsMember({"trivial", "sign", "aug"}));
        c->add_option("--character", character, "comma-separated +1/-1 per element (sign only)");
        c->add_option("--nmax", n_max, "largest degree");
        c->add_option("--mod", mod_p, "report dimensions over F_p instead of integral groups");
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback([&] {
            run = [&] {
                return run_bar_homology(group_path, coeff, character, n_max, mod_p, capacity);
            };
        });
    }
    {
        CLI::App* c = bar->add_subcommand("cohomology-ring", "cup product structure mod p");
        c->add_option("--group", group_path, "group file")->required();
        c->add_option("--mod", mod_p, "prime p")->required();
        c->add_option("--nmax", n_max, "largest degree");
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback([&] {
            run = [&] { return run_bar_cohomology_ring(group_path, mod_p, n_max, capacity); };
        });
    }
    {
        CLI::App* c = bar->add_subcommand("berstein-svarc", "cup powers of the Berstein class");
        c->add_option("--group", group_path, "group file")->required();
        c->add_option("--nmax", n_max, "largest power");
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback([&] { run = [&] { return run_bar_berstein(group_path, n_max, capacity); }; });
    }
    {
        CLI::App* c = bar->add_subcommand("join-homology", "reduced homology of the join models");
        c->add_option("--group", group_path, "group file")->required();
        c->add_option("--nmax", n_max, "largest join stage");
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback(
            [&] { run = [&] { return run_bar_join_homology(group_path, n_max, capacity); }; });
    }

    CLI::App* ring = app.add_subcommand("ring", "graded algebra computations");
    ring->require_subcommand(1);
    {
        CLI::App* c = ring->add_subcommand("validate", "check the algebra laws");
        c->add_option("--algebra", algebra_path, "algebra file")->required();
        add_format(c);
        c->callback([&] { run = [&] { return run_ring_validate(algebra_path); }; });
    }
    {
        CLI::App* c = ring->add_subcommand("cuplength", "longest nonzero product");
        c->add_option("--algebra", algebra_path, "algebra file")->required();
        add_format(c);
        c->callback([&] { run = [&] { return run_ring_cuplength(algebra_path); }; });
    }
    {
        CLI::App* c = ring->add_subcommand("tc-bound", "zero-divisor cup length");
        c->add_option("--algebra", algebra_path, "algebra file")->required();
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback([&] { run = [&] { return run_ring_tc_bound(algebra_path, capacity); }; });
    }
    {
        CLI::App* c = ring->add_subcommand("report", "cat and tc sandwich bounds");
        c->add_option("--algebra", algebra_path, "algebra file")->required();
        c->add_option("--dim", dim, "dimension of the space")->required();
        c->add_option("--known-tc", known_tc, "externally known tc value to cross-check");
        c->add_option("--capacity", capacity, "largest matrix entry count");
        add_format(c);
        c->callback(
            [&] { run = [&] { return run_ring_report(algebra_path, dim, known_tc, capacity); }; });
    }

    CLI::App* rp = app.add_subcommand("rp", "real projective spaces");
    rp->require_subcommand(1);
    {
        CLI::App* c = rp->add_subcommand("tc", "tc from the immersion dimension");
        c->add_option("--n", n, "projective space dimension")->required();
        c->add_option("--imm", imm, "Euclidean immersion dimension")->required();
        add_format(c);
        c->callback([&] { run = [&] { return run_rp_tc(n, imm); }; });
    }

    std::string command;
    try {
        app.parse(argc, argv);
        for (const CLI::App* cmd = &app; !cmd->get_subcommands().empty();
             cmd = cmd->get_subcommands().front())
            command += (command.empty() ? "" : " ") + cmd->get_subcommands().front()->get_name();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Outcome out = run();
        if (format == "structured") {
            const Json doc{{"schema_version", 1},
                           {"command", command},
                           {"config", out.config},
                           {"result", out.result},
                           {"ok", out.ok}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << out.human;
        }
        return out.ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

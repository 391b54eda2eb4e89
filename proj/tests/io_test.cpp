#include <lstc/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <variant>

using lstc::GradedAlgebra;
using lstc::Json;
using lstc::PrimeField;
using lstc::RationalField;

namespace {

std::string data_path(const std::string& name)
{
    return std::string(LSTC_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("monoid files load and validate")
{
    const lstc::Monoid z2 = lstc::load_monoid(data_path("z2.json"));
    CHECK(z2.size() == 2);
    CHECK(z2.table == lstc::cyclic_group(2).table);

    const lstc::Monoid s3 = lstc::load_monoid(data_path("s3.json"));
    CHECK(s3.table == lstc::symmetric_group(3).table);
    CHECK(s3.elements == lstc::symmetric_group(3).elements);

    const lstc::Monoid klein = lstc::load_monoid(data_path("klein4.json"));
    CHECK(klein.is_group());
    for (int g = 0; g < 4; ++g)
        CHECK(klein.mul(g, g) == klein.unit);

    CHECK_THROWS_AS(lstc::load_monoid(data_path("missing.json")), std::domain_error);
    CHECK_THROWS_AS(lstc::monoid_from_json(Json{{"elements", {"e"}}}), std::domain_error);
    // a table that breaks associativity is rejected on load
    const Json bad{{"elements", {"e", "a", "b"}},
                   {"table", {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}},
                   {"unit", 0}};
    CHECK_THROWS_AS(lstc::monoid_from_json(bad), std::domain_error);
}

TEST_CASE("hom files load and validate")
{
    const lstc::MonoidHom h = lstc::load_hom(data_path("z4_to_z2.json"));
    CHECK(h.dom.size() == 4);
    CHECK(h.cod.size() == 2);
    CHECK(h.image == std::vector<int>{0, 1, 0, 1});

    Json j{{"dom", Json{{"elements", {"0", "1"}}, {"table", {{0, 1}, {1, 0}}}, {"unit", 0}}},
           {"cod", Json{{"elements", {"0", "1"}}, {"table", {{0, 1}, {1, 0}}}, {"unit", 0}}},
           {"image", {0, 0}}};
    CHECK_NOTHROW(lstc::hom_from_json(j));  // constant map to the unit
    j["image"] = {1, 0};                    // does not preserve the unit
    CHECK_THROWS_AS(lstc::hom_from_json(j), std::domain_error);
}

TEST_CASE("algebra files load over both fields")
{
    const lstc::LoadedAlgebra rp2 = lstc::load_algebra(data_path("rp2_f2.json"));
    REQUIRE(std::holds_alternative<GradedAlgebra<PrimeField>>(rp2));
    const auto& a = std::get<GradedAlgebra<PrimeField>>(rp2);
    CHECK(a.field.name() == "F2");
    CHECK(lstc::validate_algebra(a).ok());
    CHECK(lstc::cuplength(a) == 2);
    CHECK(lstc::zero_divisor_cuplength(a) == 3);

    const lstc::LoadedAlgebra torus = lstc::load_algebra(data_path("torus2_q.json"));
    REQUIRE(std::holds_alternative<GradedAlgebra<RationalField>>(torus));
    const auto& t = std::get<GradedAlgebra<RationalField>>(torus);
    CHECK(lstc::validate_algebra(t).ok());
    CHECK(lstc::cuplength(t) == 2);

    // a degree can be empty; omitted products above the truncation are fine
    const lstc::LoadedAlgebra sphere = lstc::load_algebra(data_path("sphere2_q.json"));
    const auto& s = std::get<GradedAlgebra<RationalField>>(sphere);
    CHECK(s.dim(1) == 0);
    CHECK(lstc::validate_algebra(s).ok());
    CHECK(lstc::zero_divisor_cuplength(s) == 2);

    // the broken fixture loads but fails validation
    const lstc::LoadedAlgebra broken = lstc::load_algebra(data_path("broken_sign_q.json"));
    CHECK_FALSE(lstc::validate_algebra(std::get<GradedAlgebra<RationalField>>(broken)).ok());
}

TEST_CASE("algebra file errors")
{
    Json j{{"field", "Q"},
           {"top_degree", 1},
           {"basis", {{"1"}, {"x"}}},
           {"products", Json::array()}};
    CHECK_NOTHROW(lstc::algebra_from_json(j));

    Json dup = j;
    dup["basis"] = {{"1"}, {"1"}};
    CHECK_THROWS_WITH(lstc::algebra_from_json(dup),
                      Catch::Matchers::ContainsSubstring("duplicate"));

    Json badfield = j;
    badfield["field"] = "R";
    CHECK_THROWS_WITH(lstc::algebra_from_json(badfield),
                      Catch::Matchers::ContainsSubstring("unknown field"));

    Json badlabel = j;
    badlabel["products"] = {{{"left", "x"}, {"right", "y"}, {"value", Json::object()}}};
    CHECK_THROWS_WITH(lstc::algebra_from_json(badlabel),
                      Catch::Matchers::ContainsSubstring("unknown labels"));

    // value labels must land in the product degree
    Json baddegree{{"field", "Q"},
                   {"top_degree", 2},
                   {"basis", {{"1"}, {"x"}, {"y"}}},
                   {"products", {{{"left", "x"}, {"right", "x"}, {"value", {{"x", "1"}}}}}}};
    CHECK_THROWS_WITH(lstc::algebra_from_json(baddegree),
                      Catch::Matchers::ContainsSubstring("degree"));

    // non-prime modulus in the field tag
    Json badprime = j;
    badprime["field"] = "F6";
    CHECK_THROWS_AS(lstc::algebra_from_json(badprime), std::domain_error);
}

TEST_CASE("algebra serialization round-trips")
{
    for (const std::string name :
         {"rp2_f2.json", "rp3_f2.json", "circle_q.json", "torus2_q.json", "sphere2_q.json"}) {
        const lstc::LoadedAlgebra a = lstc::load_algebra(data_path(name));
        std::visit(
            [&](const auto& alg) {
                const Json once = lstc::algebra_json(alg);
                const lstc::LoadedAlgebra b = lstc::algebra_from_json(once);
                std::visit([&](const auto& again) { CHECK(lstc::algebra_json(again) == once); },
                           b);
            },
            a);
    }
}

TEST_CASE("rational coefficients parse in algebra files")
{
    const Json j{{"field", "Q"},
                 {"top_degree", 2},
                 {"basis", {{"1"}, {"x", "y"}, {"z"}}},
                 {"products",
                  {{{"left", "x"}, {"right", "y"}, {"value", {{"z", "2/3"}}}},
                   {{"left", "y"}, {"right", "x"}, {"value", {{"z", "-2/3"}}}},
                   {{"left", "x"}, {"right", "x"}, {"value", {{"z", 0}}}}}}};
    const auto a = std::get<GradedAlgebra<RationalField>>(lstc::algebra_from_json(j));
    CHECK(lstc::validate_algebra(a).ok());
    const auto xy = lstc::multiply(a, 1, lstc::unit_vector(a.field, 2, 0), 1,
                                   lstc::unit_vector(a.field, 2, 1));
    CHECK(xy == lstc::FieldVec<RationalField>{lstc::make_fraction(2, 3)});
}

TEST_CASE("report serialization")
{
    // homology groups
    const lstc::HomologyGroup g{3, 2, {lstc::Int(2), lstc::Int(4)}};
    const Json gj = lstc::group_json(g);
    CHECK(gj.at("degree") == 3);
    CHECK(gj.at("free_rank") == 2);
    CHECK(gj.at("torsion") == Json({"2", "4"}));
    CHECK(gj.at("name") == "Z^2 + Z/2 + Z/4");

    // matrices as row-major decimal strings
    lstc::IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = -7;
    CHECK(lstc::matrix_json(m) ==
          Json::array({Json::array({"1", "0"}), Json::array({"0", "-7"})}));

    // points as reduced fractions
    const lstc::RationalVector x = {lstc::make_fraction(1, 2), lstc::make_fraction(-2, 4)};
    CHECK(lstc::point_json(x) == Json({"1/2", "-1/2"}));

    // identity report carries per-table counters
    const lstc::IdentityReport r = lstc::verify_identities(lstc::Family::assoc, 3, 5, 11);
    const Json rj = lstc::report_json(r);
    CHECK(rj.at("ok") == true);
    CHECK(rj.at("seed") == 11);
    CHECK(rj.at("total_failures") == 0);
    CHECK(rj.at("tables").is_object());

    // berstein result: both branches carry their witness
    const lstc::BersteinResult nz = lstc::berstein_svarc_power(lstc::cyclic_group(2), 2);
    const Json nzj = lstc::berstein_json(nz);
    CHECK(nzj.at("nonzero") == true);
    CHECK(nzj.contains("certificate"));
    CHECK_FALSE(nzj.contains("primitive"));
}

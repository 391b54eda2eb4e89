#include "lstc/polytopes.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

using lstc::Family;
using lstc::PolytopeId;
using lstc::Rational;
using lstc::RationalVector;

namespace {

RationalVector pt(const std::vector<std::string>& coords)
{
    return lstc::parse_fractions(coords);
}

}  // namespace

TEST_CASE("associahedron membership")
{
    CHECK(lstc::contains({Family::assoc, 2}, pt({"0", "1"})));
    CHECK_FALSE(lstc::contains({Family::assoc, 2}, pt({"1", "0"})));
    CHECK_FALSE(lstc::contains({Family::assoc, 2}, pt({"1/2", "1/2"})));

    CHECK(lstc::contains({Family::assoc, 3}, pt({"0", "0", "2"})));
    CHECK(lstc::contains({Family::assoc, 3}, pt({"0", "1/2", "3/2"})));
    CHECK(lstc::contains({Family::assoc, 3}, pt({"0", "1", "1"})));
    CHECK_FALSE(lstc::contains({Family::assoc, 3}, pt({"0", "3/2", "1/2"})));
    CHECK_FALSE(lstc::contains({Family::assoc, 3}, pt({"0", "1/2", "1"})));
    CHECK_FALSE(lstc::contains({Family::assoc, 3}, pt({"0", "-1/2", "5/2"})));

    CHECK_FALSE(lstc::contains({Family::assoc, 3}, pt({"0", "1"})));
    CHECK_THROWS_AS(lstc::contains({Family::assoc, 1}, pt({"0"})), std::domain_error);
}

TEST_CASE("multiplihedron membership")
{
    CHECK(lstc::contains({Family::mult, 1}, pt({"1/2"})));
    CHECK_FALSE(lstc::contains({Family::mult, 1}, pt({"0"})));
    CHECK_FALSE(lstc::contains({Family::mult, 1}, pt({"1"})));

    CHECK(lstc::contains({Family::mult, 2}, pt({"0", "3/2"})));
    CHECK(lstc::contains({Family::mult, 2}, pt({"1/2", "1"})));
    CHECK(lstc::contains({Family::mult, 2}, pt({"1/4", "5/4"})));
    CHECK_FALSE(lstc::contains({Family::mult, 2}, pt({"3/4", "3/4"})));
    CHECK_FALSE(lstc::contains({Family::mult, 2}, pt({"1/2", "1/2"})));
}

TEST_CASE("primed charts")
{
    CHECK(lstc::to_prime(Family::assoc, pt({"0", "1", "1"})) == pt({"0", "1", "2"}));
    CHECK(lstc::from_prime(Family::assoc, pt({"0", "1", "2"})) == pt({"0", "1", "1"}));
    CHECK(lstc::to_prime(Family::mult, pt({"1/2", "1"})) == pt({"1/2", "3/2"}));
    CHECK(lstc::contains({Family::mult, 2, true}, pt({"1/2", "3/2"})));

    CHECK_THROWS_AS(lstc::to_prime(Family::assoc, pt({"1", "0"})), std::domain_error);
    CHECK_THROWS_AS(lstc::from_prime(Family::assoc, pt({"0", "2", "1"})), std::domain_error);

    lstc::SplitMix64 rng(2026);
    for (int round = 0; round < 125; ++round) {
        for (Family f : {Family::assoc, Family::mult}) {
            for (int n = lstc::min_arity(f); n <= 5; ++n) {
                const RationalVector x = lstc::sample_point({f, n, false}, rng);
                const RationalVector u = lstc::to_prime(f, x);
                CHECK(lstc::contains({f, n, true}, u));
                CHECK(lstc::from_prime(f, u) == x);
            }
        }
    }
}

TEST_CASE("boundary index sets")
{
    const std::vector<lstc::BoundaryIndex> a4{{1, 2, 3}, {2, 2, 3}, {1, 3, 2}, {2, 3, 2}, {3, 3, 2}};
    CHECK(lstc::assoc_boundary_indices(4) == a4);
    CHECK(lstc::assoc_boundary_indices(2).empty());

    for (int n = 2; n <= 8; ++n) {
        CHECK(lstc::assoc_boundary_indices(n).size() ==
              static_cast<std::size_t>((n - 2) * (n + 1) / 2));
        CHECK(lstc::mult_boundary_indices(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(lstc::mult_join_indices(n).size() == (std::size_t{1} << (n - 1)) - 1);
    }
    CHECK(lstc::mult_boundary_indices(1).empty());
    CHECK(lstc::mult_join_indices(1).empty());

    const std::vector<lstc::JoinIndex> b4{{{1, 3}}, {{2, 2}}, {{3, 1}},       {{1, 1, 2}},
                                          {{1, 2, 1}}, {{2, 1, 1}}, {{1, 1, 1, 1}}};
    CHECK(lstc::mult_join_indices(4) == b4);
}

TEST_CASE("face maps on frozen inputs")
{
    CHECK(lstc::assoc_boundary(2, pt({"0", "1"}), pt({"0", "1", "1"})) == pt({"0", "0", "1", "2"}));
    CHECK(lstc::mult_boundary_k(1, pt({"1/2"}), pt({"0", "1"})) == pt({"0", "3/2"}));
    CHECK(lstc::mult_boundary_k(1, pt({"1/2"}), pt({"0", "1", "1"})) == pt({"0", "1", "3/2"}));
    CHECK(lstc::mult_boundary_join(pt({"0", "1"}), {pt({"1/2"}), pt({"1/2"})}) == pt({"1/2", "1"}));
    CHECK(lstc::mult_boundary_join(pt({"0", "1"}), {pt({"1/2"}), pt({"0", "3/2"})}) ==
          pt({"1/2", "0", "2"}));

    CHECK_THROWS_AS(lstc::assoc_boundary(3, pt({"0", "1"}), pt({"0", "1"})), std::domain_error);
    CHECK_THROWS_AS(lstc::assoc_boundary(1, pt({"1", "0"}), pt({"0", "1"})), std::domain_error);
    CHECK_THROWS_AS(lstc::mult_boundary_k(1, pt({"0", "1"}), pt({"0", "1"})), std::domain_error);
    CHECK_THROWS_AS(lstc::mult_boundary_join(pt({"0", "1"}), {pt({"1/2"})}), std::domain_error);
    CHECK_THROWS_AS(lstc::mult_boundary_join(pt({"0", "1", "1"}), {pt({"1/2"}), pt({"1/2"})}),
                    std::domain_error);
}

TEST_CASE("face map outputs stay in the target polytope")
{
    lstc::SplitMix64 rng(71);
    for (int round = 0; round < 40; ++round) {
        for (int n = 3; n <= 6; ++n) {
            for (const auto& ix : lstc::assoc_boundary_indices(n)) {
                const auto rho = lstc::sample_point({Family::assoc, ix.r, false}, rng);
                const auto sigma = lstc::sample_point({Family::assoc, ix.s, false}, rng);
                CHECK(lstc::contains({Family::assoc, n},
                                     lstc::assoc_boundary(ix.k, rho, sigma)));
            }
            for (const auto& ix : lstc::mult_boundary_indices(n)) {
                const auto rho = lstc::sample_point({Family::mult, ix.r, false}, rng);
                const auto sigma = lstc::sample_point({Family::assoc, ix.s, false}, rng);
                CHECK(lstc::contains({Family::mult, n},
                                     lstc::mult_boundary_k(ix.k, rho, sigma)));
            }
            for (const auto& jx : lstc::mult_join_indices(n)) {
                const auto tau =
                    lstc::sample_point({Family::assoc, static_cast<int>(jx.parts.size()), false}, rng);
                std::vector<RationalVector> rhos;
                for (int p : jx.parts)
                    rhos.push_back(lstc::sample_point({Family::mult, p, false}, rng));
                CHECK(lstc::contains({Family::mult, n}, lstc::mult_boundary_join(tau, rhos)));
            }
        }
    }
}

TEST_CASE("prefix adjustment")
{
    CHECK(lstc::xi(pt({"0", "1", "1", "1"})) == pt({"0", "0", "1", "1"}));
    CHECK(lstc::xi(pt({"0", "0", "1", "2"})) == pt({"0", "0", "1", "1"}));
    CHECK(lstc::xi(pt({"1", "1", "1"})) == pt({"0", "1", "1"}));

    CHECK_THROWS_AS(lstc::xi(RationalVector{}), std::domain_error);
    CHECK_THROWS_AS(lstc::xi(pt({"1", "-1"})), std::domain_error);

    lstc::SplitMix64 rng(5);
    for (int round = 0; round < 500; ++round) {
        RationalVector t(1 + rng.next_below(7));
        for (auto& c : t)
            c = Rational(static_cast<int>(rng.next_below(9)),
                         static_cast<int>(1 + rng.next_below(4)));
        const RationalVector fixed = lstc::xi(t);
        REQUIRE(fixed.size() == t.size());
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            CHECK(fixed[i] >= 0);
            CHECK(fixed[i] <= t[i]);
        }
    }
}

TEST_CASE("degeneracies on frozen inputs")
{
    CHECK(lstc::assoc_degeneracy(1, pt({"0", "1", "1", "1"})) == pt({"0", "1", "1"}));
    CHECK(lstc::assoc_degeneracy(2, pt({"0", "1", "1", "1"})) == pt({"0", "1", "1"}));
    CHECK(lstc::mult_degeneracy(1, pt({"0", "3/2"})) == pt({"1/2"}));
    CHECK(lstc::mult_degeneracy(2, pt({"1/2", "1"})) == pt({"1/2"}));

    CHECK_THROWS_AS(lstc::assoc_degeneracy(1, pt({"0", "1"})), std::domain_error);
    CHECK_THROWS_AS(lstc::assoc_degeneracy(4, pt({"0", "1", "1"})), std::domain_error);
    CHECK_THROWS_AS(lstc::mult_degeneracy(1, pt({"1/2"})), std::domain_error);

    lstc::SplitMix64 rng(99);
    for (int round = 0; round < 60; ++round) {
        for (int n = 3; n <= 6; ++n) {
            const auto tau = lstc::sample_point({Family::assoc, n, false}, rng);
            for (int j = 1; j <= n; ++j)
                CHECK(lstc::contains({Family::assoc, n - 1}, lstc::assoc_degeneracy(j, tau)));
        }
        for (int n = 2; n <= 6; ++n) {
            const auto tau = lstc::sample_point({Family::mult, n, false}, rng);
            for (int j = 1; j <= n; ++j)
                CHECK(lstc::contains({Family::mult, n - 1}, lstc::mult_degeneracy(j, tau)));
        }
    }
}

TEST_CASE("exchange rule spot checks")
{
    const RationalVector sigma3 = pt({"0", "1", "1"});
    const RationalVector glued = lstc::assoc_boundary(2, pt({"0", "1"}), sigma3);
    CHECK(lstc::assoc_degeneracy(1, glued) == sigma3);

    const RationalVector rho = pt({"0", "1/2", "3/2"});
    const RationalVector edge = pt({"0", "1"});
    CHECK(lstc::assoc_degeneracy(4, lstc::assoc_boundary(2, rho, edge)) ==
          lstc::assoc_boundary(2, lstc::assoc_degeneracy(3, rho), edge));
    CHECK(lstc::assoc_degeneracy(4, lstc::assoc_boundary(2, rho, edge)) == pt({"0", "0", "2"}));
    CHECK(lstc::assoc_degeneracy(1, lstc::assoc_boundary(3, rho, edge)) ==
          lstc::assoc_boundary(2, lstc::assoc_degeneracy(1, rho), edge));

    CHECK(lstc::mult_degeneracy(1, lstc::mult_boundary_join(edge, {pt({"1/2"}), pt({"1/2"})})) ==
          pt({"1/2"}));
}

TEST_CASE("identity verification passes for the real maps")
{
    const auto assoc_report = lstc::verify_identities(Family::assoc, 5, 12, 2026);
    CHECK(assoc_report.ok());
    CHECK(assoc_report.total_checks() > 0);
    CHECK(assoc_report.tables.count("degeneracy_boundary") == 1);

    const auto mult_report = lstc::verify_identities(Family::mult, 5, 12, 2026);
    CHECK(mult_report.ok());
    CHECK(mult_report.tables.count("degeneracy_boundary") == 1);
    CHECK(mult_report.tables.count("degeneracy_join") == 1);

    const auto repeat = lstc::verify_identities(Family::mult, 5, 12, 2026);
    CHECK(repeat.total_checks() == mult_report.total_checks());
    CHECK(repeat.failure_samples == mult_report.failure_samples);
}

TEST_CASE("identity verification flags perturbed maps")
{
    lstc::FaceMaps no_fold;
    no_fold.assoc_boundary = [](int k, const RationalVector& rho, const RationalVector& sigma) {
        RationalVector out = lstc::assoc_boundary(k, rho, sigma);
        out[k + sigma.size() - 2] -= rho[k - 1];
        out[out.size() - 1] += rho[k - 1];
        return out;
    };
    CHECK_FALSE(lstc::verify_identities(Family::assoc, 4, 6, 7, no_fold).ok());

    lstc::FaceMaps shifted_slot;
    shifted_slot.mult_degeneracy = [](int j, const RationalVector& tau) {
        return lstc::mult_degeneracy(j > 1 ? j - 1 : j + 1, tau);
    };
    CHECK_FALSE(lstc::verify_identities(Family::mult, 4, 6, 7, shifted_slot).ok());
}

TEST_CASE("point sampling is deterministic and in range")
{
    CHECK(lstc::sample_point({Family::mult, 1, false}, 7) == pt({"1/2"}));
    CHECK(lstc::sample_point({Family::assoc, 2, false}, 7) == pt({"0", "1"}));
    const auto a = lstc::sample_point({Family::assoc, 6, false}, std::uint64_t{31337});
    const auto b = lstc::sample_point({Family::assoc, 6, false}, std::uint64_t{31337});
    CHECK(a == b);
    CHECK(lstc::contains({Family::assoc, 6}, a));
    const auto primed = lstc::sample_point({Family::mult, 5, true}, std::uint64_t{11});
    CHECK(lstc::contains({Family::mult, 5, true}, primed));
}

TEST_CASE("boundary cell location")
{
    const auto interior = lstc::boundary_cell_locate(Family::assoc, pt({"0", "1/2", "3/2"}));
    CHECK(interior.empty());

    const auto cells = lstc::boundary_cell_locate(Family::assoc, pt({"0", "0", "1", "2"}));
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].index == lstc::BoundaryIndex{2, 2, 3});
    CHECK(cells[0].factors == std::vector<RationalVector>{pt({"0", "1"}), pt({"0", "1", "1"})});
    CHECK(cells[1].index == lstc::BoundaryIndex{2, 3, 2});
    CHECK(cells[1].factors == std::vector<RationalVector>{pt({"0", "0", "2"}), pt({"0", "1"})});

    const auto mcells = lstc::boundary_cell_locate(Family::mult, pt({"1/2", "1"}));
    REQUIRE(mcells.size() == 1);
    CHECK(mcells[0].kind == lstc::LocatedCell::Kind::join);
    CHECK(mcells[0].parts == std::vector<int>{1, 1});
    CHECK(mcells[0].factors ==
          std::vector<RationalVector>{pt({"0", "1"}), pt({"1/2"}), pt({"1/2"})});

    const auto kcells = lstc::boundary_cell_locate(Family::mult, pt({"0", "3/2"}));
    REQUIRE(kcells.size() == 1);
    CHECK(kcells[0].kind == lstc::LocatedCell::Kind::mult);
    CHECK(kcells[0].index == lstc::BoundaryIndex{1, 1, 2});
    CHECK(kcells[0].factors == std::vector<RationalVector>{pt({"1/2"}), pt({"0", "1"})});

    CHECK_THROWS_AS(lstc::boundary_cell_locate(Family::assoc, pt({"1", "0"})), std::domain_error);
}

TEST_CASE("face images are located where they were glued")
{
    lstc::SplitMix64 rng(404);
    for (int round = 0; round < 30; ++round) {
        for (int n = 3; n <= 5; ++n) {
            for (const auto& ix : lstc::assoc_boundary_indices(n)) {
                const auto rho = lstc::sample_point({Family::assoc, ix.r, false}, rng);
                const auto sigma = lstc::sample_point({Family::assoc, ix.s, false}, rng);
                const auto x = lstc::assoc_boundary(ix.k, rho, sigma);
                bool found = false;
                for (const auto& cell : lstc::boundary_cell_locate(Family::assoc, x))
                    if (cell.index == ix && cell.factors[0] == rho && cell.factors[1] == sigma)
                        found = true;
                CHECK(found);
            }
            for (const auto& jx : lstc::mult_join_indices(n)) {
                const auto tau =
                    lstc::sample_point({Family::assoc, static_cast<int>(jx.parts.size()), false}, rng);
                std::vector<RationalVector> rhos;
                for (int p : jx.parts)
                    rhos.push_back(lstc::sample_point({Family::mult, p, false}, rng));
                const auto x = lstc::mult_boundary_join(tau, rhos);
                bool found = false;
                for (const auto& cell : lstc::boundary_cell_locate(Family::mult, x))
                    if (cell.kind == lstc::LocatedCell::Kind::join && cell.parts == jx.parts &&
                        cell.factors[0] == tau)
                        found = true;
                CHECK(found);
            }
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccstats/poly.hpp"
#include "ccstats/rng.hpp"
#include "oracle_helpers.hpp"

#include <map>
#include <stdexcept>

using namespace ccstats;

TEST_CASE("evaluation") {
    const Field f3 = Field::make(3, 1);
    CHECK(Poly(f3, {1, 0, 1}).eval(2) == 2);  // x^2 + 1 at 2
    CHECK(Poly::zero(f3).eval(2) == 0);
    CHECK(Poly::zero(f3).degree() == Poly::kZeroDegree);

    const Field f5 = Field::make(5, 1);
    CHECK(Poly::x(f5).eval(3) == 3);
}

TEST_CASE("gcd examples") {
    const Field f3 = Field::make(3, 1);
    CHECK(poly_gcd(Poly(f3, {0, 0, 1}), Poly::x(f3)) == Poly::x(f3));

    const Field f2 = Field::make(2, 1);
    CHECK(poly_gcd(Poly::x(f2), Poly(f2, {1, 1})).is_one());
    // x^2+x = x(x+1), x^2+1 = (x+1)^2
    CHECK(poly_gcd(Poly(f2, {0, 1, 1}), Poly(f2, {1, 0, 1})) == Poly(f2, {1, 1}));

    CHECK_THROWS_AS(poly_gcd(Poly::zero(f2), Poly::zero(f2)), std::domain_error);
    CHECK(poly_gcd(Poly::zero(f3), Poly(f3, {0, 2})) == Poly::x(f3));
}

TEST_CASE("divmod and text round trip") {
    const Field f5 = Field::make(5, 1);
    const Poly a(f5, {1, 2, 0, 3});
    const Poly b(f5, {2, 1});
    const auto dm = a.divmod(b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
    CHECK_THROWS_AS(a.divmod(Poly::zero(f5)), std::domain_error);

    CHECK(Poly::from_text(f5, a.to_text()) == a);
    CHECK(Poly::from_text(f5, "0").is_zero());
    CHECK(Poly(f5, {1, 0, 1}).to_text() == "1,0,1");
    CHECK_THROWS_AS(Poly::from_text(f5, "7"), std::invalid_argument);
}

TEST_CASE("square-free decomposition examples") {
    const Field f3 = Field::make(3, 1);
    // x(x+1)^2 = x^3 + 2x^2 + x
    const auto parts = squarefree_decompose(Poly(f3, {0, 1, 2, 1}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].part == Poly::x(f3));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].part == Poly(f3, {1, 1}));
    CHECK(parts[1].multiplicity == 2);

    // x^3 + 1 = (x+1)^3 in characteristic 3
    const auto frob = squarefree_decompose(Poly(f3, {1, 0, 0, 1}));
    REQUIRE(frob.size() == 1);
    CHECK(frob[0].part == Poly(f3, {1, 1}));
    CHECK(frob[0].multiplicity == 3);

    const auto plain = squarefree_decompose(Poly::x(f3));
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].part == Poly::x(f3));
    CHECK(plain[0].multiplicity == 1);

    CHECK_THROWS_AS(squarefree_decompose(Poly::zero(f3)), std::domain_error);

    // (x^2+x+1)^2 has zero derivative over F_2
    const Field f2 = Field::make(2, 1);
    const Poly irr(f2, {1, 1, 1});
    const auto squared = squarefree_decompose(irr * irr);
    REQUIRE(squared.size() == 1);
    CHECK(squared[0].part == irr);
    CHECK(squared[0].multiplicity == 2);
}

TEST_CASE("power-free decomposition examples") {
    const Field f5 = Field::make(5, 1);
    const Poly f = Poly::x(f5) * Poly(f5, {1, 1}) * Poly(f5, {1, 1});
    const auto outcome = powerfree_decompose(f, 3);
    const auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome);
    REQUIRE(decomp != nullptr);
    CHECK(decomp->unit == 1);
    CHECK(decomp->parts[0] == Poly::x(f5));
    CHECK(decomp->parts[1] == Poly(f5, {1, 1}));
    CHECK(decomp->reassemble() == f);

    const auto cube = powerfree_decompose(Poly(f5, {0, 0, 0, 1}), 3);
    const auto* bad = std::get_if<NotPowerFree>(&cube);
    REQUIRE(bad != nullptr);
    CHECK(bad->factor == Poly::x(f5));
    CHECK(bad->multiplicity == 3);

    const Field f3 = Field::make(3, 1);
    const auto scaled = powerfree_decompose(Poly(f3, {0, 2}), 2);
    const auto* sc = std::get_if<PowerFreeDecomposition>(&scaled);
    REQUIRE(sc != nullptr);
    CHECK(sc->unit == 2);
    CHECK(sc->parts[0] == Poly::x(f3));
}

TEST_CASE("weighted degree") {
    const Field f5 = Field::make(5, 1);
    const Poly f = Poly::x(f5) * Poly(f5, {1, 1}) * Poly(f5, {1, 1});
    const auto decomp = std::get<PowerFreeDecomposition>(powerfree_decompose(f, 3));
    CHECK(weighted_degree(decomp, Weight({1, 2})) == 3);
    // parts are x and x+1, both degree 1: 1*1 + 5*1
    CHECK(weighted_degree(decomp, Weight({1, 5})) == 6);
    CHECK_THROWS_AS(weighted_degree(decomp, Weight({1, 2, 3})), std::invalid_argument);

    const auto constant = std::get<PowerFreeDecomposition>(
        powerfree_decompose(Poly::constant(f5, 4), 4));
    CHECK(weighted_degree(constant, Weight({7, 1, 9})) == 0);
    CHECK(constant.unit == 4);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(Weight({1, -1}), std::invalid_argument);
    CHECK(Weight::plain(4).entries() == std::vector<int>{1, 2, 3});
    CHECK_FALSE(Weight({1, 0, 1}).all_positive());
}

// Exhaustive cross-checks against trial-division factorization: round trip,
// uniqueness, and the square-free criterion, over all monic f of degree <= 6.
TEST_CASE("decomposition agrees with brute-force factorization") {
    for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        const Field fld = Field::make(p, e);
        oracle::for_each_monic_up_to(fld, 6, [&](const Poly& f) {
            const auto factors = oracle::factor(f);
            int max_mult = 0;
            for (const auto& [g, m] : factors) max_mult = std::max(max_mult, m);

            // squarefree_decompose must reproduce the multiplicity layers
            std::map<int, Poly> layers;
            for (const auto& [g, m] : factors) {
                auto it = layers.find(m);
                if (it == layers.end())
                    layers.emplace(m, g);
                else
                    it->second = it->second * g;
            }
            const auto sq = squarefree_decompose(f);
            REQUIRE(sq.size() == layers.size());
            for (const auto& part : sq) {
                auto it = layers.find(part.multiplicity);
                REQUIRE(it != layers.end());
                REQUIRE(part.part == it->second);
            }

            for (int n = 2; n <= 4; ++n) {
                const auto outcome = powerfree_decompose(f, n);
                if (max_mult >= n) {
                    REQUIRE(std::holds_alternative<NotPowerFree>(outcome));
                } else {
                    const auto& decomp = std::get<PowerFreeDecomposition>(outcome);
                    REQUIRE(decomp.reassemble() == f);
                    REQUIRE(weighted_degree(decomp, Weight::plain(n)) == f.degree());
                    // parts square-free and pairwise coprime
                    for (std::size_t i = 0; i < decomp.parts.size(); ++i) {
                        REQUIRE(is_squarefree(decomp.parts[i]));
                        for (std::size_t j = i + 1; j < decomp.parts.size(); ++j)
                            if (decomp.parts[i].degree() > 0 && decomp.parts[j].degree() > 0)
                                REQUIRE(poly_gcd(decomp.parts[i], decomp.parts[j]).is_one());
                    }
                }
            }

            // square-free criterion, with the vanishing-derivative caveat
            const bool sf = is_squarefree(f);
            REQUIRE(sf == (max_mult <= 1));
            if (f.degree() >= 1 && f.derivative().is_zero()) REQUIRE_FALSE(sf);
            if (f.degree() >= 1 && !f.derivative().is_zero())
                REQUIRE(sf == poly_gcd(f, f.derivative()).is_one());
        });
    }
}

TEST_CASE("ring and gcd laws on seeded random polynomials") {
    for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {7u, 1u}, {3u, 2u}}) {
        const Field fld = Field::make(p, e);
        SplitMix64 rng = rng_stream(0xabcdef, fld.q());
        auto random_poly = [&](int max_deg) {
            const int deg = static_cast<int>(rng.uniform_below(max_deg + 2)) - 1;
            if (deg < 0) return Poly::zero(fld);
            std::vector<Elem> coeffs(deg + 1);
            for (auto& c : coeffs) c = static_cast<Elem>(rng.uniform_below(fld.q()));
            while (coeffs.back() == 0)
                coeffs.back() = static_cast<Elem>(rng.uniform_below(fld.q()));
            return Poly(fld, std::move(coeffs));
        };
        for (int trial = 0; trial < 300; ++trial) {
            const Poly a = random_poly(8), b = random_poly(8), c = random_poly(4);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == Poly::zero(fld));
            if (!b.is_zero()) {
                const auto dm = a.divmod(b);
                CHECK(dm.quotient * b + dm.remainder == a);
                CHECK(dm.remainder.degree() < b.degree());
                CHECK((a * b).divide_exact(b) == a);
            }
            if (!a.is_zero() || !b.is_zero()) {
                const Poly g = poly_gcd(a, b);
                CHECK(g.is_monic());
                if (!a.is_zero()) CHECK(a.divmod(g).remainder.is_zero());
                if (!b.is_zero()) CHECK(b.divmod(g).remainder.is_zero());
                // gcd scales with a common monic factor
                if (!c.is_zero() && (!a.is_zero() || !b.is_zero())) {
                    const Poly cm = c.monic();
                    CHECK(poly_gcd(a * cm, b * cm) == g * cm);
                }
            }
            // evaluation is a ring homomorphism
            const Elem x = static_cast<Elem>(rng.uniform_below(fld.q()));
            CHECK((a * b).eval(x) == fld.mul(a.eval(x), b.eval(x)));
            CHECK((a + b).eval(x) == fld.add(a.eval(x), b.eval(x)));
        }
    }
}

TEST_CASE("non-monic inputs put the unit in front") {
    const Field f5 = Field::make(5, 1);
    oracle::for_each_monic_up_to(f5, 3, [&](const Poly& f) {
        for (Elem unit = 1; unit < 5; ++unit) {
            const auto outcome = powerfree_decompose(f.scaled(unit), 4);
            if (const auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome)) {
                CHECK(decomp->unit == unit);
                for (const auto& part : decomp->parts) CHECK(part.is_monic());
                CHECK(decomp->reassemble() == f.scaled(unit));
            }
        }
    });
}

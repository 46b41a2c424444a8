#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccstats/field.hpp"
#include "oracle_helpers.hpp"

#include <numeric>
#include <stdexcept>

using namespace ccstats;

namespace {

std::vector<Field> test_fields() {
    std::vector<Field> fields;
    for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u},
                        {2u, 3u}, {3u, 2u}, {13u, 1u}, {5u, 2u}, {7u, 2u}})
        fields.push_back(Field::make(p, e));
    return fields;
}

}  // namespace

TEST_CASE("field construction") {
    const Field f3 = Field::make(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.modulus().empty());

    const Field f4 = Field::make(2, 2);
    CHECK(f4.q() == 4);
    // the unique irreducible quadratic over F_2: x^2 + x + 1
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(5, 0), std::invalid_argument);
}

TEST_CASE("modulus is the lexicographically smallest irreducible") {
    // over F_3, degree 2: candidates ordered by (c0, c1); x^2 + 1 irreducible
    const Field f9 = Field::make(3, 2);
    CHECK(f9.modulus() == std::vector<Elem>{1, 0, 1});
    // deterministic across constructions
    CHECK(Field::make(3, 2).modulus() == f9.modulus());
}

TEST_CASE("basic arithmetic examples") {
    const Field f3 = Field::make(3, 1);
    CHECK(f3.mul(2, 2) == 1);

    // alpha * alpha = alpha + 1 where alpha is the residue of x mod x^2+x+1
    const Field f4 = Field::make(2, 2);
    const Elem alpha = 2;          // digits (0, 1)
    CHECK(f4.mul(alpha, alpha) == 3);  // digits (1, 1)

    const Field f5 = Field::make(5, 1);
    CHECK_THROWS_AS(f5.div(3, 0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively") {
    for (const Field& f : test_fields()) {
        const std::uint32_t q = f.q();
        if (q > 49) continue;
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.div(a, a) == 1);
            }
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
        }
    }
}

TEST_CASE("frobenius root inverts the p-th power map") {
    for (const Field& f : test_fields())
        for (Elem a = 0; a < f.q(); ++a) {
            CHECK(f.pth_root(f.pow(a, f.p())) == a);
            CHECK(f.pow(f.pth_root(a), f.p()) == a);
        }
}

TEST_CASE("checked elements detect field mismatch") {
    const Field f3 = Field::make(3, 1);
    const Field f5 = Field::make(5, 1);
    const FieldElement a(f3, 2), b(f3, 2);
    CHECK((a * b).value() == 1);
    CHECK((a + b).value() == 1);
    const FieldElement c(f5, 2);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(a / FieldElement(f3, 0), std::domain_error);
    CHECK_THROWS_AS(FieldElement(f3, 3), std::invalid_argument);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("power classifier examples") {
    const Field f7 = Field::make(7, 1);
    const PowerClassifier cubes(f7, 3);
    CHECK(cubes.sigma() == 3);
    CHECK(cubes.is_mth_power(1));
    CHECK(cubes.is_mth_power(6));
    for (Elem a : {2u, 3u, 4u, 5u}) CHECK_FALSE(cubes.is_mth_power(a));

    const Field f2 = Field::make(2, 1);
    const PowerClassifier trivial(f2, 2);
    CHECK(trivial.sigma() == 1);
    CHECK(trivial.is_mth_power(1));

    const Field f5 = Field::make(5, 1);
    const PowerClassifier squares(f5, 2);
    CHECK(squares.sigma() == 2);
    CHECK(squares.is_mth_power(1));
    CHECK(squares.is_mth_power(4));
    CHECK_FALSE(squares.is_mth_power(2));
    CHECK_FALSE(squares.is_mth_power(3));

    CHECK_THROWS_AS(PowerClassifier(f5, 1), std::invalid_argument);
}

TEST_CASE("classifier invariants against witness search") {
    for (const Field& f : test_fields()) {
        if (f.q() > 49) continue;
        for (std::uint32_t m = 2; m <= 6; ++m) {
            const PowerClassifier cls(f, m);
            CHECK(cls.sigma() == std::gcd(m, f.q() - 1));
            CHECK(cls.power_count() * cls.sigma() == f.q() - 1);
            CHECK_FALSE(cls.is_mth_power(0));
            for (Elem a = 1; a < f.q(); ++a) {
                REQUIRE(cls.is_mth_power(a) == oracle::is_mth_power_brute(f, m, a));
                // membership criterion a^{(q-1)/sigma} = 1
                REQUIRE(cls.is_mth_power(a) ==
                        (f.pow(a, (f.q() - 1) / cls.sigma()) == 1));
            }
        }
    }
}

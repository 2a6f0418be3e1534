#include "doctest.h"

#include "cuspcoeff/character.hpp"

using namespace cuspcoeff;

TEST_CASE("trivial characters") {
    DirichletCharacter chi(11);
    CHECK(chi.is_trivial());
    CHECK(chi.conductor() == 1);
    for (i64 n = 1; n <= 10; ++n) CHECK(chi.value(n)->is_one());
    CHECK(!chi.value(11).has_value());
}

TEST_CASE("the nontrivial character mod 4") {
    auto chi = DirichletCharacter::from_generator_values(
        4, {{3, RootOfUnity::minus_one()}});
    CHECK(chi.value(3).value() == RootOfUnity::minus_one());
    CHECK(chi.conductor() == 4);
    CHECK(chi.is_odd());
}

TEST_CASE("order-6 character mod 9") {
    auto chi =
        DirichletCharacter::from_generator_values(9, {{2, RootOfUnity(1, 6)}});
    CHECK(chi.order() == 6);
    CHECK(chi.is_odd());
    // brute-force minimal modulus: chi does not factor through 1 or 3
    CHECK(chi.conductor() == 9);
    CHECK(chi.value(4).value() == RootOfUnity(1, 3));
    CHECK(chi.value(8).value() == RootOfUnity(1, 2));
}

TEST_CASE("inconsistent generator data rejected") {
    // 3 has order 2 mod 4, so assigning it a primitive cube root fails.
    CHECK_THROWS_AS(DirichletCharacter::from_generator_values(
                        4, {{3, RootOfUnity(1, 3)}}),
                    std::domain_error);
}

TEST_CASE("complete multiplicativity over the corpus") {
    for (i64 M : {1, 3, 4, 8, 9, 11, 12, 36, 45}) {
        for (const auto& chi : DirichletCharacter::all_mod(M)) {
            for (i64 m = 1; m <= 40; ++m) {
                if (gcd_i64(m, M) != 1) continue;
                for (i64 n = 1; n <= 40; ++n) {
                    if (gcd_i64(n, M) != 1) continue;
                    CHECK(chi.value(m * n).value() ==
                          chi.value(m).value() * chi.value(n).value());
                }
            }
        }
    }
}

TEST_CASE("character counts") {
    CHECK(DirichletCharacter::all_mod(1).size() == 1);
    CHECK(DirichletCharacter::all_mod(9).size() == 6);
    CHECK(DirichletCharacter::all_mod(12).size() == 4);
    CHECK(DirichletCharacter::all_mod(16).size() == 8);
}

TEST_CASE("local components reconstruct via CRT") {
    for (i64 M : {9, 12, 36, 45}) {
        for (const auto& chi : DirichletCharacter::all_mod(M)) {
            auto prim = chi.primitive_part();
            i64 f = prim.modulus();
            CHECK(f == chi.conductor());
            std::vector<std::pair<i64, DirichletCharacter>> locals;
            for (auto [p, e] : factor(M).factors) {
                auto lc = chi.local_component(p);
                CHECK(lc.conductor() == lc.modulus());
                CHECK(lc.modulus() == p_part(f == 1 ? 1 : f, p));
                locals.emplace_back(p, lc);
            }
            for (i64 n = 1; n <= M; ++n) {
                if (gcd_i64(n, M) != 1) continue;
                RootOfUnity prod;
                for (auto& [p, lc] : locals)
                    prod = prod * lc.value(mod_norm(n, lc.modulus())).value();
                CHECK(prod == chi.value(n).value());
            }
        }
    }
}

TEST_CASE("chi mod 12 splits into conductors 4 and 3") {
    // chi = chi_4 * chi_3 has conductor 12; components have conductors 4, 3.
    auto chi = DirichletCharacter::from_generator_values(
        12, {{7, RootOfUnity::minus_one()}, {5, RootOfUnity::minus_one()}});
    CHECK(chi.conductor() == 12);
    CHECK(chi.local_component(2).conductor() == 4);
    CHECK(chi.local_component(3).conductor() == 3);
    // primitive mod 9 stays itself at p = 3
    auto chi9 =
        DirichletCharacter::from_generator_values(9, {{2, RootOfUnity(1, 6)}});
    CHECK(chi9.local_component(3) == chi9);
}

#include "doctest.h"
#include "rankeq/field.hpp"

using namespace rankeq;

TEST_CASE("prime field arithmetic") {
    auto f = make_field(7, 1);
    CHECK(f->q() == 7);
    CHECK(f->add(5, 4) == 2);
    CHECK(f->mul(3, 5) == 1);
    CHECK(f->inv(3) == 5);
    CHECK(f->neg(2) == 5);
    CHECK(f->pow(3, 6) == 1);
}

TEST_CASE("composite p rejected") {
    CHECK_THROWS_AS(make_field(4, 1), CompositeP);
    CHECK_THROWS_AS(make_field(1, 1), CompositeP);
}

TEST_CASE("reducible modulus rejected") {
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(make_field(2, 2, std::vector<std::uint64_t>{1, 0, 1}),
                    ReducibleModulus);
}

TEST_CASE("F_4 via x^2 + x + 1") {
    auto f = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    CHECK(f->q() == 4);
    // alpha = code 2; alpha^2 = alpha + 1 = code 3.
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->mul(2, 3) == 1);
    CHECK(f->frobenius(2) == 3);
    CHECK(f->frobenius(3) == 2);
}

TEST_CASE("exhaustive inverses and associativity on small fields") {
    Rng rng(42);
    for (auto [p, e] : {std::pair<std::uint64_t, std::uint64_t>{2, 1},
                        {3, 1},
                        {2, 2},
                        {5, 1},
                        {3, 2},
                        {2, 4},
                        {7, 2},
                        {2, 6}}) {
        auto f = make_field(p, e, std::nullopt, &rng);
        for (Fel a = 1; a < f->q(); ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->add(a, f->neg(a)) == 0);
        }
        // Spot-check associativity and distributivity.
        for (int t = 0; t < 200; ++t) {
            Fel a = f->random(rng), b = f->random(rng), c = f->random(rng);
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) ==
                  f->add(f->mul(a, b), f->mul(a, c)));
        }
    }
}

TEST_CASE("frobenius iterated e times is the identity") {
    Rng rng(7);
    auto f = make_field(3, 3, std::nullopt, &rng);
    for (Fel a = 0; a < f->q(); ++a) {
        Fel b = a;
        for (std::uint64_t i = 0; i < f->e(); ++i) b = f->frobenius(b);
        CHECK(b == a);
    }
}

TEST_CASE("digits round-trip") {
    Rng rng(5);
    auto f = make_field(5, 3, std::nullopt, &rng);
    for (int t = 0; t < 100; ++t) {
        Fel a = f->random(rng);
        CHECK(f->from_digits(f->digits(a)) == a);
    }
}

TEST_CASE("random modulus is reproducible from the seed") {
    Rng r1(99), r2(99);
    auto f1 = make_field(2, 5, std::nullopt, &r1);
    auto f2 = make_field(2, 5, std::nullopt, &r2);
    CHECK(f1->modulus() == f2->modulus());
}

TEST_CASE("prime subfield context") {
    Rng rng(3);
    auto f = make_field(2, 3, std::nullopt, &rng);
    auto sub = f->prime_field();
    CHECK(sub->q() == 2);
    CHECK(sub->is_prime_field());
}

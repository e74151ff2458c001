#include "doctest.h"
#include "rankeq/matrix.hpp"

using namespace rankeq;

namespace {

FqPtr f2() { return make_field(2, 1); }
FqPtr f3() { return make_field(3, 1); }

}  // namespace

TEST_CASE("rref is idempotent and rank-correct") {
    Rng rng(1);
    auto field = f3();
    for (int t = 0; t < 100; ++t) {
        MatFq m = random_matrix(field, 4, 6, rng);
        auto r1 = rref(m);
        auto r2 = rref(r1.R);
        CHECK(r1.R == r2.R);
        CHECK(r1.rank == r2.rank);
        CHECK(r1.pivots == r2.pivots);
        CHECK(static_cast<int>(r1.pivots.size()) == r1.rank);
    }
}

TEST_CASE("kernel bases annihilate") {
    Rng rng(2);
    auto field = f2();
    for (int t = 0; t < 50; ++t) {
        MatFq m = random_matrix(field, 3, 5, rng);
        auto ker = right_kernel(m);
        CHECK(static_cast<int>(ker.size()) == 5 - mat_rank(m));
        for (const auto& v : ker) {
            auto mv = mat_vec(m, v);
            for (auto x : mv) CHECK(x == 0);
        }
        for (const auto& w : left_kernel(m)) {
            auto wm = mat_vec(transpose(m), w);
            for (auto x : wm) CHECK(x == 0);
        }
    }
}

TEST_CASE("solve finds solutions exactly when consistent") {
    Rng rng(3);
    auto field = f3();
    for (int t = 0; t < 100; ++t) {
        MatFq a = random_matrix(field, 4, 3, rng);
        std::vector<Fel> x0(3);
        for (auto& v : x0) v = field->random(rng);
        auto b = mat_vec(a, x0);
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(mat_vec(a, *x) == b);
    }
}

TEST_CASE("inverse round-trip") {
    Rng rng(4);
    auto field = f3();
    for (int t = 0; t < 50; ++t) {
        MatFq m = random_invertible(field, 4, rng);
        auto inv = mat_inverse(m);
        REQUIRE(inv.has_value());
        CHECK(mat_mul(m, *inv).is_identity());
        CHECK(mat_mul(*inv, m).is_identity());
    }
    MatFq z(field, 3, 3);
    CHECK(!mat_inverse(z).has_value());
    CHECK(!is_invertible(z));
}

TEST_CASE("Cayley-Hamilton") {
    Rng rng(5);
    for (const auto& field : {f2(), f3()}) {
        for (int n = 1; n <= 5; ++n) {
            for (int t = 0; t < 20; ++t) {
                MatFq m = random_matrix(field, n, n, rng);
                Poly chi = char_poly(m);
                CHECK(chi.degree() == n);
                CHECK(chi.is_monic());
                CHECK(poly_eval_mat(chi, m).is_zero());
            }
        }
    }
}

TEST_CASE("min poly divides char poly and annihilates") {
    Rng rng(6);
    auto field = f2();
    for (int t = 0; t < 80; ++t) {
        MatFq m = random_matrix(field, 4, 4, rng);
        Poly mu = min_poly(m);
        Poly chi = char_poly(m);
        CHECK(poly_eval_mat(mu, m).is_zero());
        CHECK(poly_mod(chi, mu).is_zero());
    }
}

TEST_CASE("companion matrix realizes its polynomial") {
    auto field = f2();
    Poly f(field, {1, 1, 0, 1});  // x^3 + x + 1
    MatFq c = companion_matrix(f);
    CHECK(char_poly(c) == f);
    CHECK(min_poly(c) == f);
}

TEST_CASE("char poly of diagonal matrix") {
    auto field = f3();
    MatFq d(field, 2, 2);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    // (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 2 over F_3.
    CHECK(char_poly(d) == Poly(field, {2, 0, 1}));
}

TEST_CASE("similarity transform conjugates") {
    Rng rng(7);
    auto field = f2();
    Poly f(field, {1, 1, 0, 0, 1});  // x^4 + x + 1, irreducible
    REQUIRE(poly_is_irreducible(f));
    MatFq a = companion_matrix(f);
    for (int t = 0; t < 20; ++t) {
        MatFq s = random_invertible(field, 4, rng);
        auto sinv = mat_inverse(s);
        MatFq b = mat_mul(*sinv, mat_mul(a, s));
        auto p = similarity_transform(a, b);
        REQUIRE(p.has_value());
        auto pinv = mat_inverse(*p);
        REQUIRE(pinv.has_value());
        CHECK(mat_mul(*pinv, mat_mul(a, *p)) == b);
    }
}

TEST_CASE("similarity transform rejects different min polys") {
    auto field = f2();
    MatFq a = companion_matrix(Poly(field, {1, 1, 1}));
    MatFq b = MatFq::identity(field, 2);
    CHECK(!similarity_transform(a, b).has_value());
}

TEST_CASE("similarity transform wants an irreducible min poly") {
    auto field = f2();
    MatFq a(field, 2, 2);
    a.at(0, 1) = 1;  // nilpotent, min poly x^2 reducible
    CHECK_THROWS_AS(similarity_transform(a, a), UnsupportedShape);
}

TEST_CASE("transpose, trace, pow") {
    auto field = f3();
    MatFq m(field, 2, 3, {1, 2, 0, 0, 1, 2});
    MatFq t = transpose(m);
    CHECK(t.rows() == 3);
    CHECK(t.at(2, 1) == 2);
    MatFq sq(field, 2, 2, {1, 1, 0, 2});
    CHECK(trace(sq) == 0);  // 1 + 2 = 0 mod 3
    CHECK(mat_pow(sq, 0).is_identity());
    CHECK(mat_pow(sq, 3) == mat_mul(sq, mat_mul(sq, sq)));
}

#include "doctest.h"
#include "rankeq/codes.hpp"

using namespace rankeq;

TEST_CASE("canonical basis makes equal codes compare equal") {
    auto f3 = make_field(3, 1);
    MatFq a(f3, 2, 2, {1, 0, 0, 1});
    MatFq b(f3, 2, 2, {0, 1, 1, 0});
    MatrixCode c1(f3, 2, 2, {a, b});
    MatrixCode c2(f3, 2, 2, {mat_add(a, b), mat_scale(b, 2), a});
    CHECK(c1 == c2);
    CHECK(c1.dim() == 2);
}

TEST_CASE("expansion matrix example") {
    auto f4 = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    // basis (1, alpha), v = (alpha, 1 + alpha).
    MatFq e = expansion_matrix(f4, {2, 3}, {1, 2});
    CHECK(e == MatFq(f4->prime_field(), 2, 2, {0, 1, 1, 1}));
}

TEST_CASE("expansion is F_p-linear and invertible per column") {
    Rng rng(3);
    auto f8 = make_field(2, 3, std::nullopt, &rng);
    std::vector<Fel> basis{1, 2, 4};
    std::vector<Fel> u{3, 5}, v{6, 1};
    MatFq eu = expansion_matrix(f8, u, basis);
    MatFq ev = expansion_matrix(f8, v, basis);
    std::vector<Fel> sum{f8->add(u[0], v[0]), f8->add(u[1], v[1])};
    CHECK(expansion_matrix(f8, sum, basis) == mat_add(eu, ev));
}

TEST_CASE("dependent basis rejected") {
    auto f4 = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    CHECK_THROWS_AS(expansion_matrix(f4, {1, 2}, {1, 1}), DependentBasis);
    CHECK_THROWS_AS(expansion_matrix(f4, {1, 2}, {0, 2}), DependentBasis);
}

TEST_CASE("expand_code dimension and rank weight") {
    Rng rng(5);
    auto f4 = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    MatFq gen(f4, 2, 4, {1, 2, 0, 3, 0, 1, 1, 2});
    VectorCode v(f4, gen);
    MatrixCode e = expand_code(v, {1, 2});
    CHECK(e.m() == 2);
    CHECK(e.n() == 4);
    CHECK(e.dim() == 2 * 2);  // k * m
    // rank weight of a row equals rank of its expansion
    std::vector<Fel> row{1, 2, 0, 3};
    CHECK(rank_weight(f4, row) ==
          mat_rank(expansion_matrix(f4, row, {1, 2})));
}

TEST_CASE("rank-deficient generator rejected") {
    auto f4 = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    MatFq gen(f4, 2, 2, {1, 2, 2, 3});  // row2 = alpha * row1
    CHECK_THROWS_AS(VectorCode(f4, gen), RankDeficientGenerator);
}

TEST_CASE("vector codes need a prime base field only in expansion") {
    // VectorCode itself lives over the extension; its base must be prime.
    Rng rng(9);
    auto f4 = make_field(2, 2, std::vector<std::uint64_t>{1, 1, 1});
    MatFq gen(f4, 1, 2, {1, 2});
    VectorCode v(f4, gen);
    CHECK(v.m() == 2);
    CHECK(v.k() == 1);
}

TEST_CASE("trace dual is an involution with complementary dimension") {
    Rng rng(11);
    auto f3 = make_field(3, 1);
    for (int t = 0; t < 30; ++t) {
        MatrixCode c = gen_random_code(f3, 3, 2, 2, rng);
        MatrixCode d = trace_dual(c);
        CHECK(d.dim() == 3 * 2 - c.dim());
        CHECK(trace_dual(d) == c);
        // Pairing vanishes between the two.
        for (const auto& x : c.basis())
            for (const auto& y : d.basis())
                CHECK(trace(mat_mul(x, transpose(y))) == 0);
    }
}

TEST_CASE("mul_right and mul_left by invertibles preserve dimension") {
    Rng rng(13);
    auto f2 = make_field(2, 1);
    MatrixCode c = gen_random_code(f2, 3, 4, 3, rng);
    MatFq q = random_invertible(f2, 4, rng);
    MatFq p = random_invertible(f2, 3, rng);
    MatrixCode cq = mul_right(c, q);
    MatrixCode pc = mul_left(p, c);
    CHECK(cq.dim() == c.dim());
    CHECK(pc.dim() == c.dim());
    auto qinv = mat_inverse(q);
    CHECK(mul_right(cq, *qinv) == c);
}

TEST_CASE("code containment and sum") {
    Rng rng(17);
    auto f2 = make_field(2, 1);
    MatrixCode c = gen_random_code(f2, 2, 3, 2, rng);
    for (const auto& b : c.basis()) CHECK(code_contains(c, b));
    MatrixCode d = gen_random_code(f2, 2, 3, 2, rng);
    MatrixCode s = code_sum(c, d);
    CHECK(code_contains_code(s, c));
    CHECK(code_contains_code(s, d));
}

TEST_CASE("gen_fqm_instance is consistent") {
    Rng rng(19);
    for (int t = 0; t < 10; ++t) {
        FqmInstance inst = gen_fqm_instance(2, 4, 3, 2, rng);
        CHECK(inst.expanded.dim() == 2 * 3);
        CHECK(inst.scrambled ==
              mul_right(mul_left(inst.P, inst.expanded), inst.Q));
        CHECK(inst.expanded == expand_code(inst.vec, inst.basis));
    }
}

TEST_CASE("flatten round trip") {
    auto f5 = make_field(5, 1);
    MatFq m(f5, 2, 3, {1, 2, 3, 4, 0, 1});
    CHECK(unflatten(f5, 2, 3, flatten(m)) == m);
}

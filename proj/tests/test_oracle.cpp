#include "doctest.h"
#include "rankeq/equiv.hpp"
#include "rankeq/oracle.hpp"

using namespace rankeq;

namespace {

MatFq unit_mat(const FqPtr& f, int n, int i, int j) {
    MatFq m(f, n, n);
    m.at(i, j) = 1;
    return m;
}

}  // namespace

TEST_CASE("brute_mcre finds identity on equal codes") {
    Rng rng(1);
    auto f2 = make_field(2, 1);
    MatrixCode c = gen_random_code(f2, 3, 3, 2, rng);
    auto q = brute_mcre(c, c);
    REQUIRE(q.has_value());
    CHECK(mul_right(c, *q) == c);
}

TEST_CASE("brute_mcre finds scrambles and respects dimension") {
    Rng rng(2);
    auto f2 = make_field(2, 1);
    MatrixCode c = gen_random_code(f2, 3, 3, 3, rng);
    MatFq q0 = random_invertible(f2, 3, rng);
    MatrixCode d = mul_right(c, q0);
    auto q = brute_mcre(c, d);
    REQUIRE(q.has_value());
    CHECK(mul_right(c, *q) == d);
    MatrixCode bigger = gen_random_code(f2, 3, 3, 4, rng);
    CHECK(!brute_mcre(c, bigger).has_value());
}

TEST_CASE("brute_mcre budget") {
    Rng rng(3);
    auto f3 = make_field(3, 1);
    MatrixCode c = gen_random_code(f3, 2, 5, 2, rng);
    OracleCaps caps;
    caps.mcre = 100;
    CHECK_THROWS_AS(brute_mcre(c, c, caps), BudgetExceeded);
}

TEST_CASE("brute_mce on tiny codes") {
    Rng rng(5);
    auto f2 = make_field(2, 1);
    MatrixCode c = gen_random_code(f2, 2, 3, 2, rng);
    MatFq p0 = random_invertible(f2, 2, rng);
    MatFq q0 = random_invertible(f2, 3, rng);
    MatrixCode d = mul_right(mul_left(p0, c), q0);
    auto pq = brute_mce(c, d);
    REQUIRE(pq.has_value());
    Witness w;
    w.left = pq->first;
    w.right = pq->second;
    CHECK(verify_witness(c, d, w));
}

TEST_CASE("brute_monomial round trip") {
    Rng rng(7);
    auto f3 = make_field(3, 1);
    MatFq b(f3, 2, 3, {1, 0, 2, 0, 1, 1});
    MatFq s(f3, 2, 2, {1, 1, 0, 1});
    MatFq dg(f3, 3, 3);
    dg.at(0, 0) = 2;
    dg.at(1, 1) = 1;
    dg.at(2, 2) = 2;
    MatFq p(f3, 3, 3);
    p.at(1, 0) = 1;
    p.at(2, 1) = 1;
    p.at(0, 2) = 1;
    MatFq a = mat_mul(mat_mul(s, b), mat_mul(dg, p));
    auto w = brute_monomial(a, b);
    REQUIRE(w.has_value());
    CHECK(mat_mul(mat_mul(w->s, b), mat_mul(w->dg, w->p)) == a);
    // Inequivalent: different row space dimension profile.
    MatFq c(f3, 2, 3, {1, 0, 0, 0, 0, 0});
    CHECK(!brute_monomial(a, c).has_value());
}

TEST_CASE("brute_radical examples") {
    auto f2 = make_field(2, 1);
    // Upper triangular 2x2.
    MatAlgebra ut(f2, 2,
                  {unit_mat(f2, 2, 0, 0), unit_mat(f2, 2, 0, 1),
                   unit_mat(f2, 2, 1, 1)});
    auto r = brute_radical(ut);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == unit_mat(f2, 2, 0, 1));
    // M_2(F_2): semisimple.
    MatAlgebra m2(f2, 2,
                  {unit_mat(f2, 2, 0, 0), unit_mat(f2, 2, 0, 1),
                   unit_mat(f2, 2, 1, 0), unit_mat(f2, 2, 1, 1)});
    CHECK(brute_radical(m2).empty());
    // Scalars.
    MatAlgebra sc(f2, 2, {MatFq::identity(f2, 2)});
    CHECK(brute_radical(sc).empty());
}

TEST_CASE("brute_radical budget") {
    auto f2 = make_field(2, 1);
    std::vector<MatFq> gens;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) gens.push_back(unit_mat(f2, 5, i, j));
    MatAlgebra big(f2, 5, gens);
    CHECK_THROWS_AS(brute_radical(big), BudgetExceeded);
}

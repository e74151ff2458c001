#include <numeric>

#include "doctest.h"
#include "rankeq/oracle.hpp"
#include "rankeq/reduction.hpp"

using namespace rankeq;

namespace {

struct MonomialInstance {
    MatFq a, b, s, dg, p;
};

MonomialInstance gen_monomial(const FqPtr& field, int k, int n, Rng& rng) {
    MonomialInstance mi{MatFq(), MatFq(), MatFq(), MatFq(), MatFq()};
    for (;;) {
        mi.b = random_matrix(field, k, n, rng);
        if (mat_rank(mi.b) != k) continue;
        bool zero_col = false;
        for (int j = 0; j < n && !zero_col; ++j) {
            bool all = true;
            for (int i = 0; i < k; ++i)
                if (mi.b.at(i, j) != 0) all = false;
            zero_col = all;
        }
        if (!zero_col) break;
    }
    mi.s = random_invertible(field, k, rng);
    mi.dg = MatFq(field, n, n);
    for (int j = 0; j < n; ++j) mi.dg.at(j, j) = field->random_nonzero(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = n - 1; j > 0; --j)
        std::swap(perm[j], perm[rng.below(j + 1)]);
    mi.p = MatFq(field, n, n);
    for (int j = 0; j < n; ++j) mi.p.at(perm[j], j) = 1;
    mi.a = mat_mul(mat_mul(mi.s, mi.b), mat_mul(mi.dg, mi.p));
    return mi;
}

// Restricts the monomial part of a = s b dg p to the deduplicated columns:
// retained column i of a equals alpha times some retained column j of b
// under s, which pins down the permutation and scalar entrywise.
std::pair<MatFq, MatFq> restrict_monomial(const MatFq& s,
                                          const ReductionInstance& inst) {
    const FqPtr& field = inst.a.field();
    const Fq& fq = *field;
    auto sinv = mat_inverse(s);
    REQUIRE(sinv.has_value());
    int k = inst.a.rows(), nd = inst.a.cols();
    MatFq dg(field, nd, nd), p(field, nd, nd);
    for (int i = 0; i < nd; ++i) {
        std::vector<Fel> col(k);
        for (int r = 0; r < k; ++r) col[r] = inst.a.at(r, i);
        auto x = mat_vec(*sinv, col);
        for (int j = 0; j < nd; ++j) {
            Fel alpha = 0;
            bool ok = true;
            for (int r = 0; r < k && ok; ++r) {
                Fel bj = inst.b.at(r, j);
                if (bj == 0) {
                    if (x[r] != 0) ok = false;
                } else {
                    Fel l = fq.div(x[r], bj);
                    if (alpha == 0)
                        alpha = l;
                    else if (l != alpha)
                        ok = false;
                }
            }
            if (!ok || alpha == 0) continue;
            for (int r = 0; r < k; ++r)
                if (x[r] != fq.mul(alpha, inst.b.at(r, j))) ok = false;
            if (!ok) continue;
            p.at(j, i) = 1;
            dg.at(j, j) = alpha;
            break;
        }
    }
    return {dg, p};
}

}  // namespace

TEST_CASE("reduction of the 2x2 identity") {
    auto f2 = make_field(2, 1);
    MatFq id = MatFq::identity(f2, 2);
    auto inst = reduce_me_to_mce(id, id);
    CHECK(inst.c.dim() == 2);
    CHECK(inst.c.m() == 4);
    CHECK(inst.c.n() == 2);
    MatFq g0(f2, 4, 2, {1, 0, 0, 0, 1, 0, 0, 0});
    MatFq g1(f2, 4, 2, {0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(code_contains(inst.c, g0));
    CHECK(code_contains(inst.c, g1));
    CHECK(inst.c == inst.d);
}

TEST_CASE("generators have rank 1 and the code has dimension n") {
    Rng rng(3);
    auto f5 = make_field(5, 1);
    for (int t = 0; t < 20; ++t) {
        auto mi = gen_monomial(f5, 2, 4, rng);
        for (const auto& g : reduction_generators(mi.a))
            CHECK(mat_rank(g) == 1);
        auto inst = reduce_me_to_mce(mi.a, mi.b);
        CHECK(inst.c.dim() == static_cast<int>(inst.cols_a.size()));
        CHECK(inst.d.dim() == static_cast<int>(inst.cols_b.size()));
    }
}

TEST_CASE("projective column dedup") {
    auto f5 = make_field(5, 1);
    // Columns 0 and 2 are scalar multiples; column 3 is zero like nothing
    // else here, so it survives.
    MatFq a(f5, 2, 4, {1, 2, 2, 0,
                       0, 1, 0, 3});
    auto inst = reduce_me_to_mce(a, a);
    CHECK(inst.cols_a == std::vector<int>{0, 1, 3});
}

TEST_CASE("rank-deficient generators rejected") {
    auto f2 = make_field(2, 1);
    MatFq a(f2, 2, 3, {1, 0, 1, 1, 0, 1});
    CHECK_THROWS_AS(reduce_me_to_mce(a, a), RankDeficientGenerator);
}

TEST_CASE("forward witness and extraction round-trip") {
    Rng rng(7);
    for (std::uint64_t q : {2, 3, 5}) {
        auto field = make_field(q, 1);
        for (int t = 0; t < 20; ++t) {
            int k = 1 + static_cast<int>(rng.below(3));
            int n = k + 1 + static_cast<int>(rng.below(5 - k));
            auto mi = gen_monomial(field, k, n, rng);
            ReductionInstance inst = reduce_me_to_mce(mi.a, mi.b);
            REQUIRE(inst.cols_a.size() == inst.cols_b.size());
            auto [dg2, p2] = restrict_monomial(mi.s, inst);
            auto [u, v] = forward_witness(mi.s, dg2, p2, inst);
            // C = U D V exactly.
            std::vector<MatFq> mapped;
            for (const auto& g : inst.d.basis())
                mapped.push_back(mat_mul(u, mat_mul(g, v)));
            CHECK(MatrixCode(field, inst.c.m(), inst.c.n(), mapped) == inst.c);

            auto mw = extract_monomial(u, v, inst);
            // The permutation is a bijection and each pair is collinear.
            std::vector<int> seen(mw.perm.size(), 0);
            for (int j : mw.perm) seen[j]++;
            for (int cnt : seen) CHECK(cnt == 1);
            for (std::size_t i = 0; i < mw.perm.size(); ++i)
                CHECK(mw.scalars[i] != 0);
        }
    }
}

TEST_CASE("forward witness checks its precondition") {
    Rng rng(11);
    auto f3 = make_field(3, 1);
    auto mi = gen_monomial(f3, 2, 4, rng);
    auto inst = reduce_me_to_mce(mi.a, mi.b);
    auto [dg2, p2] = restrict_monomial(mi.s, inst);
    MatFq wrong_s = mat_scale(mi.s, 2);
    if (mat_mul(mat_mul(wrong_s, inst.b), mat_mul(dg2, p2)) != inst.a)
        CHECK_THROWS_AS(forward_witness(wrong_s, dg2, p2, inst),
                        WitnessDoesNotApply);
}

TEST_CASE("extraction rejects a perturbed witness") {
    Rng rng(13);
    auto f3 = make_field(3, 1);
    for (int t = 0; t < 20; ++t) {
        auto mi = gen_monomial(f3, 2, 4, rng);
        auto inst = reduce_me_to_mce(mi.a, mi.b);
        auto [dg2, p2] = restrict_monomial(mi.s, inst);
        auto [u, v] = forward_witness(mi.s, dg2, p2, inst);
        MatFq u2 = u;
        u2.at(0, u2.cols() - 1) = f3->add(u2.at(0, u2.cols() - 1), 1);
        bool ok = true;
        try {
            auto mw = extract_monomial(u2, v, inst);
            // If it still passes, the perturbed map must genuinely send D to
            // C; otherwise NotAWitness was required.
            std::vector<MatFq> mapped;
            for (const auto& g : inst.d.basis())
                mapped.push_back(mat_mul(u2, mat_mul(g, v)));
            ok = MatrixCode(f3, inst.c.m(), inst.c.n(), mapped) == inst.c;
        } catch (const NotAWitness&) {
            continue;
        }
        CHECK(ok);
    }
}

TEST_CASE("diagonal embedding is a weight isometry") {
    Rng rng(17);
    auto f3 = make_field(3, 1);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng.below(6));
        MatFq g(f3, 1, n);
        int wt = 0;
        for (int j = 0; j < n; ++j) {
            g.at(0, j) = f3->random(rng);
            if (g.at(0, j)) ++wt;
        }
        if (g.is_zero()) continue;
        MatrixCode e = diagonal_embed(g);
        CHECK(mat_rank(e.basis()[0]) == wt);
    }
}

TEST_CASE("diagonal embedding transports monomial equivalence") {
    Rng rng(19);
    auto f3 = make_field(3, 1);
    for (int t = 0; t < 20; ++t) {
        auto mi = gen_monomial(f3, 2, 4, rng);
        MatrixCode ca = diagonal_embed(mi.a);
        MatrixCode cb = diagonal_embed(mi.b);
        // a = s b dg p implies Phi(A) = P^-1 Phi(B) Dg P as codes.
        auto pinv = mat_inverse(mi.p);
        REQUIRE(pinv.has_value());
        MatrixCode rhs =
            mul_right(mul_left(*pinv, cb), mat_mul(mi.dg, mi.p));
        CHECK(ca == rhs);
    }
}

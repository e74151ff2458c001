// Acceptance run: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Everything is seeded, so reruns are bit-identical.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include "rankeq/equiv.hpp"
#include "rankeq/io.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/reduction.hpp"

using namespace rankeq;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name,
                ok ? "PASS" : "FAIL", detail.empty() ? "" : " — ",
                detail.c_str());
    if (!ok) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }
};

FqPtr field_q(std::uint64_t q, Rng& rng) {
    if (q == 4) return make_field(2, 2, std::nullopt, &rng);
    if (q == 9) return make_field(3, 2, std::nullopt, &rng);
    return make_field(q, 1);
}

// Restricts the monomial part of a = s b dg p to the deduplicated columns of
// a reduction instance (retained column i of a is collinear with a unique
// retained column j of b under s).
std::pair<MatFq, MatFq> restrict_monomial(const MatFq& s,
                                          const ReductionInstance& inst) {
    const FqPtr& field = inst.a.field();
    const Fq& fq = *field;
    auto sinv = mat_inverse(s);
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
                } else if (alpha == 0) {
                    alpha = fq.div(x[r], bj);
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

MatrixCode transpose_code(const MatrixCode& c) {
    std::vector<MatFq> tb;
    for (const auto& g : c.basis()) tb.push_back(transpose(g));
    return MatrixCode(c.field(), c.n(), c.m(), tb);
}

// --- criterion 1: solver vs oracle on tiny instances ---
void criterion1() {
    Timer timer;
    Rng rng(1001);
    auto f2 = make_field(2, 1);
    int agree = 0, total = 200, witnessed = 0, positives = 0;
    for (int t = 0; t < total; ++t) {
        int dim = 2 + static_cast<int>(rng.below(3));
        MatrixCode c = gen_random_code(f2, 3, 3, dim, rng);
        MatrixCode d = (t % 2 == 0)
                           ? mul_right(c, random_invertible(f2, 3, rng))
                           : gen_random_code(f2, 3, 3, dim, rng);
        auto oracle = brute_mcre(c, d);
        auto out = solve_mcre(c, d, rng);
        bool solver_eq = out.verdict == Verdict::Equivalent;
        if (solver_eq != oracle.has_value()) continue;
        if (solver_eq) {
            ++positives;
            if (!out.witness || !verify_witness(c, d, *out.witness)) continue;
            ++witnessed;
        }
        ++agree;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d/%d verdicts agree, %d/%d witnesses verify, %.1fs",
                  agree, total, witnessed, positives, timer.secs());
    report(1, "mcre oracle agreement", agree == total && witnessed == positives,
           buf);
}

// --- criterion 2: round trips beyond oracle scale ---
void criterion2() {
    Timer timer;
    Rng rng(1002);
    const std::uint64_t qs[] = {2, 3, 4};
    int good = 0, total = 500;
    for (int t = 0; t < total; ++t) {
        auto field = field_q(qs[t % 3], rng);
        int m = 2 + static_cast<int>(rng.below(5));
        int n = 2 + static_cast<int>(rng.below(5));
        int maxk = std::min(12, m * n - 1);
        int dim = 1 + static_cast<int>(rng.below(maxk));
        MatrixCode c = gen_random_code(field, m, n, dim, rng);
        MatrixCode d = mul_right(c, random_invertible(field, n, rng));
        auto out = solve_mcre(c, d, rng);
        if (out.verdict == Verdict::Equivalent && out.witness &&
            verify_witness(c, d, *out.witness))
            ++good;
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d/%d solved with verifying witness, %.1fs",
                  good, total, timer.secs());
    report(2, "mcre round-trip", good == total, buf);
}

// --- criterion 3: nontrivial right stabilizers ---
void criterion3() {
    Timer timer;
    Rng rng(1003);
    int good = 0, total = 100, big_center = 0;
    for (int t = 0; t < total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        int m = 2 + static_cast<int>(rng.below(2));  // extension degree
        int n = m + 1 + static_cast<int>(rng.below(2));
        int k = 1 + static_cast<int>(rng.below(2));
        // Transposed expansions put the field representation into the right
        // stabilizer; concatenating two with disjoint supports stacks two
        // components.
        FqmInstance i1 = gen_fqm_instance(k, n, m, p, rng);
        MatrixCode base = transpose_code(i1.expanded);
        if (t % 3 == 2) {
            FqmInstance i2 = gen_fqm_instance(k, n, m, p, rng);
            MatrixCode b2 = transpose_code(i2.expanded);
            // Place the two codes on disjoint column blocks.
            const FqPtr& field = base.field();
            std::vector<MatFq> gens;
            int rows = base.m(), cols = base.n() + b2.n();
            for (const auto& g : base.basis()) {
                MatFq w(field, rows, cols);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < base.n(); ++j) w.at(i, j) = g.at(i, j);
                gens.push_back(w);
            }
            for (const auto& g : b2.basis()) {
                MatFq w(field, rows, cols);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < b2.n(); ++j)
                        w.at(i, base.n() + j) = g.at(i, j);
                gens.push_back(w);
            }
            base = MatrixCode(field, rows, cols, gens);
        }
        const FqPtr& field = base.field();
        MatFq q0 = random_invertible(field, base.n(), rng);
        MatrixCode c = mul_right(base, q0);  // scramble the support structure
        MatFq q1 = random_invertible(field, base.n(), rng);
        MatrixCode d = mul_right(c, q1);

        MatAlgebra sr = right_stabilizer(c);
        if (sr.dim() < 2) continue;  // instance must stress the solver
        if (center(sr).dim() >= 2) ++big_center;
        auto out = solve_mcre(c, d, rng);
        if (out.verdict == Verdict::Equivalent && out.witness &&
            verify_witness(c, d, *out.witness))
            ++good;
    }
    char buf[140];
    std::snprintf(buf, sizeof buf,
                  "%d/%d solved, center dim >= 2 in %d instances, %.1fs", good,
                  total, big_center, timer.secs());
    report(3, "nontrivial stabilizer stress", good == total && big_center >= 30,
           buf);
}

// Rank-weight enumerator of a (small) code: counts of rank(x) over all of
// its q^dim elements. Invariant under two-sided equivalence.
std::vector<long> rank_distribution(const MatrixCode& c) {
    const auto& basis = c.basis();
    int dim = c.dim();
    std::uint64_t q = c.field()->q();
    std::vector<long> counts(std::min(c.m(), c.n()) + 1, 0);
    std::vector<std::uint64_t> coeff(dim, 0);
    for (;;) {
        MatFq x(c.field(), c.m(), c.n());
        for (int i = 0; i < dim; ++i)
            if (coeff[i]) x = mat_add(x, mat_scale(basis[i], coeff[i]));
        ++counts[mat_rank(x)];
        int pos = 0;
        while (pos < dim && coeff[pos] + 1 == q) coeff[pos++] = 0;
        if (pos == dim) break;
        ++coeff[pos];
    }
    return counts;
}

// --- criterion 4: hidden-basis pipeline ---
void criterion4() {
    Timer timer;
    Rng rng(1004);
    int good = 0, total = 100;
    for (int t = 0; t < total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        int m = 2 + static_cast<int>(rng.below(3));
        int n = 3 + static_cast<int>(rng.below(4));
        int k = 1 + static_cast<int>(rng.below(std::min(3, n - 1)));
        FqmInstance inst = gen_fqm_instance(k, n, m, p, rng);
        auto out = solve_hvmce(inst.expanded, inst.scrambled, rng);
        if (out.verdict == Verdict::Equivalent && out.witness &&
            verify_witness(inst.expanded, inst.scrambled, *out.witness))
            ++good;
    }
    int neg_ok = 0, neg_total = 20;
    for (int t = 0; t < neg_total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        int m = 2 + static_cast<int>(rng.below(2));
        int n = 4 + static_cast<int>(rng.below(3));
        if (t % 2 == 0) {
            // Non-expansions: random codes of expansion-compatible dimension.
            auto field = make_field(p, 1);
            MatrixCode c = gen_random_code(field, m, n, m, rng);
            MatrixCode d = gen_random_code(field, m, n, m, rng);
            auto out = solve_hvmce(c, d, rng);
            if (out.verdict != Verdict::Equivalent) ++neg_ok;
        } else {
            // Certified-inequivalent expansions: redraw until the two codes
            // have different rank-weight distributions, which two-sided
            // equivalence preserves, so Equivalent would be a false verdict.
            for (int attempt = 0; attempt < 64; ++attempt) {
                FqmInstance a = gen_fqm_instance(2, n, m, p, rng);
                FqmInstance b = gen_fqm_instance(2, n, m, p, rng);
                if (rank_distribution(a.expanded) ==
                    rank_distribution(b.scrambled))
                    continue;
                auto out = solve_hvmce(a.expanded, b.scrambled, rng);
                if (out.verdict != Verdict::Equivalent) ++neg_ok;
                break;
            }
        }
    }
    char buf[140];
    std::snprintf(buf, sizeof buf, "%d/%d positive, %d/%d negative, %.1fs",
                  good, total, neg_ok, neg_total, timer.secs());
    report(4, "hv-mce pipeline", good == total && neg_ok == neg_total, buf);
}

// --- criterion 5: structure theory invariants ---
void criterion5() {
    Timer timer;
    Rng rng(1005);
    int good = 0, total = 300, brute_checked = 0;
    for (int t = 0; t < total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        auto field = make_field(p, 1);
        int n = 2 + static_cast<int>(rng.below(4));
        int g = 1 + static_cast<int>(rng.below(3));
        std::vector<MatFq> gens;
        for (int i = 0; i < g; ++i) gens.push_back(random_matrix(field, n, n, rng));
        MatAlgebra a = algebra_closure(field, n, gens, true);
        MatAlgebra rad = radical(a);
        bool ok = true;
        for (const auto& x : rad.basis())
            if (!mat_pow(x, n).is_zero()) ok = false;
        if (p == 2 && a.dim() <= 4) {
            auto br = brute_radical(a);
            if (static_cast<int>(br.size()) != rad.dim()) ok = false;
            for (const auto& x : br)
                if (!rad.contains(x)) ok = false;
            ++brute_checked;
        }
        auto dec = decompose_identity(a, rng);
        MatFq sum(field, n, n);
        for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
            const MatFq& e = dec.idempotents[i];
            if (mat_mul(e, e) != e) ok = false;
            sum = mat_add(sum, e);
            const auto& [ai, bi] = dec.factors[i];
            if (mat_mul(ai, transpose(bi)) != e) ok = false;
            if (!mat_mul(transpose(bi), ai).is_identity()) ok = false;
            for (std::size_t j = 0; j < i; ++j)
                if (!mat_mul(e, dec.idempotents[j]).is_zero() ||
                    !mat_mul(dec.idempotents[j], e).is_zero())
                    ok = false;
        }
        if (!sum.is_identity()) ok = false;
        if (ok) ++good;
    }
    char buf[140];
    std::snprintf(buf, sizeof buf, "%d/%d algebras, %d brute comparisons, %.1fs",
                  good, total, brute_checked, timer.secs());
    report(5, "structure theory", good == total && brute_checked > 0, buf);
}

// --- criterion 6: conductor/stabilizer span identities ---
void criterion6() {
    Timer timer;
    Rng rng(1006);
    int good = 0, total = 100;
    for (int t = 0; t < total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        auto field = make_field(p, 1);
        int m = 2 + static_cast<int>(rng.below(3));
        int n = 2 + static_cast<int>(rng.below(3));
        int dim = 1 + static_cast<int>(rng.below(m * n - 1));
        MatrixCode c = gen_random_code(field, m, n, dim, rng);
        MatFq q0 = random_invertible(field, n, rng);
        MatrixCode d = mul_right(c, q0);
        auto qinv = mat_inverse(q0);
        bool ok = true;

        // Conjugated stabilizers: Q Stab_r(D) Q^-1 = Stab_r(C).
        MatAlgebra sc = right_stabilizer(c);
        MatAlgebra sd = right_stabilizer(d);
        if (sc.dim() != sd.dim()) ok = false;
        std::vector<MatFq> conj;
        for (const auto& s : sd.basis())
            conj.push_back(mat_mul(q0, mat_mul(s, *qinv)));
        auto conj_basis = span_basis(field, n, n, conj);
        if (static_cast<int>(conj_basis.size()) != sc.dim()) ok = false;
        for (const auto& s : conj_basis)
            if (!sc.contains(s)) ok = false;

        // Conductor is the stabilizer translate: Cond(C, D) = Stab_r(C) Q.
        auto cond = conductor(c, d);
        std::vector<MatFq> translate;
        for (const auto& s : sc.basis()) translate.push_back(mat_mul(s, q0));
        auto tr_basis = span_basis(field, n, n, translate);
        if (cond.size() != tr_basis.size()) ok = false;
        for (const auto& x : tr_basis)
            if (!span_contains(cond, x)) ok = false;

        if (ok) ++good;
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "%d/%d pairs, %.1fs", good, total,
                  timer.secs());
    report(6, "conductor/stabilizer identities", good == total, buf);
}

// --- criterion 7: reduction correctness ---
void criterion7() {
    Timer timer;
    Rng rng(1007);
    const std::uint64_t qs[] = {2, 3, 5};
    int good = 0, total = 100;
    for (int t = 0; t < total; ++t) {
        auto field = make_field(qs[t % 3], 1);
        int k = 1 + static_cast<int>(rng.below(3));
        int n = k + 1 + static_cast<int>(rng.below(std::max(1, 5 - k)));
        MatFq b(field, k, n);
        for (;;) {
            b = random_matrix(field, k, n, rng);
            if (mat_rank(b) != k) continue;
            bool zero_col = false;
            for (int j = 0; j < n && !zero_col; ++j) {
                bool all = true;
                for (int i = 0; i < k; ++i)
                    if (b.at(i, j) != 0) all = false;
                zero_col = all;
            }
            if (!zero_col) break;
        }
        MatFq s = random_invertible(field, k, rng);
        MatFq dg(field, n, n);
        for (int j = 0; j < n; ++j) dg.at(j, j) = field->random_nonzero(rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = n - 1; j > 0; --j)
            std::swap(perm[j], perm[rng.below(j + 1)]);
        MatFq pm(field, n, n);
        for (int j = 0; j < n; ++j) pm.at(perm[j], j) = 1;
        MatFq a = mat_mul(mat_mul(s, b), mat_mul(dg, pm));

        ReductionInstance inst = reduce_me_to_mce(a, b);
        if (inst.cols_a.size() != inst.cols_b.size()) continue;
        auto [dg2, p2m] = restrict_monomial(s, inst);
        auto [u, v] = forward_witness(s, dg2, p2m, inst);
        std::vector<MatFq> mapped;
        for (const auto& g : inst.d.basis())
            mapped.push_back(mat_mul(u, mat_mul(g, v)));
        bool ok =
            MatrixCode(field, inst.c.m(), inst.c.n(), mapped) == inst.c;

        auto mw = extract_monomial(u, v, inst);
        // Rebuild the monomial map on the deduplicated columns and compare
        // row spaces: A and S' B Dg' P' must span the same code.
        int nd = static_cast<int>(inst.cols_a.size());
        MatFq pw(field, nd, nd), dgw(field, nd, nd);
        for (int i = 0; i < nd; ++i) {
            pw.at(mw.perm[i], i) = 1;
            dgw.at(mw.perm[i], mw.perm[i]) = mw.scalars[i];
        }
        MatFq image = mat_mul(inst.b, mat_mul(dgw, pw));
        // Row space comparison over the deduplicated a.
        MatFq stacked(field, 2 * k, nd);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < nd; ++j) {
                stacked.at(i, j) = inst.a.at(i, j);
                stacked.at(k + i, j) = image.at(i, j);
            }
        if (mat_rank(stacked) != mat_rank(inst.a)) ok = false;
        if (ok) ++good;
    }

    // Tiny-scale agreement between the reduced-instance MCE oracle and the
    // direct monomial oracle.
    int agree = 0, pairs = 20;
    auto f2 = make_field(2, 1);
    for (int t = 0; t < pairs; ++t) {
        MatFq a(f2, 1, 2), b(f2, 1, 2);
        do {
            a = random_matrix(f2, 1, 2, rng);
        } while (mat_rank(a) != 1);
        do {
            b = random_matrix(f2, 1, 2, rng);
        } while (mat_rank(b) != 1);
        bool monomial = brute_monomial(a, b).has_value();
        bool mce;
        try {
            ReductionInstance inst = reduce_me_to_mce(a, b);
            mce = brute_mce(inst.c, inst.d).has_value();
        } catch (const DimensionMismatch&) {
            mce = false;  // deduplicated supports differ; never equivalent
        }
        if (monomial == mce) ++agree;
    }
    char buf[140];
    std::snprintf(buf, sizeof buf,
                  "%d/%d round trips, %d/%d oracle agreements, %.1fs", good,
                  total, agree, pairs, timer.secs());
    report(7, "me-to-mce reduction", good == total && agree == pairs, buf);
}

// --- criterion 8: diagonal embedding ---
void criterion8() {
    Timer timer;
    Rng rng(1008);
    auto f3 = make_field(3, 1);
    int iso_ok = 0, vectors = 1000;
    for (int t = 0; t < vectors; ++t) {
        int n = 1 + static_cast<int>(rng.below(8));
        MatFq x(f3, 1, n);
        int wt = 0;
        for (int j = 0; j < n; ++j) {
            x.at(0, j) = f3->random(rng);
            if (x.at(0, j)) ++wt;
        }
        MatFq d(f3, n, n);
        for (int j = 0; j < n; ++j) d.at(j, j) = x.at(0, j);
        if (mat_rank(d) == wt) ++iso_ok;
    }
    int transport_ok = 0, insts = 50;
    for (int t = 0; t < insts; ++t) {
        int k = 2, n = 4;
        MatFq b(f3, k, n);
        do {
            b = random_matrix(f3, k, n, rng);
        } while (mat_rank(b) != k);
        MatFq dg(f3, n, n);
        for (int j = 0; j < n; ++j) dg.at(j, j) = f3->random_nonzero(rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int j = n - 1; j > 0; --j)
            std::swap(perm[j], perm[rng.below(j + 1)]);
        MatFq pm(f3, n, n);
        for (int j = 0; j < n; ++j) pm.at(perm[j], j) = 1;
        MatFq s = random_invertible(f3, k, rng);
        MatFq a = mat_mul(mat_mul(s, b), mat_mul(dg, pm));
        MatrixCode ca = diagonal_embed(a);
        MatrixCode cb = diagonal_embed(b);
        auto pinv = mat_inverse(pm);
        MatrixCode rhs = mul_right(mul_left(*pinv, cb), mat_mul(dg, pm));
        if (ca == rhs) ++transport_ok;
    }
    char buf[140];
    std::snprintf(buf, sizeof buf, "%d/%d isometries, %d/%d transports, %.1fs",
                  iso_ok, vectors, transport_ok, insts, timer.secs());
    report(8, "diagonal embedding", iso_ok == vectors && transport_ok == insts,
           buf);
}

// --- criterion 9: Frobenius matrix ---
void criterion9() {
    Timer timer;
    Rng rng(1009);
    int good = 0, total = 50;
    for (int t = 0; t < total; ++t) {
        std::uint64_t p = (t % 2 == 0) ? 2 : 3;
        auto field = make_field(p, 1);
        int m = 2 + static_cast<int>(rng.below(5));
        Poly f = random_monic_irreducible(field, m, rng);
        MatFq comp = companion_matrix(f);
        MatFq u = random_invertible(field, m, rng);
        auto uinv = mat_inverse(u);
        MatFq a = mat_mul(*uinv, mat_mul(comp, u));
        MatFq theta = frobenius_matrix(a);
        auto theta_inv = mat_inverse(theta);
        bool ok = theta_inv.has_value();
        for (int r = 0; ok && r < 20; ++r) {
            Poly pol = random_monic_poly(field, static_cast<int>(rng.below(m + 2)), rng);
            MatFq pa = poly_eval_mat(pol, a);
            MatFq lhs = mat_mul(theta, mat_mul(pa, *theta_inv));
            if (lhs != mat_pow(pa, field->q())) ok = false;
        }
        if (ok) {
            // Theta^m commutes back into F_q[A].
            std::vector<MatFq> powers;
            MatFq pw = MatFq::identity(field, m);
            for (int i = 0; i < m; ++i) {
                powers.push_back(pw);
                pw = mat_mul(pw, a);
            }
            if (!span_contains(span_basis(field, m, m, powers),
                               mat_pow(theta, m)))
                ok = false;
        }
        if (ok) ++good;
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "%d/%d matrices, %.1fs", good, total,
                  timer.secs());
    report(9, "frobenius matrix", good == total, buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

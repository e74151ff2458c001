#include "rankeq/equiv.hpp"

#include <algorithm>

namespace rankeq {

namespace {

// Kernel of the trace system rows -> matrices of shape rows x cols.
std::vector<MatFq> trace_system_kernel(const FqPtr& field,
                                       const std::vector<MatFq>& rows,
                                       int mrows, int mcols) {
    if (rows.empty()) {
        // No constraints: the whole space.
        std::vector<MatFq> all;
        for (int i = 0; i < mrows; ++i)
            for (int j = 0; j < mcols; ++j) {
                MatFq e(field, mrows, mcols);
                e.at(i, j) = 1;
                all.push_back(std::move(e));
            }
        return all;
    }
    MatFq sys(field, static_cast<int>(rows.size()), mrows * mcols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& e = rows[i].entries();
        for (int j = 0; j < mrows * mcols; ++j)
            sys.at(static_cast<int>(i), j) = e[j];
    }
    std::vector<MatFq> out;
    for (auto& v : right_kernel(sys)) out.push_back(MatFq(field, mrows, mcols, v));
    return span_basis(field, mrows, mcols, out);
}

}  // namespace

std::vector<MatFq> conductor(const MatrixCode& c, const MatrixCode& d) {
    if (c.m() != d.m() || c.n() != d.n())
        throw DimensionMismatch("codes in different ambient spaces");
    if (c.dim() != d.dim())
        throw DimensionMismatch("codes of different dimension");
    int n = c.n();
    MatrixCode dual = trace_dual(d);
    // Tr(C_i M D'_j^T) = 0 <=> <flatten(C_i^T D'_j), flatten(M)> = 0.
    std::vector<MatFq> rows;
    for (const auto& ci : c.basis())
        for (const auto& dj : dual.basis())
            rows.push_back(mat_mul(transpose(ci), dj));
    return trace_system_kernel(c.field(), rows, n, n);
}

MatAlgebra right_stabilizer(const MatrixCode& c) {
    int n = c.n();
    MatrixCode dual = trace_dual(c);
    std::vector<MatFq> rows;
    for (const auto& ci : c.basis())
        for (const auto& dj : dual.basis())
            rows.push_back(mat_mul(transpose(ci), dj));
    return MatAlgebra(c.field(), n, trace_system_kernel(c.field(), rows, n, n),
                      /*check_closure=*/false);
}

MatAlgebra left_stabilizer(const MatrixCode& c) {
    int m = c.m();
    MatrixCode dual = trace_dual(c);
    // Tr(M C_i D'_j^T) = 0 <=> <flatten(D'_j C_i^T)^T ... row is D'_j C_i^T.
    std::vector<MatFq> rows;
    for (const auto& ci : c.basis())
        for (const auto& dj : dual.basis())
            rows.push_back(transpose(mat_mul(ci, transpose(dj))));
    return MatAlgebra(c.field(), m, trace_system_kernel(c.field(), rows, m, m),
                      /*check_closure=*/false);
}

std::optional<MatFq> solve_mcre_local(const MatrixCode& c,
                                      const MatrixCode& d) {
    if (c.m() != d.m() || c.n() != d.n() || c.dim() != d.dim())
        return std::nullopt;
    auto cond = conductor(c, d);
    if (cond.empty()) return std::nullopt;

    MatAlgebra stab = right_stabilizer(c);
    MatAlgebra rad = radical(stab);
    std::vector<MatFq> rcond_gens;
    for (const auto& r : rad.basis())
        for (const auto& a : cond) rcond_gens.push_back(mat_mul(r, a));
    auto rcond = span_basis(c.field(), c.n(), c.n(), rcond_gens);

    for (const auto& a : cond) {
        if (span_contains(rcond, a)) continue;
        return is_invertible(a) ? std::optional<MatFq>(a) : std::nullopt;
    }
    return std::nullopt;  // Cond <= radical * Cond
}

namespace {

bool find_matching(const std::vector<std::vector<bool>>& edge,
                   std::vector<int>& match, std::vector<bool>& used, int i) {
    int ell = static_cast<int>(edge.size());
    if (i == ell) return true;
    for (int j = 0; j < ell; ++j) {
        if (used[j] || !edge[i][j]) continue;
        used[j] = true;
        match[i] = j;
        if (find_matching(edge, match, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

SolveOutcome solve_mcre(const MatrixCode& c, const MatrixCode& d, Rng& rng) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    const FqPtr& field = c.field();
    int n = c.n();

    if (c.dim() != d.dim()) return {Verdict::NotEquivalent, std::nullopt, ""};
    if (c.dim() == 0) {
        Witness w;
        w.right = MatFq::identity(field, n);
        return {Verdict::Equivalent, w, ""};
    }

    auto cond = conductor(c, d);
    if (cond.empty()) return {Verdict::NotEquivalent, std::nullopt, ""};
    if (cond.size() == 1) {
        const MatFq& q = cond[0];
        if (is_invertible(q) && code_equal(mul_right(c, q), d)) {
            Witness w;
            w.right = q;
            return {Verdict::Equivalent, w, ""};
        }
        return {Verdict::NotEquivalent, std::nullopt, ""};
    }

    auto dec_c = decompose_identity(right_stabilizer(c), rng);
    auto dec_d = decompose_identity(right_stabilizer(d), rng);
    int ell = static_cast<int>(dec_c.idempotents.size());
    if (static_cast<int>(dec_d.idempotents.size()) != ell)
        return {Verdict::NotEquivalent, std::nullopt, ""};

    // Pieces C A_i and D U_j; edges where the local solver succeeds.
    std::vector<MatrixCode> pc, pd;
    for (int i = 0; i < ell; ++i)
        pc.push_back(mul_right(c, dec_c.factors[i].first));
    for (int j = 0; j < ell; ++j)
        pd.push_back(mul_right(d, dec_d.factors[j].first));

    std::vector<std::vector<bool>> edge(ell, std::vector<bool>(ell, false));
    std::vector<std::vector<std::optional<MatFq>>> q_local(
        ell, std::vector<std::optional<MatFq>>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            if (dec_c.ranks[i] != dec_d.ranks[j]) continue;
            if (pc[i].dim() != pd[j].dim()) continue;
            q_local[i][j] = solve_mcre_local(pc[i], pd[j]);
            edge[i][j] = q_local[i][j].has_value();
        }

    std::vector<int> match(ell, -1);
    std::vector<bool> used(ell, false);
    if (!find_matching(edge, match, used, 0))
        return {Verdict::NotEquivalent, std::nullopt, ""};

    MatFq q(field, n, n);
    for (int i = 0; i < ell; ++i) {
        int j = match[i];
        // A_i Q_{ij} V_j^T, with V_j the second factor of the j-th idempotent
        // of the right stabilizer of D.
        MatFq term = mat_mul(dec_c.factors[i].first,
                             mat_mul(*q_local[i][j],
                                     transpose(dec_d.factors[j].second)));
        q = mat_add(q, term);
    }
    if (is_invertible(q) && code_equal(mul_right(c, q), d)) {
        Witness w;
        w.right = q;
        return {Verdict::Equivalent, w, ""};
    }
    return {Verdict::NotEquivalent, std::nullopt, ""};
}

namespace {

struct PromiseInfo {
    MatAlgebra stab;
    MatAlgebra zcenter;
    int ell = 0;
};

// Validates the expansion promise; nullopt with reason when it fails.
std::optional<PromiseInfo> check_promise(const MatrixCode& c,
                                         std::string& reason, Rng& rng) {
    int m = c.m();
    MatAlgebra stab = left_stabilizer(c);
    if (stab.dim() < m) {
        reason = "left stabilizer smaller than m";
        return std::nullopt;
    }
    MatAlgebra z = center(stab);
    int ell = z.dim();
    if (ell < 1 || m % ell != 0) {
        reason = "center dimension does not divide m";
        return std::nullopt;
    }
    Rng probe = rng.fork();
    if (!find_field_generator(z, ell, probe)) {
        reason = "center is not a field representation";
        return std::nullopt;
    }
    long long expected = static_cast<long long>(m / ell) * (m / ell) * ell;
    if (stab.dim() != expected) {
        reason = "left stabilizer does not match the matrix-algebra profile";
        return std::nullopt;
    }
    return PromiseInfo{std::move(stab), std::move(z), ell};
}

bool same_span(const MatAlgebra& a, const MatAlgebra& b) {
    return a.basis() == b.basis();
}

MatAlgebra conjugated(const MatAlgebra& s, const MatFq& p) {
    auto pinv = mat_inverse(p);
    if (!pinv) throw Error("conjugation by singular matrix");
    std::vector<MatFq> gens;
    for (const auto& b : s.basis())
        gens.push_back(mat_mul(p, mat_mul(b, *pinv)));
    return MatAlgebra(s.field(), s.n(), gens, /*check_closure=*/false);
}

}  // namespace

SolveOutcome solve_hvmce(const MatrixCode& c, const MatrixCode& d, Rng& rng) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    const FqPtr& field = c.field();
    int m = c.m();

    if (c.dim() != d.dim()) return {Verdict::NotEquivalent, std::nullopt, ""};

    std::string reason;
    auto pc = check_promise(c, reason, rng);
    if (!pc) return {Verdict::InvalidPromise, std::nullopt, "C: " + reason};
    auto pd = check_promise(d, reason, rng);
    if (!pd) return {Verdict::InvalidPromise, std::nullopt, "D: " + reason};
    if (pc->ell != pd->ell)
        return {Verdict::InvalidPromise, std::nullopt,
                "codes disagree on the center degree"};
    int ell = pc->ell;

    auto finish = [&](const MatFq& left_transform, const MatFq& q) {
        // C Q = T D with T = left_transform, so (T^-1) C Q = D.
        auto tinv = mat_inverse(left_transform);
        if (!tinv) throw Error("unreachable: transform invertible");
        Witness w;
        w.left = *tinv;
        w.right = q;
        SolveOutcome out;
        out.verdict = Verdict::Equivalent;
        out.witness = w;
        return out;
    };

    if (ell == m) {
        // Stabilizers are field representations of degree m; align them.
        auto p = conjugate_field_reps(pd->stab, pc->stab, rng);
        if (!p) return {Verdict::InvalidPromise, std::nullopt,
                        "stabilizers are not conjugate field representations"};
        auto gen = find_field_generator(pc->stab, m, rng);
        if (!gen)
            return {Verdict::InvalidPromise, std::nullopt,
                    "stabilizer is not a field representation"};
        MatFq theta = frobenius_matrix(*gen);
        MatFq tj = MatFq::identity(field, m);
        for (int j = 0; j < m; ++j) {
            MatFq t = mat_mul(tj, *p);
            auto res = solve_mcre(c, mul_left(t, d), rng);
            if (res.verdict == Verdict::Equivalent)
                return finish(t, *res.witness->right);
            tj = mat_mul(theta, tj);
        }
        return {Verdict::NotEquivalent, std::nullopt, ""};
    }

    // ell < m: align the centers, then the full stabilizers coincide (they
    // are the commutants); allow center-Frobenius twists as a fallback.
    auto p = conjugate_field_reps(pd->zcenter, pc->zcenter, rng);
    if (!p)
        return {Verdict::InvalidPromise, std::nullopt,
                "centers are not conjugate field representations"};

    MatFq theta_z = MatFq::identity(field, m);
    if (ell > 1) {
        auto zgen = find_field_generator(pc->zcenter, ell, rng);
        if (!zgen)
            return {Verdict::InvalidPromise, std::nullopt,
                    "center is not a field representation"};
        auto tz = similarity_transform(*zgen, mat_pow(*zgen, field->q()));
        if (!tz) throw Error("unreachable: Frobenius conjugate is similar");
        theta_z = *tz;
    }

    MatFq tj = MatFq::identity(field, m);
    for (int j = 0; j < std::max(ell, 1); ++j) {
        MatFq t = mat_mul(tj, *p);
        MatrixCode dj = mul_left(t, d);
        if (same_span(left_stabilizer(dj), pc->stab)) {
            auto res = solve_mcre(c, dj, rng);
            if (res.verdict == Verdict::Equivalent)
                return finish(t, *res.witness->right);
        }
        tj = mat_mul(theta_z, tj);
    }
    return {Verdict::NotEquivalent, std::nullopt, ""};
}

bool verify_witness(const MatrixCode& c, const MatrixCode& d,
                    const Witness& w) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    MatrixCode t = c;
    if (w.left) {
        if (w.left->rows() != c.m() || w.left->cols() != c.m())
            throw ShapeMismatch("left witness has wrong shape");
        if (!is_invertible(*w.left)) return false;
        t = mul_left(*w.left, t);
    }
    if (w.right) {
        if (w.right->rows() != c.n() || w.right->cols() != c.n())
            throw ShapeMismatch("right witness has wrong shape");
        if (!is_invertible(*w.right)) return false;
        t = mul_right(t, *w.right);
    }
    return code_equal(t, d);
}

}  // namespace rankeq

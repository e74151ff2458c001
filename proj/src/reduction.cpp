#include "rankeq/reduction.hpp"

#include "rankeq/algebra.hpp"

namespace rankeq {

namespace {

// Retains the first representative of each projective class of columns.
std::pair<MatFq, std::vector<int>> dedup_columns(const MatFq& g) {
    const Fq& k = *g.field();
    std::vector<int> keep;
    auto col_zero = [&](int j) {
        for (int i = 0; i < g.rows(); ++i)
            if (g.at(i, j) != 0) return false;
        return true;
    };
    for (int j = 0; j < g.cols(); ++j) {
        bool dup = false;
        // A zero column is not a scalar multiple of anything nonzero; it
        // forms its own class and only collapses with other zero columns.
        if (col_zero(j)) {
            for (int prev : keep)
                if (col_zero(prev)) {
                    dup = true;
                    break;
                }
            if (!dup) keep.push_back(j);
            continue;
        }
        for (int prev : keep) {
            // Is column j a scalar multiple of column prev?
            Fel lambda = 0;
            bool ok = true;
            for (int i = 0; i < g.rows() && ok; ++i) {
                Fel x = g.at(i, prev), y = g.at(i, j);
                if (x == 0) {
                    if (y != 0) ok = false;
                } else {
                    Fel l = k.div(y, x);
                    if (lambda == 0)
                        lambda = l;
                    else if (l != lambda)
                        ok = false;
                }
            }
            if (!ok) continue;
            bool exact = true;
            for (int i = 0; i < g.rows(); ++i)
                if (g.at(i, j) != k.mul(lambda, g.at(i, prev))) exact = false;
            if (exact) {
                dup = true;
                break;
            }
        }
        if (!dup) keep.push_back(j);
    }
    MatFq out(g.field(), g.rows(), static_cast<int>(keep.size()));
    for (int i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.at(i, static_cast<int>(j)) = g.at(i, keep[j]);
    return {out, keep};
}

}  // namespace

std::vector<MatFq> reduction_generators(const MatFq& g) {
    const FqPtr& field = g.field();
    const Fq& fq = *field;
    int k = g.rows(), n = g.cols();
    std::vector<MatFq> gens;
    for (int i = 0; i < n; ++i) {
        // a_i is the i-th column read as a row vector of length k.
        MatFq m(field, k + n, k);
        for (int r = 0; r < k; ++r)
            for (int cidx = 0; cidx < k; ++cidx)
                m.at(r, cidx) = fq.mul(g.at(r, i), g.at(cidx, i));
        for (int cidx = 0; cidx < k; ++cidx) m.at(k + i, cidx) = g.at(cidx, i);
        gens.push_back(std::move(m));
    }
    return gens;
}

ReductionInstance reduce_me_to_mce(const MatFq& a, const MatFq& b) {
    if (*a.field() != *b.field())
        throw IncompatibleFields("generators over different fields");
    if (a.rows() != b.rows())
        throw DimensionMismatch("generators with different k");
    if (mat_rank(a) != a.rows() || mat_rank(b) != b.rows())
        throw RankDeficientGenerator("generators must have full row rank");

    auto [da, keep_a] = dedup_columns(a);
    auto [db, keep_b] = dedup_columns(b);
    if (da.cols() != db.cols())
        throw DimensionMismatch(
            "deduplicated column counts differ; instance is meaningless");

    int k = da.rows(), n = da.cols();
    MatrixCode c(a.field(), k + n, k, reduction_generators(da));
    MatrixCode d(a.field(), k + n, k, reduction_generators(db));
    return ReductionInstance(std::move(da), std::move(db), std::move(keep_a),
                             std::move(keep_b), std::move(c), std::move(d));
}

std::pair<MatFq, MatFq> forward_witness(const MatFq& s, const MatFq& dg,
                                        const MatFq& p,
                                        const ReductionInstance& inst) {
    const FqPtr& field = inst.a.field();
    int k = inst.a.rows(), n = inst.a.cols();
    if (s.rows() != k || s.cols() != k || dg.rows() != n || dg.cols() != n ||
        p.rows() != n || p.cols() != n)
        throw ShapeMismatch("witness component shapes");
    if (inst.a != mat_mul(s, mat_mul(inst.b, mat_mul(dg, p))))
        throw WitnessDoesNotApply("a != s * b * dg * p");

    // With a_i = nu * b_j S^T (j, nu read off Dg P), the block transform
    // blockdiag(S, (Dg P)^-1) with V = S^T maps each D_j onto a multiple of
    // the matching C_i.
    auto mono_inv = mat_inverse(mat_mul(dg, p));
    if (!mono_inv) throw WitnessDoesNotApply("monomial part singular");
    MatFq u(field, k + n, k + n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) u.at(i, j) = s.at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u.at(k + i, k + j) = mono_inv->at(i, j);
    return {u, transpose(s)};
}

MonomialWitness extract_monomial(const MatFq& u, const MatFq& v,
                                 const ReductionInstance& inst) {
    const FqPtr& field = inst.a.field();
    const Fq& fq = *field;
    int k = inst.a.rows(), n = inst.a.cols();

    // Transformed basis U G_j V of the D-side generators.
    auto gen_a = reduction_generators(inst.a);
    auto gen_b = reduction_generators(inst.b);
    std::vector<MatFq> transformed;
    for (const auto& g : gen_b)
        transformed.push_back(mat_mul(u, mat_mul(g, v)));

    MonomialWitness w;
    w.perm.assign(n, -1);
    w.scalars.assign(n, 0);
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        auto coords = coords_in_span(transformed, gen_a[i]);
        if (!coords) throw NotAWitness("generator outside transformed code");
        int j = -1;
        for (int t = 0; t < n; ++t) {
            if ((*coords)[t] == 0) continue;
            if (j >= 0)
                throw NotAWitness("two nonzero coordinates; not a reduction witness");
            j = t;
        }
        if (j < 0) throw NotAWitness("zero generator image");
        if (hit[j]) throw NotAWitness("permutation collision");
        hit[j] = true;
        w.perm[i] = j;

        // Collinearity factor between a_i and b_j V.
        std::vector<Fel> bj(k), bjv;
        for (int r = 0; r < k; ++r) bj[r] = inst.b.at(r, j);
        bjv = mat_vec(transpose(v), bj);  // row vector b_j times V
        int t0 = -1;
        for (int t = 0; t < k; ++t)
            if (bjv[t] != 0) {
                t0 = t;
                break;
            }
        if (t0 < 0) throw NotAWitness("degenerate transformed column");
        Fel alpha = fq.div(inst.a.at(t0, i), bjv[t0]);
        if (alpha == 0) throw NotAWitness("zero collinearity factor");
        for (int t = 0; t < k; ++t)
            if (inst.a.at(t, i) != fq.mul(alpha, bjv[t]))
                throw NotAWitness("columns are not collinear");
        w.scalars[i] = alpha;
    }
    return w;
}

MatrixCode diagonal_embed(const MatFq& g) {
    const FqPtr& field = g.field();
    int n = g.cols();
    std::vector<MatFq> gens;
    for (int i = 0; i < g.rows(); ++i) {
        MatFq d(field, n, n);
        for (int j = 0; j < n; ++j) d.at(j, j) = g.at(i, j);
        gens.push_back(std::move(d));
    }
    return MatrixCode(field, n, n, gens);
}

}  // namespace rankeq

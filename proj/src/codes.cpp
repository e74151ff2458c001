#include "rankeq/codes.hpp"

namespace rankeq {

std::vector<Fel> flatten(const MatFq& m) { return m.entries(); }

MatFq unflatten(const FqPtr& field, int rows, int cols,
                const std::vector<Fel>& v) {
    return MatFq(field, rows, cols, v);
}

namespace {

// Rows = flattened basis elements.
MatFq flat_matrix(const FqPtr& field, int m, int n,
                  const std::vector<MatFq>& mats) {
    MatFq r(field, static_cast<int>(mats.size()), m * n);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != m || mats[i].cols() != n)
            throw ShapeMismatch("generator shape mismatch");
        if (*mats[i].field() != *field)
            throw IncompatibleFields("generator over wrong field");
        const auto& e = mats[i].entries();
        for (int j = 0; j < m * n; ++j) r.at(static_cast<int>(i), j) = e[j];
    }
    return r;
}

}  // namespace

MatrixCode::MatrixCode(FqPtr field, int m, int n,
                       const std::vector<MatFq>& generators)
    : field_(std::move(field)), m_(m), n_(n) {
    if (m < 1 || n < 1) throw BadDimensions("ambient dimensions must be >= 1");
    if (generators.empty()) return;
    auto [R, rank, pivots] = rref(flat_matrix(field_, m, n, generators));
    (void)pivots;
    for (int i = 0; i < rank; ++i) {
        std::vector<Fel> row(m * n);
        for (int j = 0; j < m * n; ++j) row[j] = R.at(i, j);
        basis_.push_back(unflatten(field_, m, n, row));
    }
}

VectorCode::VectorCode(FqPtr ext_field, MatFq generator)
    : ext_(std::move(ext_field)), gen_(std::move(generator)) {
    if (*gen_.field() != *ext_)
        throw IncompatibleFields("generator over wrong field");
    if (!is_prime_u64(ext_->p()) || ext_->prime_field()->q() != ext_->p())
        throw Error("vector codes require a prime base field");
    if (gen_.rows() < 1 || gen_.rows() > gen_.cols())
        throw BadDimensions("need 1 <= k <= n");
    if (mat_rank(gen_) != gen_.rows())
        throw RankDeficientGenerator("generator must have full row rank");
}

namespace {

// Invertible m x m matrix whose column i is the digit vector of B[i];
// DependentBasis when B is not a basis of F_{p^m} over F_p.
MatFq basis_matrix(const FqPtr& ext, const std::vector<Fel>& B,
                   const FqPtr& fp) {
    int m = static_cast<int>(ext->e());
    if (static_cast<int>(B.size()) != m)
        throw DependentBasis("basis must have m elements");
    MatFq E(fp, m, m);
    for (int i = 0; i < m; ++i) {
        auto d = ext->digits(B[i]);
        for (int r = 0; r < m; ++r) E.at(r, i) = d[r];
    }
    if (mat_rank(E) != m) throw DependentBasis("elements are F_p-dependent");
    return E;
}

}  // namespace

MatFq expansion_matrix(const FqPtr& ext, const std::vector<Fel>& v,
                       const std::vector<Fel>& B) {
    FqPtr fp = ext->prime_field();
    int m = static_cast<int>(ext->e());
    int n = static_cast<int>(v.size());
    MatFq E = basis_matrix(ext, B, fp);
    auto Einv = mat_inverse(E);
    if (!Einv) throw DependentBasis("elements are F_p-dependent");
    MatFq out(fp, m, n);
    for (int j = 0; j < n; ++j) {
        auto d = ext->digits(v[j]);
        std::vector<Fel> dv(d.begin(), d.end());
        auto coords = mat_vec(*Einv, dv);
        for (int r = 0; r < m; ++r) out.at(r, j) = coords[r];
    }
    return out;
}

MatrixCode expand_code(const VectorCode& V, const std::vector<Fel>& B) {
    const FqPtr& ext = V.ext_field();
    FqPtr fp = ext->prime_field();
    int m = V.m(), n = V.n();
    std::vector<MatFq> gens;
    // Scalar basis 1, alpha, ..., alpha^{m-1}: codes p^i.
    for (int j = 0; j < V.k(); ++j) {
        Fel scalar = 1;
        for (int i = 0; i < m; ++i) {
            std::vector<Fel> row(n);
            for (int c = 0; c < n; ++c)
                row[c] = ext->mul(scalar, V.generator().at(j, c));
            gens.push_back(expansion_matrix(ext, row, B));
            scalar = ext->mul(scalar, ext->from_digits({0, 1}));
        }
    }
    return MatrixCode(fp, m, n, gens);
}

int rank_weight(const FqPtr& ext, const std::vector<Fel>& v) {
    FqPtr fp = ext->prime_field();
    int m = static_cast<int>(ext->e());
    MatFq d(fp, static_cast<int>(v.size()), m);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto dig = ext->digits(v[i]);
        for (int j = 0; j < m; ++j) d.at(static_cast<int>(i), j) = dig[j];
    }
    return mat_rank(d);
}

MatrixCode trace_dual(const MatrixCode& c) {
    // Tr(M N^T) is the dot product of flattenings, so the dual is the right
    // kernel of the flattened basis.
    int mn = c.m() * c.n();
    MatFq F = c.dim() ? flat_matrix(c.field(), c.m(), c.n(), c.basis())
                      : MatFq(c.field(), 0, mn);
    auto ker = right_kernel(F);
    std::vector<MatFq> gens;
    for (auto& v : ker) gens.push_back(unflatten(c.field(), c.m(), c.n(), v));
    return MatrixCode(c.field(), c.m(), c.n(), gens);
}

MatrixCode mul_right(const MatrixCode& c, const MatFq& a) {
    if (a.rows() != c.n()) throw ShapeMismatch("mul_right shape mismatch");
    std::vector<MatFq> gens;
    for (const auto& b : c.basis()) gens.push_back(mat_mul(b, a));
    return MatrixCode(c.field(), c.m(), a.cols(), gens);
}

MatrixCode mul_left(const MatFq& p, const MatrixCode& c) {
    if (p.cols() != c.m()) throw ShapeMismatch("mul_left shape mismatch");
    std::vector<MatFq> gens;
    for (const auto& b : c.basis()) gens.push_back(mat_mul(p, b));
    return MatrixCode(c.field(), p.rows(), c.n(), gens);
}

bool code_equal(const MatrixCode& c, const MatrixCode& d) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    return c == d;
}

bool code_contains(const MatrixCode& c, const MatFq& m) {
    if (m.rows() != c.m() || m.cols() != c.n())
        throw ShapeMismatch("ambient space mismatch");
    if (m.is_zero()) return true;
    std::vector<MatFq> gens = c.basis();
    gens.push_back(m);
    return MatrixCode(c.field(), c.m(), c.n(), gens).dim() == c.dim();
}

bool code_contains_code(const MatrixCode& c, const MatrixCode& d) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    return code_sum(c, d).dim() == c.dim();
}

MatrixCode code_sum(const MatrixCode& c, const MatrixCode& d) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    std::vector<MatFq> gens = c.basis();
    for (const auto& b : d.basis()) gens.push_back(b);
    return MatrixCode(c.field(), c.m(), c.n(), gens);
}

MatrixCode gen_random_code(const FqPtr& field, int m, int n, int K, Rng& rng) {
    if (K < 0 || K > m * n) throw BadDimensions("need 0 <= K <= m*n");
    for (;;) {
        std::vector<MatFq> gens;
        for (int i = 0; i < K; ++i)
            gens.push_back(random_matrix(field, m, n, rng));
        MatrixCode c(field, m, n, gens);
        if (c.dim() == K) return c;
    }
}

FqmInstance gen_fqm_instance(int k, int n, int m, std::uint64_t p, Rng& rng) {
    if (k < 1 || k > n || m < 1) throw BadDimensions("need 1 <= k <= n, m >= 1");
    FqPtr ext = make_field(p, m, std::nullopt, &rng);
    FqPtr fp = ext->prime_field();

    MatFq gen(ext, k, n);
    do {
        gen = random_matrix(ext, k, n, rng);
    } while (mat_rank(gen) != k);
    VectorCode vec(ext, gen);

    // Random hidden basis of F_{p^m} over F_p.
    std::vector<Fel> B(m);
    for (;;) {
        for (auto& b : B) b = ext->random(rng);
        try {
            basis_matrix(ext, B, fp);
            break;
        } catch (const DependentBasis&) {
        }
    }

    MatrixCode expanded = expand_code(vec, B);
    MatFq P = random_invertible(fp, m, rng);
    MatFq Q = random_invertible(fp, n, rng);
    MatrixCode scrambled = mul_left(P, mul_right(expanded, Q));
    return FqmInstance{std::move(vec), std::move(B), std::move(expanded),
                       std::move(P), std::move(Q), std::move(scrambled)};
}

}  // namespace rankeq

#include "rankeq/matrix.hpp"

#include <algorithm>

namespace rankeq {

namespace {
void check_same_field(const MatFq& a, const MatFq& b) {
    if (*a.field() != *b.field())
        throw IncompatibleFields("matrices over different fields");
}
void check_square(const MatFq& m) {
    if (!m.is_square()) throw NotSquare("square matrix required");
}
}  // namespace

MatFq::MatFq(FqPtr field, int rows, int cols, std::vector<Fel> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw ShapeMismatch("entry count does not match shape");
    for (Fel x : a_)
        if (x >= field_->q()) throw Error("entry out of range");
}

MatFq MatFq::identity(const FqPtr& field, int n) {
    MatFq m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool MatFq::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Fel x) { return x == 0; });
}

bool MatFq::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

MatFq mat_add(const MatFq& a, const MatFq& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch("mat_add shape mismatch");
    MatFq r = a;
    const Fq& k = *a.field();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = k.add(a.at(i, j), b.at(i, j));
    return r;
}

MatFq mat_sub(const MatFq& a, const MatFq& b) { return mat_add(a, mat_neg(b)); }

MatFq mat_neg(const MatFq& a) {
    MatFq r = a;
    const Fq& k = *a.field();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.neg(a.at(i, j));
    return r;
}

MatFq mat_scale(const MatFq& a, Fel c) {
    MatFq r = a;
    const Fq& k = *a.field();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = k.mul(a.at(i, j), c);
    return r;
}

MatFq mat_mul(const MatFq& a, const MatFq& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul shape mismatch");
    const Fq& k = *a.field();
    MatFq r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            Fel s = a.at(i, l);
            if (s == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = k.add(r.at(i, j), k.mul(s, b.at(l, j)));
        }
    return r;
}

MatFq mat_pow(const MatFq& a, std::uint64_t k) {
    check_square(a);
    MatFq r = MatFq::identity(a.field(), a.rows());
    MatFq base = a;
    while (k) {
        if (k & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return r;
}

MatFq transpose(const MatFq& a) {
    MatFq r(a.field(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

Fel trace(const MatFq& a) {
    check_square(a);
    const Fq& k = *a.field();
    Fel t = 0;
    for (int i = 0; i < a.rows(); ++i) t = k.add(t, a.at(i, i));
    return t;
}

std::vector<Fel> mat_vec(const MatFq& a, const std::vector<Fel>& v) {
    if (static_cast<int>(v.size()) != a.cols())
        throw ShapeMismatch("mat_vec shape mismatch");
    const Fq& k = *a.field();
    std::vector<Fel> r(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r[i] = k.add(r[i], k.mul(a.at(i, j), v[j]));
    return r;
}

RrefResult rref(const MatFq& m) {
    RrefResult res;
    res.R = m;
    MatFq& R = res.R;
    const Fq& k = *m.field();
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (R.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(R.at(piv, j), R.at(row, j));
        Fel inv = k.inv(R.at(row, col));
        for (int j = 0; j < m.cols(); ++j) R.at(row, j) = k.mul(R.at(row, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || R.at(i, col) == 0) continue;
            Fel f = R.at(i, col);
            for (int j = 0; j < m.cols(); ++j)
                R.at(i, j) = k.sub(R.at(i, j), k.mul(f, R.at(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

int mat_rank(const MatFq& m) { return rref(m).rank; }

std::vector<std::vector<Fel>> right_kernel(const MatFq& m) {
    auto [R, rank, pivots] = rref(m);
    const Fq& k = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Fel>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fel> v(m.cols(), 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r) v[pivots[r]] = k.neg(R.at(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Fel>> left_kernel(const MatFq& m) {
    return right_kernel(transpose(m));
}

std::optional<std::vector<Fel>> solve(const MatFq& a, const std::vector<Fel>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw ShapeMismatch("solve shape mismatch");
    MatFq aug(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [R, rank, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Fel> x(a.cols(), 0);
    for (int r = 0; r < rank; ++r) x[pivots[r]] = R.at(r, a.cols());
    return x;
}

std::optional<MatFq> mat_inverse(const MatFq& m) {
    check_square(m);
    int n = m.rows();
    MatFq aug(m.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [R, rank, pivots] = rref(aug);
    (void)pivots;
    // Invertible iff the left block echelonizes to I_n.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (R.at(i, j) != (i == j ? 1u : 0u)) return std::nullopt;
    MatFq inv(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
    return inv;
}

bool is_invertible(const MatFq& m) {
    return m.is_square() && mat_rank(m) == m.rows();
}

Poly char_poly(const MatFq& m) {
    check_square(m);
    const FqPtr& kp = m.field();
    const Fq& k = *kp;
    int n = m.rows();
    if (n == 0) return Poly(kp, {1});

    // Similarity reduction to upper Hessenberg form.
    MatFq H = m;
    for (int col = 0; col + 2 < n; ++col) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i)
            if (H.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, col + 1));
        }
        Fel pinv = k.inv(H.at(col + 1, col));
        for (int i = col + 2; i < n; ++i) {
            Fel f = k.mul(H.at(i, col), pinv);
            if (f == 0) continue;
            // Row op i <- i - f*(col+1), then inverse column op.
            for (int j = 0; j < n; ++j)
                H.at(i, j) = k.sub(H.at(i, j), k.mul(f, H.at(col + 1, j)));
            for (int r = 0; r < n; ++r)
                H.at(r, col + 1) = k.add(H.at(r, col + 1), k.mul(f, H.at(r, i)));
        }
    }

    // Expansion along the last column of each leading principal block.
    std::vector<Poly> p(n + 1, Poly(kp));
    p[0] = Poly(kp, {1});
    Poly x = Poly::x(kp);
    for (int i = 1; i <= n; ++i) {
        Poly term = poly_mul(poly_sub(x, Poly::constant(kp, H.at(i - 1, i - 1))),
                             p[i - 1]);
        Fel prod = 1;
        for (int kk = 1; kk < i; ++kk) {
            prod = k.mul(prod, H.at(i - kk, i - kk - 1));
            if (prod == 0) break;
            Fel coeff = k.mul(H.at(i - 1 - kk, i - 1), prod);
            if (coeff != 0)
                term = poly_sub(term, poly_scale(p[i - 1 - kk], coeff));
        }
        p[i] = std::move(term);
    }
    return p[n];
}

namespace {

// Minimal polynomial of the cyclic subspace generated by v.
Poly local_min_poly(const MatFq& m, std::vector<Fel> v) {
    const FqPtr& kp = m.field();
    int n = m.rows();
    std::vector<std::vector<Fel>> krylov{v};
    for (int d = 1; d <= n; ++d) {
        v = mat_vec(m, v);
        // Test whether v depends on krylov[0..d-1].
        MatFq K(kp, n, d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i) K.at(i, j) = krylov[j][i];
        auto c = solve(K, v);
        if (c) {
            std::vector<Fel> coeffs(d + 1, 0);
            for (int j = 0; j < d; ++j) coeffs[j] = kp->neg((*c)[j]);
            coeffs[d] = 1;
            return Poly(kp, std::move(coeffs));
        }
        krylov.push_back(v);
    }
    throw Error("unreachable: annihilator of degree <= n must exist");
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    return poly_make_monic(poly_div_exact(poly_mul(a, b), poly_gcd(a, b)));
}

}  // namespace

Poly min_poly(const MatFq& m) {
    check_square(m);
    const FqPtr& kp = m.field();
    int n = m.rows();
    if (n == 0) return Poly(kp, {1});
    Poly mp = Poly(kp, {1});
    // Accumulated span of processed cyclic subspaces (rows).
    std::vector<std::vector<Fel>> span_rows;
    for (int s = 0; s < n && mp.degree() < n; ++s) {
        if (!span_rows.empty()) {
            MatFq S(kp, static_cast<int>(span_rows.size()), n);
            for (std::size_t i = 0; i < span_rows.size(); ++i)
                for (int j = 0; j < n; ++j) S.at(static_cast<int>(i), j) = span_rows[i][j];
            std::vector<Fel> e(n, 0);
            e[s] = 1;
            if (solve(transpose(S), e)) continue;  // e_s already in span
        }
        std::vector<Fel> v(n, 0);
        v[s] = 1;
        mp = poly_lcm(mp, local_min_poly(m, v));
        // Add the cyclic subspace of e_s to the span.
        std::vector<Fel> w = v;
        for (int d = 0; d < n; ++d) {
            span_rows.push_back(w);
            w = mat_vec(m, w);
        }
    }
    return mp;
}

MatFq poly_eval_mat(const Poly& p, const MatFq& m) {
    check_square(m);
    MatFq r(m.field(), m.rows(), m.rows());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        r = mat_mul(r, m);
        if (p.coeffs()[i] != 0)
            r = mat_add(r, mat_scale(MatFq::identity(m.field(), m.rows()),
                                     p.coeffs()[i]));
    }
    return r;
}

MatFq companion_matrix(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw Error("companion matrix needs a monic polynomial of degree >= 1");
    int n = f.degree();
    MatFq c(f.field(), n, n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = f.field()->neg(f.coeff(i));
    return c;
}

std::optional<MatFq> similarity_transform(const MatFq& a, const MatFq& b) {
    check_square(a);
    check_square(b);
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw ShapeMismatch("sizes differ");
    const FqPtr& kp = a.field();
    int n = a.rows();
    Poly mu = min_poly(a);
    if (!poly_is_irreducible(mu))
        throw UnsupportedShape("minimal polynomial must be irreducible");
    if (min_poly(b) != mu) return std::nullopt;
    int ell = mu.degree();

    // Greedy decomposition into cyclic blocks (v, Mv, ..., M^{ell-1} v); valid
    // because the matrix makes F_q^n a vector space over F_{q^ell}.
    auto build = [&](const MatFq& m) {
        MatFq cols(kp, n, n);
        int filled = 0;
        for (int s = 0; s < n && filled < n; ++s) {
            std::vector<Fel> v(n, 0);
            v[s] = 1;
            if (filled > 0) {
                MatFq sub(kp, n, filled);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < filled; ++j) sub.at(i, j) = cols.at(i, j);
                if (solve(sub, v)) continue;
            }
            for (int t = 0; t < ell; ++t) {
                for (int i = 0; i < n; ++i) cols.at(i, filled) = v[i];
                ++filled;
                if (t + 1 < ell) v = mat_vec(m, v);
            }
        }
        if (filled != n)
            throw UnsupportedShape("cyclic block decomposition failed");
        return cols;
    };

    MatFq ma = build(a);
    MatFq mb = build(b);
    auto mb_inv = mat_inverse(mb);
    if (!mb_inv) throw Error("unreachable: basis matrix must be invertible");
    return mat_mul(ma, *mb_inv);
}

MatFq random_matrix(const FqPtr& field, int rows, int cols, Rng& rng) {
    MatFq m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = field->random(rng);
    return m;
}

MatFq random_invertible(const FqPtr& field, int n, Rng& rng) {
    if (n < 1) throw BadDimensions("n must be >= 1");
    for (;;) {
        MatFq m = random_matrix(field, n, n, rng);
        if (mat_rank(m) == n) return m;
    }
}

}  // namespace rankeq

#include "rankeq/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rankeq/equiv.hpp"

namespace rankeq {

namespace {

unsigned __int128 gl_order(std::uint64_t q, int n) {
    unsigned __int128 qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    unsigned __int128 ord = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        ord *= (qn - qi);
        qi *= q;
    }
    return ord;
}

// Calls fn for every invertible n x n matrix, ascending lexicographic order
// of the flattened entries; stops when fn returns true.
template <class Fn>
void for_each_invertible(const FqPtr& field, int n, Fn&& fn) {
    std::vector<Fel> entries(static_cast<std::size_t>(n) * n, 0);
    const std::uint64_t q = field->q();
    for (;;) {
        MatFq m(field, n, n, entries);
        if (is_invertible(m) && fn(m)) return;
        // Odometer: last entry fastest.
        int pos = n * n - 1;
        while (pos >= 0) {
            if (++entries[pos] < q) break;
            entries[pos] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

}  // namespace

std::optional<MatFq> brute_mcre(const MatrixCode& c, const MatrixCode& d,
                                const OracleCaps& caps) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    int n = c.n();
    if (gl_order(c.field()->q(), n) > caps.mcre)
        throw BudgetExceeded("GL_n too large for brute_mcre");
    if (c.dim() != d.dim()) return std::nullopt;
    std::optional<MatFq> found;
    for_each_invertible(c.field(), n, [&](const MatFq& q) {
        if (code_equal(mul_right(c, q), d)) {
            found = q;
            return true;
        }
        return false;
    });
    return found;
}

std::optional<std::pair<MatFq, MatFq>> brute_mce(const MatrixCode& c,
                                                 const MatrixCode& d,
                                                 const OracleCaps& caps) {
    if (c.m() != d.m() || c.n() != d.n())
        throw ShapeMismatch("codes in different ambient spaces");
    int m = c.m(), n = c.n();
    std::uint64_t q = c.field()->q();
    if (gl_order(q, m) * gl_order(q, n) > caps.mce)
        throw BudgetExceeded("GL_m x GL_n too large for brute_mce");
    if (c.dim() != d.dim()) return std::nullopt;
    std::optional<std::pair<MatFq, MatFq>> found;
    for_each_invertible(c.field(), m, [&](const MatFq& p) {
        MatrixCode pc = mul_left(p, c);
        for_each_invertible(c.field(), n, [&](const MatFq& qq) {
            if (code_equal(mul_right(pc, qq), d)) {
                found = {p, qq};
                return true;
            }
            return false;
        });
        return found.has_value();
    });
    return found;
}

std::optional<BruteMonomial> brute_monomial(const MatFq& a, const MatFq& b,
                                            const OracleCaps& caps) {
    if (*a.field() != *b.field())
        throw IncompatibleFields("generators over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    const FqPtr& field = a.field();
    const Fq& fq = *field;
    int k = a.rows(), n = a.cols();

    unsigned __int128 budget = 1;
    for (int i = 2; i <= n; ++i) budget *= i;
    for (int i = 0; i < n; ++i) budget *= (fq.q() - 1);
    if (budget > caps.monomial)
        throw BudgetExceeded("monomial search space too large");

    // Row spaces must match via some S in GL_k; equivalently, rref equality.
    auto row_space = [&](const MatFq& g) { return rref(g).R; };
    MatFq target = row_space(a);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Fel> diag(n, 1);
        for (;;) {
            // m = b * dg * p: column i of m = diag[j] * (column j of b) where
            // p maps e_i to e_{perm[i]}... build p explicitly instead.
            MatFq p(field, n, n);
            for (int v = 0; v < n; ++v) p.at(perm[v], v) = 1;
            MatFq dg(field, n, n);
            for (int i = 0; i < n; ++i) dg.at(i, i) = diag[i];
            MatFq m = mat_mul(b, mat_mul(dg, p));
            if (row_space(m) == target) {
                // Solve s * m = a (transpose to column form).
                MatFq mt = transpose(m);
                MatFq st(field, k, k);
                bool ok = true;
                for (int col = 0; col < k && ok; ++col) {
                    std::vector<Fel> rhs(n);
                    for (int i = 0; i < n; ++i) rhs[i] = a.at(col, i);
                    auto x = solve(mt, rhs);
                    if (!x) {
                        ok = false;
                        break;
                    }
                    for (int i = 0; i < k; ++i) st.at(i, col) = (*x)[i];
                }
                MatFq s = transpose(st);
                if (ok && is_invertible(s) &&
                    a == mat_mul(s, mat_mul(b, mat_mul(dg, p))))
                    return BruteMonomial{s, dg, p};
            }
            // Next scalar vector.
            int pos = n - 1;
            while (pos >= 0) {
                if (++diag[pos] < fq.q()) break;
                diag[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace {

// Enumerates rref bases of all t-dimensional subspaces of F_q^d.
void enum_subspaces(const FqPtr& field, int d, int t,
                    const std::function<bool(const std::vector<std::vector<Fel>>&)>& fn);

void fill_free(const FqPtr& field, std::vector<std::vector<Fel>>& rows,
               const std::vector<std::pair<int, int>>& free_pos, std::size_t idx,
               const std::function<bool(const std::vector<std::vector<Fel>>&)>& fn,
               bool& stop) {
    if (stop) return;
    if (idx == free_pos.size()) {
        stop = fn(rows);
        return;
    }
    auto [r, c] = free_pos[idx];
    for (Fel v = 0; v < field->q() && !stop; ++v) {
        rows[r][c] = v;
        fill_free(field, rows, free_pos, idx + 1, fn, stop);
    }
    rows[r][c] = 0;
}

void enum_subspaces(const FqPtr& field, int d, int t,
                    const std::function<bool(const std::vector<std::vector<Fel>>&)>& fn) {
    // Choose pivot columns p_0 < ... < p_{t-1}; free entries are to the right
    // of each pivot, excluding pivot columns of later rows.
    std::vector<int> piv(t);
    std::iota(piv.begin(), piv.end(), 0);
    for (;;) {
        std::vector<std::vector<Fel>> rows(t, std::vector<Fel>(d, 0));
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < t; ++r) {
            rows[r][piv[r]] = 1;
            for (int c = piv[r] + 1; c < d; ++c)
                if (std::find(piv.begin() + r + 1, piv.end(), c) == piv.end())
                    free_pos.emplace_back(r, c);
        }
        bool stop = false;
        fill_free(field, rows, free_pos, 0, fn, stop);
        if (stop) return;
        // Next pivot combination.
        int i = t - 1;
        while (i >= 0 && piv[i] == d - t + i) --i;
        if (i < 0) return;
        ++piv[i];
        for (int j = i + 1; j < t; ++j) piv[j] = piv[j - 1] + 1;
    }
}

}  // namespace

std::vector<MatFq> brute_radical(const MatAlgebra& alg,
                                 const OracleCaps& caps) {
    const FqPtr& field = alg.field();
    const Fq& fq = *field;
    int d = alg.dim();
    int n = alg.n();
    unsigned __int128 total = 1;
    for (int i = 0; i < d; ++i) total *= fq.q();
    if (total > caps.radical)
        throw BudgetExceeded("algebra too large for brute_radical");

    auto to_mat = [&](const std::vector<Fel>& coords) {
        MatFq m(field, n, n);
        for (int i = 0; i < d; ++i)
            if (coords[i]) m = mat_add(m, mat_scale(alg.basis()[i], coords[i]));
        return m;
    };
    auto nilpotent = [&](const MatFq& m) { return mat_pow(m, n).is_zero(); };

    for (int t = d; t >= 1; --t) {
        std::vector<MatFq> found;
        enum_subspaces(field, d, t, [&](const std::vector<std::vector<Fel>>& rows) {
            std::vector<MatFq> sub;
            for (const auto& r : rows) sub.push_back(to_mat(r));
            // Two-sided ideal?
            for (const auto& x : sub)
                for (const auto& b : alg.basis()) {
                    if (!span_contains(sub, mat_mul(x, b))) return false;
                    if (!span_contains(sub, mat_mul(b, x))) return false;
                }
            // All elements nilpotent? (enumerate coefficient vectors)
            std::vector<Fel> co(t, 0);
            for (;;) {
                MatFq x(field, n, n);
                for (int i = 0; i < t; ++i)
                    if (co[i]) x = mat_add(x, mat_scale(sub[i], co[i]));
                if (!nilpotent(x)) return false;
                int pos = t - 1;
                while (pos >= 0) {
                    if (++co[pos] < fq.q()) break;
                    co[pos] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
            found = sub;
            return true;
        });
        if (!found.empty()) return span_basis(field, n, n, found);
    }
    return {};
}

}  // namespace rankeq

#include "rankeq/algebra.hpp"

#include <algorithm>

namespace rankeq {

namespace {

MatFq flat_rows(const FqPtr& field, int rows, int cols,
                const std::vector<MatFq>& mats) {
    MatFq r(field, static_cast<int>(mats.size()), rows * cols);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != rows || mats[i].cols() != cols)
            throw ShapeMismatch("span generator shape mismatch");
        const auto& e = mats[i].entries();
        for (int j = 0; j < rows * cols; ++j)
            r.at(static_cast<int>(i), j) = e[j];
    }
    return r;
}

MatFq from_flat(const FqPtr& field, int rows, int cols,
                const std::vector<Fel>& v) {
    return MatFq(field, rows, cols, v);
}

}  // namespace

std::vector<MatFq> span_basis(const FqPtr& field, int rows, int cols,
                              const std::vector<MatFq>& gens) {
    if (gens.empty()) return {};
    auto [R, rank, pivots] = rref(flat_rows(field, rows, cols, gens));
    (void)pivots;
    std::vector<MatFq> basis;
    for (int i = 0; i < rank; ++i) {
        std::vector<Fel> row(rows * cols);
        for (int j = 0; j < rows * cols; ++j) row[j] = R.at(i, j);
        basis.push_back(from_flat(field, rows, cols, row));
    }
    return basis;
}

std::optional<std::vector<Fel>> coords_in_span(const std::vector<MatFq>& basis,
                                               const MatFq& m) {
    if (basis.empty())
        return m.is_zero() ? std::optional<std::vector<Fel>>{std::vector<Fel>{}}
                           : std::nullopt;
    const FqPtr& field = basis[0].field();
    int len = basis[0].rows() * basis[0].cols();
    MatFq sys(field, len, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < len; ++i)
            sys.at(i, static_cast<int>(j)) = basis[j].entries()[i];
    return solve(sys, m.entries());
}

bool span_contains(const std::vector<MatFq>& basis, const MatFq& m) {
    return coords_in_span(basis, m).has_value();
}

MatAlgebra::MatAlgebra(FqPtr field, int n, const std::vector<MatFq>& gens,
                       bool check_closure)
    : field_(std::move(field)), n_(n) {
    basis_ = span_basis(field_, n, n, gens);
    if (check_closure) {
        for (const auto& a : basis_)
            for (const auto& b : basis_)
                if (!span_contains(basis_, mat_mul(a, b)))
                    throw Error("span is not closed under multiplication");
    }
    contains_identity_ =
        !basis_.empty() && span_contains(basis_, MatFq::identity(field_, n));
}

MatAlgebra algebra_closure(const FqPtr& field, int n,
                           const std::vector<MatFq>& generators, bool unital) {
    std::vector<MatFq> gens = generators;
    if (unital) gens.push_back(MatFq::identity(field, n));
    std::vector<MatFq> basis = span_basis(field, n, n, gens);
    for (;;) {
        std::vector<MatFq> next = basis;
        for (const auto& a : basis)
            for (const auto& b : basis) next.push_back(mat_mul(a, b));
        next = span_basis(field, n, n, next);
        if (next.size() == basis.size()) break;
        basis = std::move(next);
    }
    return MatAlgebra(field, n, basis, /*check_closure=*/false);
}

// ---------------------------------------------------------------------------
// Radical: characteristic-p chain of semilinear trace conditions. Step i
// imposes c_{p^{i-1}}(x y) = 0 for all y in the previous layer, where c_d is
// the coefficient of lambda^{n-d} in the characteristic polynomial. The
// condition is p^{i-1}-semilinear in x, so substitute eta = xi^{p^{i-1}},
// solve linearly, and pull the basis back by the inverse Frobenius power.
// ---------------------------------------------------------------------------

MatAlgebra radical(const MatAlgebra& a) {
    const FqPtr& field = a.field();
    const Fq& k = *field;
    int n = a.n();
    std::vector<MatFq> layer = a.basis();

    auto frob_inv = [&](Fel x, std::uint64_t s) {
        // Inverse of the s-fold p-power Frobenius on F_{p^e}.
        std::uint64_t e = k.e();
        std::uint64_t t = (e - s % e) % e;
        Fel r = x;
        for (std::uint64_t i = 0; i < t; ++i) r = k.frobenius(r);
        return r;
    };

    std::uint64_t d = 1;  // p^{i-1}
    std::uint64_t step = 0;
    while (d <= static_cast<std::uint64_t>(n) && !layer.empty()) {
        int t = static_cast<int>(layer.size());
        MatFq sys(field, t, t);
        for (int row = 0; row < t; ++row)
            for (int j = 0; j < t; ++j) {
                Poly chi = char_poly(mat_mul(layer[j], layer[row]));
                sys.at(row, j) = chi.coeff(n - static_cast<int>(d));
            }
        auto eta_kernel = right_kernel(sys);
        std::vector<MatFq> next;
        for (const auto& eta : eta_kernel) {
            MatFq x(field, n, n);
            for (int j = 0; j < t; ++j) {
                Fel xi = frob_inv(eta[j], step);
                if (xi) x = mat_add(x, mat_scale(layer[j], xi));
            }
            next.push_back(std::move(x));
        }
        layer = span_basis(field, n, n, next);
        d *= k.p();
        ++step;
    }
    return MatAlgebra(field, n, layer, /*check_closure=*/false);
}

namespace {

std::vector<MatFq> center_basis(const FqPtr& field, int n,
                                const std::vector<MatFq>& basis) {
    int dim = static_cast<int>(basis.size());
    if (dim == 0) return {};
    MatFq sys(field, dim * n * n, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            MatFq comm = mat_sub(mat_mul(basis[j], basis[i]),
                                 mat_mul(basis[i], basis[j]));
            const auto& e = comm.entries();
            for (int r = 0; r < n * n; ++r) sys.at(i * n * n + r, j) = e[r];
        }
    }
    std::vector<MatFq> gens;
    for (const auto& xi : right_kernel(sys)) {
        MatFq z(field, n, n);
        for (int j = 0; j < dim; ++j)
            if (xi[j]) z = mat_add(z, mat_scale(basis[j], xi[j]));
        gens.push_back(std::move(z));
    }
    return span_basis(field, n, n, gens);
}

}  // namespace

MatAlgebra center(const MatAlgebra& a) {
    return MatAlgebra(a.field(), a.n(),
                      center_basis(a.field(), a.n(), a.basis()),
                      /*check_closure=*/false);
}

Poly algebra_min_poly(const MatFq& a, const MatFq& unit) {
    const FqPtr& field = a.field();
    int n = a.rows();
    int len = n * n;
    std::vector<std::vector<Fel>> krylov{unit.entries()};
    MatFq pw = unit;
    for (int deg = 1; deg <= len + 1; ++deg) {
        pw = mat_mul(pw, a);
        MatFq sys(field, len, deg);
        for (int j = 0; j < deg; ++j)
            for (int i = 0; i < len; ++i) sys.at(i, j) = krylov[j][i];
        auto c = solve(sys, pw.entries());
        if (c) {
            std::vector<Fel> coeffs(deg + 1, 0);
            for (int j = 0; j < deg; ++j) coeffs[j] = field->neg((*c)[j]);
            coeffs[deg] = 1;
            return Poly(field, std::move(coeffs));
        }
        krylov.push_back(pw.entries());
    }
    throw Error("unreachable: no annihilating polynomial found");
}

MatFq algebra_poly_eval(const Poly& p, const MatFq& a, const MatFq& unit) {
    MatFq r(a.field(), a.rows(), a.cols());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        r = mat_mul(r, a);
        if (p.coeffs()[i] != 0)
            r = mat_add(r, mat_scale(unit, p.coeffs()[i]));
    }
    return r;
}

std::optional<MatFq> algebra_unit(const std::vector<MatFq>& basis) {
    if (basis.empty()) return std::nullopt;
    const FqPtr& field = basis[0].field();
    int n = basis[0].rows();
    int dim = static_cast<int>(basis.size());
    int len = n * n;
    MatFq sys(field, 2 * dim * len, dim);
    std::vector<Fel> rhs(2 * dim * len, 0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const auto left = mat_mul(basis[j], basis[i]).entries();
            const auto right = mat_mul(basis[i], basis[j]).entries();
            for (int r = 0; r < len; ++r) {
                sys.at(i * len + r, j) = left[r];
                sys.at((dim + i) * len + r, j) = right[r];
            }
        }
        const auto& tgt = basis[i].entries();
        for (int r = 0; r < len; ++r) {
            rhs[i * len + r] = tgt[r];
            rhs[(dim + i) * len + r] = tgt[r];
        }
    }
    auto xi = solve(sys, rhs);
    if (!xi) return std::nullopt;
    MatFq u(field, n, n);
    for (int j = 0; j < dim; ++j)
        if ((*xi)[j]) u = mat_add(u, mat_scale(basis[j], (*xi)[j]));
    return u;
}

namespace {

MatFq random_combo(const std::vector<MatFq>& basis, Rng& rng) {
    const FqPtr& field = basis[0].field();
    MatFq r(field, basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) {
        Fel c = field->random(rng);
        if (c) r = mat_add(r, mat_scale(b, c));
    }
    return r;
}

// Orthogonal idempotents from the partial-fraction split of a squarefree
// minimal polynomial: g_i = (m/f_i) * ((m/f_i)^{-1} mod f_i) mod m.
std::vector<Poly> partial_fraction_idempotents(
    const Poly& m, const std::vector<std::pair<Poly, std::uint64_t>>& factors) {
    std::vector<Poly> gs;
    for (const auto& [f, mult] : factors) {
        if (mult != 1) throw NotSemisimple("minimal polynomial not squarefree");
        Poly mi = poly_div_exact(m, f);
        auto hi = poly_inv_mod(mi, f);
        if (!hi) throw Error("unreachable: cofactor invertible mod factor");
        gs.push_back(poly_mod(poly_mul(mi, *hi), m));
    }
    return gs;
}

}  // namespace

std::vector<SimpleComponent> split_semisimple(const MatAlgebra& s, Rng& rng) {
    const FqPtr& field = s.field();
    int n = s.n();
    int dim = s.dim();
    if (dim == 0) return {};
    MatFq unit = s.contains_identity() ? MatFq::identity(field, n) : [&] {
        auto u = algebra_unit(s.basis());
        if (!u) throw NotSemisimple("algebra has no unit");
        return *u;
    }();

    auto zbasis = center_basis(field, n, s.basis());
    if (static_cast<int>(zbasis.size()) == 1)
        return {SimpleComponent{s.basis(), unit}};

    // Split by every center basis element in turn. The center may have no
    // primitive element (e.g. F_2 x F_2 x F_2 over F_2), but two distinct
    // simple components differ in the eigenvalue of some basis element, so
    // refining by all of them separates everything.
    std::vector<SimpleComponent> comps{SimpleComponent{s.basis(), unit}};
    for (const auto& z : zbasis) {
        std::vector<SimpleComponent> next;
        for (const auto& comp : comps) {
            MatFq ze = mat_mul(z, comp.idem);
            Poly mp = algebra_min_poly(ze, comp.idem);
            auto factors = poly_factor(mp, rng);
            if (factors.size() == 1 && factors[0].second == 1) {
                next.push_back(comp);
                continue;
            }
            auto gs = partial_fraction_idempotents(mp, factors);
            for (const auto& g : gs) {
                MatFq e = algebra_poly_eval(g, ze, comp.idem);
                std::vector<MatFq> gens;
                for (const auto& b : comp.basis) gens.push_back(mat_mul(b, e));
                next.push_back(
                    SimpleComponent{span_basis(field, n, n, gens), e});
            }
        }
        comps = std::move(next);
    }
    (void)dim;
    return comps;
}

SimpleIso explicit_simple_iso(const FqPtr& field, int n,
                              const std::vector<MatFq>& basis, Rng& rng) {
    int dim = static_cast<int>(basis.size());
    if (dim == 0) throw NotSimple("empty algebra");
    auto unit_opt = algebra_unit(basis);
    if (!unit_opt) throw NotSimple("no unit");
    MatFq unit = *unit_opt;

    int v = static_cast<int>(center_basis(field, n, basis).size());
    int u = 0;
    while ((u + 1) * (u + 1) * v <= dim) ++u;
    if (u * u * v != dim) throw NotSimple("dimension is not u^2 * v");

    // Shrink the idempotent until its corner e S e is the residue field.
    MatFq e = unit;
    auto corner_of = [&](const MatFq& idem) {
        std::vector<MatFq> gens;
        for (const auto& b : basis)
            gens.push_back(mat_mul(idem, mat_mul(b, idem)));
        return span_basis(field, n, n, gens);
    };
    std::vector<MatFq> corner = corner_of(e);
    int guard = 0;
    while (static_cast<int>(corner.size()) > v) {
        if (++guard > 256 * dim) throw NotSimple("idempotent search stalled");
        MatFq cand = random_combo(corner, rng);
        if (cand.is_zero()) continue;
        Poly mp = algebra_min_poly(cand, e);
        auto factors = poly_factor(mp, rng);
        if (factors.size() < 2) continue;
        // Idempotent cutting out the primary part of the first factor.
        Poly f = factors[0].first;
        Poly cof = mp;
        for (std::uint64_t t = 0; t < factors[0].second; ++t)
            cof = poly_div_exact(cof, f);
        Poly fprim = poly_div_exact(mp, cof);
        auto hi = poly_inv_mod(cof, fprim);
        if (!hi) continue;
        MatFq e2 = algebra_poly_eval(poly_mod(poly_mul(cof, *hi), mp), cand, e);
        if (e2.is_zero() || e2 == e) continue;
        if (mat_mul(e2, e2) != e2) continue;
        e = e2;
        corner = corner_of(e);
    }

    // Module basis of V = S e over the corner field D = e S e.
    std::vector<MatFq> se_gens;
    for (const auto& b : basis) se_gens.push_back(mat_mul(b, e));
    auto se = span_basis(field, n, n, se_gens);
    std::vector<MatFq> mbasis;
    std::vector<MatFq> span;
    for (const auto& w : se) {
        if (static_cast<int>(mbasis.size()) == u) break;
        if (span_contains(span_basis(field, n, n, span), w)) continue;
        mbasis.push_back(w);
        for (const auto& d : corner) span.push_back(mat_mul(w, d));
        span = span_basis(field, n, n, span);
    }
    if (static_cast<int>(mbasis.size()) != u)
        throw NotSimple("module basis extraction failed");

    // The projector onto each m_j D is realized by a unique element of S.
    std::vector<MatFq> min_idems;
    int len = n * n;
    for (int j = 0; j < u; ++j) {
        MatFq sys(field, u * len, dim);
        std::vector<Fel> rhs(u * len, 0);
        for (int kk = 0; kk < u; ++kk) {
            for (int col = 0; col < dim; ++col) {
                const auto prod = mat_mul(basis[col], mbasis[kk]).entries();
                for (int r = 0; r < len; ++r) sys.at(kk * len + r, col) = prod[r];
            }
            if (kk == j) {
                const auto& t = mbasis[kk].entries();
                for (int r = 0; r < len; ++r) rhs[kk * len + r] = t[r];
            }
        }
        auto xi = solve(sys, rhs);
        if (!xi) throw NotSimple("projector system unsolvable");
        MatFq eps(field, n, n);
        for (int col = 0; col < dim; ++col)
            if ((*xi)[col]) eps = mat_add(eps, mat_scale(basis[col], (*xi)[col]));
        min_idems.push_back(std::move(eps));
    }

    SimpleIso iso;
    iso.u = u;
    iso.v = v;
    iso.unit = unit;
    iso.min_idem = e;
    iso.module_basis = mbasis;
    iso.min_idems = min_idems;
    return iso;
}

std::pair<MatFq, MatFq> factor_projector(const MatFq& e) {
    if (!e.is_square()) throw NotProjector("projector must be square");
    if (mat_mul(e, e) != e) throw NotProjector("matrix is not idempotent");
    const FqPtr& field = e.field();
    int n = e.rows();
    auto [R, r, pivots] = rref(e);
    (void)R;
    MatFq a(field, n, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) a.at(i, j) = e.at(i, pivots[j]);
    // Solve A X = E column by column; X exists since col(E) = col(A).
    MatFq bt(field, r, n);
    for (int col = 0; col < n; ++col) {
        std::vector<Fel> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = e.at(i, col);
        auto x = solve(a, rhs);
        if (!x) throw NotProjector("column space inconsistency");
        for (int i = 0; i < r; ++i) bt.at(i, col) = (*x)[i];
    }
    return {a, transpose(bt)};
}

namespace {

struct QuotientRep {
    std::vector<MatFq> comp_reps;  // complement representatives in A
    std::vector<MatFq> reg;        // left regular representation images
};

// Left regular representation of A / rad on a complement of the radical.
QuotientRep quotient_regular_rep(const MatAlgebra& a, const MatAlgebra& rad) {
    const FqPtr& field = a.field();
    int n = a.n();
    QuotientRep out;
    std::vector<MatFq> spanned = rad.basis();
    for (const auto& b : a.basis()) {
        if (span_contains(span_basis(field, n, n, spanned), b)) continue;
        out.comp_reps.push_back(b);
        spanned.push_back(b);
    }
    int s = static_cast<int>(out.comp_reps.size());
    std::vector<MatFq> mixed = out.comp_reps;
    for (const auto& r : rad.basis()) mixed.push_back(r);
    auto quotient_coords = [&](const MatFq& x) {
        auto co = coords_in_span(mixed, x);
        if (!co) throw Error("unreachable: element outside algebra");
        return std::vector<Fel>(co->begin(), co->begin() + s);
    };
    for (int i = 0; i < s; ++i) {
        MatFq L(field, s, s);
        for (int j = 0; j < s; ++j) {
            auto co = quotient_coords(
                mat_mul(out.comp_reps[i], out.comp_reps[j]));
            for (int r = 0; r < s; ++r) L.at(r, j) = co[r];
        }
        out.reg.push_back(std::move(L));
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> component_profile(const MatAlgebra& a,
                                                   Rng& rng) {
    MatAlgebra rad = radical(a);
    std::vector<std::pair<int, int>> profile;
    if (rad.dim() == 0) {
        for (const auto& comp : split_semisimple(a, rng)) {
            auto iso = explicit_simple_iso(a.field(), a.n(), comp.basis, rng);
            profile.emplace_back(iso.u, iso.v);
        }
        return profile;
    }
    auto qr = quotient_regular_rep(a, rad);
    int s = static_cast<int>(qr.comp_reps.size());
    MatAlgebra quot(a.field(), s, qr.reg, /*check_closure=*/false);
    for (const auto& comp : split_semisimple(quot, rng)) {
        auto iso = explicit_simple_iso(a.field(), s, comp.basis, rng);
        profile.emplace_back(iso.u, iso.v);
    }
    return profile;
}

IdemDecomposition decompose_identity(const MatAlgebra& a, Rng& rng) {
    const FqPtr& field = a.field();
    const Fq& k = *field;
    int n = a.n();
    if (!a.contains_identity())
        throw Error("decompose_identity needs a unital algebra");

    MatAlgebra rad = radical(a);
    std::vector<MatFq> lifted;

    if (rad.dim() == 0) {
        for (const auto& comp : split_semisimple(a, rng)) {
            auto iso = explicit_simple_iso(field, n, comp.basis, rng);
            for (const auto& eps : iso.min_idems) lifted.push_back(eps);
        }
    } else {
        auto qr = quotient_regular_rep(a, rad);
        const auto& comp_reps = qr.comp_reps;
        const auto& reg = qr.reg;
        int s = static_cast<int>(comp_reps.size());
        MatAlgebra quot(field, s, reg, /*check_closure=*/false);

        for (const auto& comp : split_semisimple(quot, rng)) {
            auto iso = explicit_simple_iso(field, s, comp.basis, rng);
            for (const auto& eps : iso.min_idems) {
                auto co = coords_in_span(reg, eps);
                if (!co) throw Error("unreachable: idempotent outside quotient");
                MatFq pre(field, n, n);
                for (int i = 0; i < s; ++i)
                    if ((*co)[i])
                        pre = mat_add(pre, mat_scale(comp_reps[i], (*co)[i]));
                // Stabilize to an idempotent: the p-power map kills the
                // radical error term.
                int guard = 0;
                while (mat_mul(pre, pre) != pre) {
                    if (++guard > 64) throw Error("idempotent lift stalled");
                    pre = mat_pow(pre, k.p());
                }
                lifted.push_back(std::move(pre));
            }
        }
    }

    // Orthogonalize against the already-processed idempotents, then close the
    // sum exactly by replacing the last one.
    std::vector<MatFq> ortho;
    MatFq acc(field, n, n);  // sum of processed idempotents
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        MatFq f = lifted[i];
        if (!ortho.empty()) {
            MatFq mask = mat_sub(MatFq::identity(field, n), acc);
            f = mat_mul(mask, mat_mul(f, mask));
            int guard = 0;
            while (mat_mul(f, f) != f) {
                if (++guard > 64) throw Error("orthogonalization stalled");
                f = mat_pow(f, k.p());
            }
        }
        if (i + 1 == lifted.size())
            f = mat_sub(MatFq::identity(field, n), acc);
        ortho.push_back(f);
        acc = mat_add(acc, ortho.back());
    }
    if (ortho.empty()) ortho.push_back(MatFq::identity(field, n));

    IdemDecomposition dec;
    for (const auto& e : ortho) {
        dec.idempotents.push_back(e);
        dec.factors.push_back(factor_projector(e));
        dec.ranks.push_back(mat_rank(e));
    }
    return dec;
}

std::optional<MatFq> find_field_generator(const MatAlgebra& s, int d,
                                          Rng& rng) {
    if (s.dim() != d || d < 1) return std::nullopt;
    auto good = [&](const MatFq& cand) {
        Poly mp = min_poly(cand);
        return mp.degree() == d && poly_is_irreducible(mp);
    };
    for (int t = 0; t < 64 * d; ++t) {
        MatFq cand = random_combo(s.basis(), rng);
        if (!cand.is_zero() && good(cand)) return cand;
    }
    for (std::size_t i = 0; i < s.basis().size(); ++i)
        for (std::size_t j = i; j < s.basis().size(); ++j) {
            MatFq cand = i == j ? s.basis()[i]
                                : mat_add(s.basis()[i], s.basis()[j]);
            if (!cand.is_zero() && good(cand)) return cand;
        }
    return std::nullopt;
}

std::optional<MatFq> conjugate_field_reps(const MatAlgebra& s1,
                                          const MatAlgebra& s2, Rng& rng) {
    int ell = s1.dim();
    if (s2.dim() != ell) return std::nullopt;
    auto a1 = find_field_generator(s1, ell, rng);
    auto a2 = find_field_generator(s2, ell, rng);
    if (!a1 || !a2) throw NotFieldRep("input is not a field representation");
    if (ell == 1) return MatFq::identity(s1.field(), s1.n());

    Poly mu1 = min_poly(*a1);
    Poly mu2 = min_poly(*a2);
    auto root = find_root_mod(mu2, mu1, rng);
    if (!root) throw NotFieldRep("minimal polynomials define different fields");
    MatFq m = poly_eval_mat(*root, *a1);
    auto p0 = similarity_transform(m, *a2);
    if (!p0) throw NotFieldRep("conjugation failed");
    auto p0_inv = mat_inverse(*p0);
    if (!p0_inv) throw Error("unreachable: transform is invertible");
    // p0^-1 m p0 = a2, so S2 = p0^-1 S1 p0 and S1 = (p0^-1)^-1 S2 (p0^-1)^-1
    // ... returning P = p0^-1 gives S1 = P^-1 S2 P.
    return *p0_inv;
}

MatFq frobenius_matrix(const MatFq& a) {
    if (!a.is_square()) throw NotSquare("square matrix required");
    Poly chi = char_poly(a);
    if (!poly_is_irreducible(chi))
        throw NotIrreducible("characteristic polynomial must be irreducible");
    const FqPtr& field = a.field();
    int m = a.rows();
    if (m == 1) return MatFq::identity(field, 1);
    MatFq aq = mat_pow(a, field->q());

    MatFq sys(field, m * m, m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int eq = i * m + j;
            for (int sidx = 0; sidx < m; ++sidx)
                sys.at(eq, i * m + sidx) =
                    field->add(sys.at(eq, i * m + sidx), a.at(sidx, j));
            for (int r = 0; r < m; ++r)
                sys.at(eq, r * m + j) =
                    field->sub(sys.at(eq, r * m + j), aq.at(i, r));
        }
    auto ker = right_kernel(sys);
    for (const auto& v : ker) {
        MatFq theta(field, m, m, v);
        if (is_invertible(theta)) return theta;
    }
    throw NoInvertibleSolution("no invertible intertwiner found");
}

}  // namespace rankeq

#include "rankeq/poly.hpp"

#include <algorithm>
#include <cassert>

namespace rankeq {

namespace {

// ---------------------------------------------------------------------------
// Generic polynomial arithmetic, parametrized by a coefficient field model.
// Two models are used: the base field F_q itself, and quotient fields
// F_q[x]/(h) for root finding inside extensions.
// ---------------------------------------------------------------------------

struct BaseField {
    const Fq& k;
    using Elem = Fel;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return k.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return k.sub(a, b); }
    Elem neg(const Elem& a) const { return k.neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return k.mul(a, b); }
    Elem inv(const Elem& a) const { return k.inv(a); }
    Elem random(Rng& rng) const { return k.random(rng); }
    std::uint64_t p() const { return k.p(); }
    std::uint64_t log_p_size() const { return k.e(); }
};

std::vector<Fel> vnormed(std::vector<Fel> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<Fel> vadd(const Fq& k, const std::vector<Fel>& a,
                      const std::vector<Fel>& b);
std::vector<Fel> vmul(const Fq& k, const std::vector<Fel>& a,
                      const std::vector<Fel>& b);
std::pair<std::vector<Fel>, std::vector<Fel>> vdivmod(
    const Fq& k, std::vector<Fel> a, const std::vector<Fel>& b);
std::vector<Fel> vinvmod(const Fq& k, const std::vector<Fel>& a,
                         const std::vector<Fel>& m);

struct QuotField {
    const Fq& k;
    std::vector<Fel> h;  // monic irreducible over k
    using Elem = std::vector<Fel>;
    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    Elem add(const Elem& a, const Elem& b) const { return vadd(k, a, b); }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r) c = k.neg(c);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        return vdivmod(k, vmul(k, a, b), h).second;
    }
    Elem inv(const Elem& a) const { return vinvmod(k, a, h); }
    Elem random(Rng& rng) const {
        Elem r(h.size() - 1);
        for (auto& c : r) c = k.random(rng);
        return vnormed(std::move(r));
    }
    std::uint64_t p() const { return k.p(); }
    std::uint64_t log_p_size() const { return k.e() * (h.size() - 1); }
};

template <class F>
using VPoly = std::vector<typename F::Elem>;

template <class F>
void gnorm(const F& K, VPoly<F>& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class F>
int gdeg(const VPoly<F>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class F>
VPoly<F> gadd(const F& K, const VPoly<F>& a, const VPoly<F>& b) {
    VPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    gnorm(K, r);
    return r;
}

template <class F>
VPoly<F> gsub(const F& K, const VPoly<F>& a, const VPoly<F>& b) {
    VPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    gnorm(K, r);
    return r;
}

template <class F>
VPoly<F> gmul(const F& K, const VPoly<F>& a, const VPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    VPoly<F> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    gnorm(K, r);
    return r;
}

template <class F>
VPoly<F> gscale(const F& K, const VPoly<F>& a, const typename F::Elem& c) {
    VPoly<F> r = a;
    for (auto& x : r) x = K.mul(x, c);
    gnorm(K, r);
    return r;
}

template <class F>
VPoly<F> gmonic(const F& K, const VPoly<F>& a) {
    if (a.empty()) return a;
    return gscale(K, a, K.inv(a.back()));
}

template <class F>
std::pair<VPoly<F>, VPoly<F>> gdivmod(const F& K, VPoly<F> a,
                                      const VPoly<F>& b) {
    if (b.empty()) throw ZeroPolynomial("division by zero polynomial");
    int db = gdeg<F>(b);
    auto lb_inv = K.inv(b.back());
    VPoly<F> q;
    if (gdeg<F>(a) >= db) q.assign(a.size() - db, K.zero());
    while (gdeg<F>(a) >= db) {
        int shift = gdeg<F>(a) - db;
        auto c = K.mul(a.back(), lb_inv);
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            a[shift + i] = K.sub(a[shift + i], K.mul(c, b[i]));
        gnorm(K, a);
    }
    gnorm(K, q);
    return {std::move(q), std::move(a)};
}

template <class F>
VPoly<F> ggcd(const F& K, VPoly<F> a, VPoly<F> b) {
    while (!b.empty()) {
        auto r = gdivmod(K, std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return gmonic(K, a);
}

template <class F>
VPoly<F> gpowmod(const F& K, VPoly<F> base, unsigned __int128 e,
                 const VPoly<F>& mod) {
    VPoly<F> r{K.one()};
    base = gdivmod(K, std::move(base), mod).second;
    while (e) {
        if (e & 1) r = gdivmod(K, gmul(K, r, base), mod).second;
        base = gdivmod(K, gmul(K, base, base), mod).second;
        e >>= 1;
    }
    return r;
}

template <class F>
unsigned __int128 gfield_size(const F& K) {
    unsigned __int128 s = 1;
    for (std::uint64_t i = 0; i < K.log_p_size(); ++i) {
        if (s > (static_cast<unsigned __int128>(1) << 120) / K.p())
            throw FieldTooLarge("field too large for exponentiation");
        s *= K.p();
    }
    return s;
}

// Splits a monic squarefree product of degree-d irreducibles into its
// irreducible factors (Cantor-Zassenhaus equal-degree splitting).
template <class F>
void edf_split(const F& K, const VPoly<F>& g, int d, Rng& rng,
               std::vector<VPoly<F>>& out) {
    if (gdeg<F>(g) == d) {
        out.push_back(g);
        return;
    }
    unsigned __int128 Q = gfield_size(K);
    for (;;) {
        VPoly<F> a(gdeg<F>(g), K.zero());
        for (auto& c : a) c = K.random(rng);
        gnorm(K, a);
        if (a.empty()) continue;
        VPoly<F> c;
        if (K.p() == 2) {
            // Trace map over F_2: a + a^2 + a^4 + ...
            c = a;
            VPoly<F> t = a;
            std::uint64_t terms = K.log_p_size() * static_cast<std::uint64_t>(d);
            for (std::uint64_t i = 1; i < terms; ++i) {
                t = gpowmod(K, std::move(t), 2, g);
                c = gadd(K, c, t);
            }
        } else {
            unsigned __int128 e = 1;
            for (int i = 0; i < d; ++i) {
                if (e > (static_cast<unsigned __int128>(1) << 120) / Q)
                    throw FieldTooLarge("field too large for EDF");
                e *= Q;
            }
            auto b = gpowmod(K, std::move(a), (e - 1) / 2, g);
            c = gsub(K, b, VPoly<F>{K.one()});
        }
        auto s = ggcd(K, g, c);
        if (gdeg<F>(s) > 0 && gdeg<F>(s) < gdeg<F>(g)) {
            edf_split(K, s, d, rng, out);
            edf_split(K, gdivmod(K, g, s).first, d, rng, out);
            return;
        }
    }
}

// One root of f in K, or nothing. f has coefficients already lifted into K.
template <class F>
std::optional<typename F::Elem> groot(const F& K, const VPoly<F>& f,
                                      Rng& rng) {
    if (f.empty()) throw ZeroPolynomial();
    VPoly<F> y{K.zero(), K.one()};
    auto fm = gmonic(K, f);
    if (gdeg<F>(fm) == 0) return std::nullopt;
    unsigned __int128 Q = gfield_size(K);
    auto t = gpowmod(K, y, Q, fm);
    auto g = ggcd(K, fm, gsub(K, t, y));
    if (gdeg<F>(g) == 0) return std::nullopt;
    std::vector<VPoly<F>> linear;
    edf_split(K, g, 1, rng, linear);
    // linear[0] is monic y + c; root is -c.
    return K.neg(linear[0][0]);
}

// Concrete helpers over Fel vectors, used by QuotField.
std::vector<Fel> vadd(const Fq& k, const std::vector<Fel>& a,
                      const std::vector<Fel>& b) {
    BaseField K{k};
    return gadd(K, a, b);
}

std::vector<Fel> vmul(const Fq& k, const std::vector<Fel>& a,
                      const std::vector<Fel>& b) {
    BaseField K{k};
    return gmul(K, a, b);
}

std::pair<std::vector<Fel>, std::vector<Fel>> vdivmod(
    const Fq& k, std::vector<Fel> a, const std::vector<Fel>& b) {
    BaseField K{k};
    return gdivmod(K, std::move(a), b);
}

// Inverse of a mod m (m irreducible, a nonzero mod m), by extended Euclid.
std::vector<Fel> vinvmod(const Fq& k, const std::vector<Fel>& a,
                         const std::vector<Fel>& m) {
    BaseField K{k};
    std::vector<Fel> r0 = m, r1 = gdivmod(K, a, m).second;
    std::vector<Fel> t0 = {}, t1 = {1};
    if (r1.empty()) throw Error("inverse of zero residue");
    while (!r1.empty()) {
        auto [q, r2] = gdivmod(K, r0, r1);
        auto t2 = gsub(K, t0, gmul(K, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd, a unit; scale t0 by its inverse.
    if (gdeg<BaseField>(r0) != 0) throw Error("residue not invertible");
    return gscale(K, t0, k.inv(r0[0]));
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(FqPtr field, std::vector<Fel> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c >= field_->q()) throw Error("coefficient out of range");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const FqPtr& field) { return Poly(field, {0, 1}); }

Poly Poly::constant(const FqPtr& field, Fel c) { return Poly(field, {c}); }

namespace {
Poly mk(const FqPtr& f, std::vector<Fel> c) { return Poly(f, std::move(c)); }
void check_same(const Poly& a, const Poly& b) {
    if (*a.field() != *b.field())
        throw IncompatibleFields("polynomials over different fields");
}
}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
    check_same(a, b);
    BaseField K{*a.field()};
    return mk(a.field(), gadd(K, a.coeffs(), b.coeffs()));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same(a, b);
    BaseField K{*a.field()};
    return mk(a.field(), gsub(K, a.coeffs(), b.coeffs()));
}

Poly poly_neg(const Poly& a) {
    auto c = a.coeffs();
    for (auto& x : c) x = a.field()->neg(x);
    return mk(a.field(), std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same(a, b);
    BaseField K{*a.field()};
    return mk(a.field(), gmul(K, a.coeffs(), b.coeffs()));
}

Poly poly_scale(const Poly& a, Fel c) {
    BaseField K{*a.field()};
    return mk(a.field(), gscale(K, a.coeffs(), c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    BaseField K{*a.field()};
    auto [q, r] = gdivmod(K, a.coeffs(), b.coeffs());
    return {mk(a.field(), std::move(q)), mk(a.field(), std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same(a, b);
    BaseField K{*a.field()};
    return mk(a.field(), ggcd(K, a.coeffs(), b.coeffs()));
}

Poly poly_make_monic(const Poly& a) {
    BaseField K{*a.field()};
    return mk(a.field(), gmonic(K, a.coeffs()));
}

Poly poly_derivative(const Poly& a) {
    const Fq& k = *a.field();
    std::vector<Fel> d;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        Fel m = 0;
        // i * c in F_q: i reduced mod p acts through repeated addition code.
        Fel imod = static_cast<Fel>(i % k.p());
        m = k.mul(k.is_prime_field() ? imod : k.from_digits({imod}),
                  a.coeffs()[i]);
        d.push_back(m);
    }
    return mk(a.field(), std::move(d));
}

Fel poly_eval(const Poly& a, Fel x) {
    const Fq& k = *a.field();
    Fel r = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        r = k.add(k.mul(r, x), a.coeffs()[i]);
    return r;
}

Poly poly_pow_mod(const Poly& base, unsigned __int128 k, const Poly& mod) {
    check_same(base, mod);
    BaseField K{*base.field()};
    return mk(base.field(), gpowmod(K, base.coeffs(), k, mod.coeffs()));
}

std::optional<Poly> poly_inv_mod(const Poly& a, const Poly& mod) {
    check_same(a, mod);
    if (poly_gcd(a, mod).degree() != 0) return std::nullopt;
    return mk(a.field(), vinvmod(*a.field(), a.coeffs(), mod.coeffs()));
}

// ---------------------------------------------------------------------------
// Irreducibility and factorization
// ---------------------------------------------------------------------------

bool poly_is_irreducible(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    int d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    const FqPtr& k = f.field();
    BaseField K{*k};
    auto fm = gmonic(K, f.coeffs());
    VPoly<BaseField> y{0, 1};

    // x^{q^d} == x mod f
    auto t = y;
    for (int i = 0; i < d; ++i) t = gpowmod(K, std::move(t), k->q(), fm);
    if (t != y) return false;

    // gcd(x^{q^{d/r}} - x, f) constant for every prime r | d
    int rem = d;
    for (int r = 2; r * r <= rem; ++r) {
        if (rem % r) continue;
        while (rem % r == 0) rem /= r;
        auto u = y;
        for (int i = 0; i < d / r; ++i) u = gpowmod(K, std::move(u), k->q(), fm);
        if (gdeg<BaseField>(ggcd(K, fm, gsub(K, u, y))) > 0) return false;
    }
    if (rem > 1) {
        auto u = y;
        for (int i = 0; i < d / rem; ++i)
            u = gpowmod(K, std::move(u), k->q(), fm);
        if (gdeg<BaseField>(ggcd(K, fm, gsub(K, u, y))) > 0) return false;
    }
    return true;
}

namespace {

constexpr std::uint64_t kBerlekampMaxQ = 256;

// Deterministic Berlekamp split of a monic squarefree polynomial.
void berlekamp_squarefree(const FqPtr& k, const std::vector<Fel>& f, Rng&,
                          std::vector<std::vector<Fel>>& out) {
    BaseField K{*k};
    int d = gdeg<BaseField>(f);
    if (d <= 1) {
        out.push_back(f);
        return;
    }
    // Matrix of the Frobenius map v -> v^q mod f on coefficient vectors.
    std::vector<std::vector<Fel>> M(d, std::vector<Fel>(d, 0));
    VPoly<BaseField> xq = gpowmod(K, VPoly<BaseField>{0, 1}, k->q(), f);
    VPoly<BaseField> col{1};
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < static_cast<int>(col.size()); ++i) M[i][j] = col[i];
        col = gdivmod(K, gmul(K, col, xq), f).second;
    }
    for (int i = 0; i < d; ++i) M[i][i] = k->sub(M[i][i], 1);

    // Kernel of M by Gaussian elimination.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < d && rank < d; ++c) {
        int piv = -1;
        for (int r = rank; r < d; ++r)
            if (M[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        Fel inv = k->inv(M[rank][c]);
        for (int j = 0; j < d; ++j) M[rank][j] = k->mul(M[rank][j], inv);
        for (int r = 0; r < d; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            Fel factor = M[r][c];
            for (int j = 0; j < d; ++j)
                M[r][j] = k->sub(M[r][j], k->mul(factor, M[rank][j]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    int nfactors = d - rank;
    std::vector<std::vector<Fel>> kernel;
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Fel> v(d, 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = k->neg(M[r][c]);
        kernel.push_back(vnormed(std::move(v)));
    }

    std::vector<std::vector<Fel>> factors{f};
    for (const auto& v : kernel) {
        if (static_cast<int>(factors.size()) >= nfactors) break;
        if (gdeg<BaseField>(v) < 1) continue;  // constant vector splits nothing
        std::vector<std::vector<Fel>> next;
        for (const auto& u : factors) {
            if (gdeg<BaseField>(u) == 1) {
                next.push_back(u);
                continue;
            }
            std::vector<Fel> remp = u;
            std::vector<std::vector<Fel>> parts;
            for (Fel c = 0; c < k->q() && gdeg<BaseField>(remp) > 0; ++c) {
                auto vc = gsub(K, v, VPoly<BaseField>{c});
                auto g = ggcd(K, remp, vc);
                if (gdeg<BaseField>(g) > 0) {
                    parts.push_back(g);
                    remp = gdivmod(K, remp, g).first;
                }
            }
            if (gdeg<BaseField>(remp) > 0) parts.push_back(remp);
            if (parts.empty()) parts.push_back(u);
            for (auto& prt : parts) next.push_back(std::move(prt));
        }
        factors = std::move(next);
    }
    for (auto& u : factors) out.push_back(std::move(u));
}

// Distinct-degree + equal-degree factorization of a monic squarefree input.
void cz_squarefree(const FqPtr& k, std::vector<Fel> f, Rng& rng,
                   std::vector<std::vector<Fel>>& out) {
    BaseField K{*k};
    VPoly<BaseField> y{0, 1};
    auto t = y;
    int d = 1;
    while (gdeg<BaseField>(f) >= 2 * d) {
        t = gpowmod(K, std::move(t), k->q(), f);
        auto g = ggcd(K, f, gsub(K, t, y));
        if (gdeg<BaseField>(g) > 0) {
            std::vector<VPoly<BaseField>> pieces;
            edf_split(K, g, d, rng, pieces);
            for (auto& u : pieces) out.push_back(std::move(u));
            f = gdivmod(K, f, g).first;
            t = gdivmod(K, std::move(t), f).second;
        }
        ++d;
    }
    if (gdeg<BaseField>(f) > 0) out.push_back(std::move(f));
}

// Squarefree decomposition in characteristic p; appends (monic squarefree
// part, multiplicity) pairs.
void squarefree_decompose(const FqPtr& k, std::vector<Fel> f,
                          std::uint64_t mult,
                          std::vector<std::pair<std::vector<Fel>, std::uint64_t>>& out) {
    BaseField K{*k};
    if (gdeg<BaseField>(f) <= 0) return;
    f = gmonic(K, f);

    Poly fp(k, f);
    auto deriv = poly_derivative(fp).coeffs();
    auto g = ggcd(K, f, deriv);  // gcd(f, 0) = monic f when deriv = 0
    auto w = gdivmod(K, f, g).first;

    std::uint64_t i = 1;
    while (gdeg<BaseField>(w) > 0) {
        auto y = ggcd(K, w, g);
        auto z = gdivmod(K, w, y).first;
        if (gdeg<BaseField>(z) > 0) out.emplace_back(z, i * mult);
        w = std::move(y);
        g = gdivmod(K, g, w).first;
        ++i;
    }
    if (gdeg<BaseField>(g) > 0) {
        // g is a p-th power: g = v(x)^p with v coeffs the p-th roots.
        std::uint64_t p = k->p();
        std::vector<Fel> v((g.size() - 1) / p + 1);
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = k->pow(g[j * p], k->q() / p);
        squarefree_decompose(k, std::move(v), mult * p, out);
    }
}

}  // namespace

std::vector<std::pair<Poly, std::uint64_t>> poly_factor(const Poly& f,
                                                        Rng& rng) {
    if (f.is_zero()) throw ZeroPolynomial();
    const FqPtr& k = f.field();
    std::vector<std::pair<std::vector<Fel>, std::uint64_t>> sqf;
    squarefree_decompose(k, f.coeffs(), 1, sqf);

    std::vector<std::pair<Poly, std::uint64_t>> result;
    for (auto& [part, mult] : sqf) {
        std::vector<std::vector<Fel>> irr;
        if (k->q() <= kBerlekampMaxQ)
            berlekamp_squarefree(k, part, rng, irr);
        else
            cz_squarefree(k, std::move(part), rng, irr);
        for (auto& u : irr) result.emplace_back(Poly(k, std::move(u)), mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return a.first.coeffs() < b.first.coeffs();
              });
    // Merge equal factors (possible across multiplicities only by identity).
    std::vector<std::pair<Poly, std::uint64_t>> merged;
    for (auto& fm : result) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

std::optional<Fel> find_root_in_field(const Poly& f, const FqPtr& K,
                                      Rng& rng) {
    if (f.is_zero()) throw ZeroPolynomial();
    const Fq& sub = *f.field();
    std::vector<Fel> lifted;
    if (sub == *K) {
        lifted = f.coeffs();
    } else {
        if (sub.p() != K->p())
            throw IncompatibleFields("different characteristic");
        if (K->e() % sub.e() != 0)
            throw IncompatibleFields("not an extension of the coefficient field");
        if (sub.is_prime_field()) {
            lifted = f.coeffs();  // codes < p are valid constants of K
        } else {
            // Embed via a root of the subfield modulus inside K.
            FqPtr fp = sub.prime_field();
            Poly submod(fp, std::vector<Fel>(sub.modulus().begin(),
                                             sub.modulus().end()));
            auto rho = find_root_in_field(submod, K, rng);
            if (!rho) throw IncompatibleFields("no embedding into K");
            for (Fel c : f.coeffs()) {
                auto d = sub.digits(c);
                Fel image = 0, rpow = 1;
                for (std::size_t i = 0; i < d.size(); ++i) {
                    image = K->add(image, K->mul(d[i], rpow));
                    rpow = K->mul(rpow, *rho);
                }
                lifted.push_back(image);
            }
        }
    }
    BaseField KF{*K};
    return groot(KF, lifted, rng);
}

std::optional<Poly> find_root_mod(const Poly& f, const Poly& h, Rng& rng) {
    check_same(f, h);
    if (f.is_zero()) throw ZeroPolynomial();
    if (!h.is_monic() || h.degree() < 1)
        throw Error("modulus must be monic of positive degree");
    QuotField K{*f.field(), h.coeffs()};
    VPoly<QuotField> lifted;
    for (Fel c : f.coeffs())
        lifted.push_back(c == 0 ? QuotField::Elem{} : QuotField::Elem{c});
    auto root = groot(K, lifted, rng);
    if (!root) return std::nullopt;
    return Poly(f.field(), *root);
}

Poly random_monic_poly(const FqPtr& field, int degree, Rng& rng) {
    std::vector<Fel> c(degree + 1);
    c[degree] = 1;
    for (int i = 0; i < degree; ++i) c[i] = field->random(rng);
    return Poly(field, std::move(c));
}

Poly random_monic_irreducible(const FqPtr& field, int degree, Rng& rng) {
    if (degree < 1) throw BadDimensions("degree must be >= 1");
    for (;;) {
        Poly f = random_monic_poly(field, degree, rng);
        if (poly_is_irreducible(f)) return f;
    }
}

}  // namespace rankeq

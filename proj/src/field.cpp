#include "rankeq/field.hpp"

#include <algorithm>

#include "rankeq/poly.hpp"

namespace rankeq {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (k) {
        if (k & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        k >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FqPtr Fq::prime_field() const {
    if (e_ == 1) {
        // Rebuild a standalone context; contexts compare by parameters.
        return make_field(p_, 1);
    }
    return base_;
}

std::vector<std::uint64_t> Fq::digits(Fel a) const {
    std::vector<std::uint64_t> d(e_);
    for (std::uint64_t i = 0; i < e_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Fel Fq::from_digits(const std::vector<std::uint64_t>& d) const {
    Fel a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

Fel Fq::add(Fel a, Fel b) const {
    if (e_ == 1) {
        Fel s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fel r = 0, pw = 1;
    for (std::uint64_t i = 0; i < e_; ++i) {
        Fel s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * pw;
        pw *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

Fel Fq::neg(Fel a) const {
    if (e_ == 1) return a ? p_ - a : 0;
    Fel r = 0, pw = 1;
    for (std::uint64_t i = 0; i < e_; ++i) {
        Fel d = a % p_;
        r += (d ? p_ - d : 0) * pw;
        pw *= p_;
        a /= p_;
    }
    return r;
}

Fel Fq::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Fq::mul(Fel a, Fel b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    if (e_ == 1) return mulmod_u64(a, b, p_);
    // Schoolbook product of digit polynomials, reduced mod the modulus.
    std::vector<std::uint64_t> da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::uint64_t i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (std::uint64_t j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] +
                           static_cast<unsigned __int128>(da[i]) * db[j]) %
                          p_;
        }
    }
    // mod_ is monic of degree e: x^e = -(mod_0 + ... + mod_{e-1} x^{e-1}).
    for (std::size_t k = prod.size(); k-- > e_;) {
        std::uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (std::uint64_t j = 0; j < e_; ++j) {
            std::uint64_t t = mulmod_u64(c, mod_[j], p_);
            prod[k - e_ + j] = (prod[k - e_ + j] + p_ - t) % p_;
        }
    }
    prod.resize(e_);
    return from_digits(prod);
}

Fel Fq::pow(Fel a, unsigned __int128 k) const {
    Fel r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Fel Fq::inv(Fel a) const {
    if (a == 0) throw Error("division by zero in F_q");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

void Fq::build_tables() {
    if (q_ > 1024) return;
    std::vector<Fel> table(q_ * q_, 0);
    for (Fel a = 0; a < q_; ++a)
        for (Fel b = a; b < q_; ++b) {
            Fel prod = mul(a, b);  // table-free path
            table[a * q_ + b] = prod;
            table[b * q_ + a] = prod;
        }
    mul_table_ = std::move(table);
    inv_table_.assign(q_, 0);
    for (Fel a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
}

FqPtr make_field(std::uint64_t p, std::uint64_t e,
                 const std::optional<std::vector<std::uint64_t>>& modulus,
                 Rng* rng) {
    if (e < 1) throw BadDimensions("extension degree must be >= 1");
    if (!is_prime_u64(p)) throw CompositeP("p is not prime");
    unsigned __int128 q = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        q *= p;
        if (q > Fq::kMaxQ) throw FieldTooLarge("q = p^e exceeds 2^61");
    }

    auto ctx = std::shared_ptr<Fq>(new Fq());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = static_cast<std::uint64_t>(q);

    if (e == 1) {
        if (modulus && modulus->size() > 2)
            throw ReducibleModulus("prime field takes no modulus of degree > 1");
        ctx->build_tables();
        return ctx;
    }

    FqPtr fp = make_field(p, 1);
    ctx->base_ = fp;

    std::vector<std::uint64_t> mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) c %= p;
        if (mod.size() != e + 1 || mod.back() != 1)
            throw ReducibleModulus("modulus must be monic of degree e");
        Poly m(fp, std::vector<Fel>(mod.begin(), mod.end()));
        if (!poly_is_irreducible(m))
            throw ReducibleModulus("modulus is reducible over F_p");
    } else {
        if (!rng) throw Error("rng required to sample a modulus");
        for (;;) {
            mod.assign(e + 1, 0);
            mod[e] = 1;
            for (std::uint64_t i = 0; i < e; ++i) mod[i] = rng->below(p);
            Poly m(fp, std::vector<Fel>(mod.begin(), mod.end()));
            if (poly_is_irreducible(m)) break;
        }
    }
    ctx->mod_ = std::move(mod);
    ctx->build_tables();
    return ctx;
}

}  // namespace rankeq

#ifndef RANKEQ_POLY_HPP
#define RANKEQ_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rankeq/field.hpp"
#include "rankeq/rng.hpp"

namespace rankeq {

// Dense univariate polynomial over a FieldContext. Coefficients are stored
// low degree first with no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(FqPtr field) : field_(std::move(field)) {}
    Poly(FqPtr field, std::vector<Fel> coeffs);

    static Poly x(const FqPtr& field);
    static Poly constant(const FqPtr& field, Fel c);

    const FqPtr& field() const { return field_; }
    const std::vector<Fel>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Fel coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fel lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    FqPtr field_;
    std::vector<Fel> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, Fel c);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_div_exact(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly poly_make_monic(const Poly& a);
Poly poly_derivative(const Poly& a);
Fel poly_eval(const Poly& a, Fel x);
Poly poly_pow_mod(const Poly& base, unsigned __int128 k, const Poly& mod);
std::optional<Poly> poly_inv_mod(const Poly& a, const Poly& mod);

// True iff f is irreducible over its field (x^{q^d} = x criterion).
bool poly_is_irreducible(const Poly& f);

// Multiset of (monic irreducible factor, multiplicity); the product times
// lead(f) reassembles f. Deterministic Berlekamp for q <= 256, Las Vegas
// Cantor-Zassenhaus otherwise. Result sorted by (degree, coefficients).
std::vector<std::pair<Poly, std::uint64_t>> poly_factor(const Poly& f, Rng& rng);

// A root of f inside K, where K extends f's coefficient field; nullopt if
// none. Coefficients are carried into K along the subfield embedding.
std::optional<Fel> find_root_in_field(const Poly& f, const FqPtr& K, Rng& rng);

// A root of f inside F_q[x]/(h), h monic irreducible over the same field as
// f; the root is returned as a residue of degree < deg h.
std::optional<Poly> find_root_mod(const Poly& f, const Poly& h, Rng& rng);

Poly random_monic_poly(const FqPtr& field, int degree, Rng& rng);
Poly random_monic_irreducible(const FqPtr& field, int degree, Rng& rng);

}  // namespace rankeq

#endif

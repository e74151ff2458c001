#ifndef RANKEQ_FIELD_HPP
#define RANKEQ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rankeq/errors.hpp"
#include "rankeq/rng.hpp"

namespace rankeq {

// An element of F_q, stored as its base-p integer code: sum a_i p^i for the
// residue sum a_i alpha^i, alpha the class of X mod the field modulus.
using Fel = std::uint64_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Arithmetic context for F_q, q = p^e. Immutable after construction.
class Fq {
public:
    static constexpr std::uint64_t kMaxQ = 1ULL << 61;

    std::uint64_t p() const { return p_; }
    std::uint64_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    bool is_prime_field() const { return e_ == 1; }

    // Modulus coefficients over F_p, lowest degree first, size e+1, monic.
    // Empty for prime fields.
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    // Prime subfield context (this context itself when e = 1).
    FqPtr prime_field() const;

    Fel zero() const { return 0; }
    Fel one() const { return 1; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;  // a != 0
    Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
    Fel pow(Fel a, unsigned __int128 k) const;
    Fel frobenius(Fel a) const { return pow(a, p_); }

    Fel random(Rng& rng) const { return rng.below(q_); }
    Fel random_nonzero(Rng& rng) const { return 1 + rng.below(q_ - 1); }

    // Base-p digit expansion of the code, length e.
    std::vector<std::uint64_t> digits(Fel a) const;
    Fel from_digits(const std::vector<std::uint64_t>& d) const;

    friend bool operator==(const Fq& a, const Fq& b) {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

private:
    friend FqPtr make_field(std::uint64_t, std::uint64_t,
                            const std::optional<std::vector<std::uint64_t>>&,
                            Rng*);
    Fq() = default;

    void build_tables();

    std::uint64_t p_ = 2, e_ = 1, q_ = 2;
    std::vector<std::uint64_t> mod_;
    FqPtr base_;  // prime subfield, null when e = 1

    // Dense lookup tables for small q.
    std::vector<Fel> mul_table_;
    std::vector<Fel> inv_table_;
};

// Constructs F_{p^e}. When e > 1 and no modulus is given, a monic irreducible
// of degree e over F_p is found by random sampling (rng required then).
// Throws CompositeP, ReducibleModulus, FieldTooLarge.
FqPtr make_field(std::uint64_t p, std::uint64_t e,
                 const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt,
                 Rng* rng = nullptr);

bool is_prime_u64(std::uint64_t n);

inline bool same_field(const Fq& a, const Fq& b) { return a == b; }

}  // namespace rankeq

#endif

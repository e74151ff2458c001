#ifndef RANKEQ_ALGEBRA_HPP
#define RANKEQ_ALGEBRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rankeq/matrix.hpp"

namespace rankeq {

// Canonical basis (rref of flattened generators) of a span of matrices.
std::vector<MatFq> span_basis(const FqPtr& field, int rows, int cols,
                              const std::vector<MatFq>& gens);
bool span_contains(const std::vector<MatFq>& basis, const MatFq& m);
// Coordinates of m in the given independent basis, if m lies in the span.
std::optional<std::vector<Fel>> coords_in_span(const std::vector<MatFq>& basis,
                                               const MatFq& m);

// Subalgebra of M_n(F_q), stored as a canonical basis. Closure under
// multiplication is verified at construction.
class MatAlgebra {
public:
    MatAlgebra(FqPtr field, int n, const std::vector<MatFq>& gens,
               bool check_closure = true);

    const FqPtr& field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MatFq>& basis() const { return basis_; }
    bool contains_identity() const { return contains_identity_; }
    bool contains(const MatFq& m) const { return span_contains(basis_, m); }

private:
    FqPtr field_;
    int n_ = 0;
    std::vector<MatFq> basis_;
    bool contains_identity_ = false;
};

// Smallest subspace containing the generators (and I_n when unital) that is
// closed under products.
MatAlgebra algebra_closure(const FqPtr& field, int n,
                           const std::vector<MatFq>& generators, bool unital);

// Jacobson radical (Friedl-Ronyai characteristic-p chain; trace-form kernel
// shortcut when p > dim A). A must be unital.
MatAlgebra radical(const MatAlgebra& a);

MatAlgebra center(const MatAlgebra& a);

// Minimal polynomial of a relative to the algebra unit (a^0 := unit).
Poly algebra_min_poly(const MatFq& a, const MatFq& unit);
// Sum c_j a^j with a^0 := unit.
MatFq algebra_poly_eval(const Poly& p, const MatFq& a, const MatFq& unit);

// The two-sided unit of the span, when one exists.
std::optional<MatFq> algebra_unit(const std::vector<MatFq>& basis);

struct SimpleComponent {
    std::vector<MatFq> basis;  // basis of the component S_i = S e_i
    MatFq idem;                // central idempotent e_i (unit of S_i)
};

// Wedderburn decomposition of a semisimple algebra into simple two-sided
// ideals with their central idempotents.
std::vector<SimpleComponent> split_semisimple(const MatAlgebra& s, Rng& rng);

struct SimpleIso {
    int u = 0, v = 0;               // S = M_u(F_{q^v}), dim = u^2 v
    MatFq unit;                     // unit of S
    MatFq min_idem;                 // one minimal idempotent e
    std::vector<MatFq> module_basis;  // basis of S e over the field e S e
    std::vector<MatFq> min_idems;   // u orthogonal minimal idempotents, sum = unit
};

// Explicit structure of a simple algebra given by a basis (its unit need not
// be the ambient identity).
SimpleIso explicit_simple_iso(const FqPtr& field, int n,
                              const std::vector<MatFq>& basis, Rng& rng);

struct IdemDecomposition {
    std::vector<MatFq> idempotents;            // E_i, minimal, orthogonal, sum I
    std::vector<std::pair<MatFq, MatFq>> factors;  // (A_i, B_i): E_i = A_i B_i^T
    std::vector<int> ranks;                    // r_i = rank E_i
};

// Decomposition of the ambient identity into minimal orthogonal idempotents
// of the unital algebra A (radical quotient + Wedderburn-Malcev lift).
IdemDecomposition decompose_identity(const MatAlgebra& a, Rng& rng);

// Wedderburn component shapes (u_i, v_i) of A / rad(A).
std::vector<std::pair<int, int>> component_profile(const MatAlgebra& a,
                                                   Rng& rng);

// E = A B^T with B^T A = I_r for a projector E of rank r.
std::pair<MatFq, MatFq> factor_projector(const MatFq& e);

// A generator of S with irreducible minimal polynomial of degree d = dim S,
// when S is a field representation; nullopt otherwise.
std::optional<MatFq> find_field_generator(const MatAlgebra& s, int d, Rng& rng);

// P with S1 = P^-1 S2 P for two conjugate field representations of the same
// degree inside M_m(F_q); nullopt when the degrees differ.
std::optional<MatFq> conjugate_field_reps(const MatAlgebra& s1,
                                          const MatAlgebra& s2, Rng& rng);

// Invertible Theta with Theta A = A^q Theta, for A with irreducible
// characteristic polynomial.
MatFq frobenius_matrix(const MatFq& a);

}  // namespace rankeq

#endif

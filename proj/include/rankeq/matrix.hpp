#ifndef RANKEQ_MATRIX_HPP
#define RANKEQ_MATRIX_HPP

#include <optional>
#include <vector>

#include "rankeq/field.hpp"
#include "rankeq/poly.hpp"

namespace rankeq {

// Dense matrix over F_q, row-major.
class MatFq {
public:
    MatFq() = default;
    MatFq(FqPtr field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, 0) {}
    MatFq(FqPtr field, int rows, int cols, std::vector<Fel> entries);

    static MatFq identity(const FqPtr& field, int n);

    const FqPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Fel at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Fel& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Fel>& entries() const { return a_; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const MatFq& a, const MatFq& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatFq& a, const MatFq& b) { return !(a == b); }

private:
    FqPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Fel> a_;
};

MatFq mat_add(const MatFq& a, const MatFq& b);
MatFq mat_sub(const MatFq& a, const MatFq& b);
MatFq mat_neg(const MatFq& a);
MatFq mat_scale(const MatFq& a, Fel c);
MatFq mat_mul(const MatFq& a, const MatFq& b);
MatFq mat_pow(const MatFq& a, std::uint64_t k);
MatFq transpose(const MatFq& a);
Fel trace(const MatFq& a);

std::vector<Fel> mat_vec(const MatFq& a, const std::vector<Fel>& v);

struct RrefResult {
    MatFq R;
    int rank = 0;
    std::vector<int> pivots;
};

// Reduced row-echelon form; deterministic.
RrefResult rref(const MatFq& m);

int mat_rank(const MatFq& m);

// Canonical basis of {v : M v = 0}, read off the rref; size cols - rank.
std::vector<std::vector<Fel>> right_kernel(const MatFq& m);
std::vector<std::vector<Fel>> left_kernel(const MatFq& m);

// One solution of A x = b, or none.
std::optional<std::vector<Fel>> solve(const MatFq& a, const std::vector<Fel>& b);

std::optional<MatFq> mat_inverse(const MatFq& m);  // NotSquare if not square
bool is_invertible(const MatFq& m);

// Characteristic polynomial via Hessenberg reduction; minimal polynomial as
// the lcm of cyclic-vector annihilators. Both monic. NotSquare otherwise.
Poly char_poly(const MatFq& m);
Poly min_poly(const MatFq& m);

// Evaluate p at the square matrix m.
MatFq poly_eval_mat(const Poly& p, const MatFq& m);

MatFq companion_matrix(const Poly& f);  // f monic, degree >= 1

// Nonsingular P with P^-1 A P = B when A and B share an irreducible minimal
// polynomial; nullopt when their minimal polynomials differ.
// UnsupportedShape when the minimal polynomial of A is reducible.
std::optional<MatFq> similarity_transform(const MatFq& a, const MatFq& b);

MatFq random_matrix(const FqPtr& field, int rows, int cols, Rng& rng);
MatFq random_invertible(const FqPtr& field, int n, Rng& rng);

}  // namespace rankeq

#endif

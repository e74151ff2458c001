#ifndef RANKEQ_CODES_HPP
#define RANKEQ_CODES_HPP

#include <vector>

#include "rankeq/matrix.hpp"

namespace rankeq {

std::vector<Fel> flatten(const MatFq& m);
MatFq unflatten(const FqPtr& field, int rows, int cols,
                const std::vector<Fel>& v);

// An F_q-subspace of M_{m x n}(F_q). The stored basis is canonical (rref of
// the flattened generators, reshaped), so equal codes compare equal.
class MatrixCode {
public:
    MatrixCode(FqPtr field, int m, int n, const std::vector<MatFq>& generators);

    const FqPtr& field() const { return field_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MatFq>& basis() const { return basis_; }

    friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const MatrixCode& a, const MatrixCode& b) {
        return !(a == b);
    }

private:
    FqPtr field_;
    int m_ = 0, n_ = 0;
    std::vector<MatFq> basis_;
};

// F_{p^m}-linear code given by a k x n generator matrix over F_{p^m}
// (p prime). Rank k is enforced.
class VectorCode {
public:
    VectorCode(FqPtr ext_field, MatFq generator);

    const FqPtr& ext_field() const { return ext_; }
    int k() const { return gen_.rows(); }
    int n() const { return gen_.cols(); }
    int m() const { return static_cast<int>(ext_->e()); }
    const MatFq& generator() const { return gen_; }

private:
    FqPtr ext_;  // F_{p^m}
    MatFq gen_;  // over ext_
};

// m x n expansion of a row vector over F_{p^m}: column j holds the
// coordinates of v_j in the basis B. DependentBasis if B is not a basis.
MatFq expansion_matrix(const FqPtr& ext, const std::vector<Fel>& v,
                       const std::vector<Fel>& B);

// F_p-span of the expansions of all F_{p^m}-multiples of the generators;
// dimension k*m.
MatrixCode expand_code(const VectorCode& V, const std::vector<Fel>& B);

// dim over F_p of the span of the entries of v.
int rank_weight(const FqPtr& ext, const std::vector<Fel>& v);

// Orthogonal code under <M, N> = Tr(M N^T); an involution.
MatrixCode trace_dual(const MatrixCode& c);

MatrixCode mul_right(const MatrixCode& c, const MatFq& a);  // span{B_i A}
MatrixCode mul_left(const MatFq& p, const MatrixCode& c);   // span{P B_i}

bool code_equal(const MatrixCode& c, const MatrixCode& d);
bool code_contains_code(const MatrixCode& c, const MatrixCode& d);  // d <= c
bool code_contains(const MatrixCode& c, const MatFq& m);

MatrixCode code_sum(const MatrixCode& c, const MatrixCode& d);

MatrixCode gen_random_code(const FqPtr& field, int m, int n, int K, Rng& rng);

struct FqmInstance {
    VectorCode vec;
    std::vector<Fel> basis;  // the hidden basis B of F_{p^m} over F_p
    MatrixCode expanded;     // M_B(vec)
    MatFq P, Q;              // scramble, over F_p
    MatrixCode scrambled;    // P * expanded * Q
};

FqmInstance gen_fqm_instance(int k, int n, int m, std::uint64_t p, Rng& rng);

}  // namespace rankeq

#endif

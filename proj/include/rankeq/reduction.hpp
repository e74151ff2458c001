#ifndef RANKEQ_REDUCTION_HPP
#define RANKEQ_REDUCTION_HPP

#include <utility>
#include <vector>

#include "rankeq/codes.hpp"

namespace rankeq {

// Instance of the monomial-equivalence to matrix-code-equivalence reduction.
// Columns equal up to scalar are removed first; cols_a/cols_b record the
// retained original column indices.
struct ReductionInstance {
    MatFq a, b;  // deduplicated k x n generators
    std::vector<int> cols_a, cols_b;
    MatrixCode c, d;  // codes in M_{(k+n) x k}

    ReductionInstance(MatFq a_, MatFq b_, std::vector<int> ca,
                      std::vector<int> cb, MatrixCode c_, MatrixCode d_)
        : a(std::move(a_)), b(std::move(b_)), cols_a(std::move(ca)),
          cols_b(std::move(cb)), c(std::move(c_)), d(std::move(d_)) {}
};

// Builds the codes spanned by stack(a_i^T a_i / Row_i(a_i)) over the columns
// a_i. RankDeficientGenerator when a generator is not full rank;
// DimensionMismatch when the deduplicated column counts differ.
ReductionInstance reduce_me_to_mce(const MatFq& a, const MatFq& b);

// The generators of the i-th reduction code, exposed for witness extraction.
std::vector<MatFq> reduction_generators(const MatFq& g);

// (U, V) with C = U D V, from a monomial relation a = s b dg p.
// WitnessDoesNotApply when the relation does not hold.
std::pair<MatFq, MatFq> forward_witness(const MatFq& s, const MatFq& dg,
                                        const MatFq& p,
                                        const ReductionInstance& inst);

struct MonomialWitness {
    std::vector<int> perm;     // sigma: a_i collinear with b_{sigma(i)} V
    std::vector<Fel> scalars;  // the collinearity factors
};

// Recovers a monomial equivalence from an MCE witness for the reduced codes.
// NotAWitness when C = U D V fails structurally.
MonomialWitness extract_monomial(const MatFq& u, const MatFq& v,
                                 const ReductionInstance& inst);

// The code spanned by diag(g_j) over the rows g_j; rank of the embedding of a
// vector equals its Hamming weight.
MatrixCode diagonal_embed(const MatFq& g);

}  // namespace rankeq

#endif

#ifndef RANKEQ_ORACLE_HPP
#define RANKEQ_ORACLE_HPP

#include <optional>
#include <vector>

#include "rankeq/algebra.hpp"
#include "rankeq/codes.hpp"

namespace rankeq {

// Enumeration budgets; BudgetExceeded when an instance would overrun them.
struct OracleCaps {
    std::uint64_t mcre = 10'000'000;       // |GL_n|
    std::uint64_t mce = 100'000'000;       // |GL_m| * |GL_n|
    std::uint64_t monomial = 10'000'000;   // n! * (q-1)^n
    std::uint64_t radical = 1ULL << 16;    // q^dim
};

// First Q in GL_n (lexicographic on flattened entries) with C Q = D.
std::optional<MatFq> brute_mcre(const MatrixCode& c, const MatrixCode& d,
                                const OracleCaps& caps = {});

// First (P, Q), P outer loop, with P C Q = D.
std::optional<std::pair<MatFq, MatFq>> brute_mce(const MatrixCode& c,
                                                 const MatrixCode& d,
                                                 const OracleCaps& caps = {});

struct BruteMonomial {
    MatFq s, dg, p;  // a = s * b * dg * p
};

// Exhaustive monomial search: a and b are k x n generators of the codes.
std::optional<BruteMonomial> brute_monomial(const MatFq& a, const MatFq& b,
                                            const OracleCaps& caps = {});

// Largest subspace of the algebra that is a two-sided ideal consisting of
// nilpotent elements, by decreasing-dimension subspace enumeration.
std::vector<MatFq> brute_radical(const MatAlgebra& alg,
                                 const OracleCaps& caps = {});

}  // namespace rankeq

#endif

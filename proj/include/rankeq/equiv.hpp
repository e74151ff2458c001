#ifndef RANKEQ_EQUIV_HPP
#define RANKEQ_EQUIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "rankeq/algebra.hpp"
#include "rankeq/codes.hpp"

namespace rankeq {

// Asserts (P if present else I) * C * (Q if present else I) = D.
struct Witness {
    std::optional<MatFq> left;   // P in GL_m
    std::optional<MatFq> right;  // Q in GL_n
};

enum class Verdict { Equivalent, NotEquivalent, InvalidPromise };

struct SolveOutcome {
    Verdict verdict = Verdict::NotEquivalent;
    std::optional<Witness> witness;  // present iff Equivalent
    std::string reason;              // diagnostic, set for InvalidPromise
};

// Basis of {M in M_n : C M <= D}. DimensionMismatch when dim C != dim D or
// the ambient spaces differ.
std::vector<MatFq> conductor(const MatrixCode& c, const MatrixCode& d);

MatAlgebra right_stabilizer(const MatrixCode& c);  // {M : C M <= C}
MatAlgebra left_stabilizer(const MatrixCode& c);   // {M : M C <= C}

// Right equivalence solver; Equivalent outcomes carry a right witness Q with
// C Q = D.
SolveOutcome solve_mcre(const MatrixCode& c, const MatrixCode& d, Rng& rng);

// Right equivalence when the right stabilizer of c is local: any conductor
// element outside radical * conductor decides.
std::optional<MatFq> solve_mcre_local(const MatrixCode& c,
                                      const MatrixCode& d);

// Equivalence of expansions of F_{q^m}-linear codes in hidden bases.
SolveOutcome solve_hvmce(const MatrixCode& c, const MatrixCode& d, Rng& rng);

bool verify_witness(const MatrixCode& c, const MatrixCode& d,
                    const Witness& w);

}  // namespace rankeq

#endif

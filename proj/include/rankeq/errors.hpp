#ifndef RANKEQ_ERRORS_HPP
#define RANKEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankeq {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RANKEQ_ERROR(Name)                                              \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

RANKEQ_ERROR(CompositeP);
RANKEQ_ERROR(ReducibleModulus);
RANKEQ_ERROR(FieldTooLarge);
RANKEQ_ERROR(ZeroPolynomial);
RANKEQ_ERROR(IncompatibleFields);
RANKEQ_ERROR(NotSquare);
RANKEQ_ERROR(UnsupportedShape);
RANKEQ_ERROR(ShapeMismatch);
RANKEQ_ERROR(DependentBasis);
RANKEQ_ERROR(BadDimensions);
RANKEQ_ERROR(DimensionMismatch);
RANKEQ_ERROR(NotSemisimple);
RANKEQ_ERROR(NotSimple);
RANKEQ_ERROR(NotProjector);
RANKEQ_ERROR(NotFieldRep);
RANKEQ_ERROR(NotIrreducible);
RANKEQ_ERROR(NoInvertibleSolution);
RANKEQ_ERROR(RankDeficientGenerator);
RANKEQ_ERROR(WitnessDoesNotApply);
RANKEQ_ERROR(NotAWitness);
RANKEQ_ERROR(BudgetExceeded);
RANKEQ_ERROR(ParseError);

#undef RANKEQ_ERROR

}  // namespace rankeq

#endif

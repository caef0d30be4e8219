#ifndef STOKESCLUSTER_ERROR_HPP
#define STOKESCLUSTER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sc {

// Base of all library errors; what() carries the offending context.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define STOKESCLUSTER_DEFINE_ERROR(NAME)                                  \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

STOKESCLUSTER_DEFINE_ERROR(DivisionByZero);
STOKESCLUSTER_DEFINE_ERROR(SingularMatrix);
STOKESCLUSTER_DEFINE_ERROR(ShapeMismatch);
STOKESCLUSTER_DEFINE_ERROR(NotLogCanonical);
STOKESCLUSTER_DEFINE_ERROR(VertexRelationViolated);
STOKESCLUSTER_DEFINE_ERROR(TriangularityViolated);
STOKESCLUSTER_DEFINE_ERROR(UnknownVariable);
STOKESCLUSTER_DEFINE_ERROR(PoleAtPoint);
STOKESCLUSTER_DEFINE_ERROR(SubstitutionSingular);
STOKESCLUSTER_DEFINE_ERROR(DegenerateForm);
STOKESCLUSTER_DEFINE_ERROR(BadVertex);
STOKESCLUSTER_DEFINE_ERROR(NotADiagonal);
STOKESCLUSTER_DEFINE_ERROR(OrientationInvalid);
STOKESCLUSTER_DEFINE_ERROR(ResonantEigenvalues);
STOKESCLUSTER_DEFINE_ERROR(UsageError);

#undef STOKESCLUSTER_DEFINE_ERROR

} // namespace sc

#endif

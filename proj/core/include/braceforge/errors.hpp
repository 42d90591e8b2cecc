#pragma once

#include <stdexcept>
#include <string>

namespace braceforge {

// Base class for all library errors.  Subclasses carry no extra state; the
// type itself is the error code and the message holds the specifics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BRACEFORGE_DEFINE_ERROR(NAME) \
  class NAME final : public Error {   \
   public:                            \
    using Error::Error;               \
  }

BRACEFORGE_DEFINE_ERROR(ZeroInverse);          // inverse of 0 in F_p
BRACEFORGE_DEFINE_ERROR(DimensionMismatch);    // incompatible shapes or moduli
BRACEFORGE_DEFINE_ERROR(Singular);             // non-invertible matrix
BRACEFORGE_DEFINE_ERROR(IndexOutOfRange);      // element index >= p^n
BRACEFORGE_DEFINE_ERROR(TooLarge);             // computation over the size guard
BRACEFORGE_DEFINE_ERROR(InvalidParams);        // bad prime / y = 0 / non-prime p
BRACEFORGE_DEFINE_ERROR(RelationFailure);      // group enumeration inconsistency
BRACEFORGE_DEFINE_ERROR(WrongCardinality);     // |A| != p^4 where required
BRACEFORGE_DEFINE_ERROR(NotASubgroup);         // holomorph subset fails closure
BRACEFORGE_DEFINE_ERROR(ClosureFailure);       // embed image not closed
BRACEFORGE_DEFINE_ERROR(PreconditionViolated); // e.g. quartic inverse without A^5=0
BRACEFORGE_DEFINE_ERROR(ParseError);           // malformed input file

#undef BRACEFORGE_DEFINE_ERROR

}  // namespace braceforge

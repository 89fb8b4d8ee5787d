// Exception hierarchy for classprod. Every error thrown by the library
// derives from classprod::Error so callers (the CLI in particular) can map
// failures to exit codes without catching std::exception wholesale.

#ifndef CLASSPROD_ERRORS_HPP_
#define CLASSPROD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace classprod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CLASSPROD_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// group_core
CLASSPROD_DEFINE_ERROR(OrderExceeded);
CLASSPROD_DEFINE_ERROR(InvalidPermutation);
CLASSPROD_DEFINE_ERROR(NotAssociative);
CLASSPROD_DEFINE_ERROR(NoIdentity);
CLASSPROD_DEFINE_ERROR(NoInverse);
CLASSPROD_DEFINE_ERROR(GroupMismatch);
CLASSPROD_DEFINE_ERROR(ParseError);
CLASSPROD_DEFINE_ERROR(IoError);

// class_algebra
CLASSPROD_DEFINE_ERROR(NotInvariant);
CLASSPROD_DEFINE_ERROR(NotNormal);
CLASSPROD_DEFINE_ERROR(TrivialGroup);

// constructions
CLASSPROD_DEFINE_ERROR(NotOddPrime);
CLASSPROD_DEFINE_ERROR(EvenN);
CLASSPROD_DEFINE_ERROR(BadSpec);

// theorem_suite / search_harness
CLASSPROD_DEFINE_ERROR(HypothesisViolated);
CLASSPROD_DEFINE_ERROR(InternalContradiction);

#undef CLASSPROD_DEFINE_ERROR

}  // namespace classprod

#endif  // CLASSPROD_ERRORS_HPP_

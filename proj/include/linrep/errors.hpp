// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Exception types thrown by the core library. The C API in linrep.h maps each
// of them onto an lr_status code.

#ifndef LINREP_ERRORS_HPP_
#define LINREP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace linrep {

  //! Malformed or out-of-range input (rank mismatch, bad degree, n < 2, ...).
  class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Text that does not follow one of the accepted grammars or schemas.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A post-construction identity did not hold. Signals an inconsistent
  //! construction or oracle rather than a caller mistake.
  class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace linrep

#endif  // LINREP_ERRORS_HPP_

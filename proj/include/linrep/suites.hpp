// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Verification suites over the Artin constructions, shared by the C API and
// the acceptance gate. Each suite returns a list of named checks and renders
// as text or JSON.

#ifndef LINREP_SUITES_HPP_
#define LINREP_SUITES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "linrep/serialize.hpp"

namespace linrep {

  struct SuiteParams {
    long          m        = 4;
    bool          symbolic = true;  // over Z[lambda, mu, s^+-1]
    long          lambda   = 2;
    long          mu       = 2;
    unsigned long s        = 5;      // the prime for qp, the shear for integer
    bool          integer  = false;  // the SL representation over Z
    std::size_t   max_len  = 4;
    unsigned      workers  = 0;
  };

  struct SuiteCheck {
    std::string label;
    bool        passed = false;
    std::string detail;
  };

  struct SuiteReport {
    std::string             suite;
    std::string             group;
    std::string             ring;
    std::vector<SuiteCheck> checks;
    Json                    extra = Json::object();

    bool        passed() const;
    std::string text() const;
    Json        to_json() const;
  };

  //! suite is one of relations, golden, center, faithfulness. Throws
  //! InvalidArgument on an unknown suite or bad parameters, and
  //! VerificationFailure when a construction fails its own checks.
  SuiteReport run_suite(std::string_view suite, SuiteParams const& params);

  //! The canonical central word of A(m) over x, y: (x y)^{m/2} for even m,
  //! ((x y)^{(m-1)/2} x)^2 for odd m.
  std::string canonical_center_word(long m);

}  // namespace linrep

#endif  // LINREP_SUITES_HPP_

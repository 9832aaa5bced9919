// Exception types shared by the nlie headers.

#ifndef NLIE_ERROR_HPP_
#define NLIE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nlie {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct CaseNotRealizable : Error { using Error::Error; };

// Raised by classify() when the input table violates the Jacobi identity.
struct NotNLie : Error { using Error::Error; };

} // namespace nlie

#endif

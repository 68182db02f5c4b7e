#pragma once

#include <stdexcept>
#include <string>

namespace ncgrass {

/** Base class for all errors raised by this library. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero") {}
};

/** Inverting a Laurent polynomial that is not a single monomial. */
struct NonUnit : Error {
  explicit NonUnit(const std::string& what) : Error("non-unit: " + what) {}
};

struct ZeroSubstitution : Error {
  ZeroSubstitution() : Error("substituting q = 0 is not allowed") {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& what) : Error("singular matrix: " + what) {}
};

struct NotASubset : Error {
  explicit NotASubset(const std::string& what) : Error("not a subset: " + what) {}
};

struct BadSize : Error {
  explicit BadSize(const std::string& what) : Error("bad size: " + what) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& what) : Error("algebra context mismatch: " + what) {}
};

/** No exponent b with [J][I] = q^b [I][J] was found inside the search window. */
struct NoCommutationCertificate : Error {
  explicit NoCommutationCertificate(const std::string& what)
      : Error("no commutation certificate: " + what) {}
};

struct SingularMinor : Error {
  explicit SingularMinor(const std::string& what) : Error("singular minor: " + what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace ncgrass

#ifndef PADLIFT_ERROR_HPP_
#define PADLIFT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace padlift {

enum class Errc {
  NotPrime,
  NotIrreducibleModP,
  NotEisenstein,
  FieldMismatch,
  NotAUnit,
  NotInvertible,
  ConstantTermNotSmall,
  ShiftNotSmall,
  PrecisionAmbiguous,
  PrecisionExhausted,
  NoSmallFixedPoint,
  NotDivisible,
  NotDistinguished,
  NotAUnitTail,
  LinearCoefficientZero,
  MalformedGroupData,
  DNotPrime,
  BadInput,
  SchemaViolation,
};

const char* errc_name(Errc c);

/// All library failures are reported through this exception. `where()` is a
/// JSON-pointer-style path for schema violations and empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::string path = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        path_(std::move(path)) {}

  Errc code() const { return code_; }
  const std::string& where() const { return path_; }

 private:
  Errc code_;
  std::string path_;
};

}  // namespace padlift

#endif  // PADLIFT_ERROR_HPP_

#pragma once

#include <stdexcept>
#include <string>

namespace amdkit {

// Failure categories. The CLI maps SizeCapExceeded to its own exit status;
// everything else is a validation failure.
enum class Errc {
  NonPrime,
  Reducible,
  SizeCapExceeded,
  DivisionByZero,
  FieldMismatch,
  NotABasis,
  NotCoprime,
  BadFactorization,
  NotBalanced,
  DegenerateField,
  ZeroMap,
  NotAdditive,
  CharacteristicDividesDegree,
  BadTableLength,
  IndexOutOfRange,
  BadSource,
  ZeroOffset,
  BadModel,
  DegenerateParameters,
  ProfileIncomplete,
  NotSystematic,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace amdkit

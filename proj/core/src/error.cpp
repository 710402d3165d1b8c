#include "amdkit/error.hpp"

namespace amdkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::Reducible: return "Reducible";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BadFactorization: return "BadFactorization";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::DegenerateField: return "DegenerateField";
    case Errc::ZeroMap: return "ZeroMap";
    case Errc::NotAdditive: return "NotAdditive";
    case Errc::CharacteristicDividesDegree: return "CharacteristicDividesDegree";
    case Errc::BadTableLength: return "BadTableLength";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadSource: return "BadSource";
    case Errc::ZeroOffset: return "ZeroOffset";
    case Errc::BadModel: return "BadModel";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::ProfileIncomplete: return "ProfileIncomplete";
    case Errc::NotSystematic: return "NotSystematic";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace amdkit

#include "orealg/error.hpp"

namespace orealg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConstantAlpha: return "NonConstantAlpha";
    case ErrorKind::ConstantFieldTooLarge: return "ConstantFieldTooLarge";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::InfiniteDimension: return "InfiniteDimension";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroModulus: return "ZeroModulus";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::AnsatzRequired: return "AnsatzRequired";
    case ErrorKind::InconsistentAnsatz: return "InconsistentAnsatz";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonConstantD0: return "NonConstantD0";
    case ErrorKind::UnsatisfiedHypothesis: return "UnsatisfiedHypothesis";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NoCyclicVectorFound: return "NoCyclicVectorFound";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace orealg

#include "mltt/error.hpp"

namespace mltt {

std::string_view error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::ParseError: return "ParseError";
    case ErrorClass::UnboundName: return "UnboundName";
    case ErrorClass::LevelArityMismatch: return "LevelArityMismatch";
    case ErrorClass::TypeMismatch: return "TypeMismatch";
    case ErrorClass::NotAFunction: return "NotAFunction";
    case ErrorClass::NotAPair: return "NotAPair";
    case ErrorClass::NotAUniverse: return "NotAUniverse";
    case ErrorClass::CheckOnlyTermInInferPosition: return "CheckOnlyTermInInferPosition";
    case ErrorClass::UnsafeAssume: return "UnsafeAssume";
    case ErrorClass::DepthExceeded: return "DepthExceeded";
    case ErrorClass::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace mltt

#include "qgk/error.hpp"

namespace qgk {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotIntegralRoot: return "NotIntegralRoot";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::NonConfluent: return "NonConfluent";
    case ErrorKind::HeightTooLarge: return "HeightTooLarge";
    case ErrorKind::InadmissibleOrder: return "InadmissibleOrder";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Domain: return "Domain";
  }
  return "Error";
}

}  // namespace qgk

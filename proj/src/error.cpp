#include "lrc/error.hpp"

namespace lrc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongField: return "WrongField";
    case ErrorKind::GeometryMismatch: return "GeometryMismatch";
    case ErrorKind::EmptyMultiset: return "EmptyMultiset";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::BadSymbol: return "BadSymbol";
    case ErrorKind::DegenerateCode: return "DegenerateCode";
    case ErrorKind::DimensionCollapse: return "DimensionCollapse";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::EvenDistance: return "EvenDistance";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::NoPlacement: return "NoPlacement";
    case ErrorKind::InfeasibleType: return "InfeasibleType";
    case ErrorKind::SmallK: return "SmallK";
    case ErrorKind::BadR: return "BadR";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnknownConstruction: return "UnknownConstruction";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DataCorrupt: return "DataCorrupt";
    case ErrorKind::Timeout: return "Timeout";
  }
  return "Unknown";
}

}  // namespace lrc

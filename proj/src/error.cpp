#include "frobsem/error.hpp"

namespace frobsem {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::NoUsableRows: return "NoUsableRows";
    case ErrorCode::MixedPreposition: return "MixedPreposition";
    case ErrorCode::MixedRoles: return "MixedRoles";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::MissingInventory: return "MissingInventory";
    case ErrorCode::MissingSenseTensor: return "MissingSenseTensor";
    case ErrorCode::UncoveredContext: return "UncoveredContext";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::BadEnsemble: return "BadEnsemble";
    case ErrorCode::ZeroTrace: return "ZeroTrace";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateRanks: return "DegenerateRanks";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorCode::MissingWord: return "MissingWord";
  }
  return "Unknown";
}

}  // namespace frobsem

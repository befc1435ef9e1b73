#include "tourney/error.hpp"

namespace tourney {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::MissingPair: return "MissingPair";
    case Errc::ConflictingArcs: return "ConflictingArcs";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SelfArc: return "SelfArc";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::ZeroVertices: return "ZeroVertices";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::InvalidScore: return "InvalidScore";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::DuplicateIndex: return "DuplicateIndex";
    case Errc::HasEmperor: return "HasEmperor";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace tourney

#pragma once

#include <stdexcept>
#include <string>

namespace tourney {

enum class Errc {
  MissingPair,
  ConflictingArcs,
  IndexOutOfRange,
  SelfArc,
  SizeMismatch,
  TooFewVertices,
  ZeroVertices,
  TooLarge,
  NotRealizable,
  InvalidScore,
  EmptySubset,
  DuplicateIndex,
  HasEmperor,
  HypothesisViolated,
  WrongOrder,
  BadParameters,
  ParseError,
};

const char* errc_name(Errc c) noexcept;

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tourney

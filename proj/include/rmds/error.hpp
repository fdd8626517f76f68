#pragma once

#include <stdexcept>
#include <string>

namespace rmds {

enum class Errc {
  DivisionByZero,
  SpecMismatch,
  InvalidField,
  IndexOutOfBounds,
  NonSquare,
  TooManyBlocks,
  GridTooLarge,
  PreconditionViolated,
  DuplicatePoints,
  DependentFunctions,
  ParameterOutOfRange,
  PoolTooSmall,
  RankDeficient,
  DimensionMismatch,
  EnumerationTooLarge,
  NoMinorFound,
  NoFaultyIndex,
  MalformedInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace rmds

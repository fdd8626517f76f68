#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmds/family.hpp"

namespace rmds {

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

// Evidence that a property fails; exactly one of the payloads is set.
struct Witness {
  std::string kind;  // "family", "pattern", "columns", "codewords", "disagreement"
  std::optional<SetFamily> family;
  std::optional<ErasurePattern> pattern;
  std::vector<std::uint64_t> indices;              // columns, or message indices of codewords
  std::vector<std::vector<std::uint64_t>> words;   // codeword symbols (field element indices)
  std::string note;
};

struct VerificationReport {
  std::string property;
  std::map<std::string, long long> params;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness;
  std::uint64_t checked = 0;  // families, patterns or tuples examined
  double wall_ms = 0;
  std::uint64_t seed = 0;
  double log2_error = -INFINITY;  // one-sided error bound of randomized steps
  std::map<std::string, std::string> notes;

  bool holds() const { return verdict == Verdict::Holds; }
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace rmds

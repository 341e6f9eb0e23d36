#pragma once

#include <string>

namespace dualart {

enum class Verdict { Proven, Refuted, Inconclusive, NoViolationWithinBound };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NoViolationWithinBound: return "NoViolationWithinBound";
  }
  return "?";
}

/// 0 Proven, 1 Refuted, 2 otherwise.
inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Proven: return 0;
    case Verdict::Refuted: return 1;
    default: return 2;
  }
}

}  // namespace dualart

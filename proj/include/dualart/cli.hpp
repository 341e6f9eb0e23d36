#pragma once

#include <ostream>

namespace dualart::cli {

/// Exit codes: 0 success or Proven, 1 Refuted, 2 Inconclusive or bounded,
/// 3 usage and input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualart::cli

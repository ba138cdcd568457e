#pragma once

#include <string>
#include <vector>

namespace spinecheck {

struct SelfCheck {
  std::string name;
  /// "published" (literature value), "derived" (computed identity) or "trivial".
  std::string source;
  bool passed = false;
  std::string detail;
};

/// Built-in acceptance checks, in a fixed order.
std::vector<SelfCheck> run_selftest();

}  // namespace spinecheck

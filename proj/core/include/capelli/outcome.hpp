#pragma once

#include <string>

namespace capelli {

/// Result of an exact identity check. A failed check always carries a witness
/// naming the first offending index, permutation or coefficient.
struct Outcome {
  bool passed = true;
  std::string witness;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return passed; }
};

}  // namespace capelli

#pragma once

#include <stdexcept>
#include <string>

namespace regtk {

// A computation was refused because its estimated cost exceeds the caller's
// budget (subset enumeration, hom evaluation, tuple search, ...).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A fixed-step decomposition made no progress for too many consecutive steps.
struct StallError : std::runtime_error {
  explicit StallError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regtk

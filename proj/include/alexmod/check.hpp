#pragma once

#include <string>

namespace alexmod {

enum class Status { Pass, Violation, NotApplicable };

std::string to_string(Status s); // "pass", "violation", "na"

/// One line of a report: what was expected, what was seen.
struct Check {
  std::string name;
  Status status = Status::NotApplicable;
  std::string expected;
  std::string observed;
};

} // namespace alexmod

#include "alexmod/check.hpp"

namespace alexmod {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Violation: return "violation";
    default: return "na";
  }
}

} // namespace alexmod

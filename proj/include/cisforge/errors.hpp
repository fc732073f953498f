#ifndef CISFORGE_ERRORS_HPP
#define CISFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cisforge {

// Thrown when an exhaustive operation would exceed its configured work cap
// (distance sweeps, oracle scans, exhaustive searches). Callers are expected
// to retry with a smaller instance or switch to a randomized mode.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cisforge

#endif

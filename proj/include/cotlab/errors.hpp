#ifndef COTLAB_ERRORS_HPP
#define COTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cotlab {

// A structural postcondition failed. Enumeration drivers catch this and turn
// it into a counterexample certificate instead of crashing, so injected
// faults surface as verification failures.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cotlab

#endif

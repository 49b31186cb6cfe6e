#ifndef YH_ERRORS_HPP
#define YH_ERRORS_HPP

#include <stdexcept>

namespace yh {

// A computation was refused because its size exceeds a configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yh

#endif  // YH_ERRORS_HPP

#ifndef YH_REPRESENTATION_HPP
#define YH_REPRESENTATION_HPP

#include <cstddef>
#include <vector>

#include "yh/linalg.hpp"

namespace yh {

/// A finite-dimensional module: action[i] is the matrix of the i-th basis
/// monomial, in the order of the algebra's enumerate_basis().
struct Representation {
  std::size_t dimension = 0;
  std::vector<Matrix> action;
};

}  // namespace yh

#endif  // YH_REPRESENTATION_HPP

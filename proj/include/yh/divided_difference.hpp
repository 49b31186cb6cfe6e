#ifndef YH_DIVIDED_DIFFERENCE_HPP
#define YH_DIVIDED_DIFFERENCE_HPP

#include <utility>
#include <vector>

namespace yh {

// Terms of (x^g - x^{s_i g}) / (x_{i+1} - x_i) for the exponent vector g,
// as (exponent vector, integer coefficient) pairs.  This is the correction
// produced when a crossing at strands i, i+1 passes over x^g:
//   s_i x^g = x^{s_i g} s_i + divided_difference(g, i).
inline std::vector<std::pair<std::vector<int>, int>> divided_difference(const std::vector<int>& g, int i) {
  std::vector<std::pair<std::vector<int>, int>> out;
  const int a = g[i];
  const int b = g[i + 1];
  if (a == b) return out;
  const int lo = a < b ? a : b;
  const int hi = a < b ? b : a;
  const int sign = b > a ? 1 : -1;
  for (int k = 0; k < hi - lo; ++k) {
    std::vector<int> e = g;
    e[i] = lo + k;
    e[i + 1] = hi - 1 - k;
    out.emplace_back(std::move(e), sign);
  }
  return out;
}

}  // namespace yh

#endif  // YH_DIVIDED_DIFFERENCE_HPP

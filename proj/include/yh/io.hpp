#ifndef YH_IO_HPP
#define YH_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "yh/hecke.hpp"
#include "yh/isomorphism.hpp"
#include "yh/linalg.hpp"
#include "yh/yokonuma.hpp"

namespace yh {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars are {"r": r, "coeffs": [["num", "den"], ...]} (coefficients of 1, z,
// z^2, ...) with decimal-string integers.  On input a coefficient may also be
// a "p/q" string, and a whole scalar may be a bare rational.
json to_json(const CycScalar& c);
CycScalar scalar_from_json(const json& j, int order);

json to_json(const YParams& p);
YParams params_from_json(const json& j);

json to_json(const Permutation& w);  // 1-based one-line notation
Permutation permutation_from_json(const json& j, int n);
json to_json(const Composition& mu);

// {"basis": "E", "terms": [{"chi": [...], "x": [...], "w": [...], "coeff": ...}]}
json to_json(const YElement& e);
// {"basis": "t", "terms": [{"t": [...], "x": [...], "w": [...], "coeff": ...}]}
json to_json(const TElement& e);
json to_json(const HElement& e);
// Accepts either presentation; t-presentations are converted with y.from_t_basis.
YElement element_from_json(const YAlgebra& y, const json& j);
HElement helement_from_json(const HAlgebra& h, const json& j);

// {"mu": [...], "index": [...], "entries": [{"row_chi", "col_chi", "value"}]}
json to_json(const MatrixOverH& m);
MatrixOverH matrix_over_h_from_json(const HAlgebra& h, const json& j);
// {"blocks": [{"mu": [...], "index": [...], "entries": [...]}]}
json to_json(const FullImage& image);
FullImage full_image_from_json(const Isomorphism& iso, const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, int order);

}  // namespace yh

#endif  // YH_IO_HPP

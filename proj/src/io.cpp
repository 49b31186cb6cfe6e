#include "yh/io.hpp"

#include <exception>

namespace yh {
namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::vector<int> int_list(const json& j, std::size_t length, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  if (j.size() != length) {
    throw InputError(std::string(what) + " has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(length));
  }
  std::vector<int> out;
  for (const auto& e : j) out.push_back(require_int(e));
  return out;
}

std::vector<int> exponents(const json& j, int n) {
  auto x = int_list(j, n, "x");
  for (int e : x) {
    if (e < 0) throw InputError("negative exponent");
  }
  return x;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
      auto part = [](const json& e) {
        if (e.is_number_integer()) return std::to_string(e.get<long>());
        if (!e.is_string()) throw InputError("rational component must be a decimal string");
        return e.get<std::string>();
      };
      const std::string num = part(j[0]), den = part(j[1]);
      if (den.find('/') != std::string::npos || num.find('/') != std::string::npos) {
        throw InputError("rational components must be integers");
      }
      return parse_rational(num + "/" + den);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational (\"p/q\" or [\"num\", \"den\"]), got " + j.dump());
}

json rational_pair(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return json::array({c.get_num().get_str(), c.get_den().get_str()});
}

const json& terms_of(const json& j) {
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  return terms;
}

json monomial_json(const char* first_key, const std::vector<int>& first, const std::vector<int>& x,
                   const Permutation& w, const CycScalar& c) {
  json t = json::object();
  t[first_key] = first;
  t["x"] = x;
  t["w"] = to_json(w);
  t["coeff"] = to_json(c);
  return t;
}

json hterms(const HElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    json t = json::object();
    t["x"] = m.x;
    t["w"] = to_json(m.w);
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

Character character_from_json(const json& j, int n, int r) {
  Character chi{int_list(j, n, "chi")};
  for (int a : chi.values) {
    if (a < 1 || a > r) throw InputError("character value " + std::to_string(a) + " outside 1.." + std::to_string(r));
  }
  return chi;
}

}  // namespace

json to_json(const CycScalar& c) {
  json coeffs = json::array();
  for (const Rational& q : c.coefficients()) coeffs.push_back(rational_pair(q));
  return json{{"r", c.order()}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const json& j, int order) {
  if (!j.is_object()) return CycScalar(order, rational_from_json(j));
  const int r = require_int(require(j, "r"));
  if (r != order) {
    throw InputError("scalar lives in Q(zeta_" + std::to_string(r) + "), expected Q(zeta_" + std::to_string(order) +
                     ")");
  }
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw InputError("'coeffs' must be an array");
  std::vector<Rational> values;
  for (const auto& q : coeffs) values.push_back(rational_from_json(q));
  return CycScalar(order, std::move(values));
}

json to_json(const YParams& p) {
  json v = json::array();
  for (const Rational& q : p.v) v.push_back(to_string(q));
  json out = json::object();
  out["r"] = p.r;
  out["n"] = p.n;
  out["variant"] = p.is_cyclotomic() ? "cyclotomic" : "affine";
  if (p.is_cyclotomic()) {
    out["d"] = p.d();
    out["v"] = v;
  }
  return out;
}

YParams params_from_json(const json& j) {
  const int r = require_int(require(j, "r"));
  const int n = require_int(require(j, "n"));
  if (r < 1 || n < 1) throw InputError("r and n must be positive");
  const std::string variant = j.contains("variant") ? j.at("variant").get<std::string>() : "cyclotomic";
  if (variant == "affine") return YParams::affine(r, n);
  if (variant != "cyclotomic") throw InputError("unknown variant '" + variant + "'");
  const json& vj = require(j, "v");
  if (!vj.is_array() || vj.empty()) throw InputError("'v' must be a non-empty array");
  std::vector<Rational> v;
  for (const auto& q : vj) v.push_back(rational_from_json(q));
  if (j.contains("d") && require_int(j.at("d")) != static_cast<int>(v.size())) {
    throw InputError("'d' does not match the length of 'v'");
  }
  return YParams::cyclotomic(r, n, std::move(v));
}

json to_json(const Permutation& w) { return w.one_line(); }

Permutation permutation_from_json(const json& j, int n) {
  try {
    return Permutation::from_one_line(int_list(j, n, "w"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json to_json(const Composition& mu) { return mu.parts; }

json to_json(const YElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back(monomial_json("chi", m.chi.values, m.x, m.w, c));
  return json{{"basis", "E"}, {"terms", terms}};
}

json to_json(const TElement& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back(monomial_json("t", m.t, m.x, m.w, c));
  return json{{"basis", "t"}, {"terms", terms}};
}

json to_json(const HElement& e) { return json{{"terms", hterms(e)}}; }

YElement element_from_json(const YAlgebra& y, const json& j) {
  const std::string basis = j.contains("basis") ? j.at("basis").get<std::string>() : "E";
  const int n = y.n();
  if (basis == "E") {
    YElement out;
    for (const auto& t : terms_of(j)) {
      YMonomial m{character_from_json(require(t, "chi"), n, y.r()), exponents(require(t, "x"), n),
                  permutation_from_json(require(t, "w"), n)};
      out += y.monomial(m, scalar_from_json(require(t, "coeff"), y.r()));
    }
    return out;
  }
  if (basis == "t") {
    TElement raw;
    for (const auto& t : terms_of(j)) {
      auto texp = int_list(require(t, "t"), n, "t");
      for (int& e : texp) {
        if (e < 0) throw InputError("negative t exponent");
        e %= y.r();
      }
      raw.add(TMonomial{texp, exponents(require(t, "x"), n), permutation_from_json(require(t, "w"), n)},
              scalar_from_json(require(t, "coeff"), y.r()));
    }
    return y.normal_form(y.from_t_basis(raw));
  }
  throw InputError("unknown basis '" + basis + "' (expected \"E\" or \"t\")");
}

HElement helement_from_json(const HAlgebra& h, const json& j) {
  HElement out;
  for (const auto& t : terms_of(j)) {
    HMonomial m{exponents(require(t, "x"), h.n()), permutation_from_json(require(t, "w"), h.n())};
    if (!in_young_subgroup(m.w, h.blocks())) throw InputError("permutation " + to_string(m.w) + " crosses blocks");
    out += h.monomial(m, scalar_from_json(require(t, "coeff"), h.order()));
  }
  return out;
}

json to_json(const MatrixOverH& m) {
  json index = json::array();
  for (const auto& chi : m.index()) index.push_back(chi.values);
  json entries = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.at(i, k).is_zero()) continue;
      entries.push_back(json{{"row_chi", m.index()[i].values},
                             {"col_chi", m.index()[k].values},
                             {"value", json{{"terms", hterms(m.at(i, k))}}}});
    }
  }
  return json{{"mu", to_json(m.mu())}, {"index", index}, {"entries", entries}};
}

MatrixOverH matrix_over_h_from_json(const HAlgebra& h, const json& j) {
  MatrixOverH out(h.blocks());
  const json& entries = require(j, "entries");
  if (!entries.is_array()) throw InputError("'entries' must be an array");
  const int r = static_cast<int>(h.blocks().parts.size());
  for (const auto& e : entries) {
    const Character row = character_from_json(require(e, "row_chi"), h.n(), r);
    const Character col = character_from_json(require(e, "col_chi"), h.n(), r);
    try {
      out.at(row, col) += helement_from_json(h, require(e, "value"));
    } catch (const std::out_of_range&) {
      throw InputError("matrix index " + to_string(row) + "," + to_string(col) + " outside block " +
                       to_string(h.blocks()));
    }
  }
  return out;
}

json to_json(const FullImage& image) {
  json blocks = json::array();
  for (const auto& [mu, m] : image) blocks.push_back(to_json(m));
  return json{{"blocks", blocks}};
}

FullImage full_image_from_json(const Isomorphism& iso, const json& j) {
  FullImage out;
  for (const auto& mu : iso.compositions()) out.emplace(mu, MatrixOverH(mu));
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array()) throw InputError("'blocks' must be an array");
  for (const auto& b : blocks) {
    Composition mu{int_list(require(b, "mu"), iso.yokonuma().r(), "mu")};
    auto it = out.find(mu);
    if (it == out.end()) throw InputError("'" + to_string(mu) + "' is not an r-composition of n");
    it->second += matrix_over_h_from_json(iso.hecke(mu), b);
  }
  return out;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int order) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix out(rows, cols, order);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = scalar_from_json(j.at(i).at(k), order);
  }
  return out;
}

}  // namespace yh

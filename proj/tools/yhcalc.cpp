// yhcalc: batch front end for the Yokonuma-Hecke library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 bound exceeded.
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yh/io.hpp"
#include "yh/structure.hpp"

using namespace yh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;
constexpr std::size_t kExhaustiveBelow = 64;
constexpr std::size_t kMaxWitnesses = 10;

struct JobConfig {
  int r = 0;
  int n = 0;
  std::optional<int> d;
  std::vector<std::string> v;
  bool affine = false;
  std::string input = "-";
  std::string left;
  std::string right;
  std::string output = "-";
  std::string form = "rho-hat-n";
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> degree;
  bool round_trip = false;
  bool timing = false;
  std::size_t max_dim = 512;
  int r_max = 4;
  int n_max = 5;
  int d_max = 3;
};

YParams make_params(const JobConfig& cfg) {
  if (cfg.r < 1 || cfg.n < 1) throw InputError("--r and --n must be positive");
  if (cfg.affine) {
    if (!cfg.v.empty() || cfg.d) throw InputError("--affine takes no --d/--v");
    return YParams::affine(cfg.r, cfg.n);
  }
  if (cfg.v.empty()) throw InputError("the cyclotomic variant needs at least one --v");
  if (cfg.d && *cfg.d != static_cast<int>(cfg.v.size())) {
    throw InputError("--d " + std::to_string(*cfg.d) + " does not match the " + std::to_string(cfg.v.size()) +
                     " values given with --v");
  }
  std::vector<Rational> v;
  for (const auto& s : cfg.v) {
    try {
      v.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return YParams::cyclotomic(cfg.r, cfg.n, std::move(v));
}

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  if (doc.contains("format_version") && doc.at("format_version") != kFormatVersion) {
    throw InputError("unsupported format_version " + doc.at("format_version").dump());
  }
  return doc;
}

void check_params(const json& doc, const YParams& params) {
  if (doc.contains("params") && params_from_json(doc.at("params")) != params) {
    throw InputError("parameter mismatch: document was written for " + doc.at("params").dump() +
                     ", command line gives " + to_json(params).dump());
  }
}

const json& payload(const json& doc, const char* key) { return doc.contains(key) ? doc.at(key) : doc; }

YElement read_element(const YAlgebra& y, const std::string& path) {
  const json doc = read_document(path);
  check_params(doc, y.params());
  return element_from_json(y, payload(doc, "element"));
}

json report(const char* check, const YParams& params) {
  json out = json::object();
  out["format_version"] = kFormatVersion;
  out["library_version"] = kLibraryVersion;
  out["check"] = check;
  out["params"] = to_json(params);
  return out;
}

void finish(json& out, bool ok, const json& witnesses) {
  out["status"] = ok ? "pass" : "fail";
  out["witnesses"] = witnesses;
}

std::size_t checked_dimension(const YAlgebra& y, const JobConfig& cfg) {
  const std::size_t dim = y.dimension();
  if (dim > cfg.max_dim) {
    throw BoundExceeded("dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(cfg.max_dim));
  }
  return dim;
}

std::vector<YMonomial> basis_for(const YAlgebra& y, const JobConfig& cfg) {
  if (y.is_cyclotomic()) {
    checked_dimension(y, cfg);
    return y.enumerate_basis();
  }
  if (!cfg.degree) throw InputError("the affine variant needs --degree to bound the basis");
  auto basis = y.enumerate_basis(*cfg.degree);
  if (basis.size() > cfg.max_dim) {
    throw BoundExceeded("truncated basis of size " + std::to_string(basis.size()) + " exceeds --max-dim " +
                        std::to_string(cfg.max_dim));
  }
  return basis;
}

json monomial_witness(const YMonomial& m) {
  return json{{"chi", m.chi.values}, {"x", m.x}, {"w", to_json(m.w)}};
}

int cmd_nf(const JobConfig& cfg, json& out) {
  const YAlgebra y(make_params(cfg));
  out = report("nf", y.params());
  out["element"] = to_json(read_element(y, cfg.input));
  finish(out, true, json::array());
  return kExitOk;
}

int cmd_mult(const JobConfig& cfg, json& out) {
  if (cfg.left.empty() || cfg.right.empty()) throw InputError("mult needs --left and --right");
  const YAlgebra y(make_params(cfg));
  const YElement a = read_element(y, cfg.left), b = read_element(y, cfg.right);
  out = report("mult", y.params());
  out["element"] = to_json(y.multiply(a, b));
  finish(out, true, json::array());
  return kExitOk;
}

int cmd_phi(const JobConfig& cfg, json& out) {
  const Isomorphism iso{YAlgebra(make_params(cfg))};
  const YElement e = read_element(iso.yokonuma(), cfg.input);
  const FullImage image = iso.phi_full(e);
  out = report("phi", iso.yokonuma().params());
  out["image"] = to_json(image);
  bool ok = true;
  if (cfg.round_trip) {
    ok = iso.psi_full(image) == e;
    out["round_trip"] = ok;
  }
  finish(out, ok, ok ? json::array() : json::array({to_json(e)}));
  return ok ? kExitOk : kExitFailed;
}

int cmd_psi(const JobConfig& cfg, json& out) {
  const Isomorphism iso{YAlgebra(make_params(cfg))};
  const json doc = read_document(cfg.input);
  check_params(doc, iso.yokonuma().params());
  const FullImage image = full_image_from_json(iso, payload(doc, "image"));
  const YElement e = iso.psi_full(image);
  out = report("psi", iso.yokonuma().params());
  out["element"] = to_json(e);
  bool ok = true;
  if (cfg.round_trip) {
    ok = iso.phi_full(e) == image;
    out["round_trip"] = ok;
  }
  finish(out, ok, ok ? json::array() : json::array({to_json(image)}));
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify_iso(const JobConfig& cfg, json& out) {
  const Isomorphism iso{YAlgebra(make_params(cfg))};
  const YAlgebra& y = iso.yokonuma();
  const auto basis = basis_for(y, cfg);
  const bool exhaustive = cfg.exhaustive || (!cfg.samples && basis.size() < kExhaustiveBelow);
  if (!exhaustive && !cfg.seed) {
    throw InputError("sampled verification (basis of size " + std::to_string(basis.size()) + ") requires --seed");
  }
  json witnesses = json::array();
  std::size_t failures = 0;
  auto record = [&](const char* kind, json detail) {
    ++failures;
    if (witnesses.size() < kMaxWitnesses) {
      detail["kind"] = kind;
      witnesses.push_back(std::move(detail));
    }
  };
  auto check_pair = [&](const YMonomial& a, const YMonomial& b) {
    const YElement ea = y.monomial(a), eb = y.monomial(b);
    if (iso.phi_full(y.multiply(ea, eb)) != iso.multiply(iso.phi_full(ea), iso.phi_full(eb))) {
      record("homomorphism", json{{"left", monomial_witness(a)}, {"right", monomial_witness(b)}});
    }
  };
  std::size_t pairs = 0;
  if (exhaustive) {
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        // Products in the truncated affine basis may leave it; that is fine.
        check_pair(a, b);
        ++pairs;
      }
    }
  } else {
    std::mt19937_64 rng(*cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    const std::size_t samples = cfg.samples.value_or(10000);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      check_pair(basis[i], basis[j]);
      ++pairs;
    }
  }
  std::size_t round_trips = 0;
  for (const auto& b : basis) {
    const YElement e = y.monomial(b);
    if (iso.psi_full(iso.phi_full(e)) != e) record("psi_after_phi", json{{"monomial", monomial_witness(b)}});
    ++round_trips;
  }
  if (y.is_cyclotomic()) {
    for (const auto& mu : iso.compositions()) {
      const HAlgebra& h = iso.hecke(mu);
      for (const auto& row : characters_of(mu)) {
        for (const auto& col : characters_of(mu)) {
          for (const auto& m : h.enumerate_basis()) {
            const MatrixOverH unit = h.matrix_unit(row, col, h.monomial(m));
            if (iso.phi_mu(mu, iso.psi_mu(unit)) != unit) {
              record("phi_after_psi", json{{"mu", to_json(mu)}, {"row", row.values}, {"col", col.values},
                                           {"x", m.x}, {"w", to_json(m.w)}});
            }
            ++round_trips;
          }
        }
      }
    }
  }
  out = report("verify-iso", y.params());
  out["mode"] = exhaustive ? "exhaustive" : "sampled";
  if (!exhaustive) out["seed"] = *cfg.seed;
  if (!y.is_cyclotomic()) out["degree_bound"] = *cfg.degree;
  out["basis_size"] = basis.size();
  out["pairs_checked"] = pairs;
  out["round_trips_checked"] = round_trips;
  out["failures"] = failures;
  finish(out, failures == 0, witnesses);
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_gram(const JobConfig& cfg, json& out) {
  const YParams params = make_params(cfg);
  if (!params.is_cyclotomic()) throw InputError("gram needs the cyclotomic variant");
  const Isomorphism iso{YAlgebra(params)};
  const YAlgebra& y = iso.yokonuma();
  const AlgebraTable table = structure_table(y, cfg.max_dim);
  std::vector<CycScalar> values;
  if (cfg.form == "tau") {
    values = tau_hat_values(y);
  } else if (cfg.form == "rho-hat-n") {
    values = rho_hat_n_values(y);
  } else if (cfg.form == "rho-n") {
    values = rho_n_values(iso);
  } else {
    throw InputError("unknown form '" + cfg.form + "' (expected tau, rho-hat-n or rho-n)");
  }
  const GramData g = gram_matrix(table, values, cfg.form);
  const CycScalar det = determinant(g.gram);
  out = report("gram", params);
  out["form"] = cfg.form;
  json basis = json::array();
  for (const auto& b : y.enumerate_basis()) basis.push_back(monomial_witness(b));
  out["basis"] = basis;
  out["gram"] = to_json(g.gram);
  out["determinant"] = to_json(det);
  out["nondegenerate"] = !det.is_zero();
  finish(out, true, json::array());
  return kExitOk;
}

int cmd_table(const JobConfig& cfg, json& out) {
  const YAlgebra y(make_params(cfg));
  const auto basis = basis_for(y, cfg);
  json index = json::array();
  for (const auto& b : basis) index.push_back(monomial_witness(b));
  json products = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const YElement a = y.monomial(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      products.push_back(json::array({i, j, to_json(y.multiply(a, y.monomial(basis[j])))}));
    }
  }
  out = report("table", y.params());
  if (!y.is_cyclotomic()) out["degree_bound"] = *cfg.degree;
  out["basis"] = index;
  out["products"] = products;
  finish(out, true, json::array());
  return kExitOk;
}

int cmd_semisimple(const JobConfig& cfg, json& out) {
  const YParams params = make_params(cfg);
  if (!params.is_cyclotomic()) throw InputError("semisimple needs the cyclotomic variant");
  const YAlgebra y(params);
  const Rational product = semisimplicity_product(params.n, params.v);
  const bool criterion = product != 0;
  const bool oracle = radical_oracle(structure_table(y, cfg.max_dim), cfg.max_dim);
  out = report("semisimple", params);
  out["criterion_product"] = to_string(product);
  out["criterion"] = criterion;
  out["oracle"] = oracle;
  out["agree"] = criterion == oracle;
  finish(out, criterion == oracle, json::array());
  return criterion == oracle ? kExitOk : kExitFailed;
}

json labels_json(const std::vector<MultiPartition>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.components);
  return out;
}

int cmd_schur(const JobConfig& cfg, json& out) {
  const YParams params = make_params(cfg);
  if (!params.is_cyclotomic()) throw InputError("schur needs the cyclotomic variant");
  const Isomorphism iso{YAlgebra(params)};
  const YAlgebra& y = iso.yokonuma();
  const AlgebraTable table = structure_table(y, cfg.max_dim);
  const Matrix dual = dual_basis(gram_matrix(table, rho_n_values(iso), "rho_n"));
  json rows = json::array();
  json witnesses = json::array();
  std::size_t supported = 0, matched = 0;
  for (const auto& labels : enumerate_r_tuples_of_d_partitions(y.r(), y.d(), y.n())) {
    json row = json::object();
    row["labels"] = labels_json(labels);
    try {
      const auto rep = schur_product_check(iso, labels, table, dual);
      json comps = json::array();
      for (const auto& c : rep.component_schur) comps.push_back(to_json(c));
      row["mu"] = to_json(rep.mu);
      row["component_schur"] = comps;
      row["product"] = to_json(rep.product);
      row["block_schur"] = to_json(rep.block_schur);
      row["transported_schur"] = to_json(rep.transported_schur);
      row["transported_dimension"] = rep.transported_dimension;
      row["matches"] = rep.matches;
      ++supported;
      if (rep.matches) {
        ++matched;
      } else if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back(row);
      }
    } catch (const std::invalid_argument& e) {
      row["status"] = "unsupported";
      row["reason"] = e.what();
    } catch (const std::domain_error& e) {
      row["status"] = "unsupported";
      row["reason"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  out = report("schur", params);
  out["rows"] = rows;
  out["supported"] = supported;
  out["matched"] = matched;
  finish(out, supported == matched, witnesses);
  return supported == matched ? kExitOk : kExitFailed;
}

int cmd_dims(const JobConfig& cfg, json& out) {
  if (cfg.r_max < 1 || cfg.n_max < 1 || cfg.d_max < 1) throw InputError("ranges must be positive");
  json rows = json::array();
  json witnesses = json::array();
  for (int r = 1; r <= cfg.r_max; ++r) {
    for (int n = 1; n <= cfg.n_max; ++n) {
      for (int d = 1; d <= cfg.d_max; ++d) {
        const auto id = dimension_identity_check(r, n, d);
        json row{{"r", r}, {"n", n}, {"d", d}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds()}};
        if (!id.holds()) witnesses.push_back(row);
        rows.push_back(std::move(row));
      }
    }
  }
  out = json::object();
  out["format_version"] = kFormatVersion;
  out["library_version"] = kLibraryVersion;
  out["check"] = "dims";
  out["params"] = json{{"r_max", cfg.r_max}, {"n_max", cfg.n_max}, {"d_max", cfg.d_max}};
  out["rows"] = rows;
  finish(out, witnesses.empty(), witnesses);
  return witnesses.empty() ? kExitOk : kExitFailed;
}

void add_algebra_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--r", cfg.r, "order of the torus characters")->required();
  sub->add_option("--n", cfg.n, "number of strands")->required();
  sub->add_option("--d", cfg.d, "level (must equal the number of --v values)");
  sub->add_option("--v", cfg.v, "cyclotomic parameter as \"p/q\"; repeat d times");
  sub->add_flag("--affine", cfg.affine, "use the affine algebra (no cyclotomic quotient)");
  sub->add_option("--max-dim", cfg.max_dim, "refuse algebras above this dimension")->capture_default_str();
}

void emit(const json& out, const std::string& path) {
  const std::string text = out.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in degenerate Yokonuma-Hecke algebras"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::function<int(const JobConfig&, json&)> handler;

  auto add = [&](const char* name, const char* help, auto fn, bool algebra = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (algebra) add_algebra_options(sub, cfg);
    sub->add_option("-o,--output", cfg.output, "output file ('-' for stdout)");
    sub->add_flag("--timing", cfg.timing, "add wall-clock timing to the report");
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  add("nf", "normal form of an element (E- or t-presentation)", cmd_nf)
      ->add_option("-i,--input", cfg.input, "element JSON ('-' for stdin)");
  CLI::App* mult = add("mult", "product of two elements", cmd_mult);
  mult->add_option("--left", cfg.left, "left factor JSON")->required();
  mult->add_option("--right", cfg.right, "right factor JSON")->required();
  CLI::App* phi = add("phi", "apply the isomorphism", cmd_phi);
  phi->add_option("-i,--input", cfg.input, "element JSON ('-' for stdin)");
  phi->add_flag("--round-trip", cfg.round_trip, "apply the inverse and compare");
  CLI::App* psi = add("psi", "apply the inverse isomorphism", cmd_psi);
  psi->add_option("-i,--input", cfg.input, "block-matrix JSON ('-' for stdin)");
  psi->add_flag("--round-trip", cfg.round_trip, "re-apply the isomorphism and compare");
  CLI::App* verify = add("verify-iso", "check multiplicativity and bijectivity of the isomorphism", cmd_verify_iso);
  verify->add_flag("--exhaustive", cfg.exhaustive, "check every ordered pair of basis monomials");
  verify->add_option("--samples", cfg.samples, "number of random pairs in sampled mode (default 10000)");
  verify->add_option("--seed", cfg.seed, "random seed (mandatory in sampled mode)");
  verify->add_option("--degree", cfg.degree, "x-degree bound for the affine variant");
  add("gram", "Gram matrix of a form and its determinant", cmd_gram)
      ->add_option("--form", cfg.form, "tau | rho-hat-n | rho-n")
      ->capture_default_str();
  add("table", "multiplication table over the enumerated basis", cmd_table)
      ->add_option("--degree", cfg.degree, "x-degree bound for the affine variant");
  add("semisimple", "semisimplicity criterion against the radical oracle", cmd_semisimple);
  add("schur", "Schur elements of the built-in simple modules", cmd_schur);
  CLI::App* dims = add("dims", "dimension identity over a parameter range", cmd_dims, false);
  dims->add_option("--r-max", cfg.r_max, "largest r checked")->capture_default_str();
  dims->add_option("--n-max", cfg.n_max, "largest n checked")->capture_default_str();
  dims->add_option("--d-max", cfg.d_max, "largest level checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    json out;
    const int code = handler(cfg, out);
    if (cfg.timing) {
      out["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    emit(out, cfg.output);
    return code;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

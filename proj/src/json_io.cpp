#include "beztate/json_io.hpp"

#include <fstream>
#include <sstream>

namespace beztate {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad JSON field \"") + key + "\": " + e.what());
  }
}

Scalar scalar_from_json(const Json& j, const Field& field) {
  if (!j.is_string()) throw InvalidInput("numbers must be decimal strings, got " + j.dump());
  return field.parse_scalar(j.get<std::string>());
}

Monomial exponents_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n + 1))
    throw InvalidInput("exponent vector must have " + std::to_string(n + 1) + " entries: " + j.dump());
  Monomial m;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0) throw InvalidInput("exponents must be nonnegative integers: " + j.dump());
    m.exponents.push_back(e.get<int>());
  }
  return m;
}

const char* to_string(BezoutBlockSign s) {
  switch (s) {
    case BezoutBlockSign::alternating: return "alternating";
    case BezoutBlockSign::flipped: return "flipped";
    case BezoutBlockSign::none: return "none";
  }
  return "alternating";
}

BezoutBlockSign block_sign_from_string(const std::string& s) {
  if (s == "alternating") return BezoutBlockSign::alternating;
  if (s == "flipped") return BezoutBlockSign::flipped;
  if (s == "none") return BezoutBlockSign::none;
  throw InvalidInput("unknown block sign \"" + s + "\"");
}

Json check_to_json(const CheckResult& c, bool with_timing) {
  Json j = {{"name", c.name}, {"location", c.location}, {"status", to_string(c.status)}, {"detail", c.detail}};
  if (with_timing) j["duration_ms"] = c.duration_ms;
  return j;
}

Json tuple_to_json(const std::vector<Polynomial>& tuple) { return forms_to_json(tuple); }

}  // namespace

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back(Json::array({r, c, m.field().format(v)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const Json& j, const Field& field) {
  const auto rows = get_as<std::size_t>(j, "rows");
  const auto cols = get_as<std::size_t>(j, "cols");
  ExactMatrix m(field, rows, cols);
  for (const auto& e : require(j, "entries")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InvalidInput("matrix entry must be [row, col, \"value\"]: " + e.dump());
    const auto r = e[0].get<std::size_t>();
    const auto c = e[1].get<std::size_t>();
    if (r >= rows || c >= cols) throw InvalidInput("matrix entry out of range: " + e.dump());
    m.set(r, c, scalar_from_json(e[2], field));
  }
  return m;
}

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exp", m.exponents}, {"coeff", f.field().format(c)}});
  return {{"n", f.n()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, const Field& field) {
  const int n = get_as<int>(j, "n");
  if (n < 0) throw InvalidInput("polynomial ring needs n >= 0");
  Polynomial f(field, n);
  for (const auto& t : require(j, "terms")) f.add_term(exponents_from_json(require(t, "exp"), n), scalar_from_json(require(t, "coeff"), field));
  return f;
}

Json bipolynomial_to_json(const BiPolynomial& f) {
  Json terms = Json::array();
  f.for_each_term([&](const Monomial& x, const Monomial& y, const Scalar& c) {
    terms.push_back({{"xexp", x.exponents}, {"yexp", y.exponents}, {"coeff", f.field().format(c)}});
  });
  return {{"n", f.n()}, {"terms", terms}};
}

BiPolynomial bipolynomial_from_json(const Json& j, const Field& field) {
  const int n = get_as<int>(j, "n");
  if (n < 0) throw InvalidInput("polynomial ring needs n >= 0");
  BiPolynomial f(field, n);
  for (const auto& t : require(j, "terms"))
    f.add_term(exponents_from_json(require(t, "xexp"), n), exponents_from_json(require(t, "yexp"), n),
               scalar_from_json(require(t, "coeff"), field));
  return f;
}

Json wedge_to_json(const WedgeIndex& w) { return w.indices; }

WedgeIndex wedge_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("wedge index must be an integer array");
  WedgeIndex w;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput("wedge index must be an integer array");
    w.indices.push_back(e.get<int>());
  }
  for (std::size_t i = 1; i < w.indices.size(); ++i)
    if (w.indices[i - 1] >= w.indices[i]) throw InvalidInput("wedge index must be strictly increasing: " + j.dump());
  return w;
}

std::vector<Polynomial> forms_from_json(const Json& j, const Field& field) {
  const Json& list = j.is_object() ? require(j, "forms") : j;
  if (!list.is_array()) throw InvalidInput("forms must be a JSON array of polynomials");
  std::vector<Polynomial> forms;
  for (const auto& f : list) forms.push_back(polynomial_from_json(f, field));
  return forms;
}

Json forms_to_json(const std::vector<Polynomial>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(polynomial_to_json(f));
  return out;
}

Json bezout_data_to_json(const BezoutData& b) {
  Json coefficients = Json::array();
  for (const auto& [y, c] : bezout_coefficients(b))
    coefficients.push_back({{"yexp", y.exponents}, {"poly", polynomial_to_json(c)}});
  return {{"n", b.n},
          {"d", b.d},
          {"rho", b.rho},
          {"forms", forms_to_json(b.forms)},
          {"delta", bipolynomial_to_json(b.delta)},
          {"coefficients", coefficients}};
}

Json report_to_json(const Report& r, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) checks.push_back(check_to_json(c, with_timing));
  return {{"title", r.title()}, {"status", to_string(r.status())}, {"checks", checks}, {"notes", r.notes()}};
}

Json window_to_json(const TateWindow& w) {
  const TateConfig& cfg = w.config;
  Json config = {{"field", cfg.field.spec()},
                 {"n", cfg.n},
                 {"d", cfg.d},
                 {"ell", cfg.ell},
                 {"p_min", cfg.p_min},
                 {"p_max", cfg.p_max},
                 {"t_min", w.t_min},
                 {"t_max", w.t_max},
                 {"variant",
                  {{"block_sign", to_string(cfg.variant.block_sign)},
                   {"split", cfg.variant.split == SplitConvention::complement_first ? "complement_first" : "forms_first"},
                   {"swap_bezoutian_variables", cfg.variant.swap_bezoutian_variables}}}};
  if (cfg.subspace) config["subspace"] = forms_to_json(*cfg.subspace);
  Json summands = Json::array();
  for (const auto& s : w.summands)
    summands.push_back({{"p", s.p},
                        {"a", s.a},
                        {"top_dim", s.top_dim},
                        {"bottom_dim", s.bottom_dim},
                        {"top_generator_degree", s.top_generator_degree},
                        {"bottom_generator_degree", s.bottom_generator_degree}});
  Json slices = Json::array();
  for (const auto& [key, m] : w.slices) slices.push_back({{"p", key.first}, {"t", key.second}, {"matrix", matrix_to_json(m)}});
  return {{"config", config}, {"summands", summands}, {"slices", slices}};
}

TateWindow window_from_json(const Json& j) {
  const Json& config = require(j, "config");
  TateWindow w;
  TateConfig& cfg = w.config;
  cfg.field = Field::parse(get_as<std::string>(config, "field"));
  cfg.n = get_as<int>(config, "n");
  cfg.d = get_as<int>(config, "d");
  cfg.ell = get_as<int>(config, "ell");
  cfg.p_min = get_as<int>(config, "p_min");
  cfg.p_max = get_as<int>(config, "p_max");
  w.t_min = get_as<int>(config, "t_min");
  w.t_max = get_as<int>(config, "t_max");
  if (cfg.n < 1 || cfg.d < 1 || cfg.p_min > cfg.p_max || w.t_min > w.t_max)
    throw InvalidInput("window config out of range");
  if (config.contains("subspace")) cfg.subspace = forms_from_json(config.at("subspace"), cfg.field);
  if (config.contains("variant")) {
    const Json& v = config.at("variant");
    cfg.variant.block_sign = block_sign_from_string(get_as<std::string>(v, "block_sign"));
    const auto split_name = get_as<std::string>(v, "split");
    if (split_name == "complement_first") cfg.variant.split = SplitConvention::complement_first;
    else if (split_name == "forms_first") cfg.variant.split = SplitConvention::forms_first;
    else throw InvalidInput("unknown split convention \"" + split_name + "\"");
    cfg.variant.swap_bezoutian_variables = get_as<bool>(v, "swap_bezoutian_variables");
  }
  for (int p = cfg.p_min; p <= cfg.p_max + 1; ++p) w.summands.push_back(summand_dims(cfg, p));
  for (const auto& s : require(j, "slices")) {
    const int p = get_as<int>(s, "p");
    const int t = get_as<int>(s, "t");
    if (p < cfg.p_min || p > cfg.p_max || t < w.t_min || t > w.t_max)
      throw InvalidInput("slice (" + std::to_string(p) + ", " + std::to_string(t) + ") outside the window");
    ExactMatrix m = matrix_from_json(require(s, "matrix"), cfg.field);
    const std::size_t rows = slice_space(cfg, p + 1, t).dim();
    const std::size_t cols = slice_space(cfg, p, t).dim();
    if (m.rows() != rows || m.cols() != cols)
      throw InvalidInput("slice (" + std::to_string(p) + ", " + std::to_string(t) + ") should be " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    w.slices.emplace(std::make_pair(p, t), std::move(m));
  }
  return w;
}

Json syzygy_space_to_json(const SyzygySpace& s) {
  Json basis = Json::array();
  for (const auto& t : s.basis) basis.push_back(tuple_to_json(t));
  Json koszul = Json::array();
  for (const auto& t : s.koszul_subspace) koszul.push_back(tuple_to_json(t));
  return {{"degree", s.degree}, {"dim", s.basis.size()}, {"koszul_dim", s.koszul_subspace.size()}, {"basis", basis}, {"koszul_subspace", koszul}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace beztate
